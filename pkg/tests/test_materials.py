import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from numpy.testing import assert_allclose

from vdwsurf import (
    HalfSpaceSystem,
    Material,
    MaterialKind,
    ParameterError,
    SingularityError,
    UnsupportedModelError,
    cavity_mode_frequency,
    local_field_factor,
    preset,
    preset_names,
    resonant_inv_avg_eps,
    surface_mode_frequency,
)

# Frozen by direct hand evaluation of the oscillator's rational form with
# eta=2.71, eps0=6.57, gamma=0.015 and the surface mode pinned at 1.
EPS_AT_SURFACE_MODE = -0.9967922691838083 + 0.10904307309995373j
AVG_EPS_AT_SURFACE_MODE = 0.0016038654080958725 + 0.054521536549976865j
OMEGA_T = 0.7000660470822813


class TestMaterialEval:
    def test_static_limit(self, sapphire):
        assert_allclose(sapphire.eps(0.0), 6.57, rtol=1e-14)

    def test_background_limit(self, sapphire):
        assert_allclose(sapphire.eps(1e9).real, 2.71, rtol=1e-6)

    def test_value_at_surface_mode(self, sapphire):
        assert_allclose(sapphire.eps(1.0), EPS_AT_SURFACE_MODE, rtol=1e-12)

    def test_vacuum_equals_unit_constant(self):
        vac = Material.vacuum()
        unit = Material.constant(1.0, 1.0)
        for w in (0.0, 0.3, 2.0, 1j * 0.7):
            assert vac.eps(w) == unit.eps(w) == 1.0
            assert vac.mu(w) == unit.mu(w) == 1.0

    def test_constant_mu(self):
        assert Material.constant(4.0, mu=2.0).mu(0.5) == 2.0
        assert Material.vacuum().mu(0.5) == 1.0
        assert preset("sapphire-ir").mu(0.5) == 1.0

    def test_imaginary_axis_is_real(self, sapphire):
        for xi in (0.0, 0.2, 1.0, 7.5):
            val = sapphire.eps(1j * xi)
            assert val.imag == 0.0
            assert_allclose(val.real, sapphire.eps_imag(xi), rtol=1e-14)

    def test_invalid_parameters(self):
        with pytest.raises(ParameterError):
            Material.lorentz(eta=2.0, eps0=1.5, omega_t=1.0, gamma=0.1)  # eps0 <= eta
        with pytest.raises(ParameterError):
            Material.lorentz(eta=0.5, eps0=3.0, omega_t=1.0, gamma=0.1)  # eta < 1
        with pytest.raises(ParameterError):
            Material.lorentz(eta=2.0, eps0=3.0, omega_t=-1.0, gamma=0.1)
        with pytest.raises(ParameterError):
            Material.lorentz(eta=2.0, eps0=3.0, omega_t=1.0, gamma=-0.1)
        with pytest.raises(ParameterError):
            Material.constant(float("inf"))

    @given(st.floats(min_value=1e-3, max_value=3.0))
    def test_passivity_on_real_axis(self, omega):
        m = preset("sapphire-ir")
        assert m.eps(omega).imag > 0.0

    def test_lossless_has_real_response(self):
        m = Material.lorentz(eta=2.0, eps0=4.0, omega_t=1.0, gamma=0.0)
        assert m.eps(0.5).imag == 0.0

    @given(st.floats(min_value=0.0, max_value=50.0), st.floats(min_value=1e-6, max_value=5.0))
    def test_imaginary_axis_decreasing(self, xi, dxi):
        m = preset("sapphire-ir")
        hi, lo = m.eps_imag(xi), m.eps_imag(xi + dxi)
        assert m.eta <= lo < hi <= m.eps0


class TestInterfaceQuantities:
    def test_avg_eps_vacuum(self, vacuum_system):
        assert vacuum_system.avg_eps(0.7) == 1.0

    def test_avg_eps_at_surface_mode(self, sapphire_system):
        assert_allclose(sapphire_system.avg_eps(1.0), AVG_EPS_AT_SURFACE_MODE, rtol=1e-12)

    def test_avg_eps_constant(self):
        sys_ = HalfSpaceSystem(upper=Material.vacuum(), lower=Material.constant(-3.0))
        assert sys_.avg_eps(1.0) == -1.0

    def test_local_field_factor_values(self, sapphire):
        assert local_field_factor(1.0) == 1.0
        assert_allclose(local_field_factor(1e12), 1.5, rtol=1e-11)
        # small damping puts the factor near 3 at the surface mode
        assert abs(abs(local_field_factor(sapphire.eps(1.0))) - 3.0) < 0.1

    def test_local_field_factor_pole(self):
        with pytest.raises(SingularityError):
            local_field_factor(-0.5)

    @given(st.floats(min_value=-10, max_value=10), st.floats(min_value=-10, max_value=10))
    def test_local_field_fixed_point_only_at_unity(self, re, im):
        # the only fixed point with nonzero response is eps = 1 (eps = 0 is
        # the degenerate one)
        eps = complex(re, im)
        if abs(2 * eps + 1) < 1e-6:
            return
        fixed = local_field_factor(eps) == eps
        assert fixed == (eps in (1.0, 0.0))

    def test_mode_frequencies(self, sapphire):
        w_s = surface_mode_frequency(sapphire)
        w_c = cavity_mode_frequency(sapphire)
        # sqrt(7.57/3.71) and sqrt(14.14/6.42) times the resonance
        assert_allclose(w_s, 1.4284366513242235 * sapphire.omega_t, rtol=1e-14)
        assert_allclose(w_c, 1.484079584064819 * sapphire.omega_t, rtol=1e-14)
        assert_allclose(w_c / w_s, 1.04, rtol=5e-3)
        assert sapphire.omega_t < w_s < w_c
        ratio = math.sqrt(
            (2 * sapphire.eps0 + 1) * (sapphire.eta + 1)
            / ((2 * sapphire.eta + 1) * (sapphire.eps0 + 1))
        )
        assert_allclose(w_c / w_s, ratio, rtol=1e-15)

    def test_mode_frequency_degenerate_coupling(self):
        m = Material.lorentz(eta=3.0, eps0=3.0 + 1e-12, omega_t=0.8, gamma=0.0)
        assert_allclose(surface_mode_frequency(m), 0.8, rtol=1e-9)
        assert_allclose(cavity_mode_frequency(m), 0.8, rtol=1e-9)

    def test_mode_frequency_wrong_kind(self):
        with pytest.raises(UnsupportedModelError):
            surface_mode_frequency(Material.vacuum())
        with pytest.raises(UnsupportedModelError):
            cavity_mode_frequency(Material.constant(4.0))

    def test_preset_scaled_to_surface_mode(self, sapphire):
        # the preset derives its resonance from the pinned surface mode
        assert_allclose(surface_mode_frequency(sapphire), 1.0, rtol=1e-14)
        assert_allclose(sapphire.omega_t, OMEGA_T, rtol=1e-14)
        assert sapphire.gamma == 0.015

    def test_unknown_preset(self):
        with pytest.raises(ParameterError, match="unknown material preset"):
            preset("sapphirr")
        assert "sapphire-ir" in preset_names()


class TestResonantInverseForm:
    def test_static_limit(self, sapphire):
        assert_allclose(resonant_inv_avg_eps(sapphire, 0.0), 2.0 / (6.57 + 1.0), rtol=1e-14)

    def test_high_frequency_limit(self, sapphire):
        assert_allclose(resonant_inv_avg_eps(sapphire, 1e9).real, 2.0 / (2.71 + 1.0), rtol=1e-6)

    @given(st.floats(min_value=0.0, max_value=3.0))
    def test_identity_with_direct_route(self, omega):
        m = preset("sapphire-ir")
        direct = 1.0 / (0.5 * (1.0 + m.eps(omega)))
        resonant = resonant_inv_avg_eps(m, omega)
        assert abs(resonant - direct) <= 1e-12 * abs(direct)

    def test_identity_bulk_random(self, sapphire):
        rng = np.random.default_rng(42)
        omegas = rng.uniform(0.0, 3.0, size=1000)
        for w in omegas:
            direct = 1.0 / (0.5 * (1.0 + sapphire.eps(w)))
            assert abs(resonant_inv_avg_eps(sapphire, w) - direct) <= 1e-12 * abs(direct)

    def test_wrong_kind(self):
        with pytest.raises(UnsupportedModelError):
            resonant_inv_avg_eps(Material.vacuum(), 1.0)


def test_system_validation():
    with pytest.raises(ParameterError):
        HalfSpaceSystem(upper=Material.vacuum(), lower=Material.vacuum(), omega_max=0.0)


def test_material_kind_exposed(sapphire):
    assert sapphire.kind is MaterialKind.LORENTZ
    assert Material.vacuum().kind is MaterialKind.VACUUM
