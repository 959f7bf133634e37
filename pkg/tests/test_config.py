import json

import pytest

from vdwsurf import ConfigError, MaterialKind
from vdwsurf.config import (
    bundled_config_names,
    load_config,
    parse_config,
    resolve_config_path,
)


def minimal_config(**overrides):
    cfg = {
        "system": {"upper": "vacuum", "lower": "sapphire-ir", "omega_max": 3.0},
        "atom_a": {"omega0": 1.0},
        "atom_b": {"omega0": 0.9, "gamma": 0.001},
        "scan": {"omega_min": 0.7, "omega_max": 1.3, "n_points": 100},
    }
    cfg.update(overrides)
    return cfg


def test_bundled_fig2_parses():
    path = resolve_config_path("fig2")
    cfg = load_config(path)
    assert cfg.system.lower.kind is MaterialKind.LORENTZ
    assert cfg.system.lower.gamma == 0.015
    assert cfg.atom_b.omega0 == 0.9 and cfg.atom_b.gamma == 1e-3
    assert cfg.scan.n_points == 2000
    assert cfg.output.format == "csv"
    assert "fig2" in bundled_config_names()


def test_resolve_prefers_existing_file(tmp_path):
    p = tmp_path / "fig2"
    p.write_text("{}")
    assert resolve_config_path(str(p)) == p


def test_resolve_unknown_name():
    with pytest.raises(ConfigError, match="bundled"):
        resolve_config_path("no_such_config")


def test_minimal_defaults():
    cfg = parse_config(minimal_config())
    assert cfg.quadrature.rel_tol == 1e-8
    assert cfg.quadrature.max_panels == 10_000
    assert cfg.output is None
    assert cfg.validate.scales == (0.1, 0.01, 0.001)
    assert cfg.atom_a.alpha0 == 1.0 and cfg.atom_a.dipole_weight == 1.0


def test_unknown_top_level_key_rejected():
    with pytest.raises(ConfigError, match="'extra'") as excinfo:
        parse_config(minimal_config(extra=1))
    assert excinfo.value.field == "config.extra"


def test_unknown_nested_key_rejected():
    bad = minimal_config()
    bad["scan"]["n_pts"] = 5
    with pytest.raises(ConfigError, match=r"config\.scan"):
        parse_config(bad)


def test_missing_required_key_names_field():
    bad = minimal_config()
    del bad["atom_b"]
    with pytest.raises(ConfigError, match="atom_b") as excinfo:
        parse_config(bad)
    assert excinfo.value.field == "config.atom_b"


def test_unknown_preset_names_field():
    bad = minimal_config()
    bad["system"]["lower"] = "sapphirr"
    with pytest.raises(ConfigError, match=r"config\.system\.lower") as excinfo:
        parse_config(bad)
    assert "sapphirr" in str(excinfo.value)


def test_material_objects():
    cfg = parse_config(
        minimal_config(
            system={
                "upper": {"kind": "vacuum"},
                "lower": {"kind": "constant", "eps": [4.0, 0.5], "mu": 1.0},
            }
        )
    )
    assert cfg.system.lower.eps(1.0) == 4.0 + 0.5j

    cfg = parse_config(
        minimal_config(
            system={
                "upper": "vacuum",
                "lower": {"kind": "lorentz", "eta": 2.71, "eps0": 6.57, "omega_s": 1.0, "gamma": 0.015},
            }
        )
    )
    assert cfg.system.lower.gamma == 0.015


def test_lorentz_needs_exactly_one_frequency():
    with pytest.raises(ConfigError, match="exactly one"):
        parse_config(
            minimal_config(
                system={
                    "upper": "vacuum",
                    "lower": {
                        "kind": "lorentz",
                        "eta": 2.71,
                        "eps0": 6.57,
                        "omega_s": 1.0,
                        "omega_t": 0.7,
                        "gamma": 0.015,
                    },
                }
            )
        )


def test_invalid_values_become_config_errors():
    bad = minimal_config()
    bad["atom_b"]["omega0"] = -1.0
    with pytest.raises(ConfigError, match="atom_b"):
        parse_config(bad)
    bad = minimal_config()
    bad["scan"]["n_points"] = 1
    with pytest.raises(ConfigError, match="scan"):
        parse_config(bad)
    with pytest.raises(ConfigError, match="format"):
        parse_config(minimal_config(output={"path": "x.csv", "format": "yaml"}))


def test_json_syntax_error_reports_line(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text('{\n  "system": }\n')
    with pytest.raises(ConfigError, match="line 2"):
        load_config(p)


def test_validate_section(tmp_path):
    cfg = parse_config(
        minimal_config(validate={"omega": 0.4, "scales": [1.0], "tolerance": 0.05})
    )
    assert cfg.validate.omega == 0.4
    assert cfg.validate.scales == (1.0,)
    assert cfg.validate.tolerance == 0.05


def test_roundtrip_from_disk(tmp_path):
    p = tmp_path / "run.json"
    p.write_text(json.dumps(minimal_config()))
    cfg = load_config(p)
    assert cfg.scan.n_points == 100
