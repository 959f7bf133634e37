import pytest

from vdwsurf import Atom, HalfSpaceSystem, Material, preset


@pytest.fixture(scope="session")
def sapphire():
    return preset("sapphire-ir")


@pytest.fixture(scope="session")
def sapphire_system(sapphire):
    return HalfSpaceSystem(upper=Material.vacuum(), lower=sapphire, omega_max=3.0)


@pytest.fixture(scope="session")
def vacuum_system():
    return HalfSpaceSystem(upper=Material.vacuum(), lower=Material.vacuum())


@pytest.fixture(scope="session")
def atom_b():
    # ground-state partner used for the reference spectrum
    return Atom(omega0=0.9, gamma=1e-3, alpha0=1.0)
