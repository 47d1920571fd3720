import pytest

from noncent import catalog, core, families


@pytest.fixture(scope="session")
def order8_entries():
    return catalog.load(catalog.shipped_path("order8.cat"))


@pytest.fixture(scope="session")
def order16_entries():
    return catalog.load(catalog.shipped_path("order16.cat"))


@pytest.fixture(scope="session")
def order32_entries():
    return catalog.load(catalog.shipped_path("order32.cat"))


@pytest.fixture(scope="session")
def order64_entries():
    return catalog.load(catalog.shipped_path("order64.cat"))


@pytest.fixture(scope="session")
def small_corpus():
    """Hand-built groups spanning the structural cases the suite leans on."""
    return [
        ("C1", families.cyclic(1)),
        ("C6", families.cyclic(6)),
        ("C2xC2", families.elementary_abelian(2, 2)),
        ("S3", families.dihedral(3)),
        ("D8", families.dihedral(4)),
        ("Q8", families.generalized_quaternion(8)),
        ("D16", families.dihedral(8)),
        ("Q16", families.generalized_quaternion(16)),
        ("M16", families.modular_M(16)),
        ("M32", families.modular_M(32)),
        ("H27", families.heisenberg(3)),
        ("D8xC3", core.direct_product(families.dihedral(4), families.cyclic(3))),
        ("D8xC2", core.direct_product(families.dihedral(4), families.cyclic(2))),
        ("D8xC4", core.direct_product(families.dihedral(4), families.cyclic(4))),
    ]
