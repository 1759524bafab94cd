import pytest

from ealakit.dercoc import CentroidalDerivation, build_D
from ealakit.eala import assemble_eala
from ealakit.glie import GradedElement
from ealakit.multiloop import build_multiloop
from ealakit.rootsys import build_automorphism, build_simple_algebra


def element(slot: str, *degree: int, coeff=1) -> GradedElement:
    return GradedElement.monomial(slot, degree, coeff)


@pytest.fixture(scope="session")
def sl2():
    return build_simple_algebra("A", 1)


@pytest.fixture(scope="session")
def sl3():
    return build_simple_algebra("A", 2)


@pytest.fixture(scope="session")
def affine_ml(sl2):
    return build_multiloop(sl2, [build_automorphism(sl2)])


@pytest.fixture(scope="session")
def affine_e(affine_ml):
    return assemble_eala(affine_ml, build_D(affine_ml))


@pytest.fixture(scope="session")
def twisted_ml(sl3):
    """L(sl3, omega) with omega the diagram automorphism of order 2"""
    return build_multiloop(sl3, [build_automorphism(sl3, diagram=[1, 0], order=2)])


@pytest.fixture(scope="session")
def twisted_e(twisted_ml):
    return assemble_eala(twisted_ml, build_D(twisted_ml))


@pytest.fixture(scope="session")
def toroidal_ml(sl2):
    identity = build_automorphism(sl2)
    return build_multiloop(sl2, [identity, identity])


@pytest.fixture(scope="session")
def w_derivation():
    """chi^(1,0) d_(0,1)"""
    return CentroidalDerivation.homogeneous((1, 0), (0, 1))


@pytest.fixture(scope="session")
def toroidal_da(toroidal_ml, w_derivation):
    return build_D(toroidal_ml, [w_derivation])


@pytest.fixture(scope="session")
def toroidal_e(toroidal_ml, toroidal_da):
    return assemble_eala(toroidal_ml, toroidal_da)
