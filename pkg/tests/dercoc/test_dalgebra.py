import pytest

from ealakit.dercoc import CentroidalDerivation, build_D, derivation_space
from ealakit.errors import ClosureUnbounded, NotCentroidal, NotSkew
from ealakit.exactnum import ONE


def test_affine_d_is_one_dimensional(affine_ml) -> None:
    da = build_D(affine_ml)
    assert da.dim == 1
    assert da.d0_indices == [0]
    assert da.c_slot(0) == "c[1]"
    assert da.c_degree(0) == (0,)
    assert len(derivation_space(da)) == 1


def test_toroidal_d_with_extra_generator(toroidal_da, w_derivation) -> None:
    assert toroidal_da.dim == 3
    assert toroidal_da.degrees == ((0, 0), (0, 0), (1, 0))
    assert toroidal_da.d_slot(2) == "d[3]"
    assert toroidal_da.c_degree(2) == (-1, 0)
    assert toroidal_da.structure == {(0, 2): {2: ONE}, (2, 0): {2: -ONE}}
    assert toroidal_da.coordinates(w_derivation.scale(3)) == {2: 3 * ONE}


def test_contragredient_action(toroidal_da) -> None:
    assert toroidal_da.act_on_c({0: ONE}, {2: ONE}) == {2: -ONE}
    assert toroidal_da.act_on_c({2: ONE}, {2: ONE}) == {0: ONE}
    assert toroidal_da.act_on_c({1: ONE}, {2: ONE}) == {}
    assert toroidal_da.pair({2: ONE}, {2: 3 * ONE}) == 3
    assert toroidal_da.ev((2, 5), {0: ONE, 1: ONE}) == 7


def test_derivations_into_c(toroidal_da) -> None:
    space = derivation_space(toroidal_da)
    assert len(space) == 5
    for psi in space:
        for (i, j), bracket in toroidal_da.structure.items():
            lhs = {}
            for k, a in bracket.items():
                for l, v in psi.get(k, {}).items():
                    lhs[l] = lhs.get(l, 0) + a * v
            rhs = {}
            for l, v in toroidal_da.act_on_c({i: ONE}, psi.get(j, {})).items():
                rhs[l] = rhs.get(l, 0) + v
            for l, v in toroidal_da.act_on_c({j: ONE}, psi.get(i, {})).items():
                rhs[l] = rhs.get(l, 0) - v
            assert {l: v for l, v in lhs.items() if v} == {l: v for l, v in rhs.items() if v}


def test_generator_validation(toroidal_ml, twisted_ml) -> None:
    with pytest.raises(NotSkew):
        build_D(toroidal_ml, [CentroidalDerivation.homogeneous((1, 0), (1, 0))])
    with pytest.raises(NotCentroidal):
        build_D(toroidal_ml, [CentroidalDerivation(2, {(1, 0): (0, 1), (0, 1): (1, 0)})])
    with pytest.raises(NotCentroidal):
        build_D(twisted_ml, [CentroidalDerivation.homogeneous((1,), (0,))])


def test_closure_outgrowing_bound(toroidal_ml, w_derivation) -> None:
    other = CentroidalDerivation.homogeneous((0, 1), (1, 0))
    with pytest.raises(ClosureUnbounded):
        build_D(toroidal_ml, [w_derivation, other], bound=1)
