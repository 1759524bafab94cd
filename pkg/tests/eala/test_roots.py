from ealakit.eala import EalaRoot, RootForm, classify_roots, root_decomposition, root_dimensions
from ealakit.exactnum import Scalar
from ealakit.glie import Window


def test_affine_root_decomposition(affine_e) -> None:
    spaces = root_decomposition(affine_e, Window(1, 1))
    assert len(spaces) == 9
    dimensions = root_dimensions(spaces)
    assert dimensions[EalaRoot((0,), (0,))] == 3
    assert dimensions[EalaRoot((1,), (0,))] == 1
    assert dimensions[EalaRoot((-1,), (1,))] == 1


def test_affine_root_norms(affine_e) -> None:
    form = RootForm(affine_e)
    assert form.norm(EalaRoot((0,), (1,))) == Scalar.rational("1/2")
    assert form.norm(EalaRoot((1,), (0,))) == 0
    assert form.norm(EalaRoot((1,), (1,))) == Scalar.rational("1/2")
    assert form.pair(EalaRoot((0,), (1,)), EalaRoot((1,), (-1,))) == Scalar.rational("-1/2")


def test_classification(affine_e) -> None:
    partition = classify_roots(affine_e, root_decomposition(affine_e, Window(1, 1)))
    assert len(partition.anisotropic) == 6
    assert len(partition.isotropic) == 3
    assert all(root.is_anisotropic for root in partition.anisotropic)
    assert partition.all() == sorted(partition.anisotropic + partition.isotropic)
    assert partition.isotropic[0].to_json() == {"alpha": [0], "lambda": [-1], "norm": "0"}


def test_twisted_roots_include_divisible_ones(twisted_e) -> None:
    spaces = root_decomposition(twisted_e, Window(1, 1))
    assert EalaRoot((1,), (2,)) in spaces
    assert EalaRoot((0,), (2,)) not in spaces
    assert len(spaces[EalaRoot((1,), (0,))]) == 1
    form = RootForm(twisted_e)
    assert form.norm(EalaRoot((1,), (2,))) == 4 * form.norm(EalaRoot((0,), (1,)))
