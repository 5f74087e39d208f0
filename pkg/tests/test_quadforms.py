import pytest

from app.abelian import AbelianType
from app.errors import ScopeError
from app.quadforms import QuadForm, class_group, is_fundamental, reduced_forms, three_rank


def test_principal_form():
    assert QuadForm.identity(-23) == QuadForm(1, 1, 6)
    assert QuadForm.identity(-4) == QuadForm(1, 0, 1)
    assert QuadForm.identity(-23).discriminant == -23


def test_reduction():
    f = QuadForm(4, 5, 3).reduce()
    assert f == QuadForm(2, -1, 3)
    assert f.is_reduced
    assert not QuadForm(2, -2, 3).is_reduced
    assert QuadForm(6, 5, 2).reduce().discriminant == -23


def test_reduced_forms_of_minus_23():
    assert {str(f) for f in reduced_forms(-23)} == {"(1,1,6)", "(2,1,3)", "(2,-1,3)"}


def test_composition_in_a_cyclic_class_group():
    f = QuadForm(2, 1, 3)
    assert str(f * f) == "(2,-1,3)"
    assert f.compose(f.inverse()).is_identity
    assert f.power(3).is_identity
    assert f.power(-1) == f.inverse()
    assert f.power(0) == QuadForm.identity(-23)


@pytest.mark.parametrize("d, fundamental", [(-23, True), (-4, True), (-3896, True), (5, True),
                                            (-12, False), (18, False), (1, False)])
def test_is_fundamental(d, fundamental):
    assert is_fundamental(d) is fundamental


def test_class_number_three():
    group = class_group(-23)
    assert group.h == 3
    assert group.structure == (3,)
    assert group.p_part == AbelianType.of(1)
    assert group.three_rank == 1


def test_smallest_elementary_three_class_group():
    group = class_group(-4027)
    assert group.h == 9
    assert group.structure == (3, 3)
    assert group.p_part.is_elementary
    model = group.to_model()
    assert model.pPart == [1, 1]
    assert model.threeRank == 2


def test_three_rank_of_an_h4_field():
    assert three_rank(-3896) == 2


def test_trivial_class_group():
    group = class_group(-4)
    assert group.h == 1
    assert group.structure == ()
    assert group.three_rank == 0


@pytest.mark.parametrize("d", [5, -12, 0])
def test_class_group_scope(d):
    with pytest.raises(ScopeError):
        class_group(d)


def test_class_group_bound(settings_env):
    settings_env(classgroup_bound=1000)
    with pytest.raises(ScopeError):
        class_group(-4027)


def test_reduced_forms_need_negative_discriminant():
    with pytest.raises(ScopeError):
        reduced_forms(5)


@pytest.mark.slow
def test_three_rank_three():
    group = class_group(-4447704)
    assert group.p_part == AbelianType.of(1, 1, 1)
    assert group.three_rank == 3
