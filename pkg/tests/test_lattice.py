import pytest

from app.lattice import gaussian_binomial, intermediate_subgroups, layers, rank_mod_p, rref_subspaces, row_reduce
from app.pcgroup import derived_subgroup, full_group


@pytest.mark.parametrize("n, k, count", [(2, 1, 4), (3, 1, 13), (3, 2, 13), (2, 0, 1), (2, 3, 0)])
def test_gaussian_binomial(n, k, count):
    assert gaussian_binomial(n, k, 3) == count


@pytest.mark.parametrize("dim, k", [(2, 1), (3, 1), (3, 2)])
def test_rref_subspaces_enumerates_each_subspace_once(dim, k):
    bases = list(rref_subspaces(dim, k, 3))
    assert len(bases) == gaussian_binomial(dim, k, 3)
    assert len(set(bases)) == len(bases)


def test_row_reduce_normalizes_pivots():
    assert row_reduce([[2, 1]], 3) == [[1, 2]]
    assert rank_mod_p([[1, 2], [2, 4]], 3) == 1
    assert rank_mod_p([[1, 0], [0, 1], [1, 1]], 3) == 2


def test_layers_of_rank_two_groups(group):
    for stem in ("9_2", "27_3", "27_4"):
        sizes = [len(layer.subgroups) for layer in layers(group(stem))]
        assert sizes == [1, 4, 1]


def test_layer_orders(group):
    g = group("27_3")
    top, first, bottom = layers(g)
    assert top.subgroups[0].order == 27
    assert all(h.order == 9 for h in first.subgroups)
    assert bottom.subgroups[0] == derived_subgroup(g)
    assert len(set(first.subgroups)) == 4


def test_intermediate_subgroups_of_the_whole_group(group):
    g = group("27_3")
    maximal = intermediate_subgroups(full_group(g), 1, derived_subgroup(g))
    assert {h.key for h in maximal} == {h.key for h in layers(g)[1].subgroups}
