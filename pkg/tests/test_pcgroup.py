import itertools

import pytest

from app.abelian import AbelianType
from app.errors import PresentationError
from app.pcgroup import (PcPresentation, abelianization, center, closure, coclass, defect, derived_length,
                         derived_subgroup, describe_group, format_presentation, frattini_subgroup, full_group,
                         minimal_generators, nilpotency_class, parse_presentation, quotient,
                         subgroup_presentation)


def test_heisenberg_invariants(group):
    g = group("27_3")
    assert g.order == 27
    assert nilpotency_class(g) == 2
    assert coclass(g) == 1
    assert derived_length(g) == 2
    assert abelianization(g) == AbelianType.of(1, 1)
    assert center(g).order == 3
    assert derived_subgroup(g).order == 3
    assert frattini_subgroup(g).order == 3
    assert len(minimal_generators(g)) == 2


def test_exponent_nine_group_has_elements_of_order_nine(group):
    g = group("27_4")
    assert g.element_order(g.generator(0)) == 9
    assert g.element_order(g.generator(1)) == 3
    assert max(g.element_order(x) for x in g.elements()) == 9


def test_exponent_three_group(group):
    g = group("27_3")
    assert max(g.element_order(x) for x in g.elements()) == 3


def test_commutator_convention(group):
    g = group("27_3")
    g1, g2, g3 = (g.generator(i) for i in range(3))
    assert g.comm(g2, g1) == g3
    assert g.mul(g2, g1) == g.mul(g.mul(g1, g2), g3)


def test_inverse_and_power(group):
    g = group("27_4")
    x = g.mul(g.generator(0), g.generator(1))
    assert g.mul(x, g.inverse(x)) == g.identity
    assert g.power(x, 9) == g.identity


def test_elementary_abelian_is_abelian(group):
    g = group("9_2")
    assert nilpotency_class(g) == 1
    assert derived_length(g) == 1
    assert center(g).order == 9


def test_stored_presentations_are_consistent(group):
    for stem in ("9_2", "27_3", "27_4"):
        assert group(stem).consistency_check() == []


def test_inconsistent_presentation_is_reported():
    bad = parse_presentation("3 3\n1 1 2\ng1^3 = g2\n[g2,g1] = g3\n")
    failures = bad.consistency_check()
    assert failures
    summary = describe_group(bad, "bad")
    assert summary.consistencyFailures == failures


def test_format_round_trip(group):
    g = group("27_4")
    text = format_presentation(g)
    assert text == "3 3\n1 1 2\ng1^3 = g3\n[g2,g1] = g3\n"
    again = parse_presentation(text)
    assert again.power_rhs == g.power_rhs
    assert again.comm_rhs == g.comm_rhs


def test_comments_and_blank_lines_are_ignored():
    g = parse_presentation("# C3 x C3\n\n3 2\n1 1   # weights\n")
    assert g.n == 2
    assert not g.comm_rhs


@pytest.mark.parametrize("text", [
    "3 3\n1 1\n",
    "3 2\n1 1\n[g1,g2] = g2\n",
    "3 3\n1 1 2\n[g2,g1] = g3g2\n",
    "3 3\n1 1 2\ng1^2 = g3\n",
    "3 3\n1 1 2\ng1 = g3\n",
    "3 2\n",
])
def test_malformed_presentations(text):
    with pytest.raises(PresentationError):
        parse_presentation(text)


def test_constructor_rejects_relations_outside_the_tail():
    with pytest.raises(PresentationError):
        PcPresentation(3, 3, comm_rhs={(1, 0): (0, 1, 0)})


def test_quotient_by_center(group):
    g = group("27_3")
    q, _ = quotient(g, center(g))
    assert q.order == 9
    assert abelianization(q) == AbelianType.of(1, 1)


def test_subgroup_presentation_of_maximal_subgroup(group):
    g = group("27_3")
    sub = closure(g, [g.generator(1), g.generator(2)])
    h, _ = subgroup_presentation(sub)
    assert h.order == 9
    assert abelianization(h) == AbelianType.of(1, 1)


def test_full_group(group):
    g = group("27_3")
    assert full_group(g).order == 27


def test_describe_group(group):
    summary = describe_group(group("27_3"), "<27,3>")
    assert summary.name == "<27,3>"
    assert summary.logOrder == 3
    assert summary.nilpotencyClass == 2
    assert summary.coclass == 1
    assert summary.abelianization == "1^2"
    assert summary.centerOrder == 3
    assert summary.defect == 0
    assert summary.consistencyFailures == []


def test_defect_of_class_two_is_zero(group):
    assert defect(group("27_4")) == 0


@pytest.mark.parametrize("stem", ["27_3", "27_4"])
def test_collection_agrees_with_brute_force_table(group, stem):
    g = group(stem)
    elements = list(g.elements())
    table = {(x, y): g.mul(x, y) for x in elements for y in elements}
    assert all(len({table[(x, y)] for y in elements}) == len(elements) for x in elements)
    assert all(table[(table[(x, y)], z)] == table[(x, table[(y, z)])]
               for x in elements for y in elements for z in elements)
    for x in elements:
        order, power = 1, x
        while power != g.identity:
            power, order = table[(power, x)], order + 1
        assert g.element_order(x) == order


def test_exponents_of_an_exponent_nine_group(group):
    g = group("27_4")
    whole = full_group(g)
    assert whole.exponents(g.generator(0)) == (1, 0, 0)
    assert all(whole.element(whole.exponents(x)) == x for x in g.elements())


def test_exponents_with_generators_of_order_nine(product_243):
    g = product_243
    assert g.consistency_check() == []
    assert [g.element_order(g.generator(i)) for i in (0, 3)] == [9, 9]
    assert all(full_group(g).element(full_group(g).exponents(x)) == x for x in g.elements())
    sub = closure(g, [g.mul(g.generator(0), g.generator(3)), g.generator(1)])
    for exps in itertools.product(range(3), repeat=sub.lo):
        assert sub.exponents(sub.element(exps)) == exps


def test_subgroup_presentation_is_an_embedding(product_243):
    g = product_243
    sub = closure(g, [g.mul(g.generator(0), g.generator(3)), g.generator(1)])
    for h in (full_group(g), sub):
        pres, embed = subgroup_presentation(h)
        assert pres.consistency_check() == []
        assert pres.order == h.order
        gens = [pres.generator(i) for i in range(pres.n)]
        for x in gens:
            for y in gens:
                assert embed(pres.mul(x, y)) == g.mul(embed(x), embed(y))
