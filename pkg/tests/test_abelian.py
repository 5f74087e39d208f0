import pytest
from sympy import ZZ, Matrix, multiplicity
from sympy.matrices.normalforms import smith_normal_form

from app.abelian import (AbelianType, IntMatrix, accumulate, canonical_rows, canonical_types, expand,
                         nearly_homocyclic, order_types, parse_ipad, parse_multilayer, parse_row, parse_rows,
                         parse_type, parse_types, render_ipad, render_multilayer, render_row, render_rows,
                         render_type, render_types, smith_invariants, variant_b)
from app.abelian.notation import split_top
from app.errors import InfiniteAbelianizationError, NotationError


def test_exponents_are_sorted_and_zero_free():
    t = AbelianType((1, 0, 2))
    assert t.exponents == (2, 1)
    assert t.lo == 3
    assert t.rank == 2
    assert t.order == 27
    assert t.invariants == (9, 3)
    assert AbelianType.trivial().is_trivial
    assert AbelianType.of(1, 1, 1).is_elementary


def test_times_cyclic():
    assert AbelianType.of(2, 2).times_cyclic(1) == AbelianType.of(2, 2, 1)


@pytest.mark.parametrize("n, expected", [(0, ()), (1, (1,)), (2, (1, 1)), (3, (2, 1)), (4, (2, 2)),
                                         (5, (3, 2)), (8, (4, 4))])
def test_nearly_homocyclic(n, expected):
    assert nearly_homocyclic(n).exponents == expected


@pytest.mark.parametrize("n, expected", [(2, (2,)), (3, (2, 1)), (4, (3, 1)), (5, (3, 2)), (6, (4, 2))])
def test_variant_b(n, expected):
    assert variant_b(n).exponents == expected


def test_variant_b_needs_order_nine():
    with pytest.raises(ValueError):
        variant_b(1)


@pytest.mark.parametrize("text, exponents", [
    ("32^21^5", (3, 2, 2, 1, 1, 1, 1, 1)),
    ("21", (2, 1)),
    ("1^3", (1, 1, 1)),
    ("0", ()),
    ("3²1", (3, 3, 1)),
])
def test_parse_type(text, exponents):
    assert parse_type(text).exponents == exponents


def test_render_type_collapses_runs():
    assert render_type(AbelianType.of(3, 2, 2, 1, 1, 1, 1, 1)) == "32^21^5"
    assert render_type(AbelianType.trivial()) == "0"


def test_parse_type_rejects_garbage():
    with pytest.raises(NotationError):
        parse_type("2x1")


@pytest.mark.parametrize("text", ["1^10", "21^20", "2^01"])
def test_digit_runs_longer_than_nine_are_rejected(text):
    with pytest.raises(NotationError):
        parse_type(text)


def test_render_refuses_runs_longer_than_nine():
    assert render_type(AbelianType.of(*[1] * 9)) == "1^9"
    with pytest.raises(NotationError):
        render_type(AbelianType.of(*[1] * 10))


def test_parse_types_expands_multiplicities():
    ts = parse_types("32,1^3,(21)^2")
    assert [render_type(t) for t in ts] == ["32", "1^3", "21", "21"]
    assert parse_types("[(1^2)^4]") == [AbelianType.of(1, 1)] * 4
    assert parse_types("0") == []


def test_render_types_accumulates_in_descending_order():
    ts = parse_types("21,(1^2)^3")
    assert render_types(list(reversed(ts))) == "21,(1^2)^3"
    assert render_types([]) == "0"
    assert canonical_types("21,1^3,32,21") == "32,1^3,(21)^2"


def test_ordered_mode_keeps_polarized_component_first():
    ts = parse_types("1^2,1^2,21,1^2")
    ordered = order_types(ts)
    assert render_type(ordered[0]) == "21"
    assert expand(accumulate(ts)) == [AbelianType.of(2, 1)] + [AbelianType.of(1, 1)] * 3


def test_ipad_round_trip():
    tau0, tau1 = parse_ipad("[1^2;1^2,(2)^3]")
    assert tau0 == AbelianType.of(1, 1)
    assert render_ipad(tau0, tau1) == "[1^2;1^2,(2)^3]"


def test_ipad_needs_two_layers():
    with pytest.raises(NotationError):
        parse_ipad("[1^2]")


def test_parse_row_without_third_layer():
    tau0, tau1, tau2 = parse_row("(21;1^2,(2)^3)")
    assert tau0 == AbelianType.of(2, 1)
    assert len(tau1) == 4
    assert tau2 == []
    assert render_row((tau0, tau1, tau2), with_tau2=False) == "(21;1^2,(2)^3)"


def test_rows_group_repeated_rows():
    rows = parse_rows("(1^2;1^2,(2)^3)^2,(21;1^2,(2)^3),(1^2;(1^2)^4)")
    assert len(rows) == 4
    assert render_rows(rows, with_tau2=False) == "(21;1^2,(2)^3),(1^2;1^2,(2)^3)^2,(1^2;(1^2)^4)"


def test_rows_accept_square_bracket_multiplicity():
    assert len(parse_rows("[(21;1^4,(21)^3)]^3")) == 3


def test_canonical_rows_drops_third_layer_on_request():
    text = "(21;21^2,(31)^3;2^21,(2^2)^3)"
    assert canonical_rows(text, with_tau2=False) == "(21;21^2,(31)^3)"
    assert canonical_rows(text) == "(21;21^2,(31)^3;2^21,(2^2)^3)"


def test_multilayer_round_trip():
    text = "[1^2;(1^2;(1)^4;0)^4]"
    tau0, rows = parse_multilayer(text)
    assert len(rows) == 4
    assert render_multilayer(tau0, rows) == text


def test_split_top_ignores_nested_separators():
    assert split_top("(1^2;1),2;3", ";") == ["(1^2;1),2", "3"]
    with pytest.raises(NotationError):
        split_top("(1^2", ",")


def test_smith_invariants_of_diagonal():
    assert smith_invariants(IntMatrix.diagonal([3, 9, 2])) == AbelianType.of(2, 1)


def test_smith_invariants_mix_rows():
    m = IntMatrix.from_rows([[3, 3], [0, 9]])
    assert smith_invariants(m).lo == 3


def test_smith_invariants_reject_free_part():
    with pytest.raises(InfiniteAbelianizationError):
        smith_invariants(IntMatrix.from_rows([[3, 0]]))


@pytest.mark.parametrize("rows", [
    [[3, 3], [0, 9]],
    [[6, 9, 3], [3, 0, 27], [0, 9, 9]],
    [[9, 3, 0], [0, 3, 3], [3, 0, 81]],
])
def test_smith_invariants_agree_with_sympy(rows):
    reference = smith_normal_form(Matrix(rows), domain=ZZ)
    exponents = [multiplicity(3, abs(reference[i, i])) for i in range(len(rows))]
    assert smith_invariants(IntMatrix.from_rows(rows)) == AbelianType(tuple(exponents))
