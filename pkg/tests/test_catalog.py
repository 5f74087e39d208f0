import shutil
from dataclasses import replace

import pytest

from app.abelian import render_multilayer
from app.catalog import (FROZEN_MAX_LO, PRESENTATION_DIR, Catalog, CatalogEntry, Provenance, build_catalog,
                         canonical_id, check_entry, expand_aliases, freeze_presentations, parse_identifier,
                         presentation_stem)
from app.errors import AmbiguousMatchError, CatalogError
from app.pcgroup import load_presentation
from app.transfer import multilayer_ipad2


def test_identifier_forms():
    ident = parse_identifier("<2187,289|290>")
    assert ident.lo == 7
    assert ident.is_batch
    assert [str(m) for m in ident.members()] == ["<2187,289>", "<2187,290>"]
    assert parse_identifier("<6561,625..630>").counters == (625, 626, 627, 628, 629, 630)
    assert canonical_id("<2187,289/290>") == "<2187,289|290>"
    assert parse_identifier("<3^7,311>").order == 2187


def test_relative_identifier():
    ident = parse_identifier("<729,57>-#1;1")
    assert ident.is_relative
    assert ident.lo == 7
    assert str(ident.parent) == "<729,57>"
    assert str(ident.head.child(2, (1, 2))) == "<729,57>-#2;1|2"


@pytest.mark.parametrize("text", ["<729,x>", "<729,45>-#1", "<729,5..3>", "Omega"])
def test_malformed_identifiers(text):
    with pytest.raises(CatalogError):
        parse_identifier(text)


def test_cyclic_alias():
    with pytest.raises(CatalogError):
        parse_identifier("A", {"A": "B-#1;1", "B": "A"})


def test_aliases_expand_through_chains(catalog):
    assert catalog.aliases["W"] == "<729,57>"
    assert catalog.aliases["Z2"] == "<6561,630>-#2;7"
    assert str(catalog.parse("Y1-#1;1")) == "<6561,629>-#1;2-#1;1"
    assert expand_aliases({"P": "<27,3>", "R": "P-#1;1"})["R"] == "<27,3>-#1;1"


def test_resolve_stored_groups(catalog):
    entry = catalog.resolve("<27,3>")
    assert entry.verifiable
    assert entry.mainline
    assert entry.d2 == 4
    assert entry.expected_pattern == "[1^2;(1^2;(1)^4;0)^4]"


def test_resolve_batch_member(catalog):
    assert catalog.resolve("<243,29>").id == "<243,28|29|30>"
    assert catalog.resolve("<2187,289>").type_name == "E.14"


def test_resolve_aliases_and_relative_ids(catalog):
    assert catalog.resolve("W-#1;1").id == "<2187,311>"
    assert catalog.resolve("N-#1;4").id == "<2187,273>"
    assert catalog.resolve("N-#1;2").id == "<2187,271|272>"
    assert catalog.resolve("Y1-#1;1").lo == 10
    batch = "|".join(str(i) for i in range(1, 44))
    assert catalog.resolve("Z2-#4;7").id == f"<6561,630>-#2;7-#4;{batch}"


def test_like_rows_are_copied(catalog):
    assert catalog.resolve("<2187,288>").rows == catalog.resolve("<2187,285>").rows
    assert catalog.resolve("<2187,288>").kappa == "1122"


def test_first_layer_and_second_order_text(catalog):
    entry = catalog.resolve("<27,4>")
    assert entry.tau1_text == "1^2,(2)^3"
    assert entry.second_order == "(2;1)^3,(1^2;(1)^4)"
    assert entry.d2 == 2
    assert catalog.resolve("<2187,311>").tau1_text == "(21)^4"


def test_unknown_identifier(catalog):
    with pytest.raises(CatalogError):
        catalog.resolve("<27,99>")


def test_relative_id_without_stored_ancestor(catalog):
    with pytest.raises(CatalogError, match="materialize"):
        catalog.resolve("<243,6>-#1;1")


def test_relative_id_grown_from_stored_group(catalog):
    entry = catalog.resolve("<9,2>-#1;2")
    assert entry.provenance == Provenance.DERIVED
    assert entry.lo == 3
    assert entry.kappa == "1111"
    assert entry.type_name == "A.1"
    assert entry.verifiable
    assert check_entry(entry) == []


def test_relative_id_matched_by_pattern(catalog):
    entry = catalog.resolve("<9,2>-#1;3", expected="(1^2;(1)^4;0),(2;1;0)^3")
    assert entry.kappa == "1111"
    assert "matched by pattern" in entry.note


def test_overlapping_batches_are_ambiguous():
    entries = [CatalogEntry(id=text, identifier=parse_identifier(text), lo=4, table="t", kappa="0000",
                            rows=None, source="test") for text in ("<81,7|8>", "<81,8|9>")]
    catalog = Catalog(entries, {}, {})
    with pytest.raises(AmbiguousMatchError) as info:
        catalog.resolve("<81,8>")
    assert len(info.value.batch) == 2


def test_stored_presentations_agree_with_tables(catalog):
    backed = [e for e in catalog if e.verifiable]
    assert [e.id for e in backed] == ["<9,2>", "<27,3>", "<27,4>"]
    assert all(check_entry(e) == [] for e in backed)


def test_check_entry_reports_wrong_rows(catalog):
    entry = catalog.resolve("<27,3>")
    wrong = replace(entry, rows="(2;1;0)^4", kappa="1111")
    problems = check_entry(wrong)
    assert len(problems) == 2


def test_tower_group_metabelianization(catalog):
    assert catalog.resolve("<2187,293>").metabelianization == "<729,51>"


def test_entry_model(catalog):
    model = catalog.resolve("<27,4>").to_model()
    assert model.typeName == "A.1"
    assert model.provenance == Provenance.PAPER
    assert model.verifiable


@pytest.mark.slow
def test_materialize_coclass_one_vertex(catalog):
    bound = catalog.materialize(catalog.resolve("<81,10>"))
    assert bound.verifiable
    assert bound.presentation.n == 4
    assert "presentation grown as" in bound.note
    tau0, rows = multilayer_ipad2(bound.presentation)
    assert render_multilayer(tau0, rows, with_tau2=True) == bound.expected_pattern
    assert check_entry(bound) == []


def _unfrozen(catalog, max_lo):
    return {e.id for e in catalog if e.lo <= max_lo and e.rows and not e.verifiable
            and not e.identifier.is_relative}


@pytest.fixture
def fixture_copy(fixture_dir, tmp_path):
    target = tmp_path / "data"
    shutil.copytree(fixture_dir, target)
    return target


def test_presentation_stem_lists_every_counter():
    assert presentation_stem(parse_identifier("<243,28|29|30>")) == "243_28_29_30"
    assert presentation_stem(parse_identifier("<27,4>")) == "27_4"


def test_stored_presentation_is_bound_by_file_name(fixture_copy):
    stored = fixture_copy / PRESENTATION_DIR
    (stored / "81_9.pc").write_text((stored / "27_4.pc").read_text(encoding="utf-8"), encoding="utf-8")
    with pytest.raises(CatalogError) as info:
        build_catalog(fixture_copy)
    assert any("<81,9>" in o for o in info.value.offenders)


def test_missing_named_presentation_fails_loudly(fixture_copy):
    (fixture_copy / PRESENTATION_DIR / "27_4.pc").unlink()
    with pytest.raises(CatalogError) as info:
        build_catalog(fixture_copy)
    assert any("27_4.pc" in o for o in info.value.offenders)


@pytest.mark.slow
def test_freeze_writes_checked_presentations(fixture_copy):
    catalog = build_catalog(fixture_copy)
    expected = _unfrozen(catalog, 5)
    assert {"<81,9>", "<243,8>"} <= expected
    written, failed = freeze_presentations(catalog, fixture_copy / PRESENTATION_DIR, max_lo=5)
    assert failed == {}
    assert set(written) == expected
    for entry_id, file_name in written.items():
        entry = catalog.resolve(entry_id)
        group = load_presentation(fixture_copy / PRESENTATION_DIR / file_name, name=entry_id)
        assert check_entry(replace(entry, presentation=group)) == []

    rebuilt = build_catalog(fixture_copy)
    assert all(rebuilt.resolve(entry_id).verifiable for entry_id in expected)
    assert _unfrozen(rebuilt, 5) == set()


@pytest.mark.slow
def test_freeze_covers_every_order_with_stored_presentations(fixture_copy):
    catalog = build_catalog(fixture_copy)
    written, failed = freeze_presentations(catalog, fixture_copy / PRESENTATION_DIR)
    assert failed == {}
    assert set(written) == _unfrozen(catalog, FROZEN_MAX_LO)
