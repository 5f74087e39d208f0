import json

import pytest
from pydantic import ValidationError

from app.criteria import VerdictStatus
from app.errors import DatasetError, ScopeError
from app.fields import (DistributionLevel, FieldKind, FieldRecord, canonical_vertex, census_frequencies,
                        census_shares, corrigenda, distributions, dump, identify, identify_all, ingest,
                        labels_for, load_fields, parse_records, report_tree, report_verdicts, tree_labels,
                        verdict_json, verdict_table)
from app.fields.dataset import FIELDS_FILE
from app.pgen import GrowthPolicy, TreeNode, grow_tree
from app.transfer import canonical_tkt


@pytest.fixture(scope="module")
def records():
    return load_fields()


@pytest.fixture(scope="module")
def verdicts(records):
    return identify_all(records)


def of_type(records, name, kind):
    return [r for r in records if r.kappa and canonical_tkt(r.kappa).name == name and r.kind == FieldKind(kind)]


def tower_map(records, verdicts, kind):
    report = distributions(records, verdicts, DistributionLevel.TOWER, kind)
    return {v.vertex: (v.md, v.af) for v in report.vertices}


def test_dump_reproduces_the_fixture(fixture_dir):
    path = fixture_dir / FIELDS_FILE
    assert dump(ingest(path)) == path.read_text(encoding="utf-8")


def test_dataset_errors_carry_line_numbers():
    good = '{"d": 32009, "kind": "real", "kappa": "2000", "tau1": "21,(1^2)^3", "provenance": "p"}'
    bad = '{"d": 72329, "kind": "real", "kappa": "5000", "provenance": "p"}'
    text = "\n".join([good, bad, good, "not json"])
    with pytest.raises(DatasetError) as info:
        parse_records(text)
    assert info.value.line_numbers == [2, 3, 4]


def test_blank_lines_are_skipped():
    text = '\n{"d": -3896, "kind": "imaginary", "kappa": "4111", "provenance": "p"}\n\n'
    assert [r.d for r in parse_records(text)] == [-3896]


@pytest.mark.parametrize("payload", [
    {"d": -5, "kind": "real", "kappa": "2143", "provenance": "p"},
    {"d": 5, "kind": "real", "provenance": "p"},
    {"d": 5, "kind": "real", "tau1": "2x1", "provenance": "p"},
    {"d": 5, "kind": "real", "kappa": "214", "provenance": "p"},
    {"d": 5, "kind": "real", "kappa": "2143", "secondOrder": ["(21;"], "provenance": "p"},
])
def test_record_validation(payload):
    with pytest.raises(ValidationError):
        FieldRecord.model_validate(payload)


def test_every_record_gets_a_verdict(records, verdicts):
    assert len(verdicts) == len(records)
    assert {v.d for v in verdicts} == {r.d for r in records}
    assert [abs(v.d) for v in verdicts] == sorted(abs(v.d) for v in verdicts)


@pytest.mark.parametrize("d, tower, lo", [
    (32009, "<81,8>", 4),
    (72329, "<81,10>", 4),
    (494236, "<729,97|98>", 6),
    (790085, "<729,96>", 6),
    (62501, "<729,99|100|101>", 6),
    (10200108, "<6561,2223|2224>", 8),
    (14458876, "<6561,2222>", 8),
    (2905160, "<6561,2225|2226|2227>", 8),
])
def test_type_a_records(records, d, tower, lo):
    verdict = identify(next(r for r in records if r.d == d))
    assert verdict.status == VerdictStatus.PROVEN
    assert verdict.length == 2
    assert verdict.tower_key == tower
    assert verdict.lo == lo


def test_e_type_records(records, catalog):
    by_d = {r.d: r for r in records}
    deep = identify(by_d[5264069])
    assert (deep.length, deep.tower_key, deep.second_key, deep.lo) == (3, "<6561,616>", "<2187,288>", 8)
    assert identify(by_d[7153097]).tower_key == "<2187,288>"
    assert identify(by_d[8632716]).tower_key == "<2187,304>"
    assert identify(by_d[342664]).tower_key == str(catalog.parse("<6561,620|624>"))


def test_records_without_rows_need_data(records):
    h4_on_tree = next(r for r in records if r.d == 1162949)
    assert identify(h4_on_tree).status == VerdictStatus.NEEDS_DATA


def test_real_h4_distribution(records, verdicts):
    towers = tower_map(of_type(records, "H.4", "real"), verdicts, "real")
    assert towers["<2187,273>"] == (957013, 11)
    assert towers["<2187,271|272>"] == (2023845, 8)
    assert towers["<2187,270>"] == (2303112, 5)
    assert towers["order>=3^8"] == (2852733, 3)


def test_imaginary_h4_distribution(records, verdicts):
    towers = tower_map(of_type(records, "H.4", "imaginary"), verdicts, "imaginary")
    assert towers == {"<6561,606>": (-3896, 3)}


def test_real_g19_distribution(records, verdicts):
    towers = tower_map(of_type(records, "G.19", "real"), verdicts, "real")
    assert towers == {
        "<2187,311>": (214712, 55),
        "order>=3^8": (24126593, 6),
        "<6561,629>-#1;2-#1;1": (21974161, 3),
    }


def test_imaginary_g19_distribution(records, verdicts):
    g19 = of_type(records, "G.19", "imaginary")
    towers = tower_map(g19, verdicts, "imaginary")
    assert towers == {
        "<6561,625>-#1;2-#2;1|2": (-12067, 30),
        "order>=3^11": (-54195, 7),
        "<6561,629>-#1;2-#2;1|2": (-114936, 7),
    }
    unresolved = sorted(v.d for v in verdicts
                        if v.status == VerdictStatus.UNRESOLVED and v.d in {r.d for r in g19})
    assert unresolved == [-221944, -91643]


def test_distributions_agree_with_figure_labels(records, verdicts):
    for figure, level in (("coclass1-md", "tower"), ("treeQ-md", "second"), ("treeU-md", "second")):
        report = distributions(records, verdicts, level, "real")
        md = {v.vertex: v.md for v in report.vertices}
        for label in labels_for(figure):
            if label.note and "no transcribed record" in label.note:
                continue
            assert md[label.vertex] == label.md, (figure, label.vertex)


def test_sporadic_tower_labels(records, verdicts):
    towers = tower_map(of_type(records, "G.19", "real"), verdicts, "real")
    for label in labels_for("sporadicG19-tower"):
        if label.range == "0<d<5*10^7":
            assert towers[label.vertex] == (label.md, label.af)


def test_shares_are_percentages(records, verdicts):
    report = distributions(of_type(records, "G.19", "real"), verdicts, "tower", "real")
    assert report.shares["<2187,311>"] == 85.9
    assert report.level == DistributionLevel.TOWER


def test_census_shares():
    shares = census_shares()
    assert shares["21,(1^2)^3"] == 50.1
    assert shares["1^3,(1^2)^3"] == 29.6
    assert shares["2^2,(1^2)^3"] == 6.4
    assert shares["32,(1^2)^3"] == 2.8


def test_census_frequencies_use_vertex_keys():
    counts = census_frequencies("0<d<10^7")
    assert counts["<81,8>|<81,10>"] == 1382
    assert counts["<729,99|100|101>"] == 150
    with pytest.raises(KeyError):
        census_frequencies("0<d<10^5")


def test_corrigenda():
    entries = corrigenda()
    assert len(entries) == 8
    assert (entries[0]["value"], entries[0]["superseded"]) == (1382, 1386)


def test_canonical_vertex():
    assert canonical_vertex("<729,96>|<729,97/98>") == "<729,96>|<729,97|98>"
    assert canonical_vertex("W-#1;1") == "<729,57>-#1;1"
    assert canonical_vertex("order>=3^8") == "order>=3^8"


def test_verdict_table_and_json(records):
    verdicts = [identify(next(r for r in records if r.d == 214712))]
    table = verdict_table(verdicts)
    header, row = table.splitlines()
    assert header.split()[:3] == ["d", "type", "status"]
    assert row.split()[:5] == ["214712", "G.19", "PROVEN", "3", "<729,57>"]
    loaded = json.loads(verdict_json(verdicts))
    assert loaded[0]["towerGroup"] == ["<2187,311>"]
    assert report_verdicts([]) == ""
    with pytest.raises(ScopeError):
        report_verdicts(verdicts, "xml")


def test_tree_labels(group):
    report = grow_tree(TreeNode.root(group("9_2"), "<9,2>"), GrowthPolicy(max_lo=3))
    assert tree_labels(report) == {}
    report.node("<9,2>-#1;1").catalog_id = "<81,8>"
    assert tree_labels(report, "coclass1-md") == {"<9,2>-#1;1": "+32009"}
    assert "+32009" in report_tree(report, "dot", "coclass1-md")
    assert len(report_tree(report, "json").splitlines()) == 4
    with pytest.raises(ScopeError):
        report_tree(report, "svg")
