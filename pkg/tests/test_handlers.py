import json

import pytest

from command_handlers.responses import EXIT_INVALID, EXIT_OK, EXIT_UNRESOLVED
from main import build_parser, main

GROUND_STATE = '{"d": 32009, "kind": "real", "kappa": "2000", "tau1": "21,(1^2)^3", "provenance": "test"}\n'


def run(*argv):
    args = build_parser().parse_args(list(argv))
    result = args.handler(args)
    return result["exitCode"], json.loads(result["body"])


def test_classgroup():
    code, body = run("classgroup", "-4027")
    assert code == EXIT_OK
    assert body["structure"] == [3, 3]
    assert body["threeRank"] == 2


def test_classgroup_of_real_field_fails():
    code, body = run("classgroup", "5")
    assert code == EXIT_INVALID
    assert body["error"] == "ScopeError"


def test_group_show():
    code, body = run("group", "show", "<27,3>")
    assert code == EXIT_OK
    assert body["catalog"]["id"] == "<27,3>"
    assert body["computed"]["logOrder"] == 3
    assert body["computed"]["nilpotencyClass"] == 2


def test_group_pattern():
    code, body = run("group", "pattern", "<27,4>")
    assert code == EXIT_OK
    assert body["computed"]["kappaName"] == "A.1"
    assert body["computed"]["ipad"] == "[1^2;1^2,(2)^3]"


def test_group_without_presentation_answers_from_the_table():
    code, body = run("group", "show", "Q")
    assert code == EXIT_OK
    assert body["catalog"]["id"] == "<729,49>"
    assert body["computed"] is None


def test_group_from_file(fixture_dir):
    code, body = run("group", "show", "heisenberg", "--file", str(fixture_dir / "presentations" / "27_3.pc"))
    assert code == EXIT_OK
    assert body["name"] == "heisenberg"
    assert body["centerOrder"] == 3


def test_group_unknown_identifier():
    code, body = run("group", "show", "<27,99>")
    assert code == EXIT_INVALID
    assert body["error"] == "CatalogError"


def test_tree_grow_to_file(tmp_path):
    out = tmp_path / "tree.dot"
    code, body = run("tree", "grow", "<9,2>", "--max-lo", "3", "--format", "dot", "--output", str(out))
    assert code == EXIT_OK
    assert body["vertices"] == 4
    assert body["boundHit"]
    assert out.read_text(encoding="utf-8").startswith("digraph tree {")


def test_tree_grow_with_kernel_target():
    code, body = run("tree", "grow", "<9,2>", "--max-lo", "3", "--kappa", "1111")
    assert code == EXIT_OK
    assert body["matches"] == ["<9,2>-#1;2"]
    assert len(body["json"].splitlines()) == 3


def test_tree_grow_needs_a_presentation():
    code, body = run("tree", "grow", "<243,6>", "--max-lo", "6")
    assert code == EXIT_INVALID
    assert body["error"] == "ScopeError"


def test_identify_shipped_dataset_leaves_some_undecided():
    code, body = run("identify")
    assert code == EXIT_UNRESOLVED
    assert -91643 in body["undecided"]
    assert body["records"] == len(body["verdicts"])


def test_identify_decided_dataset(tmp_path):
    dataset = tmp_path / "fields.jsonl"
    dataset.write_text(GROUND_STATE, encoding="utf-8")
    out = tmp_path / "verdicts.txt"
    code, body = run("identify", str(dataset), "--format", "table", "--output", str(out))
    assert code == EXIT_OK
    assert body["undecided"] == []
    assert "<81,8>" in out.read_text(encoding="utf-8")


def test_identify_invalid_dataset(tmp_path):
    dataset = tmp_path / "fields.jsonl"
    dataset.write_text(GROUND_STATE + GROUND_STATE, encoding="utf-8")
    code, body = run("identify", str(dataset))
    assert code == EXIT_INVALID
    assert body["error"] == "DatasetError"
    assert "line 2" in body["detail"]


def test_distributions_with_census(tmp_path):
    dataset = tmp_path / "fields.jsonl"
    dataset.write_text(GROUND_STATE, encoding="utf-8")
    code, body = run("distributions", str(dataset), "--census", "0<d<10^9")
    assert code == EXIT_OK
    assert body["vertices"] == [{"vertex": "<81,8>", "md": 32009, "af": 1}]
    assert body["census"]["shares"]["21,(1^2)^3"] == 50.1


def test_report_dataset_is_canonical(tmp_path, fixture_dir):
    out = tmp_path / "fields.jsonl"
    code, _ = run("report", "dataset", "--output", str(out))
    assert code == EXIT_OK
    assert out.read_text(encoding="utf-8") == (fixture_dir / "fields.jsonl").read_text(encoding="utf-8")


def test_report_tree_defaults_to_dot():
    code, body = run("report", "tree", "--max-lo", "3")
    assert code == EXIT_OK
    assert body["dot"].startswith("digraph tree {")


def test_report_verdict_json(tmp_path):
    dataset = tmp_path / "fields.jsonl"
    dataset.write_text(GROUND_STATE, encoding="utf-8")
    code, body = run("report", "verdicts", "--dataset", str(dataset), "--format", "json")
    assert code == EXIT_OK
    assert json.loads(body["text"])[0]["towerGroup"] == ["<81,8>"]


def test_main_prints_body(capsys):
    assert main(["classgroup", "-23"]) == EXIT_OK
    printed = json.loads(capsys.readouterr().out)
    assert printed["h"] == 3


def test_main_writes_tables_raw(tmp_path, capsys):
    dataset = tmp_path / "fields.jsonl"
    dataset.write_text(GROUND_STATE, encoding="utf-8")
    assert main(["identify", str(dataset), "--format", "table"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("d ")
    assert "<81,8>" in out


def test_parser_rejects_unknown_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["frobnicate"])


def test_catalog_freeze_skips_stored_presentations(tmp_path):
    code, body = run("catalog", "freeze", "--max-lo", "3", "--output", str(tmp_path))
    assert code == EXIT_OK
    assert body["written"] == {}
    assert body["failed"] == {}
    assert body["directory"] == str(tmp_path)
