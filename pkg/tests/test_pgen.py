import json
from dataclasses import replace

import pytest

from app.abelian import parse_types
from app.catalog import check_entry
from app.errors import ScopeError
from app.pcgroup import minimal_generators
from app.pgen import (GrowthPolicy, TargetPattern, descendants, find_isomorphism, grow_tree,
                      mainline_of, node_records, p_cover, path_names, relation_rank, sibling_batches,
                      tree_dot, tree_json_lines, word_program)


def test_relation_ranks(group):
    assert relation_rank(group("9_2")) == 3
    assert relation_rank(group("27_3")) == 4


def test_cover_of_elementary_abelian(group):
    cov = p_cover(group("9_2"))
    assert cov.multiplicator_rank == 3
    assert cov.nuclear_rank == 3
    assert cov.cover.order == 3 ** 5


def test_isomorphism_search(group):
    assert find_isomorphism(group("27_3"), group("27_3"), 1000).isomorphic
    assert not find_isomorphism(group("27_3"), group("27_4"), 1000).isomorphic
    assert not find_isomorphism(group("9_2"), group("27_3"), 1000).isomorphic


def test_step_one_descendants_of_order_nine(root):
    children = descendants(root, 1, iso_limit=1000)
    assert [c.name for c in children] == ["<9,2>-#1;1", "<9,2>-#1;2", "<9,2>-#1;3"]
    assert [c.fingerprint.tau0 for c in children] == ["1^2", "1^2", "21"]
    assert [c.fingerprint.coclass for c in children] == [1, 1, 2]
    assert children[0].fingerprint.tau1 == "(1^2)^4"
    assert children[1].fingerprint.kappa == "1111"
    assert children[2].pattern is None
    assert all(c.parent is root and c.step == 1 for c in children)


def test_step_size_out_of_range(root):
    with pytest.raises(ScopeError):
        descendants(root, 4)


def test_sibling_batches_split_distinct_patterns(root):
    batches = sibling_batches(descendants(root, 1, iso_limit=1000))
    assert sorted(len(b) for b in batches) == [1, 1, 1]


def test_grow_tree_to_order_27(root):
    report = grow_tree(root, GrowthPolicy(max_lo=3))
    assert len(report.nodes) == 4
    assert report.nodes[0] is root
    assert report.graph.number_of_edges() == 3
    assert report.pruned == 0
    assert report.bound_hit
    assert "<9,2>-#1;1" in {n.name for n in report.frontier}


def test_grow_tree_prunes_by_target(root):
    target = TargetPattern(kappa="1111")
    report = grow_tree(root, GrowthPolicy(max_lo=3, target=target))
    assert [n.name for n in report.matches] == ["<9,2>-#1;2"]
    assert report.matches[0].lo == 3
    assert report.pruned == 1
    assert len(report.nodes) == 3


def test_target_pattern_on_first_layer(root):
    target = TargetPattern(tau1=parse_types("(1^2)^4"))
    children = descendants(root, 1, iso_limit=1000)
    assert [target.matches(c) for c in children] == [True, False, False]
    assert TargetPattern().matches(children[2])


def test_growth_policy_defaults_from_settings(settings_env):
    settings_env(max_lo=5)
    assert GrowthPolicy().max_lo == 5


def test_mainline_of_coclass_one_tree(root):
    path = mainline_of(root, 1)
    assert path_names(path) == ["<9,2>", "<9,2>-#1;1"]


def test_json_lines_export(root):
    report = grow_tree(root, GrowthPolicy(max_lo=3))
    lines = tree_json_lines(report).splitlines()
    assert len(lines) == 4
    first = json.loads(lines[0])
    assert first["id"] == "<9,2>"
    assert first["parent"] is None
    by_id = {json.loads(line)["id"]: json.loads(line) for line in lines}
    child = by_id["<9,2>-#1;2"]
    assert child["parent"] == "<9,2>"
    assert child["lo"] == 3
    records = {r.id: r for r in node_records(report)}
    assert records["<9,2>-#1;2"].kappa == "1111"
    assert child["kappa"] == "1111"


def test_dot_export(root):
    report = grow_tree(root, GrowthPolicy(max_lo=3))
    dot = tree_dot(report, {"<9,2>-#1;1": "mainline"})
    assert dot.startswith("digraph tree {")
    assert 'order_3 [shape=plaintext, label="3^3"];' in dot
    assert '"<9,2>" -> "<9,2>-#1;2" [style=solid];' in dot
    assert "mainline" in dot
    assert dot.rstrip().endswith("}")


@pytest.mark.parametrize("stem", ["27_3", "27_4"])
def test_word_program_reproduces_pc_generators(group, stem):
    g = group(stem)
    gens = minimal_generators(g)
    program = word_program(g, gens)
    assert program.evaluate(g, [g.generator(k) for k in gens]) == [g.generator(i) for i in range(g.n)]


def test_isomorphism_search_with_generators_of_order_nine(product_243):
    result = find_isomorphism(product_243, product_243, 10000)
    assert result.isomorphic
    assert not result.exhausted


def test_grow_tree_keeps_nodes_with_cut_step_sizes_live(root):
    assert root.nuclear_rank > 1
    report = grow_tree(root, GrowthPolicy(max_lo=3))
    assert "<9,2>" in {n.name for n in report.frontier}

    only_step_two = grow_tree(root, GrowthPolicy(max_lo=3, step_filter=frozenset({2})))
    assert len(only_step_two.nodes) == 1
    assert only_step_two.bound_hit
    assert [n.name for n in only_step_two.frontier] == ["<9,2>"]


@pytest.mark.slow
def test_descendants_of_the_mainline_vertex_of_order_81(root, catalog):
    node = mainline_of(root, 2)[-1]
    assert check_entry(replace(catalog.resolve("<81,9>"), presentation=node.group)) == []
    assert relation_rank(node.group) == 4

    children = [c for c in descendants(node, 1) if c.fingerprint.coclass == 1]
    assert len(children) == 6
    assert not any(c.iso_unresolved for c in children)
    for entry_id, count in (("<243,25>", 1), ("<243,26>", 1), ("<243,27>", 1), ("<243,28|29|30>", 3)):
        entry = catalog.resolve(entry_id)
        matching = [c for c in children if check_entry(replace(entry, presentation=c.group)) == []]
        assert len(matching) == count, entry_id
