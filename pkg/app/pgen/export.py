"""Tree dumps: JSON lines (one vertex per line) and DOT text."""
import json
import logging
from typing import Dict, List, Optional

import networkx as nx

from .schema import TreeNodeRecord
from .tree import GrowthReport

logger = logging.getLogger(__name__)


def node_records(report: GrowthReport) -> List[TreeNodeRecord]:
    out = []
    for node in report.nodes:
        fp = node.fingerprint
        out.append(TreeNodeRecord(
            id=node.name,
            parent=node.parent.name if node.parent is not None else None,
            step=node.step,
            ordinal=node.ordinal,
            lo=fp.lo,
            nilpotencyClass=fp.nilpotency_class,
            coclass=fp.coclass,
            centerLo=fp.center_lo,
            tau0=fp.tau0,
            tau1=fp.tau1,
            kappa=fp.kappa,
            secondOrder=fp.second_order,
            catalogId=node.catalog_id,
        ))
    return out


def tree_json_lines(report: GrowthReport) -> str:
    lines = [json.dumps(r.model_dump(), ensure_ascii=False) for r in node_records(report)]
    return "\n".join(lines) + ("\n" if lines else "")


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def tree_dot(report: GrowthReport, labels: Optional[Dict[str, str]] = None) -> str:
    """DOT digraph with one rank per order, kernel types boxed under each vertex."""
    labels = labels or {}
    graph = report.graph
    p = report.root.group.p
    by_lo: Dict[int, List[str]] = {}
    for name in nx.topological_sort(graph):
        by_lo.setdefault(graph.nodes[name]["node"].lo, []).append(name)

    out = ["digraph tree {", "  rankdir=TB;", "  node [shape=circle, label=\"\"];"]
    for lo in sorted(by_lo):
        out.append(f"  order_{lo} [shape=plaintext, label={_quote(f'{p}^{lo}')}];")
    for lo_a, lo_b in zip(sorted(by_lo), sorted(by_lo)[1:]):
        out.append(f"  order_{lo_a} -> order_{lo_b} [style=invis];")
    for lo in sorted(by_lo):
        names = " ".join(_quote(n) for n in by_lo[lo])
        out.append(f"  {{ rank=same; order_{lo}; {names} }}")
        for name in by_lo[lo]:
            node = graph.nodes[name]["node"]
            parts = [node.catalog_id or name]
            if node.fingerprint.kappa:
                parts.append(f"[{node.fingerprint.kappa}]")
            if name in labels:
                parts.append(labels[name])
            shape = "box" if node.fingerprint.kappa else "circle"
            out.append(f"  {_quote(name)} [shape={shape}, xlabel={_quote(' '.join(parts))}];")
    for a, b, data in graph.edges(data=True):
        style = "solid" if data.get("step", 1) == 1 else "dashed"
        out.append(f"  {_quote(a)} -> {_quote(b)} [style={style}];")
    out.append("}")
    logger.debug(f"DOT for {graph.number_of_nodes()} vertices")
    return "\n".join(out) + "\n"
