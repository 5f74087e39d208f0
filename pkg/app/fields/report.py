import json
import logging
from typing import Dict, Optional, Sequence

from app.criteria import Verdict
from app.errors import ScopeError
from app.pgen import GrowthReport, tree_dot, tree_json_lines

from .statistics import labels_for

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ("d", "type", "status", "length", "second group", "tower group")
FORMATS = ("table", "json", "dot")


def _length(v: Verdict) -> str:
    if v.length is not None:
        return str(v.length)
    if v.lengthAtLeast is not None:
        return f">={v.lengthAtLeast}"
    return "?"


def verdict_table(verdicts: Sequence[Verdict]) -> str:
    if not verdicts:
        return ""
    rows = [TABLE_COLUMNS] + [
        (str(v.d), v.typeName or "", v.status.value, _length(v), v.second_key or "-", v.tower_key or "-")
        for v in verdicts
    ]
    widths = [max(len(r[i]) for r in rows) for i in range(len(TABLE_COLUMNS))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def verdict_json(verdicts: Sequence[Verdict]) -> str:
    return json.dumps([v.model_dump(mode="json") for v in verdicts], indent=2, ensure_ascii=False) + "\n"


def report_verdicts(verdicts: Sequence[Verdict], fmt: str = "table") -> str:
    if fmt == "table":
        return verdict_table(verdicts)
    if fmt == "json":
        return verdict_json(verdicts)
    raise ScopeError(f"verdicts render as table or json, not {fmt!r}")


def tree_labels(report: GrowthReport, figure: Optional[str] = None) -> Dict[str, str]:
    """MD/AF annotations from a figure, keyed by vertex name."""
    if figure is None:
        return {}
    by_vertex = {}
    for label in labels_for(figure):
        parts = []
        if label.md is not None:
            parts.append(f"{label.md:+d}")
        if label.af is not None:
            parts.append(f"#{label.af}")
        by_vertex[label.vertex] = " ".join(parts)
    out = {}
    for node in report.nodes:
        if node.catalog_id in by_vertex:
            out[node.name] = by_vertex[node.catalog_id]
    logger.debug(f"{len(out)} of {len(by_vertex)} labels of {figure} placed on the tree")
    return out


def report_tree(report: GrowthReport, fmt: str = "dot", figure: Optional[str] = None) -> str:
    if fmt == "dot":
        return tree_dot(report, tree_labels(report, figure))
    if fmt == "json":
        return tree_json_lines(report)
    raise ScopeError(f"trees render as dot or json, not {fmt!r}")
