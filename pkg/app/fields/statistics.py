"""Minimal-discriminant and frequency maps over tree vertices."""
import json
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Union

from app.abelian import canonical_types
from app.catalog import load_catalog
from app.config import get_settings
from app.criteria import Verdict

from .schema import DistributionLevel, DistributionReport, FieldKind, FieldRecord, VertexStatistics

logger = logging.getLogger(__name__)

_BATCH_SPLIT = re.compile(r"\|(?=<|[A-Za-z])")


@dataclass(frozen=True)
class FigureLabel:
    figure: str
    vertex: str
    md: Optional[int]
    af: Optional[int]
    share: Optional[float]
    range: str
    note: Optional[str] = None


def canonical_vertex(text: str) -> str:
    """Identifier batch joined by | in canonical form; order bounds pass through."""
    if text.startswith("order"):
        return text
    catalog = load_catalog()
    return "|".join(str(catalog.parse(part)) for part in _BATCH_SPLIT.split(text))


def distributions(records: Sequence[FieldRecord], verdicts: Sequence[Verdict],
                  level: Union[str, DistributionLevel] = DistributionLevel.TOWER,
                  kind: Optional[Union[str, FieldKind]] = None) -> DistributionReport:
    level = DistributionLevel(level)
    kind = FieldKind(kind) if kind is not None else None
    by_d = {v.d: v for v in verdicts}
    md: Dict[str, int] = {}
    af: Dict[str, int] = {}
    for record in records:
        if kind is not None and record.kind != kind:
            continue
        verdict = by_d.get(record.d)
        if verdict is None:
            continue
        key = verdict.second_key if level == DistributionLevel.SECOND else verdict.tower_key
        if not key:
            continue
        af[key] = af.get(key, 0) + 1
        if key not in md or abs(record.d) < abs(md[key]):
            md[key] = record.d
    total = sum(af.values())
    vertices = [VertexStatistics(vertex=k, md=md[k], af=af[k]) for k in sorted(af, key=lambda k: (abs(md[k]), k))]
    shares = {k: round(100.0 * af[k] / total, 1) for k in af}
    logger.info(f"Distribution over {len(vertices)} {level.value} vertices from {total} fields")
    return DistributionReport(level=level, vertices=vertices, shares=shares)


@lru_cache(maxsize=1)
def _census() -> dict:
    with open(get_settings().fixture_dir / "census.json", encoding="utf-8") as fh:
        return json.load(fh)


def _census_range(range_name: str) -> dict:
    for block in _census()["ranges"]:
        if block["range"] == range_name:
            return block
    raise KeyError(f"no census for range {range_name!r}")


def census_frequencies(range_name: str = "0<d<10^9") -> Dict[str, int]:
    """Absolute frequency per vertex batch, keyed like the distribution maps."""
    block = _census_range(range_name)
    return {"|".join(canonical_vertex(v) for v in item["vertices"]): item["count"] for item in block["ipads"]}


def census_shares(range_name: str = "0<d<10^9") -> Dict[str, float]:
    """Percentage of each first-layer IPAD among all fields of the range."""
    block = _census_range(range_name)
    total = block["total"]
    return {canonical_types(item["tau1"]): round(100.0 * item["count"] / total, 1) for item in block["ipads"]}


def corrigenda() -> List[dict]:
    return list(_census()["corrigenda"])


@lru_cache(maxsize=1)
def figure_labels() -> List[FigureLabel]:
    with open(get_settings().fixture_dir / "figures.json", encoding="utf-8") as fh:
        data = json.load(fh)
    return [FigureLabel(figure=item["figure"], vertex=canonical_vertex(item["vertex"]), md=item.get("md"),
                        af=item.get("af"), share=item.get("share"), range=item["range"], note=item.get("note"))
            for item in data["labels"]]


def labels_for(figure: str) -> List[FigureLabel]:
    return [label for label in figure_labels() if label.figure == figure]
