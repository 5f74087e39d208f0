"""Reading class, defect and coclass back from a first-layer IPAD.

A regular IPAD is (A(3,c-k), A(3,r+1), T3, T4) in some order. The pair
(T3, T4) tells the coclass-2 trees apart and is (1^3,1^3) from coclass 3 on.
"""
import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Sequence, Union

from app.abelian import AbelianType, nearly_homocyclic, parse_types, render_types
from app.config import get_settings

logger = logging.getLogger(__name__)

TREE_COCLASS1 = "coclass1"
TREE_U = "<243,8>"
TREE_Q = "<243,6>"
TREE_3 = "<243,3>"
TREE_HIGHER = "coclass>=3"

_E3 = AbelianType.of(1, 1, 1)


@dataclass(frozen=True)
class IpadReading:
    c_minus_k: int
    r: int
    tree: str
    polarized: AbelianType

    def class_defect_pairs(self) -> List[tuple]:
        """(c, k) candidates; a defect of 1 needs class at least 4."""
        n = self.c_minus_k
        pairs = [(n, 0)]
        if n + 1 >= 4:
            pairs.append((n + 1, 1))
        return pairs


@dataclass(frozen=True)
class Anomaly:
    tau1: str
    groups: tuple
    c: int
    r: int


@dataclass
class IpadClassification:
    tau1: str
    readings: List[IpadReading] = field(default_factory=list)
    anomalies: List[Anomaly] = field(default_factory=list)

    @property
    def malformed(self) -> bool:
        return not self.readings and not self.anomalies

    @property
    def coclasses(self) -> List[int]:
        return sorted({x.r for x in self.readings} | {a.r for a in self.anomalies})


@lru_cache(maxsize=1)
def load_anomalies() -> List[Anomaly]:
    path = get_settings().fixture_dir / "anomalies.json"
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    out = [Anomaly(tau1=render_types(parse_types(a["tau1"])), groups=tuple(a["groups"]), c=a["c"], r=a["r"])
           for a in data["anomalies"]]
    logger.debug(f"Loaded {len(out)} anomalous IPADs covering {sum(len(a.groups) for a in out)} groups")
    return out


def _key(ts: Sequence[AbelianType]) -> List[tuple]:
    return sorted(t.exponents for t in ts)


def _tree_of(rest: List[AbelianType]) -> List[tuple]:
    """(r, tree) readings for the three non-polarized components."""
    out = []
    for i, co in enumerate(rest):
        if co.rank != 2 or co != nearly_homocyclic(co.lo) or co.lo < 2:
            continue
        r = co.lo - 1
        t3t4 = _key(rest[:i] + rest[i + 1:])
        if r == 1 and t3t4 == _key([co, co]):
            out.append((1, TREE_COCLASS1))
        elif r == 2 and t3t4 == _key([co, co]):
            out.append((2, TREE_U))
        elif r == 2 and t3t4 == _key([_E3, co]):
            out.append((2, TREE_Q))
        elif r == 2 and t3t4 == _key([_E3, _E3]):
            out.append((2, TREE_3))
        elif r >= 3 and t3t4 == _key([_E3, _E3]):
            out.append((r, TREE_HIGHER))
    return out


def classify_ipad(tau1: Union[str, Sequence[AbelianType]]) -> IpadClassification:
    ts = parse_types(tau1) if isinstance(tau1, str) else list(tau1)
    text = render_types(ts)
    result = IpadClassification(tau1=text)
    result.anomalies = [a for a in load_anomalies() if a.tau1 == text]
    if len(ts) != 4:
        return result

    seen = set()
    for i, pol in enumerate(ts):
        n = pol.lo
        if n < 2 or pol != nearly_homocyclic(n):
            continue
        for r, tree in _tree_of(ts[:i] + ts[i + 1:]):
            reading = IpadReading(c_minus_k=n, r=r, tree=tree, polarized=pol)
            if reading not in seen:
                seen.add(reading)
                result.readings.append(reading)
    result.readings.sort(key=lambda x: (x.c_minus_k, x.r, x.tree))
    if result.malformed:
        logger.debug(f"IPAD {text} is malformed")
    return result
