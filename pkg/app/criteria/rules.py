import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from app.abelian import canonical_rows
from app.catalog import load_catalog
from app.config import get_settings

from .schema import VerdictStatus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SporadicRule:
    type_name: str
    kind: str
    rows: str
    with_tau2: bool
    status: VerdictStatus
    second: Optional[str] = None
    tower: Optional[str] = None
    length: Optional[int] = None
    length_at_least: Optional[int] = None
    lo: Optional[int] = None
    order_at_least: Optional[int] = None

    @property
    def rows_without_tau2(self) -> str:
        return canonical_rows(self.rows, with_tau2=False)


@dataclass(frozen=True)
class TypeERule:
    type_name: str
    c: int
    second: str
    tower: str


@dataclass(frozen=True)
class RuleBook:
    sporadic: Tuple[SporadicRule, ...]
    type_e: Dict[Tuple[str, int], TypeERule]

    def sporadic_for(self, type_name: str, kind: str) -> List[SporadicRule]:
        return [r for r in self.sporadic if r.type_name == type_name and r.kind == kind]


@lru_cache(maxsize=1)
def load_rules() -> RuleBook:
    path = get_settings().fixture_dir / "rules.json"
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    catalog = load_catalog()

    def ident(text: Optional[str]) -> Optional[str]:
        return str(catalog.parse(text)) if text else None

    sporadic = tuple(SporadicRule(
        type_name=r["type"],
        kind=r["kind"],
        rows=canonical_rows(r["rows"], with_tau2=r["withTau2"]),
        with_tau2=r["withTau2"],
        status=VerdictStatus(r["status"]),
        second=ident(r.get("second")),
        tower=ident(r.get("tower")),
        length=r.get("length"),
        length_at_least=r.get("lengthAtLeast"),
        lo=r.get("lo") or (catalog.parse(r["tower"]).lo if r.get("tower") else None),
        order_at_least=r.get("orderAtLeast"),
    ) for r in data["sporadic"])
    type_e = {(r["type"], r["c"]): TypeERule(type_name=r["type"], c=r["c"], second=ident(r["second"]),
                                              tower=ident(r["tower"]))
              for r in data["typeE"]}
    logger.debug(f"Loaded {len(sporadic)} sporadic rules and {len(type_e)} E-type identifiers from {path}")
    return RuleBook(sporadic=sporadic, type_e=type_e)
