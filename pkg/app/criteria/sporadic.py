"""Identification flows for the sporadic kernel types H.4 and G.19."""
import logging
from collections import Counter
from typing import List

from app.abelian import parse_rows, render_row, render_rows
from app.errors import CriterionError
from app.transfer import canonical_tkt

from .rules import SporadicRule, load_rules
from .schema import SECOND_ORDER_MATCH, Certificate, Verdict, VerdictStatus
from .tower import as_rows

logger = logging.getLogger(__name__)

SPORADIC_TYPES = ("H.4", "G.19")
CLOSEST_LIMIT = 3


def _overlap(keys: List[str], rule: SporadicRule) -> int:
    theirs = Counter(render_row(r, False) for r in parse_rows(rule.rows))
    ours = Counter(keys)
    return sum((theirs & ours).values())


def _verdict(rule: SporadicRule, evidence: str, name: str) -> Verdict:
    certificates = [Certificate(criterion=SECOND_ORDER_MATCH, evidence=evidence)]
    verdict = Verdict(status=rule.status, criterion=f"{name} second-order rows", typeName=name,
                      secondGroup=[rule.second] if rule.second else [],
                      towerGroup=[rule.tower] if rule.tower else [],
                      length=rule.length, lengthAtLeast=rule.length_at_least,
                      lo=rule.lo, orderAtLeast=rule.order_at_least, certificates=certificates)
    if rule.status == VerdictStatus.LOWER_BOUND:
        verdict.notes.append(f"tower group of order at least 3^{rule.order_at_least}, "
                             f"length at least {rule.length_at_least}")
    if rule.status == VerdictStatus.CONJECTURAL:
        verdict.notes.append("tower group not proven unique")
    return verdict


def sporadic_verdict(kappa: str, rows=None, field_kind: str = "real") -> Verdict:
    name = canonical_tkt(kappa).name
    if name not in SPORADIC_TYPES:
        raise CriterionError(f"criterion inapplicable: kernel type {name} is not sporadic")
    criterion = f"{name} second-order rows"
    rules = load_rules().sporadic_for(name, field_kind)
    second = as_rows(rows)
    if not second:
        logger.warning(f"{name} pattern of a {field_kind} field lacks second-order rows")
        return Verdict(status=VerdictStatus.NEEDS_DATA, criterion=criterion, typeName=name,
                       missing="second-order rows (tau0H;tau1H) of the four maximal subgroups")

    has_tau2 = all(r[2] for r in second)
    flat = render_rows(second, with_tau2=False)
    for rule in rules:
        if rule.with_tau2 and has_tau2 and render_rows(second, with_tau2=True) == rule.rows:
            return _verdict(rule, rule.rows, name)
        if not rule.with_tau2 and flat == rule.rows:
            return _verdict(rule, flat, name)
    tau2_rules = [r for r in rules if r.with_tau2 and r.rows_without_tau2 == flat]
    if tau2_rules and not has_tau2:
        logger.warning(f"{name} pattern {flat} needs third-layer data to decide")
        return Verdict(status=VerdictStatus.NEEDS_DATA, criterion=criterion, typeName=name,
                       missing="third-layer components tau2H of the four maximal subgroups")

    keys = [render_row(r, False) for r in second]
    ranked = sorted(rules, key=lambda r: -_overlap(keys, r))[:CLOSEST_LIMIT]
    logger.info(f"No {name} rule matches {flat}")
    return Verdict(status=VerdictStatus.UNRESOLVED, criterion=criterion, typeName=name,
                   certificates=[Certificate(criterion="closest rows", evidence=r.rows) for r in ranked],
                   notes=[f"no fixture row matches {flat}"])

