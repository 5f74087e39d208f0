"""Tower-length criteria for kernel types of section a and the E-types.

Section a (at least three total kernels) always yields a two-stage tower,
so the metabelian contestants are the tower groups. For E.6/E.14 and E.8/E.9
the second-order components of the non-polarized extensions decide between
length 2 and length 3.
"""
import logging
from collections import Counter
from typing import List, Optional, Sequence, Union

from app.abelian import (AbelianType, Row, nearly_homocyclic, parse_rows, parse_types, render_row,
                         render_rows, render_type, render_types)
from app.catalog import CatalogEntry
from app.errors import CriterionError
from app.transfer import canonical_tkt, orbit_representative, total_kernel_count

from .classify import TREE_COCLASS1, classify_ipad
from .contestants import contestants, shafarevich_filter, unknown_relation_rank
from .rules import load_rules
from .schema import COVER_SINGLETON, SECOND_ORDER_MATCH, Certificate, Verdict, VerdictStatus

logger = logging.getLogger(__name__)

A3_STAR_TAU1 = "1^3,(1^2)^3"
E_TYPES = ("E.6", "E.14", "E.8", "E.9")

_T21 = AbelianType.of(2, 1)
_T111 = AbelianType.of(1, 1, 1)
_T211 = AbelianType.of(2, 1, 1)
_T31 = AbelianType.of(3, 1)


def as_types(value) -> List[AbelianType]:
    return parse_types(value) if isinstance(value, str) else list(value)


def as_rows(value) -> Optional[List[Row]]:
    if value is None:
        return None
    if isinstance(value, str):
        return parse_rows(value)
    out: List[Row] = []
    for item in value:
        out.extend(parse_rows(item) if isinstance(item, str) else [item])
    return out


def _batch_label(entries: Sequence[CatalogEntry]) -> str:
    names = sorted({e.type_name for e in entries if e.type_name})
    return "/".join(names)


def type_a_verdict(tau1: Union[str, Sequence[AbelianType]], kappa: Optional[str] = None,
                   rows=None, field_kind: str = "real", max_lo: Optional[int] = None) -> Verdict:
    ts = as_types(tau1)
    tau1_text = render_types(ts)
    if kappa is not None and total_kernel_count(kappa) < 3:
        raise CriterionError(f"criterion inapplicable: {kappa} has fewer than three total kernels")
    classification = classify_ipad(ts)
    on_coclass1 = any(r.tree == TREE_COCLASS1 for r in classification.readings)
    if not on_coclass1 and not any(a.r == 1 for a in classification.anomalies):
        raise CriterionError(f"criterion inapplicable: {tau1_text} is not a coclass-1 IPAD")

    found = contestants("1^2", ts, max_lo=max_lo, quadratic=True)
    pool = list(found.entries)
    certificates = [Certificate(criterion="contestants", evidence=", ".join(e.id for e in pool))]
    if kappa is not None:
        rep = orbit_representative(kappa)
        pool = [e for e in pool if orbit_representative(e.kappa) == rep]
        certificates.append(Certificate(criterion="kernel orbit", evidence=rep))
    second = as_rows(rows)
    if second is not None:
        wanted = render_rows(second, with_tau2=False)
        pool = [e for e in pool if e.second_order == wanted]
        certificates.append(Certificate(criterion="second-order rows", evidence=wanted))
    before = [e.id for e in pool]
    pool = shafarevich_filter(pool, field_kind)
    removed = [i for i in before if i not in {e.id for e in pool}]
    if removed:
        certificates.append(Certificate(criterion="relation rank", evidence=f"removed {', '.join(removed)}"))

    name = canonical_tkt(kappa).name if kappa is not None else _batch_label(pool)
    if tau1_text == A3_STAR_TAU1:
        name = "a.3*"
    notes = []
    unknown = unknown_relation_rank(pool)
    if unknown:
        notes.append(f"relation rank not tabulated for {', '.join(unknown)}")
    if not pool:
        logger.warning(f"No type a contestant left for tau1={tau1_text}, kappa={kappa}")
        return Verdict(status=VerdictStatus.UNRESOLVED, criterion="two-stage tower, section a", typeName=name,
                       length=2, certificates=certificates, notes=notes + ["no contestant survives"])

    ids = [e.id for e in pool]
    if len(pool) > 1:
        notes.append("second-order data cannot separate the batch")
    certificates.append(Certificate(
        criterion=COVER_SINGLETON,
        evidence=f"at least three total kernels: the cover of {' or '.join(ids)} is the group itself"))
    return Verdict(status=VerdictStatus.PROVEN, criterion="two-stage tower, section a", typeName=name,
                   secondGroup=ids, towerGroup=ids, length=2, lo=pool[0].lo if len(pool) == 1 else None,
                   certificates=certificates, notes=notes)


def _polarization(ts: List[AbelianType], rest_key: List[AbelianType]) -> Optional[AbelianType]:
    want = Counter(rest_key)
    for i, t in enumerate(ts):
        if t.rank == 2 and t == nearly_homocyclic(t.lo) and Counter(ts[:i] + ts[i + 1:]) == want:
            return t
    return None


def _decisive(row: Row, cover: AbelianType, two: AbelianType, three: AbelianType) -> Optional[int]:
    """2 or 3 when the row's first layer reads (A(3,c-1)xC3, (X)^3, ...); None otherwise."""
    tau1 = list(row[1])
    if cover not in tau1:
        return None
    tau1.remove(cover)
    counts = Counter(tau1)
    if counts[two] == 3:
        return 2
    if counts[three] == 3:
        return 3
    return None


def type_e_verdict(kappa: str, tau1: Union[str, Sequence[AbelianType]], rows=None,
                   field_kind: str = "real") -> Verdict:
    name = canonical_tkt(kappa).name
    if name not in E_TYPES:
        raise CriterionError(f"criterion inapplicable: kernel type {name} is not an E-type")
    ts = as_types(tau1)
    q_tree = name in ("E.6", "E.14")
    rest = [_T21, _T111, _T21] if q_tree else [_T21, _T21, _T21]
    polarized = _polarization(ts, rest)
    if polarized is None:
        raise CriterionError(f"criterion inapplicable: tau1={render_types(ts)} lacks the expected shape")
    c = polarized.lo
    if c < 4:
        raise CriterionError(f"criterion inapplicable: class {c} below 4")
    criterion = "E.6/E.14 tower length" if q_tree else "E.8/E.9 tower length"
    polar_cert = Certificate(criterion="polarization", evidence=f"A(3,{c})={render_type(polarized)}, c={c}")

    second = as_rows(rows)
    if second is None:
        logger.warning(f"{name} pattern with c={c} lacks second-order rows")
        return Verdict(status=VerdictStatus.NEEDS_DATA, criterion=criterion, typeName=name,
                       missing="second-order components tau1(L_j) of the non-polarized extensions",
                       certificates=[polar_cert])

    cover = nearly_homocyclic(c - 1).times_cyclic(1)
    pending = list(second)
    polar_row = next((r for r in pending if r[0] == polarized), None)
    if polar_row is None:
        raise CriterionError("criterion inapplicable: no second-order row for the polarized extension")
    pending.remove(polar_row)
    votes, decisive = set(), []
    for row in pending:
        if row[0] == _T111:
            vote = _decisive(row, cover, _T111, _T211)
        elif row[0] == _T21:
            vote = _decisive(row, cover, _T21, _T31)
        else:
            vote = None
        if vote is None:
            raise CriterionError(f"criterion inapplicable: row {render_row(row, False)} is not decisive")
        votes.add(vote)
        decisive.append(render_row(row, False))
    if len(votes) != 1:
        raise CriterionError("criterion inapplicable: decisive components are mixed")
    length = votes.pop()
    evidence = ",".join(sorted(decisive, reverse=True))

    rule = load_rules().type_e.get((name, c))
    lo_m = c + 2
    certificates = [polar_cert]
    notes = []
    if length == 2:
        certificates.append(Certificate(criterion=COVER_SINGLETON, evidence=evidence))
        ids = [rule.second] if rule else []
        verdict = Verdict(status=VerdictStatus.PROVEN, criterion=criterion, typeName=name,
                          secondGroup=ids, towerGroup=ids, length=2, lo=lo_m, certificates=certificates)
    else:
        certificates.append(Certificate(criterion=SECOND_ORDER_MATCH, evidence=evidence))
        verdict = Verdict(status=VerdictStatus.PROVEN, criterion=criterion, typeName=name,
                          secondGroup=[rule.second] if rule else [], towerGroup=[rule.tower] if rule else [],
                          length=3, lo=lo_m + 1, certificates=certificates)
    if rule is None:
        notes.append(f"identifiers are tabulated for classes 4 and 5 only; tower group has order 3^{verdict.lo}")
        verdict.notes = notes
    return verdict
