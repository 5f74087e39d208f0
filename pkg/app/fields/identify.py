"""Dispatch of field records to the tower criteria by kernel orbit."""
import logging
from typing import List, Optional, Sequence

from app.abelian import canonical_types, render_rows
from app.catalog import load_catalog
from app.criteria import (E_TYPES, SPORADIC_TYPES, Certificate, Verdict, VerdictStatus, as_rows,
                          sporadic_verdict, type_a_verdict, type_e_verdict)
from app.criteria.contestants import PATTERN_TABLES
from app.errors import CriterionError
from app.transfer import canonical_tkt, orbit_representative, total_kernel_count

from .schema import FieldRecord

logger = logging.getLogger(__name__)

SECTION_A_KERNELS = 3


def _pattern_lookup(record: FieldRecord, reason: Optional[str] = None) -> Verdict:
    """Catalog rows sharing the record's pattern; the length stays open."""
    name = canonical_tkt(record.kappa).name if record.kappa else None
    tau1 = canonical_types(record.tau1) if record.tau1 else None
    rows = as_rows(record.secondOrder)
    flat = render_rows(rows, with_tau2=False) if rows else None
    matches = []
    for entry in load_catalog():
        if entry.table not in PATTERN_TABLES or not entry.rows:
            continue
        if tau1 and entry.tau1_text != tau1:
            continue
        if record.kappa and orbit_representative(entry.kappa) != orbit_representative(record.kappa):
            continue
        if flat and entry.second_order != flat:
            continue
        matches.append(entry.id)
    notes = [reason] if reason else []
    if not matches:
        notes.append("no catalog row shares the pattern")
    return Verdict(status=VerdictStatus.UNRESOLVED, criterion="catalog pattern lookup", typeName=name,
                   secondGroup=matches, certificates=[Certificate(criterion="catalog pattern", evidence=tau1 or "")],
                   notes=notes)


def identify(record: FieldRecord) -> Verdict:
    kind = record.kind.value
    name = canonical_tkt(record.kappa).name if record.kappa else None
    try:
        if record.tau1 is None and (name in E_TYPES or total_kernel_count(record.kappa) >= SECTION_A_KERNELS):
            verdict = Verdict(status=VerdictStatus.NEEDS_DATA, criterion="tower length", typeName=name,
                              missing="first-layer IPAD tau1")
        elif record.kappa is None or total_kernel_count(record.kappa) >= SECTION_A_KERNELS:
            verdict = type_a_verdict(record.tau1, kappa=record.kappa, rows=record.secondOrder, field_kind=kind)
        elif name in E_TYPES:
            verdict = type_e_verdict(record.kappa, record.tau1, rows=record.secondOrder, field_kind=kind)
        elif name in SPORADIC_TYPES:
            verdict = sporadic_verdict(record.kappa, rows=record.secondOrder, field_kind=kind)
        else:
            verdict = _pattern_lookup(record, f"no tower criterion for type {name}")
    except CriterionError as e:
        logger.info(f"d={record.d}: {e}")
        verdict = _pattern_lookup(record, str(e))
    verdict.d = record.d
    return verdict


def identify_all(records: Sequence[FieldRecord]) -> List[Verdict]:
    ordered = sorted(records, key=lambda r: (abs(r.d), r.d))
    verdicts = [identify(r) for r in ordered]
    unresolved = sum(1 for v in verdicts if v.status in (VerdictStatus.UNRESOLVED, VerdictStatus.NEEDS_DATA))
    logger.info(f"Identification finished: {len(verdicts)} records, {unresolved} without a decision")
    return verdicts
