import json
import logging
from dataclasses import dataclass, replace
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

from app.abelian import (AbelianType, canonical_rows, parse_rows, render_multilayer, render_rows,
                         render_types)
from app.config import MAX_LO_CEILING, get_settings
from app.errors import AmbiguousMatchError, CatalogError
from app.pcgroup import PcPresentation, format_presentation, load_presentation
from app.pgen import GrowthPolicy, TargetPattern, TreeNode, descendants, grow_tree, relation_rank
from app.transfer import TransferService, canonical_tkt, kappa_string, orbit_representative

from .ids import Identifier, expand_aliases, parse_identifier
from .schema import CatalogEntryModel, Provenance

logger = logging.getLogger(__name__)

TAU0 = "1^2"
# tabulated groups up to this order carry a frozen presentation
FROZEN_MAX_LO = 8
PRESENTATION_DIR = "presentations"


@dataclass
class CatalogEntry:
    """One transcribed table row, optionally backed by a stored presentation."""

    id: str
    identifier: Identifier
    lo: int
    table: str
    kappa: str
    rows: Optional[str]
    source: str
    type_name: Optional[str] = None
    provenance: Provenance = Provenance.PAPER
    presentation: Optional[PcPresentation] = None
    mainline: bool = False
    relation_rank: Optional[int] = None
    metabelianization: Optional[str] = None
    note: Optional[str] = None

    @property
    def verifiable(self) -> bool:
        return self.presentation is not None

    @property
    def is_batch(self) -> bool:
        return self.identifier.is_batch

    @property
    def expected_pattern(self) -> Optional[str]:
        if self.rows is None:
            return None
        return f"[{TAU0};{self.rows}]"

    @property
    def second_order(self) -> str:
        """Rows without their third component."""
        return canonical_rows(self.rows, with_tau2=False) if self.rows else ""

    @property
    def tau1(self) -> List[AbelianType]:
        return [row[0] for row in parse_rows(self.rows)] if self.rows else []

    @property
    def tau1_text(self) -> str:
        return render_types(self.tau1)

    @property
    def d2(self) -> Optional[int]:
        """Relation rank, from the table or computed from the presentation."""
        if self.relation_rank is None and self.presentation is not None:
            self.relation_rank = relation_rank(self.presentation)
        return self.relation_rank

    def contains(self, ident: Identifier) -> bool:
        mine = self.identifier
        if mine.steps or ident.steps:
            return str(mine) == str(ident) or str(ident) in {str(m) for m in mine.members()}
        return mine.order == ident.order and set(ident.counters) <= set(mine.counters)

    def to_model(self) -> CatalogEntryModel:
        return CatalogEntryModel(
            id=self.id,
            lo=self.lo,
            table=self.table,
            typeName=self.type_name,
            kappa=self.kappa,
            tau1=self.tau1_text,
            expectedPattern=self.expected_pattern or "",
            provenance=self.provenance,
            verifiable=self.verifiable,
            mainline=self.mainline,
            relationRank=self.relation_rank,
            metabelianization=self.metabelianization,
            source=self.source,
            note=self.note,
        )


def check_entry(entry: CatalogEntry) -> List[str]:
    """Compare the computed pattern of a backed entry with its transcription."""
    if entry.presentation is None or entry.rows is None:
        return []
    problems = []
    group = entry.presentation
    if group.n != entry.lo:
        problems.append(f"{entry.id}: order 3^{group.n}, table says 3^{entry.lo}")
    svc = TransferService(group)
    tau0, rows = svc.multilayer_ipad2()
    computed = render_multilayer(tau0, rows, with_tau2=True)
    if computed != entry.expected_pattern:
        problems.append(f"{entry.id}: pattern {computed} != {entry.expected_pattern}")
    kappa = kappa_string(svc.tkt(1))
    if orbit_representative(kappa) != orbit_representative(entry.kappa):
        problems.append(f"{entry.id}: kernel type {kappa} not in the orbit of {entry.kappa}")
    return problems


class Catalog:
    """Read-only view over the fixture tables."""

    def __init__(self, entries: List[CatalogEntry], aliases: Dict[str, str],
                 relative: Dict[str, str]):
        self.entries = entries
        self.aliases = aliases
        self.relative = relative
        self._by_id = {e.id: e for e in entries}

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def get(self, text: str) -> Optional[CatalogEntry]:
        return self._by_id.get(str(self.parse(text)))

    def parse(self, text: str) -> Identifier:
        return parse_identifier(text, self.aliases)

    def table(self, name: str) -> List[CatalogEntry]:
        return [e for e in self.entries if e.table == name]

    def containing(self, ident: Identifier) -> List[CatalogEntry]:
        return [e for e in self.entries if e.contains(ident)]

    def self_check(self) -> List[str]:
        offenders = []
        for entry in self.entries:
            offenders.extend(check_entry(entry))
        return offenders

    def resolve(self, text: str, expected: Optional[str] = None) -> CatalogEntry:
        ident = self.parse(text)
        key = str(ident)
        if key in self._by_id:
            return self._by_id[key]
        if key in self.relative:
            return self.resolve(self.relative[key], expected)

        found = self.containing(ident)
        if len(found) == 1:
            return found[0]
        if len(found) > 1:
            raise AmbiguousMatchError(f"{key} spans several entries", found)
        if not ident.is_relative:
            raise CatalogError("unknown identifier", [text])
        return self._grow_relative(ident, expected)

    def _grow_relative(self, ident: Identifier, expected: Optional[str]) -> CatalogEntry:
        base = self.resolve(str(ident.head))
        if base.presentation is None:
            raise CatalogError(f"ancestor {base.id} has no stored presentation; materialize it first",
                               [str(ident)])
        node = TreeNode.root(base.presentation, name=base.id)
        for depth, (s, ordinals) in enumerate(ident.steps):
            last = depth == len(ident.steps) - 1
            children = descendants(node, s)
            if last and expected is not None:
                picked = [c for c in children if _matches_rows(c, expected)]
            else:
                picked = [c for c in children if c.ordinal in ordinals]
            if not picked:
                raise CatalogError("no descendant matches", [str(ident)])
            if not last:
                if len(picked) > 1:
                    raise CatalogError("cannot grow below a sibling batch", [str(ident)])
                node = picked[0]
                continue
            entries = [_derived_entry(ident if len(picked) == 1 else ident.parent.child(s, (c.ordinal,)),
                                      c, matched=expected is not None) for c in picked]
            if len(entries) > 1:
                raise AmbiguousMatchError(f"{ident} matches a sibling batch", entries)
            return entries[0]
        raise CatalogError("unknown identifier", [str(ident)])

    def materialize(self, entry: CatalogEntry) -> CatalogEntry:
        """Grow from <9,2> to the entry's order and bind the first vertex that reproduces its rows."""
        if entry.verifiable:
            return entry
        if entry.rows is None:
            raise CatalogError("entry has no pattern to search for", [entry.id])
        root = self.resolve("<9,2>")
        target = TargetPattern(tau1=entry.tau1, kappa=entry.kappa,
                               second_order=parse_rows(entry.rows))
        report = grow_tree(root.presentation, GrowthPolicy(max_lo=entry.lo, target=target))
        found = [n for n in report.matches if n.lo == entry.lo]
        if not found:
            raise CatalogError("no vertex of the grown tree matches", [entry.id])
        problems: List[str] = []
        for node in found:
            note = f"presentation grown as {node.name}"
            if len(found) > 1:
                note += f"; {len(found)} vertices share the pattern"
            bound = replace(entry, presentation=node.group, note=note)
            problems = check_entry(bound)
            if not problems:
                node.catalog_id = entry.id
                logger.info(f"Materialized {entry.id} as {node.name}")
                return bound
        raise CatalogError("materialized vertex disagrees with the table", problems)


def _matches_rows(node: TreeNode, expected: str) -> bool:
    rows = parse_rows(expected)
    if any(r[2] for r in rows):
        _, computed = TransferService(node.group).multilayer_ipad2()
        return render_rows(computed, True) == render_rows(rows, True)
    return node.fingerprint.second_order == render_rows(rows, False)


def _derived_entry(ident: Identifier, node: TreeNode, matched: bool) -> CatalogEntry:
    _, rows = TransferService(node.group).multilayer_ipad2()
    kappa = node.fingerprint.kappa
    name = canonical_tkt(kappa).name if len(kappa) == 4 and kappa.isdigit() else None
    how = "matched by pattern" if matched else "picked by local sibling ordinal"
    node.catalog_id = str(ident)
    return CatalogEntry(
        id=str(ident),
        identifier=ident,
        lo=node.lo,
        table="derived",
        kappa=kappa,
        rows=render_rows(rows, True),
        source=f"grown from {node.path()[0].name}",
        type_name=name,
        provenance=Provenance.DERIVED,
        presentation=node.group,
        note=f"{how} as {node.name}",
    )


def _read_json(path: Path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _table_rows(data: dict):
    for table, block in data["tables"].items():
        for row in block["rows"]:
            yield table, block["title"], row
    block = data.get("towerGroups")
    if block:
        for row in block["rows"]:
            yield "towerGroups", block["title"], row


def presentation_stem(ident: Identifier) -> str:
    """File stem of a frozen presentation, e.g. 243_28_29_30 for <243,28|29|30>."""
    return "_".join(str(x) for x in (ident.order, *ident.counters))


def freeze_presentations(catalog: Catalog, out_dir: Path,
                         max_lo: int = FROZEN_MAX_LO) -> Tuple[Dict[str, str], Dict[str, str]]:
    """Materialize every tabulated entry up to 3^max_lo and write its presentation.

    Returns the written file names and the entries that could not be bound,
    both keyed by entry id.
    """
    out_dir.mkdir(parents=True, exist_ok=True)
    written: Dict[str, str] = {}
    failed: Dict[str, str] = {}
    for entry in catalog:
        if entry.verifiable or entry.rows is None or entry.lo > max_lo or entry.identifier.is_relative:
            continue
        try:
            bound = catalog.materialize(entry)
        except CatalogError as e:
            logger.warning(f"Could not freeze {entry.id}: {e}")
            failed[entry.id] = str(e)
            continue
        path = out_dir / f"{presentation_stem(entry.identifier)}.pc"
        path.write_text(f"# {entry.id}, {bound.note}\n{format_presentation(bound.presentation)}",
                        encoding="utf-8")
        written[entry.id] = path.name
    logger.info(f"Froze {len(written)} presentations into {out_dir}, {len(failed)} failed")
    return written, failed


def build_catalog(fixture_dir: Path) -> Catalog:
    data = _read_json(fixture_dir / "tables.json")
    aliases = data.get("aliases", {})
    parsed = [(table, title, row, parse_identifier(row["id"], aliases))
              for table, title, row in _table_rows(data)]
    texts = {str(ident): row.get("rows") for _, _, row, ident in parsed}

    entries = []
    for table, title, row, ident in parsed:
        rows = row.get("rows")
        if rows is None and "like" in row:
            like = str(parse_identifier(row["like"], aliases))
            rows = texts.get(like)
            if rows is None:
                raise CatalogError("row refers to an unknown pattern", [f"{ident} like {row['like']}"])
        presentation = None
        named = row.get("presentation")
        stored = fixture_dir / PRESENTATION_DIR / (named or f"{presentation_stem(ident)}.pc")
        if named and not stored.exists():
            raise CatalogError("presentation file missing", [f"{ident}: {named}"])
        if not ident.is_relative and stored.exists():
            presentation = load_presentation(stored, name=str(ident))
        note = None
        if row["lo"] > MAX_LO_CEILING:
            note = "pattern stub beyond the supported order"
        entries.append(CatalogEntry(
            id=str(ident),
            identifier=ident,
            lo=row["lo"],
            table=table,
            kappa=row["kappa"],
            rows=canonical_rows(rows, with_tau2=True) if rows else None,
            source=title,
            type_name=row.get("type"),
            presentation=presentation,
            mainline=bool(row.get("mainline", False)),
            relation_rank=row.get("relationRank"),
            metabelianization=(str(parse_identifier(row["metabelianization"], aliases))
                               if row.get("metabelianization") else None),
            note=note,
        ))

    relative = {str(parse_identifier(k, aliases)): str(parse_identifier(v, aliases))
                for k, v in data.get("relative", {}).items()}
    catalog = Catalog(entries, expand_aliases(aliases), relative)
    offenders = catalog.self_check()
    if offenders:
        raise CatalogError("catalog self-check failed", offenders)
    unfrozen = [e.id for e in catalog if e.lo <= FROZEN_MAX_LO and e.rows and not e.verifiable
                and not e.identifier.is_relative]
    if unfrozen:
        logger.warning(f"{len(unfrozen)} entries up to order 3^{FROZEN_MAX_LO} have no frozen presentation "
                       f"and are checked only when materialized: {', '.join(unfrozen)}")
    return catalog


@lru_cache(maxsize=1)
def load_catalog() -> Catalog:
    fixture_dir = get_settings().fixture_dir
    catalog = build_catalog(fixture_dir)
    checked = sum(1 for e in catalog if e.verifiable)
    logger.info(f"Loaded {len(catalog)} catalog entries from {fixture_dir} ({checked} self-checked)")
    return catalog


def resolve(text: str, expected: Optional[str] = None) -> CatalogEntry:
    return load_catalog().resolve(text, expected)


def materialize(entry: CatalogEntry) -> CatalogEntry:
    return load_catalog().materialize(entry)
