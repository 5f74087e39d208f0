from .ids import Identifier, parse_identifier, canonical_id, expand_aliases
from .schema import CatalogEntryModel, Provenance
from .service import (FROZEN_MAX_LO, PRESENTATION_DIR, Catalog, CatalogEntry, build_catalog, check_entry,
                      freeze_presentations, load_catalog, materialize, presentation_stem, resolve)

__all__ = [
    "Identifier",
    "parse_identifier",
    "canonical_id",
    "expand_aliases",
    "CatalogEntryModel",
    "Provenance",
    "Catalog",
    "CatalogEntry",
    "build_catalog",
    "check_entry",
    "load_catalog",
    "materialize",
    "resolve",
    "freeze_presentations",
    "presentation_stem",
    "FROZEN_MAX_LO",
    "PRESENTATION_DIR",
]
