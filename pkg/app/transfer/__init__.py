from .kernel_types import (KernelCode, NamedType, canonical_tkt, orbit, orbit_representative,
                           named_types, type_names, representative_of, same_orbit,
                           total_kernel_count, UNNAMED)
from .service import (TransferMatrix, ArtinPattern, TransferService, artin_transfer,
                      default_transversal, tkt, ttt, ipad, ipod, iterated_ipad2, multilayer_ipad2,
                      compute_pattern, kappa_string, bottom_kernel_is_total, kernel_rank)
from .schema import ArtinPatternModel, LayerData
from .export import pattern_model

__all__ = [
    "KernelCode",
    "NamedType",
    "canonical_tkt",
    "orbit",
    "orbit_representative",
    "named_types",
    "type_names",
    "representative_of",
    "same_orbit",
    "total_kernel_count",
    "UNNAMED",
    "TransferMatrix",
    "ArtinPattern",
    "TransferService",
    "artin_transfer",
    "default_transversal",
    "tkt",
    "ttt",
    "ipad",
    "ipod",
    "iterated_ipad2",
    "multilayer_ipad2",
    "compute_pattern",
    "kappa_string",
    "bottom_kernel_is_total",
    "kernel_rank",
    "ArtinPatternModel",
    "LayerData",
    "pattern_model",
]
