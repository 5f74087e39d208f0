from .types import (AbelianType, TypeOrdering, nearly_homocyclic, variant_b, order_types,
                    accumulate, expand)
from .smith import IntMatrix, DiagonalForm, smith_form, smith_invariants
from .notation import (parse_type, render_type, parse_types, render_types, parse_ipad, render_ipad,
                       parse_row, render_row, parse_rows, render_rows, parse_multilayer,
                       render_multilayer, canonical_types, canonical_rows, Row)

__all__ = [
    "AbelianType",
    "TypeOrdering",
    "nearly_homocyclic",
    "variant_b",
    "order_types",
    "accumulate",
    "expand",
    "IntMatrix",
    "DiagonalForm",
    "smith_form",
    "smith_invariants",
    "parse_type",
    "render_type",
    "parse_types",
    "render_types",
    "parse_ipad",
    "render_ipad",
    "parse_row",
    "render_row",
    "parse_rows",
    "render_rows",
    "parse_multilayer",
    "render_multilayer",
    "canonical_types",
    "canonical_rows",
    "Row",
]
