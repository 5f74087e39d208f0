from .presentation import PcPresentation, Element
from .subgroups import (Subgroup, AbelianQuotient, closure, full_group, trivial_subgroup,
                        normal_closure, commutator_subgroup, derived_subgroup, lower_central,
                        nilpotency_class, coclass, derived_series, derived_length, center,
                        frattini_subgroup, minimal_generators, lower_exponent_p_weights,
                        lower_exponent_p_series, p_class, quotient,
                        subgroup_presentation, abelian_quotient, abelianization)
from .text_format import parse_presentation, format_presentation, load_presentation
from .defect import defect
from .schema import GroupSummary
from .service import describe_group

__all__ = [
    "PcPresentation",
    "Element",
    "Subgroup",
    "AbelianQuotient",
    "closure",
    "full_group",
    "trivial_subgroup",
    "normal_closure",
    "commutator_subgroup",
    "derived_subgroup",
    "lower_central",
    "nilpotency_class",
    "coclass",
    "derived_series",
    "derived_length",
    "center",
    "frattini_subgroup",
    "minimal_generators",
    "lower_exponent_p_weights",
    "lower_exponent_p_series",
    "p_class",
    "quotient",
    "subgroup_presentation",
    "abelian_quotient",
    "abelianization",
    "parse_presentation",
    "format_presentation",
    "load_presentation",
    "defect",
    "GroupSummary",
    "describe_group",
]
