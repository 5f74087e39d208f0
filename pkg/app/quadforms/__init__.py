from .forms import QuadForm
from .schema import ClassGroupModel
from .service import ClassGroup, class_group, is_fundamental, reduced_forms, three_rank

__all__ = [
    "QuadForm",
    "ClassGroupModel",
    "ClassGroup",
    "class_group",
    "is_fundamental",
    "reduced_forms",
    "three_rank",
]
