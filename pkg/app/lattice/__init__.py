from .service import Layer, layers, intermediate_subgroups, image_in_abelianization
from .subspaces import rref_subspaces, row_reduce, rank_mod_p, gaussian_binomial

__all__ = [
    "Layer",
    "layers",
    "intermediate_subgroups",
    "image_in_abelianization",
    "rref_subspaces",
    "row_reduce",
    "rank_mod_p",
    "gaussian_binomial",
]
