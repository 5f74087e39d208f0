"""Closed-form second-order IPADs on the coclass-2 trees rooted in <243,6> and <243,8>.

With n = c - 1 - k - t the polarized extension carries
(A(3,c-k-t); A(3,n)xC3, (B(3,n)xC3)^3) and every other extension carries
A(3,n)xC3 beside three components fixed by the tree.
"""
from typing import List, Tuple

from app.abelian import AbelianType, Row, nearly_homocyclic, variant_b
from app.errors import ScopeError

from .classify import TREE_Q, TREE_U

TREE_ALIASES = {"Q": TREE_Q, TREE_Q: TREE_Q, "U": TREE_U, TREE_U: TREE_U}

_T12 = AbelianType.of(1, 1)
_T21 = AbelianType.of(2, 1)
_T111 = AbelianType.of(1, 1, 1)


def parametrized_ipad2(tree: str, c: int, t: int = 0, k: int = 0) -> Tuple[AbelianType, List[Row]]:
    """Predicted (tau0, rows) of a vertex of class c, defect k and branch parameter t."""
    if tree not in TREE_ALIASES:
        raise ScopeError(f"no closed form for tree {tree!r}; use Q or U")
    if t not in (0, 1) or k not in (0, 1):
        raise ScopeError(f"parameters t and k must be 0 or 1, got t={t}, k={k}")
    n = c - 1 - k - t
    if n < 2:
        raise ScopeError(f"class {c} with t={t}, k={k} is below the range of the formula")

    common = nearly_homocyclic(n).times_cyclic(1)
    polarized: Row = (nearly_homocyclic(c - k - t), [common] + [variant_b(n).times_cyclic(1)] * 3, [])
    plain: Row = (_T21, [common] + [_T21] * 3, [])
    if TREE_ALIASES[tree] == TREE_Q:
        rows = [polarized, plain, (_T111, [common] + [_T111] * 3 + [_T12] * 9, []), plain]
    else:
        rows = [polarized, plain, plain, plain]
    return _T12, rows
