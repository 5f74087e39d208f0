import logging
from typing import List, Optional

from app.abelian import AbelianType, nearly_homocyclic
from app.errors import DefectError

from .presentation import PcPresentation
from .subgroups import abelian_quotient, center, lower_central, trivial_subgroup

logger = logging.getLogger(__name__)


def _first_layer_types(group: PcPresentation) -> List[AbelianType]:
    from app.lattice import layers

    return [abelian_quotient(h).type for h in layers(group)[1].subgroups]


def _polarized_defect(tau1: List[AbelianType], c: int) -> Optional[int]:
    top = max(t.lo for t in tau1)
    if sum(1 for t in tau1 if t.lo == top) != 1:
        return None
    polar = next(t for t in tau1 if t.lo == top)
    fits = [k for k in (0, 1) if c - k >= 0 and nearly_homocyclic(c - k, polar.p) == polar]
    return fits[0] if len(fits) == 1 else None


def defect(group: PcPresentation, tau1: Optional[List[AbelianType]] = None) -> int:
    """Defect of commutativity k in {0, 1}.

    Class <= 2 gives 0. On coclass 1 the polarized component of tau1 must equal
    A(p, c-k). On coclass 2 a bicyclic centre (p,p) gives 0 and a cyclic centre
    of order p gives 1; where the polarization reading also applies, both must
    agree.
    """
    series = lower_central(group)
    c = len(series) - 1
    r = group.n - c
    if c <= 2:
        return 0
    if tau1 is None:
        tau1 = _first_layer_types(group)
    polar = _polarized_defect(tau1, c)

    if r == 1:
        if polar is None:
            raise DefectError(f"{group!r}: polarized component does not fit A(p,c-k) for c={c}")
        return polar

    if r == 2:
        z = _center_type(group)
        if z == AbelianType((1, 1), group.p):
            k = 0
        elif z == AbelianType((1,), group.p):
            k = 1
        else:
            raise DefectError(f"{group!r}: centre of type {z} characterizes no defect")
        if polar is not None and polar != k:
            raise DefectError(f"{group!r}: centre gives k={k} but polarization gives k={polar}")
        return k

    raise DefectError(f"{group!r}: no characterization of the defect for coclass {r}")


def _center_type(group: PcPresentation) -> AbelianType:
    z = center(group)
    return abelian_quotient(z, trivial_subgroup(group)).type
