import logging
from dataclasses import dataclass
from math import isqrt
from typing import Dict, List, Set, Tuple

from sympy import factorint, multiplicity

from app.abelian import AbelianType
from app.config import get_settings
from app.errors import ScopeError

from .forms import QuadForm
from .schema import ClassGroupModel

logger = logging.getLogger(__name__)


def _squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(abs(n)).values())


def is_fundamental(d: int) -> bool:
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return _squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def reduced_forms(d: int) -> List[QuadForm]:
    """All primitive reduced forms of discriminant d < 0, ordered by (a, b)."""
    if d >= 0:
        raise ScopeError(f"reduced forms need a negative discriminant, got {d}")
    forms = []
    for a in range(1, isqrt(-d // 3) + 1):
        start = -a + 1
        if (start - d) % 2:
            start += 1
        for b in range(start, a + 1, 2):
            if (b * b - d) % (4 * a):
                continue
            f = QuadForm.from_ab(a, b, d)
            if f.c >= a and f.is_reduced and f.is_primitive:
                forms.append(f)
    return forms


@dataclass
class ClassGroup:
    d: int
    h: int
    structure: Tuple[int, ...]
    p_part: AbelianType
    forms: List[QuadForm]

    @property
    def three_rank(self) -> int:
        return self.p_part.rank

    def to_model(self) -> ClassGroupModel:
        return ClassGroupModel(d=self.d, h=self.h, structure=list(self.structure),
                               pPart=list(self.p_part.exponents), threeRank=self.three_rank)


def _order(f: QuadForm, p: int) -> int:
    """Exponent e with f^(p^e) trivial; f must lie in the p-Sylow subgroup."""
    e = 0
    while not f.is_identity:
        f, e = f.power(p), e + 1
    return e


def _sylow_exponents(forms: List[QuadForm], h: int, p: int, e: int) -> Tuple[int, ...]:
    cofactor = h // p ** e
    sylow: Set[QuadForm] = {f.power(cofactor) for f in forms}
    orders = [_order(f, p) for f in sylow]
    # |S[p^i]| / |S[p^(i-1)]| = p^(number of invariants >= p^i)
    at_least: Dict[int, int] = {}
    previous = 1
    for i in range(1, e + 1):
        count = sum(1 for o in orders if o <= i)
        at_least[i] = multiplicity(p, count // previous)
        previous = count
    exponents = []
    for i in range(e, 0, -1):
        exponents.extend([i] * (at_least[i] - at_least.get(i + 1, 0)))
    return tuple(exponents)


def class_group(d: int, p: int = 3) -> ClassGroup:
    if d >= 0:
        raise ScopeError(f"class groups of real quadratic fields are not supported, got d={d}")
    if not is_fundamental(d):
        raise ScopeError(f"{d} is not a fundamental discriminant")
    bound = get_settings().classgroup_bound
    if -d > bound:
        raise ScopeError(f"|d|={-d} exceeds the enumeration bound {bound}")

    forms = reduced_forms(d)
    h = len(forms)
    sylows = {q: _sylow_exponents(forms, h, q, e) for q, e in factorint(h).items()}
    width = max((len(x) for x in sylows.values()), default=0)
    structure = []
    for i in range(width):
        factor = 1
        for q, exps in sylows.items():
            if i < len(exps):
                factor *= q ** exps[i]
        structure.append(factor)
    p_part = AbelianType(sylows.get(p, ()), p)
    logger.info(f"Class group of discriminant {d}: h={h}, structure={structure}, {p}-part {p_part}")
    return ClassGroup(d=d, h=h, structure=tuple(structure), p_part=p_part, forms=forms)


def three_rank(d: int) -> int:
    return class_group(d).three_rank
