import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List, Sequence, Tuple, Union

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbelianType:
    """Abelian p-group given by the logarithms of its cyclic factors.

    ``AbelianType((2, 1))`` is C9 x C3 for p=3. Exponents are stored
    non-increasing with no zeros, so the trivial group is the empty tuple.
    """

    exponents: Tuple[int, ...] = ()
    p: int = 3

    def __post_init__(self):
        exps = tuple(sorted((int(e) for e in self.exponents if int(e) != 0), reverse=True))
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in abelian type {self.exponents}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def of(cls, *exponents: int, p: int = 3) -> "AbelianType":
        return cls(tuple(exponents), p)

    @classmethod
    def trivial(cls, p: int = 3) -> "AbelianType":
        return cls((), p)

    @property
    def lo(self) -> int:
        return sum(self.exponents)

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def order(self) -> int:
        return self.p ** self.lo

    @property
    def invariants(self) -> Tuple[int, ...]:
        return tuple(self.p ** e for e in self.exponents)

    @property
    def is_trivial(self) -> bool:
        return not self.exponents

    @property
    def is_elementary(self) -> bool:
        return all(e == 1 for e in self.exponents)

    def times_cyclic(self, e: int = 1) -> "AbelianType":
        """Direct product with a cyclic group of order p^e."""
        return AbelianType(self.exponents + (e,), self.p)

    def sort_key(self) -> Tuple[int, int, Tuple[int, ...]]:
        return (self.lo, self.rank, self.exponents)

    def __str__(self) -> str:
        from .notation import render_type

        return render_type(self)


class TypeOrdering(str, Enum):
    ORDERED = "ordered"
    ACCUMULATED = "accumulated"


Accumulated = List[Tuple[AbelianType, int]]


def nearly_homocyclic(n: int, p: int = 3) -> AbelianType:
    """A(p,n): order p^n with invariants (q+r, q) for n = 2q + r."""
    if n < 0:
        raise ValueError(f"nearly homocyclic order must be non-negative, got {n}")
    q, r = divmod(n, 2)
    return AbelianType((q + r, q), p)


def variant_b(n: int, p: int = 3) -> AbelianType:
    """B(p,n): cyclic for n=2, (m+1,m) for n=2m+1, (m+2,m) for n=2m+2."""
    if n < 2:
        raise ValueError(f"variant B needs n >= 2, got {n}")
    if n == 2:
        return AbelianType((2,), p)
    m, r = divmod(n - 1, 2)
    if r == 0:
        return AbelianType((m + 1, m), p)
    return AbelianType((m + 2, m), p)


def _descending(ts: Iterable[AbelianType]) -> List[AbelianType]:
    return sorted(ts, key=lambda t: t.sort_key(), reverse=True)


def order_types(ts: Sequence[AbelianType], mode: Union[TypeOrdering, str] = TypeOrdering.ORDERED
                ) -> Union[List[AbelianType], Accumulated]:
    mode = TypeOrdering(mode)
    if mode is TypeOrdering.ACCUMULATED:
        counts = Counter(ts)
        return [(t, counts[t]) for t in _descending(counts)]

    if not ts:
        return []
    top = max(t.lo for t in ts)
    polar_index = next(i for i, t in enumerate(ts) if t.lo == top)
    rest = [t for i, t in enumerate(ts) if i != polar_index]
    return [ts[polar_index]] + _descending(rest)


def accumulate(ts: Sequence[AbelianType]) -> Accumulated:
    return order_types(ts, TypeOrdering.ACCUMULATED)


def expand(acc: Accumulated) -> List[AbelianType]:
    out: List[AbelianType] = []
    for t, k in acc:
        out.extend([t] * k)
    return out
