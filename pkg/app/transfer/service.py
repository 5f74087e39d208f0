import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from app.abelian import AbelianType, render_ipad, render_multilayer, render_types
from app.abelian.notation import Row
from app.errors import ScopeError
from app.lattice import Layer, intermediate_subgroups, layers, row_reduce
from app.pcgroup import Element, PcPresentation, Subgroup, abelian_quotient, derived_subgroup

from .kernel_types import KernelCode

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def _right_coset_key(sub: Subgroup, x: Element) -> Element:
    """Canonical representative of H*x: left multiplication clears the depths of H."""
    g, p = sub.group, sub.group.p
    for d in sub.depths:
        if x[d]:
            x = g.mul(g.power(sub.table[d], p - x[d]), x)
    return x


def default_transversal(sub: Subgroup) -> List[Element]:
    """Elements supported off the depths of H; one per right coset."""
    g = sub.group
    free = [i for i in range(g.n) if i not in sub.depths]
    out = []
    for exps in itertools.product(range(g.p), repeat=len(free)):
        x = [0] * g.n
        for pos, e in zip(free, exps):
            x[pos] = e
        out.append(tuple(x))
    return out


@dataclass
class TransferMatrix:
    """The Artin transfer G/G' -> H/H' in coordinates.

    ``rows[a]`` is the image of the lift of the a-th basis vector of G/G',
    written in the invariant basis of H/H' with entries modulo ``moduli``.
    """

    subgroup: Subgroup
    target: AbelianType
    moduli: Tuple[int, ...]
    rows: List[Vector]
    p: int

    def image(self, vector: Sequence[int]) -> Vector:
        out = [0] * len(self.moduli)
        for coef, row in zip(vector, self.rows):
            for i, m in enumerate(self.moduli):
                out[i] = (out[i] + coef * row[i]) % m
        return tuple(out)

    def kernel(self) -> Tuple[Vector, ...]:
        vectors = [v for v in itertools.product(range(self.p), repeat=len(self.rows))
                   if not any(self.image(v))]
        return tuple(tuple(r) for r in row_reduce(vectors, self.p))

    @property
    def kernel_dimension(self) -> int:
        return len(self.kernel())


def artin_transfer(group: PcPresentation, sub: Subgroup,
                   transversal: Optional[Sequence[Element]] = None,
                   derived: Optional[Subgroup] = None) -> TransferMatrix:
    """Transfer from G to H/H' by the transversal product formula.

    For a right transversal r_1..r_m and g in G, r_i g = h_i r_j with h_i in H;
    the image of g is the product of the h_i taken in H/H'.
    """
    derived = derived if derived is not None else derived_subgroup(group)
    if not derived.is_subgroup_of(sub):
        raise ScopeError(f"{sub!r} does not contain the commutator subgroup of {group!r}")
    target = abelian_quotient(sub)
    reps = list(transversal) if transversal is not None else default_transversal(sub)
    index = group.p ** (group.n - sub.lo)
    lookup: Dict[Element, int] = {}
    for i, r in enumerate(reps):
        lookup[_right_coset_key(sub, r)] = i
    if len(reps) != index or len(lookup) != index:
        raise ScopeError(f"{len(reps)} elements do not form a right transversal of {sub!r}")
    inverses = [group.inverse(r) for r in reps]
    moduli = target.moduli

    def image(g: Element) -> Vector:
        total = [0] * len(moduli)
        for r in reps:
            y = group.mul(r, g)
            j = lookup[_right_coset_key(sub, y)]
            h = group.mul(y, inverses[j])
            for i, c in enumerate(target.coordinates(h)):
                total[i] = (total[i] + c) % moduli[i]
        return tuple(total)

    free = [i for i in range(group.n) if i not in derived.depths]
    rows = [image(group.generator(i)) for i in free]
    return TransferMatrix(subgroup=sub, target=target.type, moduli=moduli, rows=rows, p=group.p)


@dataclass
class ArtinPattern:
    """Restricted Artin pattern with the optional second-order data."""

    ttt: List[List[AbelianType]]
    tkt: List[List[KernelCode]]
    second_order: List[Row] = field(default_factory=list)

    @property
    def tau0(self) -> AbelianType:
        return self.ttt[0][0]

    @property
    def tau1(self) -> List[AbelianType]:
        return self.ttt[1]

    @property
    def kappa1(self) -> List[int]:
        return [k.value for k in self.tkt[1]]

    def ipad_text(self) -> str:
        return render_ipad(self.tau0, self.tau1)

    def second_order_text(self, with_tau2: bool = True) -> str:
        return render_multilayer(self.tau0, self.second_order, with_tau2)


def kappa_string(codes: Sequence[KernelCode]) -> str:
    if any(k.value > 9 for k in codes):
        raise ScopeError("kernel codes above 9 have no digit string")
    return "".join(str(k.value) for k in codes)


class TransferService:
    """Artin transfers of one group, with its layers computed once."""

    def __init__(self, group: PcPresentation):
        self.group = group
        self.derived = derived_subgroup(group)
        self._layers: Optional[List[Layer]] = None
        self._abelian_cache: Dict[tuple, AbelianType] = {}

    @property
    def layers(self) -> List[Layer]:
        if self._layers is None:
            self._layers = layers(self.group)
        return self._layers

    @property
    def rank(self) -> int:
        return len(self.layers) - 1

    def _abelian_type(self, sub: Subgroup) -> AbelianType:
        cached = self._abelian_cache.get(sub.key)
        if cached is None:
            cached = abelian_quotient(sub).type
            self._abelian_cache[sub.key] = cached
        return cached

    def transfer(self, sub: Subgroup, transversal: Optional[Sequence[Element]] = None) -> TransferMatrix:
        return artin_transfer(self.group, sub, transversal, derived=self.derived)

    def kernel_code(self, sub: Subgroup) -> KernelCode:
        kernel = self.transfer(sub).kernel()
        rho = self.rank
        if len(kernel) == rho:
            return KernelCode(value=0, layer=0, subgroup=kernel)
        n = rho - len(kernel)
        position = self.layers[n].images.index(kernel) + 1
        return KernelCode(value=position, layer=n, subgroup=kernel)

    def tkt(self, n: int) -> List[KernelCode]:
        return [self.kernel_code(h) for h in self._layer(n).subgroups]

    def ttt(self, n: int) -> List[AbelianType]:
        return [self._abelian_type(h) for h in self._layer(n).subgroups]

    def _layer(self, n: int) -> Layer:
        if not 0 <= n <= self.rank:
            raise ScopeError(f"layer {n} outside 0..{self.rank} for {self.group!r}")
        return self.layers[n]

    def ipad(self) -> Tuple[AbelianType, List[AbelianType]]:
        return self.ttt(0)[0], self.ttt(1)

    def ipod(self) -> List[int]:
        return [k.value for k in self.tkt(1)]

    def second_order_row(self, sub: Subgroup, with_tau2: bool = False) -> Row:
        sub_derived = derived_subgroup(self.group, sub)
        tau0 = self._abelian_type(sub)
        tau1 = [self._abelian_type(u) for u in intermediate_subgroups(sub, 1, sub_derived)]
        tau2: List[AbelianType] = []
        if with_tau2:
            tau2 = [self._abelian_type(u) for u in intermediate_subgroups(sub, 2, sub_derived)]
        return tau0, tau1, tau2

    def iterated_ipad2(self) -> Tuple[AbelianType, List[Row]]:
        return self.ttt(0)[0], [self.second_order_row(h) for h in self._layer(1).subgroups]

    def multilayer_ipad2(self) -> Tuple[AbelianType, List[Row]]:
        return self.ttt(0)[0], [self.second_order_row(h, True) for h in self._layer(1).subgroups]

    def pattern(self, second_order: bool = False, with_tau2: bool = False) -> ArtinPattern:
        ttt = [self.ttt(n) for n in range(self.rank + 1)]
        tkt = [self.tkt(n) for n in range(self.rank + 1)]
        rows: List[Row] = []
        if second_order:
            rows = [self.second_order_row(h, with_tau2) for h in self._layer(1).subgroups]
        logger.debug(f"{self.group!r}: tau1={render_types(ttt[1]) if len(ttt) > 1 else '-'}")
        return ArtinPattern(ttt=ttt, tkt=tkt, second_order=rows)


def tkt(group: PcPresentation, n: int) -> List[KernelCode]:
    return TransferService(group).tkt(n)


def ttt(group: PcPresentation, n: int) -> List[AbelianType]:
    return TransferService(group).ttt(n)


def ipad(group: PcPresentation) -> Tuple[AbelianType, List[AbelianType]]:
    return TransferService(group).ipad()


def ipod(group: PcPresentation) -> List[int]:
    return TransferService(group).ipod()


def iterated_ipad2(group: PcPresentation) -> Tuple[AbelianType, List[Row]]:
    return TransferService(group).iterated_ipad2()


def multilayer_ipad2(group: PcPresentation) -> Tuple[AbelianType, List[Row]]:
    return TransferService(group).multilayer_ipad2()


def compute_pattern(group: PcPresentation, second_order: bool = True,
                    with_tau2: bool = False) -> ArtinPattern:
    return TransferService(group).pattern(second_order=second_order, with_tau2=with_tau2)


def bottom_kernel_is_total(group: PcPresentation) -> bool:
    """Transfer to G' kills all of G/G'."""
    svc = TransferService(group)
    return svc.transfer(svc.derived).kernel_dimension == svc.rank


def kernel_rank(group: PcPresentation, sub: Subgroup) -> int:
    return artin_transfer(group, sub).kernel_dimension


__all__ = [
    "TransferMatrix", "ArtinPattern", "TransferService", "artin_transfer", "default_transversal",
    "tkt", "ttt", "ipad", "ipod", "iterated_ipad2", "multilayer_ipad2", "compute_pattern",
    "kappa_string", "bottom_kernel_is_total", "kernel_rank",
]
