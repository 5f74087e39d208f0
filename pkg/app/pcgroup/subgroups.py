import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from app.abelian import AbelianType, DiagonalForm, IntMatrix, smith_form
from app.errors import ArtinError

from .presentation import Element, PcPresentation

logger = logging.getLogger(__name__)


class Subgroup:
    """Subgroup given by its canonical (fully reduced) induced pcgs.

    Each basis element has leading exponent 1 at its depth and exponent 0 at
    the depths of all other basis elements, which makes ``key`` unique per
    subgroup.
    """

    def __init__(self, group: PcPresentation, table: Dict[int, Element]):
        self.group = group
        self.depths: Tuple[int, ...] = tuple(sorted(table))
        self.basis: Tuple[Element, ...] = tuple(table[d] for d in self.depths)
        self.table = dict(table)

    @property
    def key(self) -> Tuple[Element, ...]:
        return self.basis

    @property
    def order(self) -> int:
        return self.group.p ** len(self.basis)

    @property
    def lo(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and other.group is self.group and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"<Subgroup of order {self.group.p}^{self.lo} depths={[d + 1 for d in self.depths]}>"

    def sift(self, x: Element) -> Element:
        g, p = self.group, self.group.p
        while any(x):
            d = g.depth(x)
            b = self.table.get(d)
            if b is None:
                return x
            x = g.mul(x, g.power(b, p - x[d]))
        return x

    def contains(self, x: Element) -> bool:
        return not any(self.sift(x))

    def is_subgroup_of(self, other: "Subgroup") -> bool:
        return all(other.contains(b) for b in self.basis)

    def exponents(self, x: Element) -> Tuple[int, ...]:
        """Exponents e with x = b_1^e_1 ... b_m^e_m in depth order."""
        g = self.group
        cur, out = x, []
        for d, b in zip(self.depths, self.basis):
            coef = cur[d]
            out.append(coef)
            if coef:
                cur = g.mul(g.power(b, -coef), cur)
        if any(cur):
            raise ArtinError(f"element {x} does not lie in {self!r}")
        return tuple(out)

    def element(self, exps: Sequence[int]) -> Element:
        g = self.group
        return g.product(*(g.power(b, e) for b, e in zip(self.basis, exps)))

    def elements(self):
        for exps in itertools.product(range(self.group.p), repeat=len(self.basis)):
            yield self.element(exps)

    def reduce(self, x: Element) -> Element:
        """Canonical representative of the coset x*N (right multiplication by N)."""
        g, p = self.group, self.group.p
        for d in self.depths:
            if x[d]:
                x = g.mul(x, g.power(self.table[d], p - x[d]))
        return x


def closure(group: PcPresentation, gens: Iterable[Element], seed: Optional[Subgroup] = None) -> Subgroup:
    """Subgroup generated by gens (and the seed's basis).

    Every new table element is closed under p-th powers and commutators with
    the rest of the table; the table is then fully reduced.
    """
    p = group.p
    table: Dict[int, Element] = dict(seed.table) if seed is not None else {}
    queue: List[Element] = [x for x in gens if any(x)]

    def sift(x: Element) -> Element:
        while any(x):
            d = group.depth(x)
            b = table.get(d)
            if b is None:
                return x
            x = group.mul(x, group.power(b, p - x[d]))
        return x

    while queue:
        x = sift(queue.pop())
        if not any(x):
            continue
        d = group.depth(x)
        x = group.power(x, pow(x[d], -1, p))
        others = list(table.values())
        table[d] = x
        queue.append(group.power(x, p))
        queue.extend(group.comm(x, b) for b in others)

    for d in sorted(table):
        b = table[d]
        for d2 in sorted(table):
            if d2 > d and b[d2]:
                b = group.mul(b, group.power(table[d2], p - b[d2]))
        table[d] = b
    return Subgroup(group, table)


def full_group(group: PcPresentation) -> Subgroup:
    return Subgroup(group, {i: group.generator(i) for i in range(group.n)})


def trivial_subgroup(group: PcPresentation) -> Subgroup:
    return Subgroup(group, {})


def normal_closure(group: PcPresentation, gens: Iterable[Element],
                   within: Optional[Subgroup] = None) -> Subgroup:
    """Normal closure of gens in ``within`` (the whole group by default)."""
    conjugators = list(within.basis) if within is not None else [group.generator(i) for i in range(group.n)]
    sub = closure(group, gens)
    while True:
        fresh = []
        for b in sub.basis:
            for c in conjugators:
                y = group.conj(b, c)
                if not sub.contains(y):
                    fresh.append(y)
        if not fresh:
            return sub
        sub = closure(group, fresh, seed=sub)


def commutator_subgroup(group: PcPresentation, a: Subgroup, b: Subgroup) -> Subgroup:
    """[A, B] for subgroups normal in the whole group."""
    gens = [group.comm(x, y) for x in a.basis for y in b.basis]
    return normal_closure(group, gens)


def derived_subgroup(group: PcPresentation, sub: Optional[Subgroup] = None) -> Subgroup:
    if sub is None:
        gens = [group.comm(group.generator(j), group.generator(i))
                for j in range(group.n) for i in range(j)]
        return normal_closure(group, gens)
    gens = [group.comm(x, y) for k, x in enumerate(sub.basis) for y in sub.basis[:k]]
    return normal_closure(group, gens, within=sub)


def lower_central(group: PcPresentation) -> List[Subgroup]:
    """gamma_1 = G, gamma_2, ... ending with the trivial subgroup."""
    whole = full_group(group)
    series = [whole]
    while series[-1].lo > 0:
        series.append(commutator_subgroup(group, series[-1], whole))
        if series[-1] == series[-2]:
            raise ArtinError(f"{group!r} is not nilpotent")
    return series


def nilpotency_class(group: PcPresentation) -> int:
    return len(lower_central(group)) - 1


def coclass(group: PcPresentation) -> int:
    return group.n - nilpotency_class(group)


def derived_series(group: PcPresentation) -> List[Subgroup]:
    series = [full_group(group)]
    while series[-1].lo > 0:
        series.append(derived_subgroup(group, series[-1]))
    return series


def derived_length(group: PcPresentation) -> int:
    return len(derived_series(group)) - 1


def center(group: PcPresentation) -> Subgroup:
    gens = [group.generator(i) for i in range(group.n)]
    central = [x for x in group.elements()
               if all(group.mul(x, g) == group.mul(g, x) for g in gens)]
    return closure(group, central)


def frattini_subgroup(group: PcPresentation) -> Subgroup:
    powers = [group.power(group.generator(i), group.p) for i in range(group.n)]
    return closure(group, powers, seed=derived_subgroup(group))


def minimal_generators(group: PcPresentation) -> List[int]:
    """Indices of pc-generators that generate the group (those outside Phi)."""
    phi = frattini_subgroup(group)
    return [i for i in range(group.n) if i not in phi.depths]


def lower_exponent_p_series(group: PcPresentation) -> List[Subgroup]:
    """P_0 = G, P_i = [P_(i-1), G] P_(i-1)^p, ending with the trivial subgroup."""
    terms = [full_group(group)]
    while terms[-1].lo > 0:
        prev = terms[-1]
        gens = [group.comm(x, group.generator(i)) for x in prev.basis for i in range(group.n)]
        gens += [group.power(x, group.p) for x in prev.basis]
        nxt = normal_closure(group, gens)
        if nxt == prev:
            raise ArtinError(f"{group!r} is not a p-group presentation")
        terms.append(nxt)
    return terms


def p_class(group: PcPresentation) -> int:
    return len(lower_exponent_p_series(group)) - 1


def lower_exponent_p_weights(group: PcPresentation) -> List[int]:
    """Weight w of g_i: largest w with g_i in P_{w-1}(G)."""
    terms = lower_exponent_p_series(group)
    weights = []
    for i in range(group.n):
        g = group.generator(i)
        weights.append(max(w for w, term in enumerate(terms[:-1], start=1) if term.contains(g)))
    return weights


def quotient(group: PcPresentation, normal: Subgroup,
             name: Optional[str] = None) -> Tuple[PcPresentation, Callable[[Element], Element]]:
    """G/N on the pc-generators outside the depths of N, with the projection."""
    free = [i for i in range(group.n) if i not in normal.depths]
    position = {i: a for a, i in enumerate(free)}

    def project(x: Element) -> Element:
        x = normal.reduce(x)
        return tuple(x[i] for i in free)

    powers = {position[i]: project(group.power_rhs.get(i, group.identity)) for i in free}
    comms = {(position[j], position[i]): project(group.comm_rhs.get((j, i), group.identity))
             for j in free for i in free if i < j}
    q = PcPresentation(group.p, len(free), powers, comms, name=name)
    return q, project


def subgroup_presentation(sub: Subgroup, name: Optional[str] = None
                          ) -> Tuple[PcPresentation, Callable[[Element], Element]]:
    """Presentation on the canonical basis of H, with the embedding into G."""
    group, p, m = sub.group, sub.group.p, len(sub.basis)
    powers = {a: sub.exponents(group.power(b, p)) for a, b in enumerate(sub.basis)}
    comms = {(c, a): sub.exponents(group.comm(sub.basis[c], sub.basis[a]))
             for c in range(m) for a in range(c)}
    pres = PcPresentation(p, m, powers, comms, name=name)
    return pres, sub.element


@dataclass
class AbelianQuotient:
    """H/N for N containing H', with coordinates of elements of H."""

    sub: Subgroup
    normal: Subgroup
    form: DiagonalForm
    type: AbelianType

    def coordinates(self, x: Element) -> Tuple[int, ...]:
        return self.form.coordinates(self.sub.exponents(x))

    @property
    def moduli(self) -> Tuple[int, ...]:
        return tuple(d for d in self.form.diagonal if d != 1)


def abelian_quotient(sub: Subgroup, normal: Optional[Subgroup] = None) -> AbelianQuotient:
    group, p, m = sub.group, sub.group.p, len(sub.basis)
    if normal is None:
        normal = derived_subgroup(group, sub)
    rows: List[List[int]] = []
    for a, b in enumerate(sub.basis):
        row = [-e for e in sub.exponents(group.power(b, p))]
        row[a] += p
        rows.append(row)
    for c in range(m):
        for a in range(c):
            rows.append(list(sub.exponents(group.comm(sub.basis[c], sub.basis[a]))))
    for x in normal.basis:
        rows.append(list(sub.exponents(x)))
    form = smith_form(IntMatrix.from_rows(rows, m))
    exps = []
    for d in form.diagonal:
        e = 0
        while d % p == 0 and d > 1:
            d //= p
            e += 1
        exps.append(e)
    return AbelianQuotient(sub, normal, form, AbelianType(tuple(exps), p))


def abelianization(group: PcPresentation) -> AbelianType:
    return abelian_quotient(full_group(group), derived_subgroup(group)).type
