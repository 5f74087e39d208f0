"""Isomorphism test for small p-groups by generator-image search.

A homomorphism out of A is fixed by the images of a minimal generating set.
The pc-generators of A are rewritten once as a straight-line program in those
minimal generators; a candidate assignment is evaluated through the program
and accepted when every defining relation of A holds for the images and the
images generate B modulo its Frattini subgroup.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from app.abelian import AbelianType
from app.errors import ArtinError
from app.lattice import image_in_abelianization, rank_mod_p
from app.pcgroup import (Element, PcPresentation, Subgroup, abelian_quotient, closure, frattini_subgroup,
                         minimal_generators)

logger = logging.getLogger(__name__)

Step = Tuple


@dataclass
class WordProgram:
    """Straight-line program for the pc-generators in terms of minimal generators."""

    steps: List[Step]
    generator_words: List[List[Tuple[int, int]]]

    def evaluate(self, group: PcPresentation, images: Sequence[Element]) -> List[Element]:
        values: List[Element] = []
        for step in self.steps:
            kind = step[0]
            if kind == "gen":
                values.append(images[step[1]])
            elif kind == "mul":
                values.append(group.mul(values[step[1]], values[step[2]]))
            elif kind == "pow":
                values.append(group.power(values[step[1]], step[2]))
            else:
                values.append(group.comm(values[step[1]], values[step[2]]))
        return [group.product(*(group.power(values[r], e) for r, e in word))
                for word in self.generator_words]


def word_program(group: PcPresentation, generators: Sequence[int]) -> WordProgram:
    """Run the subgroup closure of the given pc-generators while recording every step."""
    p = group.p
    steps: List[Step] = []
    values: List[Element] = []

    def record(step: Step, value: Element) -> int:
        steps.append(step)
        values.append(value)
        return len(values) - 1

    def pow_(r: int, e: int) -> int:
        return record(("pow", r, e), group.power(values[r], e))

    def mul_(a: int, b: int) -> int:
        return record(("mul", a, b), group.mul(values[a], values[b]))

    def comm_(a: int, b: int) -> int:
        return record(("comm", a, b), group.comm(values[a], values[b]))

    table: Dict[int, int] = {}

    def sift(r: int) -> int:
        while any(values[r]):
            d = group.depth(values[r])
            b = table.get(d)
            if b is None:
                return r
            r = mul_(r, pow_(b, p - values[r][d]))
        return r

    queue = [record(("gen", a), group.generator(k)) for a, k in enumerate(generators)]
    while queue:
        r = sift(queue.pop())
        x = values[r]
        if not any(x):
            continue
        d = group.depth(x)
        r = pow_(r, pow(x[d], -1, p))
        others = list(table.values())
        table[d] = r
        queue.append(pow_(r, p))
        queue.extend(comm_(r, b) for b in others)

    for d in sorted(table):
        r = table[d]
        for d2 in sorted(table):
            if d2 > d and values[r][d2]:
                r = mul_(r, pow_(table[d2], p - values[r][d2]))
        table[d] = r

    sub = Subgroup(group, {d: values[r] for d, r in table.items()})
    words = []
    for i in range(group.n):
        exps = sub.exponents(group.generator(i))
        words.append([(table[d], e) for d, e in zip(sub.depths, exps) if e])
    program = WordProgram(steps=steps, generator_words=words)
    pcgs = [group.generator(i) for i in range(group.n)]
    if program.evaluate(group, [group.generator(k) for k in generators]) != pcgs:
        raise ArtinError(f"word program of {group!r} does not reproduce its pc-generators")
    return program


@dataclass
class IsomorphismResult:
    isomorphic: bool
    images: Optional[List[Element]] = None
    attempts: int = 0
    exhausted: bool = False


@dataclass
class _Profile:
    """Per-group data the search filters on."""

    group: PcPresentation
    frattini: Subgroup
    generators: List[int]
    line_types: Dict[Tuple[int, ...], AbelianType] = field(default_factory=dict)

    def image(self, x: Element) -> Tuple[int, ...]:
        return image_in_abelianization(self.group, self.frattini, x)

    def line_type(self, vector: Tuple[int, ...]) -> AbelianType:
        """Abelian type of <y, Phi> for any y with image on the line of ``vector``."""
        p = self.group.p
        lead = next(v for v in vector if v)
        key = tuple((v * pow(lead, -1, p)) % p for v in vector)
        cached = self.line_types.get(key)
        if cached is None:
            lift = [0] * self.group.n
            for pos, v in zip(self.generators, key):
                lift[pos] = v
            sub = closure(self.group, [tuple(lift)], seed=self.frattini)
            cached = abelian_quotient(sub).type
            self.line_types[key] = cached
        return cached


def _profile(group: PcPresentation) -> _Profile:
    return _Profile(group=group, frattini=frattini_subgroup(group), generators=minimal_generators(group))


def _class_representatives(group: PcPresentation, candidates: List[Element]) -> List[Element]:
    gens = [group.generator(i) for i in range(group.n)]
    seen, reps = set(), []
    for y in candidates:
        if y in seen:
            continue
        reps.append(y)
        orbit, queue = {y}, [y]
        while queue:
            z = queue.pop()
            for g in gens:
                w = group.conj(z, g)
                if w not in orbit:
                    orbit.add(w)
                    queue.append(w)
        seen |= orbit
    return reps


def _relations_hold(a: PcPresentation, b: PcPresentation, images: List[Element]) -> bool:
    def word(vec: Element) -> Element:
        return b.product(*(b.power(images[i], e) for i, e in enumerate(vec) if e))

    for i in range(a.n):
        if b.power(images[i], a.p) != word(a.power_rhs.get(i, a.identity)):
            return False
    for j in range(a.n):
        for i in range(j):
            if b.comm(images[j], images[i]) != word(a.comm_rhs.get((j, i), a.identity)):
                return False
    return True


def find_isomorphism(a: PcPresentation, b: PcPresentation, limit: int) -> IsomorphismResult:
    """Search an isomorphism A -> B, examining at most ``limit`` full candidate assignments."""
    if a.p != b.p or a.n != b.n:
        return IsomorphismResult(isomorphic=False)
    pa, pb = _profile(a), _profile(b)
    d = len(pa.generators)
    if d != len(pb.generators):
        return IsomorphismResult(isomorphic=False)
    program = word_program(a, pa.generators)
    sources = [a.generator(i) for i in pa.generators]
    orders = [a.element_order(x) for x in sources]
    types = [pa.line_type(pa.image(x)) for x in sources]
    pair_orders = {}
    for s, t in itertools.combinations(range(d), 2):
        pair_orders[(s, t)] = (a.element_order(a.mul(sources[s], sources[t])),
                               a.element_order(a.comm(sources[t], sources[s])))

    by_order: Dict[int, List[Element]] = {}
    for y in b.elements():
        v = pb.image(y)
        if any(v):
            by_order.setdefault(b.element_order(y), []).append(y)
    candidates = []
    for k in range(d):
        pool = [y for y in by_order.get(orders[k], []) if pb.line_type(pb.image(y)) == types[k]]
        if not pool:
            return IsomorphismResult(isomorphic=False)
        candidates.append(pool)
    candidates[0] = _class_representatives(b, candidates[0])

    attempts = 0

    def extend(chosen: List[Element]) -> Optional[List[Element]]:
        nonlocal attempts
        k = len(chosen)
        if k == d:
            attempts += 1
            images = program.evaluate(b, chosen)
            if _relations_hold(a, b, images) and rank_mod_p([pb.image(x) for x in images], b.p) == d:
                return images
            return None
        for y in candidates[k]:
            if attempts >= limit:
                return None
            if rank_mod_p([pb.image(x) for x in chosen + [y]], b.p) != k + 1:
                continue
            if any(b.element_order(b.mul(chosen[s], y)) != pair_orders[(s, k)][0]
                   or b.element_order(b.comm(y, chosen[s])) != pair_orders[(s, k)][1]
                   for s in range(k)):
                continue
            found = extend(chosen + [y])
            if found is not None:
                return found
        return None

    images = extend([])
    if images is not None:
        return IsomorphismResult(isomorphic=True, images=images, attempts=attempts)
    exhausted = attempts >= limit
    if exhausted:
        logger.warning(f"Isomorphism search {a!r} -> {b!r} stopped after {attempts} candidates")
    return IsomorphismResult(isomorphic=False, attempts=attempts, exhausted=exhausted)
