import itertools
import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from app.errors import PresentationError

logger = logging.getLogger(__name__)

Element = Tuple[int, ...]

# collection caches are dropped once they grow past this many entries
_CACHE_LIMIT = 400000


class PcPresentation:
    """Power-commutator presentation of a finite p-group.

    Generators are 0-based internally (g1 is index 0). ``power_rhs[i]`` is the
    normal form of g_i^p and ``comm_rhs[(j, i)]`` with j > i the normal form of
    [g_j, g_i] = g_j^-1 g_i^-1 g_j g_i. Right-hand sides may only involve
    generators beyond i, respectively beyond j. Every generator has relative
    order p, so elements are exponent vectors mod p.
    """

    def __init__(self, p: int, n: int,
                 power_rhs: Optional[Dict[int, Sequence[int]]] = None,
                 comm_rhs: Optional[Dict[Tuple[int, int], Sequence[int]]] = None,
                 weights: Optional[Sequence[int]] = None,
                 name: Optional[str] = None):
        self.p = p
        self.n = n
        self.name = name
        self.weights = list(weights) if weights is not None else None
        self.identity: Element = (0,) * n
        self.power_rhs: Dict[int, Element] = {}
        self.comm_rhs: Dict[Tuple[int, int], Element] = {}

        for i, vec in (power_rhs or {}).items():
            vec = self._checked(vec, f"g{i + 1}^{p}")
            if any(vec[:i + 1]):
                raise PresentationError(f"power relation of g{i + 1} involves generators up to g{i + 1}")
            if any(vec):
                self.power_rhs[i] = vec
        for (j, i), vec in (comm_rhs or {}).items():
            if not 0 <= i < j < n:
                raise PresentationError(f"commutator [g{j + 1},g{i + 1}] needs j > i")
            vec = self._checked(vec, f"[g{j + 1},g{i + 1}]")
            if any(vec[:j + 1]):
                raise PresentationError(f"commutator [g{j + 1},g{i + 1}] involves generators up to g{j + 1}")
            if any(vec):
                self.comm_rhs[(j, i)] = vec

        self._powers: List[Element] = [self.power_rhs.get(i, self.identity) for i in range(n)]
        # image of g_j under conjugation by g_k, i.e. g_j [g_j, g_k]
        self._conj_images: List[Dict[int, Element]] = []
        for k in range(n):
            images = {}
            for j in range(k + 1, n):
                c = list(self.comm_rhs.get((j, k), self.identity))
                c[j] = 1
                images[j] = tuple(c)
            self._conj_images.append(images)
        self._mul_gen_cache: Dict[Tuple[Element, int], Element] = {}
        self._conj_cache: Dict[Tuple[Element, int], Element] = {}

    def _checked(self, vec: Sequence[int], label: str) -> Element:
        if len(vec) != self.n:
            raise PresentationError(f"relation {label} has {len(vec)} exponents, expected {self.n}")
        return tuple(int(x) % self.p for x in vec)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<PcPresentation{label} p={self.p} n={self.n}>"

    @property
    def order(self) -> int:
        return self.p ** self.n

    def generator(self, i: int, e: int = 1) -> Element:
        vec = [0] * self.n
        vec[i] = e % self.p
        return tuple(vec)

    def element(self, vec: Sequence[int]) -> Element:
        return self._checked(vec, "element")

    def elements(self) -> Iterator[Element]:
        return itertools.product(range(self.p), repeat=self.n)

    @staticmethod
    def depth(x: Element) -> int:
        for i, e in enumerate(x):
            if e:
                return i
        return len(x)

    def _trim_caches(self):
        if len(self._mul_gen_cache) > _CACHE_LIMIT:
            self._mul_gen_cache.clear()
        if len(self._conj_cache) > _CACHE_LIMIT:
            self._conj_cache.clear()

    def _conj_tail(self, tail: Element, k: int) -> Element:
        """g_k^-1 * tail * g_k for an element supported beyond k."""
        key = (tail, k)
        cached = self._conj_cache.get(key)
        if cached is not None:
            return cached
        images = self._conj_images[k]
        result = self.identity
        for j in range(k + 1, self.n):
            for _ in range(tail[j]):
                result = self.mul(result, images[j])
        self._conj_cache[key] = result
        return result

    def _mul_gen(self, x: Element, k: int) -> Element:
        key = (x, k)
        cached = self._mul_gen_cache.get(key)
        if cached is not None:
            return cached
        tail = (0,) * (k + 1) + x[k + 1:]
        moved = self._conj_tail(tail, k) if any(tail) else self.identity
        if x[k] + 1 < self.p:
            result = x[:k] + (x[k] + 1,) + moved[k + 1:]
        else:
            carried = self.mul(self._powers[k], moved)
            result = x[:k] + (0,) + carried[k + 1:]
        self._mul_gen_cache[key] = result
        self._trim_caches()
        return result

    def mul(self, x: Element, y: Element) -> Element:
        """Collection from the left: append the letters of y one by one."""
        if not any(y):
            return x
        if not any(x):
            return y
        result = x
        for i, e in enumerate(y):
            for _ in range(e):
                result = self._mul_gen(result, i)
        return result

    def product(self, *xs: Element) -> Element:
        result = self.identity
        for x in xs:
            result = self.mul(result, x)
        return result

    def inverse(self, x: Element) -> Element:
        cur, out = x, [0] * self.n
        for i in range(self.n):
            if cur[i]:
                t = self.p - cur[i]
                out[i] = t
                cur = self.mul(cur, self.generator(i, t))
        return tuple(out)

    def power(self, x: Element, e: int) -> Element:
        if e < 0:
            return self.power(self.inverse(x), -e)
        result, base = self.identity, x
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def comm(self, x: Element, y: Element) -> Element:
        return self.mul(self.mul(self.inverse(x), self.inverse(y)), self.mul(x, y))

    def conj(self, x: Element, g: Element) -> Element:
        return self.mul(self.mul(self.inverse(g), x), g)

    def element_order(self, x: Element) -> int:
        order = 1
        while any(x):
            x = self.power(x, self.p)
            order *= self.p
        return order

    def collect(self, word: Sequence[Tuple[int, int]]) -> Element:
        """Normal form of a word given as (generator index, exponent) letters."""
        result = self.identity
        for i, e in word:
            result = self.mul(result, self.power(self.generator(i), e))
        return result

    def test_words(self) -> Iterator[Tuple[str, Element, Element]]:
        """Both sides of every consistency test word, as collected elements."""
        n, p = self.n, self.p
        g = [self.generator(i) for i in range(n)]
        for k in range(n):
            for j in range(k):
                for i in range(j):
                    yield (f"(g{k + 1} g{j + 1}) g{i + 1}",
                           self.mul(self.mul(g[k], g[j]), g[i]),
                           self.mul(g[k], self.mul(g[j], g[i])))
        for j in range(n):
            for i in range(j):
                yield (f"(g{j + 1}^{p}) g{i + 1}",
                       self.mul(self._powers[j], g[i]),
                       self.mul(self.generator(j, p - 1), self.mul(g[j], g[i])))
                yield (f"g{j + 1} (g{i + 1}^{p})",
                       self.mul(self.mul(g[j], self.generator(i, p - 1)), g[i]),
                       self.mul(g[j], self._powers[i]))
        for i in range(n):
            yield (f"(g{i + 1}^{p}) g{i + 1}",
                   self.mul(self._powers[i], g[i]),
                   self.mul(g[i], self._powers[i]))

    def consistency_check(self) -> List[str]:
        failures = [label for label, left, right in self.test_words() if left != right]
        if failures:
            logger.warning(f"{self!r} is inconsistent at {len(failures)} test words")
        return failures

    def is_consistent(self) -> bool:
        return not self.consistency_check()
