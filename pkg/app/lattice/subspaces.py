import itertools
from typing import Iterator, List, Sequence, Tuple

Vector = Tuple[int, ...]


def rref_subspaces(dim: int, k: int, p: int) -> Iterator[Tuple[Vector, ...]]:
    """Every k-dimensional subspace of F_p^dim, as its reduced row echelon basis."""
    for pivots in itertools.combinations(range(dim), k):
        slots = [(r, c) for r in range(k) for c in range(pivots[r] + 1, dim) if c not in pivots]
        for values in itertools.product(range(p), repeat=len(slots)):
            rows = [[0] * dim for _ in range(k)]
            for r, c in enumerate(pivots):
                rows[r][c] = 1
            for (r, c), v in zip(slots, values):
                rows[r][c] = v
            yield tuple(tuple(row) for row in rows)


def rank_mod_p(vectors: Sequence[Sequence[int]], p: int) -> int:
    return len(row_reduce(vectors, p))


def row_reduce(vectors: Sequence[Sequence[int]], p: int) -> List[List[int]]:
    """Reduced row echelon form over F_p, zero rows dropped."""
    rows = [[x % p for x in v] for v in vectors]
    out: List[List[int]] = []
    col, width = 0, len(rows[0]) if rows else 0
    while rows and col < width:
        pivot = next((r for r in rows if r[col]), None)
        if pivot is None:
            col += 1
            continue
        rows.remove(pivot)
        inv = pow(pivot[col], -1, p)
        pivot = [(x * inv) % p for x in pivot]
        rows = [[(x - r[col] * y) % p for x, y in zip(r, pivot)] for r in rows]
        out = [[(x - r[col] * y) % p for x, y in zip(r, pivot)] for r in out]
        out.append(pivot)
        rows = [r for r in rows if any(r)]
        col += 1
    return sorted(out, reverse=True)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den
