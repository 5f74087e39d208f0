"""Positive definite binary quadratic forms ax^2 + bxy + cy^2 of negative discriminant."""
from dataclasses import dataclass

from sympy.core.intfunc import igcd, igcdex


@dataclass(frozen=True)
class QuadForm:
    a: int
    b: int
    c: int

    @classmethod
    def identity(cls, d: int) -> "QuadForm":
        """Principal form of discriminant d."""
        k = d % 2
        return cls(1, k, (k - d) // 4)

    @classmethod
    def from_ab(cls, a: int, b: int, d: int) -> "QuadForm":
        return cls(a, b, (b * b - d) // (4 * a))

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self) -> bool:
        return igcd(igcd(self.a, self.b), self.c) == 1

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not abs(b) <= a <= c:
            return False
        return b >= 0 if (abs(b) == a or a == c) else True

    @property
    def is_identity(self) -> bool:
        return self.reduce().a == 1

    def reduce(self) -> "QuadForm":
        a, b, c = self.a, self.b, self.c
        while True:
            if a > c:
                a, b, c = c, -b, a
                continue
            if abs(b) > a:
                r = b % (2 * a)
                if r > a:
                    r -= 2 * a
                q = (b - r) // (2 * a)
                c = c - q * b + q * q * a
                b = r
                continue
            if (abs(b) == a or a == c) and b < 0:
                b = -b
                continue
            return QuadForm(a, b, c)

    def compose(self, other: "QuadForm") -> "QuadForm":
        """Dirichlet composition followed by reduction."""
        d = self.discriminant
        a1, b1, _ = self.a, self.b, self.c
        a2, b2, _ = other.a, other.b, other.c
        s = (b1 + b2) // 2
        u1, v1, d1 = igcdex(a1, a2)
        u2, v2, g = igcdex(d1, s)
        a3 = (a1 * a2) // (g * g)
        b3 = (u2 * u1 * a1 * b2 + u2 * v1 * a2 * b1 + v2 * (b1 * b2 + d) // 2) // g
        b3 %= 2 * a3
        return QuadForm.from_ab(a3, b3, d).reduce()

    def inverse(self) -> "QuadForm":
        return QuadForm(self.a, -self.b, self.c).reduce()

    def power(self, n: int) -> "QuadForm":
        if n < 0:
            return self.inverse().power(-n)
        result, base = QuadForm.identity(self.discriminant), self.reduce()
        while n:
            if n & 1:
                result = result.compose(base)
            base = base.compose(base)
            n >>= 1
        return result

    def __mul__(self, other: "QuadForm") -> "QuadForm":
        return self.compose(other)

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"
