"""Integer polynomials in one variable ``q``, stored as ascending coefficient tuples."""

from __future__ import annotations

from collections import Counter
from typing import Iterable


class IntPolynomial:
    """Exact polynomial with integer coefficients.

    >>> p = IntPolynomial([1, 1])
    >>> p * p
    IntPolynomial([1, 2, 1])
    >>> str(IntPolynomial([1, 3, 5, 4, 1]))
    '1 + 3q + 5q^2 + 4q^3 + q^4'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> IntPolynomial:
        """Generating function ``sum q^d`` over the given degrees."""
        counts = Counter(degrees)
        if not counts:
            return cls()
        return cls(counts.get(d, 0) for d in range(max(counts) + 1))

    @classmethod
    def chain(cls, length: int) -> IntPolynomial:
        """``1 + q + ... + q^length``."""
        return cls([1] * (length + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                             for i in range(n))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    def divmod(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division; the divisor must have leading coefficient 1 or divide exactly."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.coeffs[-1]
        quot = [0] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1 - d, -1, -1):
            c, r = divmod(rem[k + d], lead)
            if r:
                raise ValueError("inexact division over the integers")
            quot[k] = c
            if c:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= c * y
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_quotient(self, other: IntPolynomial) -> IntPolynomial | None:
        """``self / other`` when the division is exact, else ``None``."""
        try:
            q, r = self.divmod(other)
        except ValueError:
            return None
        return q if not r.coeffs else None

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
                continue
            mono = "q" if d == 1 else f"q^{d}"
            terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def is_palindromic(p: IntPolynomial) -> bool:
    """True iff the coefficient sequence reads the same reversed.

    >>> is_palindromic(IntPolynomial([1, 2, 1]))
    True
    >>> is_palindromic(IntPolynomial([1, 3, 5, 4, 1]))
    False
    """
    return p.is_palindromic()
