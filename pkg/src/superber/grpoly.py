"""Dense polynomials in one variable z with Grassmann coefficients.

Internal helper for characteristic functions and partial fractions.
Coefficients are kept exact; division is available whenever the divisor
has an invertible leading coefficient.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .errors import NotInvertible
from .grassmann import GrassmannElement


class GrassmannPoly:
    """Coefficient list indexed by degree, trailing zeros stripped."""

    __slots__ = ("gens", "coeffs")

    def __init__(self, gens: int, coeffs: Sequence[GrassmannElement] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("GrassmannPoly is immutable")

    @classmethod
    def zero(cls, gens: int) -> "GrassmannPoly":
        return cls(gens, [])

    @classmethod
    def one(cls, gens: int) -> "GrassmannPoly":
        return cls(gens, [GrassmannElement.one(gens)])

    @classmethod
    def constant(cls, c: GrassmannElement) -> "GrassmannPoly":
        return cls(c.gens, [c])

    @classmethod
    def linear(cls, c0: GrassmannElement, c1: GrassmannElement) -> "GrassmannPoly":
        return cls(c0.gens, [c0, c1])

    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> GrassmannElement:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return GrassmannElement.zero(self.gens)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GrassmannPoly)
            and self.gens == other.gens
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.gens, self.coeffs))

    def __add__(self, other: "GrassmannPoly") -> "GrassmannPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return GrassmannPoly(
            self.gens, [self.coeff(i) + other.coeff(i) for i in range(n)]
        )

    def __neg__(self) -> "GrassmannPoly":
        return GrassmannPoly(self.gens, [-c for c in self.coeffs])

    def __sub__(self, other: "GrassmannPoly") -> "GrassmannPoly":
        return self + (-other)

    def __mul__(self, other) -> "GrassmannPoly":
        if isinstance(other, GrassmannElement):
            return GrassmannPoly(self.gens, [c * other for c in self.coeffs])
        if not isinstance(other, GrassmannPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return GrassmannPoly.zero(self.gens)
        out = [GrassmannElement.zero(self.gens)] * (
            len(self.coeffs) + len(other.coeffs) - 1
        )
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return GrassmannPoly(self.gens, out)

    def __rmul__(self, other):
        if isinstance(other, GrassmannElement):
            return GrassmannPoly(self.gens, [other * c for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int) -> "GrassmannPoly":
        result = GrassmannPoly.one(self.gens)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "GrassmannPoly":
        """Multiply by z^k (k >= 0)."""
        if self.is_zero():
            return self
        pad = [GrassmannElement.zero(self.gens)] * k
        return GrassmannPoly(self.gens, pad + list(self.coeffs))

    def divmod(self, divisor: "GrassmannPoly") -> tuple["GrassmannPoly", "GrassmannPoly"]:
        """Long division; divisor must have an invertible leading coefficient."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor.coeffs[-1]
        if not lead.is_invertible():
            raise NotInvertible("divisor leading coefficient has zero body")
        lead_inv = lead.inv()
        d = divisor.degree()
        rem = list(self.coeffs)
        q = [GrassmannElement.zero(self.gens)] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c.is_zero():
                continue
            factor = c * lead_inv
            q[k - d] = factor
            for j in range(d + 1):
                rem[k - d + j] = rem[k - d + j] - factor * divisor.coeff(j)
        return GrassmannPoly(self.gens, q), GrassmannPoly(self.gens, rem)

    def eval(self, z: Union[Fraction, int, GrassmannElement]) -> GrassmannElement:
        if not isinstance(z, GrassmannElement):
            z = GrassmannElement.scalar(z, self.gens)
        acc = GrassmannElement.zero(self.gens)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            chunks.append(cs if k == 0 else (f"{cs}*z^{k}" if k > 1 else f"{cs}*z"))
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"GrassmannPoly({self})"


def product_of_linears(values, gens: int) -> GrassmannPoly:
    """prod over v of (1 + z*v)."""
    acc = GrassmannPoly.one(gens)
    one = GrassmannElement.one(gens)
    for v in values:
        acc = acc * GrassmannPoly.linear(one, v)
    return acc


def elementary_symmetric(values, gens: int) -> list[GrassmannElement]:
    """[e_0, ..., e_k] for the given values; e_0 = 1."""
    values = list(values)
    coeffs = list(product_of_linears(values, gens).coeffs)
    while len(coeffs) < len(values) + 1:  # nilpotent top coefficients may vanish
        coeffs.append(GrassmannElement.zero(gens))
    return coeffs
