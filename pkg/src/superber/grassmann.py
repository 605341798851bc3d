"""Exact Grassmann algebra over the rationals.

Elements are finite sums of generator monomials with ``Fraction``
coefficients.  A monomial is a subset of the generators encoded as a
bitmask (bit ``i`` marks generator ``i+1``), so products reduce to mask
merges plus an inversion-count sign; that inner loop lives in
``_kernel``.  Values are immutable and safe to share.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Mapping, Union

from . import _kernel
from .errors import (
    GeneratorCountMismatch,
    NotInvertible,
    ParityError,
    TooManyGenerators,
)

MAX_GENERATORS = 16

Rational = Union[int, Fraction]


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1

    def __add__(self, other: "Parity") -> "Parity":
        return Parity((self.value + other.value) % 2)

    def flip(self) -> "Parity":
        return Parity(1 - self.value)

    @property
    def sign(self) -> int:
        return -1 if self.value else 1

    def __str__(self) -> str:
        return "even" if self is Parity.EVEN else "odd"

    @classmethod
    def from_str(cls, s: str) -> "Parity":
        if s == "even":
            return cls.EVEN
        if s == "odd":
            return cls.ODD
        raise ValueError(f"not a parity: {s!r}")


EVEN = Parity.EVEN
ODD = Parity.ODD


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class GrassmannElement:
    """Element of the Grassmann algebra on ``gens`` anticommuting generators.

    ``terms`` maps a generator bitmask to a nonzero rational coefficient;
    the empty mask holds the body.  Supports ``+ - * **``, mixing freely
    with ints and Fractions.
    """

    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, gens: int, terms: Mapping[int, Rational] | None = None):
        if not 0 <= gens <= MAX_GENERATORS:
            raise TooManyGenerators(f"generator count {gens} outside [0, {MAX_GENERATORS}]")
        clean: dict[int, Fraction] = {}
        if terms:
            limit = 1 << gens
            for mask, coeff in terms.items():
                if not 0 <= mask < limit:
                    raise ValueError(f"mask {mask} out of range for {gens} generators")
                c = _as_fraction(coeff)
                if c:
                    clean[mask] = c
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("GrassmannElement is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def scalar(cls, value: Rational, gens: int) -> "GrassmannElement":
        return cls(gens, {0: _as_fraction(value)})

    @classmethod
    def zero(cls, gens: int) -> "GrassmannElement":
        return cls(gens, {})

    @classmethod
    def one(cls, gens: int) -> "GrassmannElement":
        return cls(gens, {0: Fraction(1)})

    @classmethod
    def generator(cls, index: int, gens: int) -> "GrassmannElement":
        """Generator number ``index`` (1-based)."""
        if not 1 <= index <= gens:
            raise ValueError(f"generator index {index} outside 1..{gens}")
        return cls(gens, {1 << (index - 1): Fraction(1)})

    @classmethod
    def from_indices(cls, indices: Iterable[int], coeff: Rational, gens: int) -> "GrassmannElement":
        """Monomial on the given (1-based, distinct) generator indices."""
        mask = 0
        for i in indices:
            bit = 1 << (i - 1)
            if mask & bit:
                raise ValueError(f"repeated generator index {i}")
            mask |= bit
        return cls(gens, {mask: _as_fraction(coeff)})

    # -- helpers ------------------------------------------------------------

    def _coerce(self, other) -> "GrassmannElement":
        if isinstance(other, GrassmannElement):
            if other.gens != self.gens:
                raise GeneratorCountMismatch(
                    f"operands have {self.gens} and {other.gens} generators"
                )
            return other
        return GrassmannElement.scalar(other, self.gens)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "GrassmannElement":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return GrassmannElement(self.gens, _kernel.add_terms(self.terms, o.terms))

    __radd__ = __add__

    def __neg__(self) -> "GrassmannElement":
        return GrassmannElement(self.gens, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "GrassmannElement":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "GrassmannElement":
        return (-self) + other

    def __mul__(self, other) -> "GrassmannElement":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return GrassmannElement(self.gens, _kernel.mul_terms(self.terms, o.terms))

    def __rmul__(self, other) -> "GrassmannElement":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return o * self

    def __pow__(self, n: int) -> "GrassmannElement":
        if n < 0:
            return self.inv() ** (-n)
        result = GrassmannElement.one(self.gens)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self) -> "GrassmannElement":
        """Inverse via the finite geometric series on the nilpotent soul."""
        b = self.body()
        if not b:
            raise NotInvertible("element has zero body")
        # self = b*(1 + n) with n nilpotent; inv = (1/b) * sum (-n)^k
        scale = Fraction(1) / b
        n = GrassmannElement(
            self.gens, {m: c * scale for m, c in self.terms.items() if m}
        )
        acc = GrassmannElement.one(self.gens)
        power = GrassmannElement.one(self.gens)
        while True:
            power = power * (-n)
            if power.is_zero():
                break
            acc = acc + power
        return GrassmannElement(self.gens, {m: c * scale for m, c in acc.terms.items()})

    # -- structure ----------------------------------------------------------

    def body(self) -> Fraction:
        """Degree-0 coefficient (0 when absent)."""
        return self.terms.get(0, Fraction(0))

    def soul(self) -> "GrassmannElement":
        return GrassmannElement(self.gens, {m: c for m, c in self.terms.items() if m})

    def parity_split(self) -> tuple["GrassmannElement", "GrassmannElement"]:
        """(even part, odd part) by generator-count parity of each term."""
        even = {m: c for m, c in self.terms.items() if m.bit_count() % 2 == 0}
        odd = {m: c for m, c in self.terms.items() if m.bit_count() % 2 == 1}
        return (GrassmannElement(self.gens, even), GrassmannElement(self.gens, odd))

    def even_part(self) -> "GrassmannElement":
        return self.parity_split()[0]

    def odd_part(self) -> "GrassmannElement":
        return self.parity_split()[1]

    def parity_involution(self) -> "GrassmannElement":
        """Even part minus odd part (sign flip of all odd terms)."""
        return GrassmannElement(
            self.gens,
            {m: (-c if m.bit_count() % 2 else c) for m, c in self.terms.items()},
        )

    def parity(self) -> Parity | None:
        """Parity when homogeneous, None when mixed.  Zero counts as even."""
        has_even = any(m.bit_count() % 2 == 0 for m in self.terms)
        has_odd = any(m.bit_count() % 2 == 1 for m in self.terms)
        if has_even and has_odd:
            return None
        return ODD if has_odd else EVEN

    def homogeneous_parity(self) -> Parity:
        p = self.parity()
        if p is None:
            raise ParityError("element is not parity-homogeneous")
        return p

    def is_zero(self) -> bool:
        return not self.terms

    def is_even(self) -> bool:
        return all(m.bit_count() % 2 == 0 for m in self.terms)

    def is_odd(self) -> bool:
        return all(m.bit_count() % 2 == 1 for m in self.terms)

    def is_invertible(self) -> bool:
        return bool(self.body())

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, GrassmannElement):
            return self.gens == other.gens and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return not self.terms
            return self.terms == {0: c}
        return NotImplemented

    def __hash__(self) -> int:
        h = object.__getattribute__(self, "_hash")
        if h is None:
            h = hash((self.gens, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- display / serialization ---------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for mask in sorted(self.terms, key=lambda m: (m.bit_count(), m)):
            c = self.terms[mask]
            name = "".join(f"t{i + 1}" for i in range(self.gens) if mask >> i & 1)
            if not name:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(name)
            elif c == -1:
                chunks.append(f"-{name}")
            else:
                chunks.append(f"{c}*{name}")
        out = " + ".join(chunks)
        return out.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"GrassmannElement({self.gens}, {self})"

    def to_json_obj(self) -> list:
        """List of ``{"gens": [...1-based...], "coeff": "p/q"}`` entries."""
        out = []
        for mask in sorted(self.terms, key=lambda m: (m.bit_count(), m)):
            indices = [i + 1 for i in range(self.gens) if mask >> i & 1]
            out.append({"gens": indices, "coeff": str(self.terms[mask])})
        return out

    @classmethod
    def from_json_obj(cls, obj, gens: int) -> "GrassmannElement":
        if isinstance(obj, (int, str)):
            return cls.scalar(Fraction(obj), gens)
        terms: dict[int, Fraction] = {}
        for entry in obj:
            mask = 0
            for i in entry.get("gens", []):
                mask |= 1 << (int(i) - 1)
            c = Fraction(entry["coeff"])
            terms[mask] = terms.get(mask, Fraction(0)) + c
        return cls(gens, terms)
