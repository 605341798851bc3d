"""Supermatrices over the Grassmann scalars.

An (n|m) even supermatrix stores (n+m)x(n+m) entries in block order:
even indices first.  Diagonal blocks must have even entries, off-diagonal
blocks odd ones.  Provides determinants over the even subring, the
Berezinian and its block-swapped dual, linear solving by quotients of
Berezinians, and the characteristic rational function Ber(E + zA).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import BerUndefined, NotEvenSupermatrix, NotInvertible, OddEntry
from .grassmann import GrassmannElement
from .grpoly import GrassmannPoly

Matrix = list[list[GrassmannElement]]


def _det_even(entries: Matrix, gens: int) -> GrassmannElement:
    """Determinant over the commutative even subring.

    Laplace expansion along the first available row, memoized on the
    remaining column set; entries are assumed even (checked by callers).
    """
    n = len(entries)
    if n == 0:
        return GrassmannElement.one(gens)
    cache: dict[tuple[int, int], GrassmannElement] = {}

    def minor(row: int, colmask: int) -> GrassmannElement:
        if row == n:
            return GrassmannElement.one(gens)
        key = (row, colmask)
        hit = cache.get(key)
        if hit is not None:
            return hit
        acc = GrassmannElement.zero(gens)
        sign = 1
        for col in range(n):
            bit = 1 << col
            if not colmask & bit:
                continue
            c = entries[row][col]
            if not c.is_zero():
                sub = minor(row + 1, colmask & ~bit)
                acc = acc + (c * sub if sign > 0 else -(c * sub))
            sign = -sign
        cache[key] = acc
        return acc

    return minor(0, (1 << n) - 1)


def _check_even_entries(entries: Matrix) -> None:
    for row in entries:
        for e in row:
            if not e.is_even():
                raise OddEntry("determinant needs even entries")


def _matmul(a: Matrix, b: Matrix, gens: int) -> Matrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[GrassmannElement.zero(gens) for _ in range(cols)] for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            aik = a[i][k]
            if aik.is_zero():
                continue
            for j in range(cols):
                out[i][j] = out[i][j] + aik * b[k][j]
    return out


def _adjugate(entries: Matrix, gens: int) -> Matrix:
    """Transposed cofactor matrix of an even-entry square matrix."""
    n = len(entries)
    if n == 0:
        return []
    adj = [[GrassmannElement.zero(gens) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [
                [entries[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            cof = _det_even(sub, gens)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj


def _inverse_even(entries: Matrix, gens: int) -> Matrix:
    det = _det_even(entries, gens)
    if not det.is_invertible():
        raise NotInvertible("matrix determinant has zero body")
    det_inv = det.inv()
    return [[c * det_inv for c in row] for row in _adjugate(entries, gens)]


class SuperMatrix:
    """(n|m) block matrix of Grassmann entries, even rows/columns first."""

    __slots__ = ("n", "m", "gens", "entries")

    def __init__(self, n: int, m: int, entries: Sequence[Sequence[GrassmannElement]]):
        size = n + m
        entries = [list(row) for row in entries]
        if len(entries) != size or any(len(row) != size for row in entries):
            raise ValueError(f"need a {size}x{size} entry grid")
        gens = entries[0][0].gens if size else 0
        for row in entries:
            for e in row:
                if e.gens != gens:
                    raise ValueError("entries use different generator counts")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("SuperMatrix is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def identity(cls, n: int, m: int, gens: int) -> "SuperMatrix":
        size = n + m
        rows = [
            [
                GrassmannElement.one(gens) if i == j else GrassmannElement.zero(gens)
                for j in range(size)
            ]
            for i in range(size)
        ]
        return cls(n, m, rows)

    @classmethod
    def diagonal(cls, x: Sequence[GrassmannElement], y: Sequence[GrassmannElement]) -> "SuperMatrix":
        values = list(x) + list(y)
        gens = values[0].gens if values else 0
        size = len(values)
        rows = [
            [
                values[i] if i == j else GrassmannElement.zero(gens)
                for j in range(size)
            ]
            for i in range(size)
        ]
        return cls(len(x), len(y), rows)

    # -- structure ------------------------------------------------------------

    def block(self, r: int, c: int) -> Matrix:
        """Block (r, c) with r, c in {0, 1}: 0 = even indices, 1 = odd."""
        r0, r1 = (0, self.n) if r == 0 else (self.n, self.n + self.m)
        c0, c1 = (0, self.n) if c == 0 else (self.n, self.n + self.m)
        return [row[c0:c1] for row in self.entries[r0:r1]]

    def is_even_supermatrix(self) -> bool:
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                diag = (i < self.n) == (j < self.n)
                if diag and not e.is_even():
                    return False
                if not diag and not e.is_odd():
                    return False
        return True

    def require_even(self) -> None:
        if not self.is_even_supermatrix():
            raise NotEvenSupermatrix("block parities violate the even pattern")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SuperMatrix)
            and (self.n, self.m) == (other.n, other.m)
            and self.entries == other.entries
        )

    def __mul__(self, other: "SuperMatrix") -> "SuperMatrix":
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError("dimension mismatch")
        return SuperMatrix(self.n, self.m, _matmul(self.entries, other.entries, self.gens))

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        rows = [
            [a + b for a, b in zip(ra, rb)]
            for ra, rb in zip(self.entries, other.entries)
        ]
        return SuperMatrix(self.n, self.m, rows)

    def scale(self, c) -> "SuperMatrix":
        return SuperMatrix(
            self.n, self.m, [[c * e for e in row] for row in self.entries]
        )

    def rotate180(self) -> "SuperMatrix":
        """Reverse rows and columns; swaps the even and odd blocks."""
        size = self.n + self.m
        rows = [
            [self.entries[size - 1 - i][size - 1 - j] for j in range(size)]
            for i in range(size)
        ]
        return SuperMatrix(self.m, self.n, rows)

    def replace_column(self, j: int, column: Sequence[GrassmannElement]) -> "SuperMatrix":
        rows = [list(row) for row in self.entries]
        for i, value in enumerate(column):
            rows[i][j] = value
        return SuperMatrix(self.n, self.m, rows)

    # -- serialization ----------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "dim": {"even": self.n, "odd": self.m},
            "entries": [[e.to_json_obj() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json_obj(cls, obj, gens: int) -> "SuperMatrix":
        n = int(obj["dim"]["even"])
        m = int(obj["dim"]["odd"])
        rows = [
            [GrassmannElement.from_json_obj(e, gens) for e in row]
            for row in obj["entries"]
        ]
        return cls(n, m, rows)

    def __repr__(self) -> str:
        return f"SuperMatrix({self.n}|{self.m})"


# -- operations ---------------------------------------------------------------

def det(matrix: Union[SuperMatrix, Matrix], gens: int | None = None) -> GrassmannElement:
    """Determinant of a square matrix with even entries."""
    if isinstance(matrix, SuperMatrix):
        entries, gens = matrix.entries, matrix.gens
    else:
        entries = [list(row) for row in matrix]
        if gens is None:
            gens = entries[0][0].gens if entries else 0
    _check_even_entries(entries)
    return _det_even(entries, gens)


def ber(matrix: SuperMatrix) -> GrassmannElement:
    """Berezinian: det(M00 - M01 M11^-1 M10) * det(M11)^-1."""
    matrix.require_even()
    gens = matrix.gens
    m11 = matrix.block(1, 1)
    det11 = _det_even(m11, gens)
    if not det11.is_invertible():
        raise BerUndefined("odd-odd block determinant has zero body")
    if matrix.n == 0:
        return det11.inv()
    m00 = matrix.block(0, 0)
    if matrix.m == 0:
        return _det_even(m00, gens)
    inv11 = _inverse_even(m11, gens)
    correction = _matmul(_matmul(matrix.block(0, 1), inv11, gens), matrix.block(1, 0), gens)
    schur = [
        [a - b for a, b in zip(row0, rowc)]
        for row0, rowc in zip(m00, correction)
    ]
    return _det_even(schur, gens) * det11.inv()


def ber_star(matrix: SuperMatrix) -> GrassmannElement:
    """Dual Berezinian: the Berezinian of the 180-degree rotated matrix."""
    return ber(matrix.rotate180())


def cramer_solve(matrix: SuperMatrix, rhs: Sequence[GrassmannElement]) -> list[GrassmannElement]:
    """Solve M x = b by quotients of Berezinians.

    Even-row unknowns use Ber of the column-replaced matrix over Ber M;
    odd-row unknowns use the dual Berezinian the same way.  Entries of b
    must match the parity of their row (zero is always fine).
    """
    matrix.require_even()
    n, m = matrix.n, matrix.m
    rhs = list(rhs)
    if len(rhs) != n + m:
        raise ValueError("right-hand side length mismatch")
    for i, b in enumerate(rhs):
        want_even = i < n
        if want_even and not b.is_even():
            raise NotEvenSupermatrix(f"rhs entry {i} must be even")
        if not want_even and not b.is_odd():
            raise NotEvenSupermatrix(f"rhs entry {i} must be odd")
    ber_m = ber(matrix)
    if not ber_m.is_invertible():
        raise BerUndefined("matrix Berezinian has zero body")
    ber_m_inv = ber_m.inv()
    ber_star_m_inv = ber_star(matrix).inv()
    out = []
    for j in range(n + m):
        replaced = matrix.replace_column(j, rhs)
        if j < n:
            out.append(ber(replaced) * ber_m_inv)
        else:
            out.append(ber_star(replaced) * ber_star_m_inv)
    return out


def apply_to_column(matrix: SuperMatrix, column: Sequence[GrassmannElement]) -> list[GrassmannElement]:
    out = []
    for row in matrix.entries:
        acc = GrassmannElement.zero(matrix.gens)
        for a, x in zip(row, column):
            acc = acc + a * x
        out.append(acc)
    return out


@dataclass(frozen=True)
class RationalFunctionZ:
    """Unreduced quotient of z-polynomials with Grassmann coefficients."""

    numerator: GrassmannPoly
    denominator: GrassmannPoly

    def eval(self, z: Union[Fraction, int]) -> GrassmannElement:
        den = self.denominator.eval(z)
        if not den.is_invertible():
            raise NotInvertible(f"denominator not invertible at z={z}")
        return self.numerator.eval(z) * den.inv()

    def equivalent(self, other: "RationalFunctionZ") -> bool:
        """Equality by cross-multiplication."""
        return (
            self.numerator * other.denominator == other.numerator * self.denominator
        )

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def charfn(matrix: SuperMatrix) -> RationalFunctionZ:
    """Ber(E + zA) as an exact rational function of z.

    All-polynomial route: with D(z) = det(E + z A11), the adjugate
    identity gives Ber(E + zA) = det(B00*D - z^2 A01 adj(E + z A11) A10)
    / D^(n+1), which avoids a fraction field.
    """
    matrix.require_even()
    n, m, gens = matrix.n, matrix.m, matrix.gens
    one = GrassmannElement.one(gens)
    zero = GrassmannElement.zero(gens)

    def poly_entry(c0, c1):
        return GrassmannPoly(gens, [c0, c1])

    # B11 = E + z*A11 as a polynomial matrix, its determinant and adjugate
    a11 = matrix.block(1, 1)
    b11 = [
        [poly_entry(one if i == j else zero, a11[i][j]) for j in range(m)]
        for i in range(m)
    ]
    d_poly = _poly_det(b11, gens)
    if n == 0:
        return RationalFunctionZ(GrassmannPoly.one(gens), d_poly)
    a00 = matrix.block(0, 0)
    b00 = [
        [poly_entry(one if i == j else zero, a00[i][j]) for j in range(n)]
        for i in range(n)
    ]
    if m == 0:
        return RationalFunctionZ(_poly_det(b00, gens), GrassmannPoly.one(gens))
    adj11 = _poly_adjugate(b11, gens)
    a01 = [[GrassmannPoly.constant(c) for c in row] for row in matrix.block(0, 1)]
    a10 = [[GrassmannPoly.constant(c) for c in row] for row in matrix.block(1, 0)]
    correction = _poly_matmul(_poly_matmul(a01, adj11, gens), a10, gens)
    target = [
        [
            b00[i][j] * d_poly - correction[i][j].shift(2)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return RationalFunctionZ(_poly_det(target, gens), d_poly ** (n + 1))


def _poly_matmul(a, b, gens):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[GrassmannPoly.zero(gens) for _ in range(cols)] for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            for j in range(cols):
                out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def _poly_det(entries, gens):
    n = len(entries)
    if n == 0:
        return GrassmannPoly.one(gens)
    cache: dict[tuple[int, int], GrassmannPoly] = {}

    def minor(row, colmask):
        if row == n:
            return GrassmannPoly.one(gens)
        key = (row, colmask)
        hit = cache.get(key)
        if hit is not None:
            return hit
        acc = GrassmannPoly.zero(gens)
        sign = 1
        for col in range(n):
            bit = 1 << col
            if not colmask & bit:
                continue
            c = entries[row][col]
            if not c.is_zero():
                term = c * minor(row + 1, colmask & ~bit)
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        cache[key] = acc
        return acc

    return minor(0, (1 << n) - 1)


def _poly_adjugate(entries, gens):
    n = len(entries)
    adj = [[GrassmannPoly.zero(gens) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [
                [entries[r][c] for c in range(n) if c != j]
                for r in range(n)
                if r != i
            ]
            cof = _poly_det(sub, gens)
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return adj
