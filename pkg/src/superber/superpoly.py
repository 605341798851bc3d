"""Mixed-parity Laurent polynomials over Grassmann scalars.

A term is coefficient * v1^e1 * ... * vk^ek with the variables in table
order and the coefficient on the left.  Odd variables carry exponent 0
or 1; negative exponents are allowed only on even variables flagged as
Laurent.  Multiplication, left derivatives and substitution all follow
the sign rule: swapping two adjacent odd symbols (variable or odd
coefficient part) flips the sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ._kernel import koszul_sign
from .errors import (
    ExponentError,
    NonInvertibleSubstitution,
    ParityError,
    TableMismatch,
    UnknownVariable,
)
from .grassmann import EVEN, ODD, GrassmannElement, Parity


@dataclass(frozen=True)
class Variable:
    name: str
    parity: Parity
    laurent: bool = False

    def __post_init__(self):
        if self.laurent and self.parity is ODD:
            raise ExponentError(f"odd variable {self.name!r} cannot be Laurent")


class VariableTable:
    """Ordered, immutable list of typed variables with unique names."""

    __slots__ = ("variables", "_index", "_odd_slot")

    def __init__(self, variables: Sequence[Variable]):
        variables = tuple(variables)
        index = {}
        for pos, v in enumerate(variables):
            if v.name in index:
                raise ValueError(f"duplicate variable name {v.name!r}")
            index[v.name] = pos
        # compressed bit position for each odd variable, for sign counting
        odd_slot = {}
        for pos, v in enumerate(variables):
            if v.parity is ODD:
                odd_slot[pos] = len(odd_slot)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_odd_slot", odd_slot)

    def __setattr__(self, name, value):
        raise AttributeError("VariableTable is immutable")

    def __len__(self) -> int:
        return len(self.variables)

    def __iter__(self):
        return iter(self.variables)

    def __eq__(self, other) -> bool:
        return isinstance(other, VariableTable) and self.variables == other.variables

    def __hash__(self) -> int:
        return hash(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"no variable named {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def names(self) -> list[str]:
        return [v.name for v in self.variables]

    def odd_mask(self, exps: Sequence[int]) -> int:
        """Bitmask of odd variables present in an exponent vector."""
        mask = 0
        for pos, slot in self._odd_slot.items():
            if exps[pos]:
                mask |= 1 << slot
        return mask

    def term_parity(self, exps: Sequence[int], coeff: GrassmannElement) -> Parity | None:
        vp = self.odd_mask(exps).bit_count() % 2
        cp = coeff.parity()
        if cp is None:
            return None
        return Parity((vp + cp.value) % 2)

    def check_exponents(self, exps: Sequence[int]) -> None:
        if len(exps) != len(self.variables):
            raise ExponentError(
                f"exponent vector length {len(exps)} != table size {len(self.variables)}"
            )
        for v, e in zip(self.variables, exps):
            if v.parity is ODD and e not in (0, 1):
                raise ExponentError(f"odd variable {v.name!r} with exponent {e}")
            if e < 0 and not v.laurent:
                raise ExponentError(f"negative exponent on non-Laurent {v.name!r}")

    def to_json_obj(self) -> list:
        return [
            {"name": v.name, "parity": str(v.parity), "laurent": v.laurent}
            for v in self.variables
        ]

    @classmethod
    def from_json_obj(cls, obj) -> "VariableTable":
        return cls(
            [
                Variable(e["name"], Parity.from_str(e["parity"]), bool(e.get("laurent")))
                for e in obj
            ]
        )


class SuperPolynomial:
    """Sum of terms over a shared VariableTable, canonicalized on build."""

    __slots__ = ("table", "gens", "terms")

    def __init__(
        self,
        table: VariableTable,
        gens: int,
        terms: Mapping[tuple, GrassmannElement] | None = None,
    ):
        clean: dict[tuple, GrassmannElement] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                table.check_exponents(exps)
                if coeff.gens != gens:
                    raise ValueError("coefficient generator count differs from polynomial")
                if not coeff.is_zero():
                    clean[exps] = coeff
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SuperPolynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, table: VariableTable, gens: int) -> "SuperPolynomial":
        return cls(table, gens, {})

    @classmethod
    def constant(cls, table: VariableTable, coeff) -> "SuperPolynomial":
        if not isinstance(coeff, GrassmannElement):
            raise TypeError("constant() expects a GrassmannElement")
        exps = (0,) * len(table)
        return cls(table, coeff.gens, {exps: coeff})

    @classmethod
    def one(cls, table: VariableTable, gens: int) -> "SuperPolynomial":
        return cls.constant(table, GrassmannElement.one(gens))

    @classmethod
    def variable(cls, table: VariableTable, name: str, gens: int, power: int = 1) -> "SuperPolynomial":
        exps = [0] * len(table)
        exps[table.index(name)] = power
        return cls(table, gens, {tuple(exps): GrassmannElement.one(gens)})

    @classmethod
    def monomial(cls, table: VariableTable, exps: Sequence[int], coeff: GrassmannElement) -> "SuperPolynomial":
        return cls(table, coeff.gens, {tuple(exps): coeff})

    # -- helpers ------------------------------------------------------------

    def _coerce(self, other) -> "SuperPolynomial":
        if isinstance(other, SuperPolynomial):
            if other.table != self.table:
                raise TableMismatch("operands use different variable tables")
            if other.gens != self.gens:
                raise ValueError("operands use different generator counts")
            return other
        if isinstance(other, GrassmannElement):
            return SuperPolynomial.constant(self.table, other)
        if isinstance(other, (int, Fraction)):
            return SuperPolynomial.constant(
                self.table, GrassmannElement.scalar(other, self.gens)
            )
        raise TypeError(f"cannot combine SuperPolynomial with {type(other).__name__}")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "SuperPolynomial":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in o.terms.items():
            acc = terms.get(exps)
            terms[exps] = c if acc is None else acc + c
        return SuperPolynomial(self.table, self.gens, terms)

    __radd__ = __add__

    def __neg__(self) -> "SuperPolynomial":
        return SuperPolynomial(
            self.table, self.gens, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other) -> "SuperPolynomial":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "SuperPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "SuperPolynomial":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        table = self.table
        odd_positions = [p for p, v in enumerate(table.variables) if v.parity is ODD]
        out: dict[tuple, GrassmannElement] = {}
        for ea, ca in self.terms.items():
            mask_a = table.odd_mask(ea)
            par_a = mask_a.bit_count() % 2
            for eb, cb in o.terms.items():
                # odd exponent collision annihilates the term
                if any(ea[p] and eb[p] for p in odd_positions):
                    continue
                mask_b = table.odd_mask(eb)
                sign = koszul_sign(mask_a, mask_b)
                # move cb left through the odd variables of term a
                c = ca * (cb.parity_involution() if par_a else cb)
                if sign < 0:
                    c = -c
                if c.is_zero():
                    continue
                exps = tuple(x + y for x, y in zip(ea, eb))
                acc = out.get(exps)
                out[exps] = c if acc is None else acc + c
        return SuperPolynomial(table, self.gens, out)

    def __rmul__(self, other) -> "SuperPolynomial":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return o * self

    def __pow__(self, n: int) -> "SuperPolynomial":
        if n < 0:
            return self.laurent_inverse() ** (-n)
        result = SuperPolynomial.one(self.table, self.gens)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus -----------------------------------------------------------

    def lderiv(self, name: str) -> "SuperPolynomial":
        """Left partial derivative: commute the variable to the front, lower it."""
        table = self.table
        pos = table.index(name)
        var = table.variables[pos]
        out: dict[tuple, GrassmannElement] = {}
        for exps, coeff in self.terms.items():
            e = exps[pos]
            if e == 0:
                continue
            lowered = list(exps)
            if var.parity is ODD:
                lowered[pos] = 0
                # parity of everything left of the variable: coefficient plus
                # earlier odd variables
                left_vars = sum(
                    exps[p]
                    for p, v in enumerate(table.variables[:pos])
                    if v.parity is ODD
                ) % 2
                c = coeff.parity_involution()  # past the coefficient
                if left_vars:
                    c = -c
            else:
                lowered[pos] = e - 1
                c = e * coeff
            key = tuple(lowered)
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
        return SuperPolynomial(table, self.gens, out)

    def subst(
        self,
        assignments: Mapping[str, "SuperPolynomial"],
        target: VariableTable | None = None,
    ) -> "SuperPolynomial":
        """Simultaneous substitution; parities must match variable parities.

        Unassigned variables map to themselves and must exist in the
        target table with the same parity.
        """
        table = self.table
        if target is None:
            for val in assignments.values():
                target = val.table
                break
            else:
                target = table
        values: list[SuperPolynomial] = []
        for v in table.variables:
            if v.name in assignments:
                val = assignments[v.name]
                if val.table != target:
                    raise TableMismatch("assignment tables disagree")
                vp = val.parity()
                if not val.is_zero() and vp is not v.parity:
                    raise ParityError(
                        f"value for {v.name!r} must be {v.parity}, got {vp}"
                    )
                values.append(val)
            else:
                values.append(SuperPolynomial.variable(target, v.name, self.gens))
        inverses: dict[int, SuperPolynomial] = {}
        result = SuperPolynomial.zero(target, self.gens)
        for exps, coeff in self.terms.items():
            acc = SuperPolynomial.constant(target, coeff)
            for pos, e in enumerate(exps):
                if e == 0:
                    continue
                if e > 0:
                    acc = acc * values[pos] ** e
                else:
                    if pos not in inverses:
                        inverses[pos] = values[pos].laurent_inverse()
                    acc = acc * inverses[pos] ** (-e)
            result = result + acc
        return result

    def laurent_inverse(self) -> "SuperPolynomial":
        """Inverse within Laurent polynomials, when one exists.

        Requires a monomial factor M (invertible coefficient, only even
        Laurent variables) with self = M*(1 + h), h nilpotent; then the
        finite geometric series in h terminates.
        """
        for exps, coeff in sorted(self.terms.items()):
            if not coeff.is_invertible():
                continue
            if any(
                e and (v.parity is ODD or not v.laurent)
                for v, e in zip(self.table.variables, exps)
            ):
                continue
            m_inv = SuperPolynomial.monomial(
                self.table, tuple(-e for e in exps), coeff.inv()
            )
            h = m_inv * self - 1
            if h.is_nilpotent():
                acc = SuperPolynomial.one(self.table, self.gens)
                power = SuperPolynomial.one(self.table, self.gens)
                while True:
                    power = power * (-h)
                    if power.is_zero():
                        break
                    acc = acc + power
                return acc * m_inv
        raise NonInvertibleSubstitution(
            "no invertible leading monomial with nilpotent remainder"
        )

    def is_nilpotent(self) -> bool:
        """True iff every term has a body-free coefficient or an odd variable."""
        for exps, coeff in self.terms.items():
            if coeff.body() and not self.table.odd_mask(exps):
                return False
        return True

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def parity(self) -> Parity | None:
        seen: set[Parity] = set()
        for exps, coeff in self.terms.items():
            p = self.table.term_parity(exps, coeff)
            if p is None:
                return None
            seen.add(p)
            if len(seen) > 1:
                return None
        if not seen:
            return EVEN
        return seen.pop()

    def coefficient(self, exps: Sequence[int]) -> GrassmannElement:
        return self.terms.get(tuple(exps), GrassmannElement.zero(self.gens))

    def constant_term(self) -> GrassmannElement:
        return self.coefficient((0,) * len(self.table))

    def group_degree(self, names: Iterable[str]) -> set[int]:
        """Set of total degrees in the named variables across terms."""
        positions = [self.table.index(n) for n in names]
        return {sum(exps[p] for p in positions) for exps in self.terms} or {0}

    def depends_on(self, name: str) -> bool:
        pos = self.table.index(name)
        return any(exps[pos] for exps in self.terms)

    def reindex(self, target: VariableTable) -> "SuperPolynomial":
        """Re-express over a table containing the same-named variables."""
        mapping = [target.index(v.name) for v in self.table.variables]
        for v in self.table.variables:
            tv = target.variables[target.index(v.name)]
            if tv.parity is not v.parity:
                raise ParityError(f"variable {v.name!r} changes parity in target table")
        out: dict[tuple, GrassmannElement] = {}
        for exps, coeff in self.terms.items():
            new = [0] * len(target)
            for src, dst in enumerate(mapping):
                new[dst] = exps[src]
            key = tuple(new)
            acc = out.get(key)
            out[key] = coeff if acc is None else acc + coeff
        return SuperPolynomial(target, self.gens, out)

    # -- comparison / display -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, SuperPolynomial):
            return (
                self.table == other.table
                and self.gens == other.gens
                and self.terms == other.terms
            )
        if isinstance(other, (int, Fraction, GrassmannElement)):
            try:
                o = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
            return self.terms == o.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.table, self.gens, frozenset(self.terms)))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            names = []
            for v, e in zip(self.table.variables, exps):
                if e == 1:
                    names.append(v.name)
                elif e:
                    names.append(f"{v.name}^{e}")
            mono = "*".join(names)
            cs = str(coeff)
            if " " in cs or "*" in cs:
                cs = f"({cs})"
            chunks.append(f"{cs}*{mono}" if mono and cs != "1" else (mono or cs))
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"SuperPolynomial({self})"

    # -- serialization --------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "vars": self.table.to_json_obj(),
            "terms": [
                {"exps": list(exps), "coeff": coeff.to_json_obj()}
                for exps, coeff in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json_obj(cls, obj, gens: int, table: VariableTable | None = None) -> "SuperPolynomial":
        if table is None:
            table = VariableTable.from_json_obj(obj["vars"])
        terms = {}
        for entry in obj["terms"]:
            exps = tuple(int(e) for e in entry["exps"])
            coeff = GrassmannElement.from_json_obj(entry["coeff"], gens)
            terms[exps] = terms.get(exps, GrassmannElement.zero(gens)) + coeff
        return cls(table, gens, terms)
