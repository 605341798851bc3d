"""Sign conventions, Leibniz rule and substitution for the polynomial ring."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superber.errors import (
    ExponentError,
    NonInvertibleSubstitution,
    ParityError,
    TableMismatch,
)
from superber.grassmann import EVEN, ODD, GrassmannElement, Parity
from superber.superpoly import SuperPolynomial, Variable, VariableTable

G = 2
TABLE = VariableTable(
    [
        Variable("u", EVEN, laurent=True),
        Variable("x", EVEN),
        Variable("xi", ODD),
        Variable("eta", ODD),
    ]
)


def var(name, power=1):
    return SuperPolynomial.variable(TABLE, name, G, power)


def const(q):
    return SuperPolynomial.constant(TABLE, GrassmannElement.scalar(q, G))


# -- multiplication ----------------------------------------------------------

def test_laurent_cancellation():
    assert var("u") * var("u", -1) == 1


def test_odd_anticommute():
    xi, eta = var("xi"), var("eta")
    assert xi * eta == -(eta * xi)
    assert (xi * xi).is_zero()


def test_nilpotent_square_drops():
    x, xi, eta = var("x"), var("xi"), var("eta")
    assert (x + xi * eta) * (x - xi * eta) == x * x


def test_odd_coefficient_moves_with_sign():
    t1 = GrassmannElement.generator(1, G)
    xi = var("xi")
    lhs = xi * SuperPolynomial.constant(TABLE, t1)
    rhs = SuperPolynomial.monomial(TABLE, (0, 0, 1, 0), -t1)
    assert lhs == rhs


def test_table_mismatch():
    other = VariableTable([Variable("u", EVEN, laurent=True)])
    with pytest.raises(TableMismatch):
        var("u") * SuperPolynomial.variable(other, "u", G)


def test_odd_exponent_rejected():
    with pytest.raises(ExponentError):
        SuperPolynomial(TABLE, G, {(0, 0, 2, 0): GrassmannElement.one(G)})
    with pytest.raises(ExponentError):
        SuperPolynomial(TABLE, G, {(0, -1, 0, 0): GrassmannElement.one(G)})


# -- left derivative ---------------------------------------------------------

def test_power_rule():
    assert var("u", 3).lderiv("u") == 3 * var("u", 2)


def test_odd_derivative_signs():
    xieta = var("xi") * var("eta")
    assert xieta.lderiv("xi") == var("eta")
    assert xieta.lderiv("eta") == -var("xi")


def test_laurent_power_rule():
    assert var("u", -1).lderiv("u") == -var("u", -2)
    # cross-check by differentiating u * u^-1 = 1
    prod = var("u") * var("u", -1)
    assert prod.lderiv("u").is_zero()
    leibniz = var("u").lderiv("u") * var("u", -1) + var("u") * var("u", -1).lderiv("u")
    assert leibniz.is_zero()


@st.composite
def polys(draw):
    coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4).filter(bool)
    masks = st.integers(min_value=0, max_value=(1 << G) - 1)
    n_terms = draw(st.integers(min_value=0, max_value=4))
    terms = {}
    for _ in range(n_terms):
        exps = (
            draw(st.integers(min_value=-2, max_value=2)),
            draw(st.integers(min_value=0, max_value=2)),
            draw(st.integers(min_value=0, max_value=1)),
            draw(st.integers(min_value=0, max_value=1)),
        )
        coeff = GrassmannElement(G, {draw(masks): draw(coeffs)})
        terms[exps] = terms.get(exps, GrassmannElement.zero(G)) + coeff
    return SuperPolynomial(TABLE, G, terms)


def homogeneous_parts(f):
    even = {e: c for e, c in f.terms.items() if TABLE.term_parity(e, c) is EVEN}
    odd = {e: c for e, c in f.terms.items() if TABLE.term_parity(e, c) is ODD}
    mixed = {
        e: c for e, c in f.terms.items() if TABLE.term_parity(e, c) is None
    }
    parts = []
    for chunk in (even, odd):
        parts.append(SuperPolynomial(TABLE, G, chunk))
    for e, c in mixed.items():
        ce, co = c.parity_split()
        parts[0] = parts[0] + SuperPolynomial(TABLE, G, {e: ce})
        parts[1] = parts[1] + SuperPolynomial(TABLE, G, {e: co})
    return parts


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), st.sampled_from(["u", "x", "xi", "eta"]))
def test_leibniz_rule(f, g, name):
    v_parity = TABLE.variables[TABLE.index(name)].parity
    for part, parity in zip(homogeneous_parts(f), (EVEN, ODD)):
        sign = -1 if (v_parity is ODD and parity is ODD) else 1
        lhs = (part * g).lderiv(name)
        rhs = part.lderiv(name) * g + sign * (part * g.lderiv(name))
        assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(polys(), st.sampled_from(["u", "xi", "eta"]), st.sampled_from(["x", "xi", "eta"]))
def test_mixed_second_derivatives(f, v, w):
    pv = TABLE.variables[TABLE.index(v)].parity
    pw = TABLE.variables[TABLE.index(w)].parity
    sign = -1 if (pv is ODD and pw is ODD) else 1
    assert f.lderiv(v).lderiv(w) == sign * f.lderiv(w).lderiv(v)


# -- substitution ------------------------------------------------------------

def test_subst_scaling():
    f = var("u", 2)
    assert f.subst({"u": 2 * var("u")}) == 4 * var("u", 2)


def test_subst_odd_to_odd():
    c = GrassmannElement.scalar(Fraction(3, 2), G) + GrassmannElement.from_indices(
        [1, 2], 1, G
    )
    image = SuperPolynomial.constant(TABLE, c) * var("eta")
    assert var("xi").subst({"xi": image}) == image


def test_subst_into_negative_power():
    xi_eta = var("xi") * var("eta")
    f = var("u", -1)
    result = f.subst({"u": var("u") * (1 + xi_eta)})
    assert result == var("u", -1) * (1 - xi_eta)


def test_subst_identity():
    rng = random.Random(5)
    for _ in range(10):
        f = SuperPolynomial(
            TABLE,
            G,
            {
                (
                    rng.randint(-2, 2),
                    rng.randint(0, 2),
                    rng.randint(0, 1),
                    rng.randint(0, 1),
                ): GrassmannElement(
                    G, {rng.randrange(1 << G): Fraction(rng.randint(1, 5))}
                )
            },
        )
        assert f.subst({}) == f


def test_subst_parity_mismatch():
    with pytest.raises(ParityError):
        var("xi").subst({"xi": var("x")})


def test_subst_non_invertible():
    with pytest.raises(NonInvertibleSubstitution):
        var("u", -1).subst({"u": var("x")})  # x is not Laurent
    with pytest.raises(NonInvertibleSubstitution):
        var("u", -1).subst({"u": var("u") + 1})  # unit plus unit, no monomial split


def test_laurent_inverse_mixed_monomial():
    f = var("u") * (2 + GrassmannElement.from_indices([1, 2], 1, G))
    inv = f.laurent_inverse()
    assert f * inv == 1


# -- serialization -----------------------------------------------------------

def test_json_roundtrip():
    f = var("u", -2) * (1 + GrassmannElement.generator(1, G)) + var("xi") * 3
    back = SuperPolynomial.from_json_obj(f.to_json_obj(), G)
    assert back == f
