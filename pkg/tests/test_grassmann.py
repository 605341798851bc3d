"""Ring axioms, supercommutativity, inversion and nilpotency of the scalar core."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superber.errors import GeneratorCountMismatch, NotInvertible, TooManyGenerators
from superber.grassmann import EVEN, ODD, GrassmannElement, Parity

G = 4

coeffs = st.fractions(
    min_value=-4, max_value=4, max_denominator=8
).filter(lambda q: q != 0)


@st.composite
def elements(draw, gens=G, parity=None):
    masks = list(range(1 << gens))
    if parity is EVEN:
        masks = [m for m in masks if m.bit_count() % 2 == 0]
    elif parity is ODD:
        masks = [m for m in masks if m.bit_count() % 2 == 1]
    chosen = draw(st.lists(st.sampled_from(masks), max_size=5, unique=True))
    terms = {m: draw(coeffs) for m in chosen}
    return GrassmannElement(gens, terms)


def gen(i):
    return GrassmannElement.generator(i, G)


# -- hand-checked examples ---------------------------------------------------

def test_disjoint_generator_product():
    assert gen(1) * gen(2) == GrassmannElement.from_indices([1, 2], 1, G)


def test_generator_squares_to_zero():
    assert (gen(1) * gen(1)).is_zero()


def test_product_of_conjugate_pair_is_one():
    t12 = gen(1) * gen(2)
    assert (1 + t12) * (1 - t12) == 1


def test_inverse_of_one_and_scalars():
    one = GrassmannElement.one(G)
    assert one.inv() == 1
    assert GrassmannElement.scalar(2, G).inv() == Fraction(1, 2)


def test_inverse_of_unipotent():
    t12 = gen(1) * gen(2)
    assert (1 + t12).inv() == 1 - t12


def test_body_examples():
    t12 = gen(1) * gen(2)
    assert (3 + t12).body() == 3
    assert gen(1).body() == 0
    el = GrassmannElement.scalar(Fraction(-1, 2), G) + 5 * gen(1) * gen(2) * gen(3) * gen(4)
    assert el.body() == Fraction(-1, 2)


def test_parity_split_examples():
    a = gen(1) + gen(1) * gen(2)
    even, odd = a.parity_split()
    assert even == gen(1) * gen(2)
    assert odd == gen(1)
    assert GrassmannElement.scalar(7, G).parity_split() == (
        GrassmannElement.scalar(7, G),
        GrassmannElement.zero(G),
    )
    b = gen(1) + gen(2) + gen(1) * gen(2) * gen(3)
    even, odd = b.parity_split()
    assert even.is_zero()
    assert odd == b


# -- error behavior ----------------------------------------------------------

def test_generator_count_mismatch():
    with pytest.raises(GeneratorCountMismatch):
        GrassmannElement.one(2) * GrassmannElement.one(3)


def test_zero_body_not_invertible():
    with pytest.raises(NotInvertible):
        gen(1).inv()
    with pytest.raises(NotInvertible):
        (gen(1) * gen(2)).inv()


def test_generator_cap():
    with pytest.raises(TooManyGenerators):
        GrassmannElement.zero(17)


# -- algebraic properties ----------------------------------------------------

@settings(max_examples=60, deadline=None)
@given(elements(), elements(), elements())
def test_associativity_and_distributivity(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=40, deadline=None)
@given(elements())
def test_unit(a):
    one = GrassmannElement.one(G)
    assert a * one == a
    assert one * a == a


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([EVEN, ODD]).flatmap(
        lambda p: st.tuples(elements(parity=p), st.just(p))
    ),
    st.sampled_from([EVEN, ODD]).flatmap(
        lambda p: st.tuples(elements(parity=p), st.just(p))
    ),
)
def test_supercommutativity(ap, bp):
    a, pa = ap
    b, pb = bp
    sign = -1 if (pa is ODD and pb is ODD) else 1
    assert a * b == sign * (b * a)


@settings(max_examples=40, deadline=None)
@given(elements(parity=EVEN), coeffs)
def test_inverse_roundtrip(a, body):
    el = a + body - a.body()  # force nonzero body
    assert el * el.inv() == 1
    assert el.inv() * el == 1


@settings(max_examples=40, deadline=None)
@given(elements(parity=EVEN))
def test_nilpotency_of_even_souls(a):
    soulful = a.soul()
    assert (soulful ** (G // 2 + 1)).is_zero()


def test_parity_of_mixed_is_none():
    assert (1 + gen(1)).parity() is None
    assert GrassmannElement.zero(G).parity() is EVEN
    assert gen(2).parity() is ODD


def test_parity_addition():
    assert Parity.EVEN + Parity.ODD is Parity.ODD
    assert Parity.ODD + Parity.ODD is Parity.EVEN


# -- serialization -----------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(elements())
def test_json_roundtrip(a):
    assert GrassmannElement.from_json_obj(a.to_json_obj(), G) == a


def test_json_shape():
    el = GrassmannElement.scalar(Fraction(1, 2), G) + 3 * gen(1) * gen(3)
    assert el.to_json_obj() == [
        {"gens": [], "coeff": "1/2"},
        {"gens": [1, 3], "coeff": "3"},
    ]
