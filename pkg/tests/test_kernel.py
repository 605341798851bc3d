"""Pure-Python and compiled kernels must agree term for term."""

import random
from fractions import Fraction

import pytest

from superber import _kernel, _kernel_py


def random_terms(rng, gens, count):
    out = {}
    for _ in range(count):
        mask = rng.randrange(1 << gens)
        out[mask] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return {m: c for m, c in out.items() if c}


def test_sign_agreement():
    for a in range(32):
        for b in range(32):
            assert _kernel.koszul_sign(a, b) == _kernel_py.koszul_sign(a, b)


def test_sign_basics():
    # t1*t2 keeps order, t2*t1 swaps once
    assert _kernel_py.koszul_sign(0b01, 0b10) == 1
    assert _kernel_py.koszul_sign(0b10, 0b01) == -1


@pytest.mark.skipif(
    _kernel.IMPLEMENTATION == "python", reason="compiled kernel not built"
)
def test_mul_agreement():
    rng = random.Random(20240817)
    for _ in range(50):
        a = random_terms(rng, 6, 8)
        b = random_terms(rng, 6, 8)
        assert _kernel.mul_terms(a, b) == _kernel_py.mul_terms(a, b)
        assert _kernel.add_terms(a, b) == _kernel_py.add_terms(a, b)
