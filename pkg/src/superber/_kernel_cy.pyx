# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython term-product kernel; mirrors ``_kernel_py`` exactly.

Coefficients stay Python ``Fraction`` objects; the speedup comes from
typed bitmask loops and reduced interpreter overhead in the innermost
product loop.
"""

IMPLEMENTATION = "cython"


cdef inline int _popcount(unsigned int x):
    cdef int n = 0
    while x:
        x &= x - 1
        n += 1
    return n


cdef inline int _sign(unsigned int mask_a, unsigned int mask_b):
    cdef int inversions = 0
    cdef unsigned int a = mask_a >> 1
    while a:
        inversions += _popcount(a & mask_b)
        a >>= 1
    return -1 if inversions & 1 else 1


def koszul_sign(mask_a, mask_b):
    """Sign of sorting the concatenation of two disjoint generator sets."""
    return _sign(mask_a, mask_b)


def mul_terms(dict a, dict b):
    """Product of two term maps; squares of generators annihilate."""
    cdef dict out = {}
    cdef unsigned int ma, mb, m
    cdef object ca, cb, c, acc
    for ma, ca in a.items():
        for mb, cb in b.items():
            if ma & mb:
                continue
            c = ca * cb
            if _sign(ma, mb) < 0:
                c = -c
            m = ma | mb
            acc = out.get(m)
            if acc is None:
                out[m] = c
            else:
                acc = acc + c
                if acc:
                    out[m] = acc
                else:
                    del out[m]
    return out


def add_terms(dict a, dict b):
    """Sum of two term maps, dropping cancelled coefficients."""
    cdef dict out = dict(a)
    cdef unsigned int m
    cdef object c, acc
    for m, c in b.items():
        acc = out.get(m)
        if acc is None:
            out[m] = c
        else:
            acc = acc + c
            if acc:
                out[m] = acc
            else:
                del out[m]
    return out
