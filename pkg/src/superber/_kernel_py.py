"""Pure-Python term-product kernel for the Grassmann algebra.

Terms are stored as ``{bitmask: Fraction}`` where bit ``i`` of the mask
marks the presence of generator ``i``.  The compiled twin in
``_kernel_cy.pyx`` implements the same three functions; ``_kernel``
picks one at import time.
"""

IMPLEMENTATION = "python"


def koszul_sign(mask_a: int, mask_b: int) -> int:
    """Sign of sorting the concatenation of two disjoint generator sets.

    Counts pairs (i in a, j in b) with i > j; each pair is one
    transposition of adjacent odd generators.
    """
    inversions = 0
    a = mask_a >> 1
    while a:
        inversions += (a & mask_b).bit_count()
        a >>= 1
    return -1 if inversions & 1 else 1


def mul_terms(a: dict, b: dict) -> dict:
    """Product of two term maps; squares of generators annihilate."""
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if ma & mb:
                continue
            c = ca * cb
            if koszul_sign(ma, mb) < 0:
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


def add_terms(a: dict, b: dict) -> dict:
    """Sum of two term maps, dropping cancelled coefficients."""
    out = dict(a)
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
