"""superber: exact supercommutative algebra over the rationals.

Berezinians of supermatrices, Laurent expansions of Ber(E+zA) in every
annular region, supertraces of induced actions on generalized symmetric
powers, formal delta-function calculus, and condition checking for
1|1-forms.  All arithmetic is exact; see the README for the CLI.
"""

from ._kernel import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .grassmann import EVEN, ODD, GrassmannElement, Parity

__version__ = "0.1.0"

__all__ = [
    "GrassmannElement",
    "Parity",
    "EVEN",
    "ODD",
    "KERNEL_IMPLEMENTATION",
    "__version__",
]
