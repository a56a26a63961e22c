"""Exact rational arithmetic and small-degree polynomial algebra."""
from fractions import Fraction

from .integers import (
    DEFAULT_FACTOR_BUDGET,
    factorint,
    is_cube,
    is_square,
    prime_support,
    same_square_class,
    squarefree_part,
)
from .mpoly import MPoly, mresultant
from .poly import (
    UniPoly,
    discriminant,
    factor_small,
    format_poly,
    is_irreducible,
    mod_inverse,
    rational_roots,
    tschirnhaus,
)
from .poly import resultant as _uni_resultant

Rational = Fraction


def resultant(f, g, var=None):
    """Res(f, g).  For UniPolys returns a Fraction; for MPolys eliminates ``var``."""
    if isinstance(f, MPoly) or isinstance(g, MPoly):
        if var is None:
            raise ValueError("multivariate resultant needs the eliminated variable")
        return mresultant(f, g, var)
    return _uni_resultant(f, g)


__all__ = [
    "DEFAULT_FACTOR_BUDGET",
    "Fraction",
    "MPoly",
    "Rational",
    "UniPoly",
    "discriminant",
    "factor_small",
    "factorint",
    "format_poly",
    "is_cube",
    "is_irreducible",
    "is_square",
    "mod_inverse",
    "prime_support",
    "rational_roots",
    "resultant",
    "same_square_class",
    "squarefree_part",
    "tschirnhaus",
]
