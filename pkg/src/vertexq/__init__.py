"""Exact q-series engine for the topological vertex and its operator identities.

Everything is computed over a truncated Laurent-series ring in q^{1/(2L)} with
exact rational coefficients, so identity checks are coefficient equalities on
explicit windows.
"""

from . import mutations
from .qscalar import QRing, QScalar

__all__ = ["QRing", "QScalar", "mutations", "make_ring", "lattice_denom_for"]


def lattice_denom_for(taus) -> int:
    """Smallest lattice denominator accommodating every tau = a/b in the list.

    q^{.kappa}-type weights involve denominators a, b and a+b, so L must be a
    multiple of lcm(a, b, a+b) for each requested tau.
    """
    from fractions import Fraction
    from math import lcm

    L = 2
    for tau in taus:
        t = Fraction(tau)
        a, b = abs(t.numerator), t.denominator
        if a == 0 or t == -1:
            raise ValueError("tau must avoid 0 and -1")
        L = lcm(L, a, b, abs(t.numerator + b))
    return L


def make_ring(taus=(), window=None) -> QRing:
    """Ring with a lattice fine enough for every tau a run will touch."""
    return QRing(lattice_denom_for(taus), window)
