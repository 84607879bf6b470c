"""Truncated Laurent series in u = q^{1/(2L)} with exact rational coefficients.

Every specialization, matrix element, and vertex coefficient lives in this
ring.  A :class:`QScalar` stores a sparse map from lattice exponents (integer
multiples of 1/(2L)) to nonzero :class:`~fractions.Fraction` values, together
with a validity bound ``hi``: coefficients are known (zero if unstored) at
every exponent strictly below ``hi`` and unknown from ``hi`` on.  ``hi=None``
means the value is exact, i.e. known everywhere.

Truncation policy: inexact arithmetic results keep at most ``ring.window``
lattice units above their minimal exponent.  Identity checks then compare two
series on the common known range and demand a minimum width, so a thin
overlap is reported as inconclusive rather than as (dis)agreement.
"""

from fractions import Fraction
from math import gcd

from .errors import ConfigError, InconclusiveWindow, NonUnitError

_shared_rings: dict = {}


def shared_ring(lattice_denom: int, window: int | None = None) -> "QRing":
    """Process-wide ring registry so memo caches amortize across checks.

    Mutation-sensitive caches key on the active mutation set, so sharing is
    safe across negative-control toggles.
    """
    ring = _shared_rings.get((lattice_denom, window))
    if ring is None:
        ring = QRing(lattice_denom, window)
        _shared_rings[(lattice_denom, window)] = ring
    return ring


class QRing:
    """Shared lattice configuration plus per-ring memo caches.

    ``lattice_denom`` is L: exponents of q are multiples of 1/(2L).  For every
    rational tau = a/b (lowest terms) used in a run, L must be a multiple of
    lcm(a, b, a+b) so that all q^{.K}-type weights land on the lattice.
    ``window`` is the truncation width in lattice units.
    """

    def __init__(self, lattice_denom: int = 2, window: int | None = None):
        if lattice_denom < 1:
            raise ConfigError("lattice_denom must be a positive integer")
        self.lattice_denom = lattice_denom
        # default keeps a q-span of at least 10 regardless of the lattice
        self.window = window if window is not None else max(40, 20 * lattice_denom)
        if self.window < 1:
            raise ConfigError("window must be positive")
        self.caches: dict = {}

    def units(self, e) -> int:
        """Convert a rational q-exponent to lattice units, checking membership."""
        e = Fraction(e)
        u = e * 2 * self.lattice_denom
        if u.denominator != 1:
            raise ConfigError(
                f"exponent {e} is off the 1/{2 * self.lattice_denom} lattice; "
                f"enlarge lattice_denom"
            )
        return int(u)

    def zero(self) -> "QScalar":
        return QScalar(self, {}, None)

    def one(self) -> "QScalar":
        return QScalar(self, {0: 1}, None)

    def from_fraction(self, c) -> "QScalar":
        if not isinstance(c, int):
            c = Fraction(c)
        return QScalar(self, {0: c} if c else {}, None)

    def q_monomial(self, e, coeff=1) -> "QScalar":
        """c * q^e as an exact value."""
        c = coeff if isinstance(coeff, int) else Fraction(coeff)
        return QScalar(self, {self.units(e): c} if c else {}, None)

    def geometric_sum(self, e0, step, width: int | None = None) -> "QScalar":
        """sum_{n>=0} q^{e0 + n*step}, truncated to ``width`` lattice units."""
        u0 = self.units(e0)
        us = self.units(step)
        if us <= 0:
            raise ConfigError("geometric_sum needs step > 0")
        hi = u0 + (width if width is not None else self.window)
        coeffs = {u: 1 for u in range(u0, hi, us)}
        return QScalar(self, coeffs, hi)

    def cache(self, name: str) -> dict:
        return self.caches.setdefault(name, {})


def _norm_coeff(c):
    """Keep coefficients as plain ints whenever possible; Fractions are slow."""
    if type(c) is int:
        return c
    if c.denominator == 1:
        return c.numerator
    return c


class QScalar:
    """One truncated Laurent series; immutable once constructed.

    Coefficients are ints when integral and Fractions otherwise, which keeps
    the convolution inner loops on native integer arithmetic.
    """

    __slots__ = ("ring", "coeffs", "hi")

    def __init__(self, ring: QRing, coeffs: dict, hi: int | None):
        self.ring = ring
        cleaned = {}
        for u, c in coeffs.items():
            if not c or (hi is not None and u >= hi):
                continue
            cleaned[u] = _norm_coeff(c)
        self.coeffs = cleaned
        self.hi = hi

    # -- basics ------------------------------------------------------------

    @property
    def exact(self) -> bool:
        return self.hi is None

    def lo(self):
        """Minimal exponent with a (known) nonzero coefficient, or None."""
        return min(self.coeffs) if self.coeffs else None

    def is_zero_on_window(self) -> bool:
        return not self.coeffs

    def coefficient(self, e):
        """Coefficient of q^e (int or Fraction); raises beyond the known range."""
        u = self.ring.units(e)
        if self.hi is not None and u >= self.hi:
            raise InconclusiveWindow(f"coefficient at {e} is beyond the valid window")
        return self.coeffs.get(u, 0)

    def _check_ring(self, other: "QScalar"):
        if self.ring is not other.ring:
            if self.ring.lattice_denom != other.ring.lattice_denom:
                raise ConfigError("QScalars from different lattices cannot be combined")

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_ring(other)
        hi = _min_hi(self.hi, other.hi)
        out = dict(self.coeffs)
        for u, c in other.coeffs.items():
            out[u] = out.get(u, 0) + c
        return QScalar(self.ring, out, hi)

    __radd__ = __add__

    def __neg__(self):
        return QScalar(self.ring, {u: -c for u, c in self.coeffs.items()}, self.hi)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return QScalar(self.ring, {}, self.hi)
            return QScalar(self.ring, {u: v * other for u, v in self.coeffs.items()}, self.hi)
        if not isinstance(other, QScalar):
            return NotImplemented
        self._check_ring(other)
        if (self.exact and not self.coeffs) or (other.exact and not other.coeffs):
            return QScalar(self.ring, {}, None)
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):  # iterate the smaller operand outside
            a, b = b, a
        lo_a, lo_b = self.lo(), other.lo()
        # unknown tail of one factor pollutes from hi + lo of the other; widths
        # therefore never grow, so no further cap is needed
        bound_a = None if self.hi is None else self.hi + (lo_b if lo_b is not None else (other.hi or 0))
        bound_b = None if other.hi is None else other.hi + (lo_a if lo_a is not None else (self.hi or 0))
        hi = _min_hi(bound_a, bound_b)
        out: dict = {}
        get = out.get
        if hi is None:
            for ua, ca in a.items():
                for ub, cb in b.items():
                    u = ua + ub
                    out[u] = get(u, 0) + ca * cb
        else:
            for ua, ca in a.items():
                for ub, cb in b.items():
                    u = ua + ub
                    if u < hi:
                        out[u] = get(u, 0) + ca * cb
        return QScalar(self.ring, out, hi)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.invert() ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def invert(self, width: int | None = None) -> "QScalar":
        """Multiplicative inverse to ``width`` lattice units past its leading term."""
        if width is None:
            width = self.ring.window
        lo = self.lo()
        if lo is None:
            raise NonUnitError("cannot invert a series that vanishes on its window")
        support = sorted(self.coeffs)
        stride = 0
        for u in support:
            stride = gcd(stride, u - lo)
        if stride == 0:  # monomial
            inv = {-lo: Fraction(1) / self.coeffs[lo]}
            hi = None if self.exact else -lo + (self.hi - lo)
            if hi is not None:
                hi = min(hi, -lo + width)
            return QScalar(self.ring, inv, hi)
        rel_prec = width if self.exact else min(self.hi - lo, width)
        n = -(-rel_prec // stride)  # terms in stride units
        a = [self.coeffs.get(lo + i * stride, 0) for i in range(n)]
        b = [Fraction(0)] * n
        b[0] = Fraction(1) / a[0]
        for i in range(1, n):
            acc = Fraction(0)
            for j in range(1, i + 1):
                acc += a[j] * b[i - j]
            b[i] = -acc / a[0]
        out = {-lo + i * stride: c for i, c in enumerate(b) if c}
        return QScalar(self.ring, out, -lo + n * stride)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, QScalar):
            return self * other.invert()
        return NotImplemented

    # -- comparison ----------------------------------------------------------

    def compare(self, other, min_width: int | None = None) -> "WindowComparison":
        other = self._coerce(other)
        self._check_ring(other)
        if min_width is None:
            min_width = self.ring.window // 2
        hi = _min_hi(self.hi, other.hi)
        if hi is None:
            equal = self.coeffs == other.coeffs
            mismatch = None
            if not equal:
                mismatch = min(u for u in set(self.coeffs) | set(other.coeffs)
                               if self.coeffs.get(u) != other.coeffs.get(u))
            return WindowComparison("pass" if equal else "fail", None, mismatch, False)
        keys = [u for u in set(self.coeffs) | set(other.coeffs) if u < hi]
        mismatch = None
        for u in sorted(keys):
            if self.coeffs.get(u, 0) != other.coeffs.get(u, 0):
                mismatch = u
                break
        if mismatch is not None:
            return WindowComparison("fail", None, mismatch, True)
        los = [x for x in (self.lo(), other.lo()) if x is not None]
        base = min(los) if los else hi - self.ring.window
        width = hi - base
        if width < min_width:
            return WindowComparison("inconclusive", width, None, True)
        return WindowComparison("pass", width, None, True)

    def agree_on_common_window(self, other, min_width: int | None = None) -> bool:
        """True/False on the common window; raises if the window is too thin."""
        cmp = self.compare(other, min_width)
        if cmp.status == "inconclusive":
            raise InconclusiveWindow(
                f"common window of width {cmp.width} is below min_width"
            )
        return cmp.status == "pass"

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.from_fraction(other)
        if not isinstance(other, QScalar):
            return NotImplemented
        return self.compare(other).status == "pass"

    def __hash__(self):
        raise TypeError("QScalar is not hashable; compare on windows instead")

    # -- presentation ----------------------------------------------------------

    def to_json(self) -> dict:
        lo = self.lo()
        if lo is None:
            lo = 0
            top = 0
        else:
            top = (max(self.coeffs) + 1) if self.exact else self.hi
        coeffs = [str(self.coeffs.get(u, Fraction(0))) for u in range(lo, top)]
        return {
            "lattice_denom": self.ring.lattice_denom,
            "min_exp": lo,
            "coeffs": coeffs,
        }

    def __repr__(self):
        L2 = 2 * self.ring.lattice_denom
        items = sorted(self.coeffs.items())
        parts = []
        for u, c in items[:8]:
            e = Fraction(u, L2)
            if e == 0:
                parts.append(f"{c}")
            else:
                parts.append(f"{c}*q^({e})")
        if len(items) > 8:
            parts.append("...")
        body = " + ".join(parts) if parts else "0"
        tail = "" if self.exact else f" + O(q^({Fraction(self.hi, L2)}))"
        return body + tail


class WindowComparison:
    """Outcome of comparing two series on their common known range."""

    __slots__ = ("status", "width", "first_mismatch", "beyond_window_caveat")

    def __init__(self, status, width, first_mismatch, caveat):
        self.status = status  # "pass" | "fail" | "inconclusive"
        self.width = width  # lattice units, None when exact
        self.first_mismatch = first_mismatch
        self.beyond_window_caveat = caveat

    def __repr__(self):
        return (
            f"WindowComparison({self.status}, width={self.width}, "
            f"first_mismatch={self.first_mismatch})"
        )


def _min_hi(a: int | None, b: int | None):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)
