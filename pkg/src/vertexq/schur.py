"""Schur and skew Schur functions at the q^{-nu-rho} specializations.

The evaluation alphabet indexed by a partition nu (the "prefix") is
x_i = q^{-nu_i + i - 1/2}; nu = () gives the principal specialization q^{-rho}.
Finite prefix factors are handled by an exact Newton-style recurrence and the
infinite tail by Euler's q-exponential identity, so every value is a closed
truncated Laurent series, never an SSYT sum.
"""

from fractions import Fraction
from functools import lru_cache

from .partitions import contains, weight
from .qscalar import QRing, QScalar
from .seriespoly import SeriesPoly


def _prefix_elementary(ring: QRing, prefix: tuple) -> list:
    """Elementary symmetric functions of the finite alphabet q^{-nu_i+i-1/2}."""
    cache = ring.cache("prefix_elementary")
    if prefix in cache:
        return cache[prefix]
    es = [ring.one()]
    for i, nu_i in enumerate(prefix, start=1):
        x = ring.q_monomial(Fraction(-nu_i + i) - Fraction(1, 2))
        new = es + [ring.zero()]
        for j in range(len(es), 0, -1):
            new[j] = new[j] + x * es[j - 1]
        es = new
    cache[prefix] = es
    return es


def _inv_qpochhammer(ring: QRing, m: int, width: int) -> QScalar:
    """1 / prod_{i=1}^m (1 - q^i) to the requested width, memoized per ring."""
    cache = ring.cache("inv_poch")
    got = cache.get(m)
    if got is not None and got[0] >= width:
        return got[1]
    if m == 0:
        out = ring.one()
    else:
        out = _inv_qpochhammer(ring, m - 1, width) * (
            ring.one() - ring.q_monomial(m)
        ).invert(width)
    cache[m] = (width, out)
    return out


def h_spec(ring: QRing, m: int, prefix: tuple = (), width: int | None = None) -> QScalar:
    """Complete symmetric function h_m at q^{-prefix-rho}.

    Prefix letters contribute through the Newton recurrence on their
    elementary symmetric functions; the geometric tail q^{l+1/2}, q^{l+3/2},...
    contributes h_j = q^{j(l+1/2)} / (q;q)_j by Euler's identity.  ``width``
    requests extra precision so that determinants that cancel leading terms
    still end up with a full comparison window.
    """
    if m < 0:
        return ring.zero()
    if m == 0:
        return ring.one()
    if width is None:
        width = ring.window
    cache = ring.cache("h_spec")
    key = (m, prefix)
    got = cache.get(key)
    if got is not None and got[0] >= width:
        return got[1]
    l = len(prefix)
    es = _prefix_elementary(ring, prefix)
    # prefix-only h's by h_j = sum_{i>=1} (-1)^{i-1} e_i h_{j-i}
    hp = [ring.one()]
    for j in range(1, m + 1):
        acc = ring.zero()
        for i in range(1, min(j, l) + 1):
            acc = acc + Fraction((-1) ** (i - 1)) * es[i] * hp[j - i]
        hp.append(acc)
    total = ring.zero()
    for j in range(0, m + 1):  # j = tail degree
        tail = ring.q_monomial(Fraction(j * (2 * l + 1), 2)) * _inv_qpochhammer(ring, j, width)
        total = total + hp[m - j] * tail
    cache[key] = (width, total)
    return total


def _det(entries, n: int, zero, one):
    """Division-free determinant by first-row minor expansion over column masks."""
    memo = {}

    def rec(row: int, mask: int):
        if row == n:
            return one
        if (row, mask) in memo:
            return memo[(row, mask)]
        acc = zero
        sign = 1
        for col in range(n):
            bit = 1 << col
            if mask & bit:
                continue
            term = entries(row, col)
            sub = rec(row + 1, mask | bit)
            acc = acc + Fraction(sign) * term * sub
            sign = -sign
        memo[(row, mask)] = acc
        return acc

    return rec(0, 0)


def schur_spec(ring: QRing, mu: tuple, prefix: tuple = ()) -> QScalar:
    """s_mu at q^{-prefix-rho} by the Jacobi-Trudi determinant."""
    return skew_schur_spec(ring, mu, (), prefix)


def e_spec(ring: QRing, m: int, prefix: tuple = (), width: int | None = None) -> QScalar:
    """Elementary symmetric function e_m at q^{-prefix-rho}.

    Tail letters q^{l+1/2}, q^{l+3/2}, ... contribute
    e_j = q^{j(l+1/2)} q^{j(j-1)/2} / (q;q)_j by Euler's other identity.
    """
    if m < 0:
        return ring.zero()
    if m == 0:
        return ring.one()
    if width is None:
        width = ring.window
    cache = ring.cache("e_spec")
    key = (m, prefix)
    got = cache.get(key)
    if got is not None and got[0] >= width:
        return got[1]
    l = len(prefix)
    es = _prefix_elementary(ring, prefix)
    total = ring.zero()
    for j in range(0, m + 1):  # j = tail degree
        if m - j > l:
            continue
        tail = ring.q_monomial(
            Fraction(j * (2 * l + 1), 2) + Fraction(j * (j - 1), 2)
        ) * _inv_qpochhammer(ring, j, width)
        total = total + es[m - j] * tail
    cache[key] = (width, total)
    return total


def _letter_units(ring: QRing, prefix: tuple, i: int) -> int:
    """Lattice exponent of alphabet letter i (1-based): -prefix_i + i - 1/2."""
    nu_i = prefix[i - 1] if i <= len(prefix) else 0
    return ring.units(Fraction(-nu_i + i) - Fraction(1, 2))


def _cancellation_depth(ring: QRing, mu: tuple, nu: tuple, prefix: tuple) -> int:
    """How far below the true leading exponent the Jacobi-Trudi terms start.

    The minimal semistandard filling of mu/nu puts letter i in row i, so the
    true minimal exponent is sum_i (mu_i - nu_i) e_i; every determinant term
    can reach down to |mu/nu| e_1.  The difference is precision lost to
    cancellation and must be pre-paid in the h-series width.
    """
    e1 = _letter_units(ring, prefix, 1)
    true_lo = 0
    naive_lo = 0
    for i in range(len(mu)):
        row = mu[i] - (nu[i] if i < len(nu) else 0)
        true_lo += row * _letter_units(ring, prefix, i + 1)
        naive_lo += row * e1
    return max(0, true_lo - naive_lo)


def skew_schur_spec(ring: QRing, mu: tuple, nu: tuple, prefix: tuple = ()) -> QScalar:
    """s_{mu/nu} at q^{-prefix-rho}; zero unless nu is contained in mu.

    Uses whichever Jacobi-Trudi determinant (complete or elementary) is
    smaller, so tall thin shapes stay cheap.
    """
    from .partitions import conjugate

    cache = ring.cache("skew_schur")
    key = (mu, nu, prefix)
    if key in cache:
        return cache[key]
    if not contains(mu, nu):
        out = ring.zero()
    elif mu == nu:
        out = ring.one()
    else:
        width = ring.window + _cancellation_depth(ring, mu, nu, prefix)
        if mu[0] < len(mu):  # fewer columns than rows: dual determinant
            tmu, tnu = conjugate(mu), conjugate(nu)
            n = len(tmu)
            out = _det(
                lambda i, j: e_spec(
                    ring, tmu[i] - (tnu[j] if j < len(tnu) else 0) - i + j, prefix, width
                ),
                n,
                ring.zero(),
                ring.one(),
            )
        else:
            n = len(mu)
            out = _det(
                lambda i, j: h_spec(
                    ring, mu[i] - (nu[j] if j < len(nu) else 0) - i + j, prefix, width
                ),
                n,
                ring.zero(),
                ring.one(),
            )
    cache[key] = out
    return out


def skew_schur_lr(ring: QRing, mu: tuple, nu: tuple, prefix: tuple = ()) -> QScalar:
    """s_{mu/nu} via the LR expansion sum_eta c^mu_{nu eta} s_eta(prefix).

    Equivalent to the Jacobi-Trudi determinant (a tested invariant) but far
    cheaper inside operator sweeps, where straight Schur values are shared
    across many skew pairs.
    """
    cache = ring.cache("skew_lr")
    key = (mu, nu, prefix)
    got = cache.get(key)
    if got is not None:
        return got
    if not contains(mu, nu):
        out = ring.zero()
    elif mu == nu:
        out = ring.one()
    else:
        from .partitions import partitions_of

        out = ring.zero()
        for eta in partitions_of(weight(mu) - weight(nu)):
            c = lr_coefficient(nu, eta, mu)
            if c:
                out = out + c * skew_schur_spec(ring, eta, (), prefix)
    cache[key] = out
    return out


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients by the lattice-word tableau rule


@lru_cache(maxsize=None)
def lr_coefficient(mu: tuple, nu: tuple, eta: tuple) -> int:
    """c^eta_{mu nu}: LR skew tableaux of shape eta/mu and content nu.

    Counts fillings whose rows weakly increase, columns strictly increase,
    and whose reverse reading word is a ballot sequence.
    """
    if weight(eta) != weight(mu) + weight(nu):
        return 0
    if not contains(eta, mu) or not contains(eta, nu):
        return 0
    if not nu:
        return 1 if eta == mu else 0
    rows = len(eta)
    cells = []
    for i in range(rows):
        start = mu[i] if i < len(mu) else 0
        cells.extend((i, j) for j in range(start, eta[i]))
    # reading order: rows top to bottom, right to left => ballot check is incremental
    cells.sort(key=lambda c: (c[0], -c[1]))
    content = list(nu)
    count = 0
    filling: dict = {}
    used = [0] * (len(nu) + 1)

    def rec(idx: int):
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        i, j = cells[idx]
        up = filling.get((i - 1, j))
        right = filling.get((i, j + 1))  # already placed in reading order
        for v in range(1, len(nu) + 1):
            if used[v] >= content[v - 1]:
                continue
            if v > 1 and used[v] >= used[v - 1]:  # ballot: #v never exceeds #(v-1)
                continue
            if up is not None and v <= up:  # strictly increasing down columns
                continue
            if right is not None and v > right:  # weakly increasing along rows
                continue
            filling[(i, j)] = v
            used[v] += 1
            rec(idx + 1)
            used[v] -= 1
            del filling[(i, j)]

    rec(0)
    return count


# ---------------------------------------------------------------------------
# Schur polynomials in the time variables t_k (p_k = k t_k)


def h_in_times(ring: QRing, m: int, cutoff: int) -> SeriesPoly:
    """h_m[t] with generating function sum h_m z^m = exp(sum t_k z^k)."""
    from .partitions import multiplicities, partitions_of

    out = SeriesPoly.zero(ring, ("t",), (cutoff,))
    if m < 0:
        return out
    for xi in partitions_of(m):
        denom = 1
        for mult in multiplicities(xi).values():
            for i in range(1, mult + 1):
                denom *= i
        out._accumulate((xi,), ring.from_fraction(Fraction(1, denom)))
    return out


def schur_in_times(ring: QRing, alpha: tuple, cutoff: int | None = None) -> SeriesPoly:
    """s_alpha[t] as a polynomial of weighted degree |alpha| in the t_k."""
    if cutoff is None:
        cutoff = weight(alpha)
    if weight(alpha) > cutoff:
        raise ValueError("cutoff below |alpha|")
    cache = ring.cache("schur_in_times")
    key = (alpha, cutoff)
    if key in cache:
        return cache[key]
    n = len(alpha)
    if n == 0:
        out = SeriesPoly.one(ring, ("t",), (cutoff,))
    else:
        out = _det(
            lambda i, j: h_in_times(ring, alpha[i] - i + j, cutoff),
            n,
            SeriesPoly.zero(ring, ("t",), (cutoff,)),
            SeriesPoly.one(ring, ("t",), (cutoff,)),
        )
    cache[key] = out
    return out


def schur_time_coefficient(alpha: tuple, xi: tuple) -> Fraction:
    """Rational coefficient of t_xi in s_alpha[t] (zero unless |xi| = |alpha|)."""
    from .partitions import character, multiplicities, z_mu

    if weight(alpha) != weight(xi):
        return Fraction(0)
    denom = 1
    for mult in multiplicities(xi).values():
        for i in range(1, mult + 1):
            denom *= i
    return Fraction(character(alpha, xi), denom)
