"""Independent brute-force oracles.

Every nontrivial expected value in the test suite is grounded by one of the
oracles below before the corresponding engine path is trusted.  The oracles
deliberately use different algorithms from the engine:

* Schur polynomials here are sums over semistandard tableaux, never
  Jacobi-Trudi determinants.
* Border strips are enumerated geometrically on the diagram, never through
  Maya bead moves.
* Fermionic matrix elements are computed from explicit Clifford-algebra
  action on a finite Maya window, never through the engine's hop rules.
"""

from fractions import Fraction
from functools import lru_cache

from .errors import ConfigError
from .partitions import (
    contains,
    kappa,
    partitions_of,
    partitions_up_to,
    subpartitions,
    weight,
    z_mu,
)
from .reports import OracleReport

# ---------------------------------------------------------------------------
# Integer polynomial algebra (monomial dict, exponent tuples of fixed length)


def poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(e, 0) + ca * cb
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def poly_sub_scaled(p: dict, q: dict, c) -> dict:
    out = dict(p)
    for e, v in q.items():
        nv = out.get(e, 0) - c * v
        if nv:
            out[e] = nv
        elif e in out:
            del out[e]
    return out


@lru_cache(maxsize=None)
def schur_poly(lam: tuple, nvars: int) -> tuple:
    """Schur polynomial as a tuple of (exponents, coeff), via SSYT enumeration."""
    if not lam:
        return (((0,) * nvars, 1),)
    if len(lam) > nvars:
        return ()
    out: dict = {}
    rows = len(lam)

    def fill(row, col, prev_row, cur_row, counts):
        if row == rows:
            e = tuple(counts)
            out[e] = out.get(e, 0) + 1
            return
        if col == lam[row]:
            fill(row + 1, 0, cur_row, [], counts)
            return
        low = cur_row[col - 1] if col > 0 else 0
        if row > 0 and col < len(prev_row):
            low = max(low, prev_row[col] + 1)
        for v in range(low, nvars):
            cur_row.append(v)
            counts[v] += 1
            fill(row, col + 1, prev_row, cur_row, counts)
            counts[v] -= 1
            cur_row.pop()

    fill(0, 0, [], [], [0] * nvars)
    return tuple(sorted(out.items()))


def power_sum_poly(k: int, nvars: int) -> dict:
    out: dict = {}
    for i in range(nvars):
        e = [0] * nvars
        e[i] = k
        out[tuple(e)] = 1
    return out


def monomial_to_partition(e: tuple) -> tuple:
    return tuple(sorted((x for x in e if x), reverse=True))


def expand_in_schur(p: dict, nvars: int) -> dict:
    """Decompose a symmetric polynomial into Schur coefficients.

    Repeatedly strips the reverse-lex-leading monomial, whose sorted exponent
    is the leading partition of some Schur summand.
    """
    p = dict(p)
    out: dict = {}
    while p:
        e = max(p, key=lambda m: tuple(sorted(m, reverse=True)))
        lam = monomial_to_partition(e)
        lead = [0] * nvars
        lead[: len(lam)] = list(lam)
        c = p[tuple(lead)]
        out[lam] = c
        p = poly_sub_scaled(p, dict(schur_poly(lam, nvars)), c)
    return out


@lru_cache(maxsize=None)
def _power_product_schur_expansion(nu: tuple) -> dict:
    d = weight(nu)
    nvars = d
    p = {(0,) * nvars: 1}
    for k in nu:
        p = poly_mul(p, power_sum_poly(k, nvars))
    return expand_in_schur(p, nvars)


def character_frobenius(mu: tuple, nu: tuple) -> int:
    """chi_mu(nu) read off from the Schur expansion of the power-sum product."""
    if weight(mu) != weight(nu):
        raise ValueError("weights must agree")
    return _power_product_schur_expansion(nu).get(mu, 0)


@lru_cache(maxsize=None)
def schur_product_expand(mu: tuple, nu: tuple) -> dict:
    """s_mu * s_nu in the Schur basis, by polynomial multiplication."""
    nvars = weight(mu) + weight(nu)
    if nvars == 0:
        return {(): 1}
    p = poly_mul(dict(schur_poly(mu, nvars)), dict(schur_poly(nu, nvars)))
    return expand_in_schur(p, nvars)


def lr_oracle(mu: tuple, nu: tuple, eta: tuple) -> int:
    return schur_product_expand(mu, nu).get(eta, 0)


def power_sum_to_schur(nu: tuple) -> dict:
    """p_nu = sum_mu chi_mu(nu) s_mu, as a dict (the inverse Frobenius expansion)."""
    return dict(_power_product_schur_expansion(nu))


# ---------------------------------------------------------------------------
# Geometric border strips


def _skew_cells(outer: tuple, inner: tuple) -> list:
    cells = []
    for i in range(len(outer)):
        start = inner[i] if i < len(inner) else 0
        cells.extend((i, j) for j in range(start, outer[i]))
    return cells


def _is_ribbon(cells: list) -> bool:
    if not cells:
        return False
    cellset = set(cells)
    for (i, j) in cells:
        if (i + 1, j) in cellset and (i, j + 1) in cellset and (i + 1, j + 1) in cellset:
            return False
    seen = {cells[0]}
    frontier = [cells[0]]
    while frontier:
        i, j = frontier.pop()
        for n in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if n in cellset and n not in seen:
                seen.add(n)
                frontier.append(n)
    return len(seen) == len(cells)


def border_strip_removals_geometric(alpha: tuple, k: int) -> tuple:
    """All (beta, (-1)^height) with alpha/beta a border strip of length k.

    Pure diagram geometry: containment, connectivity, and the 2x2-free
    condition are checked on explicit cell sets.
    """
    out = []
    w = weight(alpha) - k
    if w < 0:
        return ()
    for beta in partitions_of(w):
        if not contains(alpha, beta):
            continue
        cells = _skew_cells(alpha, beta)
        if not _is_ribbon(cells):
            continue
        rows = {i for i, _ in cells}
        height = max(rows) - min(rows)
        out.append((beta, (-1) ** height))
    out.sort(key=lambda bs: tuple(-p for p in bs[0]))
    return tuple(out)


# ---------------------------------------------------------------------------
# Direct specialization tail (vs the engine's Euler q-exponential tail)


def h_tail_direct(ring, m: int, prefix: tuple, extra_factors: int = 4):
    """h_m at q^{-prefix-rho} by truncated expansion of finitely many factors.

    The alphabet exponents e_i = -prefix_i + i - 1/2 increase strictly, so a
    degree-m monomial involving letter i0 has exponent >= e_{i0} + (sum of the
    m smallest exponents) - e_m.  Letters with e_{i0} > e_m + window span can
    therefore never reach the window and are omitted.
    """
    if m < 0:
        return ring.zero()
    if m == 0:
        return ring.one()
    l = len(prefix)
    span = Fraction(ring.window, 2 * ring.lattice_denom)

    def letter(i):  # 1-based
        nu_i = prefix[i - 1] if i <= l else 0
        return Fraction(-nu_i + i) - Fraction(1, 2)

    cut = letter(m) + span
    imax = max(m, l) + extra_factors
    while letter(imax) <= cut:
        imax += 1
    xs = [letter(i) for i in range(1, imax + 1)]
    # h-coefficients of prod 1/(1 - x_i z) up to z^m, one letter at a time
    hs = [ring.one()] + [ring.zero() for _ in range(m)]
    for e in xs:
        x = ring.q_monomial(e)
        for d in range(1, m + 1):
            hs[d] = hs[d] + x * hs[d - 1]
    # the first omitted letter pollutes from e_{imax+1} + (m-1 smallest letters)
    bound = ring.units(letter(imax + 1) + sum(letter(i) for i in range(1, m)))
    from .qscalar import QScalar, _min_hi

    return QScalar(ring, hs[m].coeffs, _min_hi(hs[m].hi, bound))


# ---------------------------------------------------------------------------
# Finite-window Clifford-algebra fermion simulator


class CliffordWindow:
    """Explicit fermion modes on a finite window of Maya positions.

    Mode x (an integer) is the creation index of psi_x; in the charge-0
    dictionary a partition lambda occupies modes {i - 1 - lambda_i}.  States
    are dicts mapping frozensets of in-window occupied modes to QScalar
    amplitudes.  Below the window every mode is free, above it every mode is
    occupied; both conventions are checked on entry.
    """

    def __init__(self, ring, lo: int, hi: int):
        if lo >= 0 or hi <= 0:
            raise ConfigError("window must straddle 0")
        self.ring = ring
        self.lo = lo
        self.hi = hi  # modes lo..hi-1 are in-window

    def state(self, lam: tuple) -> dict:
        modes = set()
        i = 1
        while True:
            m = (i - 1) - (lam[i - 1] if i <= len(lam) else 0)
            if m >= self.hi:
                break
            if m < self.lo:
                raise ConfigError("window too small for this partition")
            modes.add(m)
            i += 1
        return {frozenset(modes): self.ring.one()}

    def _psi(self, n: int, vec: dict, dagger: bool) -> dict:
        """Apply psi_n (dagger=False) or psi*_n (annihilates mode -n)."""
        mode = n if not dagger else -n
        if mode < self.lo or mode >= self.hi:
            raise ConfigError("mode escapes the window")
        out: dict = {}
        for S, amp in vec.items():
            if dagger:
                if mode not in S:
                    continue
                sign = (-1) ** sum(1 for s in S if s < mode)
                T = S - {mode}
            else:
                if mode in S:
                    continue
                sign = (-1) ** sum(1 for s in S if s < mode)
                T = S | {mode}
            out[T] = out.get(T, self.ring.zero()) + sign * amp
        return out

    def apply_bilinear(self, terms, vec: dict) -> dict:
        """Apply sum of c * :psi_a psi*_b: given as (a, b, c, vac) tuples.

        ``vac`` is the normal-ordering constant <0|psi_a psi*_b|0> to subtract.
        """
        out: dict = {}
        for a, b, c, vac in terms:
            contrib = self._psi(a, self._psi(b, vec, dagger=True), dagger=False)
            for S, amp in contrib.items():
                out[S] = out.get(S, self.ring.zero()) + c * amp
            if vac:
                for S, amp in vec.items():
                    out[S] = out.get(S, self.ring.zero()) - (c * vac) * amp
        return {S: a for S, a in out.items() if not a.is_zero_on_window() or not a.exact}

    def _mode_range_terms(self, m: int, weight_of_n):
        """Terms of sum_n w(n) :psi_{m-n} psi*_n: with both modes in-window."""
        terms = []
        for n in range(-self.hi + 1, -self.lo + 1):
            a = m - n
            if a < self.lo or a >= self.hi:
                continue
            vac = 1 if (m == 0 and n <= 0) else 0
            terms.append((a, n, weight_of_n(n), vac))
        return terms

    def op_J(self, m: int):
        one = Fraction(1)
        return self._mode_range_terms(m, lambda n: self.ring.from_fraction(one))

    def op_K(self):
        return self._mode_range_terms(
            0, lambda n: self.ring.from_fraction(Fraction((2 * n - 1) ** 2, 4))
        )

    def op_L0(self):
        return self._mode_range_terms(0, lambda n: self.ring.from_fraction(Fraction(n)))

    def op_W0(self):
        return self._mode_range_terms(0, lambda n: self.ring.from_fraction(Fraction(n * n)))

    def matrix_element_bilinear(self, terms, lam: tuple, mu: tuple, constant=None):
        """<lam| (sum terms + constant) |mu> computed in the window."""
        vec = self.apply_bilinear(terms, self.state(mu))
        target = next(iter(self.state(lam)))
        out = vec.get(target, self.ring.zero())
        if constant is not None and lam == mu:
            out = out + constant
        return out

    def op_V(self, k: int, m: int):
        """V^{(k)}_m terms plus its constant part, as (terms, constant)."""
        pref = self.ring.q_monomial(Fraction(-k * (m + 1), 2))
        terms = [
            (a, n, pref * self.ring.q_monomial(Fraction(k) * n), vac)
            for a, n, _, vac in self._mode_range_terms(m, lambda n: 1)
        ]
        const = None
        if m == 0 and k != 0:
            qk = self.ring.q_monomial(Fraction(k))
            one = self.ring.one()
            const = -(self.ring.q_monomial(Fraction(k, 2)) * (one - qk).invert())
        return terms, const


# ---------------------------------------------------------------------------
# Unpruned LLLZ re-summation (engine-independent index enumeration)


def lllz_unpruned(ring, mu1: tuple, mu2: tuple, mu3: tuple):
    """The closed-form triple-vertex coefficient with naive full index loops.

    Iterates every (nu1, nu3, nuplus, eta1, eta3) with the weights allowed by
    the Littlewood-Richardson grading, with no support-based pruning.
    """
    from .schur import lr_coefficient, schur_spec
    from .vertex import chi_double_sum
    from .partitions import conjugate

    w1, w3 = weight(mu1), weight(mu3)
    total = ring.zero()
    for s in range(0, min(w1, w3 // 2) + 1):
        for eta1 in partitions_of(s):
            for eta3 in partitions_of(2 * s):
                x = chi_double_sum(eta1, eta3)
                for nu1 in partitions_of(w1 - s):
                    c1 = lr_coefficient(conjugate(eta1), nu1, mu1)
                    for nu3 in partitions_of(w3 - 2 * s):
                        c3 = lr_coefficient(eta3, conjugate(nu3), mu3)
                        for nuplus in partitions_of(weight(nu1) + weight(mu2)):
                            c2 = lr_coefficient(conjugate(nu1), mu2, nuplus)
                            c = c1 * c2 * c3
                            if not c or not x:
                                continue
                            term = ring.q_monomial(
                                Fraction(kappa(nuplus)) + Fraction(kappa(nu3), 4)
                            )
                            term = term * schur_spec(ring, nuplus, ())
                            term = term * schur_spec(ring, nu3, nuplus)
                            total = total + (c * x) * term
    framing = ring.q_monomial(
        Fraction(kappa(mu1), 2) - Fraction(kappa(mu2)) - Fraction(kappa(mu3), 4)
    )
    return framing * total


# ---------------------------------------------------------------------------
# Oracle suite driver


def run_oracles(ring=None, scope=None, bounds=None) -> list:
    """Execute the oracle batteries and return one report per instance.

    ``scope`` is a set drawn from {"characters", "lr", "h-tail", "fock",
    "lllz"}; None means all.  ``bounds`` may override the documented default
    ranges (weights <= 8, fermion windows <= 24 sites).
    """
    from . import fock
    from .partitions import character
    from .schur import h_spec, lr_coefficient
    from .qscalar import QRing
    from .vertex import lllz_coefficient

    scope = set(scope) if scope else {"characters", "lr", "h-tail", "fock", "lllz"}
    bounds = bounds or {}
    if ring is None:
        ring = QRing(2)
    reports = []

    if "characters" in scope:
        d_max = bounds.get("character_weight", 6)
        for d in range(1, d_max + 1):
            for mu in partitions_of(d):
                for nu in partitions_of(d):
                    o = character_frobenius(mu, nu)
                    e = character(mu, nu)
                    reports.append(
                        OracleReport(
                            "character", f"chi_{mu}({nu})", o, e,
                            "pass" if o == e else "fail",
                        )
                    )

    if "lr" in scope:
        w_max = bounds.get("lr_weight", 8)
        for mu in partitions_up_to(w_max):
            for nu in partitions_up_to(w_max - weight(mu)):
                expansion = schur_product_expand(mu, nu)
                for eta in partitions_of(weight(mu) + weight(nu)):
                    o = expansion.get(eta, 0)
                    e = lr_coefficient(mu, nu, eta)
                    if o or e:
                        reports.append(
                            OracleReport(
                                "lr_coefficient", f"c^{eta}_({mu},{nu})", o, e,
                                "pass" if o == e else "fail",
                            )
                        )

    if "h-tail" in scope:
        m_max = bounds.get("h_weight", 10)
        for prefix in ((), (1,), (2, 1), (3, 1, 1)):
            for m in range(0, m_max + 1):
                o = h_tail_direct(ring, m, prefix)
                e = h_spec(ring, m, prefix)
                cmp = o.compare(e, min_width=20)
                reports.append(
                    OracleReport(
                        "h_spec", f"h_{m}(q^-{prefix or 'rho'})", repr(o), repr(e),
                        "pass" if cmp.status == "pass" else "fail",
                    )
                )

    if "fock" in scope:
        size = bounds.get("fock_weight", 5)
        win = bounds.get("fock_window", 24)
        cw = CliffordWindow(ring, -win // 2, win // 2)
        states = partitions_up_to(size)
        ops = [("K", None), ("J", 1), ("J", 2), ("J", -1), ("J", -2),
               ("V", (1, 1)), ("V", (1, -1)), ("V", (2, 0)), ("V", (1, 0)), ("V", (-1, 1))]
        for kind, arg in ops:
            for mu in states:
                for lam in states:
                    if kind == "K":
                        terms, const = cw.op_K(), None
                        eng_ops = [("K",)]
                    elif kind == "J":
                        terms, const = cw.op_J(arg), None
                        eng_ops = [("J", arg)]
                    else:
                        terms, const = cw.op_V(*arg)
                        eng_ops = [("V",) + arg]
                    o = cw.matrix_element_bilinear(terms, lam, mu, const)
                    e = fock.matrix_element(ring, eng_ops, lam, mu)
                    cmp = o.compare(e, min_width=10)
                    if cmp.status == "pass" and o.is_zero_on_window():
                        continue
                    reports.append(
                        OracleReport(
                            "fock_apply", f"<{lam}|{kind}{arg if arg else ''}|{mu}>",
                            repr(o), repr(e), "pass" if cmp.status == "pass" else "fail",
                        )
                    )

    if "lllz" in scope:
        w_max = bounds.get("lllz_weight", 3)
        for w in range(w_max + 1):
            for mu1 in partitions_up_to(w):
                for mu2 in partitions_up_to(w - weight(mu1)):
                    for mu3 in partitions_up_to(w - weight(mu1) - weight(mu2)):
                        if weight(mu1) + weight(mu2) + weight(mu3) != w:
                            continue
                        o = lllz_unpruned(ring, mu1, mu2, mu3)
                        e = lllz_coefficient(ring, (mu1, mu2, mu3))
                        cmp = o.compare(e, min_width=20)
                        reports.append(
                            OracleReport(
                                "lllz_coefficient", f"tildeC_{(mu1, mu2, mu3)}",
                                repr(o), repr(e),
                                "pass" if cmp.status == "pass" else "fail",
                            )
                        )

    return reports
