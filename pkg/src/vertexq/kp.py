"""Tau-function checks: the generalized-KdV reduction condition and Plucker
relations for the generating function at positive integer tau.

The tau series is carried in three families: the KP times t (weight of t_k is
k, from the substitution k t_k = p3_k), and optional formal p1/p2 parameter
variables.  Numeric parameter values may be substituted instead; the formal
route certifies all parameter values at once to the truncated order.
"""

from fractions import Fraction
from itertools import combinations

from . import mutations
from .errors import RangeError
from .partitions import (
    character,
    kappa,
    multiplicities,
    partitions_of,
    partitions_up_to,
    weight,
    z_mu,
)
from .qscalar import QRing, QScalar
from .reports import CheckReport
from .seriespoly import SeriesPoly
from .vertex import lllz_coefficient

TAU_FAMS = ("t", "p1", "p2")


def _t_coefficient(mu3: tuple, rho: tuple) -> Fraction:
    """Coefficient of t_rho in the p3-Schur expansion (p3_k = k t_k)."""
    denom = 1
    for m in multiplicities(rho).values():
        for i in range(1, m + 1):
            denom *= i
    return Fraction(character(mu3, rho), denom)


def build_tau(ring: QRing, N: int, p1=None, p2=("formal", 2), D_t: int = 6) -> SeriesPoly:
    """The tau series at tau = N with t_k = p3_k / k.

    Coefficients come from the closed-form expansion of the exponentiated
    generating function; only triples whose first two weights survive the
    parameter specification are visited.
    """
    if N < 1:
        raise ValueError("N must be a positive integer")
    b1 = _family_bound(p1)
    b2 = _family_bound(p2)
    cutoffs = (D_t, b1 if _is_formal(p1) else 0, b2 if _is_formal(p2) else 0)
    out = SeriesPoly.zero(ring, TAU_FAMS, cutoffs)
    tau = Fraction(N)
    r2 = -(1 + tau) / tau
    r3 = -1 / (1 + tau)
    from .hodge import _cached_lllz

    for mu1 in partitions_up_to(b1):
        for mu2 in partitions_up_to(b2):
            for mu3 in partitions_up_to(D_t):
                triple = (mu1, mu2, mu3)
                coeff = _cached_lllz(ring, triple)
                w = ring.q_monomial(
                    -(
                        Fraction(kappa(mu1)) * tau
                        + Fraction(kappa(mu2)) * r2
                        + Fraction(kappa(mu3)) * r3
                    )
                    / 2
                )
                base = coeff * w
                for k1, c1 in _expand_family(ring, mu1, p1):
                    for k2, c2 in _expand_family(ring, mu2, p2):
                        for rho in partitions_of(weight(mu3)):
                            ct = _t_coefficient(mu3, rho)
                            if not ct:
                                continue
                            out._accumulate((rho, k1, k2), base * c1 * c2 * ct)
    if mutations.is_active("tau-perturb"):
        out._accumulate(((2, 1), (), ()), ring.from_fraction(Fraction(1, 7)))
    return out


def _is_formal(spec) -> bool:
    return isinstance(spec, tuple) and bool(spec) and spec[0] == "formal"


def _family_bound(spec) -> int:
    if spec is None:
        return 0
    if _is_formal(spec):
        return spec[1]
    return len(spec)


def _expand_family(ring: QRing, mu: tuple, spec):
    """[(key, coeff)] pairs for one parameter family of the tau series."""
    if spec is None:
        return [((), ring.one())] if not mu else []
    if _is_formal(spec):
        if weight(mu) > spec[1]:
            return []
        return [
            (sigma, ring.from_fraction(Fraction(character(mu, sigma), z_mu(sigma))))
            for sigma in partitions_of(weight(mu))
        ]
    out = []
    total = ring.zero()
    hit = False
    for sigma in partitions_of(weight(mu)):
        c = Fraction(character(mu, sigma), z_mu(sigma))
        if not c:
            continue
        val = ring.one()
        ok = True
        for k in sigma:
            if k > len(spec):
                ok = False
                break
            val = val * spec[k - 1]
        if ok:
            total = total + val * c
            hit = True
    if hit or not mu:
        out.append(((), total if mu else ring.one()))
    return out


def check_reduction_condition(
    T: SeriesPoly, N: int, k_max: int = 2, m_max: int = 1, min_width: int = 20
) -> CheckReport:
    """d^2 log T / dt_k dt_{m(N+1)} = 0 as truncated series identities.

    Also reports (without asserting) whether the stronger condition
    dT/dt_{m(N+1)} = 0 happens to hold at this order.
    """
    D_t = T.cutoffs[0]
    report = CheckReport("kp_reduction", {"N": N, "k_max": k_max, "m_max": m_max})
    feasible = [
        (k, m)
        for k in range(1, k_max + 1)
        for m in range(1, m_max + 1)
        if k + m * (N + 1) <= D_t
    ]
    requested = [(k, m) for k in range(1, k_max + 1) for m in range(1, m_max + 1)]
    if feasible != requested:
        raise RangeError(
            f"t-cutoff {D_t} cannot reach every requested (k, m)", feasible=feasible
        )
    logT = T.log()
    strong = True
    for k, m in requested:
        d = logT.diff(0, k).diff(0, m * (N + 1))
        order = D_t - k - m * (N + 1)
        for key, coeff in sorted(d.terms.items()):
            if weight(key[0]) > order:
                continue
            cmp = coeff.compare(T.ring.zero(), min_width)
            report.record(cmp, {"k": k, "m": m, "monomial": [list(p) for p in key]})
        if not d.terms:
            report.pairs_checked += 1
    for m in range(1, m_max + 1):
        dT = T.diff(0, m * (N + 1))
        if any(
            not (c.exact and c.is_zero_on_window()) and not c.is_zero_on_window()
            for c in dT.terms.values()
        ):
            strong = False
    report.extras["strong_condition_holds_at_truncation"] = strong
    return report


# ---------------------------------------------------------------------------
# Plucker certificate


def schur_coefficients(T: SeriesPoly, size_bound: int) -> dict:
    """c_lam with T = sum c_lam s_lam[t], coefficients still polynomial in p1/p2."""
    ring = T.ring
    fams = T.families[1:]
    cuts = T.cutoffs[1:]
    out = {}
    for lam in partitions_up_to(size_bound):
        c = SeriesPoly.zero(ring, fams, cuts)
        for rho in partitions_of(weight(lam)):
            chi = character(lam, rho)
            if not chi:
                continue
            denom = 1
            for p in rho:
                denom *= p
            for key, coeff in T.terms.items():
                if key[0] != rho:
                    continue
                c._accumulate(key[1:], coeff * Fraction(chi, denom))
        out[lam] = c
    return out


def _maya_subset_to_partition(S: tuple, r: int) -> tuple:
    lam = tuple(s - (r - 1 - i) for i, s in enumerate(sorted(S, reverse=True)))
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def plucker_relations(size_bound: int, grids=((2, 4), (2, 5), (2, 6), (3, 6))):
    """Three-term-and-longer Plucker relation index families on finite grids.

    Yields lists of (sign, lam_a, lam_b) whose signed products must vanish;
    only relations whose partitions all fit in ``size_bound`` are emitted.
    """
    for r, n in grids:
        cols = range(n)
        for alpha in combinations(cols, r - 1):
            for beta in combinations(cols, r + 1):
                terms = []
                skip = False
                js = [b for b in beta if b not in alpha]
                if len(js) < 2:
                    continue  # degenerate: relation trivially 0 = 0
                for j, b in enumerate(beta):
                    if b in alpha:
                        continue
                    S_a = tuple(sorted(alpha + (b,)))
                    S_b = tuple(x for x in beta if x != b)
                    lam_a = _maya_subset_to_partition(S_a, r)
                    lam_b = _maya_subset_to_partition(S_b, r)
                    if weight(lam_a) > size_bound or weight(lam_b) > size_bound:
                        skip = True
                        break
                    # (-1)^j from deleting b out of beta, times the sign of
                    # sorting b into alpha
                    insert = sum(1 for a in alpha if a > b)
                    terms.append(((-1) ** (j + insert), lam_a, lam_b))
                if not skip and terms:
                    yield terms


def check_plucker(T: SeriesPoly, size_bound: int = 4, min_width: int = 20) -> CheckReport:
    """Evaluate the Plucker relation family on the extracted Schur coefficients."""
    ring = T.ring
    report = CheckReport("plucker", {"size_bound": size_bound})
    coeffs = schur_coefficients(T, size_bound)
    zero = SeriesPoly.zero(ring, T.families[1:], T.cutoffs[1:])
    seen = set()
    for terms in plucker_relations(size_bound):
        key = tuple(sorted((s, a, b) for s, a, b in terms))
        if key in seen:
            continue
        seen.add(key)
        acc = zero
        for sign, lam_a, lam_b in terms:
            acc = acc + coeffs[lam_a] * coeffs[lam_b] * Fraction(sign)
        ok = True
        for mono, c in acc.terms.items():
            cmp = c.compare(ring.zero(), min_width)
            if cmp.status != "pass":
                ok = False
                report.record(
                    cmp,
                    {
                        "relation": [[s, list(a), list(b)] for s, a, b in terms],
                        "monomial": [list(p) for p in mono],
                    },
                )
        if ok:
            report.pairs_checked += 1
    return report


def check_shifted_flow_form(ring: QRing, N: int, m_max: int = 2, D: int = 4, min_width: int = 20) -> CheckReport:
    """G_0(1/N) J_{-m(N+1)} = (-1)^m J_{-mN} G_0(1/N) on states up to D."""
    from .fock import G_ops, matrix_of

    report = CheckReport("shifted_flow_form", {"N": N, "m_max": m_max, "D": D})
    for m in range(1, m_max + 1):
        lhs = [(1, G_ops(ring, (), Fraction(1, N)) + [("J", -m * (N + 1))])]
        rhs = [(Fraction((-1) ** m), [("J", -m * N)] + G_ops(ring, (), Fraction(1, N)))]
        left = matrix_of(ring, lhs, D)
        right = matrix_of(ring, rhs, D)
        for key in sorted(left):
            cmp = left[key].compare(right[key], min_width)
            report.record(cmp, {"m": m, "lam": list(key[0]), "mu": list(key[1])})
    return report


def check_tau_factorization(
    ring: QRing, N: int, p1_bound: int = 1, p2_bound: int = 2, D_t: int = 4, min_width: int = 20
) -> CheckReport:
    """T(N,p1,p2,t) = T(N,0,p+,t) exp(sum (-1)^{m+1}(N+1) p1_m t_{m(N+1)})."""
    report = CheckReport(
        "tau_factorization", {"N": N, "p1_bound": p1_bound, "p2_bound": p2_bound, "D_t": D_t}
    )
    lhs = build_tau(ring, N, ("formal", p1_bound), ("formal", p2_bound), D_t)
    source = build_tau(ring, N, None, ("formal", N * p1_bound + p2_bound), D_t)
    bounds = (D_t, p1_bound, p2_bound)
    substituted = _tau_p_plus(source, N, bounds)
    anomaly = SeriesPoly.zero(ring, TAU_FAMS, bounds)
    m = 1
    while m <= p1_bound and m * (N + 1) <= D_t:
        anomaly._accumulate(
            (((m * (N + 1),), (m,), ())),
            ring.from_fraction(Fraction((-1) ** (m + 1) * (N + 1), 1)),
        )
        m += 1
    rhs = substituted * anomaly.exp()
    for key in sorted(set(lhs.terms) | set(rhs.terms)):
        cmp = lhs.coefficient(key).compare(rhs.coefficient(key), min_width)
        report.record(cmp, {"monomial": [list(p) for p in key]})
    return report


def _tau_p_plus(series: SeriesPoly, N: int, bounds) -> SeriesPoly:
    """p2_k -> (-1)^{k+1} N p1_{k/N} + p2_k inside a (t, p1, p2) series."""
    drop_sign = mutations.is_active("wrong-p-plus")

    def expand(key, coeff):
        rho, _, sigma = key
        results = [((rho, (), ()), coeff)]
        for k in sigma:
            new = []
            for (f0, f1, f2), c in results:
                new.append(((f0, f1, f2 + (k,)), c))
                if k % N == 0:
                    sign = 1 if drop_sign else (-1) ** (k + 1)
                    new.append(((f0, f1 + (k // N,), f2), c * Fraction(sign * N)))
            results = new
        for (f0, f1, f2), c in results:
            yield (
                f0,
                tuple(sorted(f1, reverse=True)),
                tuple(sorted(f2, reverse=True)),
            ), c

    return series.map_keys(expand, cutoffs=tuple(bounds))
