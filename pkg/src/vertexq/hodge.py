"""Generating functions of the three-partition amplitudes and their reductions.

Everything lives in truncated power-sum variables: three families p1, p2, p3
with per-family weight cutoffs.  The string-coupling variable never appears;
the identification q = exp(-sqrt(-1) lambda) is hard-wired, so each weight
e^{..lambda kappa..} is stored as the corresponding q-power.
"""

from fractions import Fraction

from . import mutations
from .partitions import (
    character,
    conjugate,
    kappa,
    multiplicities,
    partitions_of,
    partitions_up_to,
    weight,
    z_mu,
)
from .qscalar import QRing, QScalar
from .reports import CheckReport
from .schur import schur_spec
from .seriespoly import SeriesPoly
from .vertex import chi_double_sum, lllz_coefficient, vertex_C

P_FAMS = ("p1", "p2", "p3")


def _cached_lllz(ring: QRing, mu_triple) -> QScalar:
    cache = ring.cache("lllz")
    key = (mu_triple, mutations.active_names())
    if key not in cache:
        cache[key] = lllz_coefficient(ring, mu_triple)
    return cache[key]


def _schur_in_p(mu: tuple):
    """Expansion s_mu = sum_sigma chi_mu(sigma)/z_sigma p_sigma."""
    return [
        (sigma, Fraction(character(mu, sigma), z_mu(sigma)))
        for sigma in partitions_of(weight(mu))
    ]


def _weight_ratios(tau: Fraction):
    """(w2/w1, w3/w2, w1/w3) for w = (1, tau, -1-tau)."""
    return (tau, -(1 + tau) / tau, -1 / (1 + tau))


def expG_coefficients(ring: QRing, tau, bounds) -> SeriesPoly:
    """The disconnected generating function as a truncated 3-family series.

    Coefficient of p1_s1 p2_s2 p3_s3 collects, over all triples with matching
    weights, the closed-form coefficient times q^{-(1/2) sum kappa w_{a+1}/w_a}
    times the character expansion of each Schur factor.
    """
    tau = Fraction(tau)
    ratios = _weight_ratios(tau)
    out = SeriesPoly.zero(ring, P_FAMS, tuple(bounds))
    for mu1 in partitions_up_to(bounds[0]):
        for mu2 in partitions_up_to(bounds[1]):
            for mu3 in partitions_up_to(bounds[2]):
                triple = (mu1, mu2, mu3)
                coeff = _cached_lllz(ring, triple)
                w = ring.q_monomial(
                    -(
                        Fraction(kappa(mu1)) * ratios[0]
                        + Fraction(kappa(mu2)) * ratios[1]
                        + Fraction(kappa(mu3)) * ratios[2]
                    )
                    / 2
                )
                base = coeff * w
                for s1, c1 in _schur_in_p(mu1):
                    for s2, c2 in _schur_in_p(mu2):
                        for s3, c3 in _schur_in_p(mu3):
                            out._accumulate((s1, s2, s3), base * (c1 * c2 * c3))
    return out


def W_coefficients(ring: QRing, tau, bounds) -> SeriesPoly:
    """The vertex generating function, re-expressed in power sums."""
    tau = Fraction(tau)
    r = _weight_ratios(tau)
    factors = (1 + r[0], 1 + r[1], 1 + r[2])
    out = SeriesPoly.zero(ring, P_FAMS, tuple(bounds))
    for mu1 in partitions_up_to(bounds[0]):
        for mu2 in partitions_up_to(bounds[1]):
            for mu3 in partitions_up_to(bounds[2]):
                coeff = vertex_C(ring, (mu1, mu2, mu3))
                w = ring.q_monomial(
                    -(
                        Fraction(kappa(mu1)) * factors[0]
                        + Fraction(kappa(mu2)) * factors[1]
                        + Fraction(kappa(mu3)) * factors[2]
                    )
                    / 2
                )
                base = coeff * w
                for s1, c1 in _schur_in_p(mu1):
                    for s2, c2 in _schur_in_p(mu2):
                        for s3, c3 in _schur_in_p(mu3):
                            out._accumulate((s1, s2, s3), base * (c1 * c2 * c3))
    return out


def _p_plus_substitution(series: SeriesPoly, N: int, bounds) -> SeriesPoly:
    """Substitute p2_k -> (-1)^{k+1} N p1_{k/N} + p2_k (k divisible by N) into
    a series with empty p1-part, rebuilding it on the target cutoffs."""
    drop_sign = mutations.is_active("wrong-p-plus")

    def expand(key, coeff):
        _, sigma, rho = key
        results = [(((), (), rho), coeff)]
        for k in sigma:
            new = []
            for (f1, f2, f3), c in results:
                # p2_k branch
                new.append(((f1, f2 + (k,), f3), c))
                # N p1_{k/N} branch
                if k % N == 0:
                    sign = 1 if drop_sign else (-1) ** (k + 1)
                    new.append(((f1 + (k // N,), f2, f3), c * Fraction(sign * N)))
            results = new
        for (f1, f2, f3), c in results:
            yield (
                tuple(sorted(f1, reverse=True)),
                tuple(sorted(f2, reverse=True)),
                tuple(sorted(f3, reverse=True)),
            ), c

    return series.map_keys(expand, families=P_FAMS, cutoffs=tuple(bounds))


def _anomaly_exp(ring: QRing, N: int, bounds) -> SeriesPoly:
    """exp(sum_m (-1)^{m+1}/m p1_m p3_{m(N+1)}) on the given cutoffs."""
    arg = SeriesPoly.zero(ring, P_FAMS, tuple(bounds))
    m = 1
    while m <= bounds[0] and m * (N + 1) <= bounds[2]:
        arg._accumulate(
            (((m,), (), (m * (N + 1),))), ring.from_fraction(Fraction((-1) ** (m + 1), m))
        )
        m += 1
    return arg.exp()


def verify_reduction_tauN(ring: QRing, N: int, bounds=(3, 3, 3), min_width: int = 20) -> CheckReport:
    """exp G(p1,p2,p3;N) = exp G(0,p+,p3;N) * anomaly, termwise on the box."""
    report = CheckReport("reduction_tauN", {"N": N, "bounds": list(bounds)})
    lhs = expG_coefficients(ring, N, bounds)
    source = expG_coefficients(ring, N, (0, N * bounds[0] + bounds[1], bounds[2]))
    rhs = _p_plus_substitution(source, N, bounds) * _anomaly_exp(ring, N, bounds)
    for key in sorted(set(lhs.terms) | set(rhs.terms)):
        cmp = lhs.coefficient(key).compare(rhs.coefficient(key), min_width)
        report.record(cmp, {"monomial": [list(p) for p in key]})
    return report


def verify_reduction_tau1(ring: QRing, bounds=(3, 3, 3), min_width: int = 20) -> CheckReport:
    """The tau = 1 special case of the reduction identity."""
    report = verify_reduction_tauN(ring, 1, bounds, min_width)
    report.identity = "reduction_tau1"
    return report


def verify_quadratic_expansion(total_degree: int = 6) -> CheckReport:
    """exp(sum (-1)^{m+1}/m p_m(x) p_{2m}(z)) against its Schur expansion.

    Coefficientwise in (p_sigma(x), p_rho(z)); everything is rational, no
    q-series enter.
    """
    report = CheckReport("quadratic_expansion", {"total_degree": total_degree})
    lhs: dict = {((), ()): Fraction(1)}
    # direct expansion: sum over xi of (-1)^{|xi|-l(xi)}/z_xi p_xi(x) p_{2xi}(z)
    for s in range(1, total_degree // 3 + 1):
        for xi in partitions_of(s):
            key = (xi, tuple(2 * p for p in xi))
            lhs[key] = Fraction((-1) ** (s - len(xi)), z_mu(xi))
    rhs: dict = {}
    for s in range(0, total_degree // 3 + 1):
        for eta1 in partitions_of(s):
            for eta3 in partitions_of(2 * s):
                x = chi_double_sum(eta1, eta3)
                if not x:
                    continue
                for sigma in partitions_of(s):
                    c1 = Fraction(character(conjugate(eta1), sigma), z_mu(sigma))
                    if not c1:
                        continue
                    for rho in partitions_of(2 * s):
                        c3 = Fraction(character(eta3, rho), z_mu(rho))
                        if not c3:
                            continue
                        key = (sigma, rho)
                        rhs[key] = rhs.get(key, Fraction(0)) + x * c1 * c3
    for d1 in range(total_degree + 1):
        for sigma in partitions_of(d1):
            for d3 in range(total_degree - d1 + 1):
                for rho in partitions_of(d3):
                    key = (sigma, rho)
                    report.pairs_checked += 1
                    if lhs.get(key, Fraction(0)) != rhs.get(key, Fraction(0)):
                        report.status = "fail"
                        report.failures.append(
                            {
                                "monomial": [list(p) for p in key],
                                "lhs": str(lhs.get(key, Fraction(0))),
                                "rhs": str(rhs.get(key, Fraction(0))),
                            }
                        )
    return report


def verify_schur_expansion_prop43(ring: QRing, weight_bound: int = 2, min_width: int = 20) -> CheckReport:
    """Fermionic kernel of the tau=1 representation against its closed form.

    The Schur-function shell around the matrix element is common to both
    sides, so the executable content reduces to
    <t(nu+)| G_0(1) |t(nu3)> = q^{kappa(nu+)+kappa(nu3)/4}
    s_{nu+}(q^-rho) s_{nu3}(q^{-nu+-rho}) for all small pairs.
    """
    from .fock import G_ops, matrix_element

    report = CheckReport("schur_expansion_prop43", {"weight_bound": weight_bound})
    for nup in partitions_up_to(weight_bound):
        for nu3 in partitions_up_to(weight_bound):
            got = matrix_element(ring, G_ops(ring, (), 1), conjugate(nup), conjugate(nu3))
            expect = (
                ring.q_monomial(Fraction(kappa(nup)) + Fraction(kappa(nu3), 4))
                * schur_spec(ring, nup)
                * schur_spec(ring, nu3, nup)
            )
            cmp = got.compare(expect, min_width)
            report.record(cmp, {"nu_plus": list(nup), "nu3": list(nu3)})
    return report


def verify_theorem1_series(ring: QRing, tau, bounds=(2, 2, 2), min_width: int = 20) -> CheckReport:
    """W_coefficients equals expG_coefficients termwise (Theorem 1, series level)."""
    report = CheckReport("theorem1_series", {"tau": str(tau), "bounds": list(bounds)})
    lhs = W_coefficients(ring, tau, bounds)
    rhs = expG_coefficients(ring, tau, bounds)
    for key in sorted(set(lhs.terms) | set(rhs.terms)):
        cmp = lhs.coefficient(key).compare(rhs.coefficient(key), min_width)
        report.record(cmp, {"monomial": [list(p) for p in key]})
    return report
