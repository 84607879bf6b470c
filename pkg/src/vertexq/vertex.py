"""The topological vertex, its closed-form coefficients, and Theorem-1 checks.

``vertex_C`` evaluates the skew-Schur definition; ``lllz_coefficient``
evaluates the closed-form quintuple sum with Littlewood-Richardson support
pruning; ``vertex_C_via_fock`` recovers the same amplitude from a fermionic
matrix element at any admissible tau.  The verify_* drivers turn the
identities relating them into pass/fail reports.
"""

from fractions import Fraction
from functools import lru_cache

from . import mutations
from .errors import InconclusiveWindow
from .fock import G_ops, matrix_element
from .partitions import (
    character,
    conjugate,
    contains,
    double,
    kappa,
    partitions_of,
    partitions_up_to,
    weight,
    z_mu,
)
from .qscalar import QRing, QScalar
from .reports import CheckReport
from .schur import lr_coefficient, schur_spec, skew_schur_spec


@lru_cache(maxsize=None)
def chi_double_sum(eta1: tuple, eta3: tuple) -> Fraction:
    """sum_xi chi_{eta1}(xi) chi_{eta3}(2 xi) / z_xi; zero unless |eta3| = 2|eta1|."""
    if weight(eta3) != 2 * weight(eta1):
        return Fraction(0)
    total = Fraction(0)
    for xi in partitions_of(weight(eta1)):
        c1 = character(eta1, xi)
        if not c1:
            continue
        c3 = character(eta3, double(xi))
        if not c3:
            continue
        total += Fraction(c1 * c3, z_mu(xi))
    return total


mutations.register_cache(chi_double_sum.cache_clear)


def vertex_C(ring: QRing, mu_triple) -> QScalar:
    """The vertex amplitude from specialized skew Schur functions.

    q^{kappa(mu1)/2} s_{t(mu2)}(q^-rho)
        sum_eta s_{mu1/eta}(q^{-t(mu2)-rho}) s_{t(mu3)/eta}(q^{-mu2-rho}).
    """
    mu1, mu2, mu3 = (tuple(m) for m in mu_triple)
    tmu2, tmu3 = conjugate(mu2), conjugate(mu3)
    total = ring.zero()
    for w in range(min(weight(mu1), weight(mu3)) + 1):
        for eta in partitions_of(w):
            if not (contains(mu1, eta) and contains(tmu3, eta)):
                continue
            total = total + skew_schur_spec(ring, mu1, eta, tmu2) * skew_schur_spec(
                ring, tmu3, eta, mu2
            )
    out = schur_spec(ring, tmu2) * total
    if not mutations.is_active("drop-framing"):
        out = ring.q_monomial(Fraction(kappa(mu1), 2)) * out
    return out


def vertex_C_via_fock(ring: QRing, mu_triple, tau) -> QScalar:
    """The same amplitude through the fermionic kernel; tau-independent."""
    mu1, mu2, mu3 = (tuple(m) for m in mu_triple)
    tau = Fraction(tau)
    pref = ring.q_monomial(
        (1 + tau) / 2 * kappa(mu1)
        - Fraction(kappa(mu2)) / (2 * tau)
        + tau / (2 * (1 + tau)) * kappa(mu3)
    )
    elem = matrix_element(ring, G_ops(ring, conjugate(mu2), tau), mu1, conjugate(mu3))
    return pref * elem


def two_partition_coefficient(ring: QRing, nuplus: tuple, nu3: tuple) -> QScalar:
    """Closed form for the mu1 = 0 coefficients:
    q^{-kappa(nu3)/2} s_{nu+}(q^-rho) s_{t(nu3)}(q^{-nu+-rho})."""
    return (
        ring.q_monomial(Fraction(-kappa(nu3), 2))
        * schur_spec(ring, nuplus)
        * schur_spec(ring, conjugate(nu3), nuplus)
    )


def lllz_coefficient(ring: QRing, mu_triple) -> QScalar:
    """Closed-form coefficient: quintuple LR-constrained sum with framing weight.

    Indices are driven by the gradings |eta1| = |xi| = s, |eta3| = 2s,
    |nu1| = |mu1| - s, |nu3| = |mu3| - 2s, |nu+| = |nu1| + |mu2|; LR support
    conditions prune each loop.
    """
    mu1, mu2, mu3 = (tuple(m) for m in mu_triple)
    w1, w2, w3 = weight(mu1), weight(mu2), weight(mu3)
    total = ring.zero()
    for s in range(0, min(w1, w3 // 2) + 1):
        for eta1 in partitions_of(s):
            if s and not contains(mu1, conjugate(eta1)):
                continue
            for eta3 in partitions_of(2 * s):
                if s and not contains(mu3, eta3):
                    continue
                x = chi_double_sum(eta1, eta3)
                if not x:
                    continue
                for nu1 in partitions_of(w1 - s):
                    c1 = lr_coefficient(conjugate(eta1), nu1, mu1)
                    if not c1:
                        continue
                    tnu1 = conjugate(nu1)
                    for nu3 in partitions_of(w3 - 2 * s):
                        c3 = lr_coefficient(eta3, conjugate(nu3), mu3)
                        if not c3:
                            continue
                        for nuplus in partitions_of(w1 - s + w2):
                            if not (contains(nuplus, tnu1) and contains(nuplus, mu2)):
                                continue
                            c2 = lr_coefficient(tnu1, mu2, nuplus)
                            if not c2:
                                continue
                            term = ring.q_monomial(
                                Fraction(kappa(nuplus)) + Fraction(kappa(nu3), 4)
                            )
                            term = term * schur_spec(ring, nuplus)
                            term = term * schur_spec(ring, nu3, nuplus)
                            total = total + (c1 * c2 * c3 * x) * term
    framing = ring.q_monomial(
        Fraction(kappa(mu1), 2) - Fraction(kappa(mu2)) - Fraction(kappa(mu3), 4)
    )
    return framing * total


def _triples(weight_bound: int):
    for mu1 in partitions_up_to(weight_bound):
        for mu2 in partitions_up_to(weight_bound - weight(mu1)):
            for mu3 in partitions_up_to(weight_bound - weight(mu1) - weight(mu2)):
                yield (mu1, mu2, mu3)


def theorem1_pair(ring: QRing, mu_triple):
    """(closed-form coefficient, reframed vertex) for one triple."""
    lhs = lllz_coefficient(ring, mu_triple)
    total_kappa = sum(kappa(tuple(m)) for m in mu_triple)
    rhs = ring.q_monomial(Fraction(-total_kappa, 2)) * vertex_C(ring, mu_triple)
    return lhs, rhs


def verify_theorem1(
    ring: QRing, weight_bound: int, min_width: int = 20, jobs: int = 1
) -> CheckReport:
    """Closed form equals q^{-sum kappa/2} times the vertex, all |mu| <= bound."""
    report = CheckReport("theorem1", {"weight_bound": weight_bound})
    triples = list(_triples(weight_bound))
    for mu_triple, cmp in _map_triples(ring, _theorem1_compare, triples, min_width, jobs):
        report.record(cmp, {"mu": [list(m) for m in mu_triple]})
    return report


def _theorem1_compare(ring, mu_triple, min_width):
    lhs, rhs = theorem1_pair(ring, mu_triple)
    return lhs.compare(rhs, min_width)


def _cyclic_compare(ring, mu_triple, min_width):
    mu1, mu2, mu3 = mu_triple
    a = vertex_C(ring, (mu1, mu2, mu3))
    b = vertex_C(ring, (mu2, mu3, mu1))
    return a.compare(b, min_width)


def verify_cyclic(ring: QRing, weight_bound: int, min_width: int = 20, jobs: int = 1) -> CheckReport:
    """C_(mu1,mu2,mu3) = C_(mu2,mu3,mu1) for all triples up to the bound."""
    report = CheckReport("cyclic", {"weight_bound": weight_bound})
    triples = list(_triples(weight_bound))
    for mu_triple, cmp in _map_triples(ring, _cyclic_compare, triples, min_width, jobs):
        report.record(cmp, {"mu": [list(m) for m in mu_triple]})
    return report


def _map_triples(ring, fn, triples, min_width, jobs):
    if jobs and jobs > 1:
        from multiprocessing import get_context

        with get_context("fork").Pool(jobs) as pool:
            results = pool.starmap(
                _worker_compare,
                [(fn, ring.lattice_denom, ring.window, t, min_width) for t in triples],
                chunksize=max(1, len(triples) // (4 * jobs)),
            )
        return list(zip(triples, results))
    return [(t, fn(ring, t, min_width)) for t in triples]


def _worker_compare(fn, lattice_denom, window, mu_triple, min_width):
    from .qscalar import shared_ring

    # each worker process keeps its own shared ring so caches amortize
    ring = shared_ring(lattice_denom, window)
    return fn(ring, mu_triple, min_width)


def verify_reduction_C(ring: QRing, mu_triple, min_width: int = 20) -> CheckReport:
    """The tau=1 reduction of the closed-form coefficients to two-partition ones.

    q^{-kappa(mu1)/2 + kappa(mu2) + kappa(mu3)/4} tildeC_mu =
      sum c c c q^{kappa(nu+) + kappa(nu3)/4} tildeC_(0,nu+,nu3) X(eta1,eta3).
    """
    mu1, mu2, mu3 = (tuple(m) for m in mu_triple)
    report = CheckReport("reduction_C", {"mu": [list(m) for m in mu_triple]})
    lhs = ring.q_monomial(
        Fraction(-kappa(mu1), 2) + Fraction(kappa(mu2)) + Fraction(kappa(mu3), 4)
    ) * lllz_coefficient(ring, mu_triple)
    w1, w2, w3 = weight(mu1), weight(mu2), weight(mu3)
    rhs = ring.zero()
    for s in range(0, min(w1, w3 // 2) + 1):
        for eta1 in partitions_of(s):
            for eta3 in partitions_of(2 * s):
                x = chi_double_sum(eta1, eta3)
                if not x:
                    continue
                for nu1 in partitions_of(w1 - s):
                    c1 = lr_coefficient(conjugate(eta1), nu1, mu1)
                    if not c1:
                        continue
                    for nu3 in partitions_of(w3 - 2 * s):
                        c3 = lr_coefficient(eta3, nu3, mu3)
                        if not c3:
                            continue
                        for nuplus in partitions_of(w1 - s + w2):
                            c2 = lr_coefficient(conjugate(nu1), mu2, nuplus)
                            if not c2:
                                continue
                            term = ring.q_monomial(
                                Fraction(kappa(nuplus)) + Fraction(kappa(nu3), 4)
                            ) * two_partition_coefficient(ring, nuplus, nu3)
                            rhs = rhs + (c1 * c2 * c3 * x) * term
    report.record(lhs.compare(rhs, min_width), {"mu": [list(m) for m in mu_triple]})
    return report


def verify_tau_independence(
    ring: QRing, weight_bound: int, taus, min_width: int = 20
) -> CheckReport:
    """vertex_C_via_fock agrees with vertex_C for every requested tau."""
    report = CheckReport("tau_independence", {"weight_bound": weight_bound, "taus": [str(t) for t in taus]})
    for mu_triple in _triples(weight_bound):
        direct = vertex_C(ring, mu_triple)
        for tau in taus:
            try:
                via = vertex_C_via_fock(ring, mu_triple, tau)
            except InconclusiveWindow:
                report.record(
                    _inconclusive_cmp(), {"mu": [list(m) for m in mu_triple], "tau": str(tau)}
                )
                continue
            cmp = via.compare(direct, min_width)
            report.record(cmp, {"mu": [list(m) for m in mu_triple], "tau": str(tau)})
    return report


def _inconclusive_cmp():
    from .qscalar import WindowComparison

    return WindowComparison("inconclusive", 0, None, True)
