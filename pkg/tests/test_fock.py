from fractions import Fraction

import pytest

from vertexq import mutations
from vertexq.fock import (
    G_ops,
    L_ops,
    apply_ops,
    basis_vector,
    check_exchange_formula,
    check_factorization,
    check_shift_symmetry,
    matrix_element,
    matrix_of,
    needed_cutoff,
    phi,
)
from vertexq.oracles import CliffordWindow
from vertexq.partitions import conjugate, kappa, partitions_up_to, weight
from vertexq.qscalar import QRing
from vertexq.schur import schur_spec, skew_schur_spec


@pytest.fixture(scope="module")
def ring():
    return QRing(2, window=40)


def test_J_single_box(ring):
    vec = apply_ops(ring, [("J", -1)], basis_vector(ring, ()), 5)
    assert list(vec.terms) == [(1,)]
    assert vec.coefficient((1,)).compare(ring.one()).status == "pass"


def test_K_eigenvalue(ring):
    vec = apply_ops(ring, [("K",)], basis_vector(ring, (2,)), 5)
    assert vec.coefficient((2,)).compare(ring.from_fraction(2)).status == "pass"
    vec = apply_ops(ring, [("K",)], basis_vector(ring, (2, 1)), 5)
    assert not vec.terms  # kappa((2,1)) = 0


def test_V0_vacuum_expectation(ring):
    for k in (1, 2, 3):
        got = matrix_element(ring, [("V", k, 0)], (), ())
        expect = -ring.geometric_sum(Fraction(k, 2), k)
        assert got.compare(expect, 20).status == "pass"


def test_V0_diagonal_matches_phi(ring):
    for k in (1, 2, -1, -2):
        for lam in partitions_up_to(4):
            got = matrix_element(ring, [("V", k, 0)], lam, lam)
            assert got.compare(phi(ring, k, lam), 20).status == "pass"


def test_engine_matches_clifford_window(ring):
    cw = CliffordWindow(ring, -12, 12)
    states = partitions_up_to(5)
    cases = [("K", None), ("J", 1), ("J", 2), ("J", -2), ("V", (1, 1)), ("V", (2, -1)), ("V", (1, 0)), ("V", (-1, 0))]
    for kind, arg in cases:
        for mu in states:
            for lam in states:
                if kind == "K":
                    terms, const = cw.op_K(), None
                    ops = [("K",)]
                elif kind == "J":
                    terms, const = cw.op_J(arg), None
                    ops = [("J", arg)]
                else:
                    terms, const = cw.op_V(*arg)
                    ops = [("V",) + arg]
                oracle = cw.matrix_element_bilinear(terms, lam, mu, const)
                engine = matrix_element(ring, ops, lam, mu)
                assert oracle.compare(engine, 10).status == "pass", (kind, arg, lam, mu)


def test_quantum_torus_commutator(ring):
    # [V^k_m, V^l_n] = (q^{-(kn-lm)/2} - q^{(kn-lm)/2}) V^{k+l}_{m+n} + m delta delta
    # (unit-test slice; the full |k|,|l|,|m|,|n| <= 2 sweep runs in acceptance)
    D = 3
    cases = [
        (1, 1, 1, -1), (1, -1, 1, -1), (2, 1, -1, 0), (1, 0, -1, 0),
        (0, 2, 1, -2), (0, 1, 0, -1), (2, -1, -2, 1), (1, 2, -1, -2),
    ]
    for k, m, l, n in cases:
        a, b = _v(k, m), _v(l, n)
        lhs = [(1, [a, b]), (-1, [b, a])]
        x = Fraction(k * n - l * m, 2)
        w = ring.q_monomial(-x) - ring.q_monomial(x)
        rhs = [(w, [_v(k + l, m + n)])]
        if k + l == 0 and m + n == 0:
            rhs.append((Fraction(m), []))
        left = matrix_of(ring, lhs, D)
        right = matrix_of(ring, rhs, D)
        for key in left:
            assert left[key].compare(right[key], 10).status != "fail", (k, m, l, n, key)


def _v(k, m):
    return ("J", m) if k == 0 else ("V", k, m)


def test_gamma_adjointness(ring):
    for spec in ((), (2, 1)):
        for lam in partitions_up_to(4):
            for mu in partitions_up_to(4):
                a = matrix_element(ring, [("G+", spec)], lam, mu)
                b = matrix_element(ring, [("G-", spec)], mu, lam)
                assert a.compare(b, 20).status == "pass"
                ap = matrix_element(ring, [("G'+", spec)], lam, mu)
                bp = matrix_element(ring, [("G'-", spec)], mu, lam)
                assert ap.compare(bp, 20).status == "pass"


def test_gamma_matrix_elements_are_skew_schur(ring):
    for lam in partitions_up_to(4):
        for mu in partitions_up_to(4):
            got = matrix_element(ring, [("G-", ())], lam, mu)
            assert got.compare(skew_schur_spec(ring, lam, mu), 20).status == "pass"
            gotp = matrix_element(ring, [("G'-", ())], lam, mu)
            expe = skew_schur_spec(ring, conjugate(lam), conjugate(mu))
            assert gotp.compare(expe, 20).status == "pass"


def test_self_adjointness_two_legged(ring):
    ops = [("G-", ()), ("G+", ())]
    for alpha in partitions_up_to(4):
        for beta in partitions_up_to(4):
            a = matrix_element(ring, ops, conjugate(beta), conjugate(alpha))
            b = matrix_element(ring, ops, conjugate(alpha), conjugate(beta))
            assert a.compare(b, 20).status == "pass"


def test_needed_cutoff_detects_unbounded():
    assert needed_cutoff([("G-", ()), ("G+", ())], 3, 4) is not None
    assert needed_cutoff([("G+", ()), ("G-", ())], 0, 0) is None


def test_adaptive_macmahon():
    # <0| L_0 L_0 |0> = sum_nu s_nu(q^-rho)^2 = prod_n (1-q^n)^{-n} (MacMahon);
    # the unbounded Cauchy-type intermediate sum exercises the adaptive cutoff
    ring = QRing(2, window=24)
    ops = L_ops(ring, ()) + L_ops(ring, ())
    got = matrix_element(ring, ops, (), ())
    expect = ring.one()
    for n in range(1, ring.window // (2 * ring.lattice_denom) + 2):
        expect = expect * ((ring.one() - ring.q_monomial(n)).invert() ** n)
    assert got.compare(expect, 20).status == "pass"


def test_g_empty_matrix_element_closed_form(ring):
    # <t(nu+)| G_0(1) |t(nu3)> = q^{kappa(nu+)+kappa(nu3)/4} s_{nu+}(q^-rho) s_{nu3}(q^-nu+-rho)
    for nup in partitions_up_to(3):
        for nu3 in partitions_up_to(3):
            got = matrix_element(ring, G_ops(ring, (), 1), conjugate(nup), conjugate(nu3))
            expect = (
                ring.q_monomial(Fraction(kappa(nup)) + Fraction(kappa(nu3), 4))
                * schur_spec(ring, nup)
                * schur_spec(ring, nu3, nup)
            )
            assert got.compare(expect, 20).status == "pass", (nup, nu3)


def test_g_alpha_transpose_relation():
    # <beta| G_alpha(-1/(1+tau)) |gamma> = <gamma| G_{t(alpha)}(1/tau) |beta>
    ring6 = QRing(6, window=60)
    for tau in (Fraction(1), Fraction(2)):
        for alpha in partitions_up_to(2):
            for beta in partitions_up_to(2):
                for gamma in partitions_up_to(2):
                    lhs = matrix_element(
                        ring6, G_ops(ring6, alpha, Fraction(-1, 1 + tau)), beta, gamma
                    )
                    rhs = matrix_element(
                        ring6, G_ops(ring6, conjugate(alpha), 1 / tau), gamma, beta
                    )
                    assert lhs.compare(rhs, 20).status == "pass", (tau, alpha, beta, gamma)


def test_exchange_formula(ring):
    for alpha in ((), (1,), (2, 1)):
        report = check_exchange_formula(ring, alpha, D=5, min_width=20)
        assert report.ok, report.failures[:2]


def test_shift_symmetry_basics(ring):
    for k in (1, 2):
        for m in (-2, 0, 1, 2):
            assert check_shift_symmetry(ring, "basic1", {"k": k, "m": m}, D=3).ok
            assert check_shift_symmetry(ring, "basic2", {"k": k, "m": m}, D=3).ok
    for k in (-1, 1, 2):
        for m in (-1, 1, 2):
            assert check_shift_symmetry(
                ring, "gen3", {"k": k, "m": m, "gamma": Fraction(1, 2)}, D=3
            ).ok


def test_gen3_example_reduces_to_heisenberg(ring):
    # gamma=1/2, k=1, m=1 conjugates V^(1)_1 into V^(0)_1 = J_1
    rep = check_shift_symmetry(ring, "gen3", {"k": 1, "m": 1, "gamma": Fraction(1, 2)}, D=3)
    assert rep.ok


def test_gen1_reduces_to_basic_on_empty(ring):
    assert check_shift_symmetry(ring, "gen1", {"k": 1, "m": 0, "alpha": ()}, D=4).ok


def test_gen1_hook_case(ring):
    # alpha = (), k = -l: the correction sum runs over hooks
    assert check_shift_symmetry(ring, "gen1", {"k": -2, "m": 1, "alpha": ()}, D=3).ok


def test_gen_shift_small_sweep(ring):
    for kind in ("gen1", "gen2"):
        for k in (-1, 1, 2):
            for m in (-1, 0, 2):
                for alpha in ((), (1,), (2, 1)):
                    rep = check_shift_symmetry(ring, kind, {"k": k, "m": m, "alpha": alpha}, D=3)
                    assert rep.ok, (kind, k, m, alpha, rep.failures[:1])


def test_heisenberg_cases(ring):
    for kind in ("heis1", "heis2"):
        for m in (-2, -1, 1, 2):
            for alpha in ((), (2,), (1, 1)):
                rep = check_shift_symmetry(ring, kind, {"m": m, "alpha": alpha}, D=3)
                assert rep.ok, (kind, m, alpha, rep.failures[:1])


def test_a_tau_b_tau(ring):
    ring6 = QRing(6, window=60)
    cases = [(Fraction(1), 1), (Fraction(1), -2), (Fraction(2), 1), (Fraction(1, 2), 2)]
    for kind in ("A_tau", "B_tau"):
        for tau, m in cases:
            for alpha in ((), (1,)):
                rep = check_shift_symmetry(
                    ring6, kind, {"m": m, "tau": tau, "alpha": alpha}, D=3
                )
                assert rep.ok, (kind, tau, m, alpha, rep.failures[:1])


def test_factorization_tau1(ring):
    rep = check_factorization(ring, N=1, t_cutoff=2, D=2)
    assert rep.ok, rep.failures[:2]
    rep = check_factorization(ring, N=1, t_cutoff=2, D=2, primed=True)
    assert rep.ok, rep.failures[:2]


def test_factorization_tau_half():
    ring6 = QRing(6, window=60)
    rep = check_factorization(ring6, N=2, t_cutoff=2, D=2)
    assert rep.ok, rep.failures[:2]


def test_mutation_gamma_prime_breaks_exchange(ring):
    with mutations.mutate("gamma-prime-no-transpose"):
        rep = check_exchange_formula(ring, (2, 1), D=5, min_width=20)
        assert not rep.ok


def test_mutation_drop_sign_breaks_shift(ring):
    # k = -2 so that the hook correction sum carries a height-1 sign
    with mutations.mutate("drop-sign"):
        rep = check_shift_symmetry(ring, "gen1", {"k": -2, "m": 1, "alpha": ()}, D=3)
        assert rep.status == "fail"
