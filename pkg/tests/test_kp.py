from fractions import Fraction

import pytest

from vertexq import mutations
from vertexq.errors import RangeError
from vertexq.kp import (
    build_tau,
    check_plucker,
    check_reduction_condition,
    check_shifted_flow_form,
    check_tau_factorization,
    plucker_relations,
    schur_coefficients,
)
from vertexq.qscalar import QRing
from vertexq.seriespoly import SeriesPoly


@pytest.fixture(scope="module")
def ring():
    return QRing(2, window=40)


@pytest.fixture(scope="module")
def tau_n1(ring):
    return build_tau(ring, 1, None, ("formal", 2), 6)


@pytest.fixture(scope="module")
def ring6():
    return QRing(6, window=60)


@pytest.fixture(scope="module")
def tau_n2(ring6):
    return build_tau(ring6, 2, None, ("formal", 2), 6)


def test_tau_constant_term(tau_n1, ring):
    assert tau_n1.coefficient(((), (), ())).compare(ring.one()).status == "pass"


def test_tau_t1_coefficient(tau_n1, ring):
    # only mu3 = (1) contributes: weight 1, t-coefficient chi/1 = 1, so the
    # t_1 coefficient at p2 = 0 equals the (0,0,(1)) closed-form coefficient
    from vertexq.vertex import lllz_coefficient

    got = tau_n1.coefficient(((1,), (), ()))
    expect = lllz_coefficient(ring, ((), (), (1,)))
    assert got.compare(expect, 20).status == "pass"


def test_reduction_condition_N1(tau_n1):
    rep = check_reduction_condition(tau_n1, 1, k_max=2, m_max=1)
    assert rep.ok, rep.failures[:3]


def test_reduction_condition_N2(tau_n2):
    rep = check_reduction_condition(tau_n2, 2, k_max=2, m_max=1)
    assert rep.ok, rep.failures[:3]


def test_reduction_range_error(tau_n1):
    with pytest.raises(RangeError) as exc:
        check_reduction_condition(tau_n1, 1, k_max=5, m_max=2)
    assert exc.value.feasible


def test_plucker_on_engine_tau(tau_n1):
    rep = check_plucker(tau_n1, size_bound=4)
    assert rep.ok, rep.failures[:3]
    assert rep.pairs_checked > 10


def test_plucker_on_vacuum_flow(ring):
    # T = exp(t_1) is the simplest tau function: c_lam = f^lam / |lam|!
    T = SeriesPoly.zero(ring, ("t", "p1", "p2"), (6, 0, 0))
    T._accumulate(((1,), (), ()), ring.one())
    T = T.exp()
    rep = check_plucker(T, size_bound=4)
    assert rep.ok, rep.failures[:3]


def test_plucker_catches_corruption(ring, tau_n1):
    corrupted = tau_n1 + SeriesPoly(
        ring, tau_n1.families, tau_n1.cutoffs, {((1, 1), (), ()): ring.from_fraction(Fraction(1, 5))}
    )
    rep = check_plucker(corrupted, size_bound=4)
    assert rep.status == "fail"


def test_relation_family_nontrivial():
    rels = list(plucker_relations(4))
    assert any(len(r) >= 3 for r in rels)


def test_schur_coefficients_extraction(ring, tau_n1):
    cs = schur_coefficients(tau_n1, 2)
    # c_(1) at p2=0 equals the t_1 coefficient
    assert cs[(1,)].coefficient(((), ())).compare(
        tau_n1.coefficient(((1,), (), ())), 20
    ).status == "pass"


def test_shifted_flow_form(ring, ring6):
    # unit-test slice; the spec-scale D=4 run happens in acceptance
    for N, r in ((1, ring), (2, ring6)):
        rep = check_shifted_flow_form(r, N, m_max=2, D=2)
        assert rep.ok, (N, rep.failures[:2])


def test_shifted_flow_form_N2_m1_small():
    ring = QRing(6, window=60)
    rep = check_shifted_flow_form(ring, 2, m_max=1, D=3)
    assert rep.ok


def test_tau_factorization(ring, ring6):
    for N, r in ((1, ring), (2, ring6)):
        rep = check_tau_factorization(r, N, p1_bound=1, p2_bound=2, D_t=4)
        assert rep.ok, (N, rep.failures[:2])


def test_mutation_tau_perturb_fails_reduction_and_plucker(ring):
    with mutations.mutate("tau-perturb"):
        T = build_tau(ring, 1, None, ("formal", 2), 6)
        rep = check_reduction_condition(T, 1, k_max=2, m_max=1)
        rep2 = check_plucker(T, size_bound=4)
        assert rep.status == "fail" or rep2.status == "fail"


def test_mutation_wrong_p_plus_fails_tau_factorization(ring):
    # p1 must reach weight 2: the k=1 substitution sign is +1 either way
    with mutations.mutate("wrong-p-plus"):
        rep = check_tau_factorization(ring, 1, p1_bound=2, p2_bound=2, D_t=4)
        assert rep.status == "fail"
