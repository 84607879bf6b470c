from fractions import Fraction

import pytest

from vertexq import make_ring, mutations
from vertexq.partitions import conjugate, kappa, partitions_up_to, weight
from vertexq.qscalar import QRing
from vertexq.schur import schur_spec
from vertexq.vertex import (
    chi_double_sum,
    lllz_coefficient,
    theorem1_pair,
    two_partition_coefficient,
    verify_cyclic,
    verify_reduction_C,
    verify_tau_independence,
    verify_theorem1,
    vertex_C,
    vertex_C_via_fock,
)


@pytest.fixture(scope="module")
def ring():
    return QRing(2, window=40)


def test_vertex_trivial(ring):
    assert vertex_C(ring, ((), (), ())).compare(ring.one()).status == "pass"


def test_vertex_single_box(ring):
    got = vertex_C(ring, ((1,), (), ()))
    assert got.compare(ring.geometric_sum(Fraction(1, 2), 1), 20).status == "pass"


def test_vertex_two_legged_closed_form(ring):
    # C_(nu3, t(nu+), 0) = q^{kappa(nu3)/2} s_{nu3}(q^{-nu+-rho}) s_{nu+}(q^-rho)
    for nup in partitions_up_to(3):
        for nu3 in partitions_up_to(3):
            got = vertex_C(ring, (nu3, conjugate(nup), ()))
            expect = (
                ring.q_monomial(Fraction(kappa(nu3), 2))
                * schur_spec(ring, nu3, nup)
                * schur_spec(ring, nup)
            )
            assert got.compare(expect, 20).status == "pass", (nup, nu3)


def test_vertex_two_legged_cyclic_chain(ring):
    # C_(t(nu+),0,nu3) = C_(nu3,t(nu+),0) = C_(0,nu3,t(nu+)) for |nu+|+|nu3| <= 4
    for nup in partitions_up_to(4):
        for nu3 in partitions_up_to(4 - weight(nup)):
            a = vertex_C(ring, (conjugate(nup), (), nu3))
            b = vertex_C(ring, (nu3, conjugate(nup), ()))
            c = vertex_C(ring, ((), nu3, conjugate(nup)))
            assert a.compare(b, 20).status == "pass", (nup, nu3)
            assert b.compare(c, 20).status == "pass", (nup, nu3)


def test_lllz_trivial_and_single_box(ring):
    assert lllz_coefficient(ring, ((), (), ())).compare(ring.one()).status == "pass"
    got = lllz_coefficient(ring, ((1,), (), ()))
    assert got.compare(ring.geometric_sum(Fraction(1, 2), 1), 20).status == "pass"


def test_lllz_two_partition_closed_form(ring):
    for nup in partitions_up_to(3):
        for nu3 in partitions_up_to(3):
            got = lllz_coefficient(ring, ((), nup, nu3))
            expect = two_partition_coefficient(ring, nup, nu3)
            assert got.compare(expect, 20).status == "pass", (nup, nu3)


def test_chi_double_sum_values():
    assert chi_double_sum((), ()) == 1
    assert chi_double_sum((1,), (2,)) == Fraction(1)
    assert chi_double_sum((1,), (1, 1)) == Fraction(-1)
    assert chi_double_sum((1,), (1,)) == 0


def test_theorem1_small(ring):
    rep = verify_theorem1(ring, 2, min_width=20)
    assert rep.ok and rep.pairs_checked == 13


def test_theorem1_weight3(ring):
    rep = verify_theorem1(ring, 3, min_width=20)
    assert rep.ok, rep.failures[:2]


def test_cyclic_small(ring):
    rep = verify_cyclic(ring, 3, min_width=20)
    assert rep.ok


def test_cyclic_parallel_matches(ring):
    seq = verify_cyclic(ring, 2, min_width=20)
    par = verify_cyclic(ring, 2, min_width=20, jobs=2)
    assert seq.ok and par.ok and seq.pairs_checked == par.pairs_checked


def test_reduction_C_examples(ring):
    for mu in (((), (), ()), ((), (1,), (1,)), ((1,), (1,), ()), ((1,), (), (2,))):
        rep = verify_reduction_C(ring, mu, min_width=20)
        assert rep.ok, (mu, rep.failures[:1])


def test_tau_independence():
    ring = make_ring([1, 2, Fraction(1, 2)])
    rep = verify_tau_independence(ring, 2, [1, 2, Fraction(1, 2)], min_width=20)
    assert rep.ok, rep.failures[:2]


def test_vertex_via_fock_single(ring):
    got = vertex_C_via_fock(ring, ((1,), (1,), (1,)), 1)
    assert got.compare(vertex_C(ring, ((1,), (1,), (1,))), 20).status == "pass"


def test_mutation_drop_framing_breaks_theorem1(ring):
    with mutations.mutate("drop-framing"):
        rep = verify_theorem1(ring, 2, min_width=20)
        assert rep.status == "fail"


def test_mutation_drop_sign_breaks_theorem1(ring):
    # ribbon signs enter the closed form through the characters but not the
    # skew-Schur vertex, so corrupting them splits the two sides
    with mutations.mutate("drop-sign"):
        rep = verify_theorem1(ring, 3, min_width=20)
        assert rep.status == "fail"
