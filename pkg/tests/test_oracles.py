import pytest

from vertexq import mutations
from vertexq.oracles import run_oracles, schur_poly, lllz_unpruned
from vertexq.qscalar import QRing
from vertexq.vertex import lllz_coefficient


@pytest.fixture(scope="module")
def ring():
    return QRing(2, window=40)


def test_schur_poly_ssyt_counts():
    # s_(2,1) in 3 variables has 8 monomials counted with multiplicity
    total = sum(c for _, c in schur_poly((2, 1), 3))
    assert total == 8  # dimension of the GL_3 irrep
    assert schur_poly((1, 1, 1), 2) == ()


def test_run_oracles_small(ring):
    bounds = {
        "character_weight": 4,
        "lr_weight": 5,
        "h_weight": 5,
        "fock_weight": 3,
        "fock_window": 16,
        "lllz_weight": 2,
    }
    reports = run_oracles(ring, None, bounds)
    bad = [r for r in reports if not r.ok]
    assert not bad, bad[:3]
    targets = {r.target for r in reports}
    assert targets == {"character", "lr_coefficient", "h_spec", "fock_apply", "lllz_coefficient"}


def test_lllz_unpruned_matches_engine(ring):
    for triple in (((1,), (1,), (1,)), ((2,), (), (1, 1)), ((1,), (2,), (2,))):
        o = lllz_unpruned(ring, *triple)
        e = lllz_coefficient(ring, triple)
        assert o.compare(e, 20).status == "pass"


def test_oracles_catch_drop_sign(ring):
    with mutations.mutate("drop-sign"):
        reports = run_oracles(ring, {"characters"}, {"character_weight": 4})
        assert any(not r.ok for r in reports)


def test_oracles_catch_mn_off_by_one(ring):
    with mutations.mutate("mn-off-by-one"):
        reports = run_oracles(ring, {"characters"}, {"character_weight": 3})
        assert any(not r.ok for r in reports)


@pytest.mark.full
def test_run_oracles_full_ranges(ring):
    reports = run_oracles(ring, None, None)
    bad = [r for r in reports if not r.ok]
    assert not bad, bad[:3]
