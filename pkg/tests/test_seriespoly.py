from fractions import Fraction

import pytest

from vertexq.qscalar import QRing
from vertexq.seriespoly import SeriesPoly


@pytest.fixture
def ring():
    return QRing(2, window=40)


def tvar(ring, k, cutoff=4):
    return SeriesPoly.variable(ring, ("t",), (cutoff,), 0, k)


def test_mul_respects_cutoff(ring):
    t1 = tvar(ring, 1)
    p = t1
    for _ in range(5):
        p = p * t1  # t_1^6 exceeds the weighted cutoff 4
    assert not p.terms


def test_mul_merges_monomials(ring):
    t1, t2 = tvar(ring, 1), tvar(ring, 2)
    p = t1 * t2
    assert list(p.terms) == [((2, 1),)]


def test_exp_log_roundtrip(ring):
    t1, t2 = tvar(ring, 1), tvar(ring, 2)
    u = t1 + t2 * Fraction(3, 2)
    e = u.exp()
    assert e.constant_term().compare(ring.one()).status == "pass"
    assert e.log().compare(u).status == "pass"


def test_exp_values(ring):
    t1 = tvar(ring, 1)
    e = t1.exp()
    assert e.coefficient(((1, 1, 1),)).compare(ring.from_fraction(Fraction(1, 6))).status == "pass"


def test_diff(ring):
    t1, t2 = tvar(ring, 1), tvar(ring, 2)
    p = t1 * t1 * t2
    d = p.diff(0, 1)
    assert d.coefficient(((2, 1),)).compare(ring.from_fraction(2)).status == "pass"
    d2 = p.diff(0, 2)
    assert d2.coefficient(((1, 1),)).compare(ring.one()).status == "pass"


def test_json_schema_single_family(ring):
    t1, t3 = tvar(ring, 1, cutoff=5), tvar(ring, 3, cutoff=5)
    p = t1 * t1 * t3
    j = p.to_json()
    assert j["family"] == "t"
    assert j["cutoff"] == 5
    assert j["terms"][0]["exps"] == {"1": 2, "3": 1}
    assert j["terms"][0]["coeff"]["coeffs"] == ["1"]


def test_shape_mismatch_rejected(ring):
    a = SeriesPoly.one(ring, ("t",), (4,))
    b = SeriesPoly.one(ring, ("t", "p1"), (4, 2))
    with pytest.raises(ValueError):
        a + b
