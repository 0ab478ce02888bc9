import pytest

from arglue import arquiver
from arglue import fracture as fx
from arglue.core import AlgebraError, KupischSeries, nakayama
from conftest import branched_ten, left_ab, rad2_chain, right_ab

CATALAN = {1: 1, 2: 2, 3: 5, 4: 14, 5: 42, 6: 132, 7: 429}


@pytest.fixture
def A():
    return nakayama(KupischSeries([2, 2, 1]))


@pytest.fixture
def B():
    return branched_ten()


def test_left_abutments_of_small_chain(A):
    d = {ab.anchor: ab for ab in fx.abutments(A, "left")}
    assert set(d) == {"2", "3"}
    assert d["2"].height == 2 and d["2"].maximal
    assert d["3"].height == 1 and not d["3"].maximal
    assert d["2"].tail == ["2", "3"]


def test_right_abutments_of_small_chain(A):
    d = {ab.anchor: ab for ab in fx.abutments(A, "right")}
    assert set(d) == {"1", "2"}
    assert d["2"].tail == ["1", "2"] and d["2"].maximal


def test_abutments_of_branched(B):
    LB = {ab.anchor: ab for ab in fx.abutments(B, "left")}
    assert set(LB) == {"5", "6", "7"}
    assert LB["5"].maximal and LB["5"].height == 3
    RB = {ab.anchor: ab for ab in fx.abutments(B, "right")}
    assert set(RB) == {"1", "2", "3", "1p", "2p", "3p"}
    assert RB["3"].maximal and RB["3p"].maximal
    assert RB["3"].height == 3 and not RB["2"].maximal


def test_independence(B):
    RB = {ab.anchor: ab for ab in fx.abutments(B, "right")}
    assert fx.independent([RB["3"], RB["3p"]])
    assert not fx.independent([RB["3"], RB["2"]])
    assert fx.independent([RB["1"], RB["2p"]])
    assert fx.independent([RB["3"]])


def test_abutment_leq(A):
    W = left_ab(A, "2")
    P = left_ab(A, "3")
    assert fx.abutment_leq(P, W)
    assert fx.abutment_leq(W, W)
    assert not fx.abutment_leq(W, P)


def test_foundation(A, B):
    ar = arquiver.ar_quiver(A)
    assert len(fx.foundation(A, left_ab(A, "2"), ar)) == 3
    assert len(fx.foundation(B, left_ab(B, "5"))) == 6


def test_tilting_enumeration_catalan():
    for h in (1, 2, 3, 5):
        ts = fx.tilting_modules(h)
        assert len(ts) == CATALAN[h]
        assert all(fx.is_tilting(t) for t in ts)


def test_tilting_ext_verification():
    assert all(fx.verify_tilting_by_ext(t) for t in fx.tilting_modules(3))


def test_mirrored_examples():
    T1 = fx.IntervalSet(5, [(5, 5), (4, 5), (1, 5), (1, 2), (1, 1)])
    T2 = fx.IntervalSet(5, [(3, 3), (3, 4), (2, 4), (1, 4), (1, 5)])
    assert fx.is_tilting(T1) and fx.is_tilting(T2)
    assert fx.is_mirrored(T1) and not fx.is_mirrored(T2)


def test_mirrored_exists_iff_odd_height():
    for h in range(1, 9):
        found = any(fx.is_mirrored(t) for t in fx.tilting_modules(h))
        assert found == (h % 2 == 1)


def test_restrict_fracture(A):
    W = left_ab(A, "2")
    P = left_ab(A, "3")
    T = fx.IntervalSet(2, [(1, 2), (2, 2)])
    assert fx.restrict_fracture(T, P, W) == fx.IntervalSet(1, [(1, 1)])


def test_interval_module_dims(A):
    W = left_ab(A, "2")
    M = fx.interval_module(A, W.tail, 1, 2)
    assert M.dim_vector() == (0, 1, 1)
    S = fx.interval_module(A, W.tail, 2, 2)
    assert S.total_dim() == 1


def test_fracturing_requires_maximal_coverage(B):
    with pytest.raises(AlgebraError):
        fx.Fracturing(B, {}, {})  # misses every maximal abutment
    tf = fx.trivial_fracturing(B)
    assert set(tf.left) == {"5"}
    assert set(tf.right) == {"3", "3p"}


def test_trivial_fracturing_uses_projective_and_injective_intervals(A):
    tf = fx.trivial_fracturing(A)
    assert tf.left["2"] == fx.projective_intervals(2)
    assert tf.right["2"] == fx.injective_intervals(2)


def test_compatible_pair(A):
    fr = fx.trivial_fracturing(A)
    P = left_ab(A, "3")   # height 1, simple projective at the sink
    I = right_ab(A, "1")  # height 1, simple injective at the source
    W = left_ab(A, "2")
    J = right_ab(A, "2")
    ok, reason = fx.compatible_pair(A, fr, W, J, P, I)
    assert ok, reason
