import json

import pytest

from arglue import arquiver
from arglue import fracture as fx
from arglue import replab
from arglue.core import KupischSeries, kupisch_of, nakayama, starlike
from arglue.verifier import (Subcategory, check_fractured, check_nct,
                             generate_sinks_sources, starlike_classify,
                             starlike_rep_finite, tau_orbit_candidate)


@pytest.fixture
def A():
    return nakayama(KupischSeries([2, 2, 1]))


def test_candidate_and_verdict_small_chain(A):
    cand = tau_orbit_candidate(A, 2)
    assert len(cand) == 4
    rep = check_nct(A, cand, 2)
    assert rep.verdict
    names = [name for name, ok, _ in rep.conditions]
    assert "rigidity" in names and "maximality" in names


def test_whole_category_at_level_one(A):
    c1 = tau_orbit_candidate(A, 1)
    assert len(c1) == 5
    assert check_nct(A, c1, 1).verdict


def test_missing_projective_fails_membership(A):
    cand = tau_orbit_candidate(A, 2)
    P1 = replab.projective(A, "1")
    bad = Subcategory(A, [M for M in cand.modules
                          if not replab.is_isomorphic(M, P1)])
    rep = check_nct(A, bad, 2)
    assert not rep.verdict
    assert rep.counterexamples
    assert rep.counterexamples[0][0] == "proj-inj-membership"


def test_report_json(A):
    rep = check_nct(A, tau_orbit_candidate(A, 2), 2)
    doc = json.loads(rep.to_json())
    assert doc["verdict"] == "pass"
    assert doc["kind"] == "n-cluster-tilting"


def test_trivial_fracturing_agrees(A):
    cand = tau_orbit_candidate(A, 2)
    fr = fx.trivial_fracturing(A)
    assert check_fractured(A, fr, cand, 2).verdict
    P1 = replab.projective(A, "1")
    bad = Subcategory(A, [M for M in cand.modules
                          if not replab.is_isomorphic(M, P1)])
    assert not check_fractured(A, fr, bad, 2).verdict


def test_kupisch_pipeline_start():
    K = nakayama(KupischSeries([2, 2, 3, 3, 3, 3, 2, 1]))
    ck = tau_orbit_candidate(K, 3)
    assert len(ck) == 11
    assert check_nct(K, ck, 3).verdict


def test_starlike_classifier_three_rays():
    rays = [(5, "out"), (5, "out"), (4, "in")]
    assert starlike_classify(rays, 4) == (True, 7, "two-sinks")
    assert starlike_classify(rays, 2) == (True, 7, "two-sinks")
    assert starlike_classify([(3, "out"), (3, "out"), (3, "in"),
                              (3, "in")], 3)[0] is False
    assert starlike_classify([(3, "out"), (3, "out"), (3, "in"),
                              (3, "in")], 2)[0] is True


def test_starlike_figure_algebra_passes():
    S = starlike([(5, "out"), (5, "out"), (4, "in")])
    assert len(S.quiver.vertices) == 12
    for n in (2, 4):
        cand = tau_orbit_candidate(S, n)
        assert check_nct(S, cand, n).verdict
    assert len(tau_orbit_candidate(S, 4)) == 15


def test_classifier_agreement_spot_checks():
    cases = [([(4, "out")], 3), ([(5, "out")], 2), ([(3, "in")], 2),
             ([(4, "out"), (4, "out"), (3, "in")], 3),
             ([(4, "in"), (4, "in"), (3, "out")], 3),
             ([(4, "out"), (4, "out"), (4, "in")], 3),
             ([(3, "out"), (5, "out"), (2, "in")], 2)]
    for rays, n in cases:
        want = starlike_classify(rays, n)[0]
        alg = starlike(rays)
        got = check_nct(alg, tau_orbit_candidate(alg, n), n).verdict
        assert want == got, (rays, n)


def test_starlike_rep_finite_rule():
    assert starlike_rep_finite([(9, "out"), (9, "out"), (9, "in")])
    assert starlike_rep_finite([(3, "out"), (3, "out"), (3, "in"), (3, "in")])
    assert not starlike_rep_finite([(3, "out")] * 4)
    assert not starlike_rep_finite([(3, "in")] * 4)


def test_generate_sinks_sources_basic():
    L, M = generate_sinks_sources(1, 1, 3)
    assert kupisch_of(L) == KupischSeries([2, 2, 2, 1])
    assert check_nct(L, M, 3).verdict
    L2, M2 = generate_sinks_sources(2, 2, 2)
    assert len(L2.quiver.sources()) == 2 and len(L2.quiver.sinks()) == 2
    assert check_nct(L2, M2, 2).verdict


def test_subcategory_dedupe_and_contains(A):
    P1 = replab.projective(A, "1")
    sub = Subcategory(A, [P1, replab.projective(A, "1")])
    assert len(sub) == 1
    assert sub.contains(P1)
    assert not sub.contains(replab.simple(A, "2"))


def test_check_nct_with_precomputed_indecs(A):
    ind = arquiver.indecomposables(A)
    cand = tau_orbit_candidate(A, 2)
    assert check_nct(A, cand, 2, indecs=ind).verdict
