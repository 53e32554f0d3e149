import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pancyclic.errors import PreconditionError
from pancyclic.generators import complete, complete_bipartite, gnp_conditioned
from pancyclic.graph import CycleWitness
from pancyclic.invariants import independence_number, vertex_connectivity
from pancyclic.pipeline import as_fraction, certify_pancyclic, range_plan
from pancyclic.spectrum import MECHANISMS, cycle_spectrum_bruteforce, find_small_cycles


def test_plan_large_instance():
    plan = range_plan(10**6, 2 * 10**4, 10**4, 1)
    # 1e5 * 1e6 / 2e4 = 5e6 against 100 * 1e4 = 1e6
    assert plan.m_upper == 10**6 and plan.upper_case == "independence"
    assert plan.upper == (10**6, 10**6) and not plan.upper_empty
    assert plan.lower_cut == 100 and plan.lower == (3, 100)
    assert plan.middle == (100, 10**6) and not plan.middle_empty
    assert plan.r_upper == 5000 and plan.r_upper_used == 5000
    assert plan.r_middle == 10**4


def test_plan_lower_cut_takes_larger_term():
    plan = range_plan(10**4, 300, 200, Fraction(1, 2))
    # eps*alpha/2000 = 1/20 < n/alpha = 50
    assert plan.lower_cut == 50


def test_plan_middle_empty_and_upper_empty():
    # desk scale: m = min(200000, 300) lies above n, so the upper range is empty
    plan = range_plan(12, 6, 3, 1)
    assert plan.m_upper == 300 and plan.upper_empty and plan.upper == (300, 12)
    assert plan.lower_cut == 4 and not plan.middle_empty
    assert plan.range_of(5) == "lower" and plan.range_of(12) == "middle"
    # the cut reaches m: n/alpha = 100 = 100 alpha/eps
    crowded = range_plan(100, 99, 1, 1)
    assert crowded.lower_cut == 100 and crowded.m_upper == 100
    assert crowded.middle_empty and crowded.range_of(50) == "lower"


def test_plan_tie_goes_to_degree():
    # 1e5 n / (eps^2 kappa) = 100 alpha / eps  with n=1, kappa=1000, alpha=1, eps=1
    plan = range_plan(1, 1000, 1, 1)
    assert plan.upper_case == "degree"


def test_plan_json_is_exact():
    doc = range_plan(12, 6, 3, "1/3").to_json()
    assert doc["epsilon"] == {"exact": "1/3", "approx": 1 / 3}
    assert doc["rounding"].startswith("ceil")
    json.dumps(doc)


def test_plan_rejects_nonpositive():
    with pytest.raises(PreconditionError):
        range_plan(10, 3, 0, 1)
    with pytest.raises(PreconditionError):
        range_plan(10, 3, 1, 0)


def test_as_fraction():
    assert as_fraction(0.1) == Fraction(1, 10)
    assert as_fraction("2/3") == Fraction(2, 3)
    assert as_fraction(Fraction(1, 7)) == Fraction(1, 7)


def test_certify_k10():
    g = complete(10)
    cert, plan = certify_pancyclic(g, 1, seed=0)
    assert cert.missing == () and cert.lengths == list(range(3, 11))
    assert cert.verify(g)
    assert plan.branches["upper"]["ran"]


def test_certify_k55_rejected():
    g = complete_bipartite(5, 5)
    with pytest.raises(PreconditionError):
        certify_pancyclic(g, Fraction(1, 100), seed=0)
    assert cycle_spectrum_bruteforce(g).missing == (3, 5, 7, 9)


@pytest.mark.parametrize("seed", range(6))
def test_certify_conditioned_g12(seed):
    g = gnp_conditioned(12, 0.7, seed)
    alpha, kappa = independence_number(g).value, vertex_connectivity(g)
    cert, _ = certify_pancyclic(g, Fraction(kappa - alpha, alpha), seed)
    oracle = cycle_spectrum_bruteforce(g)
    assert cert.missing == () == oracle.missing
    assert cert.verify(g)


def test_certify_is_deterministic():
    g = gnp_conditioned(14, 0.75, 3)
    a, pa = certify_pancyclic(g, Fraction(1, 2), seed=9)
    b, pb = certify_pancyclic(g, Fraction(1, 2), seed=9)
    assert json.dumps(a.to_json()) == json.dumps(b.to_json())
    assert json.dumps(pa.to_json()) == json.dumps(pb.to_json())


def test_tags_are_known_and_replayable():
    g = gnp_conditioned(13, 0.8, 21)
    cert, _ = certify_pancyclic(g, Fraction(1, 2), seed=2)
    small = find_small_cycles(g).by_length()
    for k, (w, tag) in cert.covered.items():
        assert tag in MECHANISMS and w.length == k
        assert CycleWitness(w.vertices, g).verify()
        if tag == "small-cycle-search":
            assert small[k] == w
        if tag == "bruteforce":
            assert cycle_spectrum_bruteforce(g).covered[k][0] == w


def test_certify_rejects_weak_connectivity():
    g = gnp_conditioned(12, 0.7, 0)
    alpha, kappa = independence_number(g).value, vertex_connectivity(g)
    with pytest.raises(PreconditionError):
        certify_pancyclic(g, Fraction(kappa - alpha, alpha) + Fraction(1, 100), seed=0)


@settings(max_examples=25, deadline=None)
@given(st.integers(6, 12), st.sampled_from([0.6, 0.75, 0.9]), st.integers(0, 10**6))
def test_certify_matches_oracle(n, p, seed):
    g = gnp_conditioned(n, p, seed)
    alpha, kappa = independence_number(g).value, vertex_connectivity(g)
    cert, plan = certify_pancyclic(g, Fraction(kappa - alpha, alpha), seed, alpha=alpha, kappa=kappa)
    assert set(cert.covered) == set(cycle_spectrum_bruteforce(g).covered)
    assert cert.verify(g)
    assert set(plan.branches) == {"lower", "middle", "upper", "fallback"}
