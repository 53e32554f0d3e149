from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pancyclic.decorated import (
    TriangulatedCycle,
    TriangulatedPath,
    greedy_triangulated_path,
    hamilton_with_triangles,
    realizable_prefix_lengths,
    short_cycle_bound,
    short_triangulated_cycle,
)
from pancyclic.errors import GrowthStuck, NoAugmentingEdge, PreconditionError
from pancyclic.generators import complete, cycle, gnp_conditioned, petersen
from pancyclic.invariants import independence_number, vertex_connectivity


def test_greedy_path_in_k7():
    tp = greedy_triangulated_path(complete(7), 2, 1)
    assert tp.verify()
    assert tp.vertices == (0, 1, 2, 3, 4)
    assert tp.chords == ((0, 2), (2, 4))
    assert tp.to_json() == {"path": [0, 1, 2, 3, 4], "chords": [[0, 2], [2, 4]], "r": 2}


def test_greedy_path_r0_is_a_vertex():
    tp = greedy_triangulated_path(cycle(6), 0, 3)
    assert tp.vertices == (0,) and tp.length == 0 and tp.verify()


def test_greedy_path_rejected_on_c6():
    with pytest.raises(PreconditionError):
        greedy_triangulated_path(cycle(6), 1, 3)
    # lying about alpha lets the loop run into a triangle-free neighbourhood
    with pytest.raises(GrowthStuck):
        greedy_triangulated_path(cycle(6), 1, 0)


def test_short_cycle_k5_r0_is_triangle():
    tc = short_triangulated_cycle(complete(5), 0, 1)
    assert tc.length == 3 and tc.verify()


def test_short_cycle_k7_r2():
    g = complete(7)
    tc = short_triangulated_cycle(g, 2, 1)
    assert tc.verify() and tc.length in (5, 6, 7)
    assert tc.length - 2 * 3 <= short_cycle_bound(7, 6, 2)


def test_short_cycle_c6_is_whole_cycle():
    tc = short_triangulated_cycle(cycle(6), 0, 3)
    assert tc.length == 6 and tc.verify()
    assert tc.length - 2 <= short_cycle_bound(6, 2, 0) == 6


def test_short_cycle_bound_values():
    assert short_cycle_bound(7, 6, 2) == Fraction(7, 3)
    assert short_cycle_bound(5, 4, 0) == Fraction(5, 3)
    with pytest.raises(PreconditionError):
        short_cycle_bound(10, 3, 2)


def test_short_cycle_needs_kappa_two():
    from pancyclic.generators import path_graph

    with pytest.raises(PreconditionError):
        short_triangulated_cycle(path_graph(4), 0, 2)


@pytest.mark.parametrize("r, want", [(0, [0]), (2, [2, 3, 4]), (3, [3, 4, 5, 6])])
def test_realizable_prefix_lengths(r, want):
    g = complete(2 * r + 3)
    tp = greedy_triangulated_path(g, r, 1)
    lengths = realizable_prefix_lengths(tp)
    assert sorted(lengths) == want
    for k, w in lengths.items():
        assert w.length == k and w.verify()
        assert w.endpoints == (tp.vertices[0], tp.vertices[2 * r])


def test_hamilton_c5():
    tc = hamilton_with_triangles(cycle(5), 2)
    assert tc.r == 0 and tc.length == 5 and tc.verify()


def test_hamilton_k6_frozen():
    tc = hamilton_with_triangles(complete(6), 1)
    assert tc.r == 2 and tc.length == 6 and tc.verify()
    assert tc.chords == ((tc.order[0], tc.order[2]), (tc.order[2], tc.order[4]))
    assert tc.to_json() == {"cycle": [0, 1, 2, 3, 4, 5], "chords": [[0, 2], [2, 4]], "r": 2}


def test_hamilton_petersen_rejected():
    with pytest.raises(PreconditionError):
        hamilton_with_triangles(petersen(), 4)


def test_hamilton_with_wrong_alpha_fails_loudly():
    # K_{2,3} has kappa 2 and alpha 3; claiming alpha 2 cannot produce a Hamilton cycle
    from pancyclic.generators import complete_bipartite

    with pytest.raises(NoAugmentingEdge):
        hamilton_with_triangles(complete_bipartite(2, 3), 2, kappa=2)


def test_drop_triangles():
    tc = hamilton_with_triangles(complete(6), 1)
    assert tc.drop_triangles(1).chords == ((tc.order[0], tc.order[2]),)
    with pytest.raises(ValueError):
        tc.drop_triangles(3)


def test_witness_types_catch_bad_chords():
    g = cycle(5)
    assert not TriangulatedPath((0, 1, 2), 1, g).verify()
    assert not TriangulatedCycle((0, 1, 2, 3, 4), 1, g).verify()
    assert not TriangulatedPath((0, 1), 1, complete(3)).verify()


@settings(max_examples=40, deadline=None)
@given(st.integers(6, 16), st.sampled_from([0.6, 0.75, 0.9]), st.integers(0, 10**6))
def test_hamilton_and_short_cycles_on_random_graphs(n, p, seed):
    g = gnp_conditioned(n, p, seed, "kappa>=alpha")
    alpha, kappa = independence_number(g).value, vertex_connectivity(g)
    tc = hamilton_with_triangles(g, alpha, kappa)
    assert tc.verify() and tc.length == n and tc.r == (kappa - alpha) // 2
    for r in range(0, (kappa - alpha) // 2 + 1):
        if r == 0 and kappa < 2:
            continue
        sc = short_triangulated_cycle(g, r, alpha, kappa)
        assert sc.verify() and sc.r == r
        assert sc.length - 2 * (r + 1) <= short_cycle_bound(n, kappa, r)
