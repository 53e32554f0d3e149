import json

import pytest
from hypothesis import given, settings, strategies as st

from pancyclic.errors import DisjointnessViolation, MatchingDeficit, NotFound, PreconditionError, SizeCapError
from pancyclic.generators import complete, complete_bipartite, cycle, gnp, gnp_conditioned, path_graph, petersen
from pancyclic.graph import CycleWitness, Graph, PathWitness
from pancyclic.spectrum import (
    DensityCertificate,
    cycle_spectrum_bruteforce,
    combine_segments,
    even_cycle_guarantee,
    find_cycle_of_length,
    find_even_cycle,
    find_small_cycles,
    graph_id,
    odd_from_even,
    ramsey_guarantee,
    triangle_partition,
    verify_density,
)

from conftest import oracle_cycle_lengths, random_graph


@pytest.mark.parametrize(
    "g, covered, missing",
    [
        (complete(5), [3, 4, 5], ()),
        (complete_bipartite(3, 3), [4, 6], (3, 5)),
        (cycle(7), [7], (3, 4, 5, 6)),
        (petersen(), [5, 6, 8, 9], (3, 4, 7, 10)),
    ],
)
def test_bruteforce_examples(g, covered, missing):
    cert = cycle_spectrum_bruteforce(g)
    assert cert.lengths == covered and cert.missing == missing
    assert cert.verify(g) and cert.pancyclic == (not missing)


def test_bruteforce_cap():
    with pytest.raises(SizeCapError):
        cycle_spectrum_bruteforce(complete(17))
    assert cycle_spectrum_bruteforce(complete(16)).pancyclic


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 9), st.sampled_from([0.2, 0.35, 0.5, 0.7]), st.integers(0, 10**6))
def test_bruteforce_matches_dfs_enumeration(n, p, seed):
    g = random_graph(n, p, seed)
    cert = cycle_spectrum_bruteforce(g)
    assert set(cert.covered) == oracle_cycle_lengths(g)
    assert cert.verify(g)


def test_certificate_json_and_id():
    g = complete(4)
    cert = cycle_spectrum_bruteforce(g)
    doc = json.loads(json.dumps(cert.to_json()))
    assert doc["missing"] == [] and doc["covered"]["4"]["mechanism"] == "bruteforce"
    # sha256 of "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", first 16 hex digits
    assert doc["graph_id"] == graph_id(g) == "9c3528d98663acb8"
    assert not cert.verify(complete(5))


def _path_with_lengths(lengths, span):
    """Host graph with x=0, y=1 joined by disjoint paths of the given lengths."""
    edges, witnesses, nxt = [], {}, 2
    for k in lengths:
        inner = list(range(nxt, nxt + k - 1))
        nxt += k - 1
        verts = [0, *inner, 1]
        edges += list(zip(verts, verts[1:]))
        witnesses[k] = verts
    g = Graph(nxt, edges)
    return g, {k: PathWitness(tuple(v), g) for k, v in witnesses.items()}


def test_density_all_lengths_p0():
    g, w = _path_with_lengths(range(4, 10), None)
    assert verify_density(g, DensityCertificate(0, 1, 0, (4, 9), w))


def test_density_examples_p2():
    g, w = _path_with_lengths([4, 7, 10], None)
    assert verify_density(g, DensityCertificate(0, 1, 2, (4, 10), w))
    h, w2 = _path_with_lengths([4, 10], None)
    assert not verify_density(h, DensityCertificate(0, 1, 2, (4, 10), w2))


def test_density_rejects_bad_witness():
    g, w = _path_with_lengths([4, 5], None)
    w[5] = PathWitness(w[4].vertices, g)
    assert not verify_density(g, DensityCertificate(0, 1, 0, (4, 5), w))


def test_combine_sumset():
    g = complete(7)
    first = {k: PathWitness(tuple([0, *range(2, 1 + k)][:k] + [1]), g) for k in (2, 3, 4)}
    for k, w in first.items():
        assert w.length == k
    back = {1: PathWitness((1, 0), g)}
    out = combine_segments([((0, 1), first), ((1, 0), back)])
    assert sorted(out) == [3, 4, 5]
    assert all(w.verify() and w.length == k for k, w in out.items())


def test_combine_prefix_and_opposite():
    r = 2
    g = complete(16)
    prefix = {k: PathWitness(tuple([0, *range(2, 1 + k)][:k] + [1]), g) for k in range(r, 2 * r + 1)}
    opposite = {9: PathWitness((1, *range(7, 15), 0), g)}
    out = combine_segments([((0, 1), prefix), ((1, 0), opposite)])
    assert sorted(out) == [11, 12, 13]


def test_combine_detects_shared_vertex():
    g = complete(6)
    a = {2: PathWitness((0, 2, 1), g)}
    b = {2: PathWitness((1, 2, 0), g)}
    with pytest.raises(DisjointnessViolation) as info:
        combine_segments([((0, 1), a), ((1, 0), b)])
    assert info.value.vertex == 2


def test_combine_rejects_open_chain():
    g = complete(4)
    with pytest.raises(ValueError):
        combine_segments([((0, 1), {1: PathWitness((0, 1), g)}), ((2, 0), {1: PathWitness((2, 0), g)})])


def test_small_cycles_examples():
    pet = find_small_cycles(petersen())
    assert pet.absent == (3, 4) and pet.c5.verify() and pet.c5.length == 5
    k4 = find_small_cycles(complete(4))
    assert k4.absent == (5,) and k4.c3.length == 3 and k4.c4.length == 4
    k33 = find_small_cycles(complete_bipartite(3, 3))
    assert k33.absent == (3, 5) and k33.c4.verify()


def test_find_cycle_of_length():
    assert find_cycle_of_length(petersen(), 9).length == 9
    with pytest.raises(NotFound) as info:
        find_cycle_of_length(petersen(), 7)
    assert info.value.exhaustive
    with pytest.raises(NotFound) as info:
        find_cycle_of_length(gnp(40, 0.15, 1), 40, budget=10)
    assert not info.value.exhaustive


def test_partition_k6():
    g = complete(6)
    part = triangle_partition(g, 3, 50)
    assert len(part.E) >= 1 and part.check_apexes()
    assert all(len(m) >= 2 for m in part.matchings.values())
    doc = part.to_json()
    assert doc["seed"] == 3 and len(doc["E"]) == len(part.E)


def test_partition_precondition_and_deficit():
    with pytest.raises(PreconditionError):
        triangle_partition(cycle(6), 0)
    # forcing the call with a false alpha exposes the missing matchings
    with pytest.raises(MatchingDeficit):
        triangle_partition(cycle(6), 0, alpha=0, kappa=2)


def test_partition_is_deterministic_and_best_of_trials():
    g = gnp_conditioned(20, 0.8, 5)
    a = triangle_partition(g, 11, 10)
    b = triangle_partition(g, 11, 10)
    assert a == b and a.to_json() == b.to_json()
    singles = [len(triangle_partition(g, 11, 1).E)]
    assert len(a.E) >= max(singles)


@pytest.mark.parametrize("m", [4, 10])
def test_even_cycle_k_mm(m):
    g = complete_bipartite(m, m)
    w = find_even_cycle(g, 4)
    assert w.length == 8 and w.verify()


def test_even_cycle_c6_and_tree():
    assert find_even_cycle(cycle(6), 3).vertices == (0, 1, 2, 3, 4, 5)
    with pytest.raises(NotFound):
        find_even_cycle(path_graph(8), 2)
    with pytest.raises(PreconditionError):
        find_even_cycle(cycle(6), 1)


def test_odd_from_even_examples():
    # apex 9 over every edge of the square 0-1-2-3
    g = Graph(10, [(0, 1), (1, 2), (2, 3), (3, 0)] + [(v, 9) for v in range(4)] + [(4, 5), (5, 6), (6, 4)])
    from pancyclic.spectrum import TrianglePartition

    E = ((0, 1), (0, 3), (1, 2), (2, 3))
    part = TrianglePartition(frozenset(range(4)), E, {e: 9 for e in E}, g)
    c4 = CycleWitness((0, 1, 2, 3), g)
    c5 = odd_from_even(g, part, c4)
    assert c5.length == 5 and c5.verify()
    bad = TrianglePartition(frozenset(range(4)), E[:3], {e: 9 for e in E[:3]}, g)
    with pytest.raises(PreconditionError):
        odd_from_even(g, bad, c4)


def test_odd_from_even_c6_to_c7():
    g = Graph(7, [(i, (i + 1) % 6) for i in range(6)] + [(i, 6) for i in range(6)])
    from pancyclic.spectrum import TrianglePartition

    E = tuple(sorted((min(i, (i + 1) % 6), max(i, (i + 1) % 6)) for i in range(6)))
    part = TrianglePartition(frozenset(range(6)), E, {e: 6 for e in E}, g)
    assert odd_from_even(g, part, CycleWitness(tuple(range(6)), g)).length == 7


def test_guarantee_predicates():
    # r(C_3, K_2) <= ((1)(2 + 2) + 1)(1) = 5
    assert ramsey_guarantee(3, 2, 5) and not ramsey_guarantee(3, 2, 4)
    assert not ramsey_guarantee(2, 5, 100)
    assert even_cycle_guarantee(10, 10**5, 2) and not even_cycle_guarantee(10, 45, 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 11), st.sampled_from([0.3, 0.5, 0.7]), st.integers(0, 10**6))
def test_small_cycles_agree_with_oracle(n, p, seed):
    g = random_graph(n, p, seed)
    found = find_small_cycles(g)
    lengths = oracle_cycle_lengths(g)
    for k, w in ((3, found.c3), (4, found.c4), (5, found.c5)):
        assert (w is not None) == (k in lengths)
        if w is not None:
            assert w.verify() and w.length == k
