"""Shared oracles, corpora and the acceptance report hook.

The oracles here are deliberately naive and independent of the library:
subset enumeration for alpha, cut enumeration for kappa and plain DFS
cycle enumeration for the spectrum.
"""

from itertools import combinations

import numpy as np
import pytest

from pancyclic.graph import Graph
from pancyclic.generators import gnp_conditioned
from pancyclic.invariants import independence_number, vertex_connectivity

CRITERIA: dict[int, tuple[bool, str]] = {}


def record(number: int, ok: bool, detail: str):
    CRITERIA[number] = (ok, detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        ok, detail = CRITERIA[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}")


# -- oracles --------------------------------------------------------------------


def oracle_alpha(g: Graph) -> int:
    best = 0
    for k in range(1, g.n + 1):
        found = False
        for s in combinations(range(g.n), k):
            if all(not g.adjacent(a, b) for a, b in combinations(s, 2)):
                found = True
                break
        if not found:
            break
        best = k
    return best


def _connected_without(g: Graph, removed) -> bool:
    rest = [v for v in range(g.n) if v not in removed]
    if len(rest) <= 1:
        return False
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rest)


def oracle_kappa(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects or trivialises G."""
    for k in range(g.n):
        for s in combinations(range(g.n), k):
            if not _connected_without(g, set(s)):
                return k
    return g.n - 1


def oracle_cycle_lengths(g: Graph) -> set[int]:
    """Lengths of all simple cycles, enumerated from their smallest vertex."""
    lengths = set()

    def dfs(root, v, visited, depth):
        for w in g.neighbors(v):
            if w == root and depth >= 3:
                lengths.add(depth)
            elif w > root and w not in visited:
                visited.add(w)
                dfs(root, w, visited, depth + 1)
                visited.discard(w)

    for s in range(g.n):
        dfs(s, s, {s}, 1)
    return lengths


def random_graph(n, p, seed) -> Graph:
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return Graph.from_matrix(upper | upper.T)


# -- corpora --------------------------------------------------------------------


def conditioned_corpus(count, n_lo, n_hi, predicate, ps=(0.6, 0.7, 0.8), seed0=0):
    """Deterministic list of (graph, alpha, kappa) with n cycling through [n_lo, n_hi]."""
    out = []
    seed = seed0
    while len(out) < count:
        n = n_lo + len(out) % (n_hi - n_lo + 1)
        p = ps[len(out) % len(ps)]
        g = gnp_conditioned(n, p, seed, predicate)
        seed += 1
        alpha = independence_number(g).value
        out.append((g, alpha, vertex_connectivity(g)))
    return out


@pytest.fixture(scope="session")
def small_kappa_gt_alpha():
    return conditioned_corpus(500, 6, 14, "kappa>alpha")


@pytest.fixture(scope="session")
def hamilton_corpus():
    return conditioned_corpus(200, 6, 40, "kappa>=alpha", ps=(0.5, 0.65, 0.8), seed0=10_000)
