"""Cycle spectra: exhaustive oracle, density certificates and short/even cycle search."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DisjointnessViolation,
    MatchingDeficit,
    NotFound,
    PreconditionError,
    SizeCapError,
)
from .graph import CycleWitness, Graph, _bits, serialize

__all__ = [
    "MECHANISMS",
    "SpectrumCertificate",
    "DensityCertificate",
    "TrianglePartition",
    "SmallCycles",
    "graph_id",
    "cycle_spectrum_bruteforce",
    "verify_density",
    "combine_segments",
    "find_small_cycles",
    "find_cycle_of_length",
    "triangle_partition",
    "find_even_cycle",
    "odd_from_even",
    "ramsey_guarantee",
    "even_cycle_guarantee",
]

MECHANISMS = ("bruteforce", "prefix+surgery", "even+apex", "small-cycle-search", "hamilton-triangles", "direct-search")
BRUTEFORCE_CAP = 16


def graph_id(g: Graph) -> str:
    return hashlib.sha256(serialize(g).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class SpectrumCertificate:
    graph_id: str
    n: int
    covered: dict = field(compare=False)  # length -> (CycleWitness, tag)
    missing: tuple[int, ...] = ()
    notes: dict = field(default_factory=dict, compare=False)  # length -> why a mechanism failed

    @classmethod
    def build(cls, g: Graph, covered: dict, notes=None) -> "SpectrumCertificate":
        covered = dict(sorted(covered.items()))
        missing = tuple(k for k in range(3, g.n + 1) if k not in covered)
        return cls(graph_id(g), g.n, covered, missing, dict(notes or {}))

    @property
    def pancyclic(self) -> bool:
        return not self.missing

    @property
    def lengths(self) -> list[int]:
        return sorted(self.covered)

    def verify(self, g: Graph) -> bool:
        if self.graph_id != graph_id(g) or self.n != g.n:
            return False
        for k, (w, _tag) in self.covered.items():
            if w.length != k or w.host != g or not w.verify():
                return False
        return set(self.missing) == set(range(3, g.n + 1)) - set(self.covered)

    def to_json(self):
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "pancyclic": self.pancyclic,
            "covered": {
                str(k): {"cycle": list(w.vertices), "mechanism": tag} for k, (w, tag) in self.covered.items()
            },
            "missing": list(self.missing),
            "notes": {str(k): v for k, v in sorted(self.notes.items())},
        }


# -- exhaustive oracle ------------------------------------------------------------


def _root_table(g: Graph, s: int):
    """Held-Karp reachability among vertices above ``s``.

    ``reach[mask]`` is a bitmask of the ends v for which some path leaves
    ``s``, visits exactly ``mask`` (local ids) and stops at v.
    """
    verts = list(range(s + 1, g.n))
    k = len(verts)
    if k < 2:
        return verts, None, None
    adj = np.zeros(k, dtype=np.int64)
    for i, v in enumerate(verts):
        for w in _bits(g.mask(v) >> (s + 1)):
            adj[i] |= 1 << w
    start = 0
    for w in _bits(g.mask(s) >> (s + 1)):
        start |= 1 << w
    size = 1 << k
    reach = np.zeros(size, dtype=np.int64)
    for i in range(k):
        if (start >> i) & 1:
            reach[1 << i] = 1 << i
    masks = np.arange(size, dtype=np.int64)
    pop = np.zeros(size, dtype=np.int64)
    for i in range(k):
        pop += (masks >> i) & 1
    layers = [masks[pop == c] for c in range(k + 1)]
    for c in range(2, k + 1):
        layer = layers[c]
        for i in range(k):
            bit = np.int64(1 << i)
            sel = layer[(layer & bit) != 0]
            prev = reach[sel ^ bit]
            hit = sel[(prev & adj[i]) != 0]
            reach[hit] |= bit
    return verts, reach, (start, adj, pop)


def _backtrack(verts, reach, start, adj, mask, end):
    order = [end]
    while mask != 1 << end:
        prev_mask = mask ^ (1 << end)
        cand = int(reach[prev_mask]) & int(adj[end])
        nxt = (cand & -cand).bit_length() - 1
        order.append(nxt)
        mask, end = prev_mask, nxt
    return [verts[i] for i in reversed(order)]


def cycle_spectrum_bruteforce(g: Graph) -> SpectrumCertificate:
    """Exact spectrum by subset dynamic programming, one root per cycle.

    A cycle is found from its smallest vertex ``s``: a path from ``s``
    through vertices above ``s`` that ends next to ``s``.
    """
    if g.n > BRUTEFORCE_CAP:
        raise SizeCapError(g.n, BRUTEFORCE_CAP)
    covered: dict = {}
    wanted = set(range(3, g.n + 1))
    for s in range(g.n):
        if not wanted:
            break
        verts, reach, aux = _root_table(g, s)
        if reach is None:
            continue
        start, adj, pop = aux
        closing = reach & start
        for length in sorted(wanted):
            cand = np.flatnonzero((pop == length - 1) & (closing != 0))
            if cand.size == 0:
                continue
            mask = int(cand[0])
            ends = int(closing[mask])
            end = (ends & -ends).bit_length() - 1
            path = _backtrack(verts, reach, start, adj, mask, end)
            covered[length] = (CycleWitness((s, *path), g), "bruteforce")
        wanted -= set(covered)
    return SpectrumCertificate.build(g, covered)


# -- density and combination -------------------------------------------------------


@dataclass(frozen=True)
class DensityCertificate:
    x: int
    y: int
    p: int
    interval: tuple[int, int]
    witnesses: dict = field(compare=False)  # length -> PathWitness

    def to_json(self):
        return {
            "x": self.x,
            "y": self.y,
            "p": self.p,
            "interval": list(self.interval),
            "witnesses": {str(k): list(w.vertices) for k, w in sorted(self.witnesses.items())},
        }


def verify_density(g: Graph, cert: DensityCertificate) -> bool:
    """Every window ``[a', a'+p]`` inside the interval holds a witnessed length."""
    for k, w in cert.witnesses.items():
        if w.length != k or w.endpoints != (cert.x, cert.y) or w.host != g or not w.verify():
            return False
    a, b = cert.interval
    present = sorted(k for k in cert.witnesses if a <= k <= b)
    for start in range(a, b - cert.p + 1):
        i = np.searchsorted(present, start)
        if i == len(present) or present[i] > start + cert.p:
            return False
    return True


def combine_segments(segments) -> dict[int, CycleWitness]:
    """Stitch a closed chain of path families into cycles of every sum length.

    ``segments`` is a list of ``((u, v), {length: PathWitness})`` with the
    ``v`` of one segment equal to the ``u`` of the next, cyclically.  Sums
    below 3 are ignored; each reported sum uses the lexicographically first
    choice of segment lengths.
    """
    if not segments:
        return {}
    t = len(segments)
    for i, ((_, v), _) in enumerate(segments):
        nxt = segments[(i + 1) % t][0][0]
        if v != nxt:
            raise ValueError(f"segment {i} ends at {v} but segment {(i + 1) % t} starts at {nxt}")
    choices: dict[int, tuple[int, ...]] = {0: ()}
    for _, lengths in segments:
        nxt: dict[int, tuple[int, ...]] = {}
        for total, picked in sorted(choices.items()):
            for k in sorted(lengths):
                nxt.setdefault(total + k, picked + (k,))
        choices = nxt
    out = {}
    for total, picked in sorted(choices.items()):
        if total < 3:
            continue
        seq: list[int] = []
        host = None
        for ((u, v), lengths), k in zip(segments, picked):
            w = lengths[k]
            if w.endpoints != (u, v) or w.length != k:
                raise ValueError(f"witness for length {k} does not run {u} -> {v}")
            host = w.host
            seq.extend(w.vertices[:-1])
        seen = set()
        for x in seq:
            if x in seen:
                raise DisjointnessViolation(x)
            seen.add(x)
        out[total] = CycleWitness(tuple(seq), host)
    return out


# -- short cycles ------------------------------------------------------------------


@dataclass(frozen=True)
class SmallCycles:
    c3: CycleWitness | None
    c4: CycleWitness | None
    c5: CycleWitness | None

    def by_length(self) -> dict[int, CycleWitness]:
        return {k: w for k, w in ((3, self.c3), (4, self.c4), (5, self.c5)) if w is not None}

    @property
    def absent(self) -> tuple[int, ...]:
        return tuple(k for k, w in ((3, self.c3), (4, self.c4), (5, self.c5)) if w is None)


def _low(mask):
    return (mask & -mask).bit_length() - 1


def find_small_cycles(g: Graph) -> SmallCycles:
    """Exhaustive pattern search for C3, C4 and C5 (absence is exact)."""
    c3 = c4 = c5 = None
    masks = g.masks
    for u, v in g.edges():
        common = masks[u] & masks[v]
        if common:
            c3 = CycleWitness((u, v, _low(common)), g)
            break
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = masks[u] & masks[v]
            if common.bit_count() >= 2:
                a = _low(common)
                b = _low(common & ~(1 << a))
                c4 = CycleWitness((u, a, v, b), g)
                break
        if c4:
            break
    for u in range(g.n):
        nb = g.neighbors(u)
        for a in nb:
            for d in nb:
                if d == a:
                    continue
                for b in _bits(masks[a] & ~(1 << u) & ~(1 << d)):
                    mids = masks[b] & masks[d] & ~(1 << u) & ~(1 << a)
                    if mids:
                        c5 = CycleWitness((u, a, b, _low(mids), d), g)
                        break
                if c5:
                    break
            if c5:
                break
        if c5:
            break
    return SmallCycles(c3, c4, c5)


def find_cycle_of_length(g: Graph, length: int, budget: int = 500_000) -> CycleWitness:
    """Rooted DFS for a cycle of exactly ``length`` vertices.

    Rooted at the smallest cycle vertex and pruned with distances back to
    the root.  Raises :class:`NotFound`; ``exhaustive`` tells whether the
    search space was covered before the budget ran out.
    """
    n = g.n
    if length < 3 or length > n:
        raise NotFound(f"no cycle of length {length} on {n} vertices", exhaustive=True)
    expansions = 0
    exhausted = False
    for s in range(n - length + 1):
        allowed = ((1 << n) - 1) & ~((1 << s) - 1)
        dist = _distances(g, s, allowed)
        path = [s]
        used = 1 << s
        found = None

        def dfs(v):
            nonlocal used, expansions, exhausted, found
            expansions += 1
            if expansions > budget:
                exhausted = True
                return True
            need = length - len(path)
            if need == 0:
                if g.adjacent(v, s):
                    found = tuple(path)
                    return True
                return False
            for w in _bits(g.mask(v) & allowed & ~used):
                if dist[w] > need:
                    continue
                path.append(w)
                used |= 1 << w
                if dfs(w):
                    return True
                used &= ~(1 << w)
                path.pop()
            return False

        dfs(s)
        if found:
            return CycleWitness(found, g)
        if exhausted:
            raise NotFound(f"budget spent looking for C{length}", exhaustive=False)
    raise NotFound(f"G has no cycle of length {length}", exhaustive=True)


def _distances(g, s, allowed):
    dist = [math.inf] * g.n
    dist[s] = 0
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            for w in _bits(g.mask(v) & allowed):
                if dist[w] == math.inf:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


# -- partition with apexes ---------------------------------------------------------


@dataclass(frozen=True)
class TrianglePartition:
    X: frozenset
    E: tuple[tuple[int, int], ...]
    apex: dict = field(compare=False)  # (x, y) -> z
    host: Graph = field(compare=False, repr=False)
    seed: int = 0
    trial: int = 0
    matchings: dict = field(default_factory=dict, compare=False, repr=False)

    def subgraph(self) -> Graph:
        """The graph (X, E) on the host's vertex ids."""
        return Graph(self.host.n, self.E)

    def check_apexes(self) -> bool:
        g = self.host
        for x, y in self.E:
            z = self.apex.get((x, y))
            if z is None or z in self.X or x not in self.X or y not in self.X:
                return False
            if not (g.adjacent(x, y) and g.adjacent(x, z) and g.adjacent(y, z)):
                return False
        return True

    def to_json(self):
        return {
            "seed": self.seed,
            "trial": self.trial,
            "X": sorted(self.X),
            "E": [[x, y, self.apex[(x, y)]] for x, y in self.E],
        }


def _greedy_matching(g: Graph, v: int):
    """Maximal matching inside N(v), scanning in vertex order."""
    free = g.mask(v)
    pairs = []
    for a in g.neighbors(v):
        if not (free >> a) & 1:
            continue
        partner = g.mask(a) & free & ~(1 << a)
        if partner:
            b = _low(partner)
            pairs.append((a, b))
            free &= ~((1 << a) | (1 << b))
    return pairs


def triangle_partition(
    g: Graph, seed: int, trials: int = 1, alpha: int | None = None, kappa: int | None = None
) -> TrianglePartition:
    """Random X with an edge set E inside X whose edges have apexes outside X.

    Every N(v) gets a greedy maximal matching M_v; the unmatched part of
    N(v) is independent, so ``|M_v| >= ceil((deg v - alpha)/2)``.  An edge
    ``xy`` with ``x, y`` in X qualifies when y is matched to some z not in
    X inside ``M_x`` (or symmetrically).  Each trial draws X from its own
    seed ``(seed, trial)``; the largest E wins, ties to the lowest trial.
    """
    from .invariants import independence_number, vertex_connectivity

    if alpha is None:
        alpha = independence_number(g).value
    if kappa is None:
        kappa = vertex_connectivity(g)
    if not kappa > alpha:
        raise PreconditionError("kappa > alpha", f"kappa={kappa}, alpha={alpha}")
    if trials < 1:
        raise ValueError("trials must be positive")
    matchings = {}
    triples = []
    for v in range(g.n):
        m = _greedy_matching(g, v)
        need = -(-(g.degree(v) - alpha) // 2)
        if len(m) < need:
            raise MatchingDeficit(v, len(m), need)
        matchings[v] = tuple(m)
        for a, b in m:
            triples.append((v, a, b))
            triples.append((v, b, a))
    tri = np.array(triples, dtype=np.int64).reshape(-1, 3)
    best = None
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        inside = rng.random(g.n) < 0.5
        ok = inside[tri[:, 0]] & inside[tri[:, 1]] & ~inside[tri[:, 2]]
        apex: dict = {}
        for x, y, z in tri[ok].tolist():
            apex.setdefault((min(x, y), max(x, y)), z)
        if best is None or len(apex) > len(best[1]):
            best = (t, apex, inside)
    t, apex, inside = best
    X = frozenset(np.flatnonzero(inside).tolist())
    return TrianglePartition(X, tuple(sorted(apex)), apex, g, seed, t, matchings)


# -- even cycles -------------------------------------------------------------------


def _fundamental_cycle(g: Graph, length: int):
    """Look for a BFS-tree fundamental cycle of the exact length."""
    n = g.n
    for s in range(n):
        if not g.degree(s):
            continue
        parent = {s: None}
        depth = {s: 0}
        order = [s]
        for v in order:
            for w in g.neighbors(v):
                if w not in parent:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    order.append(w)
        for u, w in g.edges():
            if u not in parent or parent.get(w) == u or parent.get(u) == w:
                continue
            if depth[u] + depth[w] + 1 < length:
                continue
            a, b = [u], [w]
            while a[-1] != b[-1]:
                if depth[a[-1]] >= depth[b[-1]]:
                    a.append(parent[a[-1]])
                else:
                    b.append(parent[b[-1]])
            cyc = a + b[-2::-1]
            if len(cyc) == length:
                return CycleWitness(tuple(cyc), g)
    return None


def find_even_cycle(g: Graph, l: int, budget: int = 500_000) -> CycleWitness:
    """A cycle of length ``2l``.

    BFS layers first: every non-tree edge closes a fundamental cycle with
    the two tree paths to their meeting point.  If none has length 2l a
    rooted DFS with distance pruning takes over.
    """
    if l < 2:
        raise PreconditionError("l >= 2", f"l={l}")
    if 2 * l > g.n:
        raise NotFound(f"C{2 * l} needs more than {g.n} vertices", exhaustive=True)
    found = _fundamental_cycle(g, 2 * l)
    if found is not None:
        return found
    return find_cycle_of_length(g, 2 * l, budget=budget)


def odd_from_even(g: Graph, part: TrianglePartition, even_cycle: CycleWitness) -> CycleWitness:
    """Replace the first cycle edge xy by x z y with z the apex of xy."""
    vs = even_cycle.vertices
    E = set(part.E)
    edges = [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
    for a, b in edges:
        if (min(a, b), max(a, b)) not in E:
            raise PreconditionError("even cycle lies in E", f"edge ({a}, {b}) is not in E")
    a, b = edges[0]
    z = part.apex[(min(a, b), max(a, b))]
    out = CycleWitness(vs[:1] + (z,) + vs[1:], g)
    check = out.verify()
    if not check:
        raise PreconditionError("apex lies off the cycle", check.reason)
    return out


# -- guarantee predicates ------------------------------------------------------------


def ramsey_guarantee(length: int, s: int, n: int) -> bool:
    """True when every n-vertex graph without independent s-sets has a C_length.

    Uses ``r(C_l, K_s) <= ((l-2)(s^(1/x)+2)+1)(s-1)`` with ``x = floor((l-1)/2)``.
    """
    if length < 3 or s < 2:
        return False
    x = (length - 1) // 2
    return n >= ((length - 2) * (s ** (1 / x) + 2) + 1) * (s - 1)


def even_cycle_guarantee(n: int, m: int, l: int) -> bool:
    """``m >= max(20 l n^(1+1/l), 200 n l)`` forces a cycle of length 2l."""
    return m >= max(20 * l * n ** (1 + 1 / l), 200 * n * l)
