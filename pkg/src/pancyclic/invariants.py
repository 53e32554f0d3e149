"""Minimum degree, independence number, vertex connectivity and Menger fans."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import FanDeficit
from .graph import Graph, PathWitness, _bits

__all__ = [
    "min_degree",
    "IndependenceResult",
    "independence_number",
    "vertex_connectivity",
    "local_connectivity",
    "connectivity_lower_bound",
    "MengerFan",
    "menger_fan",
    "GraphProfile",
    "profile",
]


def min_degree(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("empty graph")
    return min(g.degrees())


# -- independence number -------------------------------------------------------


@dataclass(frozen=True)
class IndependenceResult:
    lo: int
    hi: int
    exact: bool
    witness: tuple[int, ...] = ()
    expansions: int = 0

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"alpha only bounded: [{self.lo}, {self.hi}]")
        return self.lo

    def __int__(self):
        return self.value

    def to_json(self):
        return {"lo": self.lo, "hi": self.hi, "exact": self.exact}


def _color_sort(cand: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy colouring of ``cand`` into independent classes of ``adj``.

    Returns the vertices in colour order and the running colour count,
    which bounds the clique size inside each prefix.
    """
    order, bounds = [], []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            rest &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique(adj: list[int], n: int, budget: int):
    best: list[int] = []
    expansions = 0
    exhausted = False

    # greedy seed
    cand = (1 << n) - 1
    cur: list[int] = []
    while cand:
        v = max(_bits(cand), key=lambda w: (adj[w] & cand).bit_count())
        cur.append(v)
        cand &= adj[v]
    best = cur

    def expand(clique: list[int], cand: int):
        nonlocal best, expansions, exhausted
        expansions += 1
        if expansions > budget:
            exhausted = True
            return
        order, bounds = _color_sort(cand, adj)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(best) or exhausted:
                return
            v = order[i]
            nxt = cand & adj[v]
            clique.append(v)
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    if n:
        expand([], (1 << n) - 1)
    return best, expansions, exhausted


def independence_number(g: Graph, budget: int = 2_000_000) -> IndependenceResult:
    """Exact alpha by branch and bound on the complement's cliques.

    When more than ``budget`` search nodes are needed the greedy lower
    bound and the clique-cover upper bound are returned with
    ``exact=False``.
    """
    n = g.n
    if n == 0:
        return IndependenceResult(0, 0, True)
    full = (1 << n) - 1
    comp = [(~m & full) & ~(1 << v) for v, m in enumerate(g.masks)]
    best, expansions, exhausted = _max_clique(comp, n, budget)
    if not exhausted:
        return IndependenceResult(len(best), len(best), True, tuple(sorted(best)), expansions)
    # a colouring of the complement is a clique cover of g
    _, bounds = _color_sort(full, comp)
    return IndependenceResult(len(best), max(bounds), False, tuple(sorted(best)), expansions)


# -- vertex-disjoint flows -------------------------------------------------------


class _FanFlow:
    """Unit vertex-capacity flow from ``source`` into ``targets``.

    Vertices are split into in/out halves implicitly; the flow is stored
    as predecessor/successor maps on original vertices.  With
    ``shared_sink`` the targets absorb any number of paths (classic s-t
    connectivity); otherwise every target ends at most one path.
    """

    def __init__(self, g: Graph, source: int, targets, forbidden=(), shared_sink=False, allow_direct=True):
        self.g = g
        self.s = source
        self.targets = set(targets)
        self.blocked = set(forbidden)
        self.shared = shared_sink
        self.allow_direct = allow_direct
        self.first: set[int] = set()  # successors of the source
        self.nxt: dict[int, int] = {}
        self.prv: dict[int, int] = {}
        self.value = 0

    def _saturated(self, a: int, b: int) -> bool:
        if a == self.s:
            return b in self.first
        return self.nxt.get(a) == b

    def augment(self) -> bool:
        s, g = self.s, self.g
        targets, blocked, prv = self.targets, self.blocked, self.prv
        start = 2 * s + 1
        parent = {start: None}
        queue = deque([start])
        found = None
        while queue and found is None:
            node = queue.popleft()
            v, out = node >> 1, node & 1
            if out:
                if v != s and v in prv:
                    nd = 2 * v
                    if nd not in parent:
                        parent[nd] = node
                        queue.append(nd)
                for b in g.neighbors(v):
                    if b == s or b in blocked or self._saturated(v, b):
                        continue
                    if v == s and not self.allow_direct and b in targets:
                        continue
                    nd = 2 * b
                    if nd in parent:
                        continue
                    parent[nd] = node
                    if b in targets and (self.shared or b not in prv):
                        found = nd
                        break
                    queue.append(nd)
            else:
                if v in prv:
                    nd = 2 * prv[v] + 1
                elif v in targets:
                    continue
                else:
                    nd = 2 * v + 1
                if nd not in parent:
                    parent[nd] = node
                    queue.append(nd)
        if found is None:
            return False
        adds, cancels = [], []
        node = found
        while parent[node] is not None:
            par = parent[node]
            a, b = par >> 1, node >> 1
            if par & 1 and not node & 1:
                adds.append((a, b))
            elif not par & 1 and node & 1:
                cancels.append((b, a))
            node = par
        for a, b in cancels:
            if a == s:
                self.first.discard(b)
            elif self.nxt.get(a) == b:
                del self.nxt[a]
            if self.prv.get(b) == a:
                del self.prv[b]
        for a, b in adds:
            if a == s:
                self.first.add(b)
            else:
                self.nxt[a] = b
            if not (self.shared and b in targets):
                self.prv[b] = a
        self.value += 1
        return True

    def run(self, limit=None) -> int:
        while limit is None or self.value < limit:
            if not self.augment():
                break
        return self.value

    def paths(self) -> list[list[int]]:
        out = []
        for f in sorted(self.first):
            p = [self.s, f]
            while p[-1] not in self.targets:
                p.append(self.nxt[p[-1]])
            out.append(p)
        out.sort(key=lambda p: (p[-1], len(p), p))
        return out


@dataclass(frozen=True)
class MengerFan:
    source: int
    targets: frozenset
    paths: tuple[PathWitness, ...]
    max_flow: int | None = None

    @property
    def endpoints(self) -> list[int]:
        return [p.vertices[-1] for p in self.paths]

    def verify(self) -> bool:
        seen: set[int] = set()
        shared = len(self.targets) == 1
        for p in self.paths:
            vs = p.vertices
            if not p.verify() or vs[0] != self.source or vs[-1] not in self.targets:
                return False
            if any(v in self.targets for v in vs[1:-1]):
                return False
            tail = vs[1:-1] if shared else vs[1:]
            if seen.intersection(tail):
                return False
            seen.update(tail)
        return True


def menger_fan(
    g: Graph,
    source: int,
    targets: Iterable[int],
    k: int | None = None,
    forbidden: Iterable[int] = (),
    allow_direct: bool = True,
) -> MengerFan:
    """Internally disjoint paths from ``source`` into ``targets``.

    Forbidden vertices are not used at all.  With a single target the
    paths share that final vertex (classic xy-paths); with several
    targets every path ends at a different target.  ``k=None`` returns a
    maximum family; otherwise exactly ``k`` paths or :class:`FanDeficit`.
    """
    targets = frozenset(targets) - frozenset(forbidden)
    forbidden = frozenset(forbidden)
    if source in targets or source in forbidden:
        raise ValueError("source must lie outside targets and forbidden")
    flow = _FanFlow(g, source, targets, forbidden, shared_sink=len(targets) == 1, allow_direct=allow_direct)
    value = flow.run(limit=k)
    if k is not None and value < k:
        raise FanDeficit(k, flow.run())
    paths = tuple(PathWitness(tuple(p), g) for p in flow.paths())
    return MengerFan(source, targets, paths, max_flow=value if k is None else None)


def local_connectivity(g: Graph, u: int, v: int, cap: int | None = None) -> int:
    """Number of internally disjoint u-v paths (``u``, ``v`` non-adjacent), capped."""
    flow = _FanFlow(g, u, {v}, shared_sink=True)
    return flow.run(limit=cap)


def vertex_connectivity(g: Graph) -> int:
    """kappa(G): K_n gives n-1, a disconnected graph 0.

    Uses the minimum-degree vertex v and checks v against its
    non-neighbours and all non-adjacent pairs inside N(v); some minimum
    separator separates one of those pairs.
    """
    n = g.n
    if n < 2:
        raise ValueError("connectivity needs n >= 2")
    if g.is_complete():
        return n - 1
    if not g.is_connected():
        return 0
    degs = g.degrees()
    v = min(range(n), key=lambda x: (degs[x], x))
    best = degs[v]
    for w in range(n):
        if w != v and not g.adjacent(v, w):
            best = min(best, local_connectivity(g, v, w, cap=best))
    nb = g.neighbors(v)
    for i, x in enumerate(nb):
        for y in nb[i + 1:]:
            if not g.adjacent(x, y):
                best = min(best, local_connectivity(g, x, y, cap=best))
    return best


def connectivity_lower_bound(g: Graph) -> int:
    """Certified lower bound on kappa: min common neighbourhood over non-adjacent pairs.

    kappa is the minimum local connectivity over non-adjacent pairs and
    common neighbours give disjoint paths of length two, so the bound is
    valid for every non-complete graph.  Cheap on dense graphs.
    """
    n = g.n
    if g.is_complete():
        return n - 1
    masks = g.masks
    full = (1 << n) - 1
    best = n
    for u in range(n):
        non = ~masks[u] & full & ~((1 << (u + 1)) - 1)
        mu = masks[u]
        while non:
            low = non & -non
            w = low.bit_length() - 1
            c = (mu & masks[w]).bit_count()
            if c < best:
                best = c
            non ^= low
    return best


# -- profile --------------------------------------------------------------------


@dataclass(frozen=True)
class GraphProfile:
    n: int
    delta: int
    alpha: IndependenceResult
    kappa: int
    epsilon: float | None = field(default=None, compare=False)

    def to_json(self):
        out = {"n": self.n, "delta": self.delta, "alpha": self.alpha.to_json(), "kappa": self.kappa}
        if self.epsilon is not None:
            out["epsilon"] = self.epsilon
        return out


def profile(g: Graph, epsilon: float | None = None, budget: int = 2_000_000) -> GraphProfile:
    return GraphProfile(
        n=g.n,
        delta=min_degree(g),
        alpha=independence_number(g, budget=budget),
        kappa=vertex_connectivity(g),
        epsilon=epsilon,
    )
