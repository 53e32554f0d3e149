"""Immutable simple graphs, path/cycle witnesses and the edge-list format.

Vertices are the integers ``0..n-1``.  Adjacency is stored as one Python
int bitmask per vertex, which keeps dense graphs with a few thousand
vertices cheap; sorted neighbour tuples are materialised lazily.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ParseError

__all__ = [
    "Graph",
    "PathWitness",
    "CycleWitness",
    "Verdict",
    "parse_edge_list",
    "serialize",
    "verify_path",
    "verify_cycle",
    "canonical_cycle",
    "greedy_path",
]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _bits_np(mask: int, n: int) -> list[int]:
    if not mask:
        return []
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")).tolist()


class Graph:
    """Simple undirected graph on ``0..n-1``; never mutated after construction."""

    __slots__ = ("_n", "_masks", "_nbrs", "_m", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("n must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._init(n, masks)

    def _init(self, n, masks):
        self._n = n
        self._masks = tuple(masks)
        self._nbrs: list = [None] * n
        self._m = sum(m.bit_count() for m in self._masks) // 2
        self._edges = None
        self._hash = None

    @classmethod
    def from_masks(cls, n: int, masks: Sequence[int]) -> "Graph":
        """Trusted constructor: ``masks`` must already be symmetric and loop-free."""
        g = cls.__new__(cls)
        g._init(n, list(masks))
        return g

    @classmethod
    def from_matrix(cls, a: np.ndarray) -> "Graph":
        a = np.asarray(a, dtype=bool)
        n = a.shape[0]
        a = a | a.T
        np.fill_diagonal(a, False)
        packed = np.packbits(a, axis=1, bitorder="little")
        masks = [int.from_bytes(row.tobytes(), "little") for row in packed]
        return cls.from_masks(n, masks)

    # -- queries -----------------------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    def mask(self, v: int) -> int:
        return self._masks[v]

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def adjacent(self, u: int, v: int) -> bool:
        return (self._masks[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        nb = self._nbrs[v]
        if nb is None:
            mask = self._masks[v]
            nb = tuple(_bits_np(mask, self._n) if self._n > 256 else _bits(mask))
            self._nbrs[v] = nb
        return nb

    def degree(self, v: int) -> int:
        return self._masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self._masks]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges ``(u, v)`` with ``u < v`` in sorted order."""
        if self._edges is None:
            out = []
            for u in range(self._n):
                higher = self._masks[u] >> (u + 1)
                out.extend((u, u + 1 + w) for w in _bits(higher))
            self._edges = tuple(out)
        return self._edges

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges())

    def vertices(self) -> range:
        return range(self._n)

    def is_complete(self) -> bool:
        return self._m == self._n * (self._n - 1) // 2

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self._n):
            if (seen >> s) & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self._masks[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(_bits(comp))
        return comps

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vertices`` relabelled ``0..k-1``.

        Returns the subgraph and the tuple mapping new ids to old ids.
        """
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        keep_mask = 0
        for v in keep:
            keep_mask |= 1 << v
        masks = []
        for v in keep:
            nm = 0
            for w in _bits(self._masks[v] & keep_mask):
                nm |= 1 << index[w]
            masks.append(nm)
        return Graph.from_masks(len(keep), masks), keep

    def complement(self) -> "Graph":
        full = (1 << self._n) - 1
        return Graph.from_masks(self._n, [(~m & full) ^ (1 << v) for v, m in enumerate(self._masks)])

    def to_matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=bool)
        for u, v in self.edges():
            a[u, v] = a[v, u] = True
        return a

    # -- value semantics ---------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._masks == other._masks

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._masks))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self._n}, m={self._m})"

    def __setattr__(self, key, value):
        # only lazy caches may be written once construction is finished
        if key in ("_edges", "_hash") or not hasattr(self, "_hash"):
            object.__setattr__(self, key, value)
        else:
            raise AttributeError("Graph is immutable")


@dataclass(frozen=True)
class Verdict:
    """Truthy verification outcome; ``reason`` names the first violation."""

    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    host: Graph = field(compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        """Edge count."""
        return len(self.vertices) - 1

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def reversed(self) -> "PathWitness":
        return PathWitness(self.vertices[::-1], self.host)

    def verify(self) -> Verdict:
        return verify_path(self)

    def to_json(self):
        return {"path": list(self.vertices), "length": self.length}


def canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    """Rotate to the smallest vertex and pick the direction with the smaller successor."""
    vs = list(vertices)
    if len(vs) < 3:
        return tuple(vs)
    i = vs.index(min(vs))
    rot = vs[i:] + vs[:i]
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]
    host: Graph = field(compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", canonical_cycle([int(v) for v in self.vertices]))

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> Iterator[tuple[int, int]]:
        vs = self.vertices
        for i in range(len(vs)):
            yield vs[i], vs[(i + 1) % len(vs)]

    def verify(self) -> Verdict:
        return verify_cycle(self)

    def to_json(self):
        return {"cycle": list(self.vertices), "length": self.length}


def _check_sequence(g: Graph, vs: Sequence[int]) -> Verdict:
    seen = set()
    for v in vs:
        if not (0 <= v < g.n):
            return Verdict(False, f"vertex {v} not in graph")
        if v in seen:
            return Verdict(False, f"vertex {v} repeated")
        seen.add(v)
    for a, b in zip(vs, vs[1:]):
        if not g.adjacent(a, b):
            return Verdict(False, f"non-edge ({a}, {b})")
    return Verdict(True)


def verify_path(w: PathWitness) -> Verdict:
    if not w.vertices:
        return Verdict(False, "empty path")
    return _check_sequence(w.host, w.vertices)


def verify_cycle(w: CycleWitness) -> Verdict:
    vs = w.vertices
    if len(vs) < 3:
        return Verdict(False, f"cycle needs at least 3 vertices, got {len(vs)}")
    v = _check_sequence(w.host, vs)
    if not v:
        return v
    if not w.host.adjacent(vs[-1], vs[0]):
        return Verdict(False, f"non-edge ({vs[-1]}, {vs[0]})")
    return Verdict(True)


# -- edge-list format ----------------------------------------------------------


def _parse_ints(line: str, lineno: int) -> tuple[int, int]:
    toks = line.split()
    if len(toks) != 2:
        raise ParseError(f"expected two integers, got {len(toks)} tokens", lineno)
    try:
        a, b = int(toks[0]), int(toks[1])
    except ValueError:
        raise ParseError(f"non-integer token in {line.strip()!r}", lineno) from None
    if a < 0 or b < 0:
        raise ParseError("negative vertex id", lineno)
    return a, b


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines, ``#`` comments and an optional ``n m`` header.

    The first data line is read as a header when it announces exactly the
    number of edge lines that follow, every id below ``n`` and ``n >= 1``;
    otherwise it is an ordinary edge.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, _parse_ints(line, lineno)))
    n = None
    if rows:
        (_, (hn, hm)) = rows[0]
        body = rows[1:]
        if hn >= 1 and hm == len(body) and all(max(e) < hn for _, e in body):
            n = hn
            rows = body
    edges = set()
    top = -1
    for lineno, (u, v) in rows:
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        edges.add((min(u, v), max(u, v)))
        top = max(top, u, v)
    if n is None:
        n = top + 1
    return Graph(n, sorted(edges))


def serialize(g: Graph) -> str:
    """Header ``n m`` then sorted ``u v`` lines; the empty graph is empty text.

    A ``0 0`` header would read back as a self-loop.
    """
    if g.n == 0:
        return ""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- path growth helper ----------------------------------------------------------


def greedy_path(
    g: Graph, start: int = 0, max_vertices: int | None = None, avoid=(), rule: str = "warnsdorff"
) -> PathWitness:
    """Grow a path from ``start`` by DFS-style extension.

    With ``rule="warnsdorff"`` each step moves to the unvisited neighbour
    with the fewest unvisited neighbours (ties to the smaller id);
    ``rule="first"`` takes the smallest unvisited neighbour, which is much
    cheaper on large dense graphs.
    """
    if rule not in ("warnsdorff", "first"):
        raise ValueError(f"unknown rule {rule!r}")
    limit = g.n if max_vertices is None else max_vertices
    used = 1 << start
    for a in avoid:
        used |= 1 << a
    path = [start]
    cur = start
    while len(path) < limit:
        cand = g.mask(cur) & ~used
        if not cand:
            break
        if rule == "first":
            best = (cand & -cand).bit_length() - 1
            path.append(best)
            used |= 1 << best
            cur = best
            continue
        best, best_deg = -1, None
        for w in (_bits_np(cand, g.n) if g.n > 256 else _bits(cand)):
            d = (g.mask(w) & ~used).bit_count()
            if best_deg is None or d < best_deg:
                best, best_deg = w, d
        path.append(best)
        used |= 1 << best
        cur = best
    return PathWitness(tuple(path), g)
