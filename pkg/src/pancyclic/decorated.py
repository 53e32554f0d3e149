"""Paths and cycles carrying triangles on a prefix of odd-position chords.

A decorated path/cycle lists its vertices ``v1, v2, ...`` together with the
chords ``v1v3, v3v5, ..., v(2r-1)v(2r+1)``.  Using ``c`` of those chords in
place of the two edges they span shortens the ``v1 -> v(2r+1)`` route by
``c``, so that pair is joined by paths of every length in ``[r, 2r]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import FanDeficit, GrowthStuck, NoAugmentingEdge, PancyclicError, PreconditionError
from .graph import CycleWitness, Graph, PathWitness, Verdict, _bits
from .invariants import menger_fan, vertex_connectivity

__all__ = [
    "TriangulatedPath",
    "TriangulatedCycle",
    "greedy_triangulated_path",
    "short_triangulated_cycle",
    "short_cycle_bound",
    "hamilton_with_triangles",
    "realizable_prefix_lengths",
]


def _prefix_chords(order, r):
    return tuple((order[2 * i], order[2 * i + 2]) for i in range(min(r, (len(order) - 1) // 2)))


def _check_chords(g, order, r, chords) -> Verdict:
    if len(order) < 2 * r + 1:
        return Verdict(False, f"{len(order)} vertices cannot carry {r} triangles")
    if tuple(chords) != _prefix_chords(order, r):
        return Verdict(False, "chords do not sit on the odd positions of the prefix")
    for a, b in chords:
        if not g.adjacent(a, b):
            return Verdict(False, f"chord ({a}, {b}) is not an edge")
    return Verdict(True)


@dataclass(frozen=True)
class TriangulatedPath:
    vertices: tuple[int, ...]
    r: int
    host: Graph = field(compare=False, repr=False)

    @property
    def chords(self) -> tuple[tuple[int, int], ...]:
        return _prefix_chords(self.vertices, self.r)

    @property
    def base(self) -> PathWitness:
        return PathWitness(self.vertices, self.host)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def verify(self) -> Verdict:
        v = self.base.verify()
        return v if not v else _check_chords(self.host, self.vertices, self.r, self.chords)

    def to_json(self):
        return {"path": list(self.vertices), "chords": [list(c) for c in self.chords], "r": self.r}


@dataclass(frozen=True)
class TriangulatedCycle:
    """``order`` is the cycle read from ``v1``; the base witness is canonicalised."""

    order: tuple[int, ...]
    r: int
    host: Graph = field(compare=False, repr=False)

    @property
    def chords(self) -> tuple[tuple[int, int], ...]:
        return _prefix_chords(self.order, self.r)

    @property
    def base(self) -> CycleWitness:
        return CycleWitness(self.order, self.host)

    @property
    def length(self) -> int:
        return len(self.order)

    @property
    def prefix(self) -> tuple[int, ...]:
        return self.order[: 2 * self.r + 1]

    @property
    def opposite(self) -> tuple[int, ...]:
        """The rest of the cycle as a path from ``v(2r+1)`` back to ``v1``."""
        return self.order[2 * self.r:] + self.order[:1]

    @property
    def realizable_lengths(self) -> dict[int, PathWitness]:
        return realizable_prefix_lengths(self)

    def drop_triangles(self, r: int) -> "TriangulatedCycle":
        if r > self.r:
            raise ValueError("can only omit triangles")
        return TriangulatedCycle(self.order, r, self.host)

    def verify(self) -> Verdict:
        v = self.base.verify()
        return v if not v else _check_chords(self.host, self.order, self.r, self.chords)

    def to_json(self):
        return {"cycle": list(self.order), "chords": [list(c) for c in self.chords], "r": self.r}


def realizable_prefix_lengths(tc) -> dict[int, PathWitness]:
    """For each l in [r, 2r] a v1 -> v(2r+1) path that uses 2r - l chords."""
    seq = tc.order if isinstance(tc, TriangulatedCycle) else tc.vertices
    r = tc.r
    prefix = list(seq[: 2 * r + 1])
    out = {}
    for length in range(r, 2 * r + 1):
        used = 2 * r - length
        skip = {2 * i + 1 for i in range(used)}
        out[length] = PathWitness(tuple(v for i, v in enumerate(prefix) if i not in skip), tc.host)
    return out


def _need_kappa(g, kappa):
    return vertex_connectivity(g) if kappa is None else kappa


def greedy_triangulated_path(g: Graph, r: int, alpha_upper: int, kappa: int | None = None, start: int = 0) -> TriangulatedPath:
    """Build a path with ``r`` triangles on ``2r+1`` vertices greedily.

    At step i an edge is taken inside ``N(v(2i+1))`` minus the vertices
    already used; such a set is larger than alpha, so it spans an edge.
    Scan order is ascending vertex id.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        return TriangulatedPath((start,), 0, g)
    kappa = _need_kappa(g, kappa)
    if 2 * r > kappa - alpha_upper:
        raise PreconditionError("2r <= kappa - alpha", f"r={r}, kappa={kappa}, alpha<={alpha_upper}")
    path = [start]
    used = 1 << start
    for i in range(r):
        tip = path[-1]
        avail = g.mask(tip) & ~used
        pick = None
        for a in _bits(avail):
            inner = g.mask(a) & avail & ~((1 << (a + 1)) - 1)
            if inner:
                pick = (a, (inner & -inner).bit_length() - 1)
                break
        if pick is None:
            raise GrowthStuck(i, f"N({tip}) minus the path spans no edge")
        path.extend(pick)
        used |= (1 << pick[0]) | (1 << pick[1])
    return TriangulatedPath(tuple(path), r, g)


def short_cycle_bound(n: int, kappa: int, r: int) -> Fraction:
    """max(n/(kappa-2r+1), n/(kappa-1)): allowed excess of l over 2(r+1)."""
    terms = []
    for d in (kappa - 2 * r + 1, kappa - 1):
        if d <= 0:
            raise PreconditionError("kappa - 2r + 1 > 0 and kappa > 1", f"kappa={kappa}, r={r}")
        terms.append(Fraction(n, d))
    return max(terms)


def short_triangulated_cycle(
    g: Graph, r: int, alpha_upper: int, kappa: int | None = None, prefer_long_return: bool = False
) -> TriangulatedCycle:
    """A cycle with ``r`` triangles and length at most ``2(r+1) + bound``.

    The greedy decorated path is closed with the shortest path of a
    maximum Menger fan between its ends that avoids the path interior.
    For ``r = 0`` the first edge ``xy`` is closed with the shortest fan
    path other than the edge itself.  ``prefer_long_return`` skips a
    return that is a bare edge when another fan path exists.
    """
    kappa = _need_kappa(g, kappa)
    if r < 0 or (r > 0 and 2 * r > kappa - alpha_upper):
        raise PreconditionError("0 <= 2r <= kappa - alpha", f"r={r}, kappa={kappa}, alpha<={alpha_upper}")
    # the r = 0 construction never uses alpha
    if r == 0:
        if g.m == 0:
            raise PreconditionError("G has an edge")
        if kappa < 2:
            raise PreconditionError("kappa >= 2")
        x = next(v for v in g.vertices() if g.degree(v))
        y = g.neighbors(x)[0]
        fan = menger_fan(g, x, {y}, allow_direct=False)
        if not fan.paths:
            raise FanDeficit(1, 0)
        ret = min(fan.paths, key=lambda p: (p.length, p.vertices))
        order = ret.vertices
    else:
        tp = greedy_triangulated_path(g, r, alpha_upper, kappa)
        x, y = tp.vertices[0], tp.vertices[-1]
        interior = tp.vertices[1:-1]
        fan = menger_fan(g, x, {y}, forbidden=interior)
        paths = sorted(fan.paths, key=lambda p: (p.length, p.vertices))
        if prefer_long_return and len(paths) > 1 and paths[0].length == 1:
            paths = paths[1:] + paths[:1]
        if not paths:
            raise FanDeficit(1, 0)
        order = tp.vertices + paths[0].vertices[-2:0:-1]
    tc = TriangulatedCycle(tuple(order), r, g)
    check = tc.verify()
    if not check:
        raise PancyclicError(f"internal: built an invalid decorated cycle ({check.reason})")
    return tc


def _splice(order, fan_paths, g, v, r):
    """One lengthening move for :func:`hamilton_with_triangles`.

    ``fan_paths`` maps cycle position -> path from ``v`` to that vertex.
    Tries the successor-set edge first (v to a successor, then two
    successors), then two consecutive fan ends.
    """
    ell = len(order)
    ends = sorted(fan_paths)
    succ = {i: order[(i + 1) % ell] for i in ends}
    for i in ends:
        if g.adjacent(v, succ[i]):
            p = fan_paths[i]
            return order[: i + 1] + p[-2::-1] + order[i + 1:]
    for a, i in enumerate(ends):
        for j in ends[a + 1:]:
            if g.adjacent(succ[i], succ[j]):
                pi, pj = fan_paths[i], fan_paths[j]
                return order[: i + 1] + pi[-2::-1] + pj[1:] + order[i + 1: j][::-1] + order[j + 1:]
    for i in ends:
        if i + 1 in fan_paths:
            pi, pj = fan_paths[i], fan_paths[i + 1]
            return order[: i + 1] + pi[-2::-1] + pj[1:-1] + order[i + 1:]
    return None


def hamilton_with_triangles(g: Graph, alpha_exact: int, kappa: int | None = None) -> TriangulatedCycle:
    """Hamilton cycle carrying ``floor((kappa - alpha)/2)`` triangles.

    Starts from a short decorated cycle and repeatedly lengthens it: an
    uncovered vertex ``v`` sends ``alpha`` disjoint paths to the cycle
    outside ``v1..v(2r)``; the successors of their ends together with
    ``v`` exceed alpha, so they span an edge, and rerouting through that
    edge absorbs ``v`` and the fan paths while keeping the chords.
    """
    kappa = _need_kappa(g, kappa)
    n = g.n
    if n < 3:
        raise PreconditionError("n >= 3")
    if kappa < alpha_exact:
        raise PreconditionError("kappa >= alpha", f"kappa={kappa}, alpha={alpha_exact}")
    r = (kappa - alpha_exact) // 2
    tc = short_triangulated_cycle(g, r, alpha_exact, kappa, prefer_long_return=True)
    order = list(tc.order)
    cap = n * n
    steps = 0
    while len(order) < n:
        steps += 1
        if steps > cap:
            raise PancyclicError("internal: lengthening loop exceeded n^2 iterations")
        on = set(order)
        v = next(w for w in range(n) if w not in on)
        prefix = order[: 2 * r]
        tail = order[2 * r:]
        k = min(alpha_exact, len(tail))
        try:
            fan = menger_fan(g, v, tail, k=k, forbidden=prefix)
        except FanDeficit as exc:
            raise NoAugmentingEdge(
                f"only {exc.achieved} disjoint paths from {v} to the cycle; is alpha={alpha_exact} right?"
            ) from exc
        pos = {u: i for i, u in enumerate(order)}
        fan_paths = {pos[p.vertices[-1]]: list(p.vertices) for p in fan.paths}
        new = _splice(order, fan_paths, g, v, r)
        if new is None:
            raise NoAugmentingEdge(f"successor set of {len(fan_paths)} fan ends plus {v} spans no edge")
        if len(new) <= len(order) or new[: 2 * r + 1] != order[: 2 * r + 1]:
            raise PancyclicError("internal: splice did not lengthen the cycle")
        order = new
    out = TriangulatedCycle(tuple(order), r, g)
    check = out.verify()
    if not check:
        raise PancyclicError(f"internal: invalid Hamilton decorated cycle ({check.reason})")
    return out
