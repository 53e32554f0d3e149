"""Path surgery: same-endpoint rewirings whose length lands in a fixed window.

Sizes written ``|P|`` below are vertex counts.  :class:`SurgeryResult`
reports lengths in edges, with the window converted accordingly.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NoSpliceFound, PancyclicError, PreconditionError, WindowEmpty
from .graph import Graph, PathWitness, _bits
from .invariants import menger_fan, min_degree

__all__ = [
    "SurgeryResult",
    "chord_jump_search",
    "shorten_by_degree",
    "shorten_by_independence",
    "augment_path",
    "augment_preconditions",
    "bounded_route",
]


@dataclass(frozen=True)
class SurgeryResult:
    new_path: PathWitness
    old_len: int
    new_len: int
    window: tuple[int, int]
    mechanism: str
    route: str = field(default="", compare=False)

    def to_json(self):
        return {
            "mechanism": self.mechanism,
            "route": self.route,
            "old_len": self.old_len,
            "new_len": self.new_len,
            "window": list(self.window),
            "path": list(self.new_path.vertices),
        }


def _result(old: PathWitness, verts, window_vertices, mechanism, route="") -> SurgeryResult:
    new = PathWitness(tuple(verts), old.host)
    lo, hi = window_vertices
    check = new.verify()
    if not check:
        raise PancyclicError(f"internal: rewired path invalid ({check.reason})")
    if new.endpoints != old.endpoints:
        raise PancyclicError("internal: rewiring moved an endpoint")
    if not lo <= new.num_vertices <= hi:
        raise PancyclicError(f"internal: {new.num_vertices} vertices outside window {window_vertices}")
    return SurgeryResult(new, old.length, new.length, (lo - 1, hi - 1), mechanism, route)


def _positions(vs):
    return {v: i for i, v in enumerate(vs)}


def _on_path_mask(vs):
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _single_rewirings(g: Graph, vs, lo, hi, crossing=False):
    """Best rewiring (most vertices) within ``[lo, hi]`` or None.

    Families: one chord, a detour through one or two off-path vertices,
    and optionally a pair of crossing chords.
    """
    L = len(vs)
    pos = _positions(vs)
    on = _on_path_mask(vs)
    best = None  # (count, vertices, route)

    def offer(count, build, route):
        nonlocal best
        if lo <= count <= hi and (best is None or count > best[0]):
            best = (count, build, route)

    # chords: new count L - d with d removed vertices
    dlo, dhi = L - hi, L - lo
    for d in range(max(dlo, 1), dhi + 1):
        hit = None
        for i in range(L - d - 1):
            if g.adjacent(vs[i], vs[i + d + 1]):
                hit = i
                break
        if hit is not None:
            i = hit
            offer(L - d, lambda i=i, d=d: vs[: i + 1] + vs[i + d + 1:], "chord")
            break
    if best and best[0] == hi:
        return best

    # one off-path vertex: count L - d + 1
    dlo1, dhi1 = max(L - hi + 1, 2), L - lo + 1
    if dlo1 <= dhi1:
        full = (1 << g.n) - 1
        for w in _bits(full & ~on):
            ps = sorted(pos[x] for x in _bits(g.mask(w) & on))
            for i in ps:
                k = bisect_left(ps, i + dlo1 + 1)
                if k < len(ps) and ps[k] - i - 1 <= dhi1:
                    j = ps[k]
                    offer(L - (j - i - 1) + 1, lambda i=i, j=j, w=w: vs[: i + 1] + (w,) + vs[j:], "detour-1")
            if best and best[0] == hi:
                return best
    if best and best[0] == hi:
        return best

    # two adjacent off-path vertices: count L - d + 2
    dlo2, dhi2 = max(L - hi + 2, 3), L - lo + 2
    if dlo2 <= dhi2:
        full = (1 << g.n) - 1
        off = full & ~on
        cache = {}

        def spots(w):
            if w not in cache:
                cache[w] = sorted(pos[x] for x in _bits(g.mask(w) & on))
            return cache[w]

        for w1 in _bits(off):
            a = spots(w1)
            if not a:
                continue
            for w2 in _bits(g.mask(w1) & off):
                b = spots(w2)
                for i in a:
                    k = bisect_left(b, i + dlo2 + 1)
                    if k < len(b) and b[k] - i - 1 <= dhi2:
                        j = b[k]
                        offer(
                            L - (j - i - 1) + 2,
                            lambda i=i, j=j, w1=w1, w2=w2: vs[: i + 1] + (w1, w2) + vs[j:],
                            "detour-2",
                        )
                if best and best[0] == hi:
                    return best

    if crossing and not (best and best[0] == hi):
        # chords a1-b1 and a2-b2 with a1 < a2 <= b1 < b2
        removal_max = L - lo
        removal_min = L - hi
        for a1 in range(L):
            for x in _bits(g.mask(vs[a1]) & on):
                b1 = pos[x]
                if b1 <= a1 + 1:
                    continue
                for a2 in range(a1 + 1, min(b1, a1 + removal_max + 1) + 1):
                    g1 = a2 - a1 - 1
                    for b2 in range(b1 + 1, min(L, b1 + removal_max - g1 + 2)):
                        rem = g1 + (b2 - b1 - 1)
                        if rem < removal_min or not g.adjacent(vs[a2], vs[b2]):
                            continue
                        offer(
                            L - rem,
                            lambda a1=a1, a2=a2, b1=b1, b2=b2: vs[: a1 + 1] + vs[a2: b1 + 1][::-1] + vs[b2:],
                            "crossing",
                        )
                        if best[0] == hi:
                            return best
    return best


def _finish(best):
    count, build, route = best
    return build(), route


def chord_jump_search(g: Graph, p: PathWitness, window, mechanism="chord-jump-fallback") -> SurgeryResult:
    """Exhaustive search over one-chord and short-detour rewirings.

    ``window`` is ``(lo, hi)`` in vertex counts with ``hi < |P|``.  The
    rewiring keeping the most vertices wins.
    """
    lo, hi = window
    L = p.num_vertices
    if not lo <= hi < L:
        raise PreconditionError("lo <= hi < |P|", f"window={window}, |P|={L}")
    lo = max(lo, 2)
    best = _single_rewirings(g, p.vertices, lo, hi)
    if best is None:
        raise WindowEmpty(window)
    verts, route = _finish(best)
    return _result(p, verts, (lo, hi), mechanism, route)


def bounded_route(g: Graph, x: int, y: int, lo: int, hi: int, budget: int = 200_000, allowed=None):
    """DFS for an x-y path with vertex count in ``[lo, hi]``; None if not found.

    Prunes with BFS distances to ``y``.  Longer paths are preferred by
    trying neighbours far from ``y`` first.
    """
    n = g.n
    allow = ((1 << n) - 1) if allowed is None else _on_path_mask(allowed)
    dist = [math.inf] * n
    dist[y] = 0
    frontier = [y]
    while frontier:
        nxt = []
        for v in frontier:
            for w in _bits(g.mask(v) & allow):
                if dist[w] == math.inf:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
        frontier = nxt
    if dist[x] + 1 > hi:
        return None
    path = [x]
    used = 1 << x
    expansions = 0

    def dfs(v):
        nonlocal used, expansions
        expansions += 1
        if expansions > budget:
            return False
        if v == y:
            return lo <= len(path) <= hi
        room = hi - len(path)
        cands = [w for w in _bits(g.mask(v) & allow & ~used) if dist[w] <= room - 0]
        cands.sort(key=lambda w: (-dist[w], w))
        for w in cands:
            if w == y and len(path) + 1 < lo:
                continue
            path.append(w)
            used |= 1 << w
            if dfs(w):
                return True
            used &= ~(1 << w)
            path.pop()
        return False

    return tuple(path) if dfs(x) else None


def shorten_by_degree(g: Graph, p: PathWitness) -> SurgeryResult:
    """Shorten P, keeping its ends, by at most ceil(20n/delta) vertices.

    Requires ``|P| > 20n/delta``.  Searches single chords, detours through
    one or two outside vertices and crossing chord pairs; when the
    precondition holds one of these lands in the window.
    """
    L = p.num_vertices
    n, delta = g.n, min_degree(g)
    if delta == 0 or L <= Fraction(20 * n, delta):
        raise PreconditionError("|P| > 20n/delta", f"|P|={L}, n={n}, delta={delta}")
    lo, hi = max(L - math.ceil(Fraction(20 * n, delta)), 2), L - 1
    best = _single_rewirings(g, p.vertices, lo, hi, crossing=True)
    if best is None:
        raise WindowEmpty((lo, hi), "contradicts the degree shortening guarantee")
    verts, route = _finish(best)
    return _result(p, verts, (lo, hi), "degree-shorten", route)


def shorten_by_independence(g: Graph, p: PathWitness, alpha_upper: int, budget: int = 200_000) -> SurgeryResult:
    """Shorten P, keeping its ends, by at most ceil(20 alpha^2 / |P|) vertices.

    Requires ``|P| > 4 alpha``.  Rewiring families first, then a bounded
    DFS over x-y paths inside the window.
    """
    L = p.num_vertices
    if L <= 4 * alpha_upper:
        raise PreconditionError("|P| > 4 alpha", f"|P|={L}, alpha<={alpha_upper}")
    lo, hi = max(L - math.ceil(Fraction(20 * alpha_upper**2, L)), 2), L - 1
    best = _single_rewirings(g, p.vertices, lo, hi, crossing=True)
    if best is not None:
        verts, route = _finish(best)
        return _result(p, verts, (lo, hi), "independence-shorten", route)
    x, y = p.endpoints
    found = bounded_route(g, x, y, lo, hi, budget=budget)
    if found is None:
        raise WindowEmpty((lo, hi), "contradicts the independence shortening guarantee")
    return _result(p, found, (lo, hi), "independence-shorten", "deepening")


# -- augmentation -----------------------------------------------------------------


def augment_preconditions(num_vertices: int, r: int, kappa: int, alpha: int, n: int | None = None):
    """Name of the first violated inequality of the augmentation lemma, or None.

    Integer-exact: ``r > 80a/r * max(1, |P|/(k-a))`` is tested as
    ``r^2 (k-a) > 80 a max(k-a, |P|)``.
    """
    L = num_vertices
    if r < 1:
        return "r >= 1"
    if n is not None and not L < n:
        return "|P| < n"
    if not L * r > 80 * alpha:
        return "|P| > 80*alpha/r"
    if not alpha > r:
        return "alpha > r"
    if kappa - alpha <= 0:
        return "kappa > alpha + 2r"
    if not r * r * (kappa - alpha) > 80 * alpha * max(kappa - alpha, L):
        return "r > 80*alpha/r * max(1, |P|/(kappa-alpha))"
    if not kappa > alpha + 2 * r:
        return "kappa > alpha + 2r"
    return None


def _induced(g, q):
    """Shortcut a path to an induced one with the same ends."""
    out = [q[0]]
    i = 0
    while i < len(q) - 1:
        j = len(q) - 1
        while j > i + 1 and not g.adjacent(q[i], q[j]):
            j -= 1
        out.append(q[j])
        i = j
    return out


class _Splicer:
    """Splices of P through a fan from ``u``; all growth counts are in edges."""

    def __init__(self, g, vs, fan_paths, r):
        self.g, self.vs, self.q, self.r = g, vs, fan_paths, r
        self.L = len(vs)

    def ok(self, growth):
        return 1 <= growth <= self.r

    def through_u(self, a, b):
        qa, qb = self.q[a], self.q[b]
        growth = (len(qa) - 1) + (len(qb) - 1) - (b - a)
        if self.ok(growth):
            return self.vs[: a + 1] + tuple(qa[1:]) + tuple(qb[-2:0:-1]) + self.vs[b:]
        return None

    def cross(self, a, da, b, db):
        growth = da + db + 1 - (b - a)
        if self.ok(growth):
            qa, qb = self.q[a], self.q[b]
            return self.vs[: a + 1] + tuple(qa[1: da + 1]) + tuple(qb[db:0:-1]) + self.vs[b:]
        return None

    def successor_u(self, i):
        qi = self.q[i]
        if i + 1 < self.L and self.ok(len(qi) - 1) and self.g.adjacent(qi[-1], self.vs[i + 1]):
            return self.vs[: i + 1] + tuple(qi[1:]) + self.vs[i + 1:]
        return None

    def successors(self, i, j):
        if j + 1 >= self.L or not self.g.adjacent(self.vs[i + 1], self.vs[j + 1]):
            return None
        qi, qj = self.q[i], self.q[j]
        if self.ok((len(qi) - 1) + (len(qj) - 1) - 1):
            return self.vs[: i + 1] + tuple(qi[1:]) + tuple(qj[-2::-1]) + self.vs[i + 1: j][::-1] + self.vs[j + 1:]
        return None

    def middle_sets(self, ends):
        lo, hi = math.ceil(Fraction(self.r, 4)), self.r // 2
        sets = {}
        for i in ends:
            q = self.q[i]
            depths = [d for d in range(lo, hi) if d < len(q) - 1]
            sets[i] = depths[::2]
        return sets

    def iset_edge(self, ends):
        sets = self.middle_sets(ends)
        ends = sorted(e for e in ends if sets[e])
        for x, a in enumerate(ends):
            for b in ends[x + 1:]:
                for da in sets[a]:
                    wa = self.q[a][da]
                    for db in sets[b]:
                        if self.g.adjacent(wa, self.q[b][db]):
                            new = self.cross(a, da, b, db)
                            if new is not None:
                                return new
        return None

    def exhaustive(self):
        ends = sorted(self.q)
        for x, a in enumerate(ends):
            for b in ends[x + 1:]:
                new = self.through_u(a, b)
                if new is not None:
                    return new, "through-u"
        for i in ends:
            new = self.successor_u(i)
            if new is not None:
                return new, "successor"
        for x, i in enumerate(ends):
            for j in ends[x + 1:]:
                new = self.successors(i, j)
                if new is not None:
                    return new, "successor"
        owner = {}
        for a in ends:
            for d, w in enumerate(self.q[a][1:-1], start=1):
                owner[w] = (a, d)
        for w, (a, da) in owner.items():
            for x in _bits(self.g.mask(w)):
                if x in owner:
                    b, db = owner[x]
                    if b > a:
                        new = self.cross(a, da, b, db)
                        if new is not None:
                            return new, "cross"
        return None, ""


def augment_path(g: Graph, p: PathWitness, r: int, kappa: int, alpha_exact: int) -> SurgeryResult:
    """Lengthen P, keeping its ends, by between 1 and ``r`` edges.

    ``kappa`` may be any certified lower bound on the connectivity.  A
    vertex ``u`` off P sends ``min(kappa, |P|)`` disjoint paths to P.  If
    they reach every vertex of P, two consecutive short fan paths give a
    cheap splice; otherwise independent sets from the middle of long
    induced fan paths span an edge that closes a splice.  If the fan
    misses part of P, more than alpha short paths yield an edge among the
    successors of their ends plus ``u``; otherwise a window of P dense in
    long-path ends is used with the same independent-set argument.
    """
    vs = p.vertices
    L = len(vs)
    bad = augment_preconditions(L, r, kappa, alpha_exact, n=g.n)
    if bad:
        raise PreconditionError(bad, f"|P|={L}, r={r}, kappa={kappa}, alpha={alpha_exact}")
    on = set(vs)
    u = next(w for w in range(g.n) if w not in on)
    fan = menger_fan(g, u, vs, k=min(kappa, L))
    pos = _positions(vs)
    fan_paths = {}
    for path in fan.paths:
        q = _induced(g, list(path.vertices[::-1]))
        fan_paths[pos[q[0]]] = q
    sp = _Splicer(g, vs, fan_paths, r)
    window = (L + 1, L + r)
    length = {i: len(q) - 1 for i, q in fan_paths.items()}

    if len(fan_paths) == L:
        for i in range(L - 1):
            if length[i] + length[i + 1] - 1 <= r:
                new = sp.through_u(i, i + 1)
                if new is not None:
                    return _result(p, new, window, "augment", "consecutive")
        limit = min(L, math.ceil(Fraction(20 * alpha_exact, r)))
        longs = [i for i in range(limit) if 2 * length[i] >= r]
        new = sp.iset_edge(longs)
        if new is not None:
            return _result(p, new, window, "augment", "independent-sets")
    else:
        short = [i for i in sorted(fan_paths) if 2 * length[i] < r and i < L - 1]
        if len(short) >= alpha_exact + 1:
            for i in short:
                new = sp.successor_u(i)
                if new is not None:
                    return _result(p, new, window, "augment", "successor")
            for x, i in enumerate(short):
                for j in short[x + 1:]:
                    new = sp.successors(i, j)
                    if new is not None:
                        return _result(p, new, window, "augment", "successor")
        longs = sorted(i for i in fan_paths if 2 * length[i] >= r)
        if longs and kappa > alpha_exact:
            t = max(1, math.ceil(Fraction(20 * alpha_exact * L, r * (kappa - alpha_exact))))
            best_lo, best_cnt = 0, -1
            k = 0
            for j, start in enumerate(longs):
                while longs[k] < start:
                    k += 1
                cnt = bisect_left(longs, start + t) - j
                if cnt > best_cnt:
                    best_lo, best_cnt = start, cnt
            chosen = [i for i in longs if best_lo <= i < best_lo + t]
            new = sp.iset_edge(chosen)
            if new is not None:
                return _result(p, new, window, "augment", "interval")
    new, route = sp.exhaustive()
    if new is not None:
        return _result(p, new, window, "augment", route)
    raise NoSpliceFound(f"no splice of growth 1..{r} through the fan from {u}")
