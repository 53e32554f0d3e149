"""Certify pancyclicity with the three-range construction plus verified fallbacks.

Lengths are split into a lower range (short cycles, even cycles promoted
through triangle apexes), a middle range (augmented paths combined with a
decorated prefix) and an upper range (a Hamilton cycle with triangles
whose opposite path is shortened step by step).  At small ``n`` the
range constants usually exceed ``n``; whatever the literal mechanisms
miss is found by direct search, and every witness is verified.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .decorated import hamilton_with_triangles, realizable_prefix_lengths, short_triangulated_cycle
from .errors import NotFound, PancyclicError, PreconditionError, WindowEmpty
from .graph import CycleWitness, Graph, PathWitness
from .invariants import independence_number, min_degree, vertex_connectivity
from .spectrum import (
    DensityCertificate,
    SpectrumCertificate,
    combine_segments,
    cycle_spectrum_bruteforce,
    find_cycle_of_length,
    find_even_cycle,
    find_small_cycles,
    odd_from_even,
    ramsey_guarantee,
    triangle_partition,
    verify_density,
)
from .surgery import augment_path, augment_preconditions, chord_jump_search, shorten_by_degree, shorten_by_independence

__all__ = ["RangePlan", "range_plan", "certify_pancyclic", "as_fraction"]


def as_fraction(x) -> Fraction:
    """Exact value of ``x``; floats are read through their shortest repr."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def _floor(q: Fraction) -> int:
    return q.numerator // q.denominator


@dataclass(frozen=True)
class RangePlan:
    n: int
    kappa: int
    alpha: int
    epsilon: Fraction
    m_upper: Fraction
    upper_case: str  # "degree" or "independence": which term attains m
    r_upper: Fraction
    r_upper_used: int
    lower_cut: Fraction
    r_middle: int
    upper: tuple[int, int]
    middle: tuple[int, int]
    lower: tuple[int, int]
    upper_empty: bool
    middle_empty: bool
    rounding: str = "ceil on lower boundaries, floor on upper boundaries"
    branches: dict = field(default_factory=dict, compare=False)

    def range_of(self, length: int) -> str:
        if self.lower[0] <= length <= self.lower[1]:
            return "lower"
        if not self.middle_empty and self.middle[0] <= length <= self.middle[1]:
            return "middle"
        if not self.upper_empty and self.upper[0] <= length <= self.upper[1]:
            return "upper"
        return "gap"

    def to_json(self):
        def q(x):
            return {"exact": str(x), "approx": float(x)}

        return {
            "n": self.n,
            "kappa": self.kappa,
            "alpha": self.alpha,
            "epsilon": q(self.epsilon),
            "m_upper": q(self.m_upper),
            "upper_case": self.upper_case,
            "r_upper": q(self.r_upper),
            "r_upper_used": self.r_upper_used,
            "lower_cut": q(self.lower_cut),
            "r_middle": self.r_middle,
            "upper": list(self.upper),
            "middle": list(self.middle),
            "lower": list(self.lower),
            "upper_empty": self.upper_empty,
            "middle_empty": self.middle_empty,
            "rounding": self.rounding,
            "branches": self.branches,
        }


def range_plan(n: int, kappa: int, alpha: int, epsilon) -> RangePlan:
    """Range boundaries computed exactly from (n, kappa, alpha, epsilon)."""
    eps = as_fraction(epsilon)
    if min(n, kappa, alpha) <= 0 or eps <= 0:
        raise PreconditionError("n, kappa, alpha, epsilon > 0")
    deg_term = Fraction(10**5 * n) / (eps * eps * kappa)
    ind_term = 100 * alpha / eps
    # ties go to the degree lemma
    upper_case = "degree" if deg_term <= ind_term else "independence"
    m = min(deg_term, ind_term)
    r_upper = Fraction(100 * n, kappa) if upper_case == "degree" else eps * alpha / 2
    r_used = max(0, min(_floor(r_upper), (kappa - alpha) // 2))
    lower_cut = max(eps * alpha / 2000, Fraction(n, alpha))
    r_middle = max(1, _floor(eps**10 * alpha))
    upper = (max(3, _ceil(m)), n)
    middle = (_ceil(lower_cut), _floor(m))
    lower = (3, max(5, _floor(lower_cut)))
    return RangePlan(
        n=n,
        kappa=kappa,
        alpha=alpha,
        epsilon=eps,
        m_upper=m,
        upper_case=upper_case,
        r_upper=r_upper,
        r_upper_used=r_used,
        lower_cut=lower_cut,
        r_middle=r_middle,
        upper=upper,
        middle=middle,
        lower=lower,
        upper_empty=upper[0] > n,
        middle_empty=lower_cut >= m,
    )


# -- helpers ------------------------------------------------------------------------


class _Collector:
    """Covered lengths, with a preferred range per length."""

    def __init__(self, g: Graph, plan: RangePlan):
        self.g = g
        self.plan = plan
        self.covered: dict[int, tuple[CycleWitness, str]] = {}
        self.notes: dict[int, list[str]] = {}

    def offer(self, w: CycleWitness, tag: str, origin: str, force: bool = False):
        k = w.length
        if not 3 <= k <= self.g.n or k in self.covered:
            return
        if not force and self.plan.range_of(k) not in (origin, "gap"):
            return
        if w.host is not self.g:
            w = CycleWitness(w.vertices, self.g)
        if not w.verify():
            raise PancyclicError(f"internal: {tag} produced an invalid C{k}")
        self.covered[k] = (w, tag)

    def note(self, k: int, text: str):
        self.notes.setdefault(k, []).append(text)

    def missing(self, lo=3, hi=None):
        hi = self.g.n if hi is None else hi
        return [k for k in range(lo, hi + 1) if k not in self.covered]


def _lift(g: Graph, keep, verts) -> PathWitness:
    return PathWitness(tuple(keep[v] for v in verts), g)


def _shorten_sweep(g: Graph, path: PathWitness, plan: RangePlan, alpha: int, log: dict):
    """Shorten ``path`` repeatedly inside G[V(path)]; returns length -> path in g."""
    h, keep = g.induced(path.vertices)
    local = {v: i for i, v in enumerate(keep)}
    cur = PathWitness(tuple(local[v] for v in path.vertices), h)
    out = {path.length: path}
    delta = min_degree(h)
    counts = {"degree-shorten": 0, "independence-shorten": 0, "chord-jump-fallback": 0}
    while cur.num_vertices >= 3:
        L = cur.num_vertices
        try:
            if plan.upper_case == "degree" and delta and L * delta > 20 * h.n:
                res = shorten_by_degree(h, cur)
            elif plan.upper_case == "independence" and L > 4 * alpha:
                res = shorten_by_independence(h, cur, alpha)
            else:
                res = chord_jump_search(h, cur, (2, L - 1))
        except WindowEmpty:
            break
        counts[res.mechanism] += 1
        cur = res.new_path
        out[cur.length] = _lift(g, keep, cur.vertices)
    log.update(counts)
    return out


def _upper_range(g: Graph, plan: RangePlan, col: _Collector, alpha: int, kappa: int):
    log: dict = {"ran": True}
    tc = hamilton_with_triangles(g, alpha, kappa)
    r = plan.r_upper_used
    tc = tc.drop_triangles(r)
    order = tc.order
    log["r"] = r
    col.offer(tc.base, "hamilton-triangles", "upper", force=True)
    if r == 0:
        # the closing edge plays the decorated prefix
        x, y = order[-1], order[0]
        prefix = {1: PathWitness((x, y), g)}
        path = PathWitness(order, g)
    else:
        x, y = order[0], order[2 * r]
        prefix = realizable_prefix_lengths(tc)
        path = PathWitness(tc.opposite, g)
    sweep = _shorten_sweep(g, path, plan, alpha, log)
    p = max(1, _ceil(Fraction(r, 2)))
    lengths = sorted(sweep)
    dens = DensityCertificate(path.vertices[0], path.vertices[-1], p, (lengths[0], lengths[-1]), sweep)
    log["density"] = {"p": p, "interval": list(dens.interval), "holds": verify_density(g, dens)}
    cycles = combine_segments([((x, y), prefix), ((y, x), sweep)])
    base = set(path.vertices)
    for w in cycles.values():
        tag = "hamilton-triangles" if base <= set(w.vertices) else "prefix+surgery"
        col.offer(w, tag, "upper")
    return log, cycles


def _middle_range(g: Graph, plan: RangePlan, col: _Collector, alpha: int, kappa: int):
    r = plan.r_middle
    if 4 * r > kappa - alpha:
        return {"ran": False, "reason": f"needs 4r <= kappa - alpha with r={r}"}
    tc = short_triangulated_cycle(g, 2 * r, alpha, kappa).drop_triangles(r)
    x, y = tc.order[0], tc.order[2 * r]
    prefix = realizable_prefix_lengths(tc)
    start = PathWitness(tc.opposite, g)
    interior = set(tc.prefix[1:-1])
    h, keep = g.induced(v for v in range(g.n) if v not in interior)
    local = {v: i for i, v in enumerate(keep)}
    cur = PathWitness(tuple(local[v] for v in start.vertices), h)
    kappa_h = kappa - len(interior)
    paths = {start.length: start}
    steps = 0
    reason = None
    limit = 100 * alpha / plan.epsilon
    while cur.num_vertices <= limit:
        reason = augment_preconditions(cur.num_vertices, r, kappa_h, alpha, n=h.n)
        if reason:
            break
        res = augment_path(h, cur, r, kappa_h, alpha)
        steps += 1
        cur = res.new_path
        paths[cur.length] = _lift(g, keep, cur.vertices)
    for k, w in combine_segments([((y, x), paths), ((x, y), prefix)]).items():
        col.offer(w, "prefix+surgery", "middle")
    return {"ran": True, "r": r, "augment_steps": steps, "stopped": reason or "length limit"}


def _lower_range(g: Graph, plan: RangePlan, col: _Collector, alpha: int, kappa: int, seed: int, trials: int):
    lo, hi = plan.lower
    small = find_small_cycles(g)
    for w in small.by_length().values():
        col.offer(w, "small-cycle-search", "lower")
    log = {"ran": True, "absent_small": list(small.absent), "ramsey": {}}
    if hi < 6:
        return log
    part = triangle_partition(g, seed, trials, alpha=alpha, kappa=kappa)
    h = part.subgraph()
    log["partition"] = {"trial": part.trial, "edges": len(part.E)}
    for k in range(6, min(hi, g.n) + 1):
        log["ramsey"][k] = ramsey_guarantee(k, alpha + 1, g.n)
        if k in col.covered:
            continue
        try:
            if k % 2:
                even = find_even_cycle(h, (k - 1) // 2, budget=50_000)
                col.offer(odd_from_even(g, part, even), "even+apex", "lower")
            else:
                col.offer(find_even_cycle(g, k // 2, budget=50_000), "direct-search", "lower")
        except NotFound as exc:
            col.note(k, f"lower: {exc}")
    return log


def certify_pancyclic(
    g: Graph,
    epsilon,
    seed: int,
    alpha: int | None = None,
    kappa: int | None = None,
    trials: int = 8,
    search_budget: int = 200_000,
) -> tuple[SpectrumCertificate, RangePlan]:
    """Certificate for every cycle length 3..n that can be found.

    Requires ``kappa >= (1 + epsilon) alpha``.  When alpha is only bounded
    the upper bound is used.  Deterministic in (G, epsilon, seed).
    """
    eps = as_fraction(epsilon)
    if g.n < 3:
        raise PreconditionError("n >= 3", f"n={g.n}")
    if alpha is None:
        alpha = independence_number(g).hi
    if kappa is None:
        kappa = vertex_connectivity(g)
    if eps <= 0 or kappa < (1 + eps) * alpha:
        raise PreconditionError("kappa >= (1 + epsilon) alpha", f"kappa={kappa}, alpha={alpha}, epsilon={eps}")
    plan = range_plan(g.n, kappa, alpha, eps)
    col = _Collector(g, plan)
    branches: dict = {}
    branches["lower"] = _lower_range(g, plan, col, alpha, kappa, seed, trials)
    if plan.middle_empty:
        branches["middle"] = {"ran": False, "reason": "range empty"}
    else:
        branches["middle"] = _middle_range(g, plan, col, alpha, kappa)
    log, upper_cycles = _upper_range(g, plan, col, alpha, kappa)
    branches["upper"] = log
    # cross-range help: upper-range sums outside their own range
    for k, w in upper_cycles.items():
        if k not in col.covered:
            col.offer(w, "prefix+surgery", "upper", force=True)
    fallback = {"direct": [], "bruteforce": [], "absent": []}
    oracle = None
    for k in col.missing():
        col.note(k, f"{plan.range_of(k)} range: construction did not reach this length")
        try:
            col.offer(find_cycle_of_length(g, k, budget=search_budget), "direct-search", "fallback", force=True)
            fallback["direct"].append(k)
            continue
        except NotFound as exc:
            col.note(k, f"direct search: {exc}")
            if exc.exhaustive:
                fallback["absent"].append(k)
                continue
        if g.n <= 16:
            if oracle is None:
                oracle = cycle_spectrum_bruteforce(g)
            if k in oracle.covered:
                col.offer(oracle.covered[k][0], "bruteforce", "fallback", force=True)
                fallback["bruteforce"].append(k)
            else:
                fallback["absent"].append(k)
    branches["fallback"] = fallback
    notes = {k: "; ".join(v) for k, v in col.notes.items()}
    cert = SpectrumCertificate.build(g, col.covered, notes)
    return cert, replace(plan, branches=branches)
