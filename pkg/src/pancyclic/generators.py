"""Seeded graph generators.

Every generator is a pure function of its parameters and seed; the same
call always returns the same graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import GenerationFailure
from .graph import Graph

__all__ = [
    "ModelSpec",
    "generate",
    "complete",
    "complete_bipartite",
    "cycle",
    "path_graph",
    "star",
    "petersen",
    "gnp",
    "gnp_conditioned",
    "planted_cover",
    "augment_instance",
    "CONDITIONS",
]

CONDITIONS: dict[str, Callable[[int, int], bool]] = {
    "kappa>alpha": lambda k, a: k > a,
    "kappa>=alpha": lambda k, a: k >= a,
}


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a, b):
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def cycle(n):
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(k):
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def _gnp_matrix(n, p, rng):
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return upper | upper.T


def gnp(n, p, seed):
    rng = np.random.default_rng(seed)
    return Graph.from_matrix(_gnp_matrix(n, p, rng))


def gnp_conditioned(n, p, seed, predicate="kappa>alpha", max_trials=200):
    """Sample G(n, p) until ``predicate(kappa, alpha)`` holds (exact values).

    Raises :class:`GenerationFailure` with acceptance statistics when the
    trial budget runs out.
    """
    from .invariants import independence_number, vertex_connectivity

    pred = CONDITIONS[predicate] if isinstance(predicate, str) else predicate
    rng = np.random.default_rng(seed)
    rejected = 0
    for trial in range(1, max_trials + 1):
        g = Graph.from_matrix(_gnp_matrix(n, p, rng))
        if not g.is_connected():
            rejected += 1
            continue
        alpha = independence_number(g)
        if alpha.exact and pred(vertex_connectivity(g), alpha.hi):
            return g
        rejected += 1
    raise GenerationFailure(
        f"no G({n}, {p}) sample satisfied the condition", max_trials, {"rejected": rejected}
    )


def planted_cover(n, p, k, seed):
    """G(n, p) with independence number forced to exactly ``k``.

    The vertices are split at random into ``k`` blocks of equal size; each
    block becomes a clique (so alpha <= k) and one designated vertex per
    block loses its edges to the other designated vertices (so alpha >= k).
    :func:`planted_blocks` recovers the partition for the same arguments.
    """
    if n % k:
        raise ValueError("n must be divisible by k")
    rng = np.random.default_rng(seed)
    a = _gnp_matrix(n, p, rng)
    perm = rng.permutation(n)
    blocks = perm.reshape(k, n // k)
    for b in blocks:
        a[np.ix_(b, b)] = True
    heads = blocks[:, 0]
    a[np.ix_(heads, heads)] = False
    np.fill_diagonal(a, False)
    return Graph.from_matrix(a)


def augment_instance(seed, n=2000, p=0.9, k=100):
    """A planted graph, path and triangle count satisfying the augmentation preconditions.

    Returns ``(g, path, r, kappa_lb, alpha)`` where ``kappa_lb`` is a certified
    connectivity lower bound and ``alpha == k`` exactly.  ``r`` and the path
    length are spread over the admissible range by the seed.
    """
    from .graph import greedy_path
    from .invariants import connectivity_lower_bound

    g = planted_cover(n, p, k, seed)
    kappa = connectivity_lower_bound(g)
    r = k - 1 - seed % 10
    lo = 80 * k // r + 1
    hi = min(n - 1, (r * r * (kappa - k) - 1) // (80 * k))
    if hi < lo:
        raise GenerationFailure("no admissible path length", 1, {"kappa": kappa, "r": r})
    length = lo + (seed * 7919) % (hi - lo + 1)
    path = greedy_path(g, seed % n, max_vertices=length, rule="first")
    return g, path, r, kappa, k


def planted_blocks(n, k, seed):
    """The block partition used by :func:`planted_cover` for the same arguments.

    Each block lists its designated vertex first.
    """
    rng = np.random.default_rng(seed)
    rng.random((n, n))
    return [b.tolist() for b in rng.permutation(n).reshape(k, n // k)]


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    args: tuple = ()
    kwargs: dict = field(default_factory=dict, compare=False)

    @property
    def randomized(self) -> bool:
        return self.kind in _RANDOM

    @classmethod
    def parse(cls, text: str) -> "ModelSpec":
        """Parse ``kind(a, b, ...)``, e.g. ``gnp(20, 0.5)``."""
        m = re.fullmatch(r"\s*([a-z_]+)\s*(?:\((.*)\))?\s*", text)
        if not m:
            raise ValueError(f"bad model spec {text!r}")
        kind, inner = m.group(1), m.group(2)
        args = []
        for tok in (inner or "").split(","):
            tok = tok.strip()
            if not tok:
                continue
            if re.fullmatch(r"-?\d+", tok):
                args.append(int(tok))
            else:
                try:
                    args.append(float(tok))
                except ValueError:
                    args.append(tok.strip("'\""))
        return cls(kind, tuple(args))


_DETERMINISTIC = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "cycle": cycle,
    "path": path_graph,
    "star": star,
    "petersen": petersen,
}
_RANDOM = {
    "gnp": gnp,
    "gnp_conditioned": gnp_conditioned,
    "planted_cover": planted_cover,
}


def generate(model, seed=0) -> Graph:
    spec = ModelSpec.parse(model) if isinstance(model, str) else model
    if spec.kind in _DETERMINISTIC:
        return _DETERMINISTIC[spec.kind](*spec.args)
    if spec.kind == "gnp_conditioned":
        n, p, *rest = spec.args
        return gnp_conditioned(n, p, seed, *rest, **spec.kwargs)
    if spec.kind in _RANDOM:
        return _RANDOM[spec.kind](*spec.args, seed=seed)
    raise ValueError(f"unknown model {spec.kind!r}")
