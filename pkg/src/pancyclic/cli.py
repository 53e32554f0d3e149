"""Command-line front end.

Exit codes: 0 success (or pancyclic), 1 verified negative, 2 precondition
rejected, 3 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .decorated import hamilton_with_triangles
from .errors import NotFound, ParseError, PancyclicError, PreconditionError, SizeCapError
from .generators import ModelSpec, generate
from .graph import Graph, PathWitness, greedy_path, parse_edge_list, serialize
from .invariants import independence_number, profile, vertex_connectivity
from .pipeline import as_fraction, certify_pancyclic
from .spectrum import cycle_spectrum_bruteforce, find_even_cycle, triangle_partition
from .surgery import augment_path, shorten_by_degree, shorten_by_independence

OK, NEGATIVE, REJECTED, INPUT_ERROR = 0, 1, 2, 3
RANDOMIZED = {"certify", "partition", "bench"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--seed", type=int)

    p = _Parser(prog="pancyclic", description="Certificate-producing cycle algorithms.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_, graph=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if graph:
            sp.add_argument("input", help="edge-list file, or - for stdin")
        return sp

    pr = cmd("profile", "min degree, alpha and kappa")
    pr.add_argument("--budget", type=int, default=2_000_000)
    cmd("spectrum", "exact cycle spectrum (n <= 16)")
    ce = cmd("certify", "certify pancyclicity")
    ce.add_argument("--epsilon", required=True)
    ce.add_argument("--trials", type=int, default=8)
    cmd("hamilton-triangles", "Hamilton cycle with floor((kappa-alpha)/2) triangles")
    sh = cmd("shorten", "shorten a path inside the lemma window")
    sh.add_argument("--mode", choices=("degree", "independence"), default="degree")
    sh.add_argument("--path", help="comma-separated vertices; default: greedy path from --start")
    sh.add_argument("--start", type=int, default=0)
    au = cmd("augment", "lengthen a path by 1..r edges")
    au.add_argument("--r", type=int, required=True)
    au.add_argument("--path")
    au.add_argument("--start", type=int, default=0)
    au.add_argument("--length", type=int, help="vertex count of the default greedy path")
    au.add_argument("--kappa", type=int, help="certified connectivity lower bound (default: exact)")
    au.add_argument("--alpha", type=int, help="independence number (default: exact)")
    pa = cmd("partition", "random vertex set with apex triangles")
    pa.add_argument("--trials", type=int, default=1)
    ev = cmd("even-cycle", "cycle of length 2l")
    ev.add_argument("--l", type=int, required=True)
    ge = cmd("gen", "generate a graph", graph=False)
    ge.add_argument("model", help="e.g. gnp(20,0.5), complete(5), gnp_conditioned(12,0.7)")
    be = cmd("bench", "certify many files", graph=False)
    be.add_argument("inputs", nargs="+")
    be.add_argument("--epsilon", help="default: (kappa - alpha)/alpha per graph")
    be.add_argument("--timing", action="store_true", help="include wall-clock times")
    return p


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_edge_list(text)


def _parse_path(g: Graph, text: str | None, start: int, length: int | None = None) -> PathWitness:
    if text is None:
        return greedy_path(g, start, max_vertices=length)
    try:
        verts = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"bad --path {text!r}") from None
    w = PathWitness(verts, g)
    check = w.verify()
    if not check:
        raise UsageError(f"--path is not a path: {check.reason}")
    return w


def _text(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict,)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    return f"{pad}{_scalar(obj)}"


def _scalar(v):
    if isinstance(v, list):
        return " ".join(str(x) for x in v) if v else "-"
    if isinstance(v, dict):
        return "-"
    return str(v)


def _emit(args, payload, raw_text=None):
    if args.format == "json":
        out = json.dumps(payload, indent=2) + "\n"
    else:
        out = raw_text if raw_text is not None else _text(payload) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _exact_alpha(g):
    res = independence_number(g)
    if not res.exact:
        raise PreconditionError("alpha computed exactly", f"only bounded in [{res.lo}, {res.hi}]")
    return res.value


def _run(args) -> int:
    c = args.command
    if c in RANDOMIZED and args.seed is None:
        raise UsageError(f"{c} is randomized and needs --seed")
    if c == "gen":
        spec = ModelSpec.parse(args.model)
        if spec.randomized and args.seed is None:
            raise UsageError(f"{spec.kind} is randomized and needs --seed")
        g = generate(spec, args.seed or 0)
        _emit(args, {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges()]}, serialize(g))
        return OK
    if c == "bench":
        return _bench(args)
    g = _read_graph(args.input)
    if c == "profile":
        _emit(args, profile(g, budget=args.budget).to_json())
        return OK
    if c == "spectrum":
        cert = cycle_spectrum_bruteforce(g)
        _emit(args, cert.to_json())
        return OK if cert.pancyclic else NEGATIVE
    if c == "certify":
        try:
            eps = as_fraction(args.epsilon)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad --epsilon {args.epsilon!r}") from None
        cert, plan = certify_pancyclic(g, eps, args.seed, trials=args.trials)
        payload = cert.to_json()
        payload["plan"] = plan.to_json()
        _emit(args, payload)
        return OK if cert.pancyclic else NEGATIVE
    if c == "hamilton-triangles":
        alpha = _exact_alpha(g)
        tc = hamilton_with_triangles(g, alpha)
        _emit(args, tc.to_json())
        return OK
    if c == "shorten":
        path = _parse_path(g, args.path, args.start)
        if args.mode == "degree":
            res = shorten_by_degree(g, path)
        else:
            res = shorten_by_independence(g, path, _exact_alpha(g))
        _emit(args, res.to_json())
        return OK
    if c == "augment":
        alpha = args.alpha if args.alpha is not None else _exact_alpha(g)
        kappa = args.kappa if args.kappa is not None else vertex_connectivity(g)
        path = _parse_path(g, args.path, args.start, args.length)
        res = augment_path(g, path, args.r, kappa, alpha)
        _emit(args, res.to_json())
        return OK
    if c == "partition":
        part = triangle_partition(g, args.seed, args.trials)
        _emit(args, part.to_json())
        return OK
    if c == "even-cycle":
        try:
            w = find_even_cycle(g, args.l)
        except NotFound as exc:
            _emit(args, {"found": False, "length": 2 * args.l, "reason": str(exc)})
            return NEGATIVE
        _emit(args, {"found": True, **w.to_json()})
        return OK
    raise UsageError(f"unknown command {c}")


def _bench(args) -> int:
    rows = []
    worst = OK
    for path in args.inputs:
        g = _read_graph(path)
        t0 = time.perf_counter()
        alpha = _exact_alpha(g)
        kappa = vertex_connectivity(g)
        eps = as_fraction(args.epsilon) if args.epsilon else (as_fraction(kappa - alpha) / alpha if alpha else 1)
        row = {"input": path, "n": g.n, "kappa": kappa, "alpha": alpha}
        try:
            cert, _ = certify_pancyclic(g, eps, args.seed, alpha=alpha, kappa=kappa)
            row.update(status="pancyclic" if cert.pancyclic else "missing", missing=list(cert.missing))
            if not cert.pancyclic:
                worst = max(worst, NEGATIVE)
        except PreconditionError as exc:
            row.update(status="rejected", reason=str(exc))
            worst = max(worst, REJECTED)
        if args.timing:
            row["seconds"] = round(time.perf_counter() - t0, 4)
        rows.append(row)
    text = "\n".join(
        f"{r['input']}: n={r['n']} kappa={r['kappa']} alpha={r['alpha']} {r['status']}"
        + (f" missing={r['missing']}" if r.get("missing") else "")
        + (f" {r['seconds']}s" if "seconds" in r else "")
        for r in rows
    )
    _emit(args, {"results": rows}, text + "\n")
    return worst


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return INPUT_ERROR
    except (ParseError, OSError, ValueError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return INPUT_ERROR
    except (PreconditionError, SizeCapError) as exc:
        sys.stderr.write(f"rejected: {exc}\n")
        return REJECTED
    except PancyclicError as exc:
        sys.stderr.write(f"failed: {exc}\n")
        return NEGATIVE


if __name__ == "__main__":
    raise SystemExit(main())
