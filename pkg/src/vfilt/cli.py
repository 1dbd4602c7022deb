"""``vfilt``: command-line access to the ideal engine and the verification harness."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Any

from .asymptotics import NoFitError, best_fit, quasi_linear_fit, series_report, v_series
from .decomp import MonomialPrime, associated_primes, minimal_primes
from .filtrations import BUILTIN_SPECS, FiltrationSpec, closure_power, svd_detect, symbolic_power, symbolic_saturator
from .graphs import (
    Graph,
    cover_ideal,
    edge_ideal,
    graph_from_string,
    is_bipartite,
    is_complete_multipartite,
    is_unmixed_edge_ideal,
    minimal_vertex_covers,
)
from .monomial import MonomialIdeal, alpha, colon_ideal, intersect_all, is_squarefree, saturation
from .serialize import ParseError, format_ideal, ideal_from_json, ideal_to_json, parse_ideal
from .verify import CASES, DEFAULT_CASES, ScaleLimitError, TheoremCase, scale_limits, verify_all
from .vnumber import VResult, local_v, v_number

FILTRATIONS = {
    "ordinary": "ordinary",
    "symbolic": "symbolic_minass",
    "symbolic-ass": "symbolic_ass",
    "closure": "closure",
}


class UsageError(ValueError):
    pass


# -- input ---------------------------------------------------------------------------


def _read_ideal(text: str, ctx=None) -> MonomialIdeal:
    """Parse ``text``; ``@path`` reads a file holding either JSON or the text form."""
    if text.startswith("@"):
        raw = Path(text[1:]).read_text()
        try:
            data = json.loads(raw)
        except json.JSONDecodeError:
            return parse_ideal(raw.strip(), ctx)
        return ideal_from_json(data)
    return parse_ideal(text, ctx)


def _ideals(args, count: int | None = None, at_least: int = 1) -> list[MonomialIdeal]:
    texts = args.ideal or []
    if count is not None and len(texts) != count:
        raise UsageError(f"{args.command} needs exactly {count} --ideal argument(s), got {len(texts)}")
    if len(texts) < at_least:
        raise UsageError(f"{args.command} needs at least {at_least} --ideal argument(s)")
    first = _read_ideal(texts[0])
    return [first] + [_read_ideal(t, first.ctx) for t in texts[1:]]


def _ideal_or_graph(args) -> MonomialIdeal:
    if args.graph and args.ideal:
        raise UsageError("give either --ideal or --graph, not both")
    if args.graph:
        return cover_ideal(_read_graph(args.graph))
    return _ideals(args, count=1)[0]


def _read_graph(text: str) -> Graph:
    if text.startswith("@"):
        return Graph.from_json(json.loads(Path(text[1:]).read_text()))
    return graph_from_string(text)


def _prime(I: MonomialIdeal, text: str) -> MonomialPrime:
    names = [t for t in text.replace("(", "").replace(")", "").replace(",", " ").split() if t]
    try:
        return MonomialPrime.from_names(I.ctx, names)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad --prime {text!r}: {exc}") from None


def _range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"--range expects A..B, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"--range {text}: need 1 <= A <= B")
    return lo, hi


def _spec(args) -> FiltrationSpec:
    if args.spec:
        if args.spec not in BUILTIN_SPECS:
            raise UsageError(f"unknown --spec {args.spec!r}; known: {sorted(BUILTIN_SPECS)}")
        hi = _range(args.range)[1] if args.range else 8
        return BUILTIN_SPECS[args.spec](max(hi, 12))
    base = _ideal_or_graph(args)
    return FiltrationSpec(FILTRATIONS[args.filtration], base=base)


def _check_vars(I: MonomialIdeal, args):
    limit = args.max_vars if args.max_vars is not None else scale_limits()[0]
    if I.ctx.dim > limit:
        raise ScaleLimitError(f"ring has {I.ctx.dim} variables; limit is {limit} (--max-vars or VFILT_MAX_VARS)")


# -- output --------------------------------------------------------------------------


def _emit(args, payload: dict[str, Any], lines: list[str]):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _vresult_lines(I: MonomialIdeal, r: VResult) -> list[str]:
    return [f"v = {r.value}", f"prime = {r.prime}", f"witness = {I.ctx.format(r.witness)}"]


def _ideal_payload(I: MonomialIdeal) -> dict[str, Any]:
    return {"ideal": ideal_to_json(I), "text": format_ideal(I)}


# -- commands ------------------------------------------------------------------------


def cmd_v(args) -> int:
    I = _ideal_or_graph(args)
    _check_vars(I, args)
    r = v_number(I)
    _emit(args, r.to_json(), _vresult_lines(I, r))
    return 0


def cmd_vlocal(args) -> int:
    I = _ideal_or_graph(args)
    _check_vars(I, args)
    if args.prime:
        ps = [_prime(I, args.prime)]
    else:
        ps = associated_primes(I)
    ass = associated_primes(I)
    results = [local_v(I, p, ass) for p in ps]
    lines = [f"{p}: v = {r.value}, witness = {I.ctx.format(r.witness)}" for p, r in zip(ps, results)]
    _emit(args, {"local": [r.to_json() for r in results]}, lines)
    return 0


def cmd_ass(args) -> int:
    I = _ideal_or_graph(args)
    ps = associated_primes(I) if args.command == "ass" else minimal_primes(I)
    _emit(args, {"primes": [p.names for p in ps]}, [str(p) for p in ps])
    return 0


def cmd_alpha(args) -> int:
    I = _ideal_or_graph(args)
    a = alpha(I)
    _emit(args, {"alpha": a}, [str(a)])
    return 0


def cmd_colon(args) -> int:
    I, J = _ideals(args, count=2)
    out = colon_ideal(I, J)
    _emit(args, _ideal_payload(out), [format_ideal(out)])
    return 0


def cmd_intersect(args) -> int:
    ideals = _ideals(args, at_least=1)
    out = intersect_all(ideals, ideals[0].ctx)
    _emit(args, _ideal_payload(out), [format_ideal(out)])
    return 0


def cmd_saturate(args) -> int:
    I, J = _ideals(args, count=2)
    out = saturation(I, J)
    _emit(args, _ideal_payload(out), [format_ideal(out)])
    return 0


def cmd_closure(args) -> int:
    I = _ideal_or_graph(args)
    _check_vars(I, args)
    out = closure_power(I, args.power)
    _emit(args, _ideal_payload(out), [format_ideal(out)])
    return 0


def cmd_symbolic(args) -> int:
    I = _ideal_or_graph(args)
    _check_vars(I, args)
    variant = "ass" if args.filtration == "symbolic-ass" else "minass"
    out = symbolic_power(I, args.power, variant)
    payload = _ideal_payload(out)
    payload["variant"] = variant
    if not is_squarefree(I) and args.power > 0:
        payload["saturator"] = format_ideal(symbolic_saturator(I, args.power, variant))
    _emit(args, payload, [format_ideal(out)])
    return 0


def cmd_series(args) -> int:
    spec = _spec(args)
    _check_vars(_probe(spec), args)
    lo, hi = _range(args.range) if args.range else _default_range(_probe(spec))
    prime = _prime(_probe(spec), args.prime) if args.prime else None
    series = v_series(spec, lo, hi, prime)
    fit = None
    fit_note = ""
    if args.fit or args.period:
        try:
            fit = quasi_linear_fit(series, args.period) if args.period else best_fit(series)
        except ValueError as exc:
            fit_note = str(exc)
        if fit is None and not fit_note:
            fit_note = "no exact quasi-linear fit on the sampled range"
    report = series_report(series, fit)
    if fit_note:
        report["fit_note"] = fit_note
    report["certified_range"] = [lo, hi]
    lines = ["n  v  witness"]
    for n, r in sorted(series.samples.items()):
        lines.append(f"{n}  {r.value}  {spec.ctx.format(r.witness)}")
    if fit is not None:
        for i, (s, b) in enumerate(fit.lines):
            sign = "-" if b < 0 else "+"
            lines.append(f"fit n = {i} mod {fit.period}: {s}*n {sign} {abs(b)} (n >= {fit.n0}, checked up to {hi})")
    elif fit_note:
        lines.append(f"fit: {fit_note}")
    _emit(args, report, lines)
    return 0


def _default_range(I: MonomialIdeal) -> tuple[int, int]:
    # symbolic powers grow fast with the number of variables
    return (1, 8) if I.ctx.dim <= 10 else (1, 5)


def _probe(spec: FiltrationSpec) -> MonomialIdeal:
    return spec.table[0] if spec.kind == "explicit" else spec.base


def cmd_svd(args) -> int:
    spec = _spec(args)
    _check_vars(_probe(spec), args)
    cert = svd_detect(spec, args.e_max, args.n_max)
    payload = {"svd": cert.svd, "e_max": cert.e_max, "n_max": cert.n_max}
    shown = "none" if cert.svd is None else str(cert.svd)
    _emit(args, payload, [f"svd = {shown} (checked e <= {cert.e_max}, n <= {cert.n_max})"])
    return 0


def _parse_params(items: list[str]) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for item in items:
        if "=" not in item:
            raise UsageError(f"--param expects name=value, got {item!r}")
        k, v = item.split("=", 1)
        try:
            out[k] = int(v)
        except ValueError:
            out[k] = v
    return out


def cmd_verify(args) -> int:
    if args.case:
        if args.case not in CASES:
            raise UsageError(f"unknown case {args.case!r}; known: {sorted(CASES)}")
        lo, hi = _range(args.range) if args.range else (1, 1)
        cases = [TheoremCase(args.case, _parse_params(args.param or []), lo, hi)]
    else:
        cases = list(DEFAULT_CASES)
    reports = verify_all(cases, args.max_vars, args.max_n, args.seed, args.jobs)
    lines = []
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        lines.append(f"{status} {rep.case.id} {rep.case.params} n={rep.case.n_min}..{rep.case.n_max} ({rep.seconds:.2f}s)")
        bad = rep.first_mismatch()
        if bad is not None:
            lines.append(f"  first mismatch: {bad.label} n={bad.n}: expected {bad.expected}, computed {bad.computed}")
        if args.verbose:
            for c in rep.checks:
                lines.append(f"  {'ok ' if c.ok else 'BAD'} {c.label} n={c.n}: {c.expected} / {c.computed}")
    ok = all(r.passed for r in reports)
    _emit(args, {"passed": ok, "reports": [r.to_json() for r in reports]}, lines)
    return 0 if ok else 1


def cmd_graph(args) -> int:
    if not args.graph:
        raise UsageError("graph needs --graph")
    G = _read_graph(args.graph)
    bip, _ = is_bipartite(G)
    J, I = cover_ideal(G), edge_ideal(G)
    payload = {
        "graph": G.to_json(),
        "bipartite": bip,
        "unmixed": is_unmixed_edge_ideal(G),
        "complete_multipartite": is_complete_multipartite(G),
        "minimal_vertex_covers": [sorted(c) for c in minimal_vertex_covers(G)],
        "cover_ideal": ideal_to_json(J),
        "edge_ideal": ideal_to_json(I),
    }
    lines = [
        f"vertices: {' '.join(G.vertices)}",
        f"edges: {' '.join(a + '-' + b for a, b in G.edges)}",
        f"bipartite: {bip}",
        f"unmixed: {payload['unmixed']}",
        f"complete multipartite: {payload['complete_multipartite']}",
        f"cover ideal: {format_ideal(J)}",
        f"edge ideal: {format_ideal(I)}",
    ]
    _emit(args, payload, lines)
    return 0


COMMANDS = {
    "v": cmd_v,
    "vlocal": cmd_vlocal,
    "ass": cmd_ass,
    "min": cmd_ass,
    "alpha": cmd_alpha,
    "colon": cmd_colon,
    "intersect": cmd_intersect,
    "saturate": cmd_saturate,
    "closure": cmd_closure,
    "symbolic": cmd_symbolic,
    "series": cmd_series,
    "svd": cmd_svd,
    "verify": cmd_verify,
    "graph": cmd_graph,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ideal", action="append", help="ideal text such as '(x^2, x*y) in [x,y]', or @file")
    common.add_argument("--graph", help="family such as 'C(5)', 'Kb(2,3)', 'fakhari(K(3),2)', or @graph.json")
    common.add_argument("--filtration", choices=sorted(FILTRATIONS), default="symbolic")
    common.add_argument("--spec", help=f"built-in filtration: {', '.join(sorted(BUILTIN_SPECS))}")
    common.add_argument("--prime", help="associated prime as variable names, e.g. 'x,y'")
    common.add_argument("--range", help="index range A..B")
    common.add_argument("--power", type=int, default=1)
    common.add_argument("--period", type=int)
    common.add_argument("--fit", action="store_true")
    common.add_argument("--json", action="store_true")
    common.add_argument("--max-vars", type=int, default=None)
    common.add_argument("--max-n", type=int, default=None)
    common.add_argument("--seed", type=int, default=None)

    parser = argparse.ArgumentParser(prog="vfilt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "svd":
            p.add_argument("--e-max", type=int, default=4)
            p.add_argument("--n-max", type=int, default=4)
        if name == "verify":
            p.add_argument("case", nargs="?", help=f"one of {', '.join(sorted(CASES))}; all defaults if omitted")
            p.add_argument("--param", action="append", help="case parameter name=value")
            p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
            p.add_argument("--verbose", "-v", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"vfilt {args.command}: parse error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"vfilt {args.command}: {exc}", file=sys.stderr)
        return 2
    except ScaleLimitError as exc:
        print(f"vfilt {args.command}: refused: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, IndexError, NoFitError, NotImplementedError) as exc:
        print(f"vfilt {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
