"""Command-line front end.  Every verb is a thin adapter over the library.

Exit status: 0 on success, 1 on domain errors (a JSON object on stderr),
2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import List, Optional

from . import chipfire, cyclic, enumeration, firstreturn, labeled, paths, stats
from .exactnum import GroupMode, format_scalar, is_integral, parse_scalar, scalar
from .paths import Params


class DomainError(Exception):
    pass


def scalar_arg(text: str):
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def vector_arg(text: str) -> list:
    """Accept ``[1/2,2]``, ``["1/2","2"]`` or ``1/2,2``."""
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        return []
    try:
        return [parse_scalar(tok.strip().strip("\"'")) for tok in body.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def vertex_set_arg(text: str) -> List[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").strip("{}[]").split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex set {text!r}")


def _range_spec(text: str) -> range:
    lo, sep, hi = text.partition("..")
    return range(int(lo), int(hi if sep else lo) + 1)


def grid_arg(text: str) -> dict:
    """``n=1..6,m=0..3,c=1..3`` -> ranges keyed by name."""
    out = {}
    for part in re.split(r",(?=[nmc]=)", text.replace(" ", "")):
        key, _, val = part.partition("=")
        if key not in ("n", "m", "c") or not val:
            raise argparse.ArgumentTypeError(f"bad grid component {part!r}")
        try:
            out[key] = _range_spec(val)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad range {val!r}")
    missing = {"n", "m", "c"} - set(out)
    if missing:
        raise argparse.ArgumentTypeError(f"grid missing {sorted(missing)}")
    return out


def _strs(values) -> List[str]:
    return [format_scalar(v) for v in values]


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _load_input(args) -> dict:
    if not getattr(args, "input", None):
        return {}
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"input is not JSON: {exc}")
    return doc


def _params(args, doc: dict, extra=()) -> Params:
    n = args.n if args.n is not None else doc.get("n")
    m = args.m if args.m is not None else doc.get("m")
    c = args.c if args.c is not None else doc.get("c")
    if n is None or m is None or c is None:
        raise DomainError("parameters n, m and c are required")
    m, c = scalar(str(m)), scalar(str(c))
    mode = args.mode if args.mode != "auto" else doc.get("mode", "auto")
    if mode == "auto":
        values = [m, c, *extra]
        mode = "Z" if all(is_integral(v) for v in values) else "Q"
    return Params(int(n), m, c, GroupMode.parse(mode))


def _vector(args, doc: dict, key: str):
    value = getattr(args, key, None)
    if value is None and key in doc:
        value = [scalar(str(v)) for v in doc[key]]
    return value


def _need(value, flag: str):
    if value is None:
        raise DomainError(f"missing {flag}")
    return value


def _check_k(params: Params, *ks) -> None:
    for k in ks:
        params.check_k(k)


# verbs ---------------------------------------------------------------------

def cmd_enumerate(args, out):
    params = _params(args, _load_input(args))
    _check_k(params, args.k)
    if args.family == "skv":
        items = enumeration.enumerate_skv(args.k, params)
        if args.format == "ascii":
            for g in items:
                out.write(paths.render_ascii(paths.path_of_area_vector(g, params), params) + "\n\n")
            return
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            for g in items:
                writer.writerow(_strs(g))
            return
        _emit({"family": "skv", "k": args.k, "count": len(items), "items": [{"g": _strs(g)} for g in items]}, out)
    else:
        items = enumeration.enumerate_skf(args.k, params)
        if args.format == "csv":
            writer = csv.writer(out, lineterminator="\n")
            for f in items:
                writer.writerow(_strs(f))
            return
        _emit({"family": "skf", "k": args.k, "count": len(items), "items": [{"f": _strs(f)} for f in items]}, out)


def cmd_count(args, out):
    if args.grid:
        g = args.grid
        reports = enumeration.verify_grid(g["n"], g["m"], g["c"], args.family, strict=False)
    else:
        reports = [enumeration.count_report(_params(args, _load_input(args)), args.family)]
    if args.format == "csv" or args.grid and args.format != "json":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "m", "c", "k", "count", "formula", "match"])
        for rep in reports:
            for row in rep.rows():
                writer.writerow([str(v).lower() if isinstance(v, bool) else v for v in row])
    else:
        payload = [
            {"n": r.params.n, "m": format_scalar(r.params.m), "c": format_scalar(r.params.c),
             "family": r.family, "counts": r.counts, "formula": r.formula, "match": r.match}
            for r in reports
        ]
        _emit(payload[0] if len(payload) == 1 else payload, out)
    if not all(r.match for r in reports):
        raise DomainError("count mismatch")


def cmd_canonicalize(args, out):
    doc = _load_input(args)
    g = _need(_vector(args, doc, "g"), "--g")
    params = _params(args, doc, g)
    if args.walk:
        walk = cyclic.enumerate_class(g, params)
        _emit({"class": [{"g": _strs(v), "offset": j, "pos": paths.pos(v)} for v, j in walk]}, out)
        return
    k = params.n - 1 if args.k is None else args.k
    h, j = cyclic.k_skeletal_representative(g, k, params)
    _emit({"g": _strs(h), "offset": j}, out)


def cmd_map_k(args, out):
    doc = _load_input(args)
    g = _need(_vector(args, doc, "g"), "--g")
    params = _params(args, doc, g)
    h, j = cyclic.map_k_to_kprime_with_offset(g, args.src, args.dst, params)
    payload = {"g": _strs(h)}
    if args.offset:
        payload["offset"] = j
    _emit(payload, out)


def cmd_map_fn_k(args, out):
    doc = _load_input(args)
    f = _need(_vector(args, doc, "f"), "--f")
    params = _params(args, doc, f)
    _emit({"f": _strs(labeled.map_fn_k_to_kprime(f, args.src, args.dst, params))}, out)


def cmd_chip(args, out):
    doc = _load_input(args)
    D = _need(_vector(args, doc, "D"), "--D")
    params = _params(args, doc, D)
    if args.action in ("fire", "borrow"):
        S = _need(args.set, "--set")
        if args.action == "fire":
            result, legal = chipfire.fire(D, S, params), chipfire.can_fire(D, S, params)
        else:
            result, legal = chipfire.borrow(D, S, params), chipfire.can_borrow(D, S, params)
        _emit({"D": _strs(result), "legal": legal}, out)
    elif args.action == "check":
        k = _need(args.k, "--k")
        fast = chipfire.is_k_skeletal_chip_fast(D, k, params)
        payload = {"k": k, "skeletal": fast}
        if params.n <= args.oracle_max_n:
            payload["oracle"] = chipfire.is_k_skeletal_chip(D, k, params)
        _emit(payload, out)
    else:
        g, w = chipfire.chip_to_labeled(D, params)
        _emit({"g": _strs(g), "w": list(w)}, out)


def cmd_first_return(args, out):
    word = args.path.strip().upper()
    if args.action == "phi":
        _emit({"path": firstreturn.phi(word, args.m_int, args.k)}, out)
    elif args.action == "psi":
        _emit({"path": firstreturn.psi(word, args.m_int, args.k)}, out)
    else:
        _emit({"pieces": list(firstreturn.decompose(word, args.m_int))}, out)


def cmd_poly(args, out):
    params = _params(args, _load_input(args))
    _check_k(params, args.k)
    if args.stat == "labeled-dinv":
        if params.m != 1 or params.c != 1:
            raise DomainError("labeled-dinv needs m = c = 1")
        family = [labeled.labeled_path_of_fn(f, params) for f in enumeration.enumerate_skf(args.k, params)]
        poly = stats.generating_poly(family, lambda lp: stats.labeled_dinv(lp.g, lp.w, params))
    else:
        kernel = stats.kernel_for(args.stat, params)
        source = enumeration.enumerate_skv(args.k, params)
        if args.family == "skf":
            source = [labeled.labeled_path_of_fn(f, params).g for f in enumeration.enumerate_skf(args.k, params)]
        poly = stats.generating_poly(source, lambda g: stats.stat(g, kernel))
    _emit(poly.to_json(), out)


def cmd_render(args, out):
    doc = _load_input(args)
    xs, g = _vector(args, doc, "x"), _vector(args, doc, "g")
    if xs is None and g is None:
        raise DomainError("missing --x or --g")
    params = _params(args, doc, xs if xs is not None else g)
    if xs is None:
        xs = paths.path_of_area_vector(g, params)
    out.write(paths.render_ascii(xs, params) + "\n")


def cmd_verify(args, out):
    from .acceptance import run_all

    results = run_all(quick=args.quick, log=lambda line: (out.write(line + "\n"), out.flush()))
    if not all(r.passed for r in results):
        raise DomainError("acceptance failures: " + ", ".join(r.name for r in results if not r.passed))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skeletal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def with_params(p, k=False):
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=scalar_arg)
        p.add_argument("--c", type=scalar_arg)
        p.add_argument("--mode", choices=["Z", "Q", "auto"], default="auto")
        p.add_argument("--input", help="JSON document with params/vectors, or - for stdin")
        if k:
            p.add_argument("--k", type=int, required=True)
        return p

    p = with_params(sub.add_parser("enumerate", help="list a skeletal family"), k=True)
    p.add_argument("--family", choices=["skv", "skf"], default="skv")
    p.add_argument("--format", choices=["json", "ascii", "csv"], default="json")
    p.add_argument("--json", dest="format", action="store_const", const="json")
    p.add_argument("--ascii", dest="format", action="store_const", const="ascii")
    p.set_defaults(func=cmd_enumerate)

    p = with_params(sub.add_parser("count", help="per-k counts against the closed forms"))
    p.add_argument("--family", choices=["skv", "skf"], default="skv")
    p.add_argument("--grid", type=grid_arg, help="e.g. n=1..6,m=0..3,c=1..3")
    p.add_argument("--format", choices=["json", "csv"], default=None)
    p.set_defaults(func=cmd_count)

    p = with_params(sub.add_parser("canonicalize", help="k-skeletal (default Dyck) representative"))
    p.add_argument("--g", type=vector_arg)
    p.add_argument("--k", type=int)
    p.add_argument("--walk", action="store_true", help="list the whole class")
    p.set_defaults(func=cmd_canonicalize)

    for name, func, key in (("map-k", cmd_map_k, "--g"), ("map-fn-k", cmd_map_fn_k, "--f")):
        p = with_params(sub.add_parser(name, help="skeletal bijection k -> k'"))
        p.add_argument(key, type=vector_arg)
        p.add_argument("--from", dest="src", type=int, required=True)
        p.add_argument("--to", dest="dst", type=int, required=True)
        if name == "map-k":
            p.add_argument("--offset", action="store_true", help="also report the C-power")
        p.set_defaults(func=func)

    p = with_params(sub.add_parser("chip", help="chip-firing moves and checks"))
    p.add_argument("action", choices=["fire", "borrow", "check", "labeled"])
    p.add_argument("--D", type=vector_arg)
    p.add_argument("--set", type=vertex_set_arg)
    p.add_argument("--k", type=int)
    p.add_argument("--oracle-max-n", type=int, default=12)
    p.set_defaults(func=cmd_chip)

    p = sub.add_parser("first-return", help="first-return bijection for c = 1")
    p.add_argument("action", choices=["phi", "psi", "decompose"])
    p.add_argument("--m", dest="m_int", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--path", required=True)
    p.set_defaults(func=cmd_first_return)

    p = with_params(sub.add_parser("poly", help="generating polynomial of a statistic"), k=True)
    p.add_argument("--family", choices=["skv", "skf"], default="skv")
    p.add_argument("--stat", default="indicator-dinv",
                   choices=sorted(stats.KERNEL_NAMES) + ["labeled-dinv"])
    p.set_defaults(func=cmd_poly)

    p = with_params(sub.add_parser("render", help="ASCII picture of an integer path"))
    p.add_argument("--x", type=vector_arg)
    p.add_argument("--g", type=vector_arg)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--quick", action="store_true", help="smaller grids")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except (DomainError, ValueError, TypeError, KeyError, AssertionError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, err)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
