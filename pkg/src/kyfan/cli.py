"""Command-line front end.

Exit codes: 0 success / bound holds, 1 usage or parse error, 2 certified
violation or failed re-certification, 3 precondition failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds, extremal, verify
from .graphs import Graph, GraphFormatError, SizeError, adjacency, graph6_decode, graph6_encode, read_graph6_file
from .linalg import DimensionError, Tolerance, read_csv, write_csv
from .report import certificate_fields, dumps, make_report
from .spectral import energy, graph_spectrum, ky_fan, spread

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_PRECONDITION = 0, 1, 2, 3

MATRIX_CHECKS = {"TNIK": bounds.check_tnik, "MO1": bounds.check_mo1,
                 "MO2": bounds.check_mo2, "MO3": bounds.check_mo3}
GRAPH_CHECKS = {"CAP": bounds.check_cap, "THOF": bounds.check_thof,
                "HOFFMAN": bounds.check_hoffman, "TTFREE": bounds.check_ttfree,
                "EMNA": bounds.check_emna, "KOMO": bounds.check_komo,
                "GHK_SPREAD": bounds.check_ghk_spread}
NEEDS_K = {"TNIK", "MO1", "MO2", "MO3", "TMOH", "MOHAR_LOWER"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerances must be positive")
    return v


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--graph6", metavar="STR")
    src.add_argument("--graph6-file", metavar="PATH")
    src.add_argument("--matrix", metavar="PATH", help="CSV matrix, no header")
    p.add_argument("--k", type=int)
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads for scans (default: $KYFAN_THREADS or 1)")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--format", choices=("human", "report"), default="human")
    p.add_argument("--tol-abs", type=_positive_float, default=1e-9)
    p.add_argument("--tol-rel", type=_positive_float, default=1e-9)
    p.add_argument("--tol-eq", type=_positive_float, default=1e-6)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="kyfan", description="Ky Fan norms of graphs and matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("norm", parents=[common], help="Ky Fan k-norm and spectrum")

    p = sub.add_parser("certify", parents=[common], help="check one inequality")
    p.add_argument("theorem", type=str.upper, choices=bounds.THEOREMS)
    p.add_argument("--eps", type=float, default=0.0)

    p = sub.add_parser("search", parents=[common], help="exhaustive xi_k(n) / tau_k(n)")
    p.add_argument("kind", type=str.lower, choices=("xi", "tau"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--argmax-file", metavar="PATH", help="write attaining graphs as graph6")
    p.add_argument("--allow-long", action="store_true", help="permit n = 8 (2^28 graphs)")

    p = sub.add_parser("verify", parents=[common], help="exhaustive verification suite")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--theorems", default="all")

    p = sub.add_parser("construct", parents=[common], help="emit an equality instance")
    p.add_argument("which", type=str.lower, choices=("blowup", "orthrows", "tnik"))
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--q", type=int)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s", type=int, default=1)
    return parser


def _inputs(args) -> list[tuple[str, object]]:
    """Parsed inputs as ``(label, Graph | ndarray)`` pairs."""
    if args.graph6 is not None:
        return [(args.graph6, graph6_decode(args.graph6))]
    if args.graph6_file is not None:
        return [(graph6_encode(g), g) for g in read_graph6_file(args.graph6_file)]
    if args.matrix is not None:
        return [(args.matrix, read_csv(args.matrix))]
    raise UsageError("an input is required: --graph6, --graph6-file or --matrix")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _fmt_list(xs) -> str:
    return ", ".join(_fmt(float(x)) for x in xs)


def cmd_norm(args, tol, emit) -> int:
    if args.k is None:
        raise UsageError("--k is required")
    for label, obj in _inputs(args):
        rep = ky_fan(obj, args.k, tol)
        fields = {"value": rep.value, "sigma": rep.spectrum.values}
        if isinstance(obj, Graph):
            mu = graph_spectrum(obj).mu
            fields.update(mu=mu, energy=energy(obj), spread=spread(obj))
        if args.format == "report":
            emit(dumps(make_report("norm", {"input": label, "k": args.k}, tol, **fields)))
            continue
        emit(f"input   {label}")
        emit(f"k       {args.k}")
        emit(f"value   {_fmt(rep.value)}")
        emit(f"sigma   {_fmt_list(rep.spectrum.values)}")
        if isinstance(obj, Graph):
            emit(f"mu      {_fmt_list(fields['mu'])}")
            emit(f"energy  {_fmt(fields['energy'])}")
            emit(f"spread  {_fmt(fields['spread'])}")
    return EXIT_OK


def _certify_one(theorem, obj, args, tol):
    if theorem in NEEDS_K and args.k is None:
        raise UsageError(f"{theorem} needs --k")
    if theorem in MATRIX_CHECKS:
        a = adjacency(obj) if isinstance(obj, Graph) else obj
        return MATRIX_CHECKS[theorem](a, args.k, tol)
    if not isinstance(obj, Graph):
        raise UsageError(f"{theorem} applies to graphs; use --graph6 or --graph6-file")
    if theorem == "TMOH":
        return bounds.check_tmoh(obj, args.k, tol)
    if theorem == "MOHAR_LOWER":
        return bounds.check_mohar_lower(obj, args.k, args.eps, tol)
    return GRAPH_CHECKS[theorem](obj, tol)


def cmd_certify(args, tol, emit) -> int:
    code = EXIT_OK
    for label, obj in _inputs(args):
        inputs = {"input": label, "k": args.k}
        try:
            cert = _certify_one(args.theorem, obj, args, tol)
        except bounds.PreconditionError as exc:
            code = max(code, EXIT_PRECONDITION)
            if args.format == "report":
                emit(dumps(make_report("certify", inputs, tol, theorem_id=args.theorem,
                                       precondition_failed=str(exc))))
            else:
                emit(f"{args.theorem} {label}: precondition failed: {exc}")
            continue
        if not cert.holds:
            code = max(code, EXIT_VIOLATION)
        if args.format == "report":
            emit(dumps(make_report("certify", inputs, tol, **certificate_fields(cert))))
            continue
        rel = {"upper": "<=", "lower": ">=", "attain": ">="}[cert.sense]
        verdict = "holds" if cert.holds else "VIOLATED"
        kind = "equality" if cert.is_equality else "strict"
        emit(f"{cert.theorem_id} {label}: {_fmt(cert.lhs)} {rel} {_fmt(cert.rhs)}  {verdict}, {kind}")
        for key in sorted(cert.witnesses):
            emit(f"  {key} = {cert.witnesses[key]}")
    return code


def cmd_search(args, tol, emit) -> int:
    if args.k is None:
        raise UsageError("--k is required")
    cap = 8 if args.allow_long else extremal.DEFAULT_SEARCH_CAP
    fn = extremal.search_xi if args.kind == "xi" else extremal.search_tau
    res = fn(args.n, args.k, threads=args.threads, cap=cap)
    if args.argmax_file:
        Path(args.argmax_file).write_text("".join(g + "\n" for g in res.argmax))
    if args.format == "report":
        emit(dumps(make_report("search", {"kind": res.kind, "n": res.n, "k": res.k}, tol,
                               value=res.value, argmax=list(res.argmax), scanned=res.scanned)))
    else:
        emit(f"{res.kind.lower()}_{res.k}({res.n}) = {_fmt(res.value)}")
        emit(f"scanned {res.scanned} labeled graphs, {len(res.argmax)} attainers")
        for g in res.argmax:
            emit(f"  {g}")
    return EXIT_OK


def cmd_verify(args, tol, emit) -> int:
    rep = verify.verify_suite(args.nmax, args.theorems, tol, threads=args.threads)
    if args.format == "report":
        for key, t in rep.tallies.items():
            emit(dumps(make_report("verify", {"nmax": args.nmax, "tally": key}, tol, **t.as_dict())))
        emit(dumps(make_report("verify", {"nmax": args.nmax, "theorems": list(rep.theorems)}, tol,
                               scanned=rep.scanned, violations=rep.violations, holds=rep.ok)))
    else:
        emit(f"{'theorem':<14}{'checked':>10}{'violations':>12}{'equalities':>12}"
             f"{'structural':>12}{'mismatch':>10}{'max_excess':>12}")
        for key, t in rep.tallies.items():
            emit(f"{key:<14}{t.checked:>10}{t.violations:>12}{t.equalities:>12}"
                 f"{t.structural:>12}{len(t.mismatches):>10}{t.max_violation:>12.3g}")
        emit(f"scanned {rep.scanned} graphs (n <= {args.nmax}); total violations {rep.violations}")
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_construct(args, tol, emit) -> int:
    if args.which == "blowup":
        k = 4 if args.k is None else args.k
        base = graph6_decode(args.graph6) if args.graph6 else None
        g = extremal.construct_blowup_extremal(k, args.t, base)
        certs = [bounds.check_tmoh(g, k, tol)]
        artifact, fmt = graph6_encode(g), "graph6"
    else:
        if args.k is None:
            raise UsageError("--k is required")
        if args.which == "orthrows":
            q = args.k if args.q is None else args.q
            a = extremal.construct_orthogonal_rows(args.k, q, args.c, args.r, args.s)
            certs = [bounds.check_mo1(a, args.k, tol), bounds.check_mo2(a, args.k, tol)]
        else:
            a = extremal.construct_tnik_equality(args.k, args.r, args.s)
            certs = [bounds.check_tnik(a, args.k, tol)]
        artifact, fmt = write_csv(a), "csv"
    ok = all(c.holds and c.is_equality for c in certs)
    if args.format == "report":
        emit(dumps(make_report(
            "construct", {"which": args.which, "k": args.k}, tol, artifact=artifact,
            artifact_format=fmt, holds=ok,
            certificates=[certificate_fields(c) for c in certs])))
    else:
        emit(artifact.rstrip("\n"))
        for c in certs:
            status = "equality" if c.is_equality else "NOT equality"
            print(f"# {c.theorem_id}: {_fmt(c.lhs)} vs {_fmt(c.rhs)} ({status})", file=sys.stderr)
    return EXIT_OK if ok else EXIT_VIOLATION


COMMANDS = {"norm": cmd_norm, "certify": cmd_certify, "search": cmd_search,
            "verify": cmd_verify, "construct": cmd_construct}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    tol = Tolerance(abs=args.tol_abs, rel=args.tol_rel, eq=args.tol_eq)
    lines: list[str] = []
    try:
        code = COMMANDS[args.command](args, tol, lines.append)
    except UsageError as exc:
        print(f"kyfan: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphFormatError, DimensionError, OSError) as exc:
        print(f"kyfan: cannot read input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except bounds.PreconditionError as exc:
        print(f"kyfan: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (SizeError, ValueError) as exc:
        print(f"kyfan: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    text = "".join(line + "\n" for line in lines)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
