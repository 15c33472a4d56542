"""Command-line entry point: ``hypercostas <command> ...``.

Exit codes: 0 success, 1 a verification came out negative, 2 usage or
input error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import gf, io
from .applicability import check_applicability, report_dict, scan_solutions
from .construct2d import lifted_hypercube, toeplitz_hypercube
from .dotset import classify, verify_costas
from .errors import CapExceededError, ConfigurationError, FormatError
from .reshape import RadixScheme, embed_incomplete, reshape_even, reshape_odd
from .search import SearchConfig, SieveSpec, default_workers, greedy_pack
from .welch import welch_cube, welch_perm, welch_rect


class UsageError(Exception):
    pass


def _range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            return range(int(lo), int(lo) + 1)
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range 'a..b', got {text!r}") from None


def _shape(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a shape such as 5x5x5, got {text!r}") from None


def _coeffs(text: str) -> tuple[int, ...]:
    try:
        return gf.parse_poly(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_dotset(args, d, prov: dict) -> None:
    _emit(args, io.format_dotset(d, one_based=args.one_based, provenance=prov))


def _output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("-o", "--output", help="write here instead of standard output")
    p.add_argument("--one-based", action="store_true", help="print coordinates starting at 1")


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------

def cmd_verify(args) -> int:
    d = io.read_dotset(args.file)
    rep = verify_costas(d)
    _emit(args, io.to_json(rep.to_dict()) + "\n")
    return 0 if rep.is_costas else 1


def cmd_classify(args) -> int:
    d = io.read_dotset(args.file)
    out = {"is_costas": verify_costas(d).is_costas, **classify(d).to_dict()}
    _emit(args, io.to_json(out) + "\n")
    return 0


def cmd_reshape_even(args) -> int:
    perm = io.read_permutation(args.perm)
    scheme = RadixScheme.parse(args.radices)
    d = reshape_even(perm, scheme, check=not args.unsafe)
    _emit_dotset(args, d, io.provenance("reshape_even", perm=str(args.perm), radices=str(scheme)))
    return 0


def cmd_reshape_odd(args) -> int:
    perm = io.read_permutation(args.perm)
    src = embed_incomplete(perm, args.embed) if args.embed else perm
    rep = reshape_odd(src, args.n, args.m, check=not args.unsafe)
    prov = io.provenance("reshape_odd", perm=str(args.perm), n=args.n, m=args.m, embed=args.embed)
    prov["pre_repair_fraction"] = rep.pre_repair_fraction
    prov["removed"] = [list(x) for x in rep.removed]
    _emit_dotset(args, rep.result, prov)
    return 0


def cmd_lift(args) -> int:
    g1 = io.read_permutation(args.perm)
    rest = [io.read_permutation(f) for f in args.rest]
    d = lifted_hypercube(g1, rest)
    _emit_dotset(args, d, io.provenance("lift", perm=str(args.perm), rest=[str(f) for f in args.rest]))
    return 0


def cmd_toeplitz(args) -> int:
    d = toeplitz_hypercube(args.n, args.m)
    _emit_dotset(args, d, io.provenance("toeplitz", n=args.n, m=args.m))
    return 0


def _welch_inputs(args):
    ctx = gf.FieldCtx.make(args.p, args.m, args.modulus)
    g = args.g if args.g is not None else gf.find_primitive_root(ctx)
    basis = None
    if args.basis and args.normal:
        raise UsageError("--basis and --normal are mutually exclusive")
    if args.basis:
        basis = gf.BasisMatrix(ctx.p, io.parse_matrix(Path(args.basis).read_text(), args.basis))
    elif args.normal is not None:
        basis = gf.find_normal_basis(ctx, args.normal)[1]
    prov = dict(p=ctx.p, m=ctx.m, modulus=list(ctx.modulus), g=list(ctx.elem(g)), c=args.c,
                basis=[list(r) for r in basis.entries] if basis else None)
    return ctx, g, basis, prov


def cmd_welch(args) -> int:
    ctx, g, basis, prov = _welch_inputs(args)
    if args.cube:
        d = welch_cube(ctx, g, args.c, basis, corner=args.corner)
    else:
        d = welch_rect(ctx, g, args.c, basis, corner=args.corner)
    _emit_dotset(args, d, io.provenance("welch_cube" if args.cube else "welch_rect",
                                        corner=args.corner, **prov))
    return 0


def cmd_welch_perm(args) -> int:
    ctx, g, basis, prov = _welch_inputs(args)
    perm, rep = welch_perm(ctx, g, args.c, basis, digit_order=args.digit_order)
    prov = io.provenance("welch_perm", digit_order=args.digit_order, **prov)
    prov["is_costas"] = rep.is_costas
    _emit_dotset(args, perm.as_dotset(), prov)
    return 0


def cmd_search(args) -> int:
    sieve = SieveSpec.parse(args.sieve) if args.sieve else None
    cfg = SearchConfig(args.shape, args.restarts, args.seed, sieve)
    workers = args.workers if args.workers else default_workers()
    res = greedy_pack(cfg, workers=workers)
    prov = io.provenance("greedy_pack", shape=list(cfg.shape), restarts=cfg.restarts, seed=cfg.seed,
                         sieve=str(sieve) if sieve else None)
    stats = res.stats()
    stats.pop("elapsed")  # keep the artifact deterministic
    prov["stats"] = stats
    _emit_dotset(args, res.best, prov)
    if args.stats:
        Path(args.stats).write_text(io.to_json(res.stats()) + "\n")
    print(f"best={len(res.best)} restarts={res.restarts} elapsed={res.elapsed:.2f}s", file=sys.stderr)
    return 0


def cmd_applicability(args) -> int:
    if args.action == "scan":
        if args.form is None or args.n is None or args.m is None:
            raise UsageError("scan needs --form, --n and --m")
        wits = scan_solutions(args.form, args.n, args.m)
        if args.json:
            _emit(args, io.to_json([w.__dict__ for w in wits]) + "\n")
        else:
            lines = ["n\tm\tp\tk"] + [f"{w.n}\t{w.m}\t{w.p}\t{w.k}" for w in wits]
            _emit(args, "\n".join(lines) + "\n")
        return 0
    if args.n is None or args.m is None or len(args.n) != 1 or len(args.m) != 1:
        raise UsageError("check needs single values for --n and --m")
    n, m = args.n[0], args.m[0]
    if args.json:
        _emit(args, io.to_json(report_dict(n, m)) + "\n")
    else:
        lines = ["form\tvalue\tholds\tp\tk\tconstructions"]
        for r in check_applicability(n, m):
            lines.append(f"{r.form}\t{r.value}\t{'yes' if r.satisfied else 'no'}\t"
                         f"{r.p or '-'}\t{r.k or '-'}\t{','.join(r.constructions) or '-'}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_fixtures(args) -> int:
    from .tables import verify_all

    checks = verify_all(args.dir)
    width = max(len(c.name) for c in checks)
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name:<{width}}  {c.detail}" for c in checks]
    _emit(args, "\n".join(lines) + "\n")
    return 0 if all(c.passed for c in checks) else 1


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------

def _welch_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int, required=True, help="field characteristic")
    p.add_argument("--m", type=int, required=True, help="extension degree")
    p.add_argument("--modulus", type=_coeffs, help="monic modulus, most significant first, e.g. 1,0,2,1")
    p.add_argument("--g", type=_coeffs, help="primitive element as coefficients (default: first primitive)")
    p.add_argument("--c", type=int, default=0, help="exponent shift")
    p.add_argument("--basis", help="file with the m x m basis matrix B, one row per line")
    p.add_argument("--normal", type=_coeffs, help="use the normal basis generated by this element")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypercostas", description="Costas hypercube constructions and checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the Costas property of a dot set file")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="structural flags of a dot set file")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reshape-even", help="mixed-radix reshape of a Costas permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--radices", required=True, help="e.g. 5x5")
    p.add_argument("--unsafe", action="store_true", help="skip the input Costas check")
    _output_flags(p)
    p.set_defaults(func=cmd_reshape_even)

    p = sub.add_parser("reshape-odd", help="odd-dimensional reshape with repair")
    p.add_argument("--perm", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--embed", type=int, help="pad the input to this order first")
    p.add_argument("--unsafe", action="store_true", help="skip the input Costas check")
    _output_flags(p)
    p.set_defaults(func=cmd_reshape_odd)

    p = sub.add_parser("lift", help="strict hypercube from Costas permutation(s)")
    p.add_argument("--perm", required=True, help="Costas permutation g1")
    p.add_argument("--rest", nargs="*", default=[], help="further permutations of the same order")
    _output_flags(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("toeplitz", help="Costas-Toeplitz strict hypercube")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _output_flags(p)
    p.set_defaults(func=cmd_toeplitz)

    p = sub.add_parser("welch", help="Welch hyper-rectangle or hypercube over GF(p^m)")
    _welch_flags(p)
    p.add_argument("--cube", action="store_true", help="build the 2m-dimensional hypercube")
    p.add_argument("--corner", action="store_true", help="add the corner dot")
    _output_flags(p)
    p.set_defaults(func=cmd_welch)

    p = sub.add_parser("welch-perm", help="the permutation read off a Welch hyper-rectangle")
    _welch_flags(p)
    p.add_argument("--digit-order", choices=("msd", "lsd"), default="msd")
    _output_flags(p)
    p.set_defaults(func=cmd_welch_perm)

    p = sub.add_parser("search", help="Monte Carlo greedy packing")
    p.add_argument("--shape", type=_shape, required=True, help="e.g. 5x5x5")
    p.add_argument("--restarts", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sieve", help="golomb:v<1-4>:q=<q>[,key=value...]")
    p.add_argument("--workers", type=int, help="processes (default: HYPERCOSTAS_THREADS or CPU count)")
    p.add_argument("--stats", help="also write the JSON stats block here")
    _output_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("applicability", help="which 2-D constructions give side n in 2m dimensions")
    p.add_argument("action", nargs="?", choices=("check", "scan"), default="check")
    p.add_argument("--n", type=_range, help="value, or range a..b for scan")
    p.add_argument("--m", type=_range, help="value, or range a..b for scan")
    p.add_argument("--form", type=int, choices=(1, 2, 3))
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_applicability)

    p = sub.add_parser("fixtures", help="golden table fixtures")
    p.add_argument("action", choices=("verify-all",))
    p.add_argument("--dir", help="fixture directory (default: packaged data)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (UsageError, FormatError, ConfigurationError, CapExceededError, ValueError, OSError) as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
