"""Command line front end."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import diagram as D
from .algebra import Element, decorated_check, format_element, presentation_check
from .cells import delta_module, labels, simple_dims, smat_at_dp_zero, smat_eval
from .linalg import matrix_rank
from .params import generic_points
from .report import Report
from .scalar import format_rational, format_scalar, parse_rational
from .symmetric import format_partition, parse_partition


class UsageError(ValueError):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pbrauer", description="Exact computations in R_n(d, dp).")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, n=True):
        if n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-dim", type=int, default=5000)

    def params(p):
        p.add_argument("--delta", type=_rational)
        p.add_argument("--delta-prime", type=_rational)

    p = sub.add_parser("mult", help="product of two diagrams")
    common(p)
    params(p)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("dims", help="cell module dimensions")
    common(p)

    p = sub.add_parser("gram", help="Gram matrix of a cell module")
    common(p)
    params(p)
    p.add_argument("--lambda", dest="lam", required=True)

    p = sub.add_parser("simple-dims", help="ranks of Gram matrices at a parameter point")
    common(p)
    params(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["presentation", "morita", "branching", "degenerate", "decorated"])
    common(p)
    params(p)
    p.add_argument("--mode", choices=["dp0", "d1"], default="dp0", help="degenerate regime")

    p = sub.add_parser("schur-weyl", help="tensor space representation")
    common(p, n=False)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--skip-commutant", action="store_true")

    p = sub.add_parser("enumerate", help="list diagrams")
    common(p)
    p.add_argument("--brauer", action="store_true")
    p.add_argument("--count", action="store_true", help="print only the count")
    return ap


def _check_n(n: int) -> None:
    if n < 0:
        raise UsageError("--n must be non-negative")
    if n > D.max_rank():
        raise UsageError(f"--n {n} exceeds PBRAUER_MAX_RANK={D.max_rank()}")


def _point(args, default=None):
    if args.delta is None and args.delta_prime is None:
        return default
    if args.delta is None or args.delta_prime is None:
        raise UsageError("give both --delta and --delta-prime")
    return args.delta, args.delta_prime


def _emit(args, obj, text: str) -> None:
    if args.json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def _emit_report(args, rep: Report) -> int:
    if args.json:
        print(rep.to_json())
    else:
        print(rep.summary())
        for c in rep.failures():
            print(f"  FAIL {c.id}" + (f": {json.dumps(c.to_obj().get('detail'), sort_keys=True)}" if c.detail is not None else ""))
    return 0 if rep.passed else 1


def cmd_mult(args) -> int:
    _check_n(args.n)
    a = D.parse_text(args.left, args.n)
    b = D.parse_text(args.right, args.n)
    x = Element.of(a) * Element.of(b)
    pt = _point(args)
    if pt is None:
        _emit(args, {"n": args.n, "result": format_element(x)}, format_element(x))
        return 0
    vals = x.evaluate(*pt)
    text = " + ".join(f"{format_rational(c)} * {d}" for d, c in sorted(vals.items(), key=lambda t: D.sort_key(t[0]))) or "0"
    _emit(args, {"n": args.n, "result": text}, text)
    return 0


def _label_key(lam):
    return (sum(lam), [-p for p in lam])


def cmd_dims(args) -> int:
    _check_n(args.n)
    rows = []
    for lam in sorted(labels(args.n), key=_label_key):
        rows.append((format_partition(lam), delta_module(args.n, lam).dim))
    total = sum(d * d for _, d in rows)
    size = D.count_involutions(2 * args.n)
    obj = {"n": args.n, "dims": {k: v for k, v in rows}, "sum_of_squares": total, "algebra_dim": size}
    text = "\n".join(f"{k:>10}  {v}" for k, v in rows) + f"\nsum dim^2 = {total} (|R_{args.n}| = {size})"
    _emit(args, obj, text)
    return 0 if total == size else 1


def cmd_gram(args) -> int:
    _check_n(args.n)
    lam = parse_partition(args.lam)
    if sum(lam) > args.n:
        raise UsageError(f"|lambda| = {sum(lam)} exceeds n = {args.n}")
    m = delta_module(args.n, lam)
    if m.dim > args.max_dim:
        raise UsageError(f"module dimension {m.dim} exceeds --max-dim {args.max_dim}")
    G = m.gram()
    pt = _point(args)
    if pt is None:
        cells = [[format_scalar(c) for c in row] for row in G]
        rank = None
    else:
        if pt[1] == 0:
            G = smat_at_dp_zero(G)
        E = smat_eval(G, *pt)
        cells = [[format_rational(c) for c in row] for row in E]
        rank = matrix_rank(E)
    obj = {"n": args.n, "lambda": format_partition(lam), "dim": m.dim, "gram": cells, "rank": rank}
    width = max((len(c) for row in cells for c in row), default=1)
    text = "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)
    if rank is not None:
        text += f"\nrank = {rank}"
    _emit(args, obj, text)
    return 0


def cmd_simple_dims(args) -> int:
    _check_n(args.n)
    pt = _point(args)
    if pt is None:
        raise UsageError("simple-dims needs --delta and --delta-prime")
    dims = simple_dims(args.n, *pt)
    rows = [(format_partition(lam), dims[lam]) for lam in sorted(dims, key=_label_key)]
    obj = {"n": args.n, "delta": str(pt[0]), "delta_prime": str(pt[1]), "simple_dims": dict(rows)}
    _emit(args, obj, "\n".join(f"{k:>10}  {v}" for k, v in rows))
    return 0


def cmd_verify(args) -> int:
    _check_n(args.n)
    n = args.n
    if args.suite == "presentation":
        rep = presentation_check(n)
    elif args.suite == "decorated":
        rep = decorated_check(n, seed=args.seed)
    elif args.suite == "branching":
        from .young import branching_sweep, restriction_check

        rep = Report("branching", {"n": n})
        rep.extend(branching_sweep(n))
        pts = [_point(args)] if _point(args) else generic_points(args.seed, 1)
        if 1 <= n <= 4:
            for lam in labels(n):
                rep.extend(restriction_check(n, lam, pts), f"restriction {format_partition(lam)}")
    elif args.suite == "morita":
        from .morita import morita_suite

        pts = [_point(args)] if _point(args) else generic_points(args.seed, 1)
        rep = morita_suite(n, pts, products=n <= 3)
    else:
        from .degenerate import d1_suite, dp0_suite

        if args.mode == "dp0":
            rep = dp0_suite(n)
        else:
            dp = args.delta_prime if args.delta_prime is not None else Fraction(3)
            rep = d1_suite(n, dp)
    return _emit_report(args, rep)


def cmd_schur_weyl(args) -> int:
    from . import schur_weyl as sw

    if args.m < 0 or args.k < 1:
        raise UsageError("need --m >= 0 and --k >= 1")
    if (args.k + 1) ** args.m > args.max_dim:
        raise UsageError(f"(k+1)^m = {(args.k + 1) ** args.m} exceeds --max-dim {args.max_dim}")
    s = sw.schur_weyl_summary(args.m, args.k, args.skip_commutant)
    obj = {k: s[k] for k in ("rank", "expected", "injective", "commutant_dim")}
    print(json.dumps(obj, sort_keys=True))
    if args.m <= args.k:
        ok = s["injective"] and (s["commutant_dim"] is None or s["commutant_dim"] == s["rank"])
        return 0 if ok else 1
    return 0


def cmd_enumerate(args) -> int:
    _check_n(args.n)
    ds = D.enumerate_diagrams(args.n, brauer_only=args.brauer)
    if args.count:
        _emit(args, {"n": args.n, "count": len(ds)}, str(len(ds)))
    elif args.json:
        print(json.dumps([D.to_json_obj(d) for d in ds]))
    else:
        for d in ds:
            print(D.to_text(d))
    return 0


COMMANDS = {
    "mult": cmd_mult,
    "dims": cmd_dims,
    "gram": cmd_gram,
    "simple-dims": cmd_simple_dims,
    "verify": cmd_verify,
    "schur-weyl": cmd_schur_weyl,
    "enumerate": cmd_enumerate,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"pbrauer {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
