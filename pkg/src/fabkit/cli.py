"""Command-line front end: ``fabkit <command> ...``.

Exit status is 0 on success, 1 for domain errors (the library's diagnostic is
printed to stderr) and 2 for usage or input-parsing errors.  Output is
human-readable unless ``--json`` is given.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra, classes, homotopy
from .errors import FabError

EXIT_DOMAIN = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _load(path: str) -> dict:
    return json.loads(Path(path).read_text())


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing option(s): " + ", ".join("--" + n.replace("_", "-") for n in missing))


# ---------------------------------------------------------------------------
# homotopy
# ---------------------------------------------------------------------------

def _cmd_pi(args):
    fn = homotopy.pi_grassmannian if args.space == "gr" else homotopy.pi_frame_space
    group = fn(args.r, args.k, args.l)
    return group.to_json() if args.json else str(group)


def _cmd_induced(args):
    report = homotopy.induced_map(args.r, args.k, args.l, args.m, args.n)
    if args.json:
        return report.to_json()
    lines = [
        f"pi_{args.r}(Gr_{{{args.k},{args.l}}}) = {report.source} -> pi_{args.r}(Gr_{{{args.m},{args.n}}}) = {report.target}",
        f"kind: {report.kind}",
    ]
    if report.factor is not None:
        lines.append(f"factor: {report.factor}")
    if report.image_generator is not None:
        lines.append(f"image generator: {report.image_generator}")
    if report.image_order is not None:
        lines.append(f"image order: {report.image_order}")
    lines.append(f"injective: {str(report.injective).lower()}")
    lines.append(f"isomorphism: {str(report.is_isomorphism).lower()}")
    return "\n".join(lines)


def _cmd_oracle(args):
    even, odd = homotopy.exact_sequence_oracle(args.k, args.l, args.r)
    if args.json:
        return {"pi_even": even.to_json(), "pi_odd": odd.to_json(), "r": args.r}
    return f"pi_{2 * args.r} = {even}\npi_{2 * args.r - 1} = {odd}"


# ---------------------------------------------------------------------------
# matrix algebra
# ---------------------------------------------------------------------------

def _cmd_frame(args):
    if args.action == "standard":
        _require(args, "k", "l")
        return algebra.standard_frame(args.k, args.l).to_json()
    _require(args, "input")
    frame = algebra.Frame.from_json(_load(args.input))
    if args.action == "verify":
        check = algebra.verify_frame(frame)
        if args.json:
            return {"valid": check.valid, "diagnostic": check.diagnostic}
        if not check:
            raise FabError(f"invalid: {check.diagnostic}")
        return "valid"
    return algebra.noether_skolem_conjugator(frame).to_json()


def _cmd_centralizer(args):
    frame = algebra.Frame.from_json(_load(args.input))
    comp = algebra.centralizer(algebra.embedding_from_frame(frame))
    return comp.frame.to_json()


def _load_fiber(path: str) -> algebra.FabFiber:
    obj = _load(path)
    if "generators" in obj:
        return algebra.make_fab_fiber(algebra.embedding_from_frame(algebra.Frame.from_json(obj)))
    return algebra.FabFiber.from_json(obj)


def _cmd_fab(args):
    if args.action == "make":
        return _load_fiber(args.input).to_json()
    _require(args, "in2")
    return algebra.fab_product(_load_fiber(args.input), _load_fiber(args.in2)).to_json()


def _cmd_segre(args):
    p = algebra.ProjectivePoint.from_json(_load(args.p))
    q = algebra.ProjectivePoint.from_json(_load(args.q))
    z = algebra.segre(p, q)
    return z.to_json() if args.json else repr(z)


# ---------------------------------------------------------------------------
# characteristic classes
# ---------------------------------------------------------------------------

def _vector(args, attr: str, label: str, kind: str, fab: bool) -> classes.ClassVector:
    path = getattr(args, attr)
    if path is not None:
        return classes.ClassVector.from_json(_load(path))
    if not args.symbolic:
        raise UsageError(f"--{attr.replace('_', '-')} is required without --symbolic")
    return classes.symbolic_class_vector(label, args.N, kind, 1, fab=fab)


def _bundle(args, attr: str, label: str) -> classes.VirtualBundleClass:
    path = getattr(args, attr)
    if path is not None:
        return classes.VirtualBundleClass.from_json(_load(path))
    if not args.symbolic:
        raise UsageError(f"--{attr.replace('_', '-')} is required without --symbolic")
    return classes.VirtualBundleClass(1, classes.symbolic_class_vector(label, args.N, "newton", 1))


def _truncate(v: classes.ClassVector, n: int | None) -> classes.ClassVector:
    return v if n is None else v.truncate(n)


def _cmd_class(args):
    op = args.op
    n = args.N
    if args.symbolic and n is None:
        args.N = n = 5
    if op == "newton2chern":
        out = classes.chern_from_newton(_truncate(_vector(args, "input", "A", "newton", False), n))
    elif op == "chern2newton":
        out = classes.newton_from_chern(_truncate(_vector(args, "input", "A", "chern", False), n))
    elif op == "fab-product":
        kind = args.kind
        a = _truncate(_vector(args, "input", "A", kind, True), n)
        b = _truncate(_vector(args, "in2", "B", kind, True), n)
        if a.kind == "chern" and b.kind == "chern":
            out = classes.fab_chern_product(a, b)
        elif a.kind == "newton" and b.kind == "newton":
            out = classes.fab_newton_product(a, b)
        else:
            raise FabError("fab-product needs two vectors of the same kind")
    elif op == "fab-inverse":
        out = classes.fab_inverse(_truncate(_vector(args, "input", "A", args.kind, True), n))
    elif op == "tensor":
        x, y = _bundle(args, "input", "A"), _bundle(args, "in2", "B")
        if n is not None:
            x = classes.VirtualBundleClass(x.dim, x.newton.truncate(n))
            y = classes.VirtualBundleClass(y.dim, y.newton.truncate(n))
        out = classes.tensor_newton(x, y).newton
    elif op == "bezout":
        if args.symbolic:
            raise UsageError("bezout needs numeric inputs")
        _require(args, "input", "in2")
        xk = classes.VirtualBundleClass.from_json(_load(args.input))
        xm = classes.VirtualBundleClass.from_json(_load(args.in2))
        out = classes.psi_bezout(xk, xm).newton
    else:  # argparse restricts choices
        raise UsageError(f"unknown class operation {op}")
    if args.json:
        return out.to_json()
    return str(out)


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's default from clobbering a --json given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    parser = argparse.ArgumentParser(prog="fabkit", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    pi = sub.add_parser("pi", parents=[common], help="stable homotopy groups")
    pi.add_argument("space", choices=["gr", "fr"])
    for name in ("k", "l", "r"):
        pi.add_argument(f"--{name}", type=int, required=True)
    pi.set_defaults(func=_cmd_pi)

    ind = sub.add_parser("induced", parents=[common], help="map pi_r(Gr_{k,l}) -> pi_r(Gr_{m,n})")
    for name in ("k", "l", "m", "n", "r"):
        ind.add_argument(f"--{name}", type=int, required=True)
    ind.set_defaults(func=_cmd_induced)

    orc = sub.add_parser("oracle", parents=[common], help="groups from the exact sequence via Smith normal form")
    for name in ("k", "l", "r"):
        orc.add_argument(f"--{name}", type=int, required=True)
    orc.set_defaults(func=_cmd_oracle)

    fr = sub.add_parser("frame", parents=[common], help="frames and Noether-Skolem conjugators")
    fr.add_argument("action", choices=["verify", "standard", "conjugator"])
    fr.add_argument("--in", dest="input")
    fr.add_argument("--k", type=int)
    fr.add_argument("--l", type=int)
    fr.set_defaults(func=_cmd_frame)

    cen = sub.add_parser("centralizer", parents=[common], help="complementary embedding of a frame")
    cen.add_argument("--in", dest="input", required=True)
    cen.set_defaults(func=_cmd_centralizer)

    fab = sub.add_parser("fab", parents=[common], help="FAB fibers")
    fab.add_argument("action", choices=["make", "product"])
    fab.add_argument("--in", dest="input", required=True)
    fab.add_argument("--in2")
    fab.set_defaults(func=_cmd_fab)

    seg = sub.add_parser("segre", parents=[common], help="Segre embedding of two projective points")
    seg.add_argument("--p", required=True)
    seg.add_argument("--q", required=True)
    seg.set_defaults(func=_cmd_segre)

    cl = sub.add_parser("class", parents=[common], help="Newton/Chern class calculus")
    cl.add_argument(
        "op", choices=["newton2chern", "chern2newton", "tensor", "fab-product", "fab-inverse", "bezout"]
    )
    cl.add_argument("--in", dest="input")
    cl.add_argument("--in2")
    cl.add_argument("--N", type=int)
    cl.add_argument("--symbolic", action="store_true", help="use generic symbolic classes for missing inputs")
    cl.add_argument("--kind", choices=["chern", "newton"], default="chern", help="kind of symbolic FAB inputs")
    cl.set_defaults(func=_cmd_class)
    return parser


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except FabError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DOMAIN
    except (UsageError, OSError, json.JSONDecodeError, KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    print(result if isinstance(result, str) else _dump(result), file=out)
    return 0


def main() -> None:
    sys.exit(run())
