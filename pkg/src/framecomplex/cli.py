"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 domain error.
"""

import argparse
import json
import os
import sys

from .errors import DomainError, ParseError, VerificationError
from .forms import VectorForm
from .geometry import BundleContext
from .homotopy import split_dT_d
from .parsing import parse_expr, parse_form
from .render import form_to_document, render
from .variational import (
    HELMHOLTZ_READING,
    Lagrangian,
    euler_lagrange,
    fundamental_form,
    helmholtz,
    hilbert,
    is_homogeneous,
    proportionality,
)
from .verify import fuzz_homotopy, fuzz_identities

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3


def _default_seed():
    value = os.environ.get("FRAMECOMPLEX_SEED", "0")
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"FRAMECOMPLEX_SEED must be an integer, got {value!r}") from None


def _read_form(arg):
    if arg == "-":
        text = sys.stdin.read()
    elif arg.startswith("@"):
        with open(arg[1:]) as fh:
            text = fh.read()
    else:
        text = arg
    return parse_form(text)


def _lagrangian(args):
    ctx = BundleContext(args.m, args.n)
    return Lagrangian(ctx, parse_expr(args.expr, ctx), args.k)


def _show(x, fmt):
    if fmt == "json" and not isinstance(x, VectorForm):
        return render(x, "json")
    return render(x, fmt)


def cmd_el(args, out):
    lag = _lagrangian(args)
    result = euler_lagrange(lag)
    status = "PASS" if result.agree else "FAIL"
    if args.format == "json":
        out.write(json.dumps({"epsilon": form_to_document(result.form), "cross_check": status}) + "\n")
    else:
        out.write(f"epsilon = {render(result.source, args.format)}\n")
        out.write(f"cross-check: {status}\n")
    if not result.agree:
        print("coordinate formula gives " + render(result.coordinate_formula), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_hilbert(args, out):
    lag = _lagrangian(args)
    for i, theta in enumerate(hilbert(lag), start=1):
        out.write(f"theta^{i} = {_show(theta, args.format)}\n")
    return EXIT_OK


def cmd_helmholtz(args, out):
    phi = _read_form(args.form)
    value = helmholtz(phi)
    out.write(f"H = {_show(value, args.format)}\n")
    out.write(f"reading: {HELMHOLTZ_READING}\n")
    out.write(f"locally variational: {'yes' if value.is_zero else 'no'}\n")
    return EXIT_OK if value.is_zero else EXIT_VERIFY


def cmd_homotopy_verify(args, out):
    ctx = BundleContext(args.m, args.n)
    if not 0 <= args.s <= ctx.m - 1:
        raise DomainError(f"the homotopy identity is only claimed for covalence 0..{ctx.m - 1}")
    if args.r < 1:
        raise DomainError("the homotopy identity needs form degree r >= 1")
    result = fuzz_homotopy(ctx, args.k, args.r, args.s, args.cases, args.seed)
    out.write(result.line() + "\n")
    if not result.ok:
        out.write(f"counterexample: {result.counterexample}\n")
        return EXIT_VERIFY
    return EXIT_OK


def cmd_lemmas(args, out):
    results = fuzz_identities(args.cases, args.seed)
    for result in results:
        out.write(result.line() + "\n")
        if not result.ok:
            out.write(f"  counterexample: {result.counterexample}\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def cmd_split(args, out):
    phi = _read_form(args.form)
    psi, phi1 = split_dT_d(phi)
    from .calculus import dT
    from .forms import normalize_bar

    recomposed = dT(phi1) if psi.degree < 0 else psi.d() + dT(phi1)
    target = phi
    if psi.degree < 0:
        recomposed, target = normalize_bar(recomposed), normalize_bar(phi)
    ok = recomposed == target
    out.write(f"psi = {_show(psi, args.format)}\n")
    out.write(f"phi1 = {_show(phi1, args.format)}\n")
    out.write(f"recomposition: {'PASS' if ok else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_fundamental(args, out):
    lag = _lagrangian(args)
    result = fundamental_form(lag)
    out.write(f"Theta_{lag.ctx.m} = {_show(result.theta, args.format)}\n")
    out.write(f"order: {result.order}\n")
    out.write(f"closed: {'yes' if result.closed else 'no'}\n")
    if lag.order <= 1:
        out.write(f"projectable to first order: {'yes' if result.projectable_to_first_order else 'no'}\n")
        out.write(f"S^1 d ... S^m dL = {_show(result.first_order_formula, args.format)}\n")
        ratio = "none" if result.ratio is None else str(result.ratio)
        out.write(f"ratio to first-order formula: {ratio}\n")
    return EXIT_OK


def cmd_check_homogeneous(args, out):
    lag = _lagrangian(args)
    report = is_homogeneous(lag)
    L = lag.density
    for I, j, value, expected in report.failures:
        label = f"Delta^{I}_{j} L"
        ratio = proportionality(value, L) if not L.is_zero else None
        extra = f" = {ratio}*L" if ratio is not None and not value.is_zero else ""
        want = "L" if expected == L and not L.is_zero else render(expected)
        out.write(f"{label} = {render(value)}{extra} (expected {want})\n")
    out.write(f"homogeneous: {'yes' if report.homogeneous else 'NOT homogeneous'}\n")
    return EXIT_OK if report.homogeneous else EXIT_VERIFY


def cmd_render(args, out):
    if args.expr is not None:
        ctx = BundleContext(args.m, args.n)
        x = parse_expr(args.expr, ctx)
    elif args.form is not None:
        x = _read_form(args.form)
    else:
        raise ParseError("render needs a form document or --expr")
    out.write(render(x, args.format) + "\n")
    return EXIT_OK


def _bundle_options(p, k=True):
    p.add_argument("--m", type=int, required=True, help="number of frame directions")
    p.add_argument("--n", type=int, required=True, help="dimension of E")
    if k:
        p.add_argument("--k", type=int, default=None, help="order of the Lagrangian")


def _format_option(p):
    p.add_argument("--format", choices=("plain", "latex", "json"), default="plain")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="framecomplex",
        description="Exact calculus of vector-valued forms on frame bundles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func, help_text in (
        ("el", cmd_el, "Euler-Lagrange form with cross-check"),
        ("hilbert", cmd_hilbert, "Hilbert forms P^i_(1) dL"),
        ("fundamental", cmd_fundamental, "fundamental form (Pd)^m Lambda"),
        ("check-homogeneous", cmd_check_homogeneous, "test the homogeneity conditions"),
    ):
        p = sub.add_parser(name, help=help_text)
        _bundle_options(p)
        _format_option(p)
        p.add_argument("expr", help="Lagrangian density, e.g. 'u[1;]*u[2;1]'")
        p.set_defaults(func=func)

    for name, func, help_text in (
        ("helmholtz", cmd_helmholtz, "Helmholtz-Sonin map of a degree-1, covalence-m form"),
        ("split", cmd_split, "write phi = d(psi) + dT(phi1)"),
    ):
        p = sub.add_parser(name, help=help_text)
        _format_option(p)
        p.add_argument("form", help="form JSON text, @file, or - for stdin")
        p.set_defaults(func=func)

    p = sub.add_parser("homotopy-verify", help="fuzz dT P + P dT = id")
    _bundle_options(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--cases", type=int, default=20)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_homotopy_verify, k=1)

    p = sub.add_parser("lemmas", help="fuzz the commutator, rearrangement and bicomplex identities")
    p.add_argument("--cases", type=int, default=20)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("render", help="render a form or expression")
    _format_option(p)
    p.add_argument("form", nargs="?", default=None)
    p.add_argument("--expr", default=None)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        if args.command == "homotopy-verify" and args.k is None:
            args.k = 1
        return args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        if exc.residual is not None:
            print(f"residual: {render(exc.residual)}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
