"""Command line front end: ``sl21inv <command> [--braid W | --fixture F] ...``."""

import argparse
import json
import sys

from sl21inv import __version__
from sl21inv.diagram import BraidWord, FixtureError, load_fixture
from sl21inv.evaluate import (ConwayKnot, InvalidDiagram, KnotValue,
                              NotScalarMultiple, ResidualPrefactor,
                              WidthExceeded, conway, f_prime, links_gould,
                              m_invariant)
from sl21inv.ring import (ExponentOverflow, GaussLaurent, NotDivisible,
                          PrefactorMismatch, default_names)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EVAL = 0, 1, 2, 3

M0_TEXT = "1/((q1 - q1^-1)*(q*q1 - q^-1*q1^-1))"


class ParseError(ValueError):
    """The request could not be turned into a link."""


def _names(args, nvars):
    if args.vars:
        names = [v.strip() for v in args.vars.split(",")]
        if len(names) < nvars:
            raise ParseError(f"--vars names {len(names)} variables, result needs {nvars}")
        return names
    return default_names(max(nvars, 1))


def _braid(args):
    if args.fixture and args.braid is not None:
        raise ParseError("give either --braid or --fixture, not both")
    if args.fixture:
        try:
            fx = load_fixture(args.fixture)
        except FixtureError as exc:
            raise ParseError(str(exc)) from None
        return fx.braid, fx.color_forms(), fx.name
    if args.braid is None:
        raise ParseError("no link given: use --braid or --fixture")
    try:
        b = BraidWord.parse(args.braid, args.strands)
    except ValueError as exc:
        raise ParseError(f"bad braid word: {exc}") from None
    return b, None, None


def _poly_out(p, args, extra=None):
    names = _names(args, p.nvars)
    obj = {"value": p.to_json_obj(names)}
    obj.update(extra or {})
    return p.to_text(names), obj


def _cmd_m(args):
    b, colors, _ = _braid(args)
    M = m_invariant(b, args.cut, colors)
    if isinstance(M, KnotValue):
        P = M.split_m0()
        if P is None:
            names = _names(args, max(M.numerator.nvars, 2))
            text = f"({M.numerator.to_text(names)}) / ({M.denominator.to_text(names)})"
            return text, {"numerator": M.numerator.to_json_obj(names),
                          "denominator": M.denominator.to_json_obj(names)}
        names = _names(args, max(P.nvars, 2))
        return f"M0 + {P.to_text(names)}", {"M0": M0_TEXT, "P": P.to_json_obj(names)}
    return _poly_out(M, args)


def _cmd_lg(args):
    b, _, _ = _braid(args)
    return _poly_out(links_gould(b, args.cut), args, {"note": "p = q1*sqrt(q)"})


def _cmd_conway(args):
    b, _, _ = _braid(args)
    c = conway(b, args.cut)
    note = {"note": "t_k = q_k^2"}
    if isinstance(c, ConwayKnot):
        names = _names(args, 2)
        text = f"({c.numerator.to_text(names)}) / ({c.denominator.to_text(names)})"
        obj = {"numerator": c.numerator.to_json_obj(names),
               "denominator": c.denominator.to_json_obj(names)}
        obj.update(note)
        return text, obj
    names = _names(args, c.nvars if isinstance(c, GaussLaurent) else 1)
    obj = {"value": c.to_json_obj(names)}
    obj.update(note)
    return c.to_text(names), obj


def _cmd_fprime(args):
    b, colors, _ = _braid(args)
    fp = f_prime(b, args.cut, colors)
    x = fp.numerator
    names = _names(args, max(x.poly.nvars, fp.divisor.nvars))
    pref = x.prefactor.to_text()
    body = x.poly.to_text(names)
    num = body if x.prefactor.is_zero else f"q^({pref}) * ({body})"
    text = f"({num}) / ({fp.divisor.to_text(names)})"
    return text, {"prefactor": pref, "numerator": x.poly.to_json_obj(names),
                  "divisor": fp.divisor.to_json_obj(names)}


def _table(rows):
    width = max((len(r[0]) for r in rows), default=0)
    return "\n".join(f"{name.ljust(width)}  {status}" + (f"  {w}" if w else "")
                     for name, status, w in rows)


def _cmd_verify_skein(args):
    from sl21inv.skein import report
    outs = report()
    rows = [(o.relation, o.status.upper(), o.witness) for o in outs]
    ok = all(o.ok for o in outs)
    return _table(rows), {"relations": [o.to_json_obj() for o in outs], "ok": ok}, ok


def _cmd_verify_props(args):
    from sl21inv.properties import standard_suite
    checks = standard_suite()
    rows = [(c.name, "PASS" if c.ok else "FAIL", c.detail) for c in checks]
    ok = all(c.ok for c in checks)
    objs = [{"property": c.name, "status": "pass" if c.ok else "fail", **({"witness": c.detail} if c.detail else {})}
            for c in checks]
    return _table(rows), {"properties": objs, "ok": ok}, ok


COMMANDS = {
    "m": (_cmd_m, "the invariant M (knots print as M0 + P)"),
    "lg": (_cmd_lg, "Links-Gould invariant in (q, q1)"),
    "conway": (_cmd_conway, "Conway potential function, i*M at q = i"),
    "fprime": (_cmd_fprime, "renormalized invariant F' as numerator / divisor"),
    "verify-skein": (_cmd_verify_skein, "check every skein relation"),
    "verify-props": (_cmd_verify_props, "check framing, divisibility and Conway axioms"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="sl21inv", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json"), default="text")
        if name.startswith("verify"):
            continue
        p.add_argument("--braid", help='braid word, e.g. "-1 -1" (sigma_1^-2)')
        p.add_argument("--strands", type=int, help="number of strands (default: from the word)")
        p.add_argument("--fixture", help="fixture JSON path or bundled name")
        p.add_argument("--cut", type=int, default=1, help="component cut open for F' (1-based)")
        p.add_argument("--vars", help="comma-separated variable names, e.g. q,x,y")
    return parser


def _emit(args, text, obj, out):
    if args.format == "json":
        out.write(json.dumps({"command": args.command, "result": obj}, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _error(args, kind, message, code, out, err):
    if getattr(args, "format", "text") == "json":
        out.write(json.dumps({"command": getattr(args, "command", None),
                              "error": {"type": kind, "message": message}}, sort_keys=True) + "\n")
    else:
        err.write(f"error: {kind}: {message}\n")
    return code


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        res = func(args)
    except ParseError as exc:
        return _error(args, "ParseError", str(exc), EXIT_USAGE, out, err)
    except (InvalidDiagram, WidthExceeded, NotScalarMultiple, ResidualPrefactor,
            NotDivisible, PrefactorMismatch, ExponentOverflow, ValueError) as exc:
        return _error(args, type(exc).__name__, str(exc), EXIT_EVAL, out, err)
    ok = True
    if len(res) == 3:
        text, obj, ok = res
    else:
        text, obj = res
    _emit(args, text, obj, out)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
