"""Command-line front end.

Exit codes: 0 on success, 1 when a verification sweep finds a counterexample,
2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .chow import Variety, degree, parse_class
from .correspondence import compose_chow, fm_action, parse_correspondence
from .graded import format_rational
from .kernels import BACKEND
from .ktheory import euler_pairing, parse_kclass
from .motives import check_iso_pair, decompose, parse_motive_sum
from .ncmot import is_unitriangular, nm_object
from .orbit import orbit_iso_witness, is_orbit_iso_pair, tate_sum_class
from .sweeps import SUITES, Sweep, nu_entries, run_suite
from .textform import ParseError

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rat(c):
    return format_rational(Fraction(c))


def class_terms(c):
    return [{"exponent": list(e), "coeff": _rat(v)} for e, v in c.poly.items()]


def corr_json(a):
    return {"source": str(a.source), "target": str(a.target),
            "kernel": str(a.kernel), "terms": class_terms(a.kernel)}


# commands: each returns (ok, payload, text)


def cmd_chow_eval(args):
    x = Variety.parse(args.variety)
    c = parse_class(args.expression, x)
    payload = {"variety": str(x), "class": str(c), "terms": class_terms(c), "degree": _rat(degree(c))}
    return True, payload, f"{c}\ndegree: {_rat(degree(c))}"


def cmd_euler(args):
    x = Variety.parse(args.variety)
    e = parse_kclass(args.e, x)
    f = parse_kclass(args.f, x)
    chi = euler_pairing(e, f)
    payload = {"variety": str(x), "e": str(e), "f": str(f), "chi": _rat(chi)}
    return True, payload, _rat(chi)


def cmd_motive_decompose(args):
    spec = args.spec.strip()
    x = Variety((int(spec),)) if spec.isdigit() else Variety.parse(spec)
    rows = []
    ok = True
    lines = [f"M({x}) = " + " + ".join(str(f.target) for _, (f, _) in decompose(x))]
    for summand, (f, g) in decompose(x):
        verified = check_iso_pair(f, g)
        ok = ok and verified
        rows.append({
            "projector": str(summand.projector.kernel),
            "isomorphic_to": str(f.target),
            "forward": str(f.cls),
            "backward": str(g.cls),
            "verified": verified,
        })
        lines.append(f"  pi = {summand.projector.kernel}  ~  {f.target}  "
                     f"(f = {f.cls}, g = {g.cls}) {'ok' if verified else 'FAILED'}")
    payload = {"variety": str(x), "summands": rows, "verified": ok}
    return ok, payload, "\n".join(lines)


def cmd_corr_compose(args):
    a = parse_correspondence(args.first)
    b = parse_correspondence(args.second)
    c = compose_chow(a, b)
    return True, {"first": corr_json(a), "second": corr_json(b), "composite": corr_json(c)}, str(c)


def cmd_fm_act(args):
    a = parse_correspondence(args.kernel)
    alpha = parse_class(args.cls, a.source)
    out = fm_action(a, alpha)
    payload = {"kernel": corr_json(a), "input": str(alpha), "output": str(out),
               "terms": class_terms(out), "variety": str(out.variety)}
    return True, payload, str(out)


def _parse_triple(text):
    parts = [p for p in text.replace(";", ",").split(",")]
    if len(parts) != 3:
        raise ParseError("expected three comma-separated varieties", text, 0, text)
    return tuple(Variety.parse(p) for p in parts)


def _sweep_text(sweeps):
    lines = []
    for s in sweeps:
        status = "pass" if s.passed else "FAIL"
        lines.append(f"{s.suite}: {status} ({s.checks} checks, {s.failures} failures)")
        if s.counterexample:
            lines.append(f"  counterexample: {s.counterexample}")
    return "\n".join(lines)


def cmd_nu_check(args):
    triple = _parse_triple(args.triple)
    entries = nu_entries([triple], args.seed, args.count)
    s = Sweep("nu")
    for e in entries:
        s.check("nu_functorial", e["equal"], lambda e=e: f"{e['pair'][0]} ; {e['pair'][1]} ; "
                                                        f"lhs={e['lhs']} ; rhs={e['rhs']}")
    payload = {"triple": [str(v) for v in triple], "seed": args.seed,
               "pairs": entries, **s.to_json()}
    return s.passed, payload, _sweep_text([s])


def cmd_nm(args):
    x = Variety.parse(args.variety)
    nm = nm_object(x)
    payload = {"variety": str(x), **nm.to_json(), "unitriangular": is_unitriangular(nm.euler)}
    width = max(len(str(v)) for row in nm.euler for v in row)
    rows = "\n".join("  " + " ".join(str(v).rjust(width) for v in row) for row in nm.euler)
    return True, payload, f"NM({x}) = U^{nm.rank}\neuler matrix:\n{rows}"


def cmd_orbit_iso(args):
    m = parse_motive_sum(args.first)
    n = parse_motive_sum(args.second)
    witness = orbit_iso_witness(m, n)
    iso = witness is not None and is_orbit_iso_pair(*witness)
    payload = {
        "first": str(m), "second": str(n), "isomorphic": iso,
        "tate_sum_class": [tate_sum_class(m), tate_sum_class(n)],
    }
    if witness is not None:
        payload["witness_support"] = [list(witness[0].support), list(witness[1].support)]
    return True, payload, "true" if iso else "false"


def cmd_verify(args):
    try:
        sweeps = run_suite(args.suite, args.seed, args.count)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    passed = all(s.passed for s in sweeps)
    payload = {
        "suite": args.suite, "seed": args.seed, "count": args.count, "passed": passed,
        "checks": sum(s.checks for s in sweeps), "suites": [s.to_json() for s in sweeps],
    }
    return passed, payload, _sweep_text(sweeps)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the JSON report")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="include wall-clock timing in the report")
    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--count", type=int, default=100, help="sweep size (default 100)")

    parser = argparse.ArgumentParser(prog="chowmot", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", default=False)
    parser.add_argument("--timing", action="store_true", default=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, helptext, parents=(common,)):
        p = sub.add_parser(name, parents=list(parents), help=helptext)
        p.set_defaults(func=fn)
        return p

    p = add("chow-eval", cmd_chow_eval, "evaluate a Chow-ring expression")
    p.add_argument("variety")
    p.add_argument("expression")
    p = add("euler", cmd_euler, "Euler pairing chi(E, F) by HRR")
    p.add_argument("variety")
    p.add_argument("e")
    p.add_argument("f")
    p = add("motive-decompose", cmd_motive_decompose, "decompose M(X) into twisted units")
    p.add_argument("spec", help="n for P^n, or a product such as P1xP2")
    p = add("corr-compose", cmd_corr_compose, "compose two correspondences")
    p.add_argument("first")
    p.add_argument("second")
    p = add("fm-act", cmd_fm_act, "apply a kernel to a Chow class")
    p.add_argument("kernel")
    p.add_argument("cls", metavar="class")
    p = add("nu-check", cmd_nu_check, "nu-functoriality sweep on a triple", (common, sweep))
    p.add_argument("triple", help="e.g. P1,P2,P1")
    p = add("nm", cmd_nm, "noncommutative motive of a variety")
    p.add_argument("variety")
    p = add("orbit-iso", cmd_orbit_iso, "isomorphism modulo Tate twists")
    p.add_argument("first")
    p.add_argument("second")
    p = add("verify", cmd_verify, "run a randomized invariant sweep", (common, sweep))
    p.add_argument("suite", help="one of " + ", ".join(SUITES + ("all",)))
    return parser


def run(argv=None, out=None, err=None):
    """Run one command; returns ``(exit_code, report_or_None)``."""
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else EXIT_USAGE), None
    start = time.perf_counter()
    try:
        ok, payload, text = args.func(args)
    except (ParseError, UsageError, ValueError) as exc:
        print(f"chowmot: error: {exc}", file=err)
        return EXIT_USAGE, None
    elapsed = time.perf_counter() - start
    code = EXIT_OK if ok else EXIT_FAILED
    report = {"command": argv, "ok": ok, "result": payload}
    if args.timing:
        report["timing"] = {"seconds": round(elapsed, 6), "backend": BACKEND}
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2), file=out)
    else:
        print(text, file=out)
        if args.timing:
            print(f"time: {elapsed:.3f}s ({BACKEND} kernel)", file=out)
    return code, report


def main(argv=None):
    code, _ = run(argv)
    sys.exit(code)


if __name__ == "__main__":
    main()
