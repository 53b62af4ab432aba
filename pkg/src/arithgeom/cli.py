"""Command-line entry point: ``arithgeom verify|table|zeta|witt``.

Exit codes: 0 when every check passes, 1 when any check fails, 2 for usage
or input errors (bad flags, unparsable spec files, budgets exceeded).
"""

import argparse
import json
import sys

from . import classical, quadfield, suites, witt
from .classical import ResourceError
from .report import FAIL, PASS, _jsonable
from .varzeta.parse import ParseError
from .varzeta.variety import BUILTINS, builtin, read_variety_spec
from .varzeta.zeta import InvalidCountsError, VarietyData, cycle_series, verify_variety

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SERIES_LABELS = {"zeta": "Z", "phi": "Phi", "sigma1": "S1", "psi": "Psi", "lambda": "Lambda"}


class UsageError(Exception):
    pass


def _parser():
    ap = argparse.ArgumentParser(prog="arithgeom", description="Verify arithmetic-function identities on "
                                 "N, quadratic fields, varieties over finite fields and Witt vectors.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=suites.SUITES + ("all",))
    v.add_argument("--limit", type=int, default=500, help="classical bound N (default 500)")
    v.add_argument("--field", type=int, action="append", help="squarefree d for Q(sqrt d); repeatable")
    v.add_argument("--norm", type=int, default=200, help="ideal norm bound for the Dirichlet identities")
    v.add_argument("--oracle-norm", type=int, default=suites.QUAD_ORACLE_NORM,
                   help="norm bound for the quotient-ring oracles (default 100)")
    v.add_argument("--degree", "-D", type=int, help="zeta truncation degree (default 8 for q <= 3, else 4)")
    v.add_argument("--nmax", type=int, default=60, help="Dirichlet bound for global series")
    _add_variety_args(v)
    v.add_argument("--format", choices=("tsv", "json"), default="tsv")
    v.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    t = sub.add_parser("table", help="tabulate an arithmetic function")
    t.add_argument("fn")
    t.add_argument("--limit", type=int, default=20)
    t.add_argument("--field", type=int, help="tabulate over the ideals of Q(sqrt d) instead of N")
    t.add_argument("--format", choices=("tsv", "json"), default="tsv")

    z = sub.add_parser("zeta", help="zeta and 0-cycle series of a variety")
    z.add_argument("spec", nargs="?", help="variety spec file")
    z.add_argument("--builtin", choices=BUILTINS)
    z.add_argument("--p", type=int)
    z.add_argument("-D", "--degree", type=int)
    z.add_argument("--format", choices=("tsv", "json"), default="tsv")

    w = sub.add_parser("witt", help="report on G(p^k) = W_k(F_{p^2})^x / W_k(F_p)^x")
    w.add_argument("--p", type=int, required=True)
    w.add_argument("--k", type=int, required=True)
    return ap


def _add_variety_args(ap):
    ap.add_argument("--spec", action="append", help="variety spec file; repeatable")
    ap.add_argument("--builtin", choices=BUILTINS, action="append", help="builtin variety; repeatable")
    ap.add_argument("--p", type=int, help="base prime for --builtin (omit for a global template)")


def _varieties(args):
    specs = [read_variety_spec(path) for path in (args.spec or [])]
    specs += [builtin(name, args.p) for name in (args.builtin or [])]
    return specs


def _config(args):
    specs = _varieties(args)
    cfg = suites.RunConfig(
        limit=args.limit, norm=args.norm, oracle_norm=args.oracle_norm, degree=args.degree, nmax=args.nmax,
        seed=args.seed, fields=tuple(args.field) if args.field else suites.DEFAULT_FIELDS,
        varieties=[V for V in specs if V.p is not None],
        templates=[V for V in specs if V.p is None],
    )
    if args.suite == "variety" and cfg.templates:
        raise UsageError("variety suite needs p=... (got a global template)")
    return cfg.validate()


def emit_checks(results, fmt, out):
    """results: list of (suite, Check)."""
    failed = any(c.status == FAIL for _, c in results)
    status = FAIL if failed else PASS
    if fmt == "json":
        doc = {
            "status": status,
            "exit_code": EXIT_FAIL if failed else EXIT_OK,
            "checks": [dict(suite=s, **c.as_dict()) for s, c in results],
        }
        first = next(((s, c) for s, c in results if c.status == FAIL), None)
        if first is not None:
            doc["first_failure"] = {"suite": first[0], "id": first[1].name}
        json.dump(doc, out, indent=2)
        out.write("\n")
    else:
        out.write("suite\tid\tstatus\tparams\tdetail\n")
        for s, c in results:
            params = json.dumps(_jsonable(c.params), sort_keys=True)
            out.write(f"{s}\t{c.name}\t{c.status}\t{params}\t{c.detail}\n")
        out.write(f"# {sum(c.status == PASS for _, c in results)} pass, "
                  f"{sum(c.status == FAIL for _, c in results)} fail, "
                  f"{sum(c.status not in (PASS, FAIL) for _, c in results)} skip\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify(args, out):
    cfg = _config(args)
    names = suites.SUITES if args.suite == "all" else (args.suite,)
    results = []
    for name in names:
        for c in suites.SUITE_RUNNERS[name](cfg):
            results.append((name, c))
    return emit_checks(results, args.format, out)


def ideal_key(e):
    if e.is_identity():
        return "1"
    return "*".join(f"P{p}.{i}" + (f"^{k}" if k > 1 else "") for (p, i), k in e.items())


def cmd_table(args, out):
    if args.limit < 1 or args.limit > suites.LIMIT_CAP:
        raise UsageError(f"--limit must be in 1..{suites.LIMIT_CAP}")
    if args.field is None:
        try:
            f = classical.classical_function(args.fn)
        except KeyError:
            raise UsageError(f"unknown function {args.fn!r}; known: {', '.join(classical.CLASSICAL_NAMES)}") \
                from None
        rows = [(n, f(n)) for n in range(1, args.limit + 1)]
        if args.format == "json":
            json.dump(_jsonable([list(r) for r in rows]), out)
            out.write("\n")
        else:
            out.write("n\tvalue\n")
            for n, v in rows:
                out.write(f"{n}\t{v}\n")
        return EXIT_OK
    K = quadfield.QuadraticField(args.field)
    try:
        f = quadfield.function(K, args.fn)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    rows = [(n, ideal_key(a), f(a)) for a, n in quadfield.enumerate_ideals(K, args.limit)]
    if args.format == "json":
        json.dump(_jsonable([list(r) for r in rows]), out)
        out.write("\n")
    else:
        out.write("norm\tideal\tvalue\n")
        for n, key, v in rows:
            out.write(f"{n}\t{key}\t{v}\n")
    return EXIT_OK


def cmd_zeta(args, out):
    if args.spec and args.builtin:
        raise UsageError("give a spec file or --builtin, not both")
    if args.spec:
        V = read_variety_spec(args.spec)
    elif args.builtin:
        V = builtin(args.builtin, args.p)
    else:
        raise UsageError("zeta needs a spec file or --builtin")
    if V.p is None:
        raise UsageError("zeta needs a base prime (p=... or --p)")
    if args.degree is not None and not 1 <= args.degree <= suites.DEGREE_CAP:
        raise UsageError(f"-D must be in 1..{suites.DEGREE_CAP}")
    data = VarietyData(V, args.degree)
    if data.spectrum is None:
        raise InvalidCountsError(data.error)
    rows = [(SERIES_LABELS[fn], list(cycle_series(fn, data.spectrum, data.D))) for fn in SERIES_LABELS]
    checks = verify_variety(V, data.D)
    if args.format == "json":
        doc = {
            "variety": V.label(), "q": V.p, "D": data.D, "counts": data.counts, "spectrum": list(data.spectrum.b),
            "series": {label: c for label, c in rows},
            "checks": [c.as_dict() for c in checks],
        }
        json.dump(_jsonable(doc), out, indent=2)
        out.write("\n")
    else:
        out.write(f"# {V.label()}  q={V.p}  D={data.D}\n")
        out.write("N\t" + " ".join(map(str, data.counts)) + "\n")
        out.write("b\t" + " ".join(map(str, data.spectrum.b)) + "\n")
        for label, coeffs in rows:
            out.write(f"{label}\t" + " ".join(map(str, coeffs)) + "\n")
        for c in checks:
            out.write(f"# {c.name}\t{c.status}\t{c.detail}\n")
    return EXIT_FAIL if any(c.status == FAIL for c in checks) else EXIT_OK


def cmd_witt(args, out):
    if args.p not in (2, 3, 5) or not 1 <= args.k <= witt.MAX_LENGTH:
        raise UsageError("witt needs --p in {2, 3, 5} and --k in 1..4")
    r = witt.psi_group(args.p, args.k)
    json.dump(_jsonable(r.as_dict()), out, indent=2)
    out.write("\n")
    return EXIT_OK if r.passed else EXIT_FAIL


COMMANDS = {"verify": cmd_verify, "table": cmd_table, "zeta": cmd_zeta, "witt": cmd_witt}


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"arithgeom: spec error: {exc}", file=sys.stderr)
    except (UsageError, ValueError, ResourceError, InvalidCountsError, OSError) as exc:
        print(f"arithgeom: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
