"""Command line driver.

Exit status is 0 when every requested check passes, 1 when a verification
fails, and 2 for usage errors, unknown object names and bad category files.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import bridge, tricat
from .gen import SHIPPED, gen_orbit, gen_stable_nakayama, shipped
from .gen.io import CategoryFileError, dumps, load
from .homcat import CategoryError
from .modalg import ModuleError

REPORT_FORMAT = "ghostct.report/1"
_SUFFIX = re.compile(r"^(.*)\[(-?\d+)\]$")


class UsageError(Exception):
    pass


# -- name handling ------------------------------------------------------------


def resolve_name(t: tricat.TriangCategory, name: str) -> int:
    """Object id for a display name, allowing a trailing shift suffix ``[k]``."""
    name = name.strip()
    names = t.names
    if name in names:
        return names.index(name)
    m = _SUFFIX.match(name)
    if m:
        base = m.group(1).strip()
        if base.startswith("(") and base.endswith(")"):
            base = base[1:-1]
        try:
            x = resolve_name(t, base)
        except UsageError:
            pass
        else:
            return tricat.shift_index(t, x, int(m.group(2)))
    raise UsageError(f"unknown object {name!r} (use --list-objects)")


def parse_ids(t: tricat.TriangCategory, text: str) -> tuple:
    if text is None:
        return ()
    parts = [p for p in text.split(",") if p.strip()]
    return tuple(sorted({resolve_name(t, p) for p in parts}))


def show(t: tricat.TriangCategory, xs) -> str:
    return ",".join(t.names[x] for x in xs) if xs else "0"


# -- subcommands --------------------------------------------------------------


def _category(args) -> tricat.TriangCategory:
    if args.c in SHIPPED and not Path(args.c).exists():
        return shipped(args.c)
    return load(args.c)


def cmd_gen(args, out) -> int:
    if args.family == "cluster":
        _require(args, "n")
        t = gen_orbit(args.n, 1, 1, name=args.name or f"cc_a{args.n}")
    elif args.family == "repetitive":
        _require(args, "n")
        a = 2 if args.a is None else args.a
        b = a if args.b is None else args.b
        t = gen_orbit(args.n, a, b, name=args.name or f"rc_a{args.n}_{a}_{b}")
    else:
        _require(args, "simples", "loewy")
        t = gen_stable_nakayama(args.simples, args.loewy, name=args.name or f"stnak_{args.simples}_{args.loewy}")
    problems = tricat.validate_triang(t)
    if problems:
        raise CategoryError("generated category is invalid: " + "; ".join(problems))
    text = dumps(t)
    if args.o == "-":
        out.write(text)
    else:
        Path(args.o).write_text(text, encoding="utf-8")
        out.write(f"wrote {t.name} ({t.size} objects) to {args.o}\n")
    return 0


def cmd_validate(args, out) -> int:
    if args.c in SHIPPED and not Path(args.c).exists():
        t = shipped(args.c)
    else:
        t = load(args.c, check=False)
    problems = tricat.validate_triang(t)
    for p in problems:
        out.write(f"violation: {p}\n")
    if problems:
        out.write(f"{t.name}: invalid ({len(problems)} violations)\n")
        return 1
    out.write(f"{t.name}: valid ({t.size} objects, Serre data {'present' if t.serre else 'absent'})\n")
    return 0


def cmd_predicates(args, out) -> int:
    t = _category(args)
    T, X = parse_ids(t, args.T), parse_ids(t, args.X)
    r = tricat.ghost_report(t, T, X)
    out.write(f"category: {t.name}\n")
    out.write(f"T: {show(t, T)}\n")
    out.write(f"X: {show(t, X)}\n")
    out.write(f"T cluster_tilting: {_bool(tricat.is_cluster_tilting(t, T))}\n")
    for key, value in r.flags.items():
        line = f"{key}: {_bool(value)}"
        if key in r.witnesses:
            line += f"  ({r.witnesses[key]})"
        out.write(line + "\n")
    return 0


def cmd_enumerate(args, out) -> int:
    t = _category(args)
    needs_T = args.kind not in ("cluster_tilting", "rigid")
    if needs_T and args.T is None:
        raise UsageError(f"--kind {args.kind} needs -T")
    T = parse_ids(t, args.T) if args.T is not None else None
    if T is not None and needs_T and not tricat.is_cluster_tilting(t, T):
        raise CategoryError(f"{show(t, T)} is not cluster tilting")
    for xs in tricat.enumerate_basic(t, args.kind, T, args.limit):
        out.write(show(t, xs) + "\n")
    return 0


def _parse_inverse(t, text: str) -> tuple:
    mods, _, kernel = text.partition(";")
    return parse_ids(t, mods), parse_ids(t, kernel)


def cmd_phi(args, out) -> int:
    t = _category(args)
    T = parse_ids(t, args.T)
    if not tricat.is_cluster_tilting(t, T):
        raise CategoryError(f"{show(t, T)} is not cluster tilting")
    ctx = bridge.context(t, T)
    if args.inverse is not None:
        mod_ids, kernel = _parse_inverse(t, args.inverse)
        bad = [x for x in mod_ids if x in ctx.T1]
        if bad:
            raise CategoryError(f"{show(t, bad)} lies in T[1] and has zero module")
        modules = [ctx.modules[ctx.position[x]] for x in mod_ids]
        xs = bridge.phi_inverse(t, T, modules, kernel)
        out.write(f"X: {'none' if xs is None else show(t, xs)}\n")
        return 0
    if args.X is None:
        raise UsageError("phi needs -X or --inverse")
    X = parse_ids(t, args.X)
    r = bridge.phi(t, T, X)
    out.write(f"X: {show(t, X)}\n")
    out.write(f"modules: {','.join(m.label for m in r.modules) or '0'}\n")
    out.write(f"dims: {','.join(str(m.dim) for m in r.modules) or '0'}\n")
    out.write(f"kernel_part: {show(t, r.kernel_part)}\n")
    pair = bridge.phi_pair(ctx, r)
    out.write(f"tau_rigid_pair: {_bool(pair in ctx.tau_rigid_pairs())}\n")
    out.write(f"support_tau_tilting: {_bool(pair in ctx.support_tau_tilting_pairs())}\n")
    return 0


def cmd_complete(args, out) -> int:
    t = _category(args)
    T, X = parse_ids(t, args.T), parse_ids(t, args.X)
    if not tricat.is_cluster_tilting(t, T):
        raise CategoryError(f"{show(t, T)} is not cluster tilting")
    for xs in tricat.bongartz_complete(t, T, X):
        out.write(show(t, xs) + "\n")
    return 0


def _theorems(args) -> tuple:
    if args.all:
        return bridge.THEOREMS
    if args.theorem not in bridge.THEOREMS:
        raise UsageError(f"unknown theorem {args.theorem!r}; expected one of {', '.join(bridge.THEOREMS)}")
    return (args.theorem,)


def _report_line(r: bridge.VerificationReport) -> str:
    status = "SKIP" if r.skipped else ("PASS" if r.success else "FAIL")
    line = f"{status} {r.theorem:9s} {r.category} T={','.join(r.tilting)} left={r.left_count} right={r.right_count}"
    if r.skipped:
        line += f" ({r.skipped})"
    for f in r.failures:
        line += f"\n    {f}"
    return line


def cmd_verify(args, out) -> int:
    theorems = _theorems(args)
    t = _category(args)
    if args.T is not None:
        tiltings = [parse_ids(t, args.T)]
    else:
        tiltings = tricat.enumerate_basic(t, "cluster_tilting")
    if t.serre is None:
        missing = [th for th in theorems if th in ("f_stable", "equi")]
        if missing and not args.all:
            raise CategoryError(f"{missing[0]} needs Serre data")
    reports = bridge.verify_many(t, tiltings, theorems)
    for r in reports:
        out.write(_report_line(r) + "\n")
    failed = sum(not r.success for r in reports)
    out.write(f"{len(reports)} reports, {failed} failed\n")
    return 1 if failed else 0


def build_report(categories) -> dict:
    entries = []
    for t in categories:
        for r in bridge.verify_many(t):
            entries.append(r.to_dict())
    return {
        "format": REPORT_FORMAT,
        "categories": [t.name for t in categories],
        "reports": entries,
        "failed": sum(not e["success"] for e in entries),
    }


def format_table(doc: dict) -> str:
    lines = [f"{'theorem':9s} {'category':10s} {'left':>5s} {'right':>5s} status  T"]
    for e in doc["reports"]:
        status = "skip" if e["skipped"] else ("pass" if e["success"] else "FAIL")
        lines.append(
            f"{e['theorem']:9s} {e['category']:10s} {e['left_count']:5d} {e['right_count']:5d} {status:6s}  {','.join(e['tilting'])}"
        )
    lines.append(f"{len(doc['reports'])} reports, {doc['failed']} failed")
    return "\n".join(lines) + "\n"


def cmd_report(args, out) -> int:
    if args.c:
        categories = [shipped(c) if c in SHIPPED and not Path(c).exists() else load(c) for c in args.c]
    else:
        categories = [shipped(name) for name in SHIPPED]
    doc = build_report(categories)
    text = json.dumps(doc, indent=1, sort_keys=True) + "\n" if args.format == "json" else format_table(doc)
    if args.o == "-":
        out.write(text)
    else:
        Path(args.o).write_text(text, encoding="utf-8")
        out.write(f"wrote {len(doc['reports'])} reports to {args.o}, {doc['failed']} failed\n")
    return 1 if doc["failed"] else 0


# -- parser -------------------------------------------------------------------


def _bool(v) -> str:
    return "n/a" if v is None else ("true" if v else "false")


def _require(args, *names) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ghostct", description="Ghost cluster tilting computations over exact rationals.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a category file")
    g.add_argument("family", choices=["cluster", "repetitive", "stable-nakayama"])
    g.add_argument("--n", type=int)
    g.add_argument("--a", type=int)
    g.add_argument("--b", type=int)
    g.add_argument("--simples", type=int)
    g.add_argument("--loewy", type=int)
    g.add_argument("--name")
    g.add_argument("-o", required=True, help="output file, or - for stdout")

    def with_category(name, help):
        s = sub.add_parser(name, help=help)
        s.add_argument("-c", required=True, help="category file or shipped example name")
        s.add_argument("--list-objects", action="store_true", help="print object names and exit")
        return s

    with_category("validate", help="check all axioms of a category file")
    s = with_category("predicates", help="print the ghost report of X relative to T")
    s.add_argument("-T", required=True)
    s.add_argument("-X", required=True)
    s = with_category("enumerate", help="list basic objects of a given kind")
    s.add_argument("-T")
    s.add_argument("--kind", required=True, choices=tricat.KINDS)
    s.add_argument("--limit", type=int)
    s = with_category("phi", help="module side image of X, or the inverse")
    s.add_argument("-T", required=True)
    s.add_argument("-X")
    s.add_argument("--inverse", metavar="SPEC", help='"M1,M2;E1,E2": objects giving the modules; summands of T in the kernel part')
    s = with_category("complete", help="Bongartz completions of a T[1]-rigid X")
    s.add_argument("-T", required=True)
    s.add_argument("-X", required=True)
    s = with_category("verify", help="check theorems extensionally")
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("-T")
    grp.add_argument("--all-tilting", action="store_true")
    th = s.add_mutually_exclusive_group(required=True)
    th.add_argument("--theorem", choices=bridge.THEOREMS)
    th.add_argument("--all", action="store_true")

    r = sub.add_parser("report", help="verify everything over several categories")
    r.add_argument("--format", choices=["json", "table"], default="table")
    r.add_argument("-o", default="-")
    r.add_argument("-c", action="append", help="category file or shipped name (repeatable; default all shipped)")
    return p


COMMANDS = {
    "gen": cmd_gen,
    "validate": cmd_validate,
    "predicates": cmd_predicates,
    "enumerate": cmd_enumerate,
    "phi": cmd_phi,
    "complete": cmd_complete,
    "verify": cmd_verify,
    "report": cmd_report,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        if "--list-objects" in argv:
            # other required flags are irrelevant here
            lister = argparse.ArgumentParser(prog="ghostct", add_help=False)
            lister.add_argument("-c", required=True)
            args, _ = lister.parse_known_args(argv)
        else:
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        if "--list-objects" in argv:
            t = _category(args)
            for k, name in enumerate(t.names):
                out.write(f"{k}\t{name}\n")
            return 0
        return COMMANDS[args.command](args, out)
    except (UsageError, CategoryFileError, CategoryError, ModuleError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"ghostct: error: {msg}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
