"""Command line: build catalog surfaces, verify PEC files, query chromatic numbers, export.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 unreadable input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import pec
from .chromatic import ClosedSurfaceId, relative_chromatic
from .complex import boundary_cycles, embedding_problems, euler_characteristic, validate_surface
from .constructions import CORE_NAMES, build_catalog
from .tightness import is_tight_surface, oracle_seed, theorem1_audit, tpp_oracle

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _plain(x):
    """Make witnesses JSON-friendly; rationals become exact strings."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    return x


def verify_report(e, with_oracle: bool = False) -> tuple[dict, bool]:
    report: dict = {
        "dimension": e.dimension,
        "euler": euler_characteristic(e.surface),
        "failures": [],
    }
    try:
        st = validate_surface(e.surface)
    except ValueError as exc:
        report["failures"].append({"check": "surface", "message": str(exc)})
        return report, False
    report["surface_type"] = {
        "orientable": st.orientable,
        "genus": st.genus,
        "boundary_components": st.boundary_components,
        "description": str(st),
    }
    problems = embedding_problems(e)
    if problems:
        report["failures"] += [{"check": "embedded", "message": m} for m in problems]
        return report, False
    v = is_tight_surface(e)
    on_boundary = {x for c in boundary_cycles(e.surface) for x in c}
    report.update(
        substantial=v.substantial,
        zero_tight=v.zero_tight,
        tight=v.tight,
        vertices_on_boundary=len(on_boundary) == e.surface.num_vertices,
    )
    report["failures"] += [{"check": "tightness", **_plain(w)} for w in v.witnesses]
    ok = v.tight and v.substantial
    if ok and st.boundary_components >= 1:
        audit = theorem1_audit(e, ClosedSurfaceId(st.orientable, st.genus), st.boundary_components, v)
        report["theorem1"] = {
            "n": audit.n,
            "c0_lower": audit.c0_lower,
            "c0_upper": audit.c0_upper,
            "c0_exact": audit.c0_exact,
            "passed": audit.passed,
            "subdivision_witness": audit.subdivision,
        }
        if not audit.passed:
            step = audit.failed_step
            report["failures"].append({"check": f"theorem1 step {step.step}", "detail": _plain(step.detail)})
            ok = False
    if with_oracle:
        seed = oracle_seed()
        try:
            verdict, witness = tpp_oracle(e, seed=seed)
        except ValueError as exc:
            report["oracle"] = {"seed": seed, "error": str(exc)}
            report["failures"].append({"check": "oracle", "message": str(exc)})
            return report, False
        agrees = verdict == v.zero_tight
        report["oracle"] = {"seed": seed, "two_piece": verdict, "agrees": agrees, "witness": _plain(witness)}
        if not agrees:
            report["failures"].append({"check": "oracle", "message": "oracle disagrees with the skeleton checker"})
            ok = False
    return report, ok


def cmd_build(args) -> int:
    try:
        e, entry = build_catalog(args.name)
    except KeyError as exc:
        raise UsageError(f"{exc.args[0]}; known names include {', '.join(CORE_NAMES)}") from None
    text = pec.dumps(e, [f"{entry.name}: {entry.expected}, p = {entry.p}", f"route: {entry.route}"])
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    e = _load(args.input)
    try:
        report, ok = verify_report(e, args.oracle)
    except ValueError as exc:
        report, ok = {"failures": [{"check": "input", "message": str(exc)}]}, False
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_chromatic(args) -> int:
    if args.p < 1:
        raise UsageError("p must be at least 1")
    if args.crosscaps is not None:
        if args.orientable or args.genus is not None:
            raise UsageError("give either --crosscaps or --orientable --genus")
        if args.crosscaps < 1:
            raise UsageError("crosscap count must be at least 1")
        s = ClosedSurfaceId(False, args.crosscaps)
    else:
        if not args.orientable or args.genus is None or args.genus < 0:
            raise UsageError("give --orientable --genus G or --crosscaps K")
        s = ClosedSurfaceId(True, args.genus)
    print(relative_chromatic(s, args.p).describe())
    return EXIT_OK


def cmd_export(args) -> int:
    e = _load(args.input)
    if args.format == "json":
        text = pec.to_json(e)
    else:
        project = None
        if args.project:
            try:
                project = [int(x) for x in args.project.split(",")]
            except ValueError:
                raise UsageError("--project takes comma-separated axis numbers") from None
        try:
            text = pec.to_off(e, args.precision, project)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(text, args.output)
    return EXIT_OK


class _ParseFailure(Exception):
    pass


def _load(path):
    try:
        return pec.read(path)
    except (OSError, ValueError) as exc:
        raise _ParseFailure(f"{path}: {exc}") from None


def _emit(text: str, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tightsurf", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write a catalog surface as PEC")
    b.add_argument("name")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="certify a PEC file and print a JSON report")
    v.add_argument("input")
    v.add_argument("--oracle", action="store_true", help="also run the half-space oracle")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("chromatic", help="relative chromatic number of a surface with holes")
    c.add_argument("--orientable", action="store_true")
    c.add_argument("--genus", type=int)
    c.add_argument("--crosscaps", type=int)
    c.add_argument("-p", type=int, required=True, help="number of holes")
    c.set_defaults(func=cmd_chromatic)

    x = sub.add_parser("export", help="export a PEC file as OFF or JSON")
    x.add_argument("input")
    x.add_argument("--format", choices=("off", "json"), default="off")
    x.add_argument("--precision", type=int, default=12)
    x.add_argument("--project", help="three comma-separated axes for OFF output")
    x.add_argument("-o", "--output")
    x.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tightsurf: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _ParseFailure as exc:
        print(f"tightsurf: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
