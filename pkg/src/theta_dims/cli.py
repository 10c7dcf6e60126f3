"""Command-line front end: dims, lens-table, classes, verify."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import chartab, groups, lens, oracle, perm, verify
from .errors import (
    MixedRadicand,
    NonRealValue,
    NotAGroup,
    OrthogonalityViolation,
    ParseError,
    ThetaDimsError,
    TooLarge,
)

USAGE_EXIT = 2
FORMATS = ("text", "csv", "json")
METHODS = ("perm", "chartab", "orbit", "reynolds", "closed-form")

LENS_CSV_HEADER = "n,odd_group_algebra,even_group_algebra,odd_aug_kernel,even_aug_kernel"


class UsageError(Exception):
    pass


def _to_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _workers_from_env() -> int:
    raw = os.environ.get("THETA_DIMS_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        raise UsageError(f"THETA_DIMS_THREADS must be an integer, got {raw!r}")


def parse_group_spec(spec: str) -> groups.GroupTable:
    """cyclic:N, sl2:P, or cayley:FILE (JSON {order, mul})."""
    kind, _, arg = spec.partition(":")
    if not arg:
        raise UsageError(f"group spec needs a parameter, got {spec!r}")
    if kind == "cyclic":
        return groups.make_cyclic(int(arg))
    if kind == "sl2":
        return groups.make_sl2(int(arg))
    if kind == "cayley":
        try:
            raw = json.loads(Path(arg).read_text())
            order, mul = int(raw["order"]), raw["mul"]
        except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"cannot read Cayley table {arg!r}: {exc}")
        if len(mul) != order:
            raise UsageError(f"Cayley table has {len(mul)} rows, order says {order}")
        return groups.make_from_cayley(mul)
    raise UsageError(f"unknown group kind {kind!r} (use cyclic:, sl2:, cayley:)")


def _resolve_convention(method: str, convention: str | None) -> str:
    # basis-level inversion is the definition every permutation-style path
    # implements; the flip form exists only on the character-table path
    if convention is None:
        return chartab.FLIP if method == "chartab" else chartab.INVERSION
    if convention == chartab.FLIP and method != "chartab":
        raise UsageError(f"method {method} computes the inversion convention only")
    return convention


def _char_table_for(args) -> chartab.CharTable:
    if args.char_table:
        return chartab.load_char_table(args.char_table)
    if args.group == "sl2:5":
        return chartab.builtin_sl2f5_table()
    raise UsageError("method chartab needs --char-table FILE (builtin only for sl2:5)")


def _compute_dims(args) -> int:
    method = args.method
    convention = _resolve_convention(method, args.convention)
    symmetry = args.symmetry
    started = time.perf_counter()
    if method == "chartab":
        table = _char_table_for(args)
        if symmetry == perm.FULL:
            value = chartab.dim_invariants_chartab(table, args.module, args.parity, convention)
        else:
            part = chartab.diagonal_part(table, args.module, args.parity)
            if part.denominator != 1:
                raise ThetaDimsError(f"diagonal part {part} is not an integer")
            value = int(part)
    else:
        G = parse_group_spec(args.group)
        if method == "perm":
            value = perm.dim_invariants_perm(
                G, args.module, args.parity, symmetry, workers=_workers_from_env()
            )
        elif method == "orbit":
            if args.module != perm.GROUP_ALGEBRA:
                raise UsageError("method orbit supports the group algebra only")
            value = oracle.dim_invariants_orbit(G, args.parity, symmetry)
        elif method == "reynolds":
            if symmetry != perm.FULL:
                raise UsageError("method reynolds computes the full symmetry only")
            value = oracle.dim_invariants_reynolds(
                G, args.module, args.parity, order_limit=args.reynolds_limit
            )
        else:  # closed-form
            if not args.group.startswith("cyclic:"):
                raise UsageError("method closed-form applies to cyclic groups only")
            if symmetry != perm.FULL:
                raise UsageError("method closed-form computes the full symmetry only")
            d = lens.lens_dims(G.order)
            value = {
                (perm.GROUP_ALGEBRA, perm.ODD): d.odd_group_algebra,
                (perm.GROUP_ALGEBRA, perm.EVEN): d.even_group_algebra,
                (perm.AUG_KERNEL, perm.ODD): d.odd_aug_kernel,
                (perm.AUG_KERNEL, perm.EVEN): d.even_aug_kernel,
            }[(args.module, args.parity)]
    elapsed = time.perf_counter() - started

    record = {
        "group": args.group,
        "module": args.module,
        "parity": args.parity,
        "symmetry": symmetry,
        "method": method,
        "convention": convention,
        "dimension": value,
    }
    if args.format == "json":
        sys.stdout.write(_to_json(record))
    elif args.format == "csv":
        keys = ["group", "module", "parity", "symmetry", "method", "convention", "dimension"]
        print(",".join(keys))
        print(",".join(str(record[k]) for k in keys))
    else:
        print(
            f"group={args.group} module={args.module} parity={args.parity} "
            f"symmetry={symmetry} method={method} convention={convention}"
        )
        print(f"dimension: {value}")
        print(f"elapsed: {elapsed:.3f}s")
    return 0


def _cmd_lens_table(args) -> int:
    rows = [lens.lens_dims(n) for n in range(1, args.max_n + 1)]
    if args.format == "json":
        sys.stdout.write(
            _to_json(
                [
                    {
                        "n": r.n,
                        "odd_group_algebra": r.odd_group_algebra,
                        "even_group_algebra": r.even_group_algebra,
                        "odd_aug_kernel": r.odd_aug_kernel,
                        "even_aug_kernel": r.even_aug_kernel,
                    }
                    for r in rows
                ]
            )
        )
        return 0
    if args.format == "csv":
        print(LENS_CSV_HEADER)
        for r in rows:
            print(
                f"{r.n},{r.odd_group_algebra},{r.even_group_algebra},"
                f"{r.odd_aug_kernel},{r.even_aug_kernel}"
            )
        return 0
    print(f"{'n':>3} {'odd C[pi]':>10} {'even C[pi]':>11} {'odd Ker':>8} {'even Ker':>9}")
    for r in rows:
        print(
            f"{r.n:>3} {r.odd_group_algebra:>10} {r.even_group_algebra:>11} "
            f"{r.odd_aug_kernel:>8} {r.even_aug_kernel:>9}"
        )
    return 0


def _cmd_classes(args) -> int:
    G = parse_group_spec(args.group)
    cd = groups.conjugacy_classes(G)
    p2 = groups.class_power_map(G, cd, 2)
    p3 = groups.class_power_map(G, cd, 3)
    inv_perm, orbit_count = groups.inversion_on_classes(G, cd)
    rows = [
        {
            "class": c,
            "representative": G.label(cd.reps[c]),
            "size": cd.sizes[c],
            "square_class": p2[c],
            "cube_class": p3[c],
            "inverse_class": inv_perm[c],
        }
        for c in range(cd.num_classes)
    ]
    if args.format == "json":
        sys.stdout.write(
            _to_json({"group": args.group, "classes": rows, "inversion_orbits": orbit_count})
        )
        return 0
    if args.format == "csv":
        keys = ["class", "representative", "size", "square_class", "cube_class", "inverse_class"]
        print(",".join(keys))
        for row in rows:
            print(",".join(str(row[k]) for k in keys))
        return 0
    print(f"group={args.group} classes={cd.num_classes} inversion_orbits={orbit_count}")
    for row in rows:
        print(
            f"class {row['class']}: rep {row['representative']} size {row['size']} "
            f"square->{row['square_class']} cube->{row['cube_class']} "
            f"inverse->{row['inverse_class']}"
        )
    return 0


def _cmd_verify(args) -> int:
    ok, lines = verify.run_suite(
        args.suite, with_orbit_check=args.with_orbit_check, fixture_path=args.fixture
    )
    for line in lines:
        print(line)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="theta-dims",
        description="Exact invariant dimensions of cubic tensors over finite group algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dims = sub.add_parser("dims", help="compute one invariant dimension")
    dims.add_argument("--group", required=True, help="cyclic:N | sl2:P | cayley:FILE")
    dims.add_argument("--module", choices=perm.MODULES, default=perm.GROUP_ALGEBRA)
    dims.add_argument("--parity", choices=perm.PARITIES, required=True)
    dims.add_argument("--symmetry", choices=perm.SYMMETRIES, default=perm.FULL)
    dims.add_argument("--method", choices=METHODS, default="perm")
    dims.add_argument("--convention", choices=chartab.CONVENTIONS, default=None)
    dims.add_argument("--char-table", help="character table JSON for method chartab")
    dims.add_argument(
        "--reynolds-limit",
        type=int,
        default=oracle.REYNOLDS_ORDER_LIMIT,
        help="order guard for the projector method",
    )
    dims.add_argument("--format", choices=FORMATS, default="text")
    dims.set_defaults(func=_compute_dims)

    lens_table = sub.add_parser("lens-table", help="table of cyclic-group dimensions")
    lens_table.add_argument("--max-n", type=int, default=15)
    lens_table.add_argument("--format", choices=FORMATS, default="text")
    lens_table.set_defaults(func=_cmd_lens_table)

    classes = sub.add_parser("classes", help="conjugacy classes with power maps")
    classes.add_argument("--group", required=True, help="cyclic:N | sl2:P | cayley:FILE")
    classes.add_argument("--format", choices=FORMATS, default="text")
    classes.set_defaults(func=_cmd_classes)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", nargs="?", choices=verify.SUITES, default="all")
    ver.add_argument(
        "--with-orbit-check",
        action="store_true",
        help="also confirm the big-group values by orbit counting (slow)",
    )
    ver.add_argument("--fixture", help="element fixture JSON (default: packaged copy)")
    ver.set_defaults(func=_cmd_verify)
    return parser


_INPUT_ERRORS = (
    UsageError,
    ValueError,
    ParseError,
    NotAGroup,
    TooLarge,
    MixedRadicand,
    NonRealValue,
    OrthogonalityViolation,
)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ThetaDimsError as exc:
        # internal consistency traps, never valid input
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
