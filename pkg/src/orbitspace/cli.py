"""Command-line interface: JSON in, JSON out, deterministic byte-for-byte.

Every command reads schema-checked JSON, runs one analysis, and emits a
canonical report (sorted keys, two-space indent, trailing newline). Exit
codes: 0 success, 2 a named invariant failed (the report carries the error
kind and witness), 3 unparseable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus as corpus_mod
from .actions import are_equivalent
from .errors import OrbitspaceError, ParseError
from .groups import default_cap
from .jsonio import (
    action_from_json,
    action_to_json,
    function_from_json,
    function_to_json,
    partition_from_json,
    rational_to_json,
    scalar_to_json,
    subset_function_from_json,
)
from .partitions import (
    cell_transpositions,
    group_from_partition,
    preserves_cells,
)
from .resind import invariant_subset, reciprocity_check
from .spaces import (
    bessel_check,
    decompose,
    fourier_coefficients,
    fourier_projection,
    is_invariant,
    value_sum,
)


def _read_json(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}", path=path) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}", path=path) from None


def _render(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _emit(doc, output: str | None):
    text = _render(doc)
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _parse_int_csv(text: str, flag: str):
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ParseError(f"{flag} expects comma-separated integers, got {text!r}", flag=flag) from None


def _single_input(args):
    if not args.input or len(args.input) != 1:
        raise ParseError("this command takes exactly one --input file")
    return _read_json(args.input[0])


def _load_action(args):
    return action_from_json(_single_input(args), cap=args.cap)


def _load_subgroup(action, args):
    if args.subgroup is None:
        return None
    seeds = _parse_int_csv(args.subgroup, "--subgroup")
    for a in seeds:
        if a < 0 or a >= action.group.order:
            raise ParseError(
                f"--subgroup element {a} out of range 0..{action.group.order - 1}",
                element=a,
            )
    return action.group.subgroup_generated(seeds)


def _load_function(args, action, position: int = 0):
    if not args.function or len(args.function) <= position:
        raise ParseError("missing --function file")
    return function_from_json(_read_json(args.function[position]), degree=action.degree)


# ---------------------------------------------------------------------------
# commands


def _cmd_validate(args):
    action = _load_action(args)
    return {
        "valid": True,
        "group_order": action.group.order,
        "degree": action.degree,
    }


def _cmd_orbits(args):
    action = _load_action(args)
    part = action.orbits()
    return {
        "orbit_count": len(part),
        "cells": [list(c) for c in part.cells],
        "orbit_sizes": [len(c) for c in part.cells],
    }


def _cmd_dimension(args):
    action = _load_action(args)
    h = _load_subgroup(action, args)
    sub = h if h is not None else None
    dim = action.burnside_dimension(sub)
    members = sub.members if sub is not None else range(action.group.order)
    total = sum(len(action.fix(a)) for a in members)
    return {
        "dim": int(dim),
        "burnside_sum": total,
        "group_order": action.group.order,
        "subgroup_order": len(list(members)),
    }


def _cmd_free_check(args):
    action = _load_action(args)
    doc = {"is_free": action.is_free()}
    violation = action._free_violation()
    if violation is not None:
        doc["witness"] = {"element": violation[0], "point": violation[1]}
    if args.subgroup is not None:
        h = _load_subgroup(action, args)
        ratio, index = action.free_ratio_check(h)
        doc["ratio"] = rational_to_json(ratio)
        doc["index"] = index
    return doc


def _cmd_fourier(args):
    action = _load_action(args)
    f = _load_function(args, action)
    entries = fourier_coefficients(action, f)
    return {
        "projection": function_to_json(fourier_projection(action, f)),
        "coefficients": [
            {
                "cell": list(entry.cell),
                "raw_sum": scalar_to_json(entry.raw_sum),
                "coef_norm_sq": rational_to_json(entry.coef_norm_sq),
            }
            for entry in entries
        ],
        "is_invariant": is_invariant(action, f) is not None,
    }


def _cmd_bessel(args):
    action = _load_action(args)
    f = _load_function(args, action)
    lhs, rhs = bessel_check(action, f)
    return {
        "lhs": rational_to_json(lhs),
        "rhs": rational_to_json(rhs),
        "equal": lhs == rhs,
        "is_invariant": is_invariant(action, f) is not None,
    }


def _cmd_decompose(args):
    action = _load_action(args)
    f = _load_function(args, action)
    parts = decompose(action, f)
    return {
        "invariant_part": function_to_json(parts.invariant_part),
        "perp_part": function_to_json(parts.perp_part),
        "mean_part": function_to_json(parts.mean_part),
        "zero_sum_part": function_to_json(parts.zero_sum_part),
        "value_sum": scalar_to_json(value_sum(f)),
    }


def _cmd_reciprocity(args):
    action = _load_action(args)
    if args.subset is None:
        raise ParseError("reciprocity needs --subset")
    subset = invariant_subset(action, _parse_int_csv(args.subset, "--subset"))
    if not args.function or len(args.function) != 2:
        raise ParseError(
            "reciprocity needs two --function files: first on the subset, then on all points"
        )
    f = subset_function_from_json(_read_json(args.function[0]), subset)
    g = function_from_json(_read_json(args.function[1]), degree=action.degree)
    lhs, rhs = reciprocity_check(subset, f, g)
    return {
        "lhs": scalar_to_json(lhs),
        "rhs": scalar_to_json(rhs),
        "equal": lhs == rhs,
        "subset": list(subset.points),
    }


def _cmd_from_partition(args):
    partition = partition_from_json(_single_input(args))
    group, action = group_from_partition(
        partition, minimal_generators=args.minimal_generators, cap=args.cap
    )
    gens = cell_transpositions(partition, minimal=args.minimal_generators)
    orbit_part = action.orbits()
    membership_ok = all(preserves_cells(partition, row) for row in action.act)
    return {
        "order": group.order,
        "degree": partition.degree,
        "generators": [list(g) for g in gens],
        "orbit_cells": [list(c) for c in orbit_part.cells],
        "round_trip": "ok" if orbit_part == partition else "mismatch",
        "cell_preserving_membership": "ok" if membership_ok else "violated",
    }


def _cmd_equivalence(args):
    if not args.input or len(args.input) != 2:
        raise ParseError("equivalence takes exactly two --input files")
    a1 = action_from_json(_read_json(args.input[0]), cap=args.cap)
    a2 = action_from_json(_read_json(args.input[1]), cap=args.cap)
    phi = are_equivalent(a1, a2)
    return {
        "equivalent": phi is not None,
        "bijection": phi if phi is not None else None,
    }


def _parse_param(text: str):
    if "=" not in text:
        raise ParseError(f"--param expects key=value, got {text!r}", param=text)
    key, raw = text.split("=", 1)
    value: object
    if raw.lower() in ("true", "false"):
        value = raw.lower() == "true"
    elif raw.lstrip("-").isdigit():
        value = int(raw)
    elif "," in raw and all(p.lstrip("-").isdigit() for p in raw.split(",") if p):
        value = [int(p) for p in raw.split(",") if p]
    else:
        value = raw
    return key, value


def _cmd_corpus(args):
    if args.corpus_command == "list":
        return {"names": corpus_mod.corpus_names()}
    params = dict(_parse_param(p) for p in (args.param or []))
    entry = corpus_mod.build(args.name, **params)
    doc = action_to_json(entry.action)
    doc.update(
        {
            "name": entry.name,
            "params": entry.params,
            "expected": entry.expected,
            "divisibility": entry.divisibility(),
        }
    )
    return doc


# ---------------------------------------------------------------------------
# wiring


def _add_io(sub, functions=0):
    sub.add_argument("--input", action="append", help="input JSON file")
    sub.add_argument("--output", help="write the report here instead of stdout")
    sub.add_argument("--cap", type=int, default=None, help="closure size cap")
    if functions:
        sub.add_argument("--function", action="append", help="function JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitspace",
        description="Exact analysis of finite group actions and their invariant function spaces.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("validate", help="check a group action table")
    _add_io(sub)
    sub.set_defaults(run=_cmd_validate)

    sub = subs.add_parser("orbits", help="orbit partition of an action")
    _add_io(sub)
    sub.set_defaults(run=_cmd_orbits)

    sub = subs.add_parser("dimension", help="invariant-space dimension by fixed-point count")
    _add_io(sub)
    sub.add_argument("--subgroup", help="comma-separated generating elements")
    sub.set_defaults(run=_cmd_dimension)

    sub = subs.add_parser("free-check", help="freeness, and the dimension ratio for a subgroup")
    _add_io(sub)
    sub.add_argument("--subgroup", help="comma-separated generating elements")
    sub.set_defaults(run=_cmd_free_check)

    sub = subs.add_parser("fourier", help="orbit-average projection and coefficients")
    _add_io(sub, functions=1)
    sub.set_defaults(run=_cmd_fourier)

    sub = subs.add_parser("bessel", help="both sides of the projection norm inequality")
    _add_io(sub, functions=1)
    sub.set_defaults(run=_cmd_bessel)

    sub = subs.add_parser("decompose", help="orthogonal splittings of a function")
    _add_io(sub, functions=1)
    sub.set_defaults(run=_cmd_decompose)

    sub = subs.add_parser("reciprocity", help="adjointness of induction and restriction")
    _add_io(sub, functions=2)
    sub.add_argument("--subset", help="comma-separated points of the invariant subset")
    sub.set_defaults(run=_cmd_reciprocity)

    sub = subs.add_parser("from-partition", help="realize partition cells as orbits")
    _add_io(sub)
    sub.add_argument(
        "--minimal-generators",
        action="store_true",
        help="use adjacent transpositions within each cell",
    )
    sub.set_defaults(run=_cmd_from_partition)

    sub = subs.add_parser("equivalence", help="search for an equivariant bijection")
    _add_io(sub)
    sub.set_defaults(run=_cmd_equivalence)

    sub = subs.add_parser("corpus", help="ready-made example actions")
    corpus_subs = sub.add_subparsers(dest="corpus_command", required=True)
    sub_list = corpus_subs.add_parser("list", help="list corpus names")
    sub_list.add_argument("--output")
    sub_list.set_defaults(run=_cmd_corpus, param=None, name=None)
    sub_build = corpus_subs.add_parser("build", help="build one corpus entry")
    sub_build.add_argument("name")
    sub_build.add_argument("--param", action="append", help="key=value, repeatable")
    sub_build.add_argument("--output")
    sub_build.set_defaults(run=_cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "cap", None) is None and hasattr(args, "cap"):
        args.cap = default_cap()
    output = getattr(args, "output", None)
    try:
        doc = args.run(args)
    except ParseError as exc:
        _emit({"error": exc.kind, "message": str(exc), "witness": exc.witness}, output)
        return 3
    except OrbitspaceError as exc:
        _emit({"error": exc.kind, "message": str(exc), "witness": exc.witness}, output)
        return 2
    _emit(doc, output)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
