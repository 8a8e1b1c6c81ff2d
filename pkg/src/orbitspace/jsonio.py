"""JSON schemas for groups, actions, functions, subsets, and partitions.

Scalars travel as pairs of reduced fraction strings, so every report stays
exact and byte-stable. Parsing is strict: anything off-schema raises
``ParseError`` with the offending location in the witness.
"""

from __future__ import annotations

from typing import Optional

from .actions import GroupAction, Partition, validate_action
from .errors import ParseError
from .groups import FiniteGroup, from_generators, group_from_table
from .resind import InvariantSubset, SubsetFunction
from .scalars import GaussianRational
from .spaces import PointFunction


def _expect(obj, key, kinds, where):
    if not isinstance(obj, dict):
        raise ParseError(f"{where} must be an object", where=where)
    if key not in obj:
        raise ParseError(f"{where} is missing {key!r}", where=where, missing=key)
    value = obj[key]
    if kinds is not None and not isinstance(value, kinds):
        raise ParseError(
            f"{where}.{key} has the wrong type", where=where, key=key
        )
    return value


def _int_list(value, where):
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise ParseError(f"{where} must be a list of integers", where=where)
    return value


def scalar_from_json(value, where="scalar") -> GaussianRational:
    try:
        return GaussianRational.from_pair(value)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}", where=where, **exc.witness) from None


def scalar_to_json(value: GaussianRational) -> list:
    return value.to_pair()


def rational_to_json(value) -> str:
    return str(value)


def group_from_json(obj, cap: Optional[int] = None):
    """Returns (group, evaluation_act_or_None)."""
    kind = _expect(obj, "kind", str, "group")
    if kind == "table":
        mul = _expect(obj, "mul", list, "group")
        labels = obj.get("labels")
        return group_from_table(mul, labels=labels), None
    if kind == "permutation":
        degree = _expect(obj, "degree", int, "group")
        gens = _expect(obj, "generators", list, "group")
        for i, gen in enumerate(gens):
            _int_list(gen, f"group.generators[{i}]")
        return from_generators(degree, gens, cap=cap)
    raise ParseError(f"unknown group kind {kind!r}", kind=kind)


def group_to_json(group: FiniteGroup) -> dict:
    doc = {"kind": "table", "mul": [list(row) for row in group.mul_table]}
    if group.labels is not None:
        doc["labels"] = list(group.labels)
    return doc


def action_from_json(obj, cap: Optional[int] = None) -> GroupAction:
    group_obj = _expect(obj, "group", dict, "action")
    group, evaluation = group_from_json(group_obj, cap=cap)
    if obj.get("kind") == "evaluation":
        if evaluation is None:
            raise ParseError(
                "evaluation actions need a permutation-form group", kind="evaluation"
            )
        return GroupAction(group, evaluation)
    act = _expect(obj, "act", list, "action")
    for i, row in enumerate(act):
        _int_list(row, f"action.act[{i}]")
    degree = obj.get("degree")
    if degree is not None and act and len(act[0]) != degree:
        raise ParseError(
            f"declared degree {degree} does not match table width {len(act[0])}",
            degree=degree,
            width=len(act[0]),
        )
    return validate_action(group, act)


def action_to_json(action: GroupAction) -> dict:
    return {
        "group": group_to_json(action.group),
        "degree": action.degree,
        "act": [list(row) for row in action.act],
    }


def function_from_json(obj, degree: Optional[int] = None) -> PointFunction:
    values = _expect(obj, "values", list, "function")
    f = PointFunction(
        scalar_from_json(v, where=f"function.values[{i}]") for i, v in enumerate(values)
    )
    if degree is not None and f.degree != degree:
        raise ParseError(
            f"function has {f.degree} values, expected {degree}",
            values=f.degree,
            degree=degree,
        )
    return f


def function_to_json(f: PointFunction) -> dict:
    return {"values": [scalar_to_json(v) for v in f.values]}


def subset_function_from_json(obj, subset: InvariantSubset) -> SubsetFunction:
    values = _expect(obj, "values", list, "function")
    declared = obj.get("subset")
    if declared is not None:
        declared = _int_list(declared, "function.subset")
        if tuple(sorted(declared)) != subset.points:
            raise ParseError(
                "function.subset does not match the requested subset",
                declared=sorted(declared),
                subset=list(subset.points),
            )
    vals = [
        scalar_from_json(v, where=f"function.values[{i}]") for i, v in enumerate(values)
    ]
    if len(vals) != subset.size:
        raise ParseError(
            f"function has {len(vals)} values, subset has {subset.size} points",
            values=len(vals),
            size=subset.size,
        )
    return SubsetFunction(subset, vals)


def subset_function_to_json(g: SubsetFunction) -> dict:
    return {
        "subset": list(g.subset.points),
        "values": [scalar_to_json(v) for v in g.values],
    }


def partition_from_json(obj) -> Partition:
    degree = _expect(obj, "degree", int, "partition")
    cells = _expect(obj, "cells", list, "partition")
    for i, cell in enumerate(cells):
        _int_list(cell, f"partition.cells[{i}]")
    try:
        return Partition(degree, cells)
    except ValueError as exc:
        raise ParseError(f"invalid partition: {exc}", degree=degree) from None


def partition_to_json(p: Partition) -> dict:
    return {"degree": p.degree, "cells": [list(c) for c in p.cells]}
