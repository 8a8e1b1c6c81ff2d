"""Partition-to-group construction and the cell-preserving membership test."""

import math

import pytest

from orbitspace.actions import Partition
from orbitspace.errors import NotAPermutation, SizeLimitExceeded
from orbitspace.groups import group_from_table
from orbitspace.partitions import (
    cell_transpositions,
    count_cell_preserving,
    group_from_partition,
    preserves_cells,
    realized_order,
)


def set_partitions(items):
    """All partitions of a list, as lists of lists."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def all_partitions(n):
    return [Partition(n, cells) for cells in set_partitions(list(range(n)))]


def test_singletons_give_trivial_group():
    p = Partition(3, [[0], [1], [2]])
    group, action = group_from_partition(p)
    assert group.order == 1
    assert action.is_trivial()
    assert cell_transpositions(p) == []


def test_single_pair():
    p = Partition(2, [[0, 1]])
    group, action = group_from_partition(p)
    assert group.order == 2
    assert action.orbit(0) == (0, 1)


def test_two_cells_example():
    p = Partition(5, [[0, 1, 2], [3, 4]])
    group, action = group_from_partition(p)
    assert group.order == 12 == math.factorial(3) * math.factorial(2)
    assert action.orbits() == p


def test_round_trip_all_partitions_up_to_five():
    for n in range(1, 6):
        for p in all_partitions(n):
            group, action = group_from_partition(p)
            assert action.orbits() == p
            assert group.order == realized_order(p)
            for row in action.act:
                assert preserves_cells(p, row)


def test_minimal_generators_same_group():
    p = Partition(6, [[0, 2, 4], [1, 3], [5]])
    full_group, full_action = group_from_partition(p)
    min_group, min_action = group_from_partition(p, minimal_generators=True)
    assert full_group.order == min_group.order
    assert set(full_action.act) == set(min_action.act)
    assert len(cell_transpositions(p, minimal=True)) < len(cell_transpositions(p))


def test_generated_group_validates():
    p = Partition(4, [[0, 1], [2, 3]])
    group, _ = group_from_partition(p)
    group_from_table(group.mul_table)


def test_cap_blocks_factorial_blowup():
    p = Partition(6, [[0, 1, 2, 3, 4, 5]])
    with pytest.raises(SizeLimitExceeded) as exc:
        group_from_partition(p, cap=100)
    assert exc.value.witness["reached"] == 720


def test_preserves_cells_examples():
    p = Partition(3, [[0, 1], [2]])
    assert preserves_cells(p, [0, 1, 2])
    assert preserves_cells(p, [1, 0, 2])
    assert not preserves_cells(p, [0, 2, 1])
    with pytest.raises(NotAPermutation):
        preserves_cells(p, [0, 0, 1])


def test_counting_matches_formula_up_to_five():
    for n in range(1, 6):
        for p in all_partitions(n):
            assert count_cell_preserving(p) == realized_order(p)


def test_composition_with_dimension_count():
    for cells in ([[0, 1], [2, 3, 4]], [[0], [1, 2]], [[0, 1, 2, 3]]):
        n = sum(len(c) for c in cells)
        p = Partition(n, cells)
        _, action = group_from_partition(p)
        assert action.burnside_dimension() == len(p.cells)
