"""From a partition back to a group: realize the cells as orbits.

Any partition of a finite set is the orbit partition of a concrete
permutation group: the one generated by all transpositions of same-cell
pairs. That group is exactly the full cell-preserving group, so the
construction also gives a membership test and a counting cross-check
(product of cell factorials).
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import Optional

from .actions import GroupAction, Partition
from .errors import SizeLimitExceeded
from .groups import check_permutation, default_cap, from_generators


def cell_transpositions(partition: Partition, minimal: bool = False):
    """Generators for the cell-preserving group.

    All same-cell transpositions by default; with ``minimal`` only the
    adjacent ones within each sorted cell (same closure, fewer generators).
    """
    n = partition.degree
    gens = []
    for cell in partition.cells:
        if len(cell) < 2:
            continue
        if minimal:
            pairs = list(zip(cell, cell[1:]))
        else:
            pairs = [(x, y) for i, x in enumerate(cell) for y in cell[i + 1 :]]
        for x, y in pairs:
            images = list(range(n))
            images[x], images[y] = y, x
            gens.append(tuple(images))
    return gens


def realized_order(partition: Partition) -> int:
    """Product of cell factorials: the order of the full cell-preserving group."""
    out = 1
    for cell in partition.cells:
        out *= math.factorial(len(cell))
    return out


def group_from_partition(
    partition: Partition,
    minimal_generators: bool = False,
    cap: Optional[int] = None,
):
    """Build the transposition-generated group whose orbits are the cells.

    Returns (group, evaluation action). The group order is the product of
    cell factorials, checked against the cap before any closure work.
    """
    if cap is None:
        cap = default_cap()
    predicted = realized_order(partition)
    if predicted > cap:
        raise SizeLimitExceeded(
            f"realized group would have order {predicted}, above cap {cap}",
            cap=cap,
            reached=predicted,
        )
    gens = cell_transpositions(partition, minimal=minimal_generators)
    group, act = from_generators(partition.degree, gens, cap=cap)
    action = GroupAction(group, act)
    assert group.order == predicted
    assert action.orbits() == partition
    return group, action


def preserves_cells(partition: Partition, sigma) -> bool:
    """True iff sigma maps every cell onto itself."""
    sigma = check_permutation(sigma, partition.degree)
    cell_of = partition.cell_of
    return all(cell_of[sigma[x]] == cell_of[x] for x in range(partition.degree))


def count_cell_preserving(partition: Partition) -> int:
    """Brute-force count of cell-preserving permutations (n! scan; keep n small)."""
    cell_of = partition.cell_of
    n = partition.degree
    count = 0
    for sigma in permutations(range(n)):
        if all(cell_of[sigma[x]] == cell_of[x] for x in range(n)):
            count += 1
    return count
