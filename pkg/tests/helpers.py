"""Shared generators and independent oracles for the test suite."""

from fractions import Fraction

from orbitspace.actions import GroupAction
from orbitspace.scalars import GaussianRational
from orbitspace.spaces import PointFunction


def rand_fraction(rng, span=4):
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def rand_scalar(rng, span=4):
    return GaussianRational(rand_fraction(rng, span), rand_fraction(rng, span))


def rand_function(rng, degree, span=4):
    return PointFunction(rand_scalar(rng, span) for _ in range(degree))


def rand_invariant_values(rng, action: GroupAction, subgroup=None, span=4):
    """Random values constant on each orbit cell (of the subgroup if given)."""
    values = [None] * action.degree
    for cell in action.orbits(subgroup).cells:
        v = rand_scalar(rng, span)
        for x in cell:
            values[x] = v
    return PointFunction(values)


def rand_subgroup(rng, group, max_seeds=2):
    k = rng.randint(0, min(max_seeds, group.order))
    seeds = rng.sample(range(group.order), k)
    return group.subgroup_generated(seeds)


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


def orbit_count_oracle(action: GroupAction, members=None) -> int:
    """Orbit counter independent of the library's partition scan."""
    if members is None:
        members = range(action.group.order)
    uf = UnionFind(action.degree)
    for a in members:
        row = action.act[a]
        for x in range(action.degree):
            uf.union(x, row[x])
    return len({uf.find(x) for x in range(action.degree)})


def scalar_rank(rows):
    """Rank of a matrix of GaussianRational values by exact elimination."""
    matrix = [list(row) for row in rows]
    rank = 0
    cols = len(matrix[0]) if matrix else 0
    for col in range(cols):
        pivot = None
        for r in range(rank, len(matrix)):
            if not matrix[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = matrix[rank][col].inverse()
        matrix[rank] = [v * inv for v in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and not matrix[r][col].is_zero():
                factor = matrix[r][col]
                matrix[r] = [
                    v - factor * w for v, w in zip(matrix[r], matrix[rank])
                ]
        rank += 1
    return rank
