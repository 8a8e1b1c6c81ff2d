"""Group actions on finite point sets.

A ``GroupAction`` is a validated m x n table act[a][x] = a.x over a
``FiniteGroup``. This module provides orbit/fixed-point/stabilizer scans,
the Cauchy-Frobenius dimension count for the space of invariant functions,
its consequences for free actions, and an equivariant-bijection search for
deciding when two actions of the same group are the same up to relabeling.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    CompatibilityViolated,
    IdentityAxiomViolated,
    NotAnInteger,
    NotFree,
)
from .groups import FiniteGroup, Subgroup, whole_group


class Partition:
    """Disjoint nonempty sorted cells covering 0..degree-1.

    Cells are ordered by smallest member; ``cell_of[x]`` gives the index of
    the cell containing x. This fixed ordering makes every downstream report
    deterministic.
    """

    __slots__ = ("degree", "cells", "cell_of")

    def __init__(self, degree: int, cells: Sequence[Sequence[int]]):
        norm = [tuple(sorted(set(int(x) for x in cell))) for cell in cells]
        for cell in norm:
            if not cell:
                raise ValueError("empty cell in partition")
        norm.sort(key=lambda c: c[0])
        cell_of = [None] * degree
        for i, cell in enumerate(norm):
            for x in cell:
                if x < 0 or x >= degree:
                    raise ValueError(f"point {x} out of range 0..{degree - 1}")
                if cell_of[x] is not None:
                    raise ValueError(f"point {x} appears in two cells")
                cell_of[x] = i
        if any(c is None for c in cell_of):
            missing = next(x for x, c in enumerate(cell_of) if c is None)
            raise ValueError(f"point {missing} not covered by any cell")
        self.degree = degree
        self.cells = tuple(norm)
        self.cell_of = tuple(cell_of)

    def __len__(self):
        return len(self.cells)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.degree == other.degree and self.cells == other.cells

    def __hash__(self):
        return hash((self.degree, self.cells))

    def __repr__(self):
        return f"Partition({list(map(list, self.cells))})"


class GroupAction:
    """A finite group acting on points 0..degree-1 via a full table.

    The constructor runs the cheap axioms (identity row, every row a
    permutation); use ``validate_action`` for untrusted tables, which adds
    the full compatibility loop act[ab][x] = act[a][act[b][x]].
    """

    __slots__ = ("group", "degree", "act")

    def __init__(self, group: FiniteGroup, act: Sequence[Sequence[int]]):
        self.group = group
        self.act = tuple(tuple(int(x) for x in row) for row in act)
        if len(self.act) != group.order:
            raise CompatibilityViolated(
                f"action table has {len(self.act)} rows, group order is {group.order}",
                rows=len(self.act),
                order=group.order,
            )
        if not self.act or not self.act[0]:
            raise IdentityAxiomViolated("point set must be nonempty", degree=0)
        self.degree = len(self.act[0])
        e = group.identity
        for x in range(self.degree):
            if self.act[e][x] != x:
                raise IdentityAxiomViolated(
                    f"identity moves point {x}", point=x
                )
        for a, row in enumerate(self.act):
            if len(row) != self.degree:
                raise CompatibilityViolated(
                    f"row {a} has length {len(row)}, expected {self.degree}", a=a
                )
            if sorted(row) != list(range(self.degree)):
                # A non-bijective row always breaks act[a.a^-1][x] = a.(a^-1.x).
                b = group.inv(a)
                for x in range(self.degree):
                    if self.act[a][self.act[b][x]] != x:
                        raise CompatibilityViolated(
                            f"act[{a}] fails to undo act[{b}] at point {x}",
                            a=a,
                            b=b,
                            point=x,
                        )
                raise CompatibilityViolated(f"row {a} is not a permutation", a=a)

    def apply(self, a: int, x: int) -> int:
        return self.act[a][x]

    def orbit(self, x: int) -> tuple:
        """{a.x : a in G}, sorted."""
        return tuple(sorted(set(row[x] for row in self.act)))

    def orbits(self, subgroup: Optional[Subgroup] = None) -> Partition:
        """Orbit partition, optionally under a subgroup's inherited action."""
        rows = self._rows(subgroup)
        seen = [False] * self.degree
        cells = []
        for x in range(self.degree):
            if seen[x]:
                continue
            cell = sorted(set(row[x] for row in rows))
            for y in cell:
                seen[y] = True
            cells.append(cell)
        return Partition(self.degree, cells)

    def fix(self, a: int) -> tuple:
        """Points fixed by a single group element, sorted."""
        row = self.act[a]
        return tuple(x for x in range(self.degree) if row[x] == x)

    def stabilizer(self, x: int) -> Subgroup:
        members = [a for a in range(self.group.order) if self.act[a][x] == x]
        return Subgroup(self.group, members)

    def is_trivial(self) -> bool:
        return all(row[x] == x for row in self.act for x in range(self.degree))

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def is_free(self) -> bool:
        """True iff no element besides the identity fixes a point."""
        return self._free_violation() is None

    def _free_violation(self):
        e = self.group.identity
        for a in range(self.group.order):
            if a == e:
                continue
            row = self.act[a]
            for x in range(self.degree):
                if row[x] == x:
                    return a, x
        return None

    def burnside_dimension(self, subgroup: Optional[Subgroup] = None) -> Fraction:
        """dim of the subgroup-invariant function space: (1/|H|) sum |Fix a|.

        The Cauchy-Frobenius count; always an integer on a valid action, and
        asserted internally against the direct orbit count.
        """
        h = self._subgroup(subgroup)
        total = sum(len(self.fix(a)) for a in h.members)
        dim = Fraction(total, h.order)
        if dim.denominator != 1:
            raise NotAnInteger(
                f"fixed-point average {dim} is not an integer",
                numerator=total,
                denominator=h.order,
            )
        assert dim == len(self.orbits(h)), "fixed-point count disagrees with orbit scan"
        return dim

    def dimension_difference(self, subgroup: Subgroup) -> Fraction:
        """|G| dim_G - |H| dim_H, cross-checked against sum over G minus H of |Fix a|.

        The left side counts orbits directly, so the identity is checked
        against the fixed-point sums rather than derived from them.
        """
        h = self._subgroup(subgroup)
        lhs = self.group.order * len(self.orbits()) - h.order * len(self.orbits(h))
        members = set(h.members)
        rhs = sum(len(self.fix(a)) for a in range(self.group.order) if a not in members)
        assert lhs == rhs, "dimension difference disagrees with direct fixed-point sum"
        return Fraction(lhs)

    def free_ratio_check(self, subgroup: Subgroup):
        """For free actions, dim_H / dim_G; asserted equal to the index [G:H]."""
        violation = self._free_violation()
        if violation is not None:
            a, x = violation
            raise NotFree(
                f"element {a} fixes point {x}", element=a, point=x
            )
        h = self._subgroup(subgroup)
        ratio = self.burnside_dimension(h) / self.burnside_dimension()
        idx = h.index()
        assert ratio == idx
        return ratio, idx

    def _subgroup(self, subgroup: Optional[Subgroup]) -> Subgroup:
        if subgroup is None:
            return whole_group(self.group)
        if subgroup.parent != self.group:
            raise ValueError("subgroup belongs to a different group")
        return subgroup

    def _rows(self, subgroup: Optional[Subgroup]):
        if subgroup is None:
            return self.act
        self._subgroup(subgroup)
        return [self.act[a] for a in subgroup.members]

    def __eq__(self, other):
        if not isinstance(other, GroupAction):
            return NotImplemented
        return self.group == other.group and self.act == other.act

    def __hash__(self):
        return hash((self.group, self.act))

    def __repr__(self):
        return f"GroupAction(order={self.group.order}, degree={self.degree})"


def validate_action(group: FiniteGroup, act: Sequence[Sequence[int]]) -> GroupAction:
    """Full validation of an untrusted table: cheap axioms plus the triple loop."""
    action = GroupAction(group, act)
    table = action.act
    for a in range(group.order):
        row_a = table[a]
        mul_row = group.mul_table[a]
        for b in range(group.order):
            row_ab = table[mul_row[b]]
            row_b = table[b]
            for x in range(action.degree):
                if row_ab[x] != row_a[row_b[x]]:
                    raise CompatibilityViolated(
                        f"act[{a}*{b}][{x}] != act[{a}][act[{b}][{x}]]",
                        a=a,
                        b=b,
                        point=x,
                    )
    return action


def trivial_action(group: FiniteGroup, degree: int) -> GroupAction:
    return GroupAction(group, [list(range(degree))] * group.order)


def conjugation_action(group: FiniteGroup) -> GroupAction:
    """The group acting on its own elements by a.x = a x a^-1."""
    act = [
        [group.conjugate(a, x) for x in range(group.order)]
        for a in range(group.order)
    ]
    return GroupAction(group, act)


def translation_action(group: FiniteGroup) -> GroupAction:
    """The group acting on itself by left multiplication (always free and transitive)."""
    return GroupAction(group, group.mul_table)


def coset_action(group: FiniteGroup, h: Subgroup) -> GroupAction:
    """Left multiplication on the cosets xH; points ordered by smallest member."""
    if h.parent != group:
        raise ValueError("subgroup belongs to a different group")
    members = h.members
    coset_of = [None] * group.order
    cosets = []
    for x in range(group.order):
        if coset_of[x] is not None:
            continue
        cs = sorted(group.mul(x, m) for m in members)
        idx = len(cosets)
        cosets.append(cs)
        for y in cs:
            coset_of[y] = idx
    act = [[coset_of[group.mul(a, cs[0])] for cs in cosets] for a in range(group.order)]
    return GroupAction(group, act)


def _orbit_signature(action: GroupAction, cell) -> tuple:
    stab_orders = sorted(action.stabilizer(x).order for x in cell)
    return (len(cell), tuple(stab_orders))


def are_equivalent(a1: GroupAction, a2: GroupAction) -> Optional[list]:
    """Search for an equivariant bijection phi with phi(a.x) = a.phi(x).

    Returns the point map as a list, or None when the actions are not
    equivalent (including the degree-mismatch case). Orbits are matched by
    (size, stabilizer-order multiset) before the backtracking assignment;
    within a candidate orbit pair, a match is pinned down by choosing an
    image for one base point whose stabilizer agrees exactly.
    """
    if a1.group != a2.group:
        raise ValueError("actions must share the same group")
    if a1.degree != a2.degree:
        return None
    group = a1.group
    cells1 = list(a1.orbits().cells)
    cells2 = list(a2.orbits().cells)
    if len(cells1) != len(cells2):
        return None
    sig1 = [_orbit_signature(a1, c) for c in cells1]
    sig2 = [_orbit_signature(a2, c) for c in cells2]
    if sorted(sig1) != sorted(sig2):
        return None

    phi = [None] * a1.degree
    used = [False] * len(cells2)

    def match_pair(c1, c2) -> Optional[dict]:
        x0 = c1[0]
        s1 = a1.stabilizer(x0).members
        for y0 in c2:
            if a2.stabilizer(y0).members != s1:
                continue
            local = {}
            for a in range(group.order):
                local[a1.act[a][x0]] = a2.act[a][y0]
            return local
        return None

    def assign(i) -> bool:
        if i == len(cells1):
            return True
        for j, c2 in enumerate(cells2):
            if used[j] or sig2[j] != sig1[i]:
                continue
            local = match_pair(cells1[i], c2)
            if local is None:
                continue
            used[j] = True
            for x, y in local.items():
                phi[x] = y
            if assign(i + 1):
                return True
            used[j] = False
            for x in local:
                phi[x] = None
        return False

    if not assign(0):
        return None
    assert all(y is not None for y in phi)
    for a in range(group.order):
        for x in range(a1.degree):
            assert phi[a1.act[a][x]] == a2.act[a][phi[x]]
    return phi
