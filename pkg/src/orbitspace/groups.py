"""Finite groups as fully materialized multiplication tables.

Elements are the indices 0..order-1. Groups are built either by validating a
user-supplied Cayley table or by breadth-first closure of permutation
generators; both paths end in the same immutable ``FiniteGroup``. Full tables
(rather than generator-driven stabilizer chains) are the right shape here
because every downstream computation sums over all elements anyway.
"""

from __future__ import annotations

import os
from typing import Iterable, Optional, Sequence

from .errors import (
    NoIdentity,
    NoInverse,
    NotAPermutation,
    NotAssociative,
    NotLatinSquare,
    SizeLimitExceeded,
)

Perm = tuple  # image array in one-line notation, 0-based

DEFAULT_CLOSURE_CAP = 20160
CAP_ENV_VAR = "ORBITSPACE_CAP"


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CLOSURE_CAP
    return int(raw)


def check_permutation(images: Sequence[int], degree: int) -> Perm:
    """Validate a one-line image array as a bijection on 0..degree-1."""
    images = tuple(int(x) for x in images)
    if len(images) != degree:
        raise NotAPermutation(
            f"expected {degree} images, got {len(images)}",
            degree=degree,
            length=len(images),
        )
    seen = [False] * degree
    for pos, img in enumerate(images):
        if img < 0 or img >= degree:
            raise NotAPermutation(
                f"image {img} at position {pos} out of range 0..{degree - 1}",
                position=pos,
                image=img,
            )
        if seen[img]:
            raise NotAPermutation(
                f"repeated image {img} at position {pos}", position=pos, image=img
            )
        seen[img] = True
    return images


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(x) = p(q(x))."""
    return tuple(p[q[x]] for x in range(len(q)))


def invert_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for x, y in enumerate(p):
        inv[y] = x
    return tuple(inv)


def cycle_string(p: Perm) -> str:
    """Cycle notation, fixed points omitted; identity renders as '()'."""
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        parts.append("(" + " ".join(str(c) for c in cyc) + ")")
    return "".join(parts) if parts else "()"


class FiniteGroup:
    """A finite group given by its full multiplication and inverse tables.

    Instances are immutable; construction is expected to go through
    ``group_from_table`` (validating) or ``from_generators`` (closure).
    """

    __slots__ = ("order", "mul_table", "identity", "inv_table", "labels")

    def __init__(self, mul_table, identity, inv_table, labels=None):
        self.mul_table = tuple(tuple(row) for row in mul_table)
        self.order = len(self.mul_table)
        self.identity = identity
        self.inv_table = tuple(inv_table)
        self.labels = tuple(labels) if labels is not None else None

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        if self.labels is None:
            return str(a)
        return self.labels[a]

    def element_order(self, a: int) -> int:
        n = 1
        x = a
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
        return n

    def conjugate(self, a: int, x: int) -> int:
        """a x a^-1."""
        return self.mul(self.mul(a, x), self.inv(a))

    def subgroup_generated(self, seeds: Iterable[int]) -> "Subgroup":
        """Smallest subgroup containing the seeds (closure under products).

        In a finite group, closure under multiplication already yields
        closure under inverses.
        """
        members = {self.identity}
        gens = sorted(set(int(s) for s in seeds))
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for s in gens:
                    b = self.mul(a, s)
                    if b not in members:
                        members.add(b)
                        nxt.append(b)
            frontier = nxt
        return Subgroup(self, members)

    def is_automorphism(self, sigma: Sequence[int]) -> bool:
        """True iff sigma(ab) = sigma(a)sigma(b) for all a, b (sigma a bijection)."""
        sigma = check_permutation(sigma, self.order)
        mul = self.mul_table
        for a in range(self.order):
            sa = sigma[a]
            row = mul[a]
            for b in range(self.order):
                if sigma[row[b]] != mul[sa][sigma[b]]:
                    return False
        return True

    def is_abelian(self) -> bool:
        mul = self.mul_table
        return all(
            mul[a][b] == mul[b][a]
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.mul_table == other.mul_table

    def __hash__(self):
        return hash(self.mul_table)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


class Subgroup:
    """A subgroup as a sorted member set inside a parent group."""

    __slots__ = ("parent", "members")

    def __init__(self, parent: FiniteGroup, members: Iterable[int]):
        self.parent = parent
        self.members = tuple(sorted(set(members)))

    @property
    def order(self) -> int:
        return len(self.members)

    def index(self) -> int:
        """[G : H]; Lagrange guarantees this is an exact integer."""
        q, r = divmod(self.parent.order, self.order)
        assert r == 0, "member count must divide the parent order"
        return q

    def is_whole_group(self) -> bool:
        return self.order == self.parent.order

    def __contains__(self, a: int) -> bool:
        return a in set(self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent == other.parent and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.order})"


def whole_group(g: FiniteGroup) -> Subgroup:
    return Subgroup(g, range(g.order))


def group_from_table(mul_table, labels=None) -> FiniteGroup:
    """Validate a Cayley table and derive identity and inverses.

    Checks, in order: entries in range with every row and column a
    permutation (Latin square), a two-sided identity, two-sided inverses,
    and associativity by the full triple loop. Each failure names the first
    offending element or triple.
    """
    rows = [list(row) for row in mul_table]
    m = len(rows)
    if m == 0:
        raise NoIdentity("empty multiplication table")
    for i, row in enumerate(rows):
        if len(row) != m:
            raise NotLatinSquare(
                f"row {i} has length {len(row)}, expected {m}", row=i, length=len(row)
            )
        seen = [False] * m
        for j, v in enumerate(row):
            if not isinstance(v, int) or v < 0 or v >= m:
                raise NotLatinSquare(
                    f"entry ({i},{j}) = {v!r} out of range 0..{m - 1}",
                    row=i,
                    col=j,
                    value=v,
                )
            if seen[v]:
                raise NotLatinSquare(
                    f"value {v} repeats in row {i}", row=i, value=v
                )
            seen[v] = True
    for j in range(m):
        seen = [False] * m
        for i in range(m):
            v = rows[i][j]
            if seen[v]:
                raise NotLatinSquare(
                    f"value {v} repeats in column {j}", col=j, value=v
                )
            seen[v] = True

    identity = None
    for e in range(m):
        if all(rows[e][a] == a and rows[a][e] == a for a in range(m)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element")

    inv = [None] * m
    for a in range(m):
        b = rows[a].index(identity)
        if rows[b][a] != identity:
            raise NoInverse(
                f"element {a} has no two-sided inverse", element=a
            )
        inv[a] = b
    if labels is not None and len(labels) != m:
        raise NotLatinSquare(
            f"{len(labels)} labels for {m} elements", labels=len(labels)
        )

    for a in range(m):
        for b in range(m):
            ab = rows[a][b]
            row_bc = rows[b]
            for c in range(m):
                if rows[ab][c] != rows[a][row_bc[c]]:
                    raise NotAssociative(
                        f"({a}*{b})*{c} != {a}*({b}*{c})", a=a, b=b, c=c
                    )

    return FiniteGroup(rows, identity, inv, labels=labels)


def from_generators(
    degree: int, generators: Sequence[Sequence[int]], cap: Optional[int] = None
):
    """Close permutation generators and return the group plus its evaluation action.

    The group elements are the distinct permutations found by breadth-first
    closure starting from the identity; element 0 is the identity. The second
    return value is the evaluation action table act[a][x] = perm_a(x).
    Labels carry cycle notation for display.
    """
    if degree < 1:
        raise NotAPermutation(f"degree must be at least 1, got {degree}", degree=degree)
    if cap is None:
        cap = default_cap()
    gens = [check_permutation(p, degree) for p in generators]
    ident = tuple(range(degree))
    index = {ident: 0}
    elements = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in index:
                    index[q] = len(elements)
                    elements.append(q)
                    nxt.append(q)
                    if len(elements) > cap:
                        raise SizeLimitExceeded(
                            f"closure exceeded cap {cap}", cap=cap, reached=len(elements)
                        )
        frontier = nxt

    m = len(elements)
    mul = [[index[compose(p, q)] for q in elements] for p in elements]
    inv = [index[invert_perm(p)] for p in elements]
    labels = [cycle_string(p) for p in elements]
    group = FiniteGroup(mul, 0, inv, labels=labels)
    act = [list(p) for p in elements]
    return group, act


def cyclic_group(n: int) -> FiniteGroup:
    """Z_n with additive notation; element k is the residue k."""
    if n < 1:
        raise NoIdentity(f"order must be positive, got {n}")
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    inv = [(-a) % n for a in range(n)]
    return FiniteGroup(mul, 0, inv, labels=[str(a) for a in range(n)])


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """G x H with element (a, b) encoded as a*|H| + b."""
    mh = h.order
    order = g.order * mh

    def enc(a, b):
        return a * mh + b

    mul = [[0] * order for _ in range(order)]
    for a1 in range(g.order):
        for b1 in range(mh):
            row = mul[enc(a1, b1)]
            for a2 in range(g.order):
                ga = g.mul(a1, a2)
                for b2 in range(mh):
                    row[enc(a2, b2)] = enc(ga, h.mul(b1, b2))
    inv = [enc(g.inv(a), h.inv(b)) for a in range(g.order) for b in range(mh)]
    labels = [
        f"({g.label(a)},{h.label(b)})" for a in range(g.order) for b in range(mh)
    ]
    return FiniteGroup(mul, enc(g.identity, h.identity), inv, labels=labels)


def _generating_set(g: FiniteGroup) -> list:
    """Greedy small generating set (empty for the trivial group)."""
    gens = []
    members = {g.identity}
    for a in range(g.order):
        if a not in members:
            gens.append(a)
            members = set(g.subgroup_generated(gens).members)
            if len(members) == g.order:
                break
    return gens


def _extend_hom(g: FiniteGroup, gens: Sequence[int], images: Sequence[int]):
    """Extend gen -> image to a full endomorphism by closure, or return None."""
    hom = {g.identity: g.identity}
    for a, b in zip(gens, images):
        if hom.get(a, b) != b:
            return None
        hom[a] = b
    frontier = [g.identity] + [a for a in gens if a != g.identity]
    while frontier:
        nxt = []
        for a in frontier:
            fa = hom[a]
            for s, fs in zip(gens, images):
                b = g.mul(a, s)
                fb = g.mul(fa, fs)
                known = hom.get(b)
                if known is None:
                    hom[b] = fb
                    nxt.append(b)
                elif known != fb:
                    return None
        frontier = nxt
    if len(hom) != g.order:
        return None
    images_full = [hom[a] for a in range(g.order)]
    if len(set(images_full)) != g.order:
        return None
    return tuple(images_full)


def automorphism_group(g: FiniteGroup) -> list:
    """All automorphisms of g, as permutations of element indices.

    Candidate images of a small generating set are filtered by element
    order, extended to full maps by closure, and finally verified with
    ``is_automorphism``. Sorted for determinism; the identity map is always
    present.
    """
    gens = _generating_set(g)
    if not gens:
        return [tuple(range(g.order))]
    orders = [g.element_order(a) for a in range(g.order)]
    candidates_per_gen = [
        [b for b in range(g.order) if orders[b] == orders[a]] for a in gens
    ]
    auts = set()

    def assign(i, images):
        if i == len(gens):
            full = _extend_hom(g, gens, images)
            if full is not None and g.is_automorphism(full):
                auts.add(full)
            return
        for b in candidates_per_gen[i]:
            assign(i + 1, images + [b])

    assign(0, [])
    result = sorted(auts)
    assert tuple(range(g.order)) in auts
    return result
