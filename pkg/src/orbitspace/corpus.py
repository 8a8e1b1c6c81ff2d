"""Named constructors for a corpus of concrete actions with known structure.

Each entry packages an action with the structural facts that are forced for
it (freeness, transitivity, orbit count where determined), so tests, docs,
and the CLI share one source of ready-made inputs. The eight families
documented as never free at default parameters are listed in
``NON_FREE_FAMILIES``; the divisibility diagnostic (group order versus point
count) is reported alongside each entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List

from .actions import GroupAction, conjugation_action, coset_action, trivial_action
from .errors import ParamOutOfRange, UnknownCorpusName
from .groups import (
    FiniteGroup,
    Subgroup,
    cyclic_group,
    direct_product,
    from_generators,
    group_from_table,
)


@dataclass
class CorpusEntry:
    name: str
    action: GroupAction
    expected: Dict[str, object]
    params: Dict[str, object] = field(default_factory=dict)

    def divisibility(self) -> Dict[str, object]:
        m = self.action.group.order
        n = self.action.degree
        return {
            "group_order": m,
            "degree": n,
            "group_order_divides_degree": n % m == 0,
        }


NON_FREE_FAMILIES = (
    "symmetric",
    "coset",
    "subgroup_conjugates",
    "sylow",
    "order_p",
    "gl_on_vectors",
    "subset_action",
    "two_sided",
)


# ---------------------------------------------------------------------------
# named groups


def _dihedral(n: int):
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return from_generators(n, [rot, ref])


def _symmetric(n: int):
    if n == 1:
        return from_generators(1, [])
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return from_generators(n, gens)


def _alternating(n: int):
    gens = []
    for i in range(n - 2):
        images = list(range(n))
        images[i], images[i + 1], images[i + 2] = images[i + 1], images[i + 2], images[i]
        gens.append(tuple(images))
    return from_generators(n, gens)


def _quaternion_table():
    # elements: units 1, i, j, k with signs; index = unit*2 + (0 if +, 1 if -)
    def mul_units(u, v):
        # returns (sign, unit) for u*v over basis 0=1, 1=i, 2=j, 3=k
        if u == 0:
            return 1, v
        if v == 0:
            return 1, u
        if u == v:
            return -1, 0
        table = {(1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2)}
        if (u, v) in table:
            return table[(u, v)]
        s, w = table[(v, u)]
        return -s, w

    def enc(sign, unit):
        return unit * 2 + (0 if sign > 0 else 1)

    mul = [[0] * 8 for _ in range(8)]
    for a in range(8):
        for b in range(8):
            ua, sa = a // 2, 1 if a % 2 == 0 else -1
            ub, sb = b // 2, 1 if b % 2 == 0 else -1
            s, w = mul_units(ua, ub)
            mul[a][b] = enc(s * sa * sb, w)
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return group_from_table(mul, labels=labels)


def _dicyclic3_table():
    # order 12: a of order 6, b with b^2 = a^3 and b a b^-1 = a^-1;
    # element (i, j) -> index i + 6j
    def enc(i, j):
        return i % 6 + 6 * j

    mul = [[0] * 12 for _ in range(12)]
    for i in range(6):
        for j in range(2):
            for k in range(6):
                for l in range(2):
                    if j == 0:
                        r = enc(i + k, l)
                    elif l == 0:
                        r = enc(i - k, 1)
                    else:
                        r = enc(i - k + 3, 0)
                    mul[enc(i, j)][enc(k, l)] = r
    labels = [f"a{i}" if j == 0 else f"a{i}b" for j in range(2) for i in range(6)]
    return group_from_table(mul, labels=labels)


def group_by_name(name: str) -> FiniteGroup:
    """Resolve a short group name: c<n>, s<n>, a<n>, d<n>, v4, q8, dic3,
    and x-separated direct products of those (e.g. c2xc4)."""
    key = name.strip().lower()
    if "x" in key:
        parts = key.split("x")
        out = group_by_name(parts[0])
        for part in parts[1:]:
            out = direct_product(out, group_by_name(part))
        return out
    if key == "v4":
        return direct_product(cyclic_group(2), cyclic_group(2))
    if key == "q8":
        return _quaternion_table()
    if key == "dic3":
        return _dicyclic3_table()
    for prefix, builder in (("c", None), ("s", _symmetric), ("a", _alternating), ("d", _dihedral)):
        if key.startswith(prefix) and key[len(prefix):].isdigit():
            n = int(key[len(prefix):])
            if n < 1:
                raise ParamOutOfRange(f"group size must be positive in {name!r}", name=name)
            if prefix == "c":
                return cyclic_group(n)
            group, _ = builder(n)
            return group
    raise ParamOutOfRange(f"unknown group name {name!r}", name=name)


def natural_action_by_name(name: str):
    """A permutation family with its degree-n evaluation action."""
    key = name.strip().lower()
    builders = {"s": _symmetric, "a": _alternating, "d": _dihedral}
    if key and key[0] in builders and key[1:].isdigit():
        n = int(key[1:])
        group, act = builders[key[0]](n)
        return group, GroupAction(group, act)
    if key.startswith("c") and key[1:].isdigit():
        n = int(key[1:])
        rot = tuple((i + 1) % n for i in range(n))
        group, act = from_generators(n, [rot])
        return group, GroupAction(group, act)
    raise ParamOutOfRange(f"no natural point action for group {name!r}", name=name)


def small_group_catalog(max_order: int = 12) -> List:
    """All isomorphism classes of groups with order up to 12, as (name, group)."""
    if max_order > 12:
        raise ParamOutOfRange(
            f"catalog covers orders up to 12, asked for {max_order}", max_order=max_order
        )
    named = [(f"c{n}", cyclic_group(n)) for n in range(1, 13)]
    named += [
        ("c2xc2", group_by_name("c2xc2")),
        ("c2xc4", group_by_name("c2xc4")),
        ("c2xc2xc2", group_by_name("c2xc2xc2")),
        ("c3xc3", group_by_name("c3xc3")),
        ("c2xc6", group_by_name("c2xc6")),
        ("s3", group_by_name("s3")),
        ("d4", group_by_name("d4")),
        ("d5", group_by_name("d5")),
        ("d6", group_by_name("d6")),
        ("q8", group_by_name("q8")),
        ("a4", group_by_name("a4")),
        ("dic3", group_by_name("dic3")),
    ]
    return [(name, g) for name, g in named if g.order <= max_order]


# ---------------------------------------------------------------------------
# subgroup searches used by the Sylow family


def _close_members(g: FiniteGroup, seed, limit: int):
    members = set(seed)
    members.add(g.identity)
    frontier = list(members)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(members):
                for c in (g.mul(a, b), g.mul(b, a)):
                    if c not in members:
                        members.add(c)
                        nxt.append(c)
                        if len(members) > limit:
                            return None
        frontier = nxt
    return frozenset(members)


def _subgroups_of_order(g: FiniteGroup, k: int, pool) -> List:
    """All subgroups of order exactly k whose elements lie in the pool,
    found by adjoin-and-close growth with pruning above k."""
    pool = sorted(set(pool))
    start = frozenset({g.identity})
    seen = {start}
    frontier = [start]
    found = {start} if len(start) == k else set()
    while frontier:
        nxt = []
        for s in frontier:
            for x in pool:
                if x in s:
                    continue
                t = _close_members(g, s | {x}, k)
                if t is None or t in seen:
                    continue
                seen.add(t)
                nxt.append(t)
                if len(t) == k:
                    found.add(t)
        frontier = nxt
    return sorted(tuple(sorted(s)) for s in found)


def _conjugation_on_sets(g: FiniteGroup, sets: List) -> GroupAction:
    """g acting on a closed family of element sets by pointwise conjugation."""
    index = {tuple(s): i for i, s in enumerate(sets)}
    act = []
    for a in range(g.order):
        row = []
        for s in sets:
            image = tuple(sorted(g.conjugate(a, y) for y in s))
            row.append(index[image])
        act.append(row)
    return GroupAction(g, act)


# ---------------------------------------------------------------------------
# builders


def _build_trivial(n: int = 3, group: str = "c2") -> CorpusEntry:
    g = group_by_name(group)
    if n < 1:
        raise ParamOutOfRange(f"need at least one point, got {n}", n=n)
    action = trivial_action(g, n)
    expected = {
        "is_trivial": True,
        "orbit_count": n,
        "is_transitive": n == 1,
        "is_free": g.order == 1,
    }
    return CorpusEntry("trivial", action, expected, {"n": n, "group": group})


def _build_symmetric(n: int = 3) -> CorpusEntry:
    if n < 1 or n > 7:
        raise ParamOutOfRange(f"symmetric family supports 1 <= n <= 7, got {n}", n=n)
    group, act = _symmetric(n)
    action = GroupAction(group, act)
    expected = {
        "orbit_count": 1,
        "is_transitive": True,
        "is_trivial": n == 1,
        "is_free": n <= 2,
    }
    return CorpusEntry("symmetric", action, expected, {"n": n})


def _build_cyclic_translation(n: int = 4) -> CorpusEntry:
    if n < 1:
        raise ParamOutOfRange(f"need n >= 1, got {n}", n=n)
    g = cyclic_group(n)
    action = GroupAction(g, g.mul_table)
    expected = {
        "orbit_count": 1,
        "is_transitive": True,
        "is_free": True,
        "is_trivial": n == 1,
    }
    return CorpusEntry("cyclic_translation", action, expected, {"n": n})


def _build_conjugation(group: str = "s3") -> CorpusEntry:
    g = group_by_name(group)
    action = conjugation_action(g)
    expected = {
        "is_free": g.order == 1,
        "is_trivial": g.is_abelian(),
    }
    return CorpusEntry("conjugation", action, expected, {"group": group})


def _subgroup_from_seeds(g: FiniteGroup, seeds) -> Subgroup:
    return g.subgroup_generated(seeds)


def _build_coset(group: str = "s3", seeds=(1,)) -> CorpusEntry:
    g = group_by_name(group)
    h = _subgroup_from_seeds(g, seeds)
    if h.order == 1:
        raise ParamOutOfRange(
            "coset family needs a nontrivial subgroup", seeds=list(seeds)
        )
    action = coset_action(g, h)
    expected = {"is_free": False, "is_transitive": True, "orbit_count": 1}
    return CorpusEntry("coset", action, expected, {"group": group, "seeds": list(seeds)})


def _build_subgroup_conjugates(group: str = "s3", seeds=(1,)) -> CorpusEntry:
    g = group_by_name(group)
    h = _subgroup_from_seeds(g, seeds)
    if h.order == 1:
        raise ParamOutOfRange(
            "conjugate family needs a nontrivial subgroup", seeds=list(seeds)
        )
    conjugates = set()
    for x in range(g.order):
        conjugates.add(tuple(sorted(g.conjugate(x, y) for y in h.members)))
    sets = sorted(conjugates)
    action = _conjugation_on_sets(g, sets)
    expected = {"is_free": False, "is_transitive": True, "orbit_count": 1}
    return CorpusEntry(
        "subgroup_conjugates", action, expected, {"group": group, "seeds": list(seeds)}
    )


def _build_sylow(group: str = "s3", p: int = 2) -> CorpusEntry:
    g = group_by_name(group)
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise ParamOutOfRange(f"p must be prime, got {p}", p=p)
    if g.order % p != 0:
        raise ParamOutOfRange(
            f"p = {p} does not divide the group order {g.order}", p=p, order=g.order
        )
    pk = 1
    while g.order % (pk * p) == 0:
        pk *= p
    pool = [
        a
        for a in range(g.order)
        if _is_power_of(g.element_order(a), p)
    ]
    sylows = _subgroups_of_order(g, pk, pool)
    action = _conjugation_on_sets(g, sylows)
    expected = {"is_free": False, "is_transitive": True}
    return CorpusEntry("sylow", action, expected, {"group": group, "p": p})


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _build_order_p(group: str = "s3", p: int = 2) -> CorpusEntry:
    g = group_by_name(group)
    points = [a for a in range(g.order) if g.element_order(a) == p]
    if not points:
        raise ParamOutOfRange(
            f"no elements of order {p} in this group", p=p, order=g.order
        )
    index = {x: i for i, x in enumerate(points)}
    act = [[index[g.conjugate(a, x)] for x in points] for a in range(g.order)]
    action = GroupAction(g, act)
    expected = {"is_free": False}
    return CorpusEntry("order_p", action, expected, {"group": group, "p": p})


def _gl_order(n: int, q: int) -> int:
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out


def _det_mod(mat, n: int, q: int) -> int:
    if n == 2:
        return (mat[0] * mat[3] - mat[1] * mat[2]) % q
    a, b, c, d, e, f, g_, h, i = mat
    return (a * (e * i - f * h) - b * (d * i - f * g_) + c * (d * h - e * g_)) % q


def _build_gl_on_vectors(n: int = 2, q: int = 2, allow_large: bool = False) -> CorpusEntry:
    if q < 2 or any(q % d == 0 for d in range(2, q)):
        raise ParamOutOfRange(f"q must be prime, got {q}", q=q)
    if not allow_large and (n != 2 or q not in (2, 3)):
        raise ParamOutOfRange(
            "defaults allow n=2 and q in (2, 3); pass allow_large for more",
            n=n,
            q=q,
        )
    if n not in (2, 3) or _gl_order(n, q) > 5000:
        raise ParamOutOfRange(
            f"GL({n}, {q}) has order {_gl_order(n, q)}, beyond desk scale", n=n, q=q
        )
    cells = n * n
    mats = []
    for code in range(q**cells):
        mat = []
        rest = code
        for _ in range(cells):
            mat.append(rest % q)
            rest //= q
        mat = tuple(mat)
        if _det_mod(mat, n, q) != 0:
            mats.append(mat)
    index = {m: i for i, m in enumerate(mats)}

    def matmul(x, y):
        out = []
        for r in range(n):
            for c in range(n):
                out.append(sum(x[r * n + k] * y[k * n + c] for k in range(n)) % q)
        return tuple(out)

    mul = [[index[matmul(x, y)] for y in mats] for x in mats]
    ident = tuple(1 if r == c else 0 for r in range(n) for c in range(n))
    ident_idx = index[ident]
    inv = [row.index(ident_idx) for row in mul]
    labels = [str([list(m[r * n : (r + 1) * n]) for r in range(n)]) for m in mats]
    g = FiniteGroup(mul, index[ident], inv, labels=labels)

    def vec_index(vec):
        out = 0
        for comp in vec:
            out = out * q + comp
        return out

    vectors = []
    for code in range(q**n):
        vec = []
        rest = code
        for _ in range(n):
            vec.append(rest % q)
            rest //= q
        vectors.append(tuple(reversed(vec)))
    act = []
    for m in mats:
        row = []
        for vec in vectors:
            image = tuple(
                sum(m[r * n + k] * vec[k] for k in range(n)) % q for r in range(n)
            )
            row.append(vec_index(image))
        act.append(row)
    action = GroupAction(g, act)
    expected = {"is_free": False, "is_transitive": False, "orbit_count": 2}
    return CorpusEntry("gl_on_vectors", action, expected, {"n": n, "q": q})


def _build_subset_action(base: str = "s3", allow_large: bool = False) -> CorpusEntry:
    group, base_action = natural_action_by_name(base)
    n = base_action.degree
    limit = 5 if allow_large else 4
    if n > limit:
        raise ParamOutOfRange(
            f"power set of {n} points is beyond desk scale", base=base, degree=n
        )
    if _is_power_of(group.order, 2) or group.order == 1:
        raise ParamOutOfRange(
            "subset family requires a group that is not a 2-group",
            base=base,
            order=group.order,
        )
    size = 2**n
    act = []
    for a in range(group.order):
        row_base = base_action.act[a]
        row = []
        for mask in range(size):
            image = 0
            for x in range(n):
                if mask >> x & 1:
                    image |= 1 << row_base[x]
            row.append(image)
        act.append(row)
    action = GroupAction(group, act)
    expected = {"is_free": False}
    return CorpusEntry("subset_action", action, expected, {"base": base})


def _build_two_sided(group: str = "c2") -> CorpusEntry:
    g = group_by_name(group)
    if g.order < 2:
        raise ParamOutOfRange("two-sided family needs a group of order >= 2", group=group)
    gg = direct_product(g, g)
    m = g.order
    act = []
    for a in range(m):
        for b in range(m):
            binv = g.inv(b)
            act.append([g.mul(g.mul(a, x), binv) for x in range(m)])
    action = GroupAction(gg, act)
    expected = {"is_free": False}
    return CorpusEntry("two_sided", action, expected, {"group": group})


_BUILDERS = {
    "trivial": _build_trivial,
    "symmetric": _build_symmetric,
    "cyclic_translation": _build_cyclic_translation,
    "conjugation": _build_conjugation,
    "coset": _build_coset,
    "subgroup_conjugates": _build_subgroup_conjugates,
    "sylow": _build_sylow,
    "order_p": _build_order_p,
    "gl_on_vectors": _build_gl_on_vectors,
    "subset_action": _build_subset_action,
    "two_sided": _build_two_sided,
}


def corpus_names() -> List[str]:
    return sorted(_BUILDERS)


def build(name: str, **params) -> CorpusEntry:
    """Build a corpus entry by name; unknown names and bad parameters raise."""
    builder = _BUILDERS.get(name)
    if builder is None:
        raise UnknownCorpusName(
            f"unknown corpus name {name!r}; known: {', '.join(corpus_names())}",
            name=name,
        )
    entry = builder(**params)
    _check_expected(entry)
    return entry


def _check_expected(entry: CorpusEntry):
    action = entry.action
    recomputed = {
        "orbit_count": len(action.orbits()),
        "is_free": action.is_free(),
        "is_transitive": action.is_transitive(),
        "is_trivial": action.is_trivial(),
    }
    for key, value in entry.expected.items():
        assert recomputed[key] == value, (
            f"{entry.name}: expected {key}={value}, recomputed {recomputed[key]}"
        )


def default_entries() -> List[CorpusEntry]:
    """Every family at its default parameters."""
    return [build(name) for name in corpus_names()]
