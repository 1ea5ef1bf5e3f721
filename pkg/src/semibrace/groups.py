"""Finite group tables on elements 0..n-1, with a small embedded catalog.

Conventions, fixed once for the whole package:
  * the identity always sits at index 0;
  * permutations compose as (p∘q)(x) = p(q(x)), i.e. q is applied first;
  * permutation labels use cycle notation on 1-based points ("(12)", "(123)"),
    with cycles sorted by their smallest point and "id" for the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .errors import NotAGroup

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its Cayley table, identity at index 0."""

    order: int
    table: Table
    identity: int
    inverses: tuple[int, ...]
    name: str = "group"
    labels: tuple[str, ...] | None = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]


def group_from_table(table, name: str = "group", labels=None) -> GroupTable:
    """Check the group axioms and package the table.

    Raises NotAGroup with the first witness in element order.
    """
    n = len(table)
    tab = tuple(tuple(row) for row in table)
    for a in range(n):
        if len(tab[a]) != n:
            raise NotAGroup(f"row {a} has length {len(tab[a])}, expected {n}")
        for b in range(n):
            if not (0 <= tab[a][b] < n):
                raise NotAGroup(f"entry ({a},{b}) out of range", (a, b))
    identity = None
    for e in range(n):
        if all(tab[e][x] == x and tab[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no two-sided identity")
    if identity != 0:
        raise NotAGroup(f"identity must sit at index 0, found at {identity}")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if tab[tab[a][b]][c] != tab[a][tab[b][c]]:
                    raise NotAGroup("not associative", (a, b, c))
    inverses = [None] * n
    for a in range(n):
        for b in range(n):
            if tab[a][b] == 0 and tab[b][a] == 0:
                inverses[a] = b
                break
        if inverses[a] is None:
            raise NotAGroup(f"element {a} has no inverse", a)
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != n or len(set(labels)) != n:
            raise NotAGroup("labels must be unique and cover all elements")
    return GroupTable(n, tab, 0, tuple(inverses), name, labels)


# -- permutation helpers ------------------------------------------------

def compose_perms(p, q):
    """(p∘q)(x) = p(q(x))."""
    return tuple(p[q[x]] for x in range(len(p)))


def perm_cycle_label(p) -> str:
    """Cycle-notation label on 1-based points; identity is 'id'."""
    n = len(p)
    seen = [False] * n
    cycles = []
    for start in range(n):
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
        cycles.append(cyc)
    if not cycles:
        return "id"
    return "".join("(" + "".join(str(x + 1) for x in c) + ")" for c in cycles)


def group_from_permutations(perms, name: str) -> GroupTable:
    """Cayley table of a set of permutations closed under composition.

    Elements are sorted lexicographically by one-line notation, which puts
    the identity first.
    """
    elems = sorted(set(perms))
    index = {p: i for i, p in enumerate(elems)}
    n = len(elems)
    table = tuple(
        tuple(index[compose_perms(elems[a], elems[b])] for b in range(n))
        for a in range(n)
    )
    labels = tuple(perm_cycle_label(p) for p in elems)
    return group_from_table(table, name, labels)


# -- constructors -------------------------------------------------------

def cyclic(n: int) -> GroupTable:
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    labels = tuple(str(a) for a in range(n))
    return group_from_table(table, f"C{n}", labels)


def direct_product_groups(g: GroupTable, h: GroupTable, name=None) -> GroupTable:
    n, m = g.order, h.order

    def idx(a, b):
        return a * m + b

    table = [[0] * (n * m) for _ in range(n * m)]
    for a1, b1, a2, b2 in product(range(n), range(m), range(n), range(m)):
        table[idx(a1, b1)][idx(a2, b2)] = idx(g.mul(a1, a2), h.mul(b1, b2))
    gl = g.labels or tuple(map(str, range(n)))
    hl = h.labels or tuple(map(str, range(m)))
    labels = tuple(f"({gl[a]},{hl[b]})" for a in range(n) for b in range(m))
    return group_from_table(table, name or f"{g.name}x{h.name}", labels)


def dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n; element (i, j) is r^i s^j, index 2i+j."""

    def idx(i, j):
        return 2 * i + j

    table = [[0] * (2 * n) for _ in range(2 * n)]
    for i1, j1, i2, j2 in product(range(n), range(2), range(n), range(2)):
        i = (i1 + (n - i2 if j1 else i2)) % n
        table[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2)
    labels = []
    for i in range(n):
        for j in range(2):
            if j == 0:
                labels.append("id" if i == 0 else f"r{i}")
            else:
                labels.append("s" if i == 0 else f"r{i}s")
    return group_from_table(table, f"D{n}", labels)


def quaternion() -> GroupTable:
    # elements 1,-1,i,-i,j,-j,k,-k encoded as (axis, sign); axis 0 is the unit
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def mul(a, b):
        ax, asg = a // 2, a % 2
        bx, bsg = b // 2, b % 2
        sign = asg ^ bsg
        if ax == 0:
            cx = bx
        elif bx == 0:
            cx = ax
        elif ax == bx:
            cx, sign = 0, sign ^ 1
        else:
            # i*j=k, j*k=i, k*i=j and anticommutativity
            cx = 6 - ax - bx
            if (ax, bx) in ((2, 1), (3, 2), (1, 3)):
                sign ^= 1
        return cx * 2 + sign

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    return group_from_table(table, "Q8", names)


def dicyclic3() -> GroupTable:
    """Dicyclic group of order 12: a^6 = 1, b^2 = a^3, b a b^-1 = a^-1."""

    def idx(m, l):
        return 2 * m + l

    table = [[0] * 12 for _ in range(12)]
    for m1, l1, m2, l2 in product(range(6), range(2), range(6), range(2)):
        if l1 == 0:
            m, l = (m1 + m2) % 6, l2
        elif l2 == 0:
            m, l = (m1 - m2) % 6, 1
        else:
            m, l = (m1 - m2 + 3) % 6, 0
        table[idx(m1, l1)][idx(m2, l2)] = idx(m, l)
    labels = [f"a{m}b" if l else ("id" if m == 0 else f"a{m}") for m in range(6) for l in range(2)]
    return group_from_table(table, "Dic3", labels)


def symmetric(m: int) -> GroupTable:
    return group_from_permutations(list(permutations(range(m))), f"S{m}")


def alternating(m: int) -> GroupTable:
    perms = [p for p in permutations(range(m)) if _is_even(p)]
    return group_from_permutations(perms, f"A{m}")


def _is_even(p) -> bool:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return inv % 2 == 0


# -- catalog ------------------------------------------------------------

_CATALOG_BUILDERS = {
    1: [lambda: cyclic(1)],
    2: [lambda: cyclic(2)],
    3: [lambda: cyclic(3)],
    4: [lambda: cyclic(4), lambda: direct_product_groups(cyclic(2), cyclic(2), "C2xC2")],
    5: [lambda: cyclic(5)],
    6: [lambda: cyclic(6), lambda: symmetric(3)],
    7: [lambda: cyclic(7)],
    8: [
        lambda: cyclic(8),
        lambda: direct_product_groups(cyclic(4), cyclic(2), "C4xC2"),
        lambda: direct_product_groups(
            direct_product_groups(cyclic(2), cyclic(2)), cyclic(2), "C2xC2xC2"
        ),
        lambda: dihedral(4),
        quaternion,
    ],
    9: [lambda: cyclic(9), lambda: direct_product_groups(cyclic(3), cyclic(3), "C3xC3")],
    10: [lambda: cyclic(10), lambda: dihedral(5)],
    11: [lambda: cyclic(11)],
    12: [
        lambda: cyclic(12),
        lambda: direct_product_groups(cyclic(6), cyclic(2), "C6xC2"),
        lambda: dihedral(6),
        lambda: alternating(4),
        dicyclic3,
    ],
}

CATALOG_MAX_ORDER = max(_CATALOG_BUILDERS)


def group_catalog(order: int) -> list[GroupTable]:
    """All groups of the given order up to isomorphism, order <= 12."""
    if order not in _CATALOG_BUILDERS:
        raise ValueError(f"no embedded catalog for order {order}")
    return [build() for build in _CATALOG_BUILDERS[order]]


_NAMED = {
    "S3": lambda: symmetric(3),
    "S4": lambda: symmetric(4),
    "A4": lambda: alternating(4),
    "A5": lambda: alternating(5),
    "D4": lambda: dihedral(4),
    "D5": lambda: dihedral(5),
    "D6": lambda: dihedral(6),
    "Q8": quaternion,
    "Dic3": dicyclic3,
    "V4": lambda: direct_product_groups(cyclic(2), cyclic(2), "C2xC2"),
    "C2xC2": lambda: direct_product_groups(cyclic(2), cyclic(2), "C2xC2"),
    "C4xC2": lambda: direct_product_groups(cyclic(4), cyclic(2), "C4xC2"),
    "C6xC2": lambda: direct_product_groups(cyclic(6), cyclic(2), "C6xC2"),
    "C3xC3": lambda: direct_product_groups(cyclic(3), cyclic(3), "C3xC3"),
    "C2xC2xC2": lambda: direct_product_groups(
        direct_product_groups(cyclic(2), cyclic(2)), cyclic(2), "C2xC2xC2"
    ),
}


def named_group(name: str) -> GroupTable:
    """Look up a group by name: C<n> for cyclic, or S3, A4, A5, D4..D6, Q8, ..."""
    if name in _NAMED:
        return _NAMED[name]()
    if name.startswith("C") and name[1:].isdigit():
        return cyclic(int(name[1:]))
    raise ValueError(f"unknown group name: {name}")


def all_group_tables_on(universe: tuple[int, ...]) -> list[dict]:
    """Every group structure on the given element set with identity universe[0].

    Returned as dict-of-dicts partial tables keyed by the universe elements.
    Obtained by relabelling each catalog group of that order through all
    bijections fixing the identity, then deduplicating.
    """
    d = len(universe)
    rest = list(universe[1:])
    seen = set()
    out = []
    for grp in group_catalog(d):
        for perm in permutations(rest):
            place = (universe[0],) + perm  # catalog index -> universe element
            tab = {
                place[a]: {place[b]: place[grp.table[a][b]] for b in range(d)}
                for a in range(d)
            }
            key = tuple(tuple(tab[a][b] for b in universe) for a in universe)
            if key not in seen:
                seen.add(key)
                out.append(tab)
    return out
