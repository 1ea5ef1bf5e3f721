"""Finite left semi-braces as a pair of Cayley tables.

A left semi-brace is a set B with two operations: (B, +) is a left
cancellative semigroup, (B, ∘) is a group, and

    a∘(b + c) = a∘b + a∘(a⁻ + c)          for all a, b, c,

where a⁻ is the inverse in (B, ∘) and 0 denotes the ∘-identity.  On a
finite carrier both operations are n×n tables of element indices, the
∘-identity is pinned to index 0 (the validator relabels if necessary),
and iterated sums are evaluated left to right (associativity of + makes
this unambiguous).

Validation caches the structural decomposition: E is the set of additive
idempotents, G = B + 0 is a group under + with neutral element 0, and
every b factors uniquely as b = g_b + e_b with g_b = b + 0 ∈ G and
e_b = -g_b + b ∈ E.  The fundamental maps are

    λ_a(b) = a∘(a⁻ + b)        (an automorphism of (B, +)),
    ρ_b(a) = (a⁻ + b)⁻∘b       (lands in G),

and the derived product a·b = λ_a(a⁻) + a∘b + λ_b(b⁻), which always
lands in G and collapses to -a + a∘b - b on skew braces (E = {0}).

Validated structures are immutable and safe to share between threads;
every operation here is a pure table lookup.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AddNotAssociative,
    CompatibilityViolation,
    InternalInconsistency,
    NotAGroup,
    NotInG,
    NotLeftCancellative,
    ValidationError,
)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MapTable:
    """One λ_a or ρ_b as an explicit image table."""

    kind: str  # "lambda" or "rho"
    base: int
    images: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.images[x]


def _as_table(rows, what: str) -> Table:
    try:
        tab = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"{what} table is not a matrix of integers") from exc
    n = len(tab)
    if n == 0:
        raise ValidationError(f"{what} table is empty")
    for row in tab:
        if len(row) != n:
            raise ValidationError(f"{what} table is not square")
        for v in row:
            if not (0 <= v < n):
                raise ValidationError(f"{what} table entry {v} out of range [0,{n})")
    return tab


def _relabel(tab: Table, perm) -> Table:
    """Apply old->new relabelling to a Cayley table."""
    n = len(tab)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    return tuple(
        tuple(perm[tab[inv[a]][inv[b]]] for b in range(n)) for a in range(n)
    )


class FiniteLeftSemibrace:
    """A validated finite left semi-brace.

    Construct through :func:`validate`.  All attributes are immutable
    after validation:

    n         order
    add, mul  the two Cayley tables (tuples of tuples)
    zero      index of the ∘-identity (always 0 after relabelling)
    inv       ∘-inverse table
    E, G      frozensets: additive idempotents and the group part B + 0
    gpart     b -> g_b = b + 0
    epart     b -> e_b = -g_b + b
    add_inv   additive inverse inside (G, +); -1 outside G
    lam, rho  full λ and ρ image tables
    relabeling  old->new permutation applied by the validator, or None
    labels    optional element names (presentation only)
    """

    __slots__ = (
        "n", "add", "mul", "zero", "inv", "E", "G", "gpart", "epart",
        "add_inv", "lam", "rho", "relabeling", "labels", "_dot",
    )

    def __init__(self, add, mul, labels=None):
        add = _as_table(add, "additive")
        mul = _as_table(mul, "multiplicative")
        if len(add) != len(mul):
            raise ValidationError("tables have different orders")
        n = len(add)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n or len(set(labels)) != n:
                raise ValidationError("labels must be unique, one per element")

        # (B, ∘) must be a group; relocate its identity to index 0 if needed.
        identity = None
        for e in range(n):
            if all(mul[e][x] == x and mul[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise NotAGroup("no two-sided identity")
        relabeling = None
        if identity != 0:
            perm = list(range(n))
            perm[0], perm[identity] = identity, 0
            relabeling = tuple(perm)
            add = _relabel(add, relabeling)
            mul = _relabel(mul, relabeling)
            if labels is not None:
                new = [""] * n
                for old, newpos in enumerate(relabeling):
                    new[newpos] = labels[old]
                labels = tuple(new)
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                        raise NotAGroup("not associative", (a, b, c))
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if mul[a][b] == 0 and mul[b][a] == 0:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise NotAGroup(f"element {a} has no inverse", a)
        inv = tuple(inv)

        # (B, +) must be a left cancellative semigroup.
        for a in range(n):
            seen = {}
            for b in range(n):
                v = add[a][b]
                if v in seen:
                    raise NotLeftCancellative(a, (seen[v], b))
                seen[v] = b
        for a in range(n):
            for b in range(n):
                ab = add[a][b]
                for c in range(n):
                    if add[ab][c] != add[a][add[b][c]]:
                        raise AddNotAssociative((a, b, c))

        # Compatibility: a∘(b+c) = a∘b + a∘(a⁻+c).
        for a in range(n):
            mula = mul[a]
            adb = add[inv[a]]
            for b in range(n):
                row = add[mula[b]]
                for c in range(n):
                    if mula[add[b][c]] != row[mula[adb[c]]]:
                        raise CompatibilityViolation(a, b, c)

        self.n = n
        self.add = add
        self.mul = mul
        self.zero = 0
        self.inv = inv
        self.relabeling = relabeling
        self.labels = labels
        self._dot = None
        self._build_caches()

    # -- cached structure ------------------------------------------------

    def _build_caches(self):
        n, add, mul, inv = self.n, self.add, self.mul, self.inv
        E = frozenset(b for b in range(n) if add[b][b] == b)
        G = frozenset(add[b][0] for b in range(n))
        gpart = tuple(add[b][0] for b in range(n))

        # The axioms force 0 + b = b; anything else is a bug upstream.
        for b in range(n):
            if add[0][b] != b:
                raise InternalInconsistency(f"0 is not a left identity at {b}")
        if 0 not in E or 0 not in G:
            raise InternalInconsistency("0 must lie in both E and G")

        # (G, +) is a group with neutral 0.
        add_inv = [-1] * n
        for g in G:
            if add[g][0] != g or add[0][g] != g:
                raise InternalInconsistency(f"0 is not neutral on G at {g}")
            for h in G:
                if add[g][h] not in G:
                    raise InternalInconsistency(f"G not closed under + at ({g},{h})")
                if add[g][h] == 0 and add[h][g] == 0:
                    add_inv[g] = h
            if add_inv[g] == -1:
                raise InternalInconsistency(f"{g} has no additive inverse in G")
        self.add_inv = tuple(add_inv)

        epart = tuple(add[add_inv[gpart[b]]][b] for b in range(n))
        for b in range(n):
            if epart[b] not in E:
                raise InternalInconsistency(f"e-part of {b} is not idempotent")
            if add[gpart[b]][epart[b]] != b:
                raise InternalInconsistency(f"decomposition fails at {b}")
        if len(G) * len(E) != n:
            raise InternalInconsistency("|G|·|E| != |B|")
        if len({(gpart[b], epart[b]) for b in range(n)}) != n:
            raise InternalInconsistency("decomposition is not unique")

        # λ_a(b) = a∘(a⁻+b) and ρ_b(a) = (a⁻+b)⁻∘b, as full tables.
        lam = tuple(
            tuple(mul[a][add[inv[a]][b]] for b in range(n)) for a in range(n)
        )
        rho = tuple(
            tuple(mul[inv[add[inv[a]][b]]][b] for a in range(n)) for b in range(n)
        )
        self.E, self.G, self.gpart, self.epart = E, G, gpart, epart
        self.lam, self.rho = lam, rho

        # Light theory checks (cheap, catch corrupted tables early).
        for a in range(n):
            if len(set(lam[a])) != n:
                raise InternalInconsistency(f"λ_{a} is not a bijection")
            for e in E:
                if lam[a][e] not in E:
                    raise InternalInconsistency(f"λ_{a}(E) leaves E at {e}")
            for b in rho[a]:
                if b not in G:
                    raise InternalInconsistency(f"ρ_{a} leaves G")
        for b in range(n):
            if lam[b][0] != epart[b]:
                raise InternalInconsistency(f"λ_b(0) != e_b at {b}")
            if inv[rho[0][inv[b]]] != gpart[b]:
                raise InternalInconsistency(f"ρ_0(b⁻)⁻ != g_b at {b}")
            for a in range(n):
                if mul[a][b] != add[a][lam[a][b]]:
                    raise InternalInconsistency(f"a∘b != a + λ_a(b) at ({a},{b})")

    # -- elementary operations --------------------------------------------

    def elements(self) -> range:
        return range(self.n)

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def circ(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inv_of(self, a: int) -> int:
        return self.inv[a]

    def neg_of(self, g: int) -> int:
        """Additive inverse, defined only inside (G, +)."""
        v = self.add_inv[g]
        if v < 0:
            raise NotInG(g)
        return v

    def sum_seq(self, *xs: int) -> int:
        """Left-to-right sum of one or more elements."""
        acc = xs[0]
        for x in xs[1:]:
            acc = self.add[acc][x]
        return acc

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def label_set(self, xs) -> list[str]:
        return [self.label(x) for x in sorted(xs)]

    def is_skew_brace(self) -> bool:
        return self.E == frozenset({0})

    # -- fundamental maps ---------------------------------------------------

    def lambda_map(self, a: int) -> MapTable:
        return MapTable("lambda", a, self.lam[a])

    def rho_map(self, b: int) -> MapTable:
        return MapTable("rho", b, self.rho[b])

    def group_part(self, b: int) -> int:
        return self.gpart[b]

    def idempotent_part(self, b: int) -> int:
        return self.epart[b]

    def factorize_mul(self, b: int) -> tuple[int, int]:
        """The unique (g, e) ∈ G×E with g∘e = b: g = g_b, e = λ_{g⁻}(e_b)."""
        g = self.gpart[b]
        e = self.lam[self.inv[g]][self.epart[b]]
        if self.mul[g][e] != b:
            raise InternalInconsistency(f"g∘e != b at {b}")
        return g, e

    def dot(self, a: int, b: int) -> int:
        """a·b = λ_a(a⁻) + a∘b + λ_b(b⁻), cross-checked in three forms."""
        return self.dot_table()[a][b]

    def dot_table(self) -> Table:
        if self._dot is None:
            n, add, mul, inv = self.n, self.add, self.mul, self.inv
            lam, gpart, add_inv = self.lam, self.gpart, self.add_inv
            rows = []
            for a in range(n):
                la = add[lam[a][inv[a]]]
                nga = add[add_inv[gpart[a]]]
                row = []
                for b in range(n):
                    ab = mul[a][b]
                    lbb = lam[b][inv[b]]
                    f1 = add[la[ab]][lbb]
                    f2 = add[nga[ab]][add_inv[gpart[b]]]
                    f3 = add[lam[a][b]][lbb]
                    if not (f1 == f2 == f3):
                        raise InternalInconsistency(
                            f"dot formulas disagree at ({a},{b}): {f1},{f2},{f3}"
                        )
                    if f1 not in self.G:
                        raise InternalInconsistency(f"{a}·{b} lies outside G")
                    row.append(f1)
                rows.append(tuple(row))
            self._dot = tuple(rows)
        return self._dot


def validate(add, mul, labels=None) -> FiniteLeftSemibrace:
    """Validate a pair of Cayley tables as a finite left semi-brace.

    Checks, in order: (B, ∘) is a group (relocating the identity to
    index 0 when needed), every + row is injective, + is associative,
    and the compatibility law holds.  Each failure names the first
    witness in element order.  The returned structure carries all
    derived data (E, G, parts, inverses, λ/ρ tables) fully cached.
    """
    return FiniteLeftSemibrace(add, mul, labels)
