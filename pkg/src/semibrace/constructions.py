"""Builders for semi-braces and quotients by ideals.

Every constructor hands its output to the validator before returning;
nothing here can produce an unvalidated table pair.

Product carriers are indexed row-major with the left factor most
significant: the pair (x, y) sits at index x*|right| + y, so the pair
of identities lands at index 0 as required.
"""

from __future__ import annotations

from itertools import product

from .core import FiniteLeftSemibrace, validate
from .errors import (
    AddNotAGroup,
    InternalInconsistency,
    NotAHomomorphism,
    NotAnIdeal,
    NotAutomorphism,
    NotEndomorphism,
    NotIdempotentMap,
    QuotientIllDefined,
    ValidationError,
)
from .groups import GroupTable
from .subsets import e_ideal_report, is_ideal_thm


def trivial_semibrace(g: GroupTable, labels=None) -> FiniteLeftSemibrace:
    """The trivial semi-brace on a group: a + b = b, so G = {0} and E = B."""
    n = g.order
    add = tuple(tuple(range(n)) for _ in range(n))
    B = validate(add, g.table, labels or g.labels)
    if B.G != frozenset({0}) or B.E != frozenset(B.elements()):
        raise InternalInconsistency("trivial semi-brace has wrong decomposition")
    return B


def from_idempotent_endomorphism(g: GroupTable, phi, labels=None) -> FiniteLeftSemibrace:
    """Semi-brace from an idempotent endomorphism: a + b = b∘φ(a).

    G comes out as im(φ) and E as ker(φ), E is an ideal, and inside G the
    sum is the opposite product g + h = h∘g.
    """
    n = g.order
    phi = tuple(phi)
    if len(phi) != n or any(not (0 <= v < n) for v in phi):
        raise ValidationError("phi must map every element to an element")
    for a in range(n):
        for b in range(n):
            if phi[g.mul(a, b)] != g.mul(phi[a], phi[b]):
                raise NotEndomorphism((a, b))
    for a in range(n):
        if phi[phi[a]] != phi[a]:
            raise NotIdempotentMap(a)

    add = tuple(tuple(g.mul(b, phi[a]) for b in range(n)) for a in range(n))
    B = validate(add, g.table, labels or g.labels)
    if B.G != frozenset(phi) or B.E != frozenset(a for a in range(n) if phi[a] == 0):
        raise InternalInconsistency("G, E differ from im(phi), ker(phi)")
    if not e_ideal_report(B).is_ideal:
        raise InternalInconsistency("E must be an ideal in the endomorphism build")
    for x in B.G:
        for y in B.G:
            if B.add[x][y] != B.mul[y][x]:
                raise InternalInconsistency("sum on G is not the opposite product")
    return B


def _pair_labels(x: FiniteLeftSemibrace, y: FiniteLeftSemibrace):
    return tuple(
        f"({x.label(a)}, {y.label(b)})" for a in x.elements() for b in y.elements()
    )


def semidirect_product(
    normal: FiniteLeftSemibrace,
    actor: FiniteLeftSemibrace,
    action,
) -> FiniteLeftSemibrace:
    """Semidirect product on normal × actor, with the actor acting.

    ``action[a]`` is a permutation of the normal factor for every actor
    element a; each must be an automorphism of both operations of
    ``normal`` and a ↦ action[a] must be a homomorphism from the actor's
    multiplicative group.  Operations on pairs:

        (x1, a1) + (x2, a2) = (x1 + x2, a1 + a2)
        (x1, a1) ∘ (x2, a2) = (x1 ∘ action[a1](x2), a1 ∘ a2)

    With a trivial normal factor and a skew-brace actor this is the
    classical splitting whose idempotents normal × {0} form an ideal;
    with a skew-brace normal factor and trivial actor it reproduces the
    twisted examples where E need not be an ideal.
    """
    nn, na = normal.n, actor.n
    action = tuple(tuple(m) for m in action)
    if len(action) != na:
        raise NotAHomomorphism("action must assign a map to every actor element")
    for a, m in enumerate(action):
        if sorted(m) != list(range(nn)):
            raise NotAutomorphism((a, "not a permutation"))
        for x in range(nn):
            for y in range(nn):
                if m[normal.add[x][y]] != normal.add[m[x]][m[y]]:
                    raise NotAutomorphism((a, "+", x, y))
                if m[normal.mul[x][y]] != normal.mul[m[x]][m[y]]:
                    raise NotAutomorphism((a, "∘", x, y))
    for a in range(na):
        for b in range(na):
            composed = tuple(action[a][action[b][x]] for x in range(nn))
            if composed != action[actor.mul[a][b]]:
                raise NotAHomomorphism((a, b))
    if action[0] != tuple(range(nn)):
        raise NotAHomomorphism((0, "identity must act trivially"))

    def idx(x, a):
        return x * na + a

    order = nn * na
    add = [[0] * order for _ in range(order)]
    mul = [[0] * order for _ in range(order)]
    for x1, a1, x2, a2 in product(range(nn), range(na), range(nn), range(na)):
        add[idx(x1, a1)][idx(x2, a2)] = idx(normal.add[x1][x2], actor.add[a1][a2])
        mul[idx(x1, a1)][idx(x2, a2)] = idx(
            normal.mul[x1][action[a1][x2]], actor.mul[a1][a2]
        )
    return validate(add, mul, _pair_labels(normal, actor))


def direct_product(x: FiniteLeftSemibrace, y: FiniteLeftSemibrace) -> FiniteLeftSemibrace:
    """Componentwise product; G and E multiply componentwise too."""
    trivial_action = tuple(tuple(range(x.n)) for _ in range(y.n))
    B = semidirect_product(x, y, trivial_action)
    ny = y.n
    G = frozenset(a * ny + b for a in x.G for b in y.G)
    E = frozenset(a * ny + b for a in x.E for b in y.E)
    if B.G != G or B.E != E:
        raise InternalInconsistency("product decomposition is not componentwise")
    return B


def skew_brace_embed(add, mul, labels=None) -> FiniteLeftSemibrace:
    """Validate a pair of tables whose addition is a full group (E = {0}).

    λ then takes the skew-brace form λ_g(b) = -g + g∘b.
    """
    n = len(add)
    tab = tuple(tuple(row) for row in add)
    identity = None
    for e in range(n):
        if all(tab[e][x] == x and tab[x][e] == x for x in range(n)):
            identity = e
            break
    if identity is None:
        raise AddNotAGroup("no two-sided identity")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if tab[tab[a][b]][c] != tab[a][tab[b][c]]:
                    raise AddNotAGroup("not associative", (a, b, c))
    for a in range(n):
        if not any(tab[a][b] == identity and tab[b][a] == identity for b in range(n)):
            raise AddNotAGroup(f"element {a} has no inverse", a)

    B = validate(add, mul, labels)
    if not B.is_skew_brace():
        raise InternalInconsistency("additive group input must give E = {0}")
    for g in B.elements():
        for b in B.elements():
            if B.lam[g][b] != B.add[B.add_inv[g]][B.mul[g][b]]:
                raise InternalInconsistency("λ does not take the skew-brace form")
    return B


def sub_semibrace(B: FiniteLeftSemibrace, subset):
    """Restrict B to a subset closed under +, ∘ and ∘-inverse containing 0.

    Returns (S, embed) where embed maps S's indices back into B.
    """
    subset = frozenset(subset)
    if 0 not in subset:
        raise ValidationError("substructure must contain 0")
    embed = sorted(subset)
    pos = {b: i for i, b in enumerate(embed)}
    for x in embed:
        if B.inv[x] not in subset:
            raise ValidationError(f"subset not closed under inverse at {x}")
        for y in embed:
            if B.add[x][y] not in subset or B.mul[x][y] not in subset:
                raise ValidationError(f"subset not closed at ({x},{y})")
    n = len(embed)
    add = [[pos[B.add[embed[a]][embed[b]]] for b in range(n)] for a in range(n)]
    mul = [[pos[B.mul[embed[a]][embed[b]]] for b in range(n)] for a in range(n)]
    labels = tuple(B.label(x) for x in embed) if B.labels else None
    return validate(add, mul, labels), embed


def quotient(B: FiniteLeftSemibrace, I):
    """Quotient by an ideal: classes are the ∘-cosets of I.

    Well-definedness of both induced operations is verified exhaustively
    before the quotient is validated.  Returns (Q, proj) with proj the
    element-to-class index map; the class of 0 (that is, I itself) gets
    index 0, the rest are ordered by their least member.
    """
    I = frozenset(I)
    verdict = is_ideal_thm(B, I)
    if not verdict.is_ideal:
        raise NotAnIdeal(verdict.failed_condition, verdict.witness)

    class_of = [-1] * B.n
    reps = []
    for a in B.elements():
        if class_of[a] >= 0:
            continue
        coset = sorted(B.mul[a][i] for i in I)
        k = len(reps)
        reps.append(coset[0])
        for x in coset:
            class_of[x] = k
    # reps come out ordered by least member because element 0 ∈ I.

    # + may disagree across coset representatives even when ∘ cannot;
    # a∘i ~ a is the generating relation, so checking it on both sides
    # of + (and of ∘, cheaply) certifies the congruence.
    for a in B.elements():
        for b in B.elements():
            cab_add = class_of[B.add[a][b]]
            cab_mul = class_of[B.mul[a][b]]
            for i in I:
                ai = B.mul[a][i]
                bi = B.mul[b][i]
                if class_of[B.add[ai][b]] != cab_add or class_of[B.add[a][bi]] != cab_add:
                    raise QuotientIllDefined((a, b, i, "+"))
                if class_of[B.mul[ai][b]] != cab_mul or class_of[B.mul[a][bi]] != cab_mul:
                    raise QuotientIllDefined((a, b, i, "∘"))

    m = len(reps)
    qadd = [[class_of[B.add[reps[x]][reps[y]]] for y in range(m)] for x in range(m)]
    qmul = [[class_of[B.mul[reps[x]][reps[y]]] for y in range(m)] for x in range(m)]
    labels = tuple(f"[{B.label(r)}]" for r in reps) if B.labels else None
    Q = validate(qadd, qmul, labels)
    for a in B.elements():
        for b in B.elements():
            if class_of[B.add[a][b]] != Q.add[class_of[a]][class_of[b]]:
                raise InternalInconsistency("projection does not preserve +")
            if class_of[B.mul[a][b]] != Q.mul[class_of[a]][class_of[b]]:
                raise InternalInconsistency("projection does not preserve ∘")
    return Q, tuple(class_of)
