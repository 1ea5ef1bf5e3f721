"""Subset algebra over a semi-brace: closures, ideals, socles, centers.

Subsets of the element universe are plain ``frozenset[int]`` values.
All predicates report the lexicographically first counterexample under
element order, so failures are reproducible.

Ideal-hood has three provably equivalent formulations, all implemented
independently so they can cross-check each other:

  * the definitional route (a +-subsemigroup satisfying D1-D4),
  * the reformulated route C1-C4 in terms of λ and normality,
  * the dot-product route P1-P5 using I·B and B·I.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteLeftSemibrace
from .errors import (
    EmptyOperand,
    ENotIdeal,
    InconsistentEquivalences,
    InternalInconsistency,
    NotASubsemigroup,
    NotInG,
)

Subset = frozenset


@dataclass(frozen=True)
class IdealVerdict:
    """Outcome of an ideal or left-ideal test.

    ``failed_condition`` names the first failing condition of the route
    that produced this verdict (L1-L4 for left ideals, C1-C4 for the
    reformulated route, D0-D4 for the definitional route, P0-P5 for the
    dot-product route); ``witness`` instantiates the failure.  It is set
    exactly when the verdict's own flag is false.
    """

    is_left_ideal: bool
    is_ideal: bool
    failed_condition: str | None = None
    witness: tuple | None = None


@dataclass(frozen=True)
class EIdealReport:
    """Whether E is an ideal, with the first normality witness on failure.

    ``witness`` is a triple (b, e, b∘e∘b⁻) with the conjugate outside E.
    """

    is_ideal: bool
    witness: tuple | None = None


# -- closures and products -------------------------------------------------

def add_subgroup_gen(B: FiniteLeftSemibrace, xs) -> Subset:
    """Smallest subgroup of (G, +) containing xs; {0} for empty xs."""
    xs = frozenset(xs)
    for x in xs:
        if x not in B.G:
            raise NotInG(x)
    closure = {0}
    frontier = list(xs | {0})
    closure |= xs
    add, add_inv = B.add, B.add_inv
    while frontier:
        x = frontier.pop()
        for y in tuple(closure):
            for z in (add[x][y], add[y][x]):
                if z not in closure:
                    closure.add(z)
                    frontier.append(z)
        ix = add_inv[x]
        if ix not in closure:
            closure.add(ix)
            frontier.append(ix)
    return frozenset(closure)


def mul_subgroup_gen(B: FiniteLeftSemibrace, xs) -> Subset:
    """Smallest subgroup of (B, ∘) containing xs; {0} for empty xs."""
    closure = {0}
    frontier = list(frozenset(xs) | {0})
    closure |= set(xs)
    mul, inv = B.mul, B.inv
    while frontier:
        x = frontier.pop()
        for y in tuple(closure):
            for z in (mul[x][y], mul[y][x]):
                if z not in closure:
                    closure.add(z)
                    frontier.append(z)
        ix = inv[x]
        if ix not in closure:
            closure.add(ix)
            frontier.append(ix)
    return frozenset(closure)


def dot_set(B: FiniteLeftSemibrace, X, Y) -> Subset:
    """X·Y: the subgroup of (G, +) generated by {x·y  |  x ∈ X, y ∈ Y}."""
    if not X or not Y:
        raise EmptyOperand("dot_set requires nonempty operands")
    dot = B.dot_table()
    gens = {dot[x][y] for x in X for y in Y}
    return add_subgroup_gen(B, gens)


def sumset(B: FiniteLeftSemibrace, X, Y) -> Subset:
    """{x + y | x ∈ X, y ∈ Y}."""
    add = B.add
    return frozenset(add[x][y] for x in X for y in Y)


def additive_commutator(B: FiniteLeftSemibrace, a: int, b: int) -> int:
    """[a, b]_+ = -a - b + a + b, defined for a, b ∈ G."""
    if a not in B.G:
        raise NotInG(a)
    if b not in B.G:
        raise NotInG(b)
    return B.sum_seq(B.add_inv[a], B.add_inv[b], a, b)


# -- ideal predicates --------------------------------------------------------

def _subgroup_of_G(B, S):
    """S is a subgroup of (G, +); witness or None."""
    if 0 not in S:
        return ("no-zero", (0,))
    for x in sorted(S):
        if x not in B.G:
            return ("not-in-G", (x,))
        for y in sorted(S):
            if B.add[x][y] not in S:
                return ("sum", (x, y))
        if B.add_inv[x] not in S:
            return ("neg", (x,))
    return None


def _normal_in_G(B, S):
    """g + x - g ∈ S for all g ∈ G, x ∈ S; witness or None."""
    for g in sorted(B.G):
        for x in sorted(S):
            if B.sum_seq(g, x, B.add_inv[g]) not in S:
                return (g, x)
    return None


def _mul_subgroup(B, I):
    if 0 not in I:
        return ("no-zero", (0,))
    for x in sorted(I):
        for y in sorted(I):
            if B.mul[x][y] not in I:
                return ("product", (x, y))
        if B.inv[x] not in I:
            return ("inverse", (x,))
    return None


def _mul_normal(B, I):
    for b in range(B.n):
        for x in sorted(I):
            if B.mul[B.mul[b][x]][B.inv[b]] not in I:
                return (b, x)
    return None


def _subsemigroup_witness(B, I):
    for x in sorted(I):
        for y in sorted(I):
            if B.add[x][y] not in I:
                return (x, y)
    return None


def _left_ideal_failure(B, I):
    """First failing condition of the left-ideal definition, or None."""
    for x in sorted(I):
        if B.add[x][0] not in I:
            return ("L1", (x,))
    w = _subgroup_of_G(B, I & B.G)
    if w:
        return ("L2", w[1])
    for g in sorted(B.G):
        for x in sorted(I):
            if B.lam[g][x] not in I:
                return ("L3", (g, x))
    w = _mul_subgroup(B, I)
    if w:
        return ("L4", w[1])
    return None


def _ideal_thm_failure(B, I):
    """First failing condition of the reformulated route, or None."""
    for x in sorted(I):
        if B.add[x][0] not in I:
            return ("C1", (x,))
    S = I & B.G
    w = _subgroup_of_G(B, S)
    if w:
        return ("C2", w[1])
    w = _normal_in_G(B, S)
    if w:
        return ("C2", w)
    for g in sorted(B.G):
        for x in sorted(I):
            if B.lam[g][x] not in I:
                return ("C3", (g, x))
    w = _mul_subgroup(B, I)
    if w:
        return ("C4", w[1])
    w = _mul_normal(B, I)
    if w:
        return ("C4", w)
    return None


def is_left_ideal(B: FiniteLeftSemibrace, I) -> IdealVerdict:
    """Left ideal test: I+0 ⊆ I, I∩G ≤ (G,+), λ_G(I) ⊆ I, I ≤ (B,∘)."""
    I = frozenset(I)
    if not I:
        raise EmptyOperand("left-ideal test requires a nonempty subset")
    fail = _left_ideal_failure(B, I)
    ideal = _ideal_thm_failure(B, I) is None
    if fail is None:
        return IdealVerdict(True, ideal)
    return IdealVerdict(False, ideal, fail[0], fail[1])


def is_ideal_thm(B: FiniteLeftSemibrace, I) -> IdealVerdict:
    """Ideal test via the reformulated conditions C1-C4."""
    I = frozenset(I)
    if not I:
        raise EmptyOperand("ideal test requires a nonempty subset")
    fail = _ideal_thm_failure(B, I)
    left = _left_ideal_failure(B, I) is None
    if fail is None:
        return IdealVerdict(left, True)
    return IdealVerdict(left, False, fail[0], fail[1])


def is_ideal_def17(B: FiniteLeftSemibrace, I) -> IdealVerdict:
    """Ideal test by the original definition D1-D4 on a +-subsemigroup.

    A subset that is not a +-subsemigroup gets verdict False with tag D0.
    """
    I = frozenset(I)
    if not I:
        raise EmptyOperand("ideal test requires a nonempty subset")
    left = _left_ideal_failure(B, I) is None

    w = _subsemigroup_witness(B, I)
    if w:
        return IdealVerdict(left, False, "D0", w)
    w = _mul_subgroup(B, I)
    if w:
        return IdealVerdict(left, False, "D1", w[1])
    w = _mul_normal(B, I)
    if w:
        return IdealVerdict(left, False, "D1", w)
    S = I & B.G
    w = _subgroup_of_G(B, S)
    if w:
        return IdealVerdict(left, False, "D2", w[1])
    w = _normal_in_G(B, S)
    if w:
        return IdealVerdict(left, False, "D2", w)
    for b in range(B.n):
        for x in sorted(S):
            if B.rho[b][x] not in I:
                return IdealVerdict(left, False, "D3", (b, x))
    for g in sorted(B.G):
        for e in sorted(I & B.E):
            if B.lam[g][e] not in I:
                return IdealVerdict(left, False, "D4", (g, e))
    return IdealVerdict(left, True)


def is_ideal_prop(B: FiniteLeftSemibrace, I) -> IdealVerdict:
    """Ideal test via the dot-product conditions P1-P5.

    Requires I to be a +-subsemigroup (raises NotASubsemigroup otherwise).
    """
    I = frozenset(I)
    if not I:
        raise EmptyOperand("ideal test requires a nonempty subset")
    w = _subsemigroup_witness(B, I)
    if w:
        raise NotASubsemigroup(w)
    left = _left_ideal_failure(B, I) is None

    S = I & B.G
    w = _subgroup_of_G(B, S)
    if w:
        return IdealVerdict(left, False, "P1", w[1])
    w = _normal_in_G(B, S)
    if w:
        return IdealVerdict(left, False, "P1", w)
    for g in sorted(B.G):
        for e in sorted(I & B.E):
            if B.lam[g][e] not in I:
                return IdealVerdict(left, False, "P2", (g, e))
    if not dot_set(B, I, frozenset(B.elements())) <= I:
        dot = B.dot_table()
        wit = next(
            (x, b) for x in sorted(I) for b in B.elements() if dot[x][b] not in I
        )
        return IdealVerdict(left, False, "P3", wit)
    if not dot_set(B, frozenset(B.elements()), I) <= I:
        dot = B.dot_table()
        wit = next(
            (b, x) for b in B.elements() for x in sorted(I) if dot[b][x] not in I
        )
        return IdealVerdict(left, False, "P3", wit)
    for x in sorted(I):
        for a in sorted(B.G | B.E):
            conj = B.mul[B.mul[B.inv[a]][x]][a]
            if B.lam[conj][0] not in I:
                return IdealVerdict(left, False, "P4", (x, a))
    w = _mul_subgroup(B, I)
    if w:
        return IdealVerdict(left, False, "P5", w[1])
    return IdealVerdict(left, True)


# -- socles, annihilator, centers -------------------------------------------

def socle(B: FiniteLeftSemibrace) -> Subset:
    """Soc(B) = {a | ρ_a = ρ_0, λ_a = λ_0}, cross-checked natively.

    The second form {a ∈ G | ∀b: a+b = a∘b and -a+b+a = b+0} and, on
    skew braces, {a | ∀b: a·b = 0, b+a = a+b} must agree; a mismatch
    means a corrupted structure.
    """
    lam0, rho0 = B.lam[0], B.rho[0]
    soc = frozenset(
        a for a in B.elements() if B.lam[a] == lam0 and B.rho[a] == rho0
    )
    second = frozenset(
        a
        for a in sorted(B.G)
        if all(
            B.add[a][b] == B.mul[a][b]
            and B.sum_seq(B.add_inv[a], b, a) == B.add[b][0]
            for b in B.elements()
        )
    )
    if soc != second:
        raise InternalInconsistency("socle characterizations disagree")
    if B.is_skew_brace():
        dot = B.dot_table()
        skew = frozenset(
            a
            for a in B.elements()
            if all(
                dot[a][b] == 0 and B.add[b][a] == B.add[a][b]
                for b in B.elements()
            )
        )
        if soc != skew:
            raise InternalInconsistency("skew-brace socle form disagrees")
    return soc


def e_ideal_report(B: FiniteLeftSemibrace) -> EIdealReport:
    """Decide whether E is an ideal, through five equivalent routes.

    (i) E is normal in (B, ∘); (ii) e·b = 0 for all e ∈ E, b ∈ B;
    (iii) a·b = g_a·g_b for all a, b; (iv) e∘g = g + e for all e ∈ E,
    g ∈ G; (v) ρ_0 is an idempotent endomorphism of (B, ∘) with image G
    and kernel E.  All five are evaluated; disagreement raises.
    """
    E, G = B.E, B.G
    witness = None
    for b in B.elements():
        for e in sorted(E):
            conj = B.mul[B.mul[b][e]][B.inv[b]]
            if conj not in E:
                witness = (b, e, conj)
                break
        if witness:
            break
    normal = witness is None

    dot = B.dot_table()
    route2 = all(dot[e][b] == 0 for e in E for b in B.elements())
    route3 = all(
        dot[a][b] == dot[B.gpart[a]][B.gpart[b]]
        for a in B.elements()
        for b in B.elements()
    )
    route4 = all(B.mul[e][g] == B.add[g][e] for e in E for g in G)

    rho0 = B.rho[0]
    route5 = (
        all(
            rho0[B.mul[a][b]] == B.mul[rho0[a]][rho0[b]]
            for a in B.elements()
            for b in B.elements()
        )
        and all(rho0[rho0[a]] == rho0[a] for a in B.elements())
        and frozenset(rho0) == G
        and frozenset(a for a in B.elements() if rho0[a] == 0) == E
    )

    votes = {normal, route2, route3, route4, route5}
    if len(votes) != 1:
        raise InconsistentEquivalences(
            f"E-ideal routes disagree: normal={normal}, dot={route2}, "
            f"gparts={route3}, swap={route4}, rho0={route5}"
        )
    return EIdealReport(normal, witness)


def generalized_socle(B: FiniteLeftSemibrace) -> Subset:
    """Zoc(B) = Soc(B) + E; only defined when E is an ideal.

    Cross-checked against the map characterizations
    {a | ρ_a = ρ_0, λ_a = λ_{e_a}} and {a | ρ_a = ρ_{e_a}, λ_a = λ_{e_a}}.
    """
    rep = e_ideal_report(B)
    if not rep.is_ideal:
        raise ENotIdeal(rep.witness)
    zoc = sumset(B, socle(B), B.E)
    by_maps = frozenset(
        a
        for a in B.elements()
        if B.rho[a] == B.rho[0] and B.lam[a] == B.lam[B.epart[a]]
    )
    by_maps2 = frozenset(
        a
        for a in B.elements()
        if B.rho[a] == B.rho[B.epart[a]] and B.lam[a] == B.lam[B.epart[a]]
    )
    if zoc != by_maps or zoc != by_maps2:
        raise InternalInconsistency("generalized socle characterizations disagree")
    return zoc


def center_mul(B: FiniteLeftSemibrace) -> Subset:
    """Center of the group (B, ∘)."""
    return frozenset(
        a
        for a in B.elements()
        if all(B.mul[a][b] == B.mul[b][a] for b in B.elements())
    )


def upper_central_series_mul(B: FiniteLeftSemibrace) -> list[Subset]:
    """ζ_0 = {0} ⊆ ζ_1 ⊆ ... of (B, ∘), listed up to the first repeat."""
    return _upper_central(B.mul, B.inv, frozenset(B.elements()))


def _upper_central(mul, inv, universe) -> list[Subset]:
    terms = [frozenset({0})]
    while True:
        cur = terms[-1]
        nxt = frozenset(
            a
            for a in universe
            if all(
                mul[mul[mul[a][b]][inv[a]]][inv[b]] in cur for b in universe
            )
        )
        terms.append(nxt)
        if nxt == cur:
            return terms


def mul_group_nilpotent_on(B: FiniteLeftSemibrace, subset) -> bool:
    """Whether a ∘-subgroup of B is nilpotent, via its upper central series."""
    subset = frozenset(subset)
    terms = _upper_central(B.mul, B.inv, subset)
    return terms[-1] == subset


def add_group_G_nilpotent(B: FiniteLeftSemibrace) -> bool:
    """Whether the group (G, +) is nilpotent."""
    G = sorted(B.G)
    terms = [frozenset({0})]
    while True:
        cur = terms[-1]
        nxt = frozenset(
            g
            for g in G
            if all(additive_commutator(B, g, h) in cur for h in G)
        )
        if nxt == cur:
            return cur == B.G
        terms.append(nxt)


def annihilator(B: FiniteLeftSemibrace) -> Subset:
    """Ann(B) = Soc(B)∩Z(B) + E∩Z(B), with Z(B) the center of (B, ∘).

    When E is an ideal the result must kill everything under · in both
    orders and must itself be an ideal; both facts are asserted.
    """
    Z = center_mul(B)
    ann = sumset(B, socle(B) & Z, B.E & Z)
    if e_ideal_report(B).is_ideal:
        dot = B.dot_table()
        for a in sorted(ann):
            for b in B.elements():
                if dot[a][b] != 0 or dot[b][a] != 0:
                    raise InternalInconsistency(
                        f"annihilator element {a} does not annihilate {b}"
                    )
        if not is_ideal_thm(B, ann).is_ideal:
            raise InternalInconsistency("annihilator is not an ideal")
    return ann


def congruent_mod(B: FiniteLeftSemibrace, I, a: int, b: int) -> bool:
    """a ~ b modulo I, with a∘b⁻ ∈ I as the defining relation."""
    return B.mul[a][B.inv[b]] in frozenset(I)
