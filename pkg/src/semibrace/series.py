"""Nilpotency series and classification.

Six chains are computed, each iterated to an explicit fixpoint
(term_{k+1} = term_k) with the sanity bound of at most |B| + 1 terms:

  right   B⁽¹⁾ = B,  B⁽ⁿ⁺¹⁾ = B⁽ⁿ⁾·B + E        (ideals, descending)
  left    B¹ = B,    Bⁿ⁺¹ = B·Bⁿ + E            (left ideals, descending)
  strong  B^[1] = B, B^[n+1] = ⟨∪ᵢ B^[i]·B^[n+1-i]⟩₊ + E   (left ideals)
  soc     Soc₀ = {0}, Soc_k = preimage of Soc(B/Soc_{k-1})  (ascending)
  zoc     Zoc₀ = E, Zoc₁ = Soc(B)+E, then Zoc_k = preimage of
          Soc(B/Zoc_{k-1})                       (needs E ideal, ascending)
  ann     Ann_k = Soc_k ∩ ζ_k + E ∩ ζ_k          (ascending)

plus the upper central series ζ_k of (B, ∘).  B is right/left/strongly
nilpotent when the matching chain reaches E, and nilpotent when the
annihilator chain reaches B.

The right and left recurrences depend only on the previous term, so a
repeated term certifies stabilization.  The strong recurrence consumes
the whole history; a repeat above E is therefore re-verified out to the
|B| + 1 bound before it is trusted (a term equal to E is final outright,
since every term contains E and the chain descends).

Note on the generalized socle: Zoc₁ is Soc(B) + E by definition, which
can be strictly smaller than the next quotient-defined term, so the
fixpoint scan starts at index 1.  The chain may climb past Soc-series
levels: quotienting by an ideal containing E can enlarge socles, so
Zoc_n = Soc_n + E fails in general (the φ-built semi-brace on Sym₃ has
Soc₂ = {id} but Zoc₂ = B).  The quotient-based definition is the one
consistent with the z-series characterizations, and it is what this
module computes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import quotient, sub_semibrace
from .core import FiniteLeftSemibrace
from .errors import ConsistencyViolation, ENotIdeal
from .subsets import (
    Subset,
    add_group_G_nilpotent,
    add_subgroup_gen,
    additive_commutator,
    center_mul,
    dot_set,
    e_ideal_report,
    generalized_socle,
    is_ideal_thm,
    is_left_ideal,
    mul_group_nilpotent_on,
    socle,
    sumset,
    upper_central_series_mul,
)


@dataclass(frozen=True)
class SeriesReport:
    """A stabilized chain of subsets.

    ``terms[stabilized_at] == terms[stabilized_at + 1]`` and the
    computation halted there; ``terminal`` repeats the fixpoint.
    """

    kind: str
    terms: tuple[Subset, ...]
    stabilized_at: int
    terminal: Subset


@dataclass(frozen=True)
class NilpotencyProfile:
    right_nilpotent: bool
    left_nilpotent: bool
    strongly_nilpotent: bool
    nilpotent: bool
    right_nil: bool
    left_nil: bool
    has_z_series: bool
    mul_group_nilpotent: bool
    add_group_G_nilpotent: bool
    E_is_ideal: bool
    indices: dict = field(default_factory=dict)


def _report(kind, terms, descending, scan_from=0) -> SeriesReport:
    for a, b in zip(terms, terms[1:]):
        ok = b <= a if descending else a <= b
        if not ok:
            raise ConsistencyViolation(f"{kind}-series-monotonicity")
    stab = next(
        i for i in range(scan_from, len(terms) - 1) if terms[i] == terms[i + 1]
    )
    return SeriesReport(kind, tuple(terms), stab, terms[-1])


def _iterate_memoryless(B, kind, first, step, descending, check=None):
    terms = [first]
    while True:
        nxt = step(terms[-1])
        if check is not None:
            check(nxt, len(terms))
        terms.append(nxt)
        if nxt == terms[-2]:
            break
        if len(terms) > B.n + 1:
            raise ConsistencyViolation(f"{kind}-series-exceeded-bound")
    return _report(kind, terms, descending)


def right_series(B: FiniteLeftSemibrace) -> SeriesReport:
    """B⁽ⁿ⁺¹⁾ = B⁽ⁿ⁾·B + E; every term must be an ideal."""
    full = frozenset(B.elements())

    def step(cur):
        return sumset(B, dot_set(B, cur, full), B.E)

    def check(term, k):
        v = is_ideal_thm(B, term)
        if not v.is_ideal:
            raise ConsistencyViolation(
                "right-series-term-not-ideal", (k, v.failed_condition, v.witness)
            )

    check(full, 0)
    return _iterate_memoryless(B, "right", full, step, descending=True, check=check)


def left_series(B: FiniteLeftSemibrace) -> SeriesReport:
    """Bⁿ⁺¹ = B·Bⁿ + E; every term must be a left ideal."""
    full = frozenset(B.elements())

    def step(cur):
        return sumset(B, dot_set(B, full, cur), B.E)

    def check(term, k):
        v = is_left_ideal(B, term)
        if not v.is_left_ideal:
            raise ConsistencyViolation(
                "left-series-term-not-left-ideal", (k, v.failed_condition, v.witness)
            )

    return _iterate_memoryless(B, "left", full, step, descending=True, check=check)


def _strong_next(B, terms, idempotents):
    dot = B.dot_table()
    gens = set()
    n = len(terms)
    for i in range(n):  # terms[i] is the (i+1)-st chain member
        for x in terms[i]:
            for y in terms[n - 1 - i]:
                gens.add(dot[x][y])
    return sumset(B, add_subgroup_gen(B, gens), idempotents)


def strong_series(B: FiniteLeftSemibrace, *, _idempotents=None, _check=True) -> SeriesReport:
    """B^[n+1] = ⟨∪ᵢ₌₁ⁿ B^[i]·B^[n+1-i]⟩₊ + E; terms are left ideals."""
    E = _idempotents if _idempotents is not None else B.E
    full = frozenset(B.elements())
    terms = [full]
    while True:
        nxt = _strong_next(B, terms, E)
        if _check:
            v = is_left_ideal(B, nxt)
            if not v.is_left_ideal:
                raise ConsistencyViolation(
                    "strong-series-term-not-left-ideal",
                    (len(terms), v.failed_condition, v.witness),
                )
        plateau = nxt == terms[-1]
        terms.append(nxt)
        if nxt == E:
            if not plateau:
                terms.append(nxt)
            break
        if plateau:
            # the recurrence reads the whole history, so re-verify the
            # repeat out to the sanity bound before trusting it
            probe = list(terms)
            while len(probe) <= B.n + 1:
                again = _strong_next(B, probe, E)
                if again != nxt:
                    raise ConsistencyViolation("strong-series-false-plateau")
                probe.append(again)
            break
        if len(terms) > B.n + 1:
            raise ConsistencyViolation("strong-series-exceeded-bound")
    return _report("strong", terms, descending=True)


def soc_series(B: FiniteLeftSemibrace) -> SeriesReport:
    """Socle chain via quotient preimages: Soc_k = π⁻¹(Soc(B/Soc_{k-1}))."""

    def step(cur):
        Q, proj = quotient(B, cur)
        socQ = socle(Q)
        return frozenset(b for b in B.elements() if proj[b] in socQ)

    report = _iterate_memoryless(
        B, "soc", frozenset({0}), step, descending=False
    )
    if B.is_skew_brace():
        _check_socle_chain_skew(B, report.terms)
    return report


def _check_socle_chain_skew(B, terms):
    # on skew braces each step has the elementwise description
    #   Soc_k = {a | ∀b: a·b ∈ Soc_{k-1} and [a,b]₊ ∈ Soc_{k-1}}
    dot = B.dot_table()
    for k in range(1, len(terms)):
        prev = terms[k - 1]
        direct = frozenset(
            a
            for a in B.elements()
            if all(
                dot[a][b] in prev and additive_commutator(B, a, b) in prev
                for b in B.elements()
            )
        )
        if direct != terms[k]:
            raise ConsistencyViolation("skew-socle-series-form", k)


def zoc_series(B: FiniteLeftSemibrace) -> SeriesReport:
    """Generalized-socle chain: E, Soc(B)+E, then quotient preimages.

    Requires E to be an ideal.  The fixpoint scan starts at index 1
    because the first two terms follow different rules.
    """
    rep = e_ideal_report(B)
    if not rep.is_ideal:
        raise ENotIdeal(rep.witness)
    terms = [B.E, generalized_socle(B)]
    while True:
        cur = terms[-1]
        Q, proj = quotient(B, cur)
        if Q.E != frozenset({0}):
            raise ConsistencyViolation("zoc-quotient-not-skew", sorted(Q.E))
        socQ = socle(Q)
        nxt = frozenset(b for b in B.elements() if proj[b] in socQ)
        terms.append(nxt)
        if nxt == cur:
            break
        if len(terms) > B.n + 2:
            raise ConsistencyViolation("zoc-series-exceeded-bound")
    # Zoc_0 and Zoc_1 follow different rules, so a repeat across indices
    # 0/1 is not a fixpoint of the quotient recurrence; scan from 1.
    report = _report("zoc", terms, descending=False, scan_from=1)
    for k, term in enumerate(report.terms):
        if sumset(B, term & B.G, B.E) != term:
            raise ConsistencyViolation("zoc-term-decomposition", k)
    if B.is_skew_brace():
        soc_terms = soc_series(B).terms
        for k in range(min(len(soc_terms), len(report.terms))):
            if report.terms[k] != soc_terms[k]:
                raise ConsistencyViolation("zoc-vs-soc-on-skew-brace", k)
    return report


def upper_central_report(B: FiniteLeftSemibrace) -> SeriesReport:
    return _report("upper_central", upper_central_series_mul(B), descending=False)


def ann_series(B: FiniteLeftSemibrace) -> SeriesReport:
    """Ann_k = Soc_k ∩ ζ_k + E ∩ ζ_k, combined from the two input chains."""
    soc_terms = soc_series(B).terms
    zeta_terms = upper_central_series_mul(B)

    def at(terms, k):
        return terms[min(k, len(terms) - 1)]

    horizon = max(len(soc_terms), len(zeta_terms))
    terms = [
        sumset(B, at(soc_terms, k) & at(zeta_terms, k), B.E & at(zeta_terms, k))
        for k in range(horizon + 1)
    ]
    terminal = terms[-1]
    stab = terms.index(terminal)
    return _report("ann", terms[: stab + 2], descending=False)


def element_right_powers(B: FiniteLeftSemibrace, b: int) -> list[int]:
    """b⁽¹⁾ = b, b⁽ⁿ⁺¹⁾ = b⁽ⁿ⁾·b, until 0 or a repeated value."""
    return _powers(B, b, lambda cur: B.dot(cur, b))


def element_left_powers(B: FiniteLeftSemibrace, b: int) -> list[int]:
    """b¹ = b, bⁿ⁺¹ = b·bⁿ, until 0 or a repeated value."""
    return _powers(B, b, lambda cur: B.dot(b, cur))


def _powers(B, b, step):
    seq = [b]
    seen = {b}
    while seq[-1] != 0:
        nxt = step(seq[-1])
        seq.append(nxt)
        if nxt in seen:
            break
        seen.add(nxt)
    return seq


def is_right_nil(B: FiniteLeftSemibrace) -> bool:
    return all(element_right_powers(B, b)[-1] == 0 for b in B.elements())


def is_left_nil(B: FiniteLeftSemibrace) -> bool:
    return all(element_left_powers(B, b)[-1] == 0 for b in B.elements())


def has_z_series(B: FiniteLeftSemibrace):
    """Whether a descending ideal chain B = I₀ ⊇ ... ⊇ I_n = E exists with
    each quotient step inside the socle; equivalently, E is an ideal and
    the generalized-socle chain reaches B.

    Returns (flag, chain); when the flag is true the chain is the
    reversed generalized-socle chain, a concrete witness z-series.
    Cross-checked against the skew-brace side: G must admit the matching
    socle-chain exhaustion exactly when the flag and E-ideality agree.
    """
    e_ideal = e_ideal_report(B).is_ideal
    full = frozenset(B.elements())
    flag = False
    chain = None
    if e_ideal:
        z = zoc_series(B)
        flag = z.terminal == full
        if flag:
            descending = []
            for t in reversed(z.terms):
                if not descending or descending[-1] != t:
                    descending.append(t)
            chain = descending

    S, embed = sub_semibrace(B, B.G)
    g_exhausts = soc_series(S).terminal == frozenset(S.elements())
    if flag != (e_ideal and g_exhausts):
        raise ConsistencyViolation(
            "z-series-vs-G-socle-chain", (flag, e_ideal, g_exhausts)
        )
    return flag, chain


def quotient_right_nilpotent_lift(B: FiniteLeftSemibrace) -> bool:
    """Verify on B: if B/Zoc(B) is right nilpotent then so is B.

    Returns the truth of the implication (vacuously true when the
    quotient is not right nilpotent).  Requires E to be an ideal.
    """
    rep = e_ideal_report(B)
    if not rep.is_ideal:
        raise ENotIdeal(rep.witness)
    Q, _ = quotient(B, generalized_socle(B))
    q_right = right_series(Q).terminal == Q.E
    if not q_right:
        return True
    return right_series(B).terminal == B.E


# -- G-side series, for the termwise comparison checks ----------------------

def _g_side_terms(B, kind: str, count: int) -> list[Subset]:
    """First ``count`` terms of the right/left/strong series of the
    sub-skew-brace G, computed inside B (its E is {0})."""
    G = B.G
    dot = B.dot_table()
    terms = [G]
    while len(terms) < count:
        if kind == "right":
            gens = {dot[x][y] for x in terms[-1] for y in G}
        elif kind == "left":
            gens = {dot[x][y] for x in G for y in terms[-1]}
        else:
            n = len(terms)
            gens = {
                dot[x][y]
                for i in range(n)
                for x in terms[i]
                for y in terms[n - 1 - i]
            }
        terms.append(add_subgroup_gen(B, gens))
    return terms


def analyze_series(B: FiniteLeftSemibrace) -> dict[str, SeriesReport]:
    """All series reports, keyed by kind; 'zoc' is present iff E is an ideal."""
    out = {
        "right": right_series(B),
        "left": left_series(B),
        "strong": strong_series(B),
        "soc": soc_series(B),
        "upper_central": upper_central_report(B),
        "ann": ann_series(B),
    }
    if e_ideal_report(B).is_ideal:
        out["zoc"] = zoc_series(B)
    return out


def classify(B: FiniteLeftSemibrace, *, _series=None) -> NilpotencyProfile:
    """Run every series, populate all flags, and enforce the theorem layer.

    A validated structure that contradicts any of the enforced theorems
    raises ConsistencyViolation: that always means an implementation
    bug, never bad input.
    """
    series = _series if _series is not None else analyze_series(B)
    full = frozenset(B.elements())
    E = B.E
    e_ideal = "zoc" in series or e_ideal_report(B).is_ideal

    right_nilp = series["right"].terminal == E
    left_nilp = series["left"].terminal == E
    strong_nilp = series["strong"].terminal == E
    nilpotent = series["ann"].terminal == full
    mul_nilp = series["upper_central"].terminal == full
    addG_nilp = add_group_G_nilpotent(B)
    right_nil = is_right_nil(B)
    left_nil = is_left_nil(B)
    z_flag, _ = has_z_series(B)

    profile = NilpotencyProfile(
        right_nilpotent=right_nilp,
        left_nilpotent=left_nilp,
        strongly_nilpotent=strong_nilp,
        nilpotent=nilpotent,
        right_nil=right_nil,
        left_nil=left_nil,
        has_z_series=z_flag,
        mul_group_nilpotent=mul_nilp,
        add_group_G_nilpotent=addG_nilp,
        E_is_ideal=e_ideal,
        indices={kind: rep.stabilized_at for kind, rep in sorted(series.items())},
    )
    _enforce_theorems(B, profile, series)
    return profile


def _enforce_theorems(B, p: NilpotencyProfile, series):
    def require(ok, tag, witness=None):
        if not ok:
            raise ConsistencyViolation(tag, witness)

    require(
        p.strongly_nilpotent == (p.right_nilpotent and p.left_nilpotent),
        "strong-iff-right-and-left",
    )
    require(not p.right_nilpotent or p.E_is_ideal, "right-nilpotent-needs-E-ideal")
    require(not p.right_nilpotent or p.right_nil, "right-nilpotent-implies-right-nil")
    require(not p.left_nilpotent or p.left_nil, "left-nilpotent-implies-left-nil")
    require(not p.nilpotent or p.mul_group_nilpotent, "nilpotent-implies-mul-nilpotent")
    require(not p.has_z_series or p.right_nilpotent, "z-series-implies-right-nilpotent")
    if p.add_group_G_nilpotent:
        require(
            p.right_nilpotent == p.has_z_series,
            "right-nilpotent-iff-z-series-under-nilpotent-G",
        )
        require(
            (p.strongly_nilpotent and p.mul_group_nilpotent)
            == (p.nilpotent and p.E_is_ideal),
            "strong-and-mul-vs-nilpotent-and-E-ideal",
        )
    if p.nilpotent and p.E_is_ideal:
        require(p.right_nilpotent, "nilpotent-E-ideal-implies-right-nilpotent")
        if p.add_group_G_nilpotent:
            require(p.left_nilpotent, "nilpotent-implies-left-nilpotent")
    if p.add_group_G_nilpotent and p.E_is_ideal and p.mul_group_nilpotent:
        require(p.left_nilpotent, "mul-nilpotent-forces-left-nilpotent")
    E_mul_nilp = mul_group_nilpotent_on(B, B.E)
    centralizes = all(
        B.mul[e][g] == B.mul[g][e] for e in B.E for g in B.G
    )
    if p.add_group_G_nilpotent and E_mul_nilp and centralizes:
        require(
            p.left_nilpotent == p.mul_group_nilpotent,
            "left-nilpotent-iff-mul-nilpotent",
        )
    if p.E_is_ideal:
        for kind in ("right", "left", "strong"):
            terms = series[kind].terms
            g_terms = _g_side_terms(B, kind, len(terms))
            for k, (bt, gt) in enumerate(zip(terms, g_terms)):
                require(
                    bt == sumset(B, gt, B.E),
                    f"{kind}-series-G-decomposition",
                    k,
                )
    for kind, rep in series.items():
        require(rep.stabilized_at <= B.n, f"{kind}-series-index-bound")
