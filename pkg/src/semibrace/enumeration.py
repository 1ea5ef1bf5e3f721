"""Generation of small semi-braces up to isomorphism, and counterexample search.

Raw enumeration fixes the multiplicative group to each catalog group of
the requested order and generates additive tables from the right-group
shape forced on (B, +): choose a subgroup-to-be G containing 0, a group
structure on it, an idempotent fiber E, and a bijection pairing the two;
the compatibility axiom then filters candidates through the validator.
Completeness of this generator is checked in the test tree against a
row-by-row search over all injective additive tables at small orders.

Isomorphism testing backtracks over images of a generating set of
(B, ∘), pinned by 0 -> 0 and pruned by per-element invariants that any
isomorphism must preserve.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .constructions import (
    direct_product,
    from_idempotent_endomorphism,
    semidirect_product,
    trivial_semibrace,
)
from .core import FiniteLeftSemibrace, validate
from .errors import (
    CapExceeded,
    ConsistencyViolation,
    OrderMismatch,
    SemibraceError,
    ValidationError,
)
from .groups import GroupTable, all_group_tables_on, group_catalog
from .series import classify, is_left_nil, is_right_nil, left_series, right_series

RAW_CAP = 6

QUESTIONS = ("right_nil_not_right_nilpotent", "left_nil_not_left_nilpotent")


@dataclass(frozen=True)
class IsoCertificate:
    """Either a verified bijection preserving both tables, or nonexistence.

    ``exhausted`` is True when nonexistence was established by a full
    backtracking run, False when an invariant mismatch refuted it early.
    """

    mapping: tuple[int, ...] | None
    exhausted: bool = True
    reason: str | None = None

    @property
    def found(self) -> bool:
        return self.mapping is not None


@dataclass(frozen=True)
class SearchReport:
    question: str
    orders_searched: tuple[int, ...]
    witness: FiniteLeftSemibrace | None
    exhaustive: bool


@dataclass(frozen=True)
class EnumerationResult:
    order: int
    complete: bool  # True for raw mode, False for family-only
    structures: tuple[FiniteLeftSemibrace, ...]


# -- invariants and isomorphism ---------------------------------------------

def _perm_cycle_type(p):
    n = len(p)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        length = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        out.append(length)
    return tuple(sorted(out))


def _map_profile(m):
    fibers = {}
    for v in m:
        fibers[v] = fibers.get(v, 0) + 1
    fixed = sum(1 for i, v in enumerate(m) if v == i)
    return (len(fibers), fixed, tuple(sorted(fibers.values())))


def _mul_order(B, a):
    k, x = 1, a
    while x != 0:
        x = B.mul[x][a]
        k += 1
    return k


def element_signatures(B: FiniteLeftSemibrace) -> list[tuple]:
    """Per-element data preserved by any isomorphism."""
    return [
        (
            _mul_order(B, a),
            a in B.E,
            a in B.G,
            _mul_order(B, B.gpart[a]),
            _perm_cycle_type(B.lam[a]),
            _map_profile(B.rho[a]),
        )
        for a in B.elements()
    ]


def invariant_key(B: FiniteLeftSemibrace) -> tuple:
    return (B.n, len(B.G), len(B.E), tuple(sorted(element_signatures(B))))


def _mul_generators_words(B):
    """A generating set of (B, ∘) plus, for each element, one word in it."""
    gens: list[int] = []
    words = {0: ()}
    while len(words) < B.n:
        x = min(e for e in B.elements() if e not in words)
        gens.append(x)
        words[x] = (len(gens) - 1,)
        frontier = list(words)
        while frontier:
            e = frontier.pop()
            for i, g in enumerate(gens):
                v = B.mul[e][g]
                if v not in words:
                    words[v] = words[e] + (i,)
                    frontier.append(v)
    return gens, words


def _mapping_from_images(x, y, words, images):
    mapping = [0] * x.n
    for e, word in words.items():
        m = 0
        for i in word:
            m = y.mul[m][images[i]]
        mapping[e] = m
    if len(set(mapping)) != x.n:
        return None
    return tuple(mapping)


def _preserves_tables(x, y, mapping):
    for a in x.elements():
        ma = mapping[a]
        for b in x.elements():
            mb = mapping[b]
            if mapping[x.add[a][b]] != y.add[ma][mb]:
                return False
            if mapping[x.mul[a][b]] != y.mul[ma][mb]:
                return False
    return True


def are_isomorphic(x: FiniteLeftSemibrace, y: FiniteLeftSemibrace) -> IsoCertificate:
    """Search for a bijection preserving both operations (0 maps to 0)."""
    if x.n != y.n:
        raise OrderMismatch(x.n, y.n)
    sx, sy = element_signatures(x), element_signatures(y)
    if sorted(sx) != sorted(sy) or len(x.G) != len(y.G) or len(x.E) != len(y.E):
        return IsoCertificate(None, exhausted=False, reason="invariant mismatch")
    gens, words = _mul_generators_words(x)
    candidates = [
        [c for c in y.elements() if sy[c] == sx[g]] for g in gens
    ]
    for images in product(*candidates):
        if len(set(images)) != len(images):
            continue
        mapping = _mapping_from_images(x, y, words, images)
        if mapping is None:
            continue
        if _preserves_tables(x, y, mapping):
            return IsoCertificate(mapping)
    return IsoCertificate(None, exhausted=True, reason="backtracking exhausted")


def automorphisms(B: FiniteLeftSemibrace) -> list[tuple[int, ...]]:
    """All bijections preserving both operations."""
    sig = element_signatures(B)
    gens, words = _mul_generators_words(B)
    candidates = [[c for c in B.elements() if sig[c] == sig[g]] for g in gens]
    out = []
    for images in product(*candidates):
        if len(set(images)) != len(images):
            continue
        mapping = _mapping_from_images(B, B, words, images)
        if mapping is not None and _preserves_tables(B, B, mapping):
            out.append(mapping)
    return out


# -- additive-table generators -----------------------------------------------

def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def right_group_add_tables(n: int):
    """Candidate additive tables of right-group shape on 0..n-1.

    Yields every table of the form b + c = emb(g_b + g_c, e_c) for a
    subgroup-with-structure G ∋ 0, an idempotent set E ∋ 0 disjoint from
    G \\ {0}, and a bijection emb: G×E -> B extending the identity on
    G ∪ E.  Every left semi-brace addition has this shape; the validator
    filters the ones compatible with a given multiplication.
    """
    for d in _divisors(n):
        esize = n // d
        for g_rest in combinations(range(1, n), d - 1):
            G = (0,) + g_rest
            gset = set(G)
            non_g = [v for v in range(1, n) if v not in gset]
            for gtab in all_group_tables_on(G):
                for e_rest in combinations(non_g, esize - 1):
                    E = (0,) + e_rest
                    eset = set(E)
                    rest = [v for v in non_g if v not in eset]
                    pairs = [(g, e) for g in G[1:] for e in E[1:]]
                    for assignment in permutations(rest):
                        emb = {(g, 0): g for g in G}
                        emb.update({(0, e): e for e in E})
                        emb.update(dict(zip(pairs, assignment)))
                        gpart = {}
                        epart = {}
                        for (g, e), b in emb.items():
                            gpart[b] = g
                            epart[b] = e
                        yield [
                            [
                                emb[(gtab[gpart[b]][gpart[c]], epart[c])]
                                for c in range(n)
                            ]
                            for b in range(n)
                        ]


def naive_add_tables(n: int):
    """All additive tables with injective rows and identity row 0.

    Row 0 is forced to the identity by the axioms (compatibility at
    a = 0 plus left cancellativity), so fixing it loses nothing; the
    remaining rows range over all permutations.  Exponential: use only
    to cross-check the right-group generator at n <= 4.
    """
    perms = list(permutations(range(n)))
    ident = tuple(range(n))
    for rows in product(perms, repeat=n - 1):
        yield [list(ident)] + [list(r) for r in rows]


def _dedup(structures):
    buckets: dict[tuple, list[FiniteLeftSemibrace]] = {}
    out = []
    for B in structures:
        key = invariant_key(B)
        bucket = buckets.setdefault(key, [])
        if any(are_isomorphic(B, other).found for other in bucket):
            continue
        bucket.append(B)
        out.append(B)
    out.sort(key=lambda B: (invariant_key(B), B.add, B.mul))
    return out


def enumerate_semibraces(
    n: int, *, family_only: bool = False, cap: int = RAW_CAP
) -> EnumerationResult:
    """All semi-braces of order n up to isomorphism (raw mode), or the
    constructive families for orders beyond the cap.

    Raw mode is exhaustive; family-only mode produces trivial and
    endomorphism-built structures on every group of order n plus direct
    and semidirect products of smaller enumerated pieces, and is labeled
    incomplete.
    """
    if not family_only and n > cap:
        raise CapExceeded(n, cap)
    if family_only:
        return EnumerationResult(n, False, tuple(_dedup(_family_structures(n, cap))))
    found = []
    for grp in group_catalog(n):
        for add in right_group_add_tables(n):
            try:
                found.append(validate(add, grp.table))
            except ValidationError:
                continue
    return EnumerationResult(n, True, tuple(_dedup(found)))


def idempotent_endomorphisms(g: GroupTable) -> list[tuple[int, ...]]:
    """All idempotent endomorphisms of a group, by generator images."""
    B_like = _group_words(g)
    gens, words = B_like
    out = []
    for images in product(range(g.order), repeat=len(gens)):
        phi = [0] * g.order
        ok = True
        for e, word in words.items():
            m = 0
            for i in word:
                m = g.mul(m, images[i])
            phi[e] = m
        for a in range(g.order):
            for b in range(g.order):
                if phi[g.mul(a, b)] != g.mul(phi[a], phi[b]):
                    ok = False
                    break
            if not ok:
                break
        if ok and all(phi[phi[a]] == phi[a] for a in range(g.order)):
            out.append(tuple(phi))
    return sorted(set(out))


def _group_words(g: GroupTable):
    gens: list[int] = []
    words = {0: ()}
    while len(words) < g.order:
        x = min(e for e in range(g.order) if e not in words)
        gens.append(x)
        words[x] = (len(gens) - 1,)
        frontier = list(words)
        while frontier:
            e = frontier.pop()
            for i, gen in enumerate(gens):
                v = g.mul(e, gen)
                if v not in words:
                    words[v] = words[e] + (i,)
                    frontier.append(v)
    return gens, words


def _action_homs(actor: FiniteLeftSemibrace, autos: list[tuple[int, ...]]):
    """All homomorphisms from (actor, ∘) into a list of automorphisms."""
    target_n = len(autos[0])
    gens, words = _mul_generators_words(actor)
    ident = tuple(range(target_n))
    for images in product(autos, repeat=len(gens)):
        action = [ident] * actor.n
        for e, word in words.items():
            m = ident
            for i in word:
                m = tuple(m[v] for v in images[i])  # m after images[i]
            action[e] = m
        ok = True
        for a in range(actor.n):
            for b in range(actor.n):
                composed = tuple(action[a][action[b][v]] for v in range(target_n))
                if composed != action[actor.mul[a][b]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(action)


def _family_structures(n, cap):
    out = []
    for grp in group_catalog(n):
        out.append(trivial_semibrace(grp))
        for phi in idempotent_endomorphisms(grp):
            out.append(from_idempotent_endomorphism(grp, phi))
    for d1 in _divisors(n):
        d2 = n // d1
        if d1 == 1 or d2 == 1:
            continue
        lefts = enumerate_semibraces(
            d1, family_only=d1 > cap, cap=cap
        ).structures
        rights = enumerate_semibraces(
            d2, family_only=d2 > cap, cap=cap
        ).structures
        for x in lefts:
            for y in rights:
                if d1 <= d2:
                    out.append(direct_product(x, y))
                autos = automorphisms(x)
                for action in _action_homs(y, autos):
                    try:
                        out.append(semidirect_product(x, y, action))
                    except SemibraceError:
                        continue
    return out


def search_counterexample(
    question: str, max_order: int, *, classify_fn=None, cap: int = RAW_CAP
) -> SearchReport:
    """Scan all enumerable structures for a (right/left) nil structure
    that is not (right/left) nilpotent.

    Any candidate flagged by the classifier is re-verified from scratch
    (element power sequences for nil, the series fixpoint for nilpotent);
    a classifier that cannot be reproduced raises ConsistencyViolation.
    """
    if question not in QUESTIONS:
        raise ValueError(f"unsupported question: {question}")
    right = question == "right_nil_not_right_nilpotent"
    classify_fn = classify_fn or classify
    orders = tuple(range(1, max_order + 1))
    exhaustive = True
    for n in orders:
        family = n > cap
        exhaustive = exhaustive and not family
        result = enumerate_semibraces(n, family_only=family, cap=cap)
        for B in result.structures:
            p = classify_fn(B)
            nil = p.right_nil if right else p.left_nil
            nilp = p.right_nilpotent if right else p.left_nilpotent
            if nil and not nilp:
                true_nil = is_right_nil(B) if right else is_left_nil(B)
                series = right_series(B) if right else left_series(B)
                true_nilp = series.terminal == B.E
                if not (true_nil and not true_nilp):
                    raise ConsistencyViolation(
                        "search-witness-failed-revalidation",
                        (question, n, true_nil, true_nilp),
                    )
                return SearchReport(question, orders, B, exhaustive)
    return SearchReport(question, orders, None, exhaustive)
