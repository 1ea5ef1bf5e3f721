"""Set-theoretic Yang-Baxter machinery.

A semi-brace induces the map r(a, b) = (λ_a(b), ρ_b(a)) on B×B, a left
non-degenerate solution of the braid relation

    (r×id)(id×r)(r×id) = (id×r)(r×id)(id×r).

Its restriction s to E×E is closed (ρ lands on 0 there) and idempotent.
Solutions are stored extensionally, so corrupted or hand-built tables
can be analyzed with the same helpers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteLeftSemibrace
from .errors import InternalInconsistency, NotClosed


@dataclass(frozen=True)
class SolutionMap:
    """A map B×B -> B×B as a table: table[a][b] = (c, d)."""

    order: int
    table: tuple[tuple[tuple[int, int], ...], ...]

    def __call__(self, a: int, b: int) -> tuple[int, int]:
        return self.table[a][b]

    def flat(self) -> tuple[int, ...]:
        """The same map as a function on pair indices a*n + b."""
        n = self.order
        out = []
        for a in range(n):
            for b in range(n):
                c, d = self.table[a][b]
                out.append(c * n + d)
        return tuple(out)


@dataclass(frozen=True)
class SolutionProperties:
    bijective: bool
    involutive: bool
    idempotent: bool
    period: int | None  # least m >= 2 with r^m = r, None if there is none
    period_search_exhausted: bool = True


def solution_of(B: FiniteLeftSemibrace) -> SolutionMap:
    """r(a, b) = (λ_a(b), ρ_b(a)); the first component rows are permutations."""
    n = B.n
    table = tuple(
        tuple((B.lam[a][b], B.rho[b][a]) for b in range(n)) for a in range(n)
    )
    for a in range(n):
        firsts = {table[a][b][0] for b in range(n)}
        if len(firsts) != n:
            raise InternalInconsistency(f"left non-degeneracy fails at row {a}")
    return SolutionMap(n, table)


def flip_map(n: int) -> SolutionMap:
    return SolutionMap(n, tuple(tuple((b, a) for b in range(n)) for a in range(n)))


def check_braid(r: SolutionMap):
    """Exhaustive braid check; returns (ok, first failing triple or None)."""
    n = r.order
    t = r.table

    def r12(x, y, z):
        u, v = t[x][y]
        return u, v, z

    def r23(x, y, z):
        u, v = t[y][z]
        return x, u, v

    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = r12(*r23(*r12(x, y, z)))
                rhs = r23(*r12(*r23(x, y, z)))
                if lhs != rhs:
                    return False, (x, y, z)
    return True, None


def restrict_to_E(B: FiniteLeftSemibrace, r: SolutionMap) -> SolutionMap:
    """s = r restricted to E×E, reindexed over E in ascending order.

    Closure requires λ_e(f) ∈ E and ρ_f(e) ∈ E for e, f ∈ E; failure
    would mean a corrupted structure.  The result satisfies s² = s.
    """
    idx = sorted(B.E)
    pos = {e: i for i, e in enumerate(idx)}
    m = len(idx)
    rows = []
    for e in idx:
        row = []
        for f in idx:
            c, d = r.table[e][f]
            if c not in B.E or d not in B.E:
                raise NotClosed((e, f, (c, d)))
            row.append((pos[c], pos[d]))
        rows.append(tuple(row))
    s = SolutionMap(m, tuple(rows))
    flat = s.flat()
    if tuple(flat[v] for v in flat) != flat:
        raise InternalInconsistency("restriction to E is not idempotent")
    return s


def _compose(f, g):
    """(f∘g)(x) = f(g(x)) on flat pair-index tables."""
    return tuple(f[v] for v in g)


def properties(r: SolutionMap) -> SolutionProperties:
    """Bijectivity, involutivity (r² = id), idempotency (r² = r), and the
    least m ≥ 2 with r^m = r.

    The period search walks the composition sequence r, r², r³, ... with
    Floyd cycle detection (the sequence lives in a finite function
    monoid), capped at 2·n⁴ steps; hitting the cap reports the period as
    undetermined rather than guessing.
    """
    n = r.order
    flat = r.flat()
    size = n * n
    identity = tuple(range(size))
    bijective = len(set(flat)) == size
    sq = _compose(flat, flat)
    involutive = sq == identity
    idempotent = sq == flat

    def step(x):
        return _compose(flat, x)

    cap = max(8, 2 * n ** 4)
    # Floyd: x_k = r^(k+1); r^m = r for m >= 2 iff x_0 lies on the cycle.
    tortoise, hare = step(flat), step(step(flat))
    steps = 0
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(step(hare))
        steps += 1
        if steps > cap:
            return SolutionProperties(bijective, involutive, idempotent, None, False)
    mu = 0
    tortoise = flat
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(hare)
        mu += 1
    lam = 1
    hare = step(tortoise)
    while tortoise != hare:
        hare = step(hare)
        lam += 1
    period = lam + 1 if mu == 0 else None
    return SolutionProperties(bijective, involutive, idempotent, period)
