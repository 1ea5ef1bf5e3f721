import pytest

import semibrace as sb
from semibrace.errors import NotClosed
from semibrace.ybe import SolutionMap

from conftest import idx


class TestSolutionOf:
    def test_trivial_semibrace_form(self, trivial_s3):
        B = trivial_s3
        r = sb.solution_of(B)
        for a in B.elements():
            for b in B.elements():
                assert r(a, b) == (B.mul[a][b], 0)

    def test_abelian_skew_brace_is_flip(self, skew_c4):
        r = sb.solution_of(skew_c4)
        for a in skew_c4.elements():
            for b in skew_c4.elements():
                assert r(a, b) == (b, a)

    def test_matches_lambda_rho(self, corpus):
        for B in corpus:
            r = sb.solution_of(B)
            for a in B.elements():
                for b in B.elements():
                    assert r(a, b) == (B.lam[a][b], B.rho[b][a])


class TestBraid:
    def test_holds_on_corpus(self, corpus):
        for B in corpus:
            ok, witness = sb.check_braid(sb.solution_of(B))
            assert ok, (B.n, witness)

    def test_flip_satisfies_braid(self):
        ok, _ = sb.check_braid(sb.flip_map(5))
        assert ok

    def test_corrupted_table_fails_with_witness(self, phi3):
        r = sb.solution_of(phi3)
        rows = [list(row) for row in r.table]
        rows[1][2], rows[2][1] = rows[2][1], rows[1][2]
        bad = SolutionMap(r.order, tuple(tuple(row) for row in rows))
        ok, witness = sb.check_braid(bad)
        assert not ok and witness is not None


class TestRestriction:
    def test_idempotent_on_corpus(self, corpus):
        for B in corpus:
            s = sb.restrict_to_E(B, sb.solution_of(B))
            flat = s.flat()
            assert tuple(flat[v] for v in flat) == flat

    def test_trivial_full_restriction(self, trivial_s3):
        B = trivial_s3
        s = sb.restrict_to_E(B, sb.solution_of(B))
        assert s.order == B.n
        for a in B.elements():
            for b in B.elements():
                assert s(a, b) == (B.mul[a][b], 0)

    def test_skew_brace_restriction_is_point(self, skew_c4):
        s = sb.restrict_to_E(skew_c4, sb.solution_of(skew_c4))
        assert s.order == 1 and s(0, 0) == (0, 0)

    def test_closure_violation_detected(self, phi3):
        r = sb.solution_of(phi3)
        rows = [list(row) for row in r.table]
        e = sorted(phi3.E)[1]
        rows[e][e] = (idx(phi3, "(12)"), 0)
        bad = SolutionMap(r.order, tuple(tuple(row) for row in rows))
        with pytest.raises(NotClosed):
            sb.restrict_to_E(phi3, bad)


class TestProperties:
    def test_flip(self):
        p = sb.properties(sb.flip_map(3))
        assert p.bijective and p.involutive and not p.idempotent
        assert p.period == 3  # r² = id, so the first return to r is r³

    def test_trivial_semibrace_idempotent_not_bijective(self, trivial_s3, trivial_c2):
        for B in (trivial_s3, trivial_c2):
            p = sb.properties(sb.solution_of(B))
            assert p.idempotent and p.period == 2
            assert not p.bijective  # image collapses to B×{0}

    def test_abelian_K_G_involutive(self, skew_c4):
        p = sb.properties(sb.solution_of(skew_c4))
        assert p.involutive and p.bijective and p.period == 3

    def test_point_solution(self):
        B = sb.validate([[0]], [[0]])
        p = sb.properties(sb.solution_of(B))
        assert p.bijective and p.involutive and p.idempotent and p.period == 2

    def test_period_always_found_on_corpus(self, corpus):
        for B in corpus:
            p = sb.properties(sb.solution_of(B))
            assert p.period_search_exhausted
            assert p.period is None or p.period >= 2

    def test_left_nondegeneracy(self, corpus):
        for B in corpus:
            r = sb.solution_of(B)
            for a in B.elements():
                firsts = [r(a, b)[0] for b in B.elements()]
                assert sorted(firsts) == list(B.elements())

    def test_bijective_iff_rho_rows_bijective_extensionally(self, corpus):
        for B in corpus:
            r = sb.solution_of(B)
            p = sb.properties(r)
            pairs = {r(a, b) for a in B.elements() for b in B.elements()}
            assert p.bijective == (len(pairs) == B.n * B.n)
