import pytest

import semibrace as sb
from semibrace.errors import (
    AddNotAGroup,
    NotAnIdeal,
    NotAutomorphism,
    NotEndomorphism,
    NotIdempotentMap,
)
from semibrace.groups import named_group

from conftest import idx


class TestTrivial:
    def test_point(self):
        B = sb.trivial_semibrace(named_group("C1"))
        assert B.n == 1

    def test_s3(self, trivial_s3):
        assert trivial_s3.E == frozenset(trivial_s3.elements())
        assert all(v == 0 for row in trivial_s3.dot_table() for v in row)

    def test_a5(self, trivial_a5):
        assert trivial_a5.n == 60
        assert trivial_a5.G == frozenset({0})


class TestEndomorphismBuild:
    def test_identity_phi_gives_opposite_skew_brace(self):
        g = named_group("S3")
        B = sb.from_idempotent_endomorphism(g, list(range(6)))
        assert B.is_skew_brace()
        for a in B.elements():
            for b in B.elements():
                assert B.add[a][b] == B.mul[b][a]

    def test_constant_phi_gives_trivial(self):
        g = named_group("S3")
        B = sb.from_idempotent_endomorphism(g, [0] * 6)
        assert B.E == frozenset(B.elements())

    def test_phi3_shape(self, phi3):
        g = named_group("S3")
        built = sb.from_idempotent_endomorphism(g, [0, 2, 2, 0, 0, 2])
        assert built.add == phi3.add and built.mul == phi3.mul
        assert sb.e_ideal_report(built).is_ideal
        # within G the sum is the opposite product
        for x in built.G:
            for y in built.G:
                assert built.add[x][y] == built.mul[y][x]

    def test_rejects_non_endomorphism(self):
        g = named_group("S3")
        # sends the involution (23) to the 3-cycle (123): breaks orders
        with pytest.raises(NotEndomorphism):
            sb.from_idempotent_endomorphism(g, [0, 3, 0, 0, 0, 0])

    def test_rejects_non_idempotent(self):
        g = named_group("C4")
        # x -> 3x is an automorphism of C4 but not idempotent
        with pytest.raises(NotIdempotentMap):
            sb.from_idempotent_endomorphism(g, [0, 3, 2, 1])

    def test_rho0_equals_phi(self, phi3):
        # the projection recovered from the structure is the building map
        assert list(phi3.rho[0]) == [0, 2, 2, 0, 0, 2]


class TestSemidirectAndDirect:
    def test_trivial_action_is_direct_product(self, skew_c4, trivial_c2):
        ident = tuple(tuple(range(skew_c4.n)) for _ in range(trivial_c2.n))
        via_semi = sb.semidirect_product(skew_c4, trivial_c2, ident)
        via_direct = sb.direct_product(skew_c4, trivial_c2)
        assert via_semi.add == via_direct.add and via_semi.mul == via_direct.mul

    def test_sd12_reproduction(self, skew_s3, trivial_c2, sd12):
        g = named_group("S3")
        i23 = g.labels.index("(23)")
        conj = tuple(
            g.table[g.table[i23][x]][g.inverses[i23]] for x in range(6)
        )
        action = (tuple(range(6)), conj)
        built = sb.semidirect_product(skew_s3, trivial_c2, action)
        assert built.add == sd12.add and built.mul == sd12.mul
        assert not sb.e_ideal_report(built).is_ideal

    def test_e_ideal_orientation(self, trivial_c2):
        # trivial C3 acted on by the skew brace C2 through inversion
        c3 = named_group("C3")
        T = sb.trivial_semibrace(c3)
        A = sb.skew_brace_embed(named_group("C2").table, named_group("C2").table)
        inversion = (0, 2, 1)
        B = sb.semidirect_product(T, A, (tuple(range(3)), inversion))
        assert B.n == 6
        assert sb.e_ideal_report(B).is_ideal
        assert len(B.E) == 3

    def test_rejects_non_automorphism(self, skew_s3, trivial_c2):
        bad = (tuple(range(6)), (1, 0, 2, 3, 4, 5))
        with pytest.raises(NotAutomorphism):
            sb.semidirect_product(skew_s3, trivial_c2, bad)

    def test_product_with_point(self, phi3):
        point = sb.trivial_semibrace(named_group("C1"))
        B = sb.direct_product(phi3, point)
        assert sb.are_isomorphic(B, phi3).found

    def test_skew_times_trivial_not_endo_type(self, skew_s3, trivial_c2):
        # E is an ideal, yet the sum on G is not everywhere the opposite product
        B = sb.direct_product(skew_s3, trivial_c2)
        assert sb.e_ideal_report(B).is_ideal
        assert any(
            B.add[x][y] != B.mul[y][x] for x in B.G for y in B.G
        )

    def test_phi3_squared(self, phi3):
        B = sb.direct_product(phi3, phi3)
        assert B.n == 36
        assert sb.e_ideal_report(B).is_ideal
        assert len(B.G) == 4 and len(B.E) == 9


class TestSkewEmbed:
    def test_k_c4(self, skew_c4):
        assert skew_c4.is_skew_brace()
        for a in skew_c4.elements():
            assert skew_c4.lam[a] == tuple(skew_c4.elements())

    def test_rejects_non_group_addition(self):
        c2 = named_group("C2")
        with pytest.raises(AddNotAGroup):
            sb.skew_brace_embed([[0, 1], [1, 1]], c2.table)

    def test_round_trip_G_of_phi3(self, phi3):
        Gsub, embed = sb.sub_semibrace(phi3, phi3.G)
        again = sb.skew_brace_embed(Gsub.add, Gsub.mul, Gsub.labels)
        assert again.n == 2 and again.is_skew_brace()


class TestQuotient:
    def test_by_whole_is_point(self, phi3):
        Q, proj = sb.quotient(phi3, frozenset(phi3.elements()))
        assert Q.n == 1 and set(proj) == {0}

    def test_by_zero_is_identity(self, phi3):
        Q, proj = sb.quotient(phi3, frozenset({0}))
        assert Q.n == phi3.n
        assert sb.are_isomorphic(Q, phi3).found

    def test_phi3_mod_E_is_its_skew_brace(self, phi3):
        Q, proj = sb.quotient(phi3, phi3.E)
        Gsub, embed = sb.sub_semibrace(phi3, phi3.G)
        assert Q.n == 2
        assert sb.are_isomorphic(Q, Gsub).found

    def test_rejects_non_ideal(self, sd12):
        with pytest.raises(NotAnIdeal):
            sb.quotient(sd12, sd12.E)

    def test_projection_is_homomorphism(self, phi3):
        Q, proj = sb.quotient(phi3, sb.socle(phi3))
        for a in phi3.elements():
            for b in phi3.elements():
                assert proj[phi3.add[a][b]] == Q.add[proj[a]][proj[b]]
                assert proj[phi3.mul[a][b]] == Q.mul[proj[a]][proj[b]]


class TestSemidirectRoundTrip:
    def test_round_trip_when_E_ideal(self, corpus):
        # any structure with E ideal splits as (trivial E) ⋊ (skew G) via λ
        for B in corpus:
            if not sb.e_ideal_report(B).is_ideal:
                continue
            Esub, embedE = sb.sub_semibrace(B, B.E)
            Gsub, embedG = sb.sub_semibrace(B, B.G)
            posE = {b: i for i, b in enumerate(embedE)}
            action = tuple(
                tuple(posE[B.lam[embedG[gi]][embedE[ei]]] for ei in range(Esub.n))
                for gi in range(Gsub.n)
            )
            rebuilt = sb.semidirect_product(Esub, Gsub, action)
            cert = sb.are_isomorphic(rebuilt, B)
            assert cert.found
            # the canonical isomorphism sends a to (e_a, g_a)
            f = tuple(
                posE[B.epart[a]] * Gsub.n + embedG.index(B.gpart[a])
                for a in B.elements()
            )
            for a in B.elements():
                for b in B.elements():
                    assert f[B.add[a][b]] == rebuilt.add[f[a]][f[b]]
                    assert f[B.mul[a][b]] == rebuilt.mul[f[a]][f[b]]
