import dataclasses

import pytest

import semibrace as sb
from semibrace.errors import ConsistencyViolation, ENotIdeal

from conftest import idx


class TestDescendingSeries:
    def test_first_term_is_B(self, corpus):
        for B in corpus:
            full = frozenset(B.elements())
            assert sb.right_series(B).terms[0] == full
            assert sb.left_series(B).terms[0] == full
            assert sb.strong_series(B).terms[0] == full

    def test_phi3_all_three_collapse_at_two(self, phi3):
        for fn in (sb.right_series, sb.left_series, sb.strong_series):
            rep = fn(phi3)
            assert rep.terms[1] == phi3.E
            assert rep.terminal == phi3.E

    def test_trivial_semibrace_is_already_E(self, trivial_s3):
        rep = sb.right_series(trivial_s3)
        assert rep.terminal == trivial_s3.E == frozenset(trivial_s3.elements())
        assert rep.stabilized_at == 0

    def test_skew_brace_K_G_left_nilpotent(self, skew_c4, skew_s3):
        # λ = conjugation-free here: a·b = a⁻∘a∘b∘b⁻ = 0, so B² = E = {0}
        for B in (skew_c4, skew_s3):
            rep = sb.left_series(B)
            assert rep.terms[1] == frozenset({0}) == B.E

    def test_sd12_not_right_nilpotent(self, sd12):
        rep = sb.right_series(sd12)
        assert rep.terminal > sd12.E

    def test_every_term_contains_E_and_descends(self, corpus):
        for B in corpus:
            for fn in (sb.right_series, sb.left_series, sb.strong_series):
                rep = fn(B)
                for a, b in zip(rep.terms, rep.terms[1:]):
                    assert b <= a
                for t in rep.terms:
                    assert B.E <= t

    def test_strong_term_contains_right_and_left_termwise(self, corpus):
        for B in corpus:
            r, l, s = sb.right_series(B), sb.left_series(B), sb.strong_series(B)
            for k in range(max(len(r.terms), len(l.terms), len(s.terms))):
                def at(rep):
                    return rep.terms[min(k, len(rep.terms) - 1)]

                assert at(r) <= at(s)
                assert at(l) <= at(s)

    def test_terms_pass_ideal_checks(self, corpus):
        for B in corpus:
            for t in sb.right_series(B).terms:
                assert sb.is_ideal_thm(B, t).is_ideal
            for t in sb.left_series(B).terms:
                assert sb.is_left_ideal(B, t).is_left_ideal
            for t in sb.strong_series(B).terms:
                assert sb.is_left_ideal(B, t).is_left_ideal

    def test_E_ideal_implies_G_decomposition(self, corpus):
        from semibrace.series import _g_side_terms

        for B in corpus:
            if not sb.e_ideal_report(B).is_ideal:
                continue
            for kind, fn in (
                ("right", sb.right_series),
                ("left", sb.left_series),
                ("strong", sb.strong_series),
            ):
                terms = fn(B).terms
                g_terms = _g_side_terms(B, kind, len(terms))
                for bt, gt in zip(terms, g_terms):
                    assert bt == sb.sumset(B, gt, B.E)

    def test_E_ideal_absorption_lemma(self, corpus):
        # (I+E)·B ⊆ I·B whenever E is an ideal, on all series terms
        for B in corpus:
            if not sb.e_ideal_report(B).is_ideal:
                continue
            full = frozenset(B.elements())
            for rep in (sb.right_series(B), sb.left_series(B)):
                for t in rep.terms:
                    lhs = sb.dot_set(B, sb.sumset(B, t, B.E), full)
                    assert lhs <= sb.dot_set(B, t, full)


class TestAscendingSeries:
    def test_soc_first_terms(self, corpus):
        for B in corpus:
            rep = sb.soc_series(B)
            assert rep.terms[0] == frozenset({0})
            assert rep.terms[1] == sb.socle(B)

    def test_phi3_soc_series_stalls(self, phi3):
        rep = sb.soc_series(phi3)
        assert rep.terminal == frozenset({0})

    def test_abelian_trivial_type_saturates(self, skew_c4):
        rep = sb.soc_series(skew_c4)
        assert rep.terms[1] == frozenset(skew_c4.elements())

    def test_phi3_zoc_series_climbs_to_B(self, phi3):
        rep = sb.zoc_series(phi3)
        assert rep.terms[0] == phi3.E
        assert rep.terms[1] == phi3.E  # Zoc(B) itself is E here
        assert rep.terminal == frozenset(phi3.elements())
        assert rep.stabilized_at >= 1

    def test_zoc_series_needs_E_ideal(self, sd12):
        with pytest.raises(ENotIdeal):
            sb.zoc_series(sd12)

    def test_zoc_on_skew_brace_equals_soc(self, skew_c4, skew_s3):
        for B in (skew_c4, skew_s3):
            z = sb.zoc_series(B).terms
            s = sb.soc_series(B).terms
            for k in range(min(len(z), len(s))):
                assert z[k] == s[k]

    def test_trivial_zoc_starts_at_B(self, trivial_s3):
        rep = sb.zoc_series(trivial_s3)
        assert rep.terms[0] == frozenset(trivial_s3.elements())

    def test_ann_series_examples(self, phi3, skew_c4):
        assert sb.ann_series(phi3).terminal == frozenset({0})
        triv_ab = sb.trivial_semibrace(sb.named_group("C4"))
        rep = sb.ann_series(triv_ab)
        assert rep.terms[1] == frozenset(triv_ab.elements())
        assert sb.ann_series(skew_c4).terms[1] == frozenset(skew_c4.elements())

    def test_ann_terms_are_ideals_when_E_ideal(self, corpus):
        for B in corpus:
            if sb.e_ideal_report(B).is_ideal:
                for t in sb.ann_series(B).terms:
                    assert sb.is_ideal_thm(B, t).is_ideal


class TestZSeries:
    def test_phi3_has_z_series(self, phi3):
        flag, chain = sb.has_z_series(phi3)
        assert flag
        assert chain[0] == frozenset(phi3.elements())
        assert chain[-1] == phi3.E
        # every step sits inside the socle of the quotient
        for j in range(1, len(chain)):
            Q, proj = sb.quotient(phi3, chain[j])
            assert {proj[x] for x in chain[j - 1]} <= sb.socle(Q)

    def test_z_series_bounds_right_series(self, corpus):
        for B in corpus:
            flag, chain = sb.has_z_series(B)
            if not flag:
                continue
            r = sb.right_series(B).terms
            for i, term in enumerate(chain):
                k = min(i + 1, len(r) - 1)
                assert r[k] <= term

    def test_sd12_has_no_z_series(self, sd12):
        flag, chain = sb.has_z_series(sd12)
        assert not flag and chain is None

    def test_trivial_has_z_series(self, trivial_s3):
        flag, chain = sb.has_z_series(trivial_s3)
        assert flag and chain == [frozenset(trivial_s3.elements())]


class TestPowersAndNil:
    def test_zero_power(self, phi3):
        assert sb.element_right_powers(phi3, 0) == [0]
        assert sb.element_left_powers(phi3, 0) == [0]

    def test_idempotent_squares_to_zero(self, corpus):
        for B in corpus:
            for e in B.E:
                seq = sb.element_right_powers(B, e)
                assert len(seq) <= 2 and seq[-1] == 0

    def test_phi3_everything_squares_to_zero(self, phi3):
        for b in phi3.elements():
            r = sb.element_right_powers(phi3, b)
            l = sb.element_left_powers(phi3, b)
            assert r[-1] == 0 and len(r) <= 2
            assert l[-1] == 0 and len(l) <= 2


class TestClassify:
    def test_phi3_profile(self, phi3):
        p = sb.classify(phi3)
        assert p.right_nilpotent and p.left_nilpotent and p.strongly_nilpotent
        assert not p.mul_group_nilpotent and not p.nilpotent
        assert p.E_is_ideal and p.has_z_series
        assert p.add_group_G_nilpotent

    def test_sd12_profile(self, sd12):
        p = sb.classify(sd12)
        assert not p.right_nilpotent and not p.E_is_ideal
        assert not p.strongly_nilpotent

    def test_trivial_abelian_everything_true(self):
        B = sb.trivial_semibrace(sb.named_group("C4"))
        p = sb.classify(B)
        assert all(
            getattr(p, f)
            for f in (
                "right_nilpotent",
                "left_nilpotent",
                "strongly_nilpotent",
                "nilpotent",
                "right_nil",
                "left_nil",
                "has_z_series",
                "mul_group_nilpotent",
                "add_group_G_nilpotent",
                "E_is_ideal",
            )
        )

    def test_order_one_profile(self):
        B = sb.validate([[0]], [[0]])
        p = sb.classify(B)
        assert p.nilpotent and p.right_nilpotent and p.left_nilpotent

    def test_corpus_classifies_without_violations(self, corpus):
        for B in corpus:
            p = sb.classify(B)
            assert p.strongly_nilpotent == (p.right_nilpotent and p.left_nilpotent)

    def test_indices_present(self, phi3):
        p = sb.classify(phi3)
        assert set(p.indices) == {
            "right", "left", "strong", "soc", "zoc", "ann", "upper_central",
        }
        assert p.indices["right"] == 1


class TestQuotientLift:
    def test_phi3(self, phi3):
        assert sb.quotient_right_nilpotent_lift(phi3)

    def test_trivial(self, trivial_s3):
        assert sb.quotient_right_nilpotent_lift(trivial_s3)

    def test_product(self, skew_c4, trivial_c2):
        B = sb.direct_product(skew_c4, trivial_c2)
        assert sb.quotient_right_nilpotent_lift(B)

    def test_requires_E_ideal(self, sd12):
        with pytest.raises(ENotIdeal):
            sb.quotient_right_nilpotent_lift(sd12)
