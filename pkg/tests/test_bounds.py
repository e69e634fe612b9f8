"""Threshold formulas: anchored values, identities, hypothesis checks."""

from fractions import Fraction

import pytest

from pqpierce.bounds import (
    CAVEAT_NON_DEGENERATE,
    CAVEAT_P0_UNKNOWN,
    binom,
    ceil_power,
    dim1_threshold,
    hd_exact_region,
    implied_q,
    kalai_bound,
    lemma_r0_threshold,
    m0,
    ms_threshold,
    remark_threshold,
    thm2_threshold,
    thm3_threshold,
)
from pqpierce.errors import ArityError


class TestBinom:
    def test_values(self):
        assert binom(6, 3) == 20
        assert binom(5, 0) == 1

    def test_zero_convention(self):
        assert binom(2, 3) == 0
        assert binom(-1, 0) == 0
        assert binom(4, -1) == 0


class TestKalaiBound:
    def test_anchored_662(self):
        assert kalai_bound(6, 3, 2, 2) == 16
        assert kalai_bound(6, 3, 2, 2) == lemma_r0_threshold(6, 3, 2, 2).threshold_r - 1

    def test_s_zero_collapses(self):
        for p in range(3, 8):
            for d in range(2, 5):
                for q in range(1, d + 1):
                    assert kalai_bound(p, q, 0, d) == binom(p, q)

    def test_all_terms_vanish(self):
        assert kalai_bound(6, 6, 3, 2) == 0

    def test_nondecreasing_in_s(self):
        # stronger emptiness hypotheses (smaller s) cap the count harder,
        # so the bound grows with s on the tested grid
        for p in range(3, 12):
            for d in (1, 2):
                for q in range(d + 1, p + 1):
                    values = [kalai_bound(p, q, s, d) for s in range(0, p + 1)]
                    assert values == sorted(values)


class TestMsThreshold:
    def test_anchored_632(self):
        result = ms_threshold(6, 3, 2)
        assert result.threshold_r == 11 and result.pierce_bound == 4

    def test_helly_case(self):
        for d in (1, 2, 3):
            result = ms_threshold(d + 1, d + 1, d)
            assert result.threshold_r == 1 and result.pierce_bound == 1

    def test_742(self):
        result = ms_threshold(7, 4, 2)
        assert result.threshold_r == 16 and result.pierce_bound == 4

    def test_hypothesis_rejected(self):
        with pytest.raises(ArityError):
            ms_threshold(4, 2, 2)


class TestLemmaR0:
    def test_anchored_17(self):
        result = lemma_r0_threshold(6, 3, 2, 2)
        assert result.threshold_r == 17 and result.pierce_bound == 2

    def test_identity_with_kalai(self):
        for p in range(4, 16):
            for d in (1, 2):
                for q in range(max(2, d + 1), p + 1):
                    for f in range(1, p // d):
                        if d * (f + 1) > p:
                            continue
                        assert (
                            lemma_r0_threshold(p, q, d, f).threshold_r
                            == kalai_bound(p, q, p - f - d, d) + 1
                        )

    def test_max_f_instantiation(self):
        # f = floor(p/d) - 1 is the largest admissible piercing target
        result = lemma_r0_threshold(12, 5, 2, 5)
        assert result.pierce_bound == 5
        with pytest.raises(ArityError):
            lemma_r0_threshold(12, 5, 2, 6)

    def test_derived_8423(self):
        result = lemma_r0_threshold(8, 4, 2, 3)
        assert result.threshold_r == 36 and result.pierce_bound == 3
        # oracle-checked chain: r=36 certifies the (8,6) property, whose
        # piercing number in the exact regime is 3 = f
        assert implied_q(8, 4, 36, 2) == 6
        assert hd_exact_region(8, 6, 2) == 3

    def test_f_range(self):
        with pytest.raises(ArityError):
            lemma_r0_threshold(6, 3, 2, 0)


class TestRemarkThreshold:
    def test_derived_6322(self):
        result = remark_threshold(6, 3, 2, 2)
        assert result.threshold_r == 20
        assert CAVEAT_P0_UNKNOWN in result.caveats

    def test_f1_matches_kalai_form(self):
        for p in range(4, 12):
            for d in (1, 2):
                for q in range(max(2, d + 1), p + 1):
                    assert (
                        remark_threshold(p, q, d, 1).threshold_r
                        == kalai_bound(p, q, p - d, d) + 1
                    )

    def test_epsilon_range_enforced(self):
        # with epsilon given, f is capped at p - ceil(p^((d-1)/d+eps)) + 2
        m = ceil_power(16, Fraction(1, 2) + Fraction(1, 4))
        limit = 16 - m + 2
        remark_threshold(16, 3, 2, limit, epsilon=Fraction(1, 4))
        with pytest.raises(ArityError):
            remark_threshold(16, 3, 2, limit + 1, epsilon=Fraction(1, 4))

    def test_boundary_f_matches_thm2_case2(self):
        # at the top of the admissible range the remark instantiates the
        # same piercing number as the second threshold case
        p, q, d, eps = 16, 8, 2, Fraction(1, 2)
        m = ceil_power(p, Fraction(d - 1, d) + eps)
        f = p - m + 2
        assert remark_threshold(p, q, d, f, epsilon=eps).pierce_bound == f
        assert thm2_threshold(p, q, d, eps).pierce_bound == f


class TestCeilPower:
    def test_exact_integer_power(self):
        assert ceil_power(16, Fraction(1)) == 16
        assert ceil_power(27, Fraction(2, 3)) == 9
        assert ceil_power(26, Fraction(2, 3)) == 9
        assert ceil_power(28, Fraction(2, 3)) == 10

    def test_tiny_exponent(self):
        assert ceil_power(8, Fraction(1, 100)) == 2
        assert ceil_power(1, Fraction(5, 7)) == 1

    def test_huge_values_exact(self):
        # spot-check the pure-integer comparison far beyond float precision
        p, e = 10**6, Fraction(5, 3)
        m = ceil_power(p, e)
        assert m**3 >= p**5 > (m - 1) ** 3


class TestThm2Threshold:
    def test_dim1_small_epsilon_first_case(self):
        # exponent collapses to epsilon; ceil(p^eps) = 2, so every q >= 3
        # lands in the large-q case with piercing p-q+1
        for p in range(4, 10):
            for q in range(3, p + 1):
                result = thm2_threshold(p, q, 1, Fraction(1, 100))
                assert result.pierce_bound == p - q + 1

    def test_derived_16_8_2_half(self):
        # frozen from the binomial-sum oracle
        result = thm2_threshold(16, 8, 2, Fraction(1, 2))
        expected = sum(binom(13, 8 - i) * binom(3, i) for i in range(3)) + 1
        assert expected == 11584
        assert result.threshold_r == 11584
        assert result.pierce_bound == 2
        assert CAVEAT_P0_UNKNOWN in result.caveats

    def test_certified_piercing_monotone_in_epsilon(self):
        # larger epsilon never shrinks the q-enlargement k = ceil(...) - q
        p, q, d = 20, 5, 2
        ks = []
        for eps in (Fraction(1, 10), Fraction(1, 4), Fraction(1, 2), Fraction(1)):
            m = ceil_power(p, Fraction(d - 1, d) + eps)
            ks.append(max(m - q, 0))
        assert ks == sorted(ks)


class TestM0:
    def test_derived_values(self):
        assert m0(6, 3, 0) == 3
        assert m0(10, 4, 2) == 6
        assert m0(7, 4, 1) == 3

    def test_k_max_is_one(self):
        for p in range(4, 12):
            for q in range(2, p):
                assert m0(p, q, p - q - 1) == 1

    def test_direct_search_oracle(self):
        # independent restatement: first m whose triangular number C(m+1,2)
        # reaches the target
        for p, q, k in [(6, 3, 0), (10, 4, 2), (9, 3, 1), (12, 5, 3)]:
            target = (p - q - k - 1) * (p - q + k + 2) // 2 + 1
            m = 1
            while (m + 1) * m // 2 < target:
                m += 1
            assert m0(p, q, k) == m

    def test_k_range(self):
        with pytest.raises(ArityError):
            m0(6, 3, 3)


class TestThm3Threshold:
    def test_anchored_16(self):
        result = thm3_threshold(6, 3, 2, 0)
        assert result.threshold_r == 16 and result.pierce_bound == 2
        assert CAVEAT_NON_DEGENERATE in result.caveats

    def test_anchored_reduction_point(self):
        assert thm3_threshold(6, 3, 2, 2).threshold_r == ms_threshold(6, 3, 2).threshold_r == 11

    def test_derived_7421(self):
        result = thm3_threshold(7, 4, 2, 1)
        assert result.threshold_r == 23 and result.pierce_bound == 3

    def test_k_range(self):
        with pytest.raises(ArityError):
            thm3_threshold(6, 3, 2, 3)
        with pytest.raises(ArityError):
            thm3_threshold(6, 6, 2, 0)


class TestDim1Threshold:
    def test_derived_420(self):
        result = dim1_threshold(4, 2, 0)
        assert result.threshold_r == 6 and result.pierce_bound == 1

    def test_derived_631(self):
        result = dim1_threshold(6, 3, 1)
        assert result.threshold_r == 11 and result.pierce_bound == 2

    def test_boundary_k_equals_p_minus_q(self):
        # both binomials vanish at p-k-2 = q-2, so the threshold is 1:
        # the plain (p,q) property already gives p-q+1 points in 1D
        for p in range(4, 10):
            for q in range(2, p + 1):
                result = dim1_threshold(p, q, p - q)
                assert result.threshold_r == 1
                assert result.pierce_bound == p - q + 1

    def test_range(self):
        with pytest.raises(ArityError):
            dim1_threshold(4, 2, 3)


class TestHdExactRegion:
    def test_anchored(self):
        assert hd_exact_region(6, 5, 2) == 2
        assert hd_exact_region(5, 2, 1) == 4
        assert hd_exact_region(6, 4, 2) is None

    def test_dim1_always_exact(self):
        for p in range(2, 12):
            for q in range(2, p + 1):
                assert hd_exact_region(p, q, 1) == p - q + 1


class TestImpliedQ:
    def test_anchored_17_gives_5(self):
        assert implied_q(6, 3, 17, 2) == 5
        assert hd_exact_region(6, 5, 2) == 2

    def test_derived_11_gives_4(self):
        assert implied_q(6, 3, 11, 2) == 4
        assert hd_exact_region(6, 4, 2) is None

    def test_r1_certifies_nothing(self):
        for p in range(4, 10):
            for d in (1, 2):
                for q in range(d + 1, p + 1):
                    assert implied_q(p, q, 1, d) == q

    def test_guarantee_condition_holds_at_answer(self):
        for p, q, r, d in [(6, 3, 17, 2), (6, 3, 11, 2), (8, 4, 36, 2), (9, 2, 5, 1)]:
            qp = implied_q(p, q, r, d)
            if qp > q:
                assert r > kalai_bound(p, q, qp - 1 - d, d)


class TestReductionIdentity:
    def test_thm3_reduces_to_ms_sweep(self):
        for p in range(3, 21):
            for q in range(2, p):
                for d in range(1, q):
                    if d == 1 and q < 2:
                        continue
                    if d > 1 and q < d + 1:
                        continue
                    assert (
                        thm3_threshold(p, q, d, p - q - 1).threshold_r
                        == ms_threshold(p, q, d).threshold_r
                    )
