from math import gcd

import pytest

from circleprimes.arith import factorize, primes_up_to
from circleprimes.circlemap import pi_mod
from circleprimes.claims import (
    ALL_CLAIMS,
    ClaimId,
    ClaimResult,
    SweepConfig,
    Verdict,
    check_EC36_38,
    check_GA28_32,
    check_GB33_35,
    check_GC39_42,
    check_GE43,
    check_R24_27,
    check_T1,
    check_T2,
    check_TP44_47,
    check_TP48_58,
    check_TP59_61,
    iter_suite,
    run_suite,
    t2_sides,
)
from circleprimes.pseudoprimes import enumerate_pseudoprimes


class TestClaimResult:
    def test_fails_requires_witness(self):
        with pytest.raises(ValueError):
            ClaimResult(ClaimId.T1, (("k", 2), ("n", 341)), Verdict.FAILS)

    def test_record_serialization(self):
        result = ClaimResult(
            ClaimId.T2, (("k", 2), ("n1", 11), ("n2", 31)), Verdict.HOLDS
        )
        assert result.as_record() == {
            "claim_id": "T2",
            "params": "k=2 n1=11 n2=31",
            "verdict": "holds",
            "witness": "",
        }


class TestT1:
    def test_base2_examples(self):
        assert check_T1(2, 341).verdict is Verdict.HOLDS
        assert check_T1(2, 561).verdict is Verdict.HOLDS

    def test_not_applicable_when_not_pseudoprime(self):
        result = check_T1(3, 341)
        assert result.verdict is Verdict.NOT_APPLICABLE
        assert result.witness is None

    def test_holds_for_every_base2_pseudoprime_below_2000(self):
        for n in enumerate_pseudoprimes(2, 2000):
            assert check_T1(2, n).verdict is Verdict.HOLDS


class TestT2:
    def test_both_sides_true(self):
        result = check_T2(2, 11, 31)
        assert result.verdict is Verdict.HOLDS
        assert t2_sides(2, 11, 31) == (True, True)

    def test_both_sides_false(self):
        assert check_T2(2, 3, 5).verdict is Verdict.HOLDS
        assert t2_sides(2, 3, 5) == (False, False)

    def test_2047_is_pseudoprime(self):
        assert check_T2(2, 23, 89).verdict is Verdict.HOLDS
        assert t2_sides(2, 23, 89) == (True, True)

    def test_rejects_composite_factor(self):
        with pytest.raises(ValueError):
            check_T2(2, 9, 11)

    def test_rejects_equal_factors(self):
        with pytest.raises(ValueError):
            check_T2(2, 11, 11)

    def test_rejects_shared_base_factor(self):
        with pytest.raises(ValueError):
            check_T2(3, 3, 11)

    def test_rejects_factor_two(self):
        # 7**3 - 7 is even and 3 | 7**2 - 7, yet 42 is not a pseudoprime:
        # the biconditional is only a theorem over odd factors
        with pytest.raises(ValueError):
            check_T2(7, 2, 3)

    def test_exhaustive_agreement_below_2000(self):
        primes = [p for p in primes_up_to(700) if p > 2]
        for i, p in enumerate(primes):
            for q in primes[i + 1 :]:
                n = p * q
                if n > 2000:
                    break
                for k in range(2, 21):
                    if gcd(k, n) != 1:
                        continue
                    assert check_T2(k, p, q).verdict is Verdict.HOLDS, (k, p, q)

    def test_both_true_cases_are_exactly_the_semiprime_pseudoprimes(self):
        limit = 3000
        semiprime_pseudoprimes = [
            n for n in enumerate_pseudoprimes(2, limit)
            if len(factorize(n).factors) == 2 and factorize(n).is_squarefree
        ]
        both_true = []
        primes = [p for p in primes_up_to(limit // 3) if p > 2]
        for i, p in enumerate(primes):
            for q in primes[i + 1 :]:
                n = p * q
                if n > limit:
                    break
                if gcd(2, n) == 1 and t2_sides(2, p, q) == (True, True):
                    both_true.append(n)
        assert sorted(both_true) == semiprime_pseudoprimes


class TestR24_27:
    def test_341_instance_with_hand_value(self):
        assert check_R24_27(2, 31, 11).verdict is Verdict.HOLDS
        # the |n1 - n2| = 20 instance, checked by direct division
        assert 2**20 - 1 == 341 * 3075

    def test_2047_and_1387(self):
        assert check_R24_27(2, 89, 23).verdict is Verdict.HOLDS
        assert check_R24_27(2, 73, 19).verdict is Verdict.HOLDS

    def test_order_independent(self):
        assert check_R24_27(2, 11, 31).verdict is Verdict.HOLDS

    def test_not_applicable(self):
        assert check_R24_27(2, 3, 5).verdict is Verdict.NOT_APPLICABLE


class TestGA28_32:
    def test_r2_instance(self):
        # 11 | 2**121 - 2 and 11 | 2**90 - 1 via 2**10 == 1 mod 11
        assert check_GA28_32(2, 11, 31, 2).verdict is Verdict.HOLDS

    def test_r1_collapses_to_difference_form(self):
        assert check_GA28_32(2, 11, 31, 1).verdict is Verdict.HOLDS

    def test_r3_swapped_order(self):
        assert check_GA28_32(2, 31, 11, 3).verdict is Verdict.HOLDS

    def test_rejects_r_below_one(self):
        with pytest.raises(ValueError):
            check_GA28_32(2, 11, 31, 0)

    def test_not_applicable(self):
        assert check_GA28_32(3, 11, 31, 2).verdict is Verdict.NOT_APPLICABLE


class TestGB33_35:
    def test_r1_hand_value(self):
        assert check_GB33_35(2, 11, 31, 1).verdict is Verdict.HOLDS
        assert 2**10 - 1 == 3 * 341

    def test_r7(self):
        assert check_GB33_35(2, 11, 31, 7).verdict is Verdict.HOLDS

    def test_2047_r2(self):
        assert check_GB33_35(2, 23, 89, 2).verdict is Verdict.HOLDS


class TestEC36_38:
    def test_341_both_routes(self):
        # exponent 40 route and totient (= 300) route together
        assert check_EC36_38(2, 11, 31).verdict is Verdict.HOLDS

    def test_2701(self):
        assert check_EC36_38(2, 37, 73).verdict is Verdict.HOLDS


class TestGC39_42:
    def test_unit_coefficients(self):
        assert check_GC39_42(2, 11, 31, 1, 1).verdict is Verdict.HOLDS

    def test_zero_exponent_is_degenerate(self):
        # 3*11 - 31 - 2 = 0
        result = check_GC39_42(2, 11, 31, 3, -1)
        assert result.verdict is Verdict.DEGENERATE
        assert check_GC39_42(2, 11, 31, 0, 0).verdict is Verdict.DEGENERATE

    def test_negative_s_with_positive_exponent(self):
        # e = 44 - 31 - 3 = 10 and 2**10 - 1 = 1023 = 3*341
        assert check_GC39_42(2, 11, 31, 4, -1).verdict is Verdict.HOLDS
        assert 2**10 - 1 == 3 * 341

    def test_negative_exponent_is_degenerate(self):
        assert check_GC39_42(2, 11, 31, -1, 0).verdict is Verdict.DEGENERATE


class TestGE43:
    def test_examples(self):
        # e = 121 + 31 - 2 = 150, a multiple of the order of 2 mod 341
        assert check_GE43(2, 11, 31, 1, 1, 2, 1).verdict is Verdict.HOLDS
        # e = 242 + 961 - 3 = 1200
        assert check_GE43(2, 11, 31, 2, 1, 2, 2).verdict is Verdict.HOLDS

    def test_specializes_to_gc_at_unit_powers(self):
        for n1, n2, k in [(11, 31, 2), (7, 13, 3)]:
            for r in range(-3, 4):
                for s in range(-3, 4):
                    ge = check_GE43(k, n1, n2, r, s, 1, 1)
                    gc = check_GC39_42(k, n1, n2, r, s)
                    assert ge.verdict == gc.verdict, (k, n1, n2, r, s)

    def test_rejects_bad_powers(self):
        with pytest.raises(ValueError):
            check_GE43(2, 11, 31, 1, 1, 0, 1)


class TestTP44_47:
    def test_carmichael_561(self):
        assert check_TP44_47(2, 3, 11, 17).verdict is Verdict.HOLDS

    def test_1105_and_1729(self):
        assert check_TP44_47(2, 5, 13, 17).verdict is Verdict.HOLDS
        assert check_TP44_47(2, 7, 13, 19).verdict is Verdict.HOLDS

    def test_not_applicable(self):
        assert check_TP44_47(2, 3, 5, 7).verdict is Verdict.NOT_APPLICABLE


class TestTP48_58:
    def test_561_with_hand_value(self):
        assert check_TP48_58(2, 3, 11, 17).verdict is Verdict.HOLDS
        # the 17-rotation exponent is |3*11 - 17| = 16: 2**16 - 1 = 17*3855
        assert 2**16 - 1 == 17 * 3855

    def test_other_three_factor_pseudoprimes(self):
        assert check_TP48_58(2, 3, 5, 43).verdict is Verdict.HOLDS  # 645
        assert check_TP48_58(2, 5, 13, 17).verdict is Verdict.HOLDS  # 1105


class TestTP59_61:
    def test_specializes_to_tp48_at_unit_parameters(self):
        for primes in [(3, 11, 17), (5, 13, 17), (7, 13, 19)]:
            assert (
                check_TP59_61(2, *primes, 1, 1).verdict
                == check_TP48_58(2, *primes).verdict
            )

    def test_examples(self):
        assert check_TP59_61(2, 3, 11, 17, 2, 3).verdict is Verdict.HOLDS
        assert check_TP59_61(2, 5, 13, 17, 2, 2).verdict is Verdict.HOLDS

    def test_rejects_bad_m_j(self):
        with pytest.raises(ValueError):
            check_TP59_61(2, 3, 11, 17, 0, 1)


class TestDecompositionIdentity:
    def test_three_factor_split_under_any_modulus(self):
        # k**n - k = pi_n + sum of pairwise pi + sum of single pi
        cases = [(3, 11, 17), (5, 13, 17), (7, 13, 19), (3, 5, 43)]
        moduli = (7, 341, 561, 1000, 10**9 + 7)
        for n1, n2, n3 in cases:
            n = n1 * n2 * n3
            for k in range(2, 7):
                for m in moduli:
                    left = (pow(k, n, m) - k) % m
                    right = (
                        pi_mod(k, n, m)
                        + pi_mod(k, n1 * n2, m) + pi_mod(k, n1 * n3, m)
                        + pi_mod(k, n2 * n3, m)
                        + pi_mod(k, n1, m) + pi_mod(k, n2, m) + pi_mod(k, n3, m)
                    ) % m
                    assert left == right, (k, n1, n2, n3, m)


class TestSweepConfig:
    def test_canonicalizes_bases_and_claims(self):
        config = SweepConfig(bases=(5, 2, 5), claims=(ClaimId.GE43, ClaimId.T1))
        assert config.bases == (2, 5)
        assert config.claims == (ClaimId.T1, ClaimId.GE43)

    def test_rejects_bad_ranges(self):
        with pytest.raises(ValueError):
            SweepConfig(bases=())
        with pytest.raises(ValueError):
            SweepConfig(bases=(1,))
        with pytest.raises(ValueError):
            SweepConfig(rs_min=2, rs_max=-2)
        with pytest.raises(ValueError):
            SweepConfig(qpmj_max=0)


class TestRunSuite:
    def test_empty_range_empty_report(self):
        report = run_suite(SweepConfig(bases=(2,), max_n=1))
        assert report.total == 0
        assert report.failure_count == 0

    def test_small_sweep_zero_failures(self):
        config = SweepConfig(
            bases=(2, 3), max_n=2000, rs_min=-2, rs_max=2, qpmj_max=2
        )
        report = run_suite(config)
        assert report.failure_count == 0
        assert report.total > 0
        # tallies account for every result
        assert sum(sum(c.values()) for c in report.tallies.values()) == report.total
        # at least one claim of each family actually ran
        for claim in ALL_CLAIMS:
            assert sum(report.tallies[claim].values()) > 0, claim

    def test_t2_only_semiprime_sweep(self):
        report = run_suite(SweepConfig(bases=(2,), max_n=3000, claims=(ClaimId.T2,)))
        assert report.failure_count == 0
        assert set(report.tallies) == {ClaimId.T2}

    def test_deterministic_order(self):
        config = SweepConfig(bases=(2,), max_n=700)
        first = list(iter_suite(config))
        second = list(iter_suite(config))
        assert first == second

    def test_threads_do_not_change_results(self):
        config = SweepConfig(bases=(2, 3), max_n=700)
        sequential = list(iter_suite(config, threads=1))
        threaded = list(iter_suite(config, threads=4))
        assert sequential == threaded

    def test_degenerate_tuples_never_fail(self):
        config = SweepConfig(bases=(2,), max_n=700, rs_min=-3, rs_max=3)
        for result in iter_suite(config):
            if result.verdict is Verdict.DEGENERATE:
                assert result.witness is None
        report = run_suite(config)
        assert report.tallies[ClaimId.GC39_42][Verdict.DEGENERATE] > 0
        assert report.failure_count == 0
