"""Tests for the brute-force oracle and the theory cross-checks."""

import pytest

from pelltriples.arith import factorize, legendre
from pelltriples.errors import UnsupportedClassGroupError
from pelltriples.gdgroup import NormalizedSolution
from pelltriples.oracle import (
    AGREE,
    DISAGREE,
    NOT_APPLICABLE,
    brute_force_solutions,
    cross_check,
    sweep_csv_rows,
    verify_sweep,
)
from pelltriples.solutions import factor_element, recompose


class TestBruteForce:
    def test_d5_c21_with_gcd_rejections(self):
        # The scan hits (14,7,21) and (6,9,21) too; gcd filters them out.
        assert brute_force_solutions(5, 21) == (
            NormalizedSolution(5, 19, 4, 21),
            NormalizedSolution(5, 11, 8, 21),
        )

    def test_d26_c5_empty(self):
        assert brute_force_solutions(26, 5) == ()

    def test_d2_c9(self):
        assert brute_force_solutions(2, 9) == (NormalizedSolution(2, 7, 4, 9),)

    def test_sorted_by_b_no_duplicates(self):
        for c in (99, 297, 561):
            found = brute_force_solutions(2, c)
            bs = [s.b for s in found]
            assert bs == sorted(bs)
            assert len(set(found)) == len(found)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            brute_force_solutions(0, 5)
        with pytest.raises(ValueError):
            brute_force_solutions(2, 0)


class TestCrossCheck:
    def test_agree_with_solutions(self):
        report = cross_check(2, 33)
        assert report.agrees_with_theory == AGREE
        assert len(report.solutions) == 2

    def test_not_applicable(self):
        report = cross_check(26, 5)
        assert report.agrees_with_theory == NOT_APPLICABLE
        assert report.solutions == ()

    def test_agree_on_empty(self):
        report = cross_check(2, 15)
        assert report.agrees_with_theory == AGREE
        assert report.solutions == ()

    def test_even_hypotenuse(self):
        report = cross_check(2, 12)
        assert report.agrees_with_theory == AGREE
        assert report.solutions == ()


class TestVerifySweep:
    def test_d2_small_sweep_clean(self):
        summary = verify_sweep(2, 500)
        assert summary.all_agree
        assert summary.disagreements == ()
        assert summary.agreements == len(summary.rows) == len(range(3, 501, 2))

    def test_threads_give_identical_result(self):
        assert verify_sweep(5, 200, threads=4) == verify_sweep(5, 200)

    def test_rows_in_c_order(self):
        summary = verify_sweep(6, 99)
        assert [r.c for r in summary.rows] == list(range(3, 100, 2))

    def test_counts_follow_prime_criterion(self):
        # Both directions of the existence criterion, on raw oracle counts.
        summary = verify_sweep(10, 301)
        for row in summary.rows:
            fi = factorize(row.c)
            if all(legendre(-10, p) == 1 for p, _ in fi.factors):
                assert row.oracle_count == 2 ** (fi.distinct_prime_count - 1)
            else:
                assert row.oracle_count == 0

    def test_unsupported_d(self):
        with pytest.raises(UnsupportedClassGroupError):
            verify_sweep(26, 100)

    def test_rejects_bad_cmax(self):
        with pytest.raises(ValueError):
            verify_sweep(2, 0)

    def test_csv_rows(self):
        summary = verify_sweep(2, 9)
        lines = sweep_csv_rows(summary)
        assert lines[0] == "D,c,k,theory_count,oracle_count,agree"
        assert lines[1] == "2,3,1,1,1,true"
        assert lines[2] == "2,5,1,0,0,true"
        assert lines[4] == "2,9,1,1,1,true"


class TestOracleSolutionsFactor:
    def test_every_oracle_solution_factors(self):
        for D in (2, 5, 13):
            for c in range(3, 200, 2):
                for s in brute_force_solutions(D, c):
                    z = s.to_element()
                    assert recompose(factor_element(z)) == z
