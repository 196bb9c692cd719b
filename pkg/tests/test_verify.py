"""Verification-suite machinery: green runs, named failures, summaries."""

import pytest

import confpoly.combinatorics as combinatorics
import confpoly.poincare as poincare
from confpoly.verify import SUITES, run_suites


class TestRunSuites:
    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError):
            run_suites(["nonsense"])

    def test_duality_suite_green(self):
        summary, results = run_suites(["duality"], max_k=3, max_n=6)
        assert summary.ok
        assert summary.failed == 0
        assert summary.first_failure is None
        assert summary.passed == len(results) == 2 * 4 * 7
        assert summary.suites == ("duality",)

    def test_recursions_suite_green(self):
        summary, _ = run_suites(["recursions"], max_k=4, max_n=8)
        assert summary.ok

    def test_euler_suite_green(self):
        summary, _ = run_suites(["euler"], max_k=3, max_n=6)
        assert summary.ok

    def test_series_suite_green(self):
        summary, _ = run_suites(["series"], max_k=3, max_n=8)
        assert summary.ok

    def test_pointcount_suite_green_small(self):
        summary, results = run_suites(["pointcount"], primes=(2, 3), max_n=4)
        assert summary.ok
        assert any(r.space == "ordered" for r in results)
        assert any(r.space == "unordered" for r in results)

    def test_single_k_restriction(self):
        _, results = run_suites(["duality"], only_k=2, max_n=5)
        assert {r.k for r in results} == {2}

    def test_all_names_every_suite(self):
        summary, _ = run_suites(["all"], max_k=1, max_n=3, primes=(2,))
        assert summary.suites == SUITES
        assert summary.ok


class TestFailureNaming:
    def test_exception_becomes_named_failure(self, monkeypatch):
        def explode(k, n):
            raise RuntimeError("boom")

        monkeypatch.setattr(poincare, "betti_unordered", explode)
        summary, _ = run_suites(["series"], max_k=1, max_n=2)
        assert not summary.ok
        first = summary.first_failure
        assert first.suite == "series"
        assert "RuntimeError" in first.detail

    def test_wrong_value_is_located(self, monkeypatch):
        real = combinatorics.pyramidal

        def off_by_one(k, i):
            value = real(k, i)
            return value + 1 if (k, i) == (2, 3) else value

        monkeypatch.setattr(combinatorics, "pyramidal", off_by_one)
        summary, _ = run_suites(["recursions"])
        assert not summary.ok
        first = summary.first_failure
        assert (first.suite, first.space, first.k, first.n) == ("recursions", "-", 2, 3)
        assert "disagree" in first.detail

    def test_summary_counts(self, monkeypatch):
        real = poincare.betti_unordered

        def broken(k, n):
            row = real(k, n)
            if (k, n) == (2, 3):
                ranks = list(row.ranks)
                ranks[1] += 1
                return poincare.BettiRow(k, n, tuple(ranks))
            return row

        monkeypatch.setattr(poincare, "betti_unordered", broken)
        summary, results = run_suites(["duality"], max_k=2, max_n=4)
        assert summary.failed == 1
        assert summary.passed + summary.failed == len(results)
        f = summary.first_failure
        assert (f.space, f.k, f.n) == ("unordered", 2, 3)
