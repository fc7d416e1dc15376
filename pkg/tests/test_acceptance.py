"""Acceptance sweeps, one test per criterion, at the full stated bounds.

Exact integer arithmetic throughout; the tolerance everywhere is zero.
Each test prints a one-line verdict (run with -s to see them live):

    pytest tests/test_acceptance.py -v -s
"""

import pytest

from kpetrie.verify import (
    suite_census,
    suite_closed,
    suite_core_orders,
    suite_core_structure,
    suite_methods,
    suite_mn,
    suite_oracle,
    suite_pieri,
    suite_special,
)


def _report(number, label, cases, failures):
    status = "PASS" if not failures else "FAIL"
    print(f"criterion {number:2d} ({label}): {status} [{cases} checks]")
    assert not failures, failures[:5]


@pytest.fixture(scope="module")
def methods_result():
    # shared by criteria 1 and 2: all mu ⊆ lam with |lam| <= 10, k in 2..5
    return suite_methods(max_size=10, ks=(2, 3, 4, 5))


def test_criterion_01_three_method_agreement(methods_result):
    failures = [
        f for f in methods_result.failures if "disagree" in f
    ]
    _report(1, "det = tiling = core agreement", methods_result.cases, failures)


def test_criterion_02_value_range(methods_result):
    failures = [f for f in methods_result.failures if "out of range" in f]
    _report(2, "Pet values in {-1, 0, 1}", methods_result.cases, failures)


def test_criterion_03_pieri_vs_oracle():
    result = suite_pieri(max_total=9, max_k=5, max_mu_size=4)
    _report(3, "Pieri rule vs polynomial oracle", result.cases, result.failures)


def test_criterion_04_census_laws():
    result = suite_census(max_size=10, ks=(2, 3, 4))
    _report(4, "census odd=even, powers of 2, pinned instance", result.cases, result.failures)


def test_criterion_05_empty_mu_structure():
    result = suite_core_structure(max_size=10, max_k=5)
    _report(5, "empty-mu tiling counts and core rows", result.cases, result.failures)


def test_criterion_06_core_order_independence():
    result = suite_core_orders(max_size=12, max_k=5)
    _report(6, "core order-independence and chain signs", result.cases, result.failures)


def test_criterion_07_plethystic_mn_vs_oracle():
    result = suite_mn(max_total=9)
    _report(7, "plethystic rule vs polynomial oracle", result.cases, result.failures)


def test_criterion_08_specializations():
    result = suite_special(max_size=8, ks=(2, 3, 4, 6))
    _report(8, "root-of-unity specializations vs cyclotomic oracle", result.cases, result.failures)


def test_criterion_09_closed_forms():
    result = suite_closed(max_k_plain=6, max_k_hr=5, max_r=4)
    _report(9, "closed forms vs expansions", result.cases, result.failures)


def test_criterion_10_oracle_self_consistency():
    result = suite_oracle(max_size=8, max_k=5)
    _report(10, "Jacobi-Trudi and Petrie-polynomial cross-checks", result.cases, result.failures)
