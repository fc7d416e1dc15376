import random

import pytest

from kpetrie.partitions import SkewShape, enumerate_partitions, enumerate_subpartitions
from kpetrie.oracle import (
    CyclotomicInt,
    MultiPoly,
    NotSymmetric,
    base_polynomial,
    cyclotomic_eval_schur,
    cyclotomic_polynomial,
    extract_schur_expansion,
    g_polynomial,
    jacobi_trudi_polynomial,
    plethysm_poly,
    schur_polynomial,
)
from kpetrie.petrie import SchurExpansion


def brute_force_schur(shape, n_vars):
    """Independent SSYT sum: fill cells one by one, rows weakly and columns
    strictly increasing, entries at most n_vars."""
    lam, mu = shape.outer, shape.inner
    cells = shape.cells()
    terms = {}

    def fill(idx, values):
        if idx == len(cells):
            e = [0] * n_vars
            for v in values.values():
                e[v - 1] += 1
            key = tuple(e)
            terms[key] = terms.get(key, 0) + 1
            return
        i, j = cells[idx]
        lo = 1
        left = values.get((i, j - 1))
        if left is not None:
            lo = max(lo, left)
        above = values.get((i - 1, j))
        if above is not None:
            lo = max(lo, above + 1)
        for v in range(lo, n_vars + 1):
            values[(i, j)] = v
            fill(idx + 1, values)
        values.pop((i, j), None)

    fill(0, {})
    return MultiPoly(n_vars, terms)


def all_pairs(max_size):
    for n in range(max_size + 1):
        for lam in enumerate_partitions(n):
            for mu in enumerate_subpartitions(lam):
                yield lam, mu


# --- MultiPoly basics -------------------------------------------------------

def test_multipoly_arithmetic():
    x_plus_y = MultiPoly(2, {(1, 0): 1, (0, 1): 1})
    sq = x_plus_y * x_plus_y
    assert sq.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    one = MultiPoly.constant(2, 1)
    assert sq * one == sq
    assert sq - sq == MultiPoly(2, {})
    assert (sq * 0).terms == {}
    assert 3 * one == MultiPoly.constant(2, 3)


def test_multipoly_symmetry_and_degree():
    p2 = base_polynomial("p", 2, 3)
    assert p2.is_symmetric() and p2.is_homogeneous() and p2.degree() == 2
    lopsided = MultiPoly(2, {(1, 0): 1})
    assert not lopsided.is_symmetric()


def test_newton_identity_degree_two():
    e1 = base_polynomial("e", 1, 2)
    e2 = base_polynomial("e", 2, 2)
    assert e1 * e1 - 2 * e2 == base_polynomial("p", 2, 2)


# --- constructors -----------------------------------------------------------

def test_base_polynomial_examples():
    assert base_polynomial("e", 2, 2).terms == {(1, 1): 1}
    assert base_polynomial("h", 2, 2).terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert base_polynomial("m", (2, 1), 2).terms == {(2, 1): 1, (1, 2): 1}
    assert base_polynomial("e", 3, 2).terms == {}
    assert base_polynomial("m", (1, 1, 1), 2).terms == {}
    assert base_polynomial("h", 0, 3) == MultiPoly.constant(3, 1)
    with pytest.raises(ValueError):
        base_polynomial("q", 1, 2)


def test_schur_examples():
    assert schur_polynomial(SkewShape((1,), ()), 2).terms == {(1, 0): 1, (0, 1): 1}
    assert schur_polynomial(SkewShape((1, 1, 1), ()), 2).terms == {}
    s21 = schur_polynomial(SkewShape((2, 1), ()), 3)
    assert sum(s21.terms.values()) == 8
    assert schur_polynomial(SkewShape((2, 2), (2, 2)), 3) == MultiPoly.constant(3, 1)


def test_schur_against_brute_force_fillings():
    for lam, mu in all_pairs(5):
        shape = SkewShape(lam, mu)
        for n_vars in (1, 2, 3, 4):
            assert schur_polynomial(shape, n_vars) == brute_force_schur(shape, n_vars), (
                lam,
                mu,
                n_vars,
            )


def test_schur_is_symmetric():
    for size in range(7):
        for lam in enumerate_partitions(size):
            assert schur_polynomial(SkewShape(lam, ()), 4).is_symmetric()


def test_g_polynomial_special_cases():
    for m in range(6):
        n = max(1, m)
        assert g_polynomial(m + 1, m, n) == base_polynomial("h", m, n)
        assert g_polynomial(2, m, n) == base_polynomial("e", m, n)
        if m >= 1:
            assert g_polynomial(m, m, n) == base_polynomial("h", m, n) - base_polynomial("p", m, n)
    assert g_polynomial(1, 3, 3).terms == {}
    assert g_polynomial(4, 0, 2) == MultiPoly.constant(2, 1)


def test_plethysm_examples():
    assert plethysm_poly(3, 0, 2) == MultiPoly.constant(2, 1)
    assert plethysm_poly(2, 1, 2).terms == {(2, 0): 1, (0, 2): 1}
    assert plethysm_poly(3, 1, 2).terms == {(3, 0): 1, (0, 3): 1}
    assert plethysm_poly(2, 2, 2).terms == {(4, 0): 1, (2, 2): 1, (0, 4): 1}


# --- extraction -------------------------------------------------------------

def test_extract_examples():
    assert extract_schur_expansion(
        schur_polynomial(SkewShape((2, 1), ()), 3)
    ) == SchurExpansion({(2, 1): 1})
    assert extract_schur_expansion(base_polynomial("p", 2, 3)) == SchurExpansion(
        {(2,): 1, (1, 1): -1}
    )
    assert extract_schur_expansion(g_polynomial(3, 3, 4)) == SchurExpansion(
        {(2, 1): 1, (1, 1, 1): -1}
    )
    assert extract_schur_expansion(MultiPoly(2, {})) == SchurExpansion({})


def test_extract_round_trip_random_combos():
    rng = random.Random(11)
    for trial in range(30):
        d = rng.randint(1, 6)
        n_vars = d + rng.randint(0, 1)
        lams = list(enumerate_partitions(d))
        coeffs = {lam: rng.randint(-4, 4) for lam in rng.sample(lams, min(3, len(lams)))}
        poly = MultiPoly(n_vars, {})
        for lam, c in coeffs.items():
            poly = poly + c * schur_polynomial(SkewShape(lam, ()), n_vars)
        assert extract_schur_expansion(poly) == SchurExpansion(coeffs), coeffs


def test_extract_rejects_bad_input():
    with pytest.raises(NotSymmetric):
        extract_schur_expansion(MultiPoly(2, {(1, 0): 1}))
    with pytest.raises(ValueError):
        extract_schur_expansion(MultiPoly(2, {(1, 1): 1, (1, 0): 1}))  # inhomogeneous
    with pytest.raises(ValueError):
        extract_schur_expansion(base_polynomial("h", 3, 2))  # too few variables


def test_g_expansion_stability():
    """Coefficients do not move when the variable count grows past the degree."""
    for k in (2, 3):
        for m in range(1, 7):
            at_d = extract_schur_expansion(g_polynomial(k, m, m))
            at_d2 = extract_schur_expansion(g_polynomial(k, m, m + 2))
            assert at_d == at_d2, (k, m)


# --- Jacobi-Trudi -----------------------------------------------------------

def test_jacobi_trudi_skew_agreement():
    for lam, mu in all_pairs(6):
        shape = SkewShape(lam, mu)
        for n_vars in (max(1, sum(lam)), sum(lam) + 1):
            assert jacobi_trudi_polynomial(shape, n_vars) == schur_polynomial(
                shape, n_vars
            ), (lam, mu, n_vars)


# --- cyclotomics ------------------------------------------------------------

def test_cyclotomic_polynomial_examples():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_degrees_sum_to_k():
    for k in range(1, 30):
        total = sum(
            len(cyclotomic_polynomial(d)) - 1 for d in range(1, k + 1) if k % d == 0
        )
        assert total == k


def test_cyclotomic_int_arithmetic():
    for k in (2, 3, 4, 5, 6):
        omega = CyclotomicInt.omega_power(k, 1)
        power = CyclotomicInt.integer(k, 1)
        for _ in range(k):
            power = power * omega
        assert power == 1  # omega^k = 1
        total = CyclotomicInt.integer(k, 0)
        for j in range(k):
            total = total + CyclotomicInt.omega_power(k, j)
        assert total == 0  # geometric sum of all k-th roots
    x = CyclotomicInt(4, (1, 2))
    assert not x.is_rational_integer()
    with pytest.raises(ValueError):
        x.rational_value()
    assert CyclotomicInt(4, (7, 0)).rational_value() == 7


def test_cyclotomic_eval_examples():
    assert cyclotomic_eval_schur(2, SkewShape((1,), ())) == -1
    assert cyclotomic_eval_schur(3, SkewShape((1, 1), ())) == 1
    assert cyclotomic_eval_schur(3, SkewShape((2,), ())) == 0
    assert cyclotomic_eval_schur(4, SkewShape((2, 2), (2, 2))) == 1
