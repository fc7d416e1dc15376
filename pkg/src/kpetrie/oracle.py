"""Brute-force verification side: exact polynomial arithmetic in finitely
many variables, Schur polynomials from tableaux, Petrie and plethysm
polynomials, Schur-basis extraction, and cyclotomic integer evaluation.

Everything here exists to be obviously correct, not fast; coefficients are
exact Python integers throughout.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product

from .partitions import SkewShape, contains, enumerate_partitions
from .petrie import SchurExpansion


class NotSymmetric(Exception):
    """Input polynomial fails the adjacent-variable-swap test."""


class MultiPoly:
    """Integer polynomial in a fixed number of variables.

    Terms map dense exponent tuples (length n) to nonzero coefficients.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=()):
        self.n = n
        items = terms.items() if hasattr(terms, "items") else terms
        d: dict[tuple[int, ...], int] = {}
        for e, c in items:
            if c:
                if len(e) != n:
                    raise ValueError(f"exponent {e} has length != {n}")
                d[e] = d.get(e, 0) + c
        self.terms = {e: c for e, c in d.items() if c}

    @classmethod
    def constant(cls, n: int, c: int) -> "MultiPoly":
        return cls(n, {(0,) * n: c} if c else {})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __neg__(self):
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("variable counts differ")
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        p = MultiPoly.__new__(MultiPoly)
        p.n = self.n
        p.terms = out
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.n, {e: c * other for e, c in self.terms.items()})
        if self.n != other.n:
            raise ValueError("variable counts differ")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        p = MultiPoly.__new__(MultiPoly)
        p.n = self.n
        p.terms = out
        return p

    __rmul__ = __mul__

    def __repr__(self):
        return f"MultiPoly(n={self.n}, terms={len(self.terms)})"

    def coefficient(self, e) -> int:
        return self.terms.get(tuple(e), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_symmetric(self) -> bool:
        """Invariance under every adjacent-variable swap."""
        terms = self.terms
        for i in range(self.n - 1):
            for e, c in terms.items():
                if e[i] != e[i + 1]:
                    swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2 :]
                    if terms.get(swapped, 0) != c:
                        return False
        return True


def _strip_restrictions(outer, inner):
    """All nu with inner ⊆ nu ⊆ outer and outer/nu a horizontal strip."""
    rows = len(outer)
    ranges = []
    for i in range(rows):
        lo = max(
            inner[i] if i < len(inner) else 0,
            outer[i + 1] if i + 1 < rows else 0,
        )
        ranges.append(range(outer[i], lo - 1, -1))
    for combo in product(*ranges):
        yield tuple(x for x in combo if x)


@lru_cache(maxsize=None)
def _schur(outer, inner, n_vars):
    if n_vars == 0:
        return MultiPoly.constant(0, 1 if sum(outer) == sum(inner) else 0)
    out: dict[tuple[int, ...], int] = {}
    total = sum(outer)
    for nu in _strip_restrictions(outer, inner):
        sub = _schur(nu, inner, n_vars - 1)
        d = total - sum(nu)
        for e, c in sub.terms.items():
            key = e + (d,)
            out[key] = out.get(key, 0) + c
    return MultiPoly(n_vars, out)


def schur_polynomial(shape: SkewShape, n_vars: int) -> MultiPoly:
    """The skew Schur polynomial in n_vars variables: the sum over
    semi-standard fillings (rows weakly, columns strictly increasing, entries
    at most n_vars) of their content monomials.

    Computed by peeling the cells holding the largest entry, which always
    form a horizontal strip; results are cached.
    """
    if n_vars < 0:
        raise ValueError("need a nonnegative variable count")
    outer, inner = tuple(shape.outer), tuple(shape.inner)
    if not contains(inner, outer):
        raise ValueError(f"{inner} does not fit inside {outer}")
    return _schur(outer, inner, n_vars)


def _rearrangements(values, n_vars):
    """Distinct length-n tuples whose nonzero entries rearrange `values`."""
    counts: dict[int, int] = {0: n_vars - len(values)}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts, reverse=True)

    def rec(remaining):
        if remaining == 0:
            yield ()
            return
        for v in keys:
            if counts[v]:
                counts[v] -= 1
                for rest in rec(remaining - 1):
                    yield (v,) + rest
                counts[v] += 1

    yield from rec(n_vars)


def base_polynomial(kind: str, arg, n_vars: int) -> MultiPoly:
    """Truncation to n_vars variables of e_r, h_r, p_r, or m_lambda."""
    if n_vars < 1:
        raise ValueError("need at least one variable")
    if kind == "e":
        r = int(arg)
        if r < 0 or r > n_vars:
            return MultiPoly(n_vars, {})
        terms = {}
        for picks in combinations(range(n_vars), r):
            e = [0] * n_vars
            for i in picks:
                e[i] = 1
            terms[tuple(e)] = 1
        return MultiPoly(n_vars, terms)
    if kind == "h":
        r = int(arg)
        if r < 0:
            return MultiPoly(n_vars, {})
        terms = {}
        for picks in combinations_with_replacement(range(n_vars), r):
            e = [0] * n_vars
            for i in picks:
                e[i] += 1
            terms[tuple(e)] = 1
        return MultiPoly(n_vars, terms)
    if kind == "p":
        r = int(arg)
        if r < 1:
            raise ValueError("power sums need r >= 1")
        terms = {}
        for i in range(n_vars):
            e = [0] * n_vars
            e[i] = r
            terms[tuple(e)] = 1
        return MultiPoly(n_vars, terms)
    if kind == "m":
        lam = tuple(arg)
        if len(lam) > n_vars:
            return MultiPoly(n_vars, {})
        return MultiPoly(n_vars, {e: 1 for e in _rearrangements(lam, n_vars)})
    raise ValueError(f"unknown kind {kind!r}")


def _g_from_generating_product(k, m, n_vars):
    """Coefficient of z^m in prod_i (1 + x_i z + ... + (x_i z)^(k-1))."""
    coeffs = [MultiPoly.constant(n_vars, 1)] + [
        MultiPoly(n_vars, {}) for _ in range(m)
    ]
    for i in range(n_vars):
        new = []
        for j in range(m + 1):
            acc: dict[tuple[int, ...], int] = {}
            for t in range(min(j, k - 1) + 1):
                for e, c in coeffs[j - t].terms.items():
                    key = e[:i] + (e[i] + t,) + e[i + 1 :] if t else e
                    acc[key] = acc.get(key, 0) + c
            new.append(MultiPoly(n_vars, acc))
        coeffs = new
    return coeffs[m]


@lru_cache(maxsize=None)
def g_polynomial(k: int, m: int, n_vars: int) -> MultiPoly:
    """Degree-m Petrie polynomial in n_vars variables: the sum of monomial
    symmetric polynomials over partitions of m with all parts below k.

    Also built from the generating product over the variables; the two
    constructions are asserted equal on every call.
    """
    if k < 1 or m < 0:
        raise ValueError("need k >= 1 and m >= 0")
    total = MultiPoly(n_vars, {})
    for lam in enumerate_partitions(m, k - 1):
        total = total + base_polynomial("m", lam, n_vars)
    other = _g_from_generating_product(k, m, n_vars)
    if total != other:
        raise AssertionError(
            f"Petrie polynomial constructions disagree for k={k}, m={m}, n={n_vars}"
        )
    return total


def plethysm_poly(k: int, n: int, n_vars: int) -> MultiPoly:
    """h_n with every variable raised to the k-th power."""
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    h = base_polynomial("h", n, n_vars)
    return MultiPoly(n_vars, {tuple(k * x for x in e): c for e, c in h.terms.items()})


def extract_schur_expansion(p: MultiPoly) -> SchurExpansion:
    """Schur expansion of a symmetric homogeneous polynomial by repeatedly
    peeling the lexicographically greatest monomial's Schur term.

    Requires at least as many variables as the degree, so no partition of
    that degree is truncated away.
    """
    if not p.terms:
        return SchurExpansion({})
    if not p.is_homogeneous():
        raise ValueError("polynomial is not homogeneous")
    d = p.degree()
    if p.n < d:
        raise ValueError(f"need at least {d} variables, got {p.n}")
    if not p.is_symmetric():
        raise NotSymmetric("polynomial is not symmetric under adjacent swaps")
    residual = dict(p.terms)
    out = {}
    while residual:
        e = max(residual)
        if any(e[i] < e[i + 1] for i in range(len(e) - 1)):
            raise AssertionError(
                f"leading exponent {e} is not weakly decreasing; extraction cannot terminate"
            )
        lam = tuple(x for x in e if x)
        c = residual[e]
        out[lam] = c
        for ee, cc in _schur(lam, (), p.n).terms.items():
            v = residual.get(ee, 0) - c * cc
            if v:
                residual[ee] = v
            else:
                residual.pop(ee, None)
    return SchurExpansion(out)


@lru_cache(maxsize=None)
def _h_cached(r, n_vars):
    if r < 0:
        return MultiPoly(n_vars, {})
    if r == 0:
        return MultiPoly.constant(n_vars, 1)
    return base_polynomial("h", r, n_vars)


def jacobi_trudi_polynomial(shape: SkewShape, n_vars: int) -> MultiPoly:
    """The skew Schur polynomial as det( h_{lam_i - mu_j - i + j} ), expanded
    with exact polynomial arithmetic (minors memoised per column set)."""
    lam, mu = shape.outer, shape.inner
    if not contains(mu, lam):
        raise ValueError(f"{mu} does not fit inside {lam}")
    n = len(lam)
    if n == 0:
        return MultiPoly.constant(n_vars, 1)
    entries = [
        [
            _h_cached(lam[i] - (mu[j] if j < len(mu) else 0) - i + j, n_vars)
            for j in range(n)
        ]
        for i in range(n)
    ]
    memo: dict[int, MultiPoly] = {}

    def rec(mask: int) -> MultiPoly:
        if mask == 0:
            return MultiPoly.constant(n_vars, 1)
        cached = memo.get(mask)
        if cached is not None:
            return cached
        i = n - bin(mask).count("1")
        total = MultiPoly(n_vars, {})
        sign = 1
        for j in range(n):
            bit = 1 << j
            if mask & bit:
                entry = entries[i][j]
                if entry:
                    term = entry * rec(mask & ~bit)
                    total = total + term if sign > 0 else total - term
                sign = -sign
        memo[mask] = total
        return total

    return rec((1 << n) - 1)


def _poly_divide_exact(num, den):
    """Quotient of integer coefficient lists (ascending), exact division."""
    num = list(num)
    deg_d = len(den) - 1
    out = [0] * (len(num) - deg_d)
    for i in range(len(num) - 1, deg_d - 1, -1):
        q, r = divmod(num[i], den[deg_d])
        if r:
            raise ArithmeticError("division is not exact")
        out[i - deg_d] = q
        for t in range(deg_d + 1):
            num[i - deg_d + t] -= q * den[t]
    if any(num):
        raise ArithmeticError("nonzero remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> tuple[int, ...]:
    """Coefficients of the k-th cyclotomic polynomial, ascending degree,
    computed by exact division of z^k - 1 by the lower cyclotomics."""
    if k < 1:
        raise ValueError("k must be positive")
    num = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            num = _poly_divide_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


class CyclotomicInt:
    """Element of the integers with a primitive k-th root of unity adjoined,
    kept reduced modulo the k-th cyclotomic polynomial."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs=()):
        phi = cyclotomic_polynomial(k)
        deg = len(phi) - 1
        cs = list(coeffs)
        for i in range(len(cs) - 1, deg - 1, -1):
            q = cs[i]
            if q:
                for t in range(deg + 1):
                    cs[i - deg + t] -= q * phi[t]
        cs = cs[:deg] + [0] * (deg - len(cs))
        self.k = k
        self.coeffs = tuple(cs[:deg])

    @classmethod
    def omega_power(cls, k: int, t: int) -> "CyclotomicInt":
        """omega^t, t reduced mod k."""
        t %= k
        return cls(k, (0,) * t + (1,))

    @classmethod
    def integer(cls, k: int, c: int) -> "CyclotomicInt":
        return cls(k, (c,))

    def __add__(self, other):
        self._check(other)
        return CyclotomicInt(
            self.k, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check(other)
        return CyclotomicInt(
            self.k, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.k, tuple(c * other for c in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        conv = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        return CyclotomicInt(self.k, conv)

    __rmul__ = __mul__

    def _check(self, other):
        if not isinstance(other, CyclotomicInt) or other.k != self.k:
            raise ValueError("mixed cyclotomic orders")

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational_integer() and self.coeffs[0] == other
        return (
            isinstance(other, CyclotomicInt)
            and self.k == other.k
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.k, self.coeffs))

    def is_rational_integer(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> int:
        if not self.is_rational_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def __repr__(self):
        return f"CyclotomicInt(k={self.k}, coeffs={self.coeffs})"


def cyclotomic_eval_schur(k: int, shape: SkewShape) -> CyclotomicInt:
    """Evaluate the skew Schur polynomial in k-1 variables at x_i = omega^i,
    omega a primitive k-th root of unity, reduced to canonical form."""
    if k < 2:
        raise ValueError("k must be at least 2")
    poly = schur_polynomial(shape, k - 1)
    residues = [0] * k
    for e, c in poly.terms.items():
        residues[sum((i + 1) * x for i, x in enumerate(e)) % k] += c
    total = CyclotomicInt.integer(k, 0)
    for t, c in enumerate(residues):
        if c:
            total = total + c * CyclotomicInt.omega_power(k, t)
    return total
