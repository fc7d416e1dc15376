"""k-Petrie numbers by three routes, and Schur-basis expansions.

The k-Petrie number Pet_k(lam, mu) is the coefficient of s_lam in the
product of the degree-(|lam|-|mu|) Petrie symmetric function with s_mu.
It always lies in {-1, 0, 1} and is computed here as

  * an exact 0/1-matrix determinant,
  * a sign product over the unique proper k-ribbon tiling of lam/mu,
  * (for mu empty) a sign product over a k-ribbon decomposition down to
    the k-core.
"""

from __future__ import annotations

from .partitions import (
    Partition,
    SkewShape,
    conjugate,
    connected_components,
    contains,
    enumerate_partitions,
)
from .tilings import (
    enumerate_proper_dual_tilings,
    enumerate_proper_tilings,
    horizontal_tileable_sign,
    k_core,
    ribbon_decomposition,
)

CLOSED_FORMS = ("G_kk", "G_k_2km1", "G_kk_hr", "G_k2km1_hr")


class SchurExpansion:
    """Integer combination of Schur functions, keyed by partition.

    Zero coefficients are dropped; all partitions in one expansion must
    have equal size.  Canonical order is decreasing lexicographic.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        items = terms.items() if hasattr(terms, "items") else terms
        clean: dict[Partition, int] = {}
        for lam, c in items:
            if c:
                clean[tuple(lam)] = clean.get(tuple(lam), 0) + c
        clean = {lam: c for lam, c in clean.items() if c}
        if len({sum(lam) for lam in clean}) > 1:
            raise ValueError("mixed degrees in a Schur expansion")
        self.terms = clean

    def items(self):
        """Terms in canonical (decreasing lexicographic) order."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def coefficient(self, lam) -> int:
        return self.terms.get(tuple(lam), 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, SchurExpansion) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        return " ".join(
            f"{c:+d}*s[{','.join(str(x) for x in lam)}]" for lam, c in self.items()
        )

    def __repr__(self):
        return f"SchurExpansion({dict(self.items())!r})"

    def to_terms(self) -> list[dict]:
        """JSON-ready term list in canonical order."""
        return [{"lambda": list(lam), "coeff": c} for lam, c in self.items()]

    @classmethod
    def from_terms(cls, data) -> "SchurExpansion":
        return cls({tuple(t["lambda"]): t["coeff"] for t in data})


def _det(mat) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    n = len(mat)
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for r in range(i + 1, n):
                if a[r][i]:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[i][i]
        for r in range(i + 1, n):
            head = a[r][i]
            row_r = a[r]
            row_i = a[i]
            for c in range(i + 1, n):
                row_r[c] = (row_r[c] * pivot - head * row_i[c]) // prev
            row_r[i] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def petrie_det(k: int, lam, mu=()) -> int:
    """Pet_k(lam, mu) as det[ 0 <= lam_i - mu_j - i + j < k ] over i, j up
    to len(lam).  Zero when mu does not fit inside lam."""
    if k < 1:
        raise ValueError("k must be positive")
    if not contains(mu, lam):
        return 0
    n = len(lam)
    if n == 0:
        return 1
    mat = []
    for i in range(n):
        li = lam[i] - i
        row = []
        for j in range(n):
            a = li - (mu[j] if j < len(mu) else 0) + j
            row.append(1 if 0 <= a < k else 0)
        mat.append(row)
    return _det(mat)


def petrie_tiling(k: int, lam, mu=()) -> int:
    """Pet_k(lam, mu) from proper tilings.

    Zero when some row of lam/mu has k or more cells, or when some
    connected component does not have exactly one proper tiling; otherwise
    the product over components of (-1)^(total ribbon rows) of the unique
    tiling.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not contains(mu, lam):
        return 0
    for i, li in enumerate(lam):
        if li - (mu[i] if i < len(mu) else 0) >= k:
            return 0
    sign = 1
    for comp in connected_components(SkewShape(tuple(lam), tuple(mu))):
        tilings = enumerate_proper_tilings(k, comp)
        if len(tilings) != 1:
            return 0
        if tilings[0].is_odd():
            sign = -sign
    return sign


def petrie_core(k: int, lam) -> int:
    """Pet_k(lam, empty) from the k-core of lam.

    Zero unless lam_1 < k and the k-core has at most one row; one when lam
    is its own k-core; otherwise the product of (-1)^rows over any chain of
    k-ribbon removals down to the core.
    """
    if k < 1:
        raise ValueError("k must be positive")
    lam = tuple(lam)
    if lam and lam[0] >= k:
        return 0
    core = k_core(lam, k)
    if len(core) > 1:
        return 0
    if core == lam:
        return 1
    sign = 1
    for step in ribbon_decomposition(lam, k):
        rows = sum(
            1
            for i in range(len(step.outer))
            if step.outer[i] > (step.inner[i] if i < len(step.inner) else 0)
        )
        if rows % 2:
            sign = -sign
    return sign


def _row_bounded_extensions(mu, m, k, i=0, prev=None):
    """All lam ⊇ mu with |lam/mu| = m and every row of lam/mu shorter than k,
    emitted as part suffixes from row i on, in decreasing lex order."""
    if prev is None:
        prev = (mu[0] if mu else 0) + m
    if m == 0:
        yield tuple(mu[i:])
        return
    lo = mu[i] if i < len(mu) else 0
    hi = min(prev, lo + k - 1, lo + m)
    floor = lo if i < len(mu) else 1
    for v in range(hi, floor - 1, -1):
        for rest in _row_bounded_extensions(mu, m - (v - lo), k, i + 1, v):
            yield (v,) + rest


def pieri_expand(k: int, m: int, mu=(), method: str = "det") -> SchurExpansion:
    """Schur expansion of the degree-m Petrie symmetric function times s_mu.

    Candidate partitions add at most k-1 boxes per row to mu; `method`
    picks the Pet evaluation route: "det", "tiling", or "core" (the latter
    only for empty mu).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if m < 0:
        raise ValueError("m must be nonnegative")
    mu = tuple(mu)
    if method == "det":
        value = lambda lam: petrie_det(k, lam, mu)
    elif method == "tiling":
        value = lambda lam: petrie_tiling(k, lam, mu)
    elif method == "core":
        if mu:
            raise ValueError('method "core" needs an empty mu')
        value = lambda lam: petrie_core(k, lam)
    else:
        raise ValueError(f"unknown method {method!r}")
    terms = {}
    for lam in _row_bounded_extensions(mu, m, k):
        v = value(lam)
        if v:
            terms[lam] = v
    return SchurExpansion(terms)


def plethystic_mn_expand(k: int, n: int, nu=()) -> SchurExpansion:
    """Schur expansion of (p_k composed with h_n) times s_nu.

    The coefficient of s_lam is the sign of the unique k-ribbon tiling of
    lam/nu with all ribbons ending at topmost boxes of columns, when that
    tiling exists.
    """
    if k < 1 or n < 0:
        raise ValueError("need k >= 1 and n >= 0")
    nu = tuple(nu)
    total = k * n + sum(nu)
    terms = {}
    for lam in enumerate_partitions(total):
        if not contains(nu, lam):
            continue
        s = horizontal_tileable_sign(k, lam, nu)
        if s is not None:
            terms[lam] = s
    return SchurExpansion(terms)


def specialize_roots(k: int, shape: SkewShape) -> int:
    """The skew Schur polynomial evaluated at omega, omega^2, ..., omega^(k-1)
    for omega a primitive k-th root of unity; always -1, 0 or 1.

    Zero when some column of the shape has k or more cells or when the
    shape does not have exactly one proper dual tiling; otherwise
    (-1)^|nu/mu| times the product of (-1)^height over that tiling's
    ribbons.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    lam, mu = shape.outer, shape.inner
    clam, cmu = conjugate(lam), conjugate(mu)
    for j, col in enumerate(clam):
        if col - (cmu[j] if j < len(cmu) else 0) >= k:
            return 0
    duals = enumerate_proper_dual_tilings(k, shape)
    if len(duals) != 1:
        return 0
    tiling = duals[0]
    sign = -1 if (sum(tiling.nu) - sum(mu)) % 2 else 1
    for rib in tiling.ribbons:
        if rib.height() % 2:
            sign = -sign
    return sign


def closed_form(k: int, which: str, r: int = 0) -> SchurExpansion:
    """Closed-form Schur expansions of the degree-k and degree-(2k-1)
    Petrie functions, bare or multiplied by h_r.

    Terms whose shape would give the skew over (r) a row of k or more
    cells are excluded (their coefficients vanish), which caps the
    single-sum indices at min(r, k-1).
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if r < 0:
        raise ValueError("r must be nonnegative")
    terms: dict[Partition, int] = {}

    def add(lam, c):
        terms[lam] = terms.get(lam, 0) + c

    if which == "G_kk":
        for i in range(k - 1):
            add((k - 1 - i,) + (1,) * (i + 1), (-1) ** i)
    elif which == "G_k_2km1":
        for i in range(k - 1):
            add((k - 1, k - 1 - i) + (1,) * (i + 1), (-1) ** i)
    elif which == "G_kk_hr":
        for i in range(1, min(r, k - 1) + 1):
            add((r + k - i, i), 1)
        for i in range(0, k - r - 1):
            add((k - i - 1, r + 1) + (1,) * i, (-1) ** i)
        for i in range(1, min(r, k - 1) + 1):
            add((r, i) + (1,) * (k - i), (-1) ** (k - i + 1))
    elif which == "G_k2km1_hr":
        for i in range(1, min(k - 1, r) + 1):
            for j in range(1, i + 1):
                add((r + k - 1 - i, i, j) + (1,) * (k - j), (-1) ** (k - j + 1))
        for i in range(0, min(k - 2, r) + 1):
            for j in range(0, k - 1 - i):
                add((r + k - 1 - i, k - 1 - j, i + 1) + (1,) * j, (-1) ** j)
    else:
        raise ValueError(f"unknown closed form {which!r}; expected one of {CLOSED_FORMS}")
    return SchurExpansion(terms)
