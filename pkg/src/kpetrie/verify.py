"""Verification sweeps shared by the CLI `verify` command and the test
suite.  Each suite exhaustively checks one family of claims at the given
bounds and reports the failing cases instead of stopping at the first."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .oracle import (
    cyclotomic_eval_schur,
    extract_schur_expansion,
    g_polynomial,
    jacobi_trudi_polynomial,
    plethysm_poly,
    schur_polynomial,
)
from .partitions import (
    SkewShape,
    connected_components,
    enumerate_partitions,
    enumerate_subpartitions,
)
from .petrie import (
    SchurExpansion,
    closed_form,
    petrie_core,
    petrie_det,
    petrie_tiling,
    pieri_expand,
    plethystic_mn_expand,
    specialize_roots,
)
from .tilings import census, k_core, removable_ribbons, ribbon_decomposition

SUITES = ("pieri", "census", "core", "special", "mn", "closed", "oracle")


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(message)

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"suite {self.name}: {status}, {self.cases} cases"


def _skew_pairs(max_size):
    for size in range(max_size + 1):
        for lam in enumerate_partitions(size):
            for mu in enumerate_subpartitions(lam):
                yield lam, mu


def suite_methods(max_size=10, ks=(2, 3, 4, 5)) -> SuiteResult:
    """Pet by determinant vs tiling for all nested pairs; determinant vs
    core route when mu is empty; every value in {-1, 0, 1}."""
    res = SuiteResult("methods")
    for lam, mu in _skew_pairs(max_size):
        for k in ks:
            d = petrie_det(k, lam, mu)
            t = petrie_tiling(k, lam, mu)
            res.check(d == t, f"det/tiling disagree: k={k} lam={lam} mu={mu}: {d} vs {t}")
            res.check(d in (-1, 0, 1), f"value out of range: k={k} lam={lam} mu={mu}: {d}")
            if not mu:
                c = petrie_core(k, lam)
                res.check(d == c, f"det/core disagree: k={k} lam={lam}: {d} vs {c}")
    return res


def suite_pieri(max_total=9, max_k=5, max_mu_size=4) -> SuiteResult:
    """pieri_expand (both routes) against the polynomial oracle's Schur
    extraction of g(k, m) x s_mu."""
    res = SuiteResult("pieri")
    for mu_size in range(max_mu_size + 1):
        for mu in enumerate_partitions(mu_size):
            for m in range(max_total - mu_size + 1):
                n_vars = max(1, m + mu_size)
                s_mu = schur_polynomial(SkewShape(mu, ()), n_vars)
                for k in range(1, max_k + 1):
                    expected = extract_schur_expansion(g_polynomial(k, m, n_vars) * s_mu)
                    for method in ("det", "tiling"):
                        got = pieri_expand(k, m, mu, method=method)
                        res.check(
                            got == expected,
                            f"pieri({method}) k={k} m={m} mu={mu}: {got} != {expected}",
                        )
    return res


def _census_laws(res, k, lam, mu):
    shape = SkewShape(lam, mu)
    for n, cc in census(k, shape).items():
        if cc.total > 1:
            res.check(
                cc.odd == cc.even,
                f"census k={k} {lam}/{mu} n={n}: odd {cc.odd} != even {cc.even}",
            )
            res.check(
                cc.total & (cc.total - 1) == 0,
                f"census k={k} {lam}/{mu} n={n}: total {cc.total} not a power of 2",
            )


def suite_census(max_size=10, ks=(2, 3, 4)) -> SuiteResult:
    """Odd = even and power-of-2 totals whenever a connected shape has more
    than one proper tiling at some n; plus the pinned three-tiling instance
    on a disconnected staircase."""
    res = SuiteResult("census")
    for lam, mu in _skew_pairs(max_size):
        if len(connected_components(SkewShape(lam, mu))) != 1:
            continue
        for k in ks:
            _census_laws(res, k, lam, mu)
    pinned = census(2, SkewShape((9, 8, 6, 5, 3, 2), (7, 6, 4, 3, 1)))
    res.check(
        pinned.get(2, (0,))[0] == 3,
        f"disconnected staircase: expected 3 tilings at n=2, got {pinned.get(2)}",
    )
    return res


def _is_ribbon_cells(cells) -> bool:
    cs = set(cells)
    if not cs:
        return False
    for i, j in cs:
        if (i + 1, j) in cs and (i, j + 1) in cs and (i + 1, j + 1) in cs:
            return False
    seen = set()
    stack = [next(iter(cs))]
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        i, j = c
        for d in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if d in cs:
                stack.append(d)
    return seen == cs


def _geometric_removals(lam, k):
    """k-ribbon removals found by raw cell geometry, not beta numbers."""
    out = []
    for mu in enumerate_subpartitions(lam):
        if sum(lam) - sum(mu) == k and _is_ribbon_cells(SkewShape(lam, mu).cells()):
            out.append(mu)
    return out


@lru_cache(maxsize=None)
def _reachable_cores(lam, k):
    opts = _geometric_removals(lam, k)
    if not opts:
        return frozenset([lam])
    out = set()
    for mu in opts:
        out |= _reachable_cores(mu, k)
    return frozenset(out)


def _chains(lam, k, cap=6):
    out = []

    def rec(cur, acc):
        if len(out) >= cap:
            return
        opts = removable_ribbons(cur, k)
        if not opts:
            out.append(acc)
            return
        for mu in opts:
            rec(mu, acc + [(cur, mu)])

    rec(lam, [])
    return out


def _chain_sign(chain) -> int:
    s = 1
    for outer, inner in chain:
        rows = sum(
            1
            for i in range(len(outer))
            if outer[i] > (inner[i] if i < len(inner) else 0)
        )
        if rows % 2:
            s = -s
    return s


def suite_core_structure(max_size=10, max_k=5) -> SuiteResult:
    """Empty-mu structure: per-n proper-tiling counts stay in {0, 1}, and for
    lam_1 < k a tiling exists iff the k-core has at most one row."""
    res = SuiteResult("core-structure")
    for size in range(max_size + 1):
        for lam in enumerate_partitions(size):
            for k in range(1, max_k + 1):
                cen = census(k, SkewShape(lam, ()))
                res.check(
                    all(cc.total in (0, 1) for cc in cen.values()),
                    f"per-n tiling count above 1: k={k} lam={lam}: {cen}",
                )
                if not lam or lam[0] < k:
                    exists = any(cc.total for cc in cen.values())
                    rowlike = len(k_core(lam, k)) <= 1
                    res.check(
                        exists == rowlike,
                        f"tiling existence vs core rows: k={k} lam={lam}",
                    )
    return res


def suite_core_orders(max_size=12, max_k=5) -> SuiteResult:
    """Abacus k-core against exhaustive geometric removal under every order,
    and sign invariance across distinct decomposition chains."""
    res = SuiteResult("core-orders")
    for size in range(max_size + 1):
        for lam in enumerate_partitions(size):
            for k in range(1, max_k + 1):
                res.check(
                    set(_geometric_removals(lam, k)) == set(removable_ribbons(lam, k)),
                    f"removable-ribbon sets differ: k={k} lam={lam}",
                )
                res.check(
                    _reachable_cores(lam, k) == frozenset([k_core(lam, k)]),
                    f"removal orders disagree on the core: k={k} lam={lam}",
                )
                chains = _chains(lam, k)
                signs = {_chain_sign(c) for c in chains}
                res.check(len(signs) == 1, f"chain signs differ: k={k} lam={lam}")
                dec = [(s.outer, s.inner) for s in ribbon_decomposition(lam, k)]
                res.check(
                    _chain_sign(dec) in signs,
                    f"decomposition sign off-chain: k={k} lam={lam}",
                )
    return res


def suite_special(max_size=8, ks=(2, 3, 4, 6)) -> SuiteResult:
    """specialize_roots against canonical cyclotomic evaluation for every
    nested pair; equality forces the oracle value to be a rational integer."""
    res = SuiteResult("special")
    for lam, mu in _skew_pairs(max_size):
        shape = SkewShape(lam, mu)
        for k in ks:
            s = specialize_roots(k, shape)
            o = cyclotomic_eval_schur(k, shape)
            res.check(
                o == s, f"specialization k={k} {lam}/{mu}: tiling {s}, oracle {o!r}"
            )
    return res


def suite_mn(max_total=9, max_k=9) -> SuiteResult:
    """plethystic_mn_expand against the oracle extraction of the plethysm
    polynomial times s_nu, over every k*n + |nu| <= max_total."""
    res = SuiteResult("mn")
    for nu_size in range(max_total + 1):
        for nu in enumerate_partitions(nu_size):
            res.check(
                plethystic_mn_expand(2, 0, nu) == SchurExpansion({nu: 1}),
                f"mn n=0 nu={nu}",
            )
            for k in range(1, max_k + 1):
                for n in range(1, max_total + 1):
                    total = k * n + nu_size
                    if total > max_total:
                        break
                    n_vars = total
                    expected = extract_schur_expansion(
                        plethysm_poly(k, n, n_vars)
                        * schur_polynomial(SkewShape(nu, ()), n_vars)
                    )
                    got = plethystic_mn_expand(k, n, nu)
                    res.check(
                        got == expected,
                        f"mn k={k} n={n} nu={nu}: {got} != {expected}",
                    )
    return res


def suite_closed(max_k_plain=6, max_k_hr=5, max_r=4) -> SuiteResult:
    """Closed-form expansions against pieri_expand, including the r=0
    collapse of the h_r variants onto the bare ones."""
    res = SuiteResult("closed")
    for k in range(2, max_k_plain + 1):
        res.check(
            closed_form(k, "G_kk") == pieri_expand(k, k),
            f"closed G({k},{k})",
        )
        res.check(
            closed_form(k, "G_k_2km1") == pieri_expand(k, 2 * k - 1),
            f"closed G({k},{2 * k - 1})",
        )
    for k in range(2, max_k_hr + 1):
        for r in range(max_r + 1):
            mu = (r,) if r else ()
            res.check(
                closed_form(k, "G_kk_hr", r) == pieri_expand(k, k, mu),
                f"closed G({k},{k})h_{r}",
            )
            res.check(
                closed_form(k, "G_k2km1_hr", r) == pieri_expand(k, 2 * k - 1, mu),
                f"closed G({k},{2 * k - 1})h_{r}",
            )
    res.check(
        closed_form(4, "G_kk_hr", 0) == closed_form(4, "G_kk"),
        "G(k,k)h_0 collapse",
    )
    return res


def suite_oracle(max_size=8, max_k=5) -> SuiteResult:
    """Oracle self-consistency: tableau Schur polynomials against the
    Jacobi-Trudi determinant, and the two Petrie polynomial constructions
    (asserted inside g_polynomial) at every swept size."""
    res = SuiteResult("oracle")
    for size in range(max_size + 1):
        for lam in enumerate_partitions(size):
            shape = SkewShape(lam, ())
            for n_vars in (max(1, size), size + 1):
                res.check(
                    jacobi_trudi_polynomial(shape, n_vars)
                    == schur_polynomial(shape, n_vars),
                    f"Jacobi-Trudi mismatch: lam={lam} n_vars={n_vars}",
                )
    for k in range(1, max_k + 1):
        for m in range(max_size + 1):
            try:
                g_polynomial(k, m, max(1, m))
                ok = True
            except AssertionError:
                ok = False
            res.check(ok, f"g constructions disagree: k={k} m={m}")
    return res


def run_suites(names, max_size=9, max_k=5) -> list[SuiteResult]:
    """Run the named suites with bounds derived from the two CLI knobs."""
    results = []
    for name in names:
        if name == "pieri":
            results.append(suite_methods(max_size=max_size, ks=tuple(range(2, max_k + 1))))
            results.append(suite_pieri(max_total=max_size, max_k=max_k))
        elif name == "census":
            results.append(suite_census(max_size=max_size, ks=tuple(range(2, min(max_k, 4) + 1))))
        elif name == "core":
            results.append(suite_core_structure(max_size=max_size, max_k=max_k))
            results.append(suite_core_orders(max_size=max_size + 2, max_k=max_k))
        elif name == "special":
            results.append(
                suite_special(
                    max_size=min(max_size, 8), ks=tuple(k for k in (2, 3, 4, 6) if k <= max(max_k, 6))
                )
            )
        elif name == "mn":
            results.append(suite_mn(max_total=max_size))
        elif name == "closed":
            results.append(suite_closed(max_k_plain=max_k + 1, max_k_hr=max_k))
        elif name == "oracle":
            results.append(suite_oracle(max_size=min(max_size, 8), max_k=max_k))
        else:
            raise ValueError(f"unknown suite {name!r}")
    return results
