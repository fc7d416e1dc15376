"""k-ribbon machinery: proper tilings and their census, dual tilings,
k-cores, and ribbon decompositions.

A tiling ``(nu, ribbons)`` of a skew shape lam/mu is *proper* when

  (i)  nu/mu is a horizontal strip, and
  (ii) the ribbons tile lam/nu with every ribbon's starting box at the
       leftmost box of a row of lam/nu.

The *dual* notion asks nu/mu to be a vertical strip and every ribbon to end
at the topmost box of a column; it is the conjugate of the first.  A proper
tiling is *odd* when the total row count of its ribbons is odd.
"""

from __future__ import annotations

from typing import NamedTuple

from .partitions import (
    Cell,
    Partition,
    SkewShape,
    conjugate,
    contains,
    content,
    horizontal_strip_extensions,
)


class MultipleTilingsForNu(Exception):
    """A fixed nu admitted more than one row-anchored ribbon tiling.

    For fixed nu the tiling satisfying condition (ii) is unique whenever it
    exists; seeing two of them means a bug (or a genuine edge case worth a
    report), so it is raised loudly instead of being absorbed.
    """


class NoDecomposition(Exception):
    """Ribbon removal failed to reach the k-core (internal assertion)."""


class Ribbon(NamedTuple):
    """A ribbon as its cell path from the southwest end to the northeast end.

    Consecutive path cells share an edge and step up or right, so contents
    increase by one along the path; rows() + (columns - 1) = size.
    """

    cells: tuple[Cell, ...]

    def size(self) -> int:
        return len(self.cells)

    def rows(self) -> int:
        return len({i for i, _ in self.cells})

    def columns(self) -> int:
        return len({j for _, j in self.cells})

    def height(self) -> int:
        return self.rows() - 1

    def start(self) -> Cell:
        return self.cells[0]

    def end(self) -> Cell:
        return self.cells[-1]


def ribbon_from_cells(cells) -> Ribbon:
    """Order a ribbon's cell set along its path and validate it."""
    cs = sorted(cells, key=lambda c: (content(c), c[0]))
    if not cs:
        raise ValueError("a ribbon has at least one cell")
    for (i1, j1), (i2, j2) in zip(cs, cs[1:]):
        if not ((i2 == i1 and j2 == j1 + 1) or (i2 == i1 - 1 and j2 == j1)):
            raise ValueError(f"cells {cells} do not form a ribbon")
    return Ribbon(tuple(cs))


class ProperTiling(NamedTuple):
    """An intermediate partition plus ribbons, listed north to south."""

    nu: Partition
    ribbons: tuple[Ribbon, ...]

    def ribbon_rows(self) -> int:
        return sum(r.rows() for r in self.ribbons)

    def is_odd(self) -> bool:
        return self.ribbon_rows() % 2 == 1

    def row_sign(self) -> int:
        """Product of (-1)^rows over the ribbons."""
        return -1 if self.is_odd() else 1


class CensusCount(NamedTuple):
    total: int
    odd: int
    even: int


# census() result: by-n tallies of proper tilings
Census = dict[int, CensusCount]


def _anchored_ribbon_options(gamma, nu, r, k):
    """Ways to peel one k-ribbon off the partition gamma, starting at the
    leftmost box of its southmost row above nu, leaving a partition >= nu.

    gamma and nu are lists of equal length; r is the 0-based southmost row
    with gamma[r] > nu[r].  Yields (cells, new_gamma) pairs.
    """
    paths = []
    start = (r, nu[r] + 1)

    def walk(i, j, cells):
        if len(cells) == k:
            paths.append(cells)
            return
        if j + 1 <= gamma[i]:
            walk(i, j + 1, cells + [(i, j + 1)])
        if i > 0 and nu[i - 1] < j <= gamma[i - 1]:
            walk(i - 1, j, cells + [(i - 1, j)])

    walk(r, nu[r] + 1, [start])
    options = []
    for cells in paths:
        lo: dict[int, int] = {}
        hi: dict[int, int] = {}
        for i, j in cells:
            lo[i] = min(lo.get(i, j), j)
            hi[i] = max(hi.get(i, j), j)
        # removal must leave a left-justified shape: every touched row's
        # segment has to run to the row's right edge
        if any(hi[i] != gamma[i] for i in lo):
            continue
        new_gamma = list(gamma)
        for i, c in lo.items():
            new_gamma[i] = c - 1
        if any(new_gamma[t] < new_gamma[t + 1] for t in range(len(new_gamma) - 1)):
            continue
        options.append(([(i + 1, j) for i, j in cells], tuple(new_gamma)))
    return options


def condition_ii_tilings(k: int, lam, nu) -> list[list[Ribbon]]:
    """All k-ribbon tilings of lam/nu in which every ribbon starts at the
    leftmost box of a row of lam/nu, listed north to south.

    Found by peeling southmost ribbons first: the leftmost box of the
    southmost nonempty row must start a ribbon (no up-right path reaches it
    otherwise), and removing that ribbon must leave a partition shape.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not contains(nu, lam):
        raise ValueError(f"{nu} does not fit inside {lam}")
    if (sum(lam) - sum(nu)) % k:
        return []
    rows = len(lam)
    nu_p = list(nu) + [0] * (rows - len(nu))
    results: list[list[Ribbon]] = []

    def peel(gamma, acc):
        r = -1
        for i in range(rows - 1, -1, -1):
            if gamma[i] > nu_p[i]:
                r = i
                break
        if r < 0:
            results.append([Ribbon(tuple(c)) for c in reversed(acc)])
            return
        for cells, new_gamma in _anchored_ribbon_options(gamma, nu_p, r, k):
            peel(new_gamma, acc + [cells])

    peel(tuple(lam), [])
    return results


def enumerate_proper_tilings(k: int, shape: SkewShape) -> list[ProperTiling]:
    """Every proper tiling of the shape, exactly once, ordered by |nu/mu|.

    Raises MultipleTilingsForNu if some fixed nu admits more than one
    row-anchored tiling.
    """
    lam, mu = shape.outer, shape.inner
    total = shape.size()
    out = []
    for n in range(total + 1):
        if (total - n) % k:
            continue
        for nu in horizontal_strip_extensions(mu, lam, n):
            tilings = condition_ii_tilings(k, lam, nu)
            if len(tilings) > 1:
                raise MultipleTilingsForNu(
                    f"nu={nu} admits {len(tilings)} tilings of {lam}/{mu} with k={k}"
                )
            if tilings:
                out.append(ProperTiling(nu, tuple(tilings[0])))
    return out


def census(k: int, shape: SkewShape) -> dict[int, CensusCount]:
    """Tally proper tilings by n = |nu/mu| and by parity of the total ribbon
    row count.  For fixed n every tiling has (|lam/mu| - n) / k ribbons."""
    mu_size = sum(shape.inner)
    odd: dict[int, int] = {}
    even: dict[int, int] = {}
    for t in enumerate_proper_tilings(k, shape):
        n = sum(t.nu) - mu_size
        if t.is_odd():
            odd[n] = odd.get(n, 0) + 1
        else:
            even[n] = even.get(n, 0) + 1
    return {
        n: CensusCount(odd.get(n, 0) + even.get(n, 0), odd.get(n, 0), even.get(n, 0))
        for n in sorted(odd.keys() | even.keys())
    }


def _beta_numbers(lam) -> list[int]:
    """First-column hook lengths: lam_i + (rows - i), strictly decreasing."""
    rows = len(lam)
    return [lam[i] + (rows - 1 - i) for i in range(rows)]


def _partition_from_betas(betas, rows) -> Partition:
    bs = sorted(betas, reverse=True)
    return tuple(p for p in (bs[i] - (rows - 1 - i) for i in range(rows)) if p > 0)


def k_core(lam, k: int) -> Partition:
    """The k-core of lam, independent of the order ribbons are removed.

    Beta numbers are split into residue classes mod k (the runners of an
    abacus) and slid down as far as possible within each class.
    """
    if k < 1:
        raise ValueError("k must be positive")
    rows = len(lam)
    if rows == 0:
        return ()
    runners: list[int] = [0] * k
    for b in _beta_numbers(lam):
        runners[b % k] += 1
    new = []
    for r, count in enumerate(runners):
        new.extend(r + k * t for t in range(count))
    return _partition_from_betas(new, rows)


def removable_ribbons(lam, k: int) -> list[Partition]:
    """Partitions obtained from lam by removing a single k-ribbon.

    Each corresponds to a beta-number move b -> b - k onto a free spot.
    """
    rows = len(lam)
    if rows == 0:
        return []
    betas = _beta_numbers(lam)
    bset = set(betas)
    out = []
    for b in betas:
        if b >= k and (b - k) not in bset:
            out.append(_partition_from_betas((bset - {b}) | {b - k}, rows))
    return out


def _start_cell(outer, inner) -> Cell:
    """Southwest cell of the skew shape outer/inner (assumed nonempty)."""
    for i in range(len(outer) - 1, -1, -1):
        inn = inner[i] if i < len(inner) else 0
        if outer[i] > inn:
            return (i + 1, inn + 1)
    raise ValueError("empty shape has no start cell")


def ribbon_decomposition(lam, k: int) -> list[SkewShape]:
    """One chain of k-ribbon additions from the k-core of lam up to lam.

    Returned bottom-up: element j is the skew step gamma_j / gamma_{j-1}.
    At each removal step the ribbon whose starting cell is northmost is
    taken; the resulting sign product does not depend on this choice.
    """
    steps = []
    cur = tuple(lam)
    while True:
        options = removable_ribbons(cur, k)
        if not options:
            break
        mu = min(options, key=lambda m: _start_cell(cur, m))
        step = SkewShape(cur, mu)
        ribbon_from_cells(step.cells())  # loud if the step is not a ribbon
        steps.append(step)
        cur = mu
    if cur != k_core(lam, k):
        raise NoDecomposition(f"removal from {lam} stalled at {cur}")
    steps.reverse()
    return steps


def _conjugate_ribbon(rib: Ribbon) -> Ribbon:
    return ribbon_from_cells([(j, i) for i, j in rib.cells])


def enumerate_proper_dual_tilings(k: int, shape: SkewShape) -> list[ProperTiling]:
    """Every proper dual tiling (nu/mu a vertical strip, ribbons ending at
    topmost boxes of columns), computed on the conjugate shape and expressed
    back in the unconjugated coordinates."""
    out = []
    for t in enumerate_proper_tilings(k, shape.conjugate()):
        out.append(
            ProperTiling(
                conjugate(t.nu), tuple(_conjugate_ribbon(r) for r in t.ribbons)
            )
        )
    return out


def horizontal_tileable_sign(k: int, lam, nu) -> int | None:
    """Sign of the unique k-ribbon tiling of lam/nu whose ribbons all end at
    topmost boxes of columns: the product of (-1)^height over its ribbons.
    None when no such tiling exists."""
    tilings = condition_ii_tilings(k, conjugate(lam), conjugate(nu))
    if not tilings:
        return None
    if len(tilings) > 1:
        raise MultipleTilingsForNu(
            f"nu={nu} admits {len(tilings)} dual tilings of {lam} with k={k}"
        )
    sign = 1
    for rib in tilings[0]:
        # height in the unconjugated coordinates = columns(rib) - 1
        if (rib.columns() - 1) % 2:
            sign = -sign
    return sign


_RIBBON_LABELS = "123456789abcdefghijklmnopqrstuvwxyz"


def render_tiling(shape: SkewShape, tiling: ProperTiling) -> str:
    """ASCII grid: '.' for inner cells, 'x' for strip cells, a label cycling
    through digits and letters per ribbon; row 1 printed first."""
    lam, mu = shape.outer, shape.inner
    nu = tiling.nu
    label = {}
    for idx, rib in enumerate(tiling.ribbons):
        ch = _RIBBON_LABELS[idx % len(_RIBBON_LABELS)]
        for c in rib.cells:
            label[c] = ch
    lines = []
    for i in range(1, len(lam) + 1):
        mu_i = mu[i - 1] if i - 1 < len(mu) else 0
        nu_i = nu[i - 1] if i - 1 < len(nu) else 0
        row = []
        for j in range(1, lam[i - 1] + 1):
            if j <= mu_i:
                row.append(".")
            elif j <= nu_i:
                row.append("x")
            else:
                row.append(label[(i, j)])
        lines.append("".join(row))
    return "\n".join(lines)


def render_shape(shape: SkewShape) -> str:
    """ASCII diagram of a skew shape: '.' for inner cells, '#' for cells."""
    lam, mu = shape.outer, shape.inner
    lines = []
    for i in range(1, len(lam) + 1):
        mu_i = mu[i - 1] if i - 1 < len(mu) else 0
        lines.append("." * mu_i + "#" * (lam[i - 1] - mu_i))
    return "\n".join(lines)
