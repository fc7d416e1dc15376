"""Partitions, skew shapes, strips, and enumeration primitives.

Partitions are plain tuples of weakly decreasing positive integers; the
empty partition is ``()``.  Missing parts read as 0 everywhere.  Cells are
``(row, col)`` pairs, 1-based, with row 1 on top.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

Partition = tuple[int, ...]
Cell = tuple[int, int]


def is_partition(parts) -> bool:
    """True iff parts is a weakly decreasing sequence of positive integers."""
    parts = tuple(parts)
    if any(not isinstance(x, int) or x <= 0 for x in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def parse_partition(text: str) -> Partition:
    """Parse ``"5,3,1"`` into ``(5, 3, 1)``; ``""`` or ``"-"`` is empty."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"bad partition {text!r}: entries must be integers") from None
    if not is_partition(parts):
        raise ValueError(
            f"bad partition {text!r}: entries must be positive and weakly decreasing"
        )
    return parts


def format_partition(p) -> str:
    return ",".join(str(x) for x in p) if p else "-"


def part_at(p, i: int) -> int:
    """1-based part accessor; out-of-range parts are 0."""
    return p[i - 1] if 0 < i <= len(p) else 0


def content(cell: Cell) -> int:
    """Content col - row of a cell; constant along diagonals."""
    return cell[1] - cell[0]


def conjugate(p) -> Partition:
    """Transpose of the diagram: entry j counts the parts of size >= j."""
    if not p:
        return ()
    cols = [0] * p[0]
    for x in p:
        for j in range(x):
            cols[j] += 1
    return tuple(cols)


def contains(inner, outer) -> bool:
    """True iff inner_i <= outer_i for all i, missing parts read as 0."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


class SkewShape(NamedTuple):
    """Nested partition pair outer/inner; its cells are the set difference."""

    outer: Partition
    inner: Partition

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self) -> tuple[Cell, ...]:
        """All cells (i, j) with inner_i < j <= outer_i, row-major."""
        inner = self.inner
        out = []
        for i, row in enumerate(self.outer, start=1):
            lo = inner[i - 1] if i - 1 < len(inner) else 0
            out.extend((i, j) for j in range(lo + 1, row + 1))
        return tuple(out)

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))


def skew(outer, inner=()) -> SkewShape:
    """Validating SkewShape constructor."""
    outer, inner = tuple(outer), tuple(inner)
    if not (is_partition(outer) and is_partition(inner)):
        raise ValueError(f"not partitions: {outer}, {inner}")
    if not contains(inner, outer):
        raise ValueError(f"{inner} does not fit inside {outer}")
    return SkewShape(outer, inner)


def is_horizontal_strip(s: SkewShape) -> bool:
    """True iff every column of the shape holds at most one cell."""
    outer, inner = s
    for i in range(1, len(outer)):
        if outer[i] > (inner[i - 1] if i - 1 < len(inner) else 0):
            return False
    return True


def is_vertical_strip(s: SkewShape) -> bool:
    """True iff every row holds at most one cell; the conjugate notion."""
    outer, inner = s
    return all(
        outer[i] - (inner[i] if i < len(inner) else 0) <= 1 for i in range(len(outer))
    )


def connected_components(s: SkewShape) -> list[SkewShape]:
    """Edgewise-connected pieces of a skew shape, top to bottom.

    Rows r and r+1 touch iff inner_r < outer_{r+1}; each maximal linked run
    of nonempty rows is returned as its own nested pair (rows renumbered
    from 1, columns kept as in the ambient shape).
    """
    outer, inner = s
    runs: list[tuple[int, int]] = []
    start = None
    for i in range(len(outer)):
        inn = inner[i] if i < len(inner) else 0
        if outer[i] == inn:
            if start is not None:
                runs.append((start, i))
                start = None
            continue
        if start is None:
            start = i
        else:
            prev_inner = inner[i - 1] if i - 1 < len(inner) else 0
            if prev_inner >= outer[i]:
                runs.append((start, i))
                start = i
    if start is not None:
        runs.append((start, len(outer)))
    comps = []
    for a, b in runs:
        co = outer[a:b]
        ci = tuple(
            x for x in ((inner[j] if j < len(inner) else 0) for j in range(a, b)) if x
        )
        comps.append(SkewShape(co, ci))
    return comps


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n with parts <= max_part, in decreasing lex order."""
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in enumerate_partitions(n - first, first):
            yield (first,) + rest


def enumerate_subpartitions(lam) -> Iterator[Partition]:
    """All partitions contained in lam, in decreasing lex order."""
    rows = len(lam)

    def rec(i: int, prev: int) -> Iterator[Partition]:
        if i < rows:
            for v in range(min(lam[i], prev), 0, -1):
                for rest in rec(i + 1, v):
                    yield (v,) + rest
        yield ()

    return rec(0, lam[0] if lam else 0)


def horizontal_strip_extensions(mu, lam, n: int) -> list[Partition]:
    """All nu with mu ⊆ nu ⊆ lam, |nu/mu| = n and nu/mu a horizontal strip."""
    if not contains(mu, lam):
        raise ValueError(f"{mu} does not fit inside {lam}")
    rows = len(lam)
    lo = [mu[i] if i < len(mu) else 0 for i in range(rows)]
    # row i of the strip may not reach past the inner shape's previous row
    cap = [lam[0] if rows else 0] + [min(lam[i], lo[i - 1]) for i in range(1, rows)]
    avail = [0] * (rows + 1)
    for i in range(rows - 1, -1, -1):
        avail[i] = avail[i + 1] + cap[i] - lo[i]
    out: list[Partition] = []
    choice = [0] * rows

    def rec(i: int, remaining: int) -> None:
        if remaining > avail[i]:
            return
        if i == rows:
            out.append(tuple(x for x in choice if x))
            return
        hi = min(cap[i], lo[i] + remaining)
        floor = max(lo[i], lo[i] + remaining - avail[i + 1])
        for v in range(hi, floor - 1, -1):
            choice[i] = v
            rec(i + 1, remaining - (v - lo[i]))

    rec(0, n)
    return out


def dominance_leq(a, b) -> bool:
    """True iff |a| = |b| and every prefix sum of a is at most that of b."""
    if sum(a) != sum(b):
        return False
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True
