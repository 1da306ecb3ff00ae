"""Partitions in a k x (n-k) box and the Schubert combinatorics built on them.

Conventions: a point of the Grassmannian G(k, n) is a k-dimensional subspace
of an n-dimensional space.  Schubert varieties are indexed by partitions
whose diagram fits in a box with k rows and n-k columns.  Multi-indexes
(strictly increasing k-tuples in [1, n]) label both torus-fixed points and
Pluecker coordinates.  Matrix rows and columns in minor labels are 1-based
throughout this module; they are combinatorial labels, not array offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator


@dataclass(frozen=True)
class GrassmannShape:
    """Ambient shape: G(k, n) with 1 <= k < n. The box has k rows, n-k columns."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if not (isinstance(self.k, int) and isinstance(self.n, int)):
            raise ValueError("shape parameters must be integers")
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={self.n}")

    @property
    def cols(self) -> int:
        return self.n - self.k

    def __repr__(self) -> str:
        return f"GrassmannShape({self.k}, {self.n})"


class Partition:
    """A partition whose diagram fits in the box of ``shape``.

    Parts are stored weakly decreasing with trailing zeros stripped, so the
    empty partition has ``parts == ()``.
    """

    __slots__ = ("parts", "shape")

    def __init__(self, parts, shape: GrassmannShape):
        cleaned = tuple(int(p) for p in parts if p != 0)
        if any(p < 0 for p in cleaned):
            raise ValueError(f"negative part in {parts!r}")
        if any(cleaned[i] < cleaned[i + 1] for i in range(len(cleaned) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts!r}")
        if len(cleaned) > shape.k:
            raise ValueError(f"{parts!r} has more than k={shape.k} parts")
        if cleaned and cleaned[0] > shape.cols:
            raise ValueError(f"{parts!r} does not fit in {shape.cols} columns")
        object.__setattr__(self, "parts", cleaned)
        object.__setattr__(self, "shape", shape)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Partition)
            and self.parts == other.parts
            and self.shape == other.shape
        )

    def __hash__(self) -> int:
        return hash((self.parts, self.shape))

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)}, {self.shape!r})"

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    @property
    def size(self) -> int:
        """Number of boxes; equals the codimension of the Schubert variety."""
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def has_cell(self, i: int, j: int) -> bool:
        return 1 <= i and 1 <= j <= self.part(i)

    def cells(self) -> Iterator[tuple[int, int]]:
        """All diagram cells (row, column), 1-based, row-major."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def contains(self, other: "Partition") -> bool:
        """Diagram containment: every cell of ``other`` is a cell of self."""
        if self.shape != other.shape:
            raise ValueError("partitions live in different shapes")
        return all(self.part(i) >= other.part(i) for i in range(1, len(other) + 1))


def all_partitions(shape: GrassmannShape, include_empty: bool = False) -> Iterator[Partition]:
    """All partitions in the box, empty first, then by decreasing first part.

    The box of G(k, n) holds binomial(n, k) of them in total.
    """

    def rec(prefix: list[int], bound: int, rows_left: int) -> Iterator[tuple[int, ...]]:
        yield tuple(prefix)
        if rows_left == 0:
            return
        for p in range(1, bound + 1):
            prefix.append(p)
            yield from rec(prefix, p, rows_left - 1)
            prefix.pop()

    for parts in rec([], shape.cols, shape.k):
        if parts or include_empty:
            yield Partition(parts, shape)


def partition_from_multi_index(entries, shape: GrassmannShape) -> Partition:
    """Partition indexing the Schubert variety whose open cell contains the
    torus-fixed point of the multi-index.

    The s-th multi-index entry is s plus the (k+1-s)-th part, so the two
    descriptions carry the same data.

    >>> partition_from_multi_index((2, 3, 6), GrassmannShape(3, 6)).parts
    (3, 1, 1)
    """
    entries = tuple(int(e) for e in entries)
    k, n = shape.k, shape.n
    if len(entries) != k:
        raise ValueError(f"multi-index must have k={k} entries, got {entries!r}")
    if entries[0] < 1 or entries[-1] > n:
        raise ValueError(f"multi-index entries out of range [1, {n}]: {entries!r}")
    if any(entries[s] >= entries[s + 1] for s in range(k - 1)):
        raise ValueError(f"multi-index not strictly increasing: {entries!r}")
    parts = [entries[s - 1] - s for s in range(k, 0, -1)]
    return Partition(parts, shape)


def multi_index_from_partition(lam: Partition) -> tuple[int, ...]:
    """Inverse of :func:`partition_from_multi_index`."""
    k = lam.shape.k
    return tuple(s + lam.part(k + 1 - s) for s in range(1, k + 1))


def bruhat_leq(lam: Partition, mu: Partition) -> bool:
    """Diagram containment of lam in mu.

    Containment is the opposite of the inclusion of the Schubert varieties:
    the variety of mu sits inside the variety of lam exactly when the diagram
    of lam is contained in the diagram of mu.
    """
    return mu.contains(lam)


def schubert_conditions(lam: Partition) -> list[tuple[int, int]]:
    """Southeast corners (a, b) of the diagram, northeast to southwest.

    Each corner imposes the rank condition cutting out the Schubert variety
    of the rectangle with a rows and b columns; the variety of lam is the
    intersection of these.  Empty partition: no corners.
    """
    corners = []
    for a in range(1, len(lam.parts) + 1):
        b = lam.parts[a - 1]
        if b > lam.part(a + 1):
            corners.append((a, b))
    return corners


def outside_corners(lam: Partition) -> list[tuple[int, int]]:
    """Corner list extended by virtual corners on the box boundary.

    Prepends (0, n-k) when no proper corner reaches the last column and
    appends (k, 0) when none reaches the last row, so consecutive entries
    always step strictly down in b and up in a.  The full box yields the
    single corner (k, n-k); the empty partition yields both virtual corners.
    """
    corners = schubert_conditions(lam)
    k, c = lam.shape.k, lam.shape.cols
    if not any(b == c for _, b in corners):
        corners.insert(0, (0, c))
    if not any(a == k for a, _ in corners):
        corners.append((k, 0))
    return corners


def singular_components(lam: Partition) -> list[Partition]:
    """Indexing partitions of the components of the singular locus.

    For each outside corner strictly between the first and last, enlarge the
    diagram by the rectangle whose southeast corner sits one step further out
    diagonally.  A Schubert variety is smooth exactly when this list is
    empty; the full box even has an empty extended corner list beyond its
    single proper corner.
    """
    ext = outside_corners(lam)
    comps = []
    for a, b in ext[1:-1]:
        parts = [max(lam.part(i), b + 1) for i in range(1, a + 2)]
        parts += [lam.part(i) for i in range(a + 2, lam.shape.k + 1)]
        comps.append(Partition(parts, lam.shape))
    return comps


def rim_size(lam: Partition) -> int:
    """Number of box cells outside lam that touch its diagram, corners included.

    Touching means sharing an edge or just a vertex with some diagram cell.
    Only defined when the diagram stays clear of the box boundary: at most
    k-1 parts, each at most n-k-1.  The empty partition is rejected, since
    nothing touches it.
    """
    if not lam:
        raise ValueError("rim of the empty partition is undefined")
    k, c = lam.shape.k, lam.shape.cols
    if len(lam.parts) > k - 1 or lam.parts[0] > c - 1:
        raise ValueError(f"{lam!r} touches the box boundary; rim undefined")
    inside = set(lam.cells())
    count = 0
    for i in range(1, k + 1):
        for j in range(1, c + 1):
            if (i, j) in inside:
                continue
            if any(
                (i + di, j + dj) in inside
                for di in (-1, 0, 1)
                for dj in (-1, 0, 1)
                if (di, dj) != (0, 0)
            ):
                count += 1
    return count


# -- Minor labels and their correspondence with multi-indexes ---------------
#
# On the opposite big cell a subspace is the row span of (X | D) with X of
# size k x (n-k) and D the k x k antidiagonal unit matrix.  Every Pluecker
# coordinate restricts, up to sign, to a minor of X; the dictionary between
# multi-indexes and minor labels is below.  A minor label is a pair
# (rows, cols) of equal-length strictly increasing tuples, 1-based.


def minor_of_multi_index(entries, shape: GrassmannShape) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Minor label (rows, cols) of X matching a Pluecker multi-index.

    Columns are the entries at most n-k; rows are those not knocked out by
    the entries beyond n-k via i = n+1-entry.  The empty minor (the unit
    constant) corresponds to the multi-index [n-k+1, ..., n].
    """
    k, n = shape.k, shape.n
    entries = tuple(int(e) for e in entries)
    cols = tuple(e for e in entries if e <= n - k)
    dropped = {n + 1 - e for e in entries if e > n - k}
    if not dropped <= set(range(1, k + 1)):
        raise ValueError(f"not a valid multi-index for {shape!r}: {entries!r}")
    rows = tuple(i for i in range(1, k + 1) if i not in dropped)
    if len(rows) != len(cols):
        raise ValueError(f"not a valid multi-index for {shape!r}: {entries!r}")
    return rows, cols


def multi_index_of_minor(rows, cols, shape: GrassmannShape) -> tuple[int, ...]:
    """Inverse of :func:`minor_of_multi_index`."""
    k, n = shape.k, shape.n
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise ValueError("minor label needs equally many rows and columns")
    if any(not 1 <= i <= k for i in rows) or any(not 1 <= j <= n - k for j in cols):
        raise ValueError(f"minor label out of range for {shape!r}: {rows}, {cols}")
    complement = (n + 1 - i for i in range(1, k + 1) if i not in set(rows))
    return tuple(sorted(cols)) + tuple(sorted(complement))


def minor_leq(label1, label2) -> bool:
    """Partial order on minor labels under which ideals of Schubert varieties
    are generated by the minors not above a given one.

    (rows1, cols1) <= (rows2, cols2) when the first minor is at least as
    large and its leading rows and columns are entrywise at most those of
    the second.  Smaller in the order means deeper in the variety.
    """
    rows1, cols1 = label1
    rows2, cols2 = label2
    if len(rows1) < len(rows2):
        return False
    return all(rows1[u] <= rows2[u] for u in range(len(rows2))) and all(
        cols1[u] <= cols2[u] for u in range(len(cols2))
    )


def final_minor(shape: GrassmannShape, a: int, b: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The largest minor with upper-left entry (a, b): rows a..a+r, columns
    b..b+r where r = min(k-a, n-k-b).

    These are the maximal elements above (a, b) in the minor order; their
    vanishing orders along an arc determine those of all other minors.
    """
    k, c = shape.k, shape.cols
    if not (1 <= a <= k and 1 <= b <= c):
        raise ValueError(f"position ({a}, {b}) outside the {k} x {c} box")
    r = min(k - a, c - b)
    return tuple(range(a, a + r + 1)), tuple(range(b, b + r + 1))


def final_multi_index(shape: GrassmannShape, a: int, b: int) -> tuple[int, ...]:
    """Pluecker multi-index of the final minor at (a, b)."""
    rows, cols = final_minor(shape, a, b)
    return multi_index_of_minor(rows, cols, shape)


def rectangle_ideal_minors(
    shape: GrassmannShape, a: int, b: int
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Minor labels generating the ideal of the rectangle Schubert variety
    with corner (a, b) on the opposite big cell.

    With r = min(k-a, n-k-b), these are the minors of size r+1 inside the
    first b+r columns when the box below the rectangle is at least as wide
    as tall, and inside the first a+r rows otherwise.
    """
    k, c = shape.k, shape.cols
    if not (1 <= a <= k and 1 <= b <= c):
        raise ValueError(f"position ({a}, {b}) outside the {k} x {c} box")
    r = min(k - a, c - b)
    s = r + 1
    if k - a <= c - b:
        row_pool, col_pool = range(1, k + 1), range(1, b + r + 1)
    else:
        row_pool, col_pool = range(1, a + r + 1), range(1, c + 1)
    return [
        (rows, cols)
        for rows in combinations(row_pool, s)
        for cols in combinations(col_pool, s)
    ]


# -- Text formats ------------------------------------------------------------


def parse_partition(text: str, shape: GrassmannShape) -> Partition:
    """Parse "3,1,1"; blank or "0" gives the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return Partition((), shape)
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    return Partition(parts, shape)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam.parts) if lam.parts else "0"


def parse_multi_index(text: str, shape: GrassmannShape) -> tuple[int, ...]:
    """Parse "[1,3,6]" (brackets optional) and validate against the shape."""
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    try:
        entries = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse multi-index from {text!r}") from None
    partition_from_multi_index(entries, shape)
    return entries


def format_multi_index(entries) -> str:
    return "[" + ",".join(str(e) for e in entries) + "]"
