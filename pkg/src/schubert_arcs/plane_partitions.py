"""Plane partitions in the k x (n-k) box and the contact-order data they encode.

A plane partition is a matrix of entries from {0, 1, 2, ...} u {inf}, weakly
decreasing along rows and columns.  Such a matrix records, position by
position, the generic invariant-factor data of an arc on the Grassmannian:
entry (i, j) is the jump attached to the rectangle Schubert condition with
corner (i, j).  Diagonal partial sums recover contact orders with the
rectangle varieties themselves, and the whole dictionary between the two
descriptions lives in this module.

Matrix rows are stored as tuples; positions (i, j) in public results are
1-based, matching the labelling of Schubert conditions.
"""

from __future__ import annotations

from typing import Iterator

from .partitions import GrassmannShape, Partition, schubert_conditions


class Infinity:
    """Saturating infinity: inf + x = inf, inf - x = inf, min(inf, x) = x.

    Subtracting infinity from a finite value is a programming error and
    raises.  Use the module constant INF; all infinities compare equal.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "inf"

    def __eq__(self, other) -> bool:
        return isinstance(other, Infinity)

    def __hash__(self) -> int:
        return hash("schubert_arcs.Infinity")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, Infinity)

    def __gt__(self, other) -> bool:
        return not isinstance(other, Infinity)

    def __ge__(self, other) -> bool:
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self

    def __rsub__(self, other):
        raise ValueError("cannot subtract infinity from a finite value")

    def __mul__(self, other):
        if isinstance(other, Infinity) or other > 0:
            return self
        raise ValueError(f"{other!r} * inf is undefined")

    __rmul__ = __mul__


INF = Infinity()

ExtNat = int | Infinity


def parse_ext(token: str) -> ExtNat:
    token = token.strip()
    if token == "inf":
        return INF
    try:
        value = int(token)
    except ValueError:
        raise ValueError(f"expected a non-negative integer or 'inf', got {token!r}") from None
    if value < 0:
        raise ValueError(f"expected a non-negative integer or 'inf', got {token!r}")
    return value


def format_ext(value: ExtNat) -> str:
    return "inf" if isinstance(value, Infinity) else str(value)


class InvalidPlanePartition(ValueError):
    """Raised with the offending 1-based cell when a matrix is not a plane partition."""

    def __init__(self, message: str, cell: tuple[int, int]):
        super().__init__(f"{message} at cell {cell}")
        self.cell = cell


class PlanePartition:
    """An immutable plane partition in the box of ``shape``.

    The constructor validates, so every instance is genuinely weakly
    decreasing along rows and columns with entries in {0, 1, ...} u {inf}.
    """

    __slots__ = ("rows", "shape")

    def __init__(self, rows, shape: GrassmannShape):
        k, c = shape.k, shape.cols
        rows = tuple(tuple(row) for row in rows)
        if len(rows) != k or any(len(row) != c for row in rows):
            raise InvalidPlanePartition(
                f"expected a {k} x {c} matrix for {shape!r}", (len(rows), 0)
            )
        for i, row in enumerate(rows, start=1):
            for j, entry in enumerate(row, start=1):
                if isinstance(entry, Infinity):
                    continue
                if not isinstance(entry, int) or isinstance(entry, bool) or entry < 0:
                    raise InvalidPlanePartition(
                        f"entry {entry!r} is not a non-negative integer or inf", (i, j)
                    )
        for i in range(k):
            for j in range(c):
                if j + 1 < c and rows[i][j] < rows[i][j + 1]:
                    raise InvalidPlanePartition("row increases", (i + 1, j + 2))
                if i + 1 < k and rows[i][j] < rows[i + 1][j]:
                    raise InvalidPlanePartition("column increases", (i + 2, j + 1))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", shape)

    def __setattr__(self, name, value):
        raise AttributeError("PlanePartition is immutable")

    @classmethod
    def zero(cls, shape: GrassmannShape) -> "PlanePartition":
        return cls([[0] * shape.cols] * shape.k, shape)

    @classmethod
    def constant(cls, shape: GrassmannShape, value: ExtNat) -> "PlanePartition":
        return cls([[value] * shape.cols] * shape.k, shape)

    def at(self, i: int, j: int) -> ExtNat:
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.shape.k and 1 <= j <= self.shape.cols):
            raise IndexError(f"position ({i}, {j}) outside the box")
        return self.rows[i - 1][j - 1]

    def ext(self, i: int, j: int) -> ExtNat:
        """Entry extended by zero below and to the right of the box."""
        if i > self.shape.k or j > self.shape.cols:
            return 0
        return self.at(i, j)

    @property
    def volume(self) -> ExtNat:
        """Sum of all entries; the codimension of the associated arc stratum."""
        return sum(entry for row in self.rows for entry in row)

    @property
    def height(self) -> ExtNat:
        return self.rows[0][0] if self.rows else 0

    @property
    def is_finite(self) -> bool:
        return not isinstance(self.rows[0][0], Infinity)

    def add_box(self, i: int, j: int) -> "PlanePartition":
        """New plane partition with entry (i, j) raised by one; revalidates."""
        entry = self.at(i, j)
        if isinstance(entry, Infinity):
            raise ValueError(f"cannot add a box on the infinite pillar ({i}, {j})")
        rows = [list(row) for row in self.rows]
        rows[i - 1][j - 1] = entry + 1
        return PlanePartition(rows, self.shape)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PlanePartition)
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.shape))

    def __repr__(self) -> str:
        return f"PlanePartition({format_plane_partition(self)!r}, {self.shape!r})"


def diagonal_sum(beta: PlanePartition, a: int, b: int) -> ExtNat:
    """Sum of entries on the diagonal starting at (a, b), within the box."""
    total: ExtNat = 0
    i, j = a, b
    while i <= beta.shape.k and j <= beta.shape.cols:
        total = total + beta.at(i, j)
        i += 1
        j += 1
    return total


def ord_schubert(beta: PlanePartition, lam: Partition) -> ExtNat:
    """Contact order of a generic arc of the stratum of beta with the
    Schubert variety of lam: the smallest diagonal sum over the corners
    of lam.

    The empty partition indexes the whole Grassmannian, whose ideal
    vanishes identically, so it is rejected.
    """
    if beta.shape != lam.shape:
        raise ValueError("plane partition and partition live in different shapes")
    if not lam:
        raise ValueError("contact order with the whole space is undefined")
    return min(diagonal_sum(beta, a, b) for a, b in schubert_conditions(lam))


def essential_profile(beta: PlanePartition) -> tuple[tuple[ExtNat, ...], ...]:
    """Matrix of contact orders with all rectangle Schubert varieties:
    entry (i, j) is the diagonal sum of beta starting at (i, j)."""
    k, c = beta.shape.k, beta.shape.cols
    return tuple(
        tuple(diagonal_sum(beta, i, j) for j in range(1, c + 1)) for i in range(1, k + 1)
    )


def from_essential(alpha, shape: GrassmannShape) -> PlanePartition:
    """Rebuild the plane partition from its rectangle contact orders.

    Entry (i, j) of the result is alpha[i][j] - alpha[i+1][j+1], reading
    zero outside the box.  The admissibility inequalities a rectangle
    contact profile must satisfy are exactly the statement that these
    differences form a plane partition, so validation happens by
    construction.
    """
    k, c = shape.k, shape.cols
    alpha = tuple(tuple(row) for row in alpha)
    if len(alpha) != k or any(len(row) != c for row in alpha):
        raise ValueError(f"expected a {k} x {c} profile matrix for {shape!r}")

    def entry(i: int, j: int) -> ExtNat:
        return alpha[i - 1][j - 1] if i <= k and j <= c else 0

    try:
        rows = [
            [entry(i, j) - entry(i + 1, j + 1) for j in range(1, c + 1)]
            for i in range(1, k + 1)
        ]
        return PlanePartition(rows, shape)
    except ValueError as exc:
        raise ValueError(f"not a valid essential contact profile: {exc}") from None


def contact_profile(beta: PlanePartition) -> dict[Partition, ExtNat]:
    """Contact orders with every non-empty Schubert variety of the shape.

    Determined by the rectangle orders alone: the order for lam is the
    minimum over the corners of lam.
    """
    from .partitions import all_partitions

    return {lam: ord_schubert(beta, lam) for lam in all_partitions(beta.shape)}


def weight_exponents(beta: PlanePartition) -> tuple[tuple[ExtNat, ...], ...]:
    """Exponent matrix for the essential weighting realizing beta on the
    standard planar network.

    Position (i, j) compares the box below-right of (i, j): wider than tall
    takes the difference along the row, taller than wide along the column,
    and on the square diagonal the entry itself.
    """
    k, c = beta.shape.k, beta.shape.cols
    exps = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, c + 1):
            below, right = k - i, c - j
            if below < right:
                row.append(beta.at(i, j) - beta.at(i, j + 1))
            elif below > right:
                row.append(beta.at(i, j) - beta.at(i + 1, j))
            else:
                row.append(beta.at(i, j))
        exps.append(tuple(row))
    return tuple(exps)


def floors(beta: PlanePartition) -> list[Partition]:
    """Horizontal slices, bottom up: the s-th floor is the partition of
    cells with entry at least s.  Requires finite height."""
    if not beta.is_finite:
        raise ValueError("an infinite plane partition has no finite floor decomposition")
    out = []
    for s in range(1, beta.height + 1):
        parts = [sum(1 for e in row if e >= s) for row in beta.rows]
        out.append(Partition(parts, beta.shape))
    return out


def from_floors(chain, shape: GrassmannShape) -> PlanePartition:
    """Stack floors with multiplicities: chain is a list of
    (partition, multiplicity) pairs, nested outermost first.

    >>> sh = GrassmannShape(2, 4)
    >>> mu = Partition((2, 1), sh)
    >>> from_floors([(mu, 3)], sh).rows
    ((3, 3), (3, 0))
    """
    k, c = shape.k, shape.cols
    entries = [[0] * c for _ in range(k)]
    previous = None
    for mu, mult in chain:
        if mu.shape != shape:
            raise ValueError("floor partition in a different shape")
        if not mu:
            raise ValueError("empty floors are not allowed in a chain")
        if not (isinstance(mult, int) and mult > 0):
            raise ValueError(f"floor multiplicity must be a positive integer, got {mult!r}")
        if previous is not None and not previous.contains(mu):
            raise ValueError(
                f"floors are not nested: {previous.parts} does not contain {mu.parts}"
            )
        for i, j in mu.cells():
            entries[i - 1][j - 1] += mult
        previous = mu
    return PlanePartition(entries, shape)


def home_center(beta: PlanePartition) -> tuple[Partition, Partition]:
    """(home, center): the partitions of infinite cells and of positive cells.

    Generic arcs of the stratum live inside the Schubert variety of the
    home and send the special point into the variety of the center.
    """
    inf_parts = [sum(1 for e in row if isinstance(e, Infinity)) for row in beta.rows]
    pos_parts = [sum(1 for e in row if e >= 1) for row in beta.rows]
    return Partition(inf_parts, beta.shape), Partition(pos_parts, beta.shape)


def plateaux(beta: PlanePartition) -> list[tuple[tuple[int, int], ExtNat, ExtNat]]:
    """All plateau corners ((a, b), height, fall), scanned row-major.

    Position (a, b) is a plateau corner when all entries northwest of it,
    the corner itself excepted, share one value h.  At (1, 1) that region
    is empty and h = inf.  The fall is h minus the corner entry; when h is
    infinite the fall is 0 on an infinite corner and inf otherwise.
    """
    k, c = beta.shape.k, beta.shape.cols
    found = []
    for a in range(1, k + 1):
        for b in range(1, c + 1):
            region = {
                beta.at(i, j)
                for i in range(1, a + 1)
                for j in range(1, b + 1)
                if (i, j) != (a, b)
            }
            if len(region) > 1:
                continue
            h: ExtNat = region.pop() if region else INF
            corner = beta.at(a, b)
            if isinstance(h, Infinity):
                fall: ExtNat = 0 if isinstance(corner, Infinity) else INF
            else:
                fall = h - corner
            found.append(((a, b), h, fall))
    return found


def all_plane_partitions(
    shape: GrassmannShape, max_height: int, include_zero: bool = True
) -> Iterator[PlanePartition]:
    """All plane partitions in the box with entries at most ``max_height``."""

    def rows_from(prev: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        c = len(prev)

        def rec(prefix: list[int], j: int) -> Iterator[tuple[int, ...]]:
            if j == c:
                yield tuple(prefix)
                return
            cap = min(prev[j], prefix[j - 1] if j else prev[0])
            for e in range(cap + 1):
                prefix.append(e)
                yield from rec(prefix, j + 1)
                prefix.pop()

        yield from rec([], 0)

    def build(rows: list[tuple[int, ...]], prev: tuple[int, ...]) -> Iterator[PlanePartition]:
        if len(rows) == shape.k:
            pp = PlanePartition(rows, shape)
            if include_zero or pp.volume > 0:
                yield pp
            return
        for row in rows_from(prev):
            rows.append(row)
            yield from build(rows, row)
            rows.pop()

    yield from build([], (max_height,) * shape.cols)


# -- Text format -------------------------------------------------------------


def parse_ext_matrix(text: str, shape: GrassmannShape) -> tuple[tuple[ExtNat, ...], ...]:
    """Parse "2 2; 2 1" with 'inf' allowed, into a k x (n-k) matrix."""
    rows = [row.strip() for row in text.split(";")]
    matrix = tuple(tuple(parse_ext(tok) for tok in row.split()) for row in rows)
    k, c = shape.k, shape.cols
    if len(matrix) != k or any(len(row) != c for row in matrix):
        raise ValueError(f"expected a {k} x {c} matrix for {shape!r}, got {text!r}")
    return matrix


def parse_plane_partition(text: str, shape: GrassmannShape) -> PlanePartition:
    return PlanePartition(parse_ext_matrix(text, shape), shape)


def format_ext_matrix(matrix) -> str:
    return "; ".join(" ".join(format_ext(e) for e in row) for row in matrix)


def format_plane_partition(beta: PlanePartition) -> str:
    return format_ext_matrix(beta.rows)
