"""Truncated power series, series matrices, and contact profiles of arcs.

An arc on the Grassmannian is represented by a k x n matrix of power series
truncated at a fixed precision: coefficients of t^0 through t^m are stored
exactly as integers or Fractions.  Sums and products of exact inputs have
exact coefficients in that range, so any vanishing order at most m is
certain; beyond the window only the lower bound "order >= m+1" survives,
and :class:`OrderValue` keeps the two cases apart.

The central computation is :func:`invariant_factor_profile`: the plane
partition recording, for every rectangle Schubert condition, the contact
order of the arc.  It only needs orders of minors of column-truncations of
the matrix, never a series inverse.
"""

from __future__ import annotations

import random
import re
from fractions import Fraction
from itertools import combinations

from .partitions import GrassmannShape, final_multi_index
from .plane_partitions import INF, PlanePartition, from_essential


class NotAnArc(ValueError):
    """The constant term of the matrix has rank below k: no maximal minor is a unit."""


class NotInBigCell(ValueError):
    """The minor on the last k columns is not a unit.

    Apply :func:`borel_translate` first; contact profiles are invariant
    under that change of coordinates.
    """


class PrecisionExceeded(Exception):
    """An order needed exactly is only known as a lower bound.

    ``position`` is the 1-based rectangle position (a, b) whose contact
    order could not be resolved, ``bound`` the surviving lower bound.
    """

    def __init__(self, position: tuple[int, int], bound: int):
        super().__init__(
            f"contact order at rectangle {position} is >= {bound}; "
            "recompute at higher precision"
        )
        self.position = position
        self.bound = bound


class OrderValue:
    """Vanishing order of a truncated series: exact, a lower bound, or infinite.

    Infinite orders arise only structurally (an identically zero minor),
    never from truncated data.
    """

    __slots__ = ("kind", "value")

    def __init__(self, kind: str, value: int | None):
        self.kind = kind
        self.value = value

    @classmethod
    def of(cls, e: int) -> "OrderValue":
        return cls("exact", e)

    @classmethod
    def at_least(cls, bound: int) -> "OrderValue":
        return cls("at_least", bound)

    @classmethod
    def infinite(cls) -> "OrderValue":
        return cls("infinite", None)

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    def __add__(self, other: "OrderValue") -> "OrderValue":
        if self.is_infinite or other.is_infinite:
            return OrderValue.infinite()
        total = self.value + other.value
        if self.is_exact and other.is_exact:
            return OrderValue.of(total)
        return OrderValue.at_least(total)

    def min_with(self, other: "OrderValue") -> "OrderValue":
        """Order of a sum of ideals: the smaller order wins; a lower bound
        only survives when it cannot be beaten by the exact competitor."""
        if self.is_infinite:
            return other
        if other.is_infinite:
            return self
        if self.is_exact and other.is_exact:
            return self if self.value <= other.value else other
        if self.is_exact:
            return self if self.value <= other.value else OrderValue.at_least(other.value)
        if other.is_exact:
            return other if other.value <= self.value else OrderValue.at_least(self.value)
        return OrderValue.at_least(min(self.value, other.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, OrderValue):
            return self.kind == other.kind and self.value == other.value
        if isinstance(other, int):
            return self.is_exact and self.value == other
        from .plane_partitions import Infinity

        if isinstance(other, Infinity):
            return self.is_infinite
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.kind, self.value))

    def __repr__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.is_exact:
            return str(self.value)
        return f">={self.value}"


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class TruncatedSeries:
    """A power series known exactly modulo t^(precision+1)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, precision: int | None = None):
        coeffs = [_norm_coeff(c) for c in coeffs]
        if precision is not None:
            if len(coeffs) > precision + 1:
                coeffs = coeffs[: precision + 1]
            else:
                coeffs += [0] * (precision + 1 - len(coeffs))
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        self.coeffs = tuple(coeffs)

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, precision: int) -> "TruncatedSeries":
        return cls([0], precision)

    @classmethod
    def constant(cls, c, precision: int) -> "TruncatedSeries":
        return cls([c], precision)

    @classmethod
    def one(cls, precision: int) -> "TruncatedSeries":
        return cls([1], precision)

    @classmethod
    def t_power(cls, exponent: int, precision: int, coeff=1) -> "TruncatedSeries":
        """coeff * t^exponent; exponents beyond the precision leave zero."""
        if exponent < 0:
            raise ValueError("negative exponents are not representable")
        coeffs = [0] * (precision + 1)
        if exponent <= precision:
            coeffs[exponent] = coeff
        return cls(coeffs)

    def truncate(self, precision: int) -> "TruncatedSeries":
        if precision >= self.precision:
            return self
        return TruncatedSeries(self.coeffs[: precision + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.precision, other.precision)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(m + 1)]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.precision, other.precision)
        return TruncatedSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(m + 1)]
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs])
        m = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        if sum(1 for c in a[: m + 1] if c) > sum(1 for c in b[: m + 1] if c):
            a, b = b, a
        acc = [0] * (m + 1)
        for i in range(m + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(m + 1 - i):
                bj = b[j]
                if bj:
                    acc[i + j] += ai * bj
        return TruncatedSeries(acc)

    __rmul__ = __mul__

    def order(self) -> OrderValue:
        for i, c in enumerate(self.coeffs):
            if c:
                return OrderValue.of(i)
        return OrderValue.at_least(self.precision + 1)

    @property
    def is_unit(self) -> bool:
        return bool(self.coeffs[0])

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({format_series(self)!r}, precision={self.precision})"


class SeriesMatrix:
    """A matrix of truncated series, normalized to one common precision."""

    __slots__ = ("entries", "nrows", "ncols")

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        if not entries or not entries[0]:
            raise ValueError("series matrix must be non-empty")
        if any(len(row) != len(entries[0]) for row in entries):
            raise ValueError("ragged series matrix")
        m = min(e.precision for row in entries for e in row)
        self.entries = tuple(tuple(e.truncate(m) for e in row) for row in entries)
        self.nrows = len(entries)
        self.ncols = len(entries[0])

    @property
    def precision(self) -> int:
        return self.entries[0][0].precision

    def column_slice(self, ncols: int) -> "SeriesMatrix":
        return SeriesMatrix([row[:ncols] for row in self.entries])

    def constant_term(self) -> list[list]:
        return [[e.coeffs[0] for e in row] for row in self.entries]

    def __eq__(self, other) -> bool:
        return isinstance(other, SeriesMatrix) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"SeriesMatrix({format_arc_matrix(self)!r}, precision={self.precision})"


def big_cell_arc(affine: SeriesMatrix) -> SeriesMatrix:
    """Extend a k x (n-k) affine matrix to the k x n arc (X | D) where D is
    the k x k matrix with units on the antidiagonal."""
    k = affine.nrows
    prec = affine.precision
    rows = []
    for i, row in enumerate(affine.entries):
        pad = [TruncatedSeries.zero(prec)] * k
        pad[k - 1 - i] = TruncatedSeries.one(prec)
        rows.append(list(row) + pad)
    return SeriesMatrix(rows)


def series_det(matrix: SeriesMatrix, rows, cols) -> TruncatedSeries:
    """Determinant of the square submatrix on ``rows`` x ``cols`` (0-based).

    Subset dynamic programming over column choices: O(2^s s) series products.
    """
    rows, cols = tuple(rows), tuple(cols)
    s = len(rows)
    if s != len(cols):
        raise ValueError("determinant needs a square submatrix")
    prec = matrix.precision
    if s == 0:
        return TruncatedSeries.one(prec)
    entry = matrix.entries
    sub = [[entry[r][c] for c in cols] for r in rows]
    dp = {0: TruncatedSeries.one(prec)}
    for mask in sorted(range(1, 1 << s), key=lambda m: m.bit_count()):
        r = mask.bit_count() - 1
        acc = TruncatedSeries.zero(prec)
        idx = 0
        for j in range(s):
            if mask >> j & 1:
                term = sub[r][j] * dp[mask ^ (1 << j)]
                acc = acc + term if (r + idx) % 2 == 0 else acc - term
                idx += 1
        dp[mask] = acc
    return dp[(1 << s) - 1]


def minor_order(matrix: SeriesMatrix, rows, cols) -> OrderValue:
    """Vanishing order of the [rows|cols]-minor (0-based indices)."""
    return series_det(matrix, rows, cols).order()


def determinantal_order_ideal(matrix: SeriesMatrix, size: int) -> OrderValue:
    """Smallest vanishing order among all minors of the given size.

    Size zero is the unit ideal (order 0); a size larger than the matrix
    admits no minors, giving the zero ideal and infinite order.
    """
    if size == 0:
        return OrderValue.of(0)
    if size > min(matrix.nrows, matrix.ncols):
        return OrderValue.infinite()
    best = OrderValue.infinite()
    for rows in combinations(range(matrix.nrows), size):
        for cols in combinations(range(matrix.ncols), size):
            best = best.min_with(minor_order(matrix, rows, cols))
            if best == 0:
                return best
    return best


def _rank_of_constant_term(matrix: SeriesMatrix) -> int:
    rows = [[Fraction(c) for c in row] for row in matrix.constant_term()]
    rank = 0
    for col in range(len(rows[0])):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _check_big_cell(arc: SeriesMatrix) -> None:
    k, n = arc.nrows, arc.ncols
    if not k < n:
        raise NotAnArc(f"a {k} x {n} matrix does not present a proper subspace")
    if _rank_of_constant_term(arc) < k:
        raise NotAnArc("no maximal minor is a unit")
    last = range(n - k, n)
    if not series_det(arc, range(k), last).is_unit:
        raise NotInBigCell(
            "the minor on the last k columns is not a unit; "
            "apply borel_translate first"
        )


def invariant_factor_profile(arc: SeriesMatrix) -> PlanePartition:
    """The plane partition of contact orders of an arc, position by position.

    Entry (a, b) of the rectangle contact profile is the smallest vanishing
    order among the minors of size k+1-a inside the first k-a+b columns of
    the arc matrix; the plane partition is recovered by consecutive diagonal
    differences.  The arc must be in big-cell form: unit minor on the last
    k columns (see :func:`borel_translate`).

    Raises :class:`PrecisionExceeded` when a needed order exceeds the
    truncation window.
    """
    _check_big_cell(arc)
    k, n = arc.nrows, arc.ncols
    shape = GrassmannShape(k, n)
    c = shape.cols
    alpha = []
    for a in range(1, k + 1):
        s = k + 1 - a
        row = []
        best = OrderValue.infinite()
        for rows in combinations(range(k), s):
            best = best.min_with(minor_order(arc, rows, range(s)))
            if best == 0:
                break
        for b in range(1, c + 1):
            if b > 1 and not (best.is_exact and best.value == 0):
                new_col = k - a + b - 1
                for rows in combinations(range(k), s):
                    for old in combinations(range(new_col), s - 1):
                        best = best.min_with(
                            minor_order(arc, rows, old + (new_col,))
                        )
                        if best == 0:
                            break
                    if best == 0:
                        break
            if best.kind == "at_least":
                raise PrecisionExceeded((a, b), best.value)
            row.append(best.value if best.is_exact else INF)
        alpha.append(row)
    try:
        return from_essential(alpha, shape)
    except ValueError as exc:
        raise RuntimeError(f"internal: profile assembly failed ({exc})") from exc


def plucker_order_of_arc(arc: SeriesMatrix, entries) -> OrderValue:
    """Vanishing order of the Pluecker coordinate of a 1-based multi-index."""
    k, n = arc.nrows, arc.ncols
    GrassmannShape(k, n)
    cols = tuple(int(e) - 1 for e in entries)
    if len(cols) != k or any(not 0 <= c < n for c in cols):
        raise ValueError(f"not a multi-index for a {k} x {n} arc: {entries!r}")
    return minor_order(arc, range(k), cols)


def is_generic_form(arc: SeriesMatrix, beta: PlanePartition) -> bool:
    """Whether the arc realizes beta the way a network arc does: big-cell
    form, profile equal to beta, and each rectangle contact order already
    attained on the final minor alone."""
    try:
        profile = invariant_factor_profile(arc)
    except NotInBigCell:
        return False
    if profile != beta:
        return False
    shape = beta.shape
    from .plane_partitions import essential_profile

    alpha = essential_profile(beta)
    for a in range(1, shape.k + 1):
        for b in range(1, shape.cols + 1):
            target = alpha[a - 1][b - 1]
            got = plucker_order_of_arc(arc, final_multi_index(shape, a, b))
            if got.is_exact:
                if got.value != target:
                    return False
            elif target >= got.value:
                raise PrecisionExceeded((a, b), got.value)
            else:
                return False
    return True


def borel_translate(arc: SeriesMatrix, seed: int = 0) -> SeriesMatrix:
    """Right-translate by a random integer upper-triangular matrix until the
    arc sits in the opposite big cell.

    The translate changes coordinates without changing any contact order,
    so profiles computed after translation are profiles of the original arc.
    """
    k, n = arc.nrows, arc.ncols
    if _rank_of_constant_term(arc) < k:
        raise NotAnArc("no maximal minor is a unit")
    rng = random.Random(seed)
    prec = arc.precision
    for _ in range(32):
        u = [
            [
                rng.randint(1, 9) if i == j else (rng.randint(-9, 9) if j > i else 0)
                for j in range(n)
            ]
            for i in range(n)
        ]
        rows = []
        for row in arc.entries:
            new_row = []
            for j in range(n):
                acc = TruncatedSeries.zero(prec)
                for i in range(n):
                    if u[i][j]:
                        acc = acc + row[i] * u[i][j]
                new_row.append(acc)
            rows.append(new_row)
        candidate = SeriesMatrix(rows)
        if series_det(candidate, range(k), range(n - k, n)).is_unit:
            return candidate
    raise RuntimeError("internal: failed to reach the big cell by translation")


# -- Text format -------------------------------------------------------------

_TERM = re.compile(
    r"(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*(?P<t>t(?:\^(?P<exp>\d+))?)?\s*"
)


def parse_series(text: str, precision: int) -> TruncatedSeries:
    """Parse "t^2+t^3", "2*t^3", "1/2*t", "0" into a truncated series."""
    text = text.strip()
    if not text:
        raise ValueError("empty series")
    coeffs = [Fraction(0)] * (precision + 1)
    pos = 0
    sign = 1
    if text[pos] in "+-":
        sign = -1 if text[pos] == "-" else 1
        pos += 1
    while True:
        m = _TERM.match(text, pos)
        if not m or (m.group("coef") is None and m.group("t") is None):
            raise ValueError(f"cannot parse series {text!r} at offset {pos}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("t"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        if exp <= precision:
            coeffs[exp] += sign * coef
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] not in "+-":
            raise ValueError(f"cannot parse series {text!r} at offset {pos}")
        sign = -1 if text[pos] == "-" else 1
        pos += 1
    return TruncatedSeries(coeffs)


def format_series(series: TruncatedSeries) -> str:
    parts = []
    for e, c in enumerate(series.coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        num = str(c) if isinstance(c, int) else f"{c.numerator}/{c.denominator}"
        if e == 0:
            body = num
        else:
            tpow = "t" if e == 1 else f"t^{e}"
            body = tpow if c == 1 else f"{num}*{tpow}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def parse_arc_matrix(text: str, precision: int) -> SeriesMatrix:
    """Parse "t^2+t^3, t^2, 0, 1; t^2, t, 1, 0" at the given precision."""
    rows = []
    for row_text in text.split(";"):
        cells = row_text.split(",")
        rows.append([parse_series(cell, precision) for cell in cells])
    return SeriesMatrix(rows)


def format_arc_matrix(matrix: SeriesMatrix) -> str:
    return "; ".join(
        ", ".join(format_series(e) for e in row) for row in matrix.entries
    )
