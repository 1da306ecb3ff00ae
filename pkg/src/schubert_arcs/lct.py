"""Log canonical thresholds of Schubert varieties inside the Grassmannian.

The Arnold multiplicity of the pair is the maximum of the contact order
ord(lambda) over the polytope of normalized Schubert valuations, cut to the
largest subspace where that piecewise-linear function is linear: plane
R-partitions of volume one whose corner diagonal sums all agree.  This is a
small exact linear program.  The log canonical threshold is the reciprocal.
Rectangular shapes have a closed form, and a brute-force maximization over
integer plane partitions serves as an independent check.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .partitions import GrassmannShape, Partition, all_partitions, rim_size, schubert_conditions
from .plane_partitions import PlanePartition, all_plane_partitions, floors, ord_schubert
from .simplex import LPSolution, RationalLP, solve_max


def _diagonal_positions(shape: GrassmannShape, a: int, b: int) -> list[tuple[int, int]]:
    out = []
    i, j = a, b
    while i <= shape.k and j <= shape.cols:
        out.append((i, j))
        i += 1
        j += 1
    return out


def _var(shape: GrassmannShape, i: int, j: int) -> int:
    return (i - 1) * shape.cols + (j - 1)


def build_lp(lam: Partition) -> RationalLP:
    """Linear program whose optimum is the Arnold multiplicity of lam.

    Variables are the entries of a plane R-partition beta, row-major.
    Constraints: entries weakly decrease along rows and columns (with
    non-negativity native to the solver), total volume one, and the
    diagonal sums at consecutive corners of lam agree.  The objective is
    the diagonal sum at the first corner, which equals ord(lambda) on the
    equalized locus.
    """
    if not lam:
        raise ValueError("the pair with the whole Grassmannian has no threshold")
    shape = lam.shape
    k, c = shape.k, shape.cols
    lp = RationalLP(k * c, [0] * (k * c))
    corners = schubert_conditions(lam)
    for i, j in _diagonal_positions(shape, *corners[0]):
        lp.objective[_var(shape, i, j)] = 1
    for i in range(1, k + 1):
        for j in range(1, c + 1):
            if j < c:
                row = [0] * (k * c)
                row[_var(shape, i, j)] = -1
                row[_var(shape, i, j + 1)] = 1
                lp.add(row, "<=", 0)
            if i < k:
                row = [0] * (k * c)
                row[_var(shape, i, j)] = -1
                row[_var(shape, i + 1, j)] = 1
                lp.add(row, "<=", 0)
    lp.add([1] * (k * c), "=", 1)
    for (a, b), (a2, b2) in zip(corners, corners[1:]):
        row = [0] * (k * c)
        for i, j in _diagonal_positions(shape, a, b):
            row[_var(shape, i, j)] += 1
        for i, j in _diagonal_positions(shape, a2, b2):
            row[_var(shape, i, j)] -= 1
        lp.add(row, "=", 0)
    return lp


def _solve(lam: Partition) -> LPSolution:
    solution = solve_max(build_lp(lam))
    if solution.status != "optimal":
        raise RuntimeError(
            f"internal: the valuation polytope program came back {solution.status}"
        )
    return solution


def arnold_multiplicity(lam: Partition) -> Fraction:
    """Maximum of ord(lambda) over normalized Schubert valuations."""
    return Fraction(_solve(lam).value)


def arnold_witness(lam: Partition) -> tuple[Fraction, tuple[tuple[Fraction, ...], ...]]:
    """Arnold multiplicity together with a maximizing plane R-partition."""
    solution = _solve(lam)
    c = lam.shape.cols
    vertex = tuple(
        tuple(solution.vertex[r * c + j] for j in range(c)) for r in range(lam.shape.k)
    )
    return Fraction(solution.value), vertex


def integer_witness(lam: Partition) -> PlanePartition:
    """The maximizing vertex scaled by the least common denominator.

    The result is an integer plane partition beta with
    ord(lambda)(beta) / |beta| equal to the Arnold multiplicity.
    """
    value, vertex = arnold_witness(lam)
    scale = lcm(*(entry.denominator for row in vertex for entry in row))
    rows = [[int(entry * scale) for entry in row] for row in vertex]
    return PlanePartition(rows, lam.shape)


def lct(lam: Partition) -> Fraction:
    """Log canonical threshold of the pair (Grassmannian, Schubert variety)."""
    return 1 / arnold_multiplicity(lam)


def lct_rectangular(a: int, b: int, shape: GrassmannShape) -> Fraction:
    """Closed form for the threshold of a rectangular diagram (b^a):
    the minimum of (a+s)(b+s)/(s+1) as the rectangle grows diagonally."""
    k, c = shape.k, shape.cols
    if not (1 <= a <= k and 1 <= b <= c):
        raise ValueError(f"rectangle {a} x {b} does not fit in the {k} x {c} box")
    r = min(k - a, c - b)
    return min(Fraction((a + s) * (b + s), s + 1) for s in range(r + 1))


def lct_equals_codim(lam: Partition) -> bool:
    """Whether the threshold equals the codimension |lambda|, which happens
    exactly when the diagram has at most as many boxes as its rim."""
    return lam.size <= rim_size(lam)


def brute_force_arnold(lam: Partition, height_bound: int) -> Fraction:
    """Maximize ord(lambda)(beta)/|beta| over integer plane partitions of
    bounded height; an enumeration cross-check for the linear program.

    The maximum over all of SV(k,n) is attained at a rational vertex, so
    the bounded search equals the true Arnold multiplicity once the bound
    covers a scaled vertex.
    """
    if not lam:
        raise ValueError("the pair with the whole Grassmannian has no threshold")
    best = Fraction(0)
    for beta in all_plane_partitions(lam.shape, height_bound, include_zero=False):
        ratio = Fraction(ord_schubert(beta, lam), beta.volume)
        if ratio > best:
            best = ratio
    return best


def sv_extremal_points(shape: GrassmannShape) -> list[tuple[tuple[Fraction, ...], ...]]:
    """Extremal points of the polytope of normalized Schubert valuations:
    one-floor plane partitions mu scaled to volume one."""
    out = []
    for mu in all_partitions(shape):
        unit = Fraction(1, mu.size)
        out.append(
            tuple(
                tuple(unit if mu.has_cell(i, j) else Fraction(0) for j in range(1, shape.cols + 1))
                for i in range(1, shape.k + 1)
            )
        )
    return out


def distinct_floor_count(beta: PlanePartition) -> int:
    """Number of distinct floors of a finite plane partition."""
    return len(set(floors(beta)))
