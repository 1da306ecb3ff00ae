"""Planar networks whose path sums parametrize generic arcs of a stratum.

The standard network for G(k, n) is a grid: internal vertices v(i, j) for
1 <= i <= k, 1 <= j <= n-k, source i at the right end of row i, sink j at
the bottom of column j.  Horizontal edges run right to left, vertical edges
top to bottom, so paths are monotone staircases.  Every minor of the matrix
of path sums expands as a sum over vertex-disjoint path families with all
coefficients +1; consequently vanishing orders of minors can be computed
tropically, replacing products along a path by sums of exponents and the
outer sum by a minimum.

Grid positions, source labels, and sink labels are 1-based throughout.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import GrassmannShape, minor_of_multi_index, partition_from_multi_index
from .plane_partitions import ExtNat, PlanePartition, weight_exponents
from .series import SeriesMatrix, TruncatedSeries, big_cell_arc


class PlanarNetwork:
    """The staircase network of a shape, optionally with extra diagonal edges.

    A diagonal tagged (a, b) is the edge from v(a, b+1) down-left to
    v(a+1, b); the base network has none.
    """

    def __init__(self, shape: GrassmannShape, diagonals=()):
        self.shape = shape
        self.diagonals = frozenset((int(a), int(b)) for a, b in diagonals)
        for a, b in self.diagonals:
            if not (1 <= a <= shape.k and 1 <= b <= shape.cols):
                raise ValueError(f"diagonal tag ({a}, {b}) outside the box")
        self._path_cache: dict[tuple[int, int], tuple] = {}
        self._family_cache: dict[tuple, tuple] = {}

    def source(self, i: int) -> tuple[int, int]:
        if not 1 <= i <= self.shape.k:
            raise ValueError(f"no source {i}")
        return (i, self.shape.cols + 1)

    def sink(self, j: int) -> tuple[int, int]:
        if not 1 <= j <= self.shape.cols:
            raise ValueError(f"no sink {j}")
        return (self.shape.k + 1, j)

    def paths(self, i: int, j: int) -> tuple[tuple[tuple[int, int], ...], ...]:
        """All paths from source i to sink j, as vertex tuples."""
        if (i, j) in self._path_cache:
            return self._path_cache[(i, j)]
        k, c = self.shape.k, self.shape.cols
        out = []

        def walk(r: int, col: int, trail: list[tuple[int, int]]) -> None:
            if col < j:
                return
            if r == k + 1:
                if col == j:
                    out.append(tuple(trail))
                return
            if col >= 2:
                trail.append((r, col - 1))
                walk(r, col - 1, trail)
                trail.pop()
            if col <= c:
                trail.append((r + 1, col))
                walk(r + 1, col, trail)
                trail.pop()
            if col >= 2 and (r, col - 1) in self.diagonals:
                trail.append((r + 1, col - 1))
                walk(r + 1, col - 1, trail)
                trail.pop()

        start = self.source(i)
        self.sink(j)
        walk(start[0], start[1], [start])
        result = tuple(out)
        self._path_cache[(i, j)] = result
        return result

    def families(self, sources, sinks):
        """Vertex-disjoint path families joining sources to sinks in order.

        Sources and sinks must be strictly increasing; the u-th source is
        joined to the u-th sink, the only pairing a disjoint family in a
        planar network can use.
        """
        sources, sinks = tuple(sources), tuple(sinks)
        if len(sources) != len(sinks):
            raise ValueError("need equally many sources and sinks")
        if any(sources[u] >= sources[u + 1] for u in range(len(sources) - 1)) or any(
            sinks[u] >= sinks[u + 1] for u in range(len(sinks) - 1)
        ):
            raise ValueError("sources and sinks must be strictly increasing")
        if (sources, sinks) in self._family_cache:
            return self._family_cache[(sources, sinks)]
        found = []

        def extend(u: int, used: set, chosen: list) -> None:
            if u == len(sources):
                found.append(tuple(chosen))
                return
            for path in self.paths(sources[u], sinks[u]):
                if used.isdisjoint(path):
                    chosen.append(path)
                    extend(u + 1, used | set(path), chosen)
                    chosen.pop()

        extend(0, set(), [])
        result = tuple(found)
        self._family_cache[(sources, sinks)] = result
        return result

    def __repr__(self) -> str:
        extra = f", diagonals={sorted(self.diagonals)}" if self.diagonals else ""
        return f"PlanarNetwork({self.shape!r}{extra})"


@lru_cache(maxsize=None)
def gamma0(shape: GrassmannShape) -> PlanarNetwork:
    """The plain staircase network, no diagonals.

    Cached per shape so repeated order computations share the path and
    family enumerations.
    """
    return PlanarNetwork(shape)


def _edge_for_position(shape: GrassmannShape, i: int, j: int):
    """Where the (i, j) essential weight sits: on the vertex when the box
    below-right of (i, j) is square, on the incoming horizontal edge when it
    is wider than tall, on the outgoing vertical edge when taller than wide."""
    below, right = shape.k - i, shape.cols - j
    if below == right:
        return ("vertex", (i, j))
    if below < right:
        return ("edge", ((i, j + 1), (i, j)))
    return ("edge", ((i, j), (i + 1, j)))


class EssentialWeighting:
    """Weights on the essential positions of the staircase network.

    Built from a k x (n-k) matrix of series; every other edge and vertex
    has weight one.  ``extra_edges`` allows weighting added diagonal edges.
    """

    def __init__(self, shape: GrassmannShape, w_matrix, extra_edges=None):
        w_matrix = tuple(tuple(row) for row in w_matrix)
        if len(w_matrix) != shape.k or any(len(row) != shape.cols for row in w_matrix):
            raise ValueError(f"expected a {shape.k} x {shape.cols} weight matrix")
        self.shape = shape
        self.vertex_weights: dict = {}
        self.edge_weights: dict = {}
        for i in range(1, shape.k + 1):
            for j in range(1, shape.cols + 1):
                kind, where = _edge_for_position(shape, i, j)
                w = w_matrix[i - 1][j - 1]
                if kind == "vertex":
                    self.vertex_weights[where] = w
                else:
                    self.edge_weights[where] = w
        if extra_edges:
            self.edge_weights.update(extra_edges)
        some = next(iter(self.vertex_weights.values()), None) or next(
            iter(self.edge_weights.values())
        )
        self.precision = some.precision

    def path_weight(self, path) -> TruncatedSeries:
        acc = TruncatedSeries.one(self.precision)
        for v in path:
            w = self.vertex_weights.get(v)
            if w is not None:
                acc = acc * w
        for tail, head in zip(path, path[1:]):
            w = self.edge_weights.get((tail, head))
            if w is not None:
                acc = acc * w
        return acc


def essential_weighting(beta: PlanePartition, precision: int = 16, seed: int | None = None) -> EssentialWeighting:
    """The weighting realizing beta: weight t^c at each essential position,
    where c is the exponent matrix of beta, times a unit.

    ``seed=None`` takes every unit to be 1; an integer seed draws positive
    integer units reproducibly.
    """
    if not beta.is_finite:
        raise ValueError("infinite entries cannot be realized at finite precision")
    exps = weight_exponents(beta)
    units = _unit_matrix(beta.shape, seed)
    w = [
        [
            TruncatedSeries.t_power(exps[i][j], precision, coeff=units[i][j])
            for j in range(beta.shape.cols)
        ]
        for i in range(beta.shape.k)
    ]
    return EssentialWeighting(beta.shape, w)


def _unit_matrix(shape: GrassmannShape, seed: int | None):
    if seed is None:
        return [[1] * shape.cols for _ in range(shape.k)]
    import random

    rng = random.Random(seed)
    return [
        [rng.randint(1, 999983) for _ in range(shape.cols)] for _ in range(shape.k)
    ]


def weight_matrix(network: PlanarNetwork, weighting: EssentialWeighting) -> SeriesMatrix:
    """Matrix of path sums: entry (i, j) adds the weights of all paths from
    source i to sink j."""
    k, c = network.shape.k, network.shape.cols
    rows = []
    for i in range(1, k + 1):
        row = []
        for j in range(1, c + 1):
            acc = TruncatedSeries.zero(weighting.precision)
            for path in network.paths(i, j):
                acc = acc + weighting.path_weight(path)
            row.append(acc)
        rows.append(row)
    return SeriesMatrix(rows)


def lindstrom_minor(
    network: PlanarNetwork, weighting: EssentialWeighting, sources, sinks
) -> TruncatedSeries:
    """The [sources|sinks]-minor of the weight matrix, computed as the sum
    over vertex-disjoint path families.  All signs are +1: in a planar
    network no cancelling permutation survives."""
    acc = TruncatedSeries.one(weighting.precision)
    if not tuple(sources):
        return acc
    acc = TruncatedSeries.zero(weighting.precision)
    for family in network.families(sources, sinks):
        prod = TruncatedSeries.one(weighting.precision)
        for path in family:
            prod = prod * weighting.path_weight(path)
        acc = acc + prod
    return acc


def _tropical_placement(beta: PlanePartition):
    exps = weight_exponents(beta)
    vertex: dict = {}
    edge: dict = {}
    for i in range(1, beta.shape.k + 1):
        for j in range(1, beta.shape.cols + 1):
            kind, where = _edge_for_position(beta.shape, i, j)
            e = exps[i - 1][j - 1]
            if kind == "vertex":
                vertex[where] = e
            else:
                edge[where] = e
    return vertex, edge


def tropical_minor_order(beta: PlanePartition, sources, sinks) -> ExtNat:
    """Vanishing order of the [sources|sinks]-minor of any arc generic for
    beta: minimum over vertex-disjoint path families of the summed exponents.

    Exactness rests on the positivity of the path-family expansion: with
    all family weights entering with coefficient +1, the smallest exponent
    cannot cancel.  Empty index sets give the empty minor, order 0.
    """
    sources, sinks = tuple(sources), tuple(sinks)
    if not sources and not sinks:
        return 0
    vertex, edge = _tropical_placement(beta)
    network = gamma0(beta.shape)
    best: ExtNat | None = None
    for family in network.families(sources, sinks):
        total: ExtNat = 0
        for path in family:
            for v in path:
                if v in vertex:
                    total = total + vertex[v]
            for pair in zip(path, path[1:]):
                if pair in edge:
                    total = total + edge[pair]
        if best is None or total < best:
            best = total
    if best is None:
        raise RuntimeError("internal: no path family in the staircase network")
    return best


def plucker_ord(beta: PlanePartition, entries) -> ExtNat:
    """Vanishing order of a Pluecker coordinate on the stratum of beta.

    The multi-index is translated to a minor of the affine matrix of the
    big cell, then evaluated tropically.
    """
    partition_from_multi_index(entries, beta.shape)
    rows, cols = minor_of_multi_index(entries, beta.shape)
    return tropical_minor_order(beta, rows, cols)


def generic_arc(
    beta: PlanePartition, precision: int = 16, seed: int | None = None
) -> SeriesMatrix:
    """A concrete arc generic for beta, in big-cell form (k x n).

    The affine block is the weight matrix of the essential weighting; the
    unit coefficients are all 1 by default or drawn from a seeded generator.
    Infinite entries are rejected: they have no finite-precision realization.
    """
    net = gamma0(beta.shape)
    weighting = essential_weighting(beta, precision, seed)
    return big_cell_arc(weight_matrix(net, weighting))
