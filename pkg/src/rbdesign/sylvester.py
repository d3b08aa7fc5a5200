"""The Sylvester graph: 36 vertices, 5-regular, girth 5, built from K6.

Construction: K6 on points 1..6 has 15 edges (duads), 15 perfect matchings
(one-factors), and exactly six one-factorizations d1..d6, any two of which
share exactly one one-factor.  Vertices of the graph are the cells of a 6x6
array whose rows are the K6 points and whose columns are the
one-factorizations; the shared one-factor of columns di, dj contributes six
edges between those columns, pairing rows by its duads.

Cells map to variety numbers row-major: variety = 6*(row-1) + column.  A
starfish is a vertex plus its five neighbours (one in each other row and
column); the six starfish centred on one column partition all 36 cells (a
galaxy) and underpin the gamma design family.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import ShapeMismatchError

POINTS = (1, 2, 3, 4, 5, 6)

Duad = tuple[int, int]
OneFactor = tuple[Duad, Duad, Duad]


@dataclass(frozen=True)
class OneFactorization:
    """Five one-factors covering each K6 edge exactly once."""

    label: str
    factors: tuple[OneFactor, ...]

    def __post_init__(self):
        duads = [d for f in self.factors for d in f]
        if len(self.factors) != 5 or sorted(duads) != sorted(one_factors_duads()):
            raise ShapeMismatchError(f"not a one-factorization: {self.factors}")

    def factor_set(self) -> frozenset[OneFactor]:
        return frozenset(self.factors)

    def __str__(self) -> str:
        return self.label + ": " + " || ".join(
            "|".join(f"{a}{b}" for a, b in f) for f in self.factors
        )


@lru_cache(maxsize=1)
def one_factors_duads() -> tuple[Duad, ...]:
    return tuple(itertools.combinations(POINTS, 2))


@lru_cache(maxsize=1)
def one_factors() -> tuple[OneFactor, ...]:
    """All 15 perfect matchings of K6, each as a sorted triple of duads."""
    out = []

    def grow(remaining: tuple[int, ...], chosen: list[Duad]):
        if not remaining:
            out.append(tuple(chosen))
            return
        a = remaining[0]
        for b in remaining[1:]:
            rest = tuple(x for x in remaining if x not in (a, b))
            chosen.append((a, b))
            grow(rest, chosen)
            chosen.pop()

    grow(POINTS, [])
    return tuple(sorted(out))


def _factor(text: str) -> OneFactor:
    duads = tuple(sorted(tuple(sorted(int(c) for c in part)) for part in text.split("|")))
    return duads  # type: ignore[return-value]


# Canonical order and labels for the six one-factorizations.  This fixes
# which column of the array is d1, d2, ..., and therefore the variety
# numbering every design family uses; the enumeration below is checked to
# produce exactly this set.
_CANONICAL_ROWS = (
    ("d1", ("12|36|45", "13|24|56", "14|35|26", "15|23|46", "16|25|34")),
    ("d2", ("12|36|45", "13|25|46", "14|23|56", "15|26|34", "16|24|35")),
    ("d3", ("12|34|56", "13|25|46", "14|35|26", "15|24|36", "16|23|45")),
    ("d4", ("12|34|56", "13|26|45", "14|25|36", "15|23|46", "16|24|35")),
    ("d5", ("12|46|35", "13|26|45", "14|23|56", "15|24|36", "16|25|34")),
    ("d6", ("12|46|35", "13|24|56", "14|25|36", "15|26|34", "16|23|45")),
)


@lru_cache(maxsize=1)
def enumerate_one_factorizations() -> tuple[OneFactorization, ...]:
    """Exhaustively enumerate the one-factorizations of K6 (exactly six).

    Backtracking over one-factors through the lowest uncovered edge; the
    result is returned in the canonical d1..d6 order, and it is an error if
    the enumeration disagrees with that canonical set.
    """
    edges = one_factors_duads()
    found: set[tuple[OneFactor, ...]] = set()

    def grow(chosen: list[OneFactor], covered: set[Duad]):
        if len(chosen) == 5:
            found.add(tuple(sorted(chosen)))
            return
        low = next(e for e in edges if e not in covered)
        for f in one_factors():
            if low in f and not covered.intersection(f):
                chosen.append(f)
                grow(chosen, covered | set(f))
                chosen.pop()

    grow([], set())
    canonical = tuple(
        OneFactorization(label, tuple(sorted(_factor(t) for t in row)))
        for label, row in _CANONICAL_ROWS
    )
    assert found == {f.factors for f in canonical}, "enumeration disagrees with canonical set"
    return canonical


def common_factor(di: OneFactorization, dj: OneFactorization) -> OneFactor:
    """The unique one-factor shared by two distinct one-factorizations."""
    if di == dj:
        raise ShapeMismatchError("common_factor requires two distinct one-factorizations")
    shared = di.factor_set() & dj.factor_set()
    assert len(shared) == 1, (di.label, dj.label, shared)
    return next(iter(shared))


def variety_of_cell(row: int, col: int) -> int:
    """Variety number of array cell (row, column), both 1..6."""
    return 6 * (row - 1) + col


def cell_of_variety(x: int) -> tuple[int, int]:
    return (x - 1) // 6 + 1, (x - 1) % 6 + 1


@dataclass(frozen=True)
class Graph36:
    """Simple undirected graph on the 36 array cells (as variety numbers)."""

    edges: frozenset[tuple[int, int]]  # each edge as (u, v) with u < v

    def neighbors(self, x: int) -> tuple[int, ...]:
        return tuple(sorted(
            v if u == x else u for (u, v) in self.edges if x in (u, v)
        ))

    def adjacency_matrix(self) -> np.ndarray:
        adj = np.zeros((36, 36), dtype=np.int64)
        for u, v in self.edges:
            adj[u - 1, v - 1] = adj[v - 1, u - 1] = 1
        return adj

    def edge_list(self) -> list[tuple[int, int]]:
        """Sorted 1-based edge list for export."""
        return sorted(self.edges)


@lru_cache(maxsize=1)
def sylvester_graph() -> Graph36:
    """Build the graph from the canonical one-factorizations."""
    ds = enumerate_one_factorizations()
    edges = set()
    for i, j in itertools.combinations(range(6), 2):
        shared = common_factor(ds[i], ds[j])
        for a, b in shared:
            for u, v in (
                (variety_of_cell(a, i + 1), variety_of_cell(b, j + 1)),
                (variety_of_cell(b, i + 1), variety_of_cell(a, j + 1)),
            ):
                edges.add((min(u, v), max(u, v)))
    return Graph36(edges=frozenset(edges))


@dataclass(frozen=True)
class StructureCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class SylvesterReport:
    checks: tuple[StructureCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[StructureCheck]:
        return [c for c in self.checks if not c.ok]


def verify_sylvester(graph: Graph36) -> SylvesterReport:
    """Run every structural check; failures name the property and a witness."""
    checks: list[StructureCheck] = []
    adj = graph.adjacency_matrix()
    deg = adj.sum(axis=1)

    bad = [i + 1 for i in range(36) if deg[i] != 5]
    checks.append(StructureCheck(
        "5-regular", not bad, f"vertices with degree != 5: {bad}" if bad else ""))

    n_edges = int(adj.sum()) // 2
    checks.append(StructureCheck(
        "90 edges", n_edges == 90, f"found {n_edges}" if n_edges != 90 else ""))

    a2 = adj @ adj
    tri = [(i + 1, j + 1) for i in range(36) for j in range(i + 1, 36)
           if adj[i, j] and a2[i, j]]
    quad = [(i + 1, j + 1) for i in range(36) for j in range(i + 1, 36)
            if a2[i, j] >= 2]
    checks.append(StructureCheck(
        "no triangles", not tri, f"adjacent pair with common neighbour: {tri[:1]}" if tri else ""))
    checks.append(StructureCheck(
        "no quadrilaterals", not quad, f"pair with two common neighbours: {quad[:1]}" if quad else ""))

    bad_rc = []
    for x in range(1, 37):
        nb = graph.neighbors(x)
        rows = {cell_of_variety(y)[0] for y in nb}
        cols = {cell_of_variety(y)[1] for y in nb}
        r0, c0 = cell_of_variety(x)
        if len(rows) != 5 or r0 in rows or len(cols) != 5 or c0 in cols:
            bad_rc.append(x)
    checks.append(StructureCheck(
        "neighbours hit 5 distinct other rows and columns", not bad_rc,
        f"violating vertices: {bad_rc}" if bad_rc else ""))

    bad_d2 = []
    for x in range(1, 37):
        r0, c0 = cell_of_variety(x)
        reach = {x} | set(graph.neighbors(x))
        for y in graph.neighbors(x):
            reach.update(graph.neighbors(y))
        expect = {x} | {
            y for y in range(1, 37)
            if cell_of_variety(y)[0] != r0 and cell_of_variety(y)[1] != c0
        }
        if reach != expect:
            bad_d2.append(x)
    checks.append(StructureCheck(
        "distance <= 2 covers exactly the off-row, off-column cells", not bad_d2,
        f"violating vertices: {bad_d2}" if bad_d2 else ""))

    checks.append(_association_scheme_check(adj))
    return SylvesterReport(checks=tuple(checks))


def _association_scheme_check(adj: np.ndarray) -> StructureCheck:
    """Same row / same column / adjacent / other must close under products.

    Exact integer test: every product of two relation matrices must be a
    non-negative integer combination of the five relation matrices, i.e.
    constant on each relation class.
    """
    same_row = np.zeros((36, 36), dtype=np.int64)
    same_col = np.zeros((36, 36), dtype=np.int64)
    for x in range(1, 37):
        for y in range(1, 37):
            if x == y:
                continue
            rx, cx = cell_of_variety(x)
            ry, cy = cell_of_variety(y)
            if rx == ry:
                same_row[x - 1, y - 1] = 1
            if cx == cy:
                same_col[x - 1, y - 1] = 1
    identity = np.eye(36, dtype=np.int64)
    other = np.ones((36, 36), dtype=np.int64) - identity - same_row - same_col - adj
    relations = [identity, same_row, same_col, adj, other]
    if np.any(other < 0):
        return StructureCheck("association scheme", False, "relation classes overlap")
    for i, ri in enumerate(relations):
        for j, rj in enumerate(relations):
            product = ri @ rj
            for m, rel in enumerate(relations):
                vals = set(product[rel == 1].tolist())
                if len(vals) > 1:
                    return StructureCheck(
                        "association scheme", False,
                        f"product of relations {i},{j} not constant on class {m}: {sorted(vals)}")
    return StructureCheck("association scheme", True)


def starfish(graph: Graph36, center: int) -> frozenset[int]:
    """A vertex together with its five neighbours."""
    return frozenset((center, *graph.neighbors(center)))


def galaxy(graph: Graph36, column: int) -> tuple[tuple[int, ...], ...]:
    """The six starfish centred on one column's cells, ordered by centre row.

    They partition the 36 cells, every starfish meeting each row and each
    column exactly once (the galaxy reads as a Latin square); both facts are
    asserted because the design families rely on them.
    """
    if not 1 <= column <= 6:
        raise ShapeMismatchError(f"column must be 1..6, got {column}")
    blocks = tuple(
        tuple(sorted(starfish(graph, variety_of_cell(row, column))))
        for row in range(1, 7)
    )
    seen = [x for b in blocks for x in b]
    assert sorted(seen) == list(range(1, 37)), "galaxy does not partition the cells"
    for b in blocks:
        assert sorted(cell_of_variety(x)[0] for x in b) == [1, 2, 3, 4, 5, 6]
        assert sorted(cell_of_variety(x)[1] for x in b) == [1, 2, 3, 4, 5, 6]
    return blocks
