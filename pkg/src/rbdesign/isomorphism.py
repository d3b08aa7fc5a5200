"""Design isomorphism, automorphism group orders, and structural predicates.

Two block designs are isomorphic when a variety permutation plus a block
permutation maps one onto the other.  That is graph isomorphism of the
bipartite variety-block incidence graph, with repeated blocks collapsed
into one vertex colored by multiplicity (so a variety permutation
determines the block permutation and the graph's automorphism group is
exactly the design's variety-permutation group).

The Sylvester-design predicate checks that a 36-variety, 48-block design
has concurrence 2 exactly on the edges of a graph isomorphic to the
Sylvester graph and 1 elsewhere, returning the witness permutation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .canon import CanonicalLabeling, canonical_labeling
from .core import (
    BlockDesign,
    ResolvableDesign,
    ShapeMismatchError,
    concurrence_matrix,
    require_valid,
)
from .efficiency import design_parameters, scaled_polynomial
from .sylvester import Graph36, sylvester_graph


@dataclass(frozen=True)
class CanonicalForm:
    """Label-independent fingerprint: equal iff designs are isomorphic."""

    certificate: bytes
    variety_labeling: tuple[int, ...]  # variety i+1 -> canonical slot
    group_order: int


def _incidence_graph(design: ResolvableDesign | BlockDesign) -> tuple[list[list[int]], list[int], int]:
    """Colored bipartite incidence graph (varieties color 0, blocks colored
    by multiplicity).  Returns (adjacency, colors, v)."""
    if isinstance(design, ResolvableDesign):
        require_valid(design)
        v = design.v
        blocks = design.blocks()
    else:
        v = design.v
        blocks = design.blocks
    multiplicity = Counter(blocks)
    distinct = sorted(multiplicity)
    adj: list[list[int]] = [[] for _ in range(v + len(distinct))]
    colors = [0] * v + [multiplicity[b] for b in distinct]
    for bi, block in enumerate(distinct):
        for x in block:
            adj[x - 1].append(v + bi)
            adj[v + bi].append(x - 1)
    return adj, colors, v


@lru_cache(maxsize=512)
def canonical_form(design: ResolvableDesign | BlockDesign) -> CanonicalForm:
    """Canonical form via the colored incidence graph."""
    adj, colors, v = _incidence_graph(design)
    result = canonical_labeling(adj, colors)
    return CanonicalForm(
        certificate=result.certificate,
        variety_labeling=result.labeling[:v],
        group_order=result.group.order(),
    )


def same_spectrum(d1, d2) -> bool:
    """Exact equality of canonical-efficiency-factor multisets.

    Compared through the characteristic polynomials of the scaled
    information matrices, which is both stronger and cheaper than root
    comparison."""
    return scaled_polynomial(d1) == scaled_polynomial(d2)


def _shape(design) -> tuple[int, int, int]:
    return design_parameters(design)


def are_isomorphic(d1, d2) -> bool:
    """Isomorphism test with cheap invariant rejection before canonization.

    Shape mismatch (v, r, k) is simply non-isomorphic; then concurrence
    row multisets and the spectrum must agree before certificates are
    compared."""
    if _shape(d1) != _shape(d2):
        return False
    m1, m2 = concurrence_matrix(d1), concurrence_matrix(d2)
    rows1 = sorted(tuple(sorted(row)) for row in m1.tolist())
    rows2 = sorted(tuple(sorted(row)) for row in m2.tolist())
    if rows1 != rows2:
        return False
    if not same_spectrum(d1, d2):
        return False
    return canonical_form(d1).certificate == canonical_form(d2).certificate


def automorphism_order(design) -> int:
    """Order of the variety-permutation group preserving the block multiset."""
    return canonical_form(design).group_order


def _graph_canonical(graph_adj: list[list[int]]) -> CanonicalLabeling:
    return canonical_labeling(graph_adj, [0] * len(graph_adj))


@dataclass(frozen=True)
class SylvesterWitness:
    """Variety permutation carrying the design's concurrence-2 pairs onto
    the Sylvester graph's edges; perm[i-1] is the image of variety i."""

    permutation: tuple[int, ...]


def is_sylvester_design(design: ResolvableDesign) -> SylvesterWitness | None:
    """Test for concurrence matrix 7I + J + Adj(Sylvester graph) up to a
    variety permutation.

    Requires v=36, k=6, r=8 (diagonal 8, off-diagonal in {1, 2}); the
    concurrence-2 pairs must then form a graph isomorphic to the Sylvester
    graph.  Returns a verified witness permutation, or None."""
    v, r, k = design_parameters(design)
    if (v, r, k) != (36, 8, 6):
        raise ShapeMismatchError(f"Sylvester designs have v=36, k=6, r=8; got v={v}, k={k}, r={r}")
    lam = concurrence_matrix(design)
    off = lam[~np.eye(36, dtype=bool)]
    if not set(np.unique(off).tolist()) <= {1, 2}:
        return None
    conc2 = [[j for j in range(36) if i != j and lam[i, j] == 2] for i in range(36)]
    if any(len(row) != 5 for row in conc2):
        return None
    sigma = sylvester_graph()
    sigma_adj = [[y - 1 for y in sigma.neighbors(x)] for x in range(1, 37)]
    c_design = _graph_canonical(conc2)
    c_sigma = _graph_canonical(sigma_adj)
    if c_design.certificate != c_sigma.certificate:
        return None
    # canonical slots line up: design vertex -> slot -> sigma vertex
    slot_to_sigma = [0] * 36
    for vertex, slot in enumerate(c_sigma.labeling):
        slot_to_sigma[slot] = vertex
    perm = tuple(slot_to_sigma[c_design.labeling[i]] + 1 for i in range(36))
    sigma_edges = sigma.edges
    for i in range(36):
        for j in conc2[i]:
            u, w = perm[i], perm[j]
            assert (min(u, w), max(u, w)) in sigma_edges, "witness failed verification"
    return SylvesterWitness(permutation=perm)


def graph_automorphism_order(graph: Graph36) -> int:
    """Automorphism group order of a Graph36 (e.g. the Sylvester graph)."""
    adj = [[y - 1 for y in graph.neighbors(x)] for x in range(1, 37)]
    return _graph_canonical(adj).group.order()


def concurrence_equivalent(d1, d2) -> bool:
    """Is there a variety permutation taking one concurrence matrix to the
    other?  Encodes each matrix as a graph with an auxiliary vertex per
    concurrent pair, colored by the concurrence count, and compares
    canonical certificates."""
    m1, m2 = concurrence_matrix(d1), concurrence_matrix(d2)
    if m1.shape != m2.shape:
        return False
    if sorted(np.unique(m1).tolist()) != sorted(np.unique(m2).tolist()):
        return False

    def encode(lam):
        n = lam.shape[0]
        adj: list[list[int]] = [[] for _ in range(n)]
        colors = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if lam[i, j] == 0:
                    continue
                bond = len(adj)
                adj.append([i, j])
                colors.append(int(lam[i, j]))
                adj[i].append(bond)
                adj[j].append(bond)
        return canonical_labeling(adj, colors).certificate

    return encode(m1) == encode(m2)
