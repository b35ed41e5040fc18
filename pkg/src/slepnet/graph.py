"""Undirected weighted graphs and their Laplacian operators.

Edges are stored once per unordered pair in canonical (low, high) index
order. Matrices are assembled edgewise so that symmetry is exact by
construction, not merely up to rounding. Dense ``numpy`` arrays are the
default operator representation; pass ``sparse=True`` for a CSR matrix
when the node count warrants it.
"""

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .errors import (
    DuplicateEdgeError,
    IndexOutOfRangeError,
    NonPositiveWeightError,
    SelfLoopError,
    ZeroDegreeNodeError,
)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected weighted graph.

    Attributes
    ----------
    num_nodes : int
        Number of nodes N; indices run over [0, N).
    edge_index : (m, 2) int ndarray
        Canonical endpoints, ``edge_index[e, 0] < edge_index[e, 1]``.
    edge_weight : (m,) float ndarray
        Strictly positive weights, one per stored pair.
    node_ids : tuple of str, optional
        External identifiers, one per node, unique when present.
    """

    num_nodes: int
    edge_index: np.ndarray
    edge_weight: np.ndarray
    node_ids: tuple = None

    @property
    def num_edges(self):
        return self.edge_index.shape[0]

    def degrees(self):
        """Weighted degree of every node, d_i = sum_j A_ij."""
        d = np.zeros(self.num_nodes)
        np.add.at(d, self.edge_index[:, 0], self.edge_weight)
        np.add.at(d, self.edge_index[:, 1], self.edge_weight)
        return d

    def adjacency(self, sparse=False):
        """Symmetric adjacency matrix A."""
        i, j = self.edge_index[:, 0], self.edge_index[:, 1]
        if sparse:
            rows = np.concatenate([i, j])
            cols = np.concatenate([j, i])
            vals = np.concatenate([self.edge_weight, self.edge_weight])
            n = self.num_nodes
            return sp.coo_matrix((vals, (rows, cols)), shape=(n, n)).tocsr()
        a = np.zeros((self.num_nodes, self.num_nodes))
        a[i, j] = self.edge_weight
        a[j, i] = self.edge_weight
        return a

    def label(self, node):
        """External id of a node, falling back to the index as a string."""
        if self.node_ids is not None:
            return self.node_ids[node]
        return str(node)


def build_graph(edge_triples, num_nodes, node_ids=None):
    """Validate edge data and assemble a canonical :class:`Graph`.

    Parameters
    ----------
    edge_triples : iterable of (i, j, w)
        Undirected edges with positive weights. Each unordered pair may
        appear at most once; self-loops are rejected.
    num_nodes : int
        Node count N; every index must live in [0, N).
    node_ids : sequence of str, optional
        One unique external id per node.
    """
    if num_nodes < 1:
        raise IndexOutOfRangeError(f"num_nodes must be >= 1, got {num_nodes}")
    if node_ids is not None:
        node_ids = tuple(node_ids)
        if len(node_ids) != num_nodes:
            raise IndexOutOfRangeError(
                f"{len(node_ids)} node ids for {num_nodes} nodes"
            )
        if len(set(node_ids)) != num_nodes:
            raise DuplicateEdgeError("node ids are not unique")

    seen = set()
    index = []
    weight = []
    for i, j, w in edge_triples:
        i, j = int(i), int(j)
        if not (0 <= i < num_nodes and 0 <= j < num_nodes):
            raise IndexOutOfRangeError(
                f"edge ({i}, {j}) outside [0, {num_nodes})"
            )
        if i == j:
            raise SelfLoopError(f"self-loop at node {i}")
        w = float(w)
        if not np.isfinite(w) or w <= 0:
            raise NonPositiveWeightError(
                f"edge ({i}, {j}) has non-positive weight {w}"
            )
        pair = (i, j) if i < j else (j, i)
        if pair in seen:
            raise DuplicateEdgeError(f"duplicate undirected edge {pair}")
        seen.add(pair)
        index.append(pair)
        weight.append(w)

    edge_index = np.asarray(index, dtype=np.int64).reshape(len(index), 2)
    edge_weight = np.asarray(weight, dtype=np.float64)
    edge_index.setflags(write=False)
    edge_weight.setflags(write=False)
    return Graph(num_nodes, edge_index, edge_weight, node_ids)


def combinatorial_laplacian(g, sparse=False):
    """Combinatorial Laplacian D - A; rows sum to zero exactly."""
    d = g.degrees()
    i, j = g.edge_index[:, 0], g.edge_index[:, 1]
    if sparse:
        n = g.num_nodes
        rows = np.concatenate([i, j, np.arange(n)])
        cols = np.concatenate([j, i, np.arange(n)])
        vals = np.concatenate([-g.edge_weight, -g.edge_weight, d])
        return sp.coo_matrix((vals, (rows, cols)), shape=(n, n)).tocsr()
    lap = np.zeros((g.num_nodes, g.num_nodes))
    lap[i, j] = -g.edge_weight
    lap[j, i] = -g.edge_weight
    np.fill_diagonal(lap, d)
    return lap


def normalized_laplacian(g, sparse=False):
    """Symmetric normalized Laplacian with unit diagonal.

    Equal to D^{-1/2} (D - A) D^{-1/2}; eigenvalues lie in [0, 2]. Each
    off-diagonal entry is computed once and mirrored, so the result is
    exactly symmetric and the diagonal is exactly one.
    """
    d = g.degrees()
    zero = np.flatnonzero(d == 0)
    if zero.size:
        labels = ", ".join(g.label(int(k)) for k in zero[:8])
        raise ZeroDegreeNodeError(
            f"{zero.size} node(s) with zero degree (e.g. {labels})"
        )
    i, j = g.edge_index[:, 0], g.edge_index[:, 1]
    off = -g.edge_weight / np.sqrt(d[i] * d[j])
    if sparse:
        n = g.num_nodes
        rows = np.concatenate([i, j, np.arange(n)])
        cols = np.concatenate([j, i, np.arange(n)])
        vals = np.concatenate([off, off, np.ones(n)])
        return sp.coo_matrix((vals, (rows, cols)), shape=(n, n)).tocsr()
    lap = np.zeros((g.num_nodes, g.num_nodes))
    lap[i, j] = off
    lap[j, i] = off
    np.fill_diagonal(lap, 1.0)
    return lap


def connected_components(g):
    """Partition nodes into connected components.

    Returns a list of sorted index lists, ordered by smallest member.
    Spectral operations downstream require exactly one component.
    """
    neighbors = [[] for _ in range(g.num_nodes)]
    for (i, j) in g.edge_index:
        neighbors[i].append(int(j))
        neighbors[j].append(int(i))
    unseen = set(range(g.num_nodes))
    components = []
    while unseen:
        root = min(unseen)
        stack = [root]
        unseen.discard(root)
        comp = [root]
        while stack:
            node = stack.pop()
            for nb in neighbors[node]:
                if nb in unseen:
                    unseen.discard(nb)
                    comp.append(nb)
                    stack.append(nb)
        components.append(sorted(comp))
    return components
