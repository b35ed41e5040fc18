import numpy as np
import pytest

from slepnet.graph import build_graph


@pytest.fixture
def p3():
    """Path on three nodes, unit weights; degrees (1, 2, 1)."""
    return build_graph([(0, 1, 1.0), (1, 2, 1.0)], 3)


@pytest.fixture
def k3():
    """Triangle, unit weights."""
    return build_graph([(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)], 3)


def random_connected_graph(rng, n=None, max_n=60):
    """Random weighted connected graph: spanning tree plus extra edges.

    Continuous weights keep the spectrum simple (no accidental
    degeneracies from symmetry).
    """
    if n is None:
        n = int(rng.integers(5, max_n + 1))
    edges = {}
    for k in range(1, n):
        j = int(rng.integers(0, k))
        edges[(j, k)] = float(rng.uniform(0.5, 2.0))
    for _ in range(int(rng.integers(0, 2 * n))):
        a, b = (int(v) for v in rng.integers(0, n, size=2))
        if a == b:
            continue
        pair = (min(a, b), max(a, b))
        if pair not in edges:
            edges[pair] = float(rng.uniform(0.5, 2.0))
    triples = [(i, j, w) for (i, j), w in edges.items()]
    return build_graph(triples, n)


def random_selection(rng, n):
    size = int(rng.integers(1, n))
    members = rng.choice(n, size=size, replace=False)
    return tuple(int(m) for m in members)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


# Small named graphs for the brute-force oracle gate (all N <= 8).
def small_graph_catalog():
    catalog = {
        "p2": build_graph([(0, 1, 2.5)], 2),
        "p3": build_graph([(0, 1, 1.0), (1, 2, 1.0)], 3),
        "k3": build_graph([(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)], 3),
        "p4w": build_graph([(0, 1, 0.7), (1, 2, 1.9), (2, 3, 1.3)], 4),
        "star5": build_graph([(0, k, 1.0 + 0.1 * k) for k in range(1, 5)], 5),
        "c6": build_graph([(k, (k + 1) % 6, 1.0 + 0.05 * k) for k in range(6)], 6),
    }
    gen = np.random.default_rng(99)
    catalog["rand7"] = random_connected_graph(gen, n=7)
    catalog["rand8"] = random_connected_graph(gen, n=8)
    return catalog
