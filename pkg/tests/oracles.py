"""Independent numerical oracles for the test suite.

These deliberately avoid the library's solver paths: the eigenvalue
oracle is a classical cyclic Jacobi rotation scheme, and the quadratic
form oracle is the literal double sum over node pairs.
"""

import numpy as np


def jacobi_eigh(matrix, tol=1e-13, max_sweeps=200):
    """Eigendecomposition of a small symmetric matrix by Jacobi rotations.

    Returns (values ascending, eigenvector columns). Meant for orders
    up to a few dozen; convergence is quadratic in the sweep count.
    """
    a = np.array(matrix, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.triu(a, 1) ** 2))
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= tol / max(n, 1):
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.sign(theta) if theta != 0 else 1.0
                t = t / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
                v = v @ rot
    order = np.argsort(np.diag(a), kind="stable")
    return np.diag(a)[order], v[:, order]


def dirichlet_double_sum(g, signal):
    """0.5 * sum_ij A_ij (x_i - x_j)^2 via the explicit pair loop."""
    a = g.adjacency()
    x = np.asarray(signal)
    total = 0.0
    for i in range(g.num_nodes):
        for j in range(g.num_nodes):
            total += a[i, j] * (x[i] - x[j]) ** 2
    return 0.5 * total


def rayleigh_probe_max(matrix, rng, trials=50):
    """Largest quadratic form over random unit vectors."""
    n = matrix.shape[0]
    best = -np.inf
    for _ in range(trials):
        v = rng.standard_normal(n)
        v /= np.linalg.norm(v)
        best = max(best, float(v @ matrix @ v))
    return best


def match_up_to_sign(a, b):
    """Columnwise distance allowing a global sign flip per column."""
    diffs = []
    for k in range(a.shape[1]):
        diffs.append(
            min(
                np.linalg.norm(a[:, k] - b[:, k]),
                np.linalg.norm(a[:, k] + b[:, k]),
            )
        )
    return max(diffs)


def eigenvector_match(values, a, b, gap_tol=1e-8):
    """Worst eigenvector distance between two decompositions.

    Columns whose eigenvalue is simple are compared up to sign. Columns
    inside a degenerate cluster (neighboring eigenvalues closer than
    ``gap_tol``) are only determined up to rotation of the cluster, so
    those are compared as subspaces via their orthogonal projectors.
    Tree-like graphs produce exact degeneracies structurally (two
    leaves on one hub pin a normalized-Laplacian eigenvalue at 1), so
    this case is not exotic.
    """
    values = np.asarray(values)
    clusters = []
    start = 0
    for k in range(1, values.size + 1):
        if k == values.size or values[k] - values[k - 1] > gap_tol:
            clusters.append(list(range(start, k)))
            start = k
    worst = 0.0
    for cluster in clusters:
        if len(cluster) == 1:
            k = cluster[0]
            worst = max(
                worst,
                min(
                    np.linalg.norm(a[:, k] - b[:, k]),
                    np.linalg.norm(a[:, k] + b[:, k]),
                ),
            )
        else:
            pa = a[:, cluster] @ a[:, cluster].T
            pb = b[:, cluster] @ b[:, cluster].T
            worst = max(worst, float(np.linalg.norm(pa - pb, 2)))
    return worst
