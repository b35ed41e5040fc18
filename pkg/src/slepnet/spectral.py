"""Truncated eigendecomposition of graph operators and the graph Fourier pair.

Dense symmetric decomposition is the default at desk scale; an ARPACK
path takes over for large operators. Output is deterministic: ascending
eigenvalues, a fixed per-column sign rule, and a fixed start vector for
the iterative solver.
"""

import warnings
from dataclasses import dataclass, replace

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import (
    ConvergenceFailureError,
    DimensionMismatchError,
    DisconnectedGraphError,
    TruncationDegeneracyWarning,
)
from .graph import connected_components, normalized_laplacian
from .tolerances import CONNECTIVITY_TOL, DEGENERACY_TOL

# Above this size the dense solver stops being the obvious choice.
DENSE_CUTOFF = 2000


@dataclass(frozen=True, eq=False)
class SpectralBasis:
    """The k smallest eigenpairs of a symmetric graph operator.

    ``vectors`` holds orthonormal eigenvectors as columns in ascending
    eigenvalue order; ``values`` is the matching eigenvalue vector. Sign
    is canonical: each column's largest-magnitude entry is positive,
    ties resolved toward the lowest node index.
    """

    num_nodes: int
    bandwidth: int
    vectors: np.ndarray
    values: np.ndarray

    def truncate(self, k):
        """Restrict to the k lowest eigenpairs (no recomputation)."""
        if not 1 <= k <= self.bandwidth:
            raise DimensionMismatchError(
                f"cannot truncate bandwidth {self.bandwidth} to {k}"
            )
        if k == self.bandwidth:
            return self
        return replace(
            self, bandwidth=k, vectors=self.vectors[:, :k], values=self.values[:k]
        )


def canonical_signs(columns, tie_rel=1e-12):
    """Flip column signs so the largest-magnitude entry is positive.

    Ties break toward the lowest index. Magnitudes within ``tie_rel``
    (relative) of the maximum count as tied, so symmetric eigenvectors
    whose equal-magnitude entries differ by rounding still anchor on
    the first of them. Returns a new array.
    """
    out = np.array(columns, copy=True)
    for c in range(out.shape[1]):
        mags = np.abs(out[:, c])
        peak = mags.max()
        anchor = int(np.argmax(mags >= peak * (1.0 - tie_rel)))
        if out[anchor, c] < 0:
            out[:, c] = -out[:, c]
    return out


def _dense_eigh(matrix, k):
    vals, vecs = np.linalg.eigh(matrix)
    boundary_gap = vals[k] - vals[k - 1] if k < vals.size else None
    return vals[:k], vecs[:, :k], boundary_gap


def _arpack_eigh(matrix, k):
    n = matrix.shape[0]
    # k+1 pairs when possible, to expose the gap at the truncation boundary.
    k_solve = min(k + 1, n - 1)
    v0 = np.full(n, 1.0 / np.sqrt(n))
    try:
        vals, vecs = spla.eigsh(matrix, k=k_solve, which="SA", v0=v0)
    except spla.ArpackNoConvergence as exc:
        raise ConvergenceFailureError(
            f"ARPACK failed to converge for {k_solve} eigenpairs of an "
            f"order-{n} operator"
        ) from exc
    order = np.argsort(vals, kind="stable")
    vals, vecs = vals[order], vecs[:, order]
    boundary_gap = vals[k] - vals[k - 1] if k < vals.size else None
    return vals[:k], vecs[:, :k], boundary_gap


def eigendecompose(matrix, k, dense_cutoff=DENSE_CUTOFF):
    """k smallest eigenpairs of a symmetric operator, as a SpectralBasis.

    Parameters
    ----------
    matrix : (N, N) ndarray or sparse matrix
        Symmetric operator (typically a normalized Laplacian).
    k : int
        Number of eigenpairs, 1 <= k <= N.
    dense_cutoff : int
        Largest N handled by the dense solver; beyond it an iterative
        solver with a fixed start vector is used.

    Emits :class:`TruncationDegeneracyWarning` when the k-th and
    (k+1)-th eigenvalues coincide within tolerance, since the retained
    subspace then cuts through a degenerate cluster.
    """
    n = matrix.shape[0]
    if matrix.shape[0] != matrix.shape[1]:
        raise DimensionMismatchError(f"operator must be square, got {matrix.shape}")
    if not 1 <= k <= n:
        raise DimensionMismatchError(f"k={k} outside [1, {n}]")

    if n <= dense_cutoff or k == n:
        dense = matrix.toarray() if sp.issparse(matrix) else np.asarray(matrix)
        vals, vecs, boundary_gap = _dense_eigh(dense, k)
    else:
        vals, vecs, boundary_gap = _arpack_eigh(matrix, k)

    if k >= 2 and vals[1] <= CONNECTIVITY_TOL:
        raise DisconnectedGraphError(
            "second eigenvalue is numerically zero; the graph is "
            "disconnected (or effectively so)"
        )
    if boundary_gap is not None and boundary_gap <= DEGENERACY_TOL:
        warnings.warn(
            f"eigenvalues {k} and {k + 1} are degenerate within "
            f"{DEGENERACY_TOL:g}; truncation cuts a degenerate cluster",
            TruncationDegeneracyWarning,
            stacklevel=2,
        )

    vecs = canonical_signs(vecs)
    vals = np.array(vals, copy=True)
    vecs.setflags(write=False)
    vals.setflags(write=False)
    return SpectralBasis(num_nodes=n, bandwidth=k, vectors=vecs, values=vals)


def spectral_basis(g, bandwidth, dense_cutoff=DENSE_CUTOFF):
    """Normalized-Laplacian basis of a graph, with a connectivity check.

    Refuses disconnected graphs up front, listing the components, since
    the band-limited machinery assumes a single component.
    """
    components = connected_components(g)
    if len(components) > 1:
        summary = "; ".join(
            "{" + ", ".join(g.label(v) for v in comp[:6])
            + (", ..." if len(comp) > 6 else "") + "}"
            for comp in components
        )
        raise DisconnectedGraphError(
            f"graph has {len(components)} components: {summary}"
        )
    lap = normalized_laplacian(g, sparse=g.num_nodes > dense_cutoff)
    return eigendecompose(lap, bandwidth, dense_cutoff=dense_cutoff)


def gft_forward(basis, signal):
    """Analysis transform: spectral coefficients of a node signal.

    Requires the full basis (bandwidth equal to the node count), so the
    transform is unitary and Parseval holds.
    """
    if basis.bandwidth != basis.num_nodes:
        raise DimensionMismatchError(
            f"forward transform needs a full basis; bandwidth "
            f"{basis.bandwidth} < {basis.num_nodes} nodes"
        )
    signal = np.asarray(signal, dtype=np.float64)
    if signal.shape != (basis.num_nodes,):
        raise DimensionMismatchError(
            f"signal length {signal.shape} does not match {basis.num_nodes} nodes"
        )
    return basis.vectors.T @ signal


def gft_inverse(basis, coefficients):
    """Synthesis transform: node signal from (possibly band-limited) coefficients."""
    coefficients = np.asarray(coefficients, dtype=np.float64)
    if coefficients.shape != (basis.bandwidth,):
        raise DimensionMismatchError(
            f"{coefficients.shape} coefficients for bandwidth {basis.bandwidth}"
        )
    return basis.vectors @ coefficients


def validate_basis(basis, matrix, tol_ortho=1e-10, tol_resid=1e-8):
    """Check orthonormality and eigen-residuals; raise on violation.

    Intended as a post-computation sanity gate; tolerances are
    overridable (see :mod:`slepnet.tolerances`).
    """
    gram = basis.vectors.T @ basis.vectors
    ortho_defect = np.max(np.abs(gram - np.eye(basis.bandwidth)))
    if ortho_defect > tol_ortho:
        raise ConvergenceFailureError(
            f"basis orthonormality defect {ortho_defect:.3e} exceeds {tol_ortho:g}"
        )
    if sp.issparse(matrix):
        applied = matrix @ basis.vectors
    else:
        applied = np.asarray(matrix) @ basis.vectors
    residual = applied - basis.vectors * basis.values
    worst = float(np.max(np.linalg.norm(residual, axis=0)))
    if worst > tol_resid:
        raise ConvergenceFailureError(
            f"eigen-residual {worst:.3e} exceeds {tol_resid:g}"
        )
