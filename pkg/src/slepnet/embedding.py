"""Low-dimensional node coordinates.

Two projections: the classical Laplacian embedding (eigenvectors with
the smallest nonzero eigenvalues) and a subset-aware summary that
projects a concentrated basis onto the top eigenvectors of its
restricted Gram matrix, maximizing the variance the axes capture inside
the selected subgraph.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    DimensionTooLargeError,
    InsufficientBandwidthError,
)
from .spectral import canonical_signs


@dataclass(frozen=True, eq=False)
class EmbeddingCoords:
    """Per-node coordinates with axis provenance.

    ``coords`` is N x d; ``axis_weights`` holds the d retained
    eigenvalues of the projection basis (nonincreasing for summary
    projections).
    """

    coords: np.ndarray
    axis_labels: tuple
    axis_weights: np.ndarray

    @property
    def dims(self):
        return self.coords.shape[1]


def laplacian_embedding(basis, d=2):
    """Map nodes onto the d eigenvectors with smallest nonzero eigenvalues.

    Skips the constant direction (the zero-eigenvalue column), so axis 1
    is the Fiedler vector. Needs bandwidth >= d + 1.
    """
    if d < 1:
        raise InsufficientBandwidthError(f"d must be >= 1, got {d}")
    if basis.bandwidth < d + 1:
        raise InsufficientBandwidthError(
            f"embedding in {d} dimensions needs bandwidth >= {d + 1}, "
            f"basis holds {basis.bandwidth}"
        )
    coords = np.array(basis.vectors[:, 1 : d + 1], copy=True)
    weights = np.array(basis.values[1 : d + 1], copy=True)
    labels = tuple(f"u{k}" for k in range(2, d + 2))
    coords.setflags(write=False)
    weights.setflags(write=False)
    return EmbeddingCoords(coords=coords, axis_labels=labels, axis_weights=weights)


def restricted_gram(slepian, sel):
    """Gram matrix of the basis columns restricted to the selection.

    Entry (k, l) sums G_ik * G_il over selected nodes i; the trace is
    the total energy the basis places inside the selection. Exactly
    symmetric and PSD.
    """
    if slepian.num_nodes != sel.num_nodes:
        raise DimensionMismatchError(
            f"basis over {slepian.num_nodes} nodes, selection over "
            f"{sel.num_nodes}"
        )
    rows = slepian.vectors[list(sel.members), :]
    k = rows.T @ rows
    return 0.5 * (k + k.T)


def slepian_summary(slepian, sel, d=2):
    """Project a concentrated basis onto its top in-selection variance axes.

    Diagonalizes the restricted Gram matrix, keeps the d eigenvectors
    with largest eigenvalues (deterministic sign rule), and emits
    ``G @ V_d``. The retained eigenvalues are the axis weights: the
    variance captured inside the selection by each axis. Coordinates are
    not rescaled by the weights.
    """
    if d < 1:
        raise DimensionTooLargeError(f"d must be >= 1, got {d}")
    if d > slepian.bandwidth:
        raise DimensionTooLargeError(
            f"summary in {d} dimensions from a bandwidth-{slepian.bandwidth} basis"
        )
    gram = restricted_gram(slepian, sel)
    vals, vecs = np.linalg.eigh(gram)
    vals = vals[::-1][:d]
    vecs = canonical_signs(vecs[:, ::-1][:, :d])
    coords = slepian.vectors @ vecs
    weights = np.array(vals, copy=True)
    labels = tuple(f"summary-{k}" for k in range(1, d + 1))
    coords.setflags(write=False)
    weights.setflags(write=False)
    return EmbeddingCoords(coords=coords, axis_labels=labels, axis_weights=weights)
