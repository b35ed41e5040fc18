"""Band-limited bases concentrated on a node subset.

Two designs are supported, both eigenproblems over the spectral
coefficients of band-limited signals:

* ``concentration`` maximizes the energy a unit-norm band-limited
  signal places on the selected nodes. The operator is the
  concentration matrix ``C = Uw^T S Uw`` (assembled as the Gram matrix
  of the selected rows of ``Uw``); eigenvalues ``mu`` lie in [0, 1] and
  are reported in descending order.
* ``embedded_distance`` weights the same operator by the square roots
  of the Laplacian eigenvalues, ``C_emb = Lw^{1/2} C Lw^{1/2}``. Its
  eigenvalues ``xi`` behave like frequencies localized on the subset
  and are reported ascending. With all nodes selected and a full band
  this reduces exactly to the Laplacian eigenproblem.

Either eigenvalue family can be recovered for the other design through
the quadratic forms ``mu_k = ghat_k^T C ghat_k`` and
``xi_k = ghat_k^T C_emb ghat_k``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    EmptySelectionError,
    NegativeEigenvalueError,
    SelectionError,
)
from .spectral import canonical_signs
from .tolerances import EIGENVALUE_CLAMP

DESIGN_CONCENTRATION = "concentration"
DESIGN_EMBEDDED = "embedded_distance"
DESIGNS = (DESIGN_CONCENTRATION, DESIGN_EMBEDDED)


@dataclass(frozen=True)
class Selection:
    """A subset of nodes, i.e. the diagonal 0/1 selection operator.

    ``members`` is kept sorted; the dense N x N matrix is never
    materialized.
    """

    num_nodes: int
    members: tuple

    def __post_init__(self):
        if len(self.members) == 0:
            raise EmptySelectionError("selection has no members")
        members = tuple(int(m) for m in self.members)
        if any(not 0 <= m < self.num_nodes for m in members):
            raise SelectionError(
                f"selection indices outside [0, {self.num_nodes})"
            )
        if len(set(members)) != len(members):
            raise SelectionError("selection contains duplicate indices")
        object.__setattr__(self, "members", tuple(sorted(members)))

    @property
    def n_selected(self):
        return len(self.members)

    @property
    def fraction(self):
        return self.n_selected / self.num_nodes

    def indicator(self):
        """0/1 membership vector (the diagonal of the selection matrix)."""
        s = np.zeros(self.num_nodes)
        s[list(self.members)] = 1.0
        return s


@dataclass(frozen=True, eq=False)
class SlepianBasis:
    """Result of a subset-concentrated design.

    ``vectors`` (N x Nw) holds the node-domain basis columns
    ``g_k = Uw ghat_k``; ``coefficients`` (Nw x Nw) the spectral
    coefficients; ``values`` the design eigenvalues (``mu`` descending
    for the concentration design, ``xi`` ascending for the
    embedded-distance design).
    """

    design: str
    num_nodes: int
    bandwidth: int
    vectors: np.ndarray
    coefficients: np.ndarray
    values: np.ndarray
    selection: Selection


def _check_same_graph(basis, sel):
    if basis.num_nodes != sel.num_nodes:
        raise DimensionMismatchError(
            f"basis over {basis.num_nodes} nodes, selection over "
            f"{sel.num_nodes}"
        )


def concentration_matrix(basis, sel):
    """Gram matrix of the selected rows of the truncated eigenbasis.

    The (k, l) entry is the inner product of eigenvectors k and l
    restricted to the selection; the trace equals the selected rows'
    total squared mass. Exactly symmetric, PSD, eigenvalues in [0, 1].
    """
    _check_same_graph(basis, sel)
    rows = basis.vectors[list(sel.members), :]
    c = rows.T @ rows
    return 0.5 * (c + c.T)


def embedded_matrix(c, lambda_w, negative_tol=EIGENVALUE_CLAMP):
    """Eigenvalue-weighted concentration operator.

    Scales ``c`` on both sides by the square roots of ``lambda_w``.
    Entries of ``lambda_w`` within ``negative_tol`` of zero are clamped
    to exactly zero before the root: solver noise on the zero
    eigenvalue is sign-symmetric, and the square root would otherwise
    blow |1e-16| up to a 1e-8 row. More negative input is an error.
    """
    lam = np.asarray(lambda_w, dtype=np.float64)
    c = np.asarray(c)
    if c.shape != (lam.size, lam.size):
        raise DimensionMismatchError(
            f"matrix shape {c.shape} does not match {lam.size} eigenvalues"
        )
    if np.any(lam < -negative_tol):
        raise NegativeEigenvalueError(
            f"eigenvalue input below -{negative_tol:g}: min {lam.min():.3e}"
        )
    lam = np.where(np.abs(lam) <= negative_tol, 0.0, lam)
    root = np.sqrt(lam)
    # outer(root, root) is exactly symmetric, so the product stays so.
    return c * np.outer(root, root)


def slepian_design(basis, sel, design=DESIGN_EMBEDDED):
    """Solve one of the two subset-concentration designs.

    Parameters
    ----------
    basis : SpectralBasis
        Truncated eigenbasis of the normalized Laplacian (the band).
    sel : Selection
        Nodes on which energy or embedded distance is measured.
    design : str
        ``"concentration"`` or ``"embedded_distance"``.

    Returns a :class:`SlepianBasis` whose columns are orthonormal over
    the whole graph. The concentration design is additionally orthogonal
    over the selection, with ``G^T S G = diag(mu)``.
    """
    if design not in DESIGNS:
        raise ValueError(f"unknown design {design!r}; expected one of {DESIGNS}")
    c = concentration_matrix(basis, sel)
    if design == DESIGN_CONCENTRATION:
        operator = c
    else:
        operator = embedded_matrix(c, basis.values)
    vals, coeffs = np.linalg.eigh(operator)
    if design == DESIGN_CONCENTRATION:
        vals = vals[::-1]
        coeffs = coeffs[:, ::-1]
    coeffs = canonical_signs(coeffs)
    vectors = basis.vectors @ coeffs
    vals = np.array(vals, copy=True)
    for arr in (vectors, coeffs, vals):
        arr.setflags(write=False)
    return SlepianBasis(
        design=design,
        num_nodes=basis.num_nodes,
        bandwidth=basis.bandwidth,
        vectors=vectors,
        coefficients=coeffs,
        values=vals,
        selection=sel,
    )


def cross_eigenvalues(slepian, matrix):
    """Quadratic form of every column's coefficients against ``matrix``.

    Passing the concentration matrix recovers each column's energy
    concentration ``mu``; passing the embedded variant recovers the
    embedded distance ``xi``. For the design's own operator this
    reproduces the design eigenvalues.
    """
    matrix = np.asarray(matrix)
    nw = slepian.bandwidth
    if matrix.shape != (nw, nw):
        raise DimensionMismatchError(
            f"matrix shape {matrix.shape} does not match bandwidth {nw}"
        )
    return np.einsum("ji,jk,ki->i", slepian.coefficients, matrix,
                     slepian.coefficients)


def concentration_sum(slepian, matrix):
    """Sum of the recovered quadratic forms over all columns.

    Because the coefficient matrix is orthogonal, this is the trace of
    ``matrix`` up to rounding, independent of the design.
    """
    return float(np.sum(cross_eigenvalues(slepian, matrix)))


def selection_orthogonality_defect(slepian):
    """Largest off-diagonal magnitude of G^T S G.

    Diagnostic only: zero (to rounding) for the concentration design,
    generally nonzero for the embedded-distance design.
    """
    rows = slepian.vectors[list(slepian.selection.members), :]
    gram = rows.T @ rows
    off = gram - np.diag(np.diag(gram))
    return float(np.max(np.abs(off)))


def shannon_number(bandwidth, n_selected, num_nodes):
    """Graph-bandwidth product Nw * Ns / N.

    The expected count of well-concentrated basis vectors; the analogue
    of the time-bandwidth product of classical concentration problems.
    """
    if not 1 <= n_selected <= num_nodes:
        raise DimensionMismatchError(
            f"n_selected={n_selected} outside [1, {num_nodes}]"
        )
    if not 1 <= bandwidth <= num_nodes:
        raise DimensionMismatchError(
            f"bandwidth={bandwidth} outside [1, {num_nodes}]"
        )
    return bandwidth * n_selected / num_nodes


@dataclass(frozen=True)
class SweepRow:
    """One bandwidth step of a concentration sweep."""

    bandwidth: int
    shannon: float
    sum_mu_concentration: float
    sum_mu_embedded: float
    sum_xi_embedded: float


def shannon_sweep(basis, sel, bandwidths):
    """Concentration totals against the graph-bandwidth product.

    Reuses one eigendecomposition: ``basis`` must hold at least
    ``max(bandwidths)`` eigenpairs and is truncated per step. Bandwidths
    must be ascending.

    Each row reports the Shannon number K, the summed energy
    concentrations of both designs (equal up to rounding, since both
    sum a full orthonormal coefficient basis against the same
    concentration matrix), and the summed embedded-distance eigenvalues,
    which fall below the mu sum wherever the band's frequencies sit
    below one.
    """
    bandwidths = [int(b) for b in bandwidths]
    if not bandwidths:
        raise DimensionMismatchError("empty bandwidth list")
    if any(b2 <= b1 for b1, b2 in zip(bandwidths, bandwidths[1:])):
        raise DimensionMismatchError(f"bandwidths not ascending: {bandwidths}")
    if bandwidths[-1] > basis.bandwidth:
        raise DimensionMismatchError(
            f"sweep needs bandwidth {bandwidths[-1]} but basis holds "
            f"{basis.bandwidth} eigenpairs"
        )
    _check_same_graph(basis, sel)

    rows = []
    for nw in bandwidths:
        sub = basis.truncate(nw)
        c = concentration_matrix(sub, sel)
        conc = slepian_design(sub, sel, DESIGN_CONCENTRATION)
        emb = slepian_design(sub, sel, DESIGN_EMBEDDED)
        rows.append(
            SweepRow(
                bandwidth=nw,
                shannon=shannon_number(nw, sel.n_selected, sel.num_nodes),
                sum_mu_concentration=float(np.sum(conc.values)),
                sum_mu_embedded=concentration_sum(emb, c),
                sum_xi_embedded=float(np.sum(emb.values)),
            )
        )
    return rows
