"""Band-limited, subset-concentrated spectral analysis of weighted graphs.

The pipeline: build a graph, take the truncated eigenbasis of its
normalized Laplacian, concentrate that band on a chosen node subset
(two designs: energy concentration and embedded distance), and project
to low-dimensional coordinates for visualization and spectrum analysis.
"""

from .dataio import (
    NodeMetadata,
    SelectionQuery,
    load_graph,
    load_metadata,
    parse_edge_list,
    parse_metadata,
    read_coords_csv,
    resolve_selection,
    write_coords_csv,
    write_edge_list,
    write_spectrum_csv,
    write_sweep_csv,
)
from .embedding import (
    EmbeddingCoords,
    laplacian_embedding,
    restricted_gram,
    slepian_summary,
)
from .errors import SlepnetError
from .figures import render_scatter_svg, render_sweep_svg
from .fixture import fixture_paths, generate_mini_connectome, write_fixture
from .graph import (
    Graph,
    build_graph,
    combinatorial_laplacian,
    connected_components,
    normalized_laplacian,
)
from .slepian import (
    DESIGN_CONCENTRATION,
    DESIGN_EMBEDDED,
    Selection,
    SlepianBasis,
    SweepRow,
    concentration_matrix,
    concentration_sum,
    cross_eigenvalues,
    embedded_matrix,
    selection_orthogonality_defect,
    shannon_number,
    shannon_sweep,
    slepian_design,
)
from .spectral import (
    SpectralBasis,
    canonical_signs,
    eigendecompose,
    gft_forward,
    gft_inverse,
    spectral_basis,
    validate_basis,
)

__version__ = "0.1.0"

__all__ = [
    "DESIGN_CONCENTRATION",
    "DESIGN_EMBEDDED",
    "EmbeddingCoords",
    "Graph",
    "NodeMetadata",
    "Selection",
    "SelectionQuery",
    "SlepianBasis",
    "SlepnetError",
    "SpectralBasis",
    "SweepRow",
    "build_graph",
    "canonical_signs",
    "combinatorial_laplacian",
    "concentration_matrix",
    "concentration_sum",
    "connected_components",
    "cross_eigenvalues",
    "eigendecompose",
    "embedded_matrix",
    "fixture_paths",
    "generate_mini_connectome",
    "gft_forward",
    "gft_inverse",
    "laplacian_embedding",
    "load_graph",
    "load_metadata",
    "normalized_laplacian",
    "parse_edge_list",
    "parse_metadata",
    "read_coords_csv",
    "render_scatter_svg",
    "render_sweep_svg",
    "resolve_selection",
    "restricted_gram",
    "selection_orthogonality_defect",
    "shannon_number",
    "shannon_sweep",
    "slepian_design",
    "slepian_summary",
    "spectral_basis",
    "validate_basis",
    "write_coords_csv",
    "write_edge_list",
    "write_fixture",
    "write_spectrum_csv",
    "write_sweep_csv",
]
