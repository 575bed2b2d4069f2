"""Spectra of graphs with vertex pockets and edge-pockets.

Exact characteristic polynomials (integer coefficients), closed-form
spectra, eigenvector certificates and cospectral-pair constructions, with a
Jacobi eigensolver as the numeric cross-check.
"""
from ._backend import BACKEND
from .catalog import parse_graph, rook, shrikhande, small_graphs
from .cospectral import (
    CospectralCertificate,
    make_cospectral_edge_pocket_pair,
    make_cospectral_vertex_pocket_pair,
    search_cospectral_mates,
    verify_cospectral,
)
from .errors import *  # noqa: F401,F403
from .formulas import (
    EigenvectorCertificate,
    FactoredCharpoly,
    cycle_pocket_spectrum_Q,
    edge_pocket_charpoly_Q,
    hv_spectrum_A,
    hv_spectrum_Q,
    huv_spectrum_Q,
    inherited_spectrum,
    join_charpoly_A,
    join_charpoly_Q,
    matching_pocket_spectrum_Q,
    pocket_charpoly_A,
    pocket_charpoly_Q,
    pocket_eigenvector_certificates,
    spanning_edge_pocket_charpoly_Q,
)
from .graph import Graph, cartesian_product, complement, complete, cycle, disjoint_union, empty, join, path
from .linalg import charpoly_exact, coronal, coronal_constant_row_sum, det_rfmatrix, kronecker
from .numeric import NumericSpectrum, eig_sym, residual, spectra_match
from .pockets import (
    EdgePocketSpec,
    VertexPocketSpec,
    build_edge_pockets,
    build_vertex_pockets,
    corona,
    edge_corona,
    validate,
)
from .poly import Poly, RatFunc
from .spectrum import QuadraticRoot, SpectrumMultiset, spectrum_from_poly

__version__ = "0.1.0"
