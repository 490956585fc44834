"""Syzygy order of mod-2 equivariant cohomology from face filtrations.

Given a combinatorial model of an orbit manifold with corners (a
simplicial complex plus labeled facet subcomplexes and a torus rank n),
the package derives the face lattice, builds the rank-filtration column
complexes over F2 for every face, and reports the exact syzygy order of
the equivariant cohomology together with Hilbert series of the associated
filtration cohomology.
"""

from .bcomplex import (
    AbstractBData,
    FaceReport,
    FiltrationPage,
    b_cohomology,
    e1_page,
    face_reports,
    filtration,
    from_abstract,
)
from .corners import CornerModel, Face, check_nice, face_lattice, restrict, validate
from .gf2 import Gf2Matrix, kernel_basis, multiply, quotient_dim, rank, row_reduce
from .scomplex import (
    CohomologyVector,
    SimplicialComplex,
    Subcomplex,
    build_complex,
    coboundary_matrix,
    connected_components,
    connecting_matrix,
    relative_cohomology,
    restriction_matrix,
    subcomplex,
)
from .syzygy import (
    FREE,
    HilbertSeries,
    SyzygyReport,
    ab_hilbert_series,
    formality,
    restriction_monotonicity_check,
    syzygy_order,
)

__version__ = "0.1.0"

__all__ = [
    "AbstractBData",
    "CohomologyVector",
    "CornerModel",
    "Face",
    "FaceReport",
    "FiltrationPage",
    "FREE",
    "Gf2Matrix",
    "HilbertSeries",
    "SimplicialComplex",
    "Subcomplex",
    "SyzygyReport",
    "ab_hilbert_series",
    "b_cohomology",
    "build_complex",
    "check_nice",
    "coboundary_matrix",
    "connected_components",
    "connecting_matrix",
    "e1_page",
    "face_lattice",
    "face_reports",
    "filtration",
    "formality",
    "from_abstract",
    "kernel_basis",
    "multiply",
    "quotient_dim",
    "rank",
    "relative_cohomology",
    "restrict",
    "restriction_matrix",
    "restriction_monotonicity_check",
    "row_reduce",
    "subcomplex",
    "syzygy_order",
    "validate",
]
