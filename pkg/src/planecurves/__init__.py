"""Exact invariants of reduced plane curves: Jacobian syzygies, saturation
defects, freeness classification, and unexpected curves through point sets."""

from .arrangements import (
    DivisibilityConditions,
    LineArrangement,
    MultiplicityTable,
    PointSet,
    conic_family,
    dual_arrangement,
    dual_points,
    fermat,
    fermat_deleted,
    fermat_dual_conditions,
    line_combinatorics,
    named,
    tjurina_ordinary,
)
from .classify import (
    ClassificationRecord,
    UnexpectedVerdict,
    classify,
    cor10_profile,
    minimal_unexpected_irreducible,
    nearly_free_unexpected,
    splitting_type,
    unexpected_by_criterion,
)
from .errors import DiagnosticError, NonReducedCurveError
from .interpolation import (
    FatPointSystem,
    conditions_matrix,
    has_unexpected,
    system_dimension,
    unexpected_curve_equation,
)
from .poly import (
    HomogeneousPolynomial,
    PolynomialMap,
    ProjectivePoint,
    linear_form,
    poly_from_json,
    poly_to_json,
    pullback,
    variable,
)
from .saturation import (
    DefectProfile,
    defect_via_dimca,
    n_profile,
    saturation_slice,
    total_tjurina,
)
from .syzygies import (
    GradedSliceBasis,
    SyzygyProfile,
    graded_resolution,
    jacobian_slice,
    mdr,
    milnor_hilbert,
    minimal_generator_degrees,
    render_resolution,
    syzygy_slice,
)

__version__ = "0.1.0"
