"""Exact block-coordinate minimization over polyhedra with the
relative-interior selection rule."""

from .descent import (
    Classification,
    DirectionSet,
    Picker,
    Rule,
    Schedule,
    StepRule,
    Trace,
    classify,
    distance_to_union,
    dominates,
    is_interior_local_min,
    is_local_min,
    is_pre_interior_local_min,
    minimizer_set,
    p_operator,
    run,
)
from .epigraph import EpigraphProblem, PiecewiseAffine, lift, lift_direction, lift_point
from .errors import (
    DimensionTooLargeError,
    EmptyPolyhedronError,
    ModelTooLargeError,
    NotOptimalError,
    PointNotInPolyhedronError,
    RipolyError,
    UnboundedDirectionError,
    UnboundedPolyhedronError,
    UnknownSuiteError,
)
from .geometry import Segment, Subspace
from .lp import LinearObjective, LpOutcome, LpStatus, optimal_face, solve
from .polyhedron import (
    FaceDescriptor,
    FaceRelation,
    Polyhedron,
    RiStrategy,
    contains,
    face_polyhedron,
    face_relation,
    implicit_equalities,
    is_bounded,
    is_empty,
    poly_dim,
    relative_interior_point,
    restrict_to_affine,
    ri_membership,
    smallest_face,
    vertices,
)
from .rationals import Q

__version__ = "0.1.0"
