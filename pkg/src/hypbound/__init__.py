"""Certified two-sided estimates for the hyperbolic metric density on
unit-disk domains whose obstacle set accumulates at the origin."""

from .bp import BPBounds, EmptySet, bp_bounds, compute_L, kappa, log_distance_to_set
from .geometry import (
    ArcRadialPath,
    DistanceSet,
    DomainSpec,
    MalformedPath,
    Membership,
    NearestBoundary,
    NotInDomain,
    NotOnBoundary,
    ObstacleDisk,
    Segment,
    SequenceSpec,
    SinglePoint,
    SpecError,
    UnitCircle,
    arc_then_radial,
    boundary_gap,
    contains,
    distance_set,
    domain_from_dict,
    first_boundary_hit,
    load_domain,
    nearest_boundary,
    radial_path,
    rotate_domain,
)
from .halving import (
    CaseTag,
    Certificate,
    HalvingConstants,
    HalvingReport,
    HypothesisViolated,
    TruncationExceeded,
    ZeroArgument,
    build_certificate,
    certificate_from_dict,
    certificate_to_dict,
    certificate_tolerance,
    check_halving,
    constants,
    dyadic_witness,
    lower_bound,
    verify_certificate,
)
from .oracles import OracleDomain, OutOfDomain, disk_density, punctured_disk_density

__version__ = "0.1.0"

__all__ = [
    "ArcRadialPath",
    "BPBounds",
    "CaseTag",
    "Certificate",
    "DistanceSet",
    "DomainSpec",
    "EmptySet",
    "HalvingConstants",
    "HalvingReport",
    "HypothesisViolated",
    "MalformedPath",
    "Membership",
    "NearestBoundary",
    "NotInDomain",
    "NotOnBoundary",
    "ObstacleDisk",
    "OracleDomain",
    "OutOfDomain",
    "Segment",
    "SequenceSpec",
    "SinglePoint",
    "SpecError",
    "TruncationExceeded",
    "UnitCircle",
    "ZeroArgument",
    "arc_then_radial",
    "boundary_gap",
    "bp_bounds",
    "build_certificate",
    "certificate_from_dict",
    "certificate_to_dict",
    "certificate_tolerance",
    "check_halving",
    "compute_L",
    "constants",
    "contains",
    "disk_density",
    "distance_set",
    "domain_from_dict",
    "dyadic_witness",
    "first_boundary_hit",
    "kappa",
    "load_domain",
    "log_distance_to_set",
    "lower_bound",
    "nearest_boundary",
    "punctured_disk_density",
    "radial_path",
    "rotate_domain",
    "verify_certificate",
]
