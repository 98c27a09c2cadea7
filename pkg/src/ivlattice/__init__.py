"""Interval orders of a fixed size, ordered by reverse containment of their
relations, with meet/join, Hasse diagrams and the series-parallel (Tamari)
restriction."""
from .enumeration import Catalog, enumerate_catalog, one_point_extensions, sp_filter
from .interval import (
    IntervalOrder,
    IntervalRepresentation,
    NotAnIntervalOrder,
    admissible_labelling,
    canonical_form,
    from_representation,
    is_admissible,
    is_interval_order,
    to_representation,
)
from .lattice import (
    LatticeDiagram,
    SizeMismatch,
    TheoremViolation,
    build_lattice,
    join,
    leq_T,
    meet,
    verify_lattice,
)
from .poset import (
    PatternId,
    Poset,
    contains_induced,
    down_set,
    order_equivalent,
    restrict,
    up_set,
    validate_poset,
)
from .sp_tamari import (
    PlanarTree,
    enumerate_trees,
    tree_to_poset,
    verify_meet_subsemilattice,
    verify_sp_correspondence,
    verify_tamari_restriction,
)

__version__ = "0.1.0"
