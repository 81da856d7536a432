"""Rational associahedra: exact construction, collapsing, and verification.

For a coprime pair a < b the package builds two simplicial complexes on
the admissible diagonals of a (b+1)-gon: the noncrossing model (every
noncrossing set of admissible diagonals is a face) and the lattice-path
model (faces generated by the laser sets of rational Dyck paths).  It
decides membership in the lattice-path model, constructs the obstruction
graph of blocked pairs, produces and independently re-verifies an explicit
collapse of the first model onto the second, and checks the closed-form
face counts, wedge-of-spheres homology, and rank-level Alexander duality
by exact integer computation.
"""

from .collapse import (
    CollapseCertificate,
    FreePair,
    StageRecord,
    VerificationReport,
    collapse_schedule,
    cone_vertex_collapse,
    extract_morse_matching,
    verify_certificate,
)
from .complexes import (
    FHVector,
    FlagReport,
    SimplicialComplex,
    build_ass,
    build_hat_ass,
    deletion,
    f_vector,
    face_text,
    h_vector,
    is_flag,
    parse_face,
    rational_catalan,
    rational_kirkman,
    rational_narayana,
)
from .errors import (
    AdmissibilityViolatedError,
    BadOrderError,
    CapExceededError,
    InvalidSourceError,
    InvariantViolationError,
    NonIntegralError,
    NotAFaceError,
    NotAFaceOfHatError,
    NotConeVertexError,
    NotCoprimeError,
    NotPerfectMatchingError,
    RatAssocError,
    ScheduleFailedError,
)
from .homology import (
    BettiVector,
    DualityReport,
    PartitionReport,
    WedgeReport,
    alexander_duality_check,
    alexander_partition_check,
    betti_numbers,
    check_wedge,
)
from .lattice import (
    DyckPath,
    LaserHit,
    LatticePoint,
    enumerate_dyck_paths,
    facet_of,
    fire_laser,
    laser_diagonal,
    partition_of,
    valleys,
)
from .membership import MembershipResult, is_face_of_ass, valley_path
from .obstruction import (
    ObstructionEdge,
    ObstructionGraph,
    build_obstruction_graph,
    component,
    crossing_indices,
    edge_order,
    half_wedge_completion,
    wedge_completion,
)
from .polygon import (
    Diagonal,
    RemainderSet,
    all_admissible_diagonals,
    crosses,
    is_admissible,
    remainder_set,
    translate,
)

__version__ = "0.1.0"
