"""Standard 2-complexes from declarative T-end gluings.

Build complexes out of vertex-neighborhood and bar pieces, trace the
boundary curves of the skeleton neighborhood, decide orientable
embeddability, compute fundamental-group presentations and invariants,
lift to finite covers, and run exhaustive one-vertex censuses.
"""

from .builtins import UnknownBuiltinError, builtin, builtin_names, builtin_text
from .covers import (
    Cover,
    CoverReport,
    build_cover,
    build_universal_cover,
    verify_cover,
)
from .enumerator import (
    CanonicalizationTooLargeError,
    CensusClass,
    CensusResult,
    canonical_spec,
    census,
    enumerate_gluings,
)
from .gluing import (
    DisconnectedComplexError,
    GluingSpec,
    InvalidSpecError,
    Matching,
    Parity,
    SkeletonEdge,
    SkeletonGraph,
    SpecError,
    SpineError,
    TEndSlot,
    build_skeleton,
    edge_parities,
    matching_parity,
    validate,
    validate_or_raise,
)
from .groups import (
    AbelianInvariants,
    BettiNumbers,
    CosetResult,
    CosetTableNotClosedError,
    DEFAULT_MAX_COSETS,
    Presentation,
    abelianization,
    betti_numbers,
    presentation_from_complex,
    smith_normal_form,
    spanning_tree,
    tietze_simplify,
    todd_coxeter,
)
from .invariants import (
    ComplexInvariants,
    EmbeddabilityVerdict,
    complex_invariants,
    euler_characteristic,
    orientability_verdict,
)
from .pieces import (
    PieceKind,
    PieceSymmetry,
    TipIndex,
    internal_arcs,
    piece_symmetries,
    tips_of,
)
from .report import AnalysisError, analyze, render_text, to_json
from .textio import SpecParseError, parse_spec, print_spec
from .tracer import (
    AlphabetTooLargeError,
    BoundaryCurve,
    EdgeLetter,
    GlobalTip,
    canonical_word,
    canonical_word_multiset,
    trace_boundary,
    words_equivalent,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
