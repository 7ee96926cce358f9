"""Enumerate and audit m+n subject/object universes.

A universe assigns labels to the sensation edges (subject to object) and
communication edges (subject to subject) of a small directed graph; its
digit pattern records which compared labels agree.
"""

from .classify import RealityClass, classify_2_1, classify_system
from .enumeration import (
    CountReport,
    UniverseClass,
    corollary1_prediction,
    enumerate_classes,
    enumerate_feasible,
    enumerate_patterns,
    theorem1_prediction,
    verify_counts,
)
from .feasibility import (
    feasible_count_oracle_partitions,
    is_feasible,
    is_feasible_oracle_bruteforce,
    witness,
)
from .formats import UniverseDocument, export_dot
from .model import (
    DEFAULT_CAP,
    ComparisonSchema,
    DigitDescriptor,
    DigitPattern,
    GuardExceeded,
    LabelAssignment,
    ShapeError,
    SystemShape,
    make_system,
    paper_order_convert,
    pattern_from_assignment,
    schema_digits,
)
from .simulate import Transcript, Verdict, check_personal_universe, run_agreement_simulation
from .symmetry import (
    SubjectPermutation,
    apply_subject_permutation,
    canonical_form,
    count_classes_burnside,
    orbit,
)

__version__ = "0.1.0"
