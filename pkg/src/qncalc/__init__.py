"""qncalc: exact noncommutative rewriting for q-deformed matrix-group calculi.

The package encodes the 2x2 q-deformed matrix algebra, its unimodular and
quantum-plane reductions, and the matched left/right differential calculi
as oriented rewrite systems over the field Q(q), then verifies every
relation system, consistency condition, and printed equation table by
exact normalization.
"""

from .calculus import (
    CALCULUS_PRESETS,
    DiffStructure,
    apply_delta,
    check_nilpotent,
    check_vector_algebra,
    conjugate_forms_check,
    derive_diff_rules,
    diff_presentation,
    diff_structure,
    qtrace_check,
    vector_field_components,
)
from .dsl import (
    DslError,
    export_presentation,
    parse_expression,
    parse_presentation,
    parse_scalar,
)
from .ncalg import (
    Element,
    Generator,
    Presentation,
    RewriteRule,
    StepBudgetExceededError,
    TerminationOrder,
    check_local_confluence,
    equal_mod_ideal,
    mul,
    normal_words,
    normalize,
    random_strategy_normalize,
    validate_presentation,
)
from .presentations import (
    PRESET_IDS,
    Morphism,
    antipode_check,
    apply_morphism,
    coproduct_check,
    epsilon_identity_check,
    interchange_left_to_right,
    interchange_right_to_left,
    preset,
    qdet,
    reduction_check,
    reduction_morphisms,
)
from .qfield import ONE, Q, ZERO, DivisionByZeroError, PoleAtOneError, Scalar
from .reports import Check, Suite, SuiteReport
from .rmatrix import (
    forms_rtt_compat,
    perturbed_r,
    r_inverse_conventions,
    rtt_residual,
    standard_r,
    ybe_residual,
)
from .suites import SUITE_NAMES, SuiteConfig, run_all, run_suite

__version__ = "0.1.0"
