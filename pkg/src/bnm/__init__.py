"""Combinatorics of limit linear series with two ramification conditions.

Skew diagrams, standard tableaux, Schubert chains, the EH generators acting
on tableaux, and classification of the group they generate.
"""

from .core import (
    BoxCoord,
    BrillNoetherParams,
    DomainError,
    RamificationSequence,
    SkewDiagram,
    ValidationError,
    box_distance,
    build_diagram,
    compute_rho,
    diagram_stats,
    dual_sequence,
    make_params,
)
from .tableaux import (
    StandardTableau,
    TableauSet,
    TooLargeToEnumerate,
    canonical_compare,
    count_classical,
    count_oracle,
    count_rectangle_hook,
    enumerate_tableaux,
    max_tableau_Z,
    min_tableau_S,
)
from .schubert import (
    InvalidChain,
    SchubertChain,
    chain_from_tableau,
    tableau_from_chain,
    valid_step,
    validate_chain,
)
from .permgroup import (
    BSGS,
    DegreeBoundExceeded,
    GeneratorSet,
    GroupClassification,
    Permutation,
    Verdict,
    all_generators,
    bochert_threshold,
    bsgs_order,
    classify_group,
    generator_pi,
    is_doubly_transitive,
    is_transitive,
    moved_count,
    orbit,
    parity,
)
from .criteria import (
    BoundViolation,
    catalan,
    catalan_is_odd,
    check_alter_hypotheses,
    check_dt_conditions,
    check_catalan_parity,
    movefew_element,
)

__version__ = "0.1.0"
