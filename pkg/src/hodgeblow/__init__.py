"""Exact Hodge-number bookkeeping for blow-ups of compact complex manifolds."""

from .birational import (
    Direction,
    FactorizationScript,
    FactorizationStep,
    InvariantAuditReport,
    apply_step,
    count_delta,
    invariant_audit,
    run_script,
)
from .blowup import (
    BlowUpSpec,
    blow_up,
    de_rham_blow_up,
    exceptional_divisor,
    hochschild_blow_up,
    point_blow_up,
    projective_bundle,
)
from .catalog import (
    ManifestDocument,
    builtin,
    curve,
    default_catalog,
    iwasawa,
    parse_manifest,
    point,
    projective_space,
    serialize,
    torus,
)
from .diamond import (
    BettiVector,
    DefectVector,
    Flags,
    HodgeDiamond,
    ManifoldModel,
    anti_diagonal_sums,
    direct_sum,
    euler_p,
    make_model,
    serre_symmetric,
    shift,
    topological_euler,
    validate_model,
)
from .errors import (
    BettiRequiredError,
    CodimensionError,
    ContractError,
    HodgeError,
    InapplicableStepError,
    NameResolutionError,
    PreconditionError,
    ValidationError,
)
from .exactseq import UNKNOWN, alternating_sum_check, relative_dims_trivial_range, solve_unknown
from .spectral import (
    DegeneracyReport,
    check_defect_identity,
    ddbar_necessary,
    degenerates_at_E1,
    frolicher_defect,
    propagate_degeneracy,
)

__version__ = "0.1.0"
