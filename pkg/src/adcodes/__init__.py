"""Construction and verification of multi-error-correcting amplitude-damping codes.

The package concatenates stabilizer outer codes with the two-qubit dual-rail
inner code to obtain codes correcting multiple damping errors, verifies the
damping detection conditions exactly over bit-packed Pauli algebra, and
cross-checks everything against a dense numeric backend.
"""

from .paulis import (
    DimensionError,
    PauliOperator,
    PauliSum,
    Phase,
    commutes,
    expand_ad_error,
    parse_pauli,
    pauli_mul,
)
from .stabilizer import (
    CodeFileError,
    CodeParams,
    LogicalClass,
    ResourceBudgetError,
    StabilizerCode,
    ValidationReport,
    bacon_shor_ad,
    code_from_json,
    code_to_json,
    complete_logicals,
    css_code,
    distance,
    format_code_file,
    parse_code_file,
    reduce_mod_stabilizer,
    subcode_fix_logical,
    syndrome,
    validate,
)
from .database import get_code, list_codes
from .concat import InnerCode, concatenate, dual_rail, theorem1_params
from .verify import (
    DetectionReport,
    ErrorCheck,
    ErrorSupport,
    VerifyConfig,
    VerifyFailure,
    check_error,
    enumerate_error_supports,
    support_count,
    verify_t_code,
)
from .oracle import (
    DampingParameter,
    FidelityResult,
    ad_channel,
    apply_channel,
    apply_pauli,
    codewords,
    erasure_lemma_check,
    fidelity_experiment,
    logical_class_matrix,
    matrix_element,
    pauli_matrix,
    pauli_sum_matrix,
    transpose_recovery_kraus,
)
from .tables import PAPER_TABLE, TableRow, build_outer, build_rows, constructible_pairs

__version__ = "0.1.0"
