"""Resource estimates for quantum formulations of coarse-grained protein folding.

Deterministic counting of qubits, Hamiltonian interaction terms by
order, k-locality, and CNOT-ladder two-qubit gates for lattice and
side-chain packing models under unary, binary, and block-unary-binary
variable encodings, with a brute-force term census validating every
closed form and a sweep driver that regenerates figure data.
"""

from .census import (
    CensusComparison,
    MonomialCensus,
    census_dense_pairwise,
    census_equals_estimate,
)
from .encodings import (
    BINARY,
    UNARY,
    Codeword,
    Encoding,
    bubinary,
    code_length,
    decode_codeword,
    encode_integer,
    parse_encoding,
)
from .errors import DomainError
from .feasibility import (
    FeasibilityReport,
    coordinate_feasible_count,
    coordinate_feasible_report,
    feasible_ratio_exact,
    feasible_ratio_formula,
    turn_feasible_ratio,
)
from .instances import (
    CardinalityVector,
    CoordinateLattice,
    GridSpec,
    ModelInstance,
    SideChain,
    TurnLattice,
    cardinality_vector,
    enumerate_grids,
    instance_rng,
    parse_grid,
    sample_sidechain_instance,
)
from .resources import (
    ResourceEstimate,
    estimate,
    interaction_counts,
    k_locality,
    qubit_count,
    two_qubit_gate_count,
)
from .sweep import SweepRow, rows_to_csv, rows_to_json, run_sweep, write_rows
from .turn_model import (
    OperatorClass,
    TurnResourceBreakdown,
    aux_dist_qubits,
    aux_pair_qubits,
    conformation_qubits,
    hback_terms,
    overlap_and_pair_classes,
    turn_estimate,
)

__version__ = "0.1.0"

__all__ = [
    "BINARY",
    "UNARY",
    "CardinalityVector",
    "CensusComparison",
    "Codeword",
    "CoordinateLattice",
    "DomainError",
    "Encoding",
    "FeasibilityReport",
    "GridSpec",
    "ModelInstance",
    "MonomialCensus",
    "OperatorClass",
    "ResourceEstimate",
    "SideChain",
    "SweepRow",
    "TurnLattice",
    "TurnResourceBreakdown",
    "aux_dist_qubits",
    "aux_pair_qubits",
    "bubinary",
    "cardinality_vector",
    "census_dense_pairwise",
    "census_equals_estimate",
    "code_length",
    "conformation_qubits",
    "coordinate_feasible_count",
    "coordinate_feasible_report",
    "decode_codeword",
    "encode_integer",
    "enumerate_grids",
    "estimate",
    "feasible_ratio_exact",
    "feasible_ratio_formula",
    "hback_terms",
    "instance_rng",
    "interaction_counts",
    "k_locality",
    "overlap_and_pair_classes",
    "parse_encoding",
    "parse_grid",
    "qubit_count",
    "rows_to_csv",
    "rows_to_json",
    "run_sweep",
    "sample_sidechain_instance",
    "turn_estimate",
    "turn_feasible_ratio",
    "two_qubit_gate_count",
    "write_rows",
]
