"""ewkit: entanglement witnesses, PPT states, and the families they generate.

From a seed pair (a witness W0 and the PPT entangled state rho0 it detects)
the toolkit builds the open convex sets of nearby witnesses and states,
computes the detection thresholds in closed form, and certifies PPT-ness,
indecomposability, and (conditionally) atomicity with machine-checkable
evidence. The sigma-PPT machinery generalizes everything to N parties.
"""

from .core import (
    HERMITICITY_RTOL,
    PSD_RTOL,
    HermitianOp,
    SigmaVector,
    Spectrum,
    TensorSpace,
    bipartite,
    is_psd,
    kron,
    matrix_unit,
    partial_transpose,
    pinch,
    shift_operator,
    tensor_op,
    trace_pair,
)
from .construct import (
    LinearMapTable,
    StateFamilyParams,
    WitnessFamilyParams,
    choi_map,
    convex_combination,
    dejamiolkowski,
    ha_state,
    identity_map,
    jamiolkowski,
    max_entangled_projector,
    maximally_mixed,
    perturbed_witness,
    product_basis_state,
    projector_p,
    projector_q,
    transpose_map,
    witness_dk,
    witness_from_difference,
)
from .detect import (
    MixingFamily,
    PerturbationFamily,
    SweepRow,
    alpha_threshold,
    chain_pair,
    lambda_threshold,
    mixing_family,
    mu_threshold,
    perturbation_family,
    sample_sppt,
    sample_wind,
    separable_catalog,
    sweep,
)
from .certify import (
    HA_SCHMIDT_ASSUMPTION,
    NEGATIVITY_CUTOFF,
    Certificate,
    ScanConfig,
    blockpos_scan,
    certify_atomic_conditional,
    certify_completely_copositive,
    certify_detection,
    certify_indecomposable,
    certify_ppt,
    revalidate,
    schmidt_rank,
)
from .multipartite import (
    MultipartitePair,
    ghz_projector,
    multipartite_alpha_threshold,
    multipartite_lambda_threshold,
    sigma_indecomposable_certificate,
    sigma_ppt_check,
)
from .serialize import (
    MalformedFileError,
    certificate_to_json_dict,
    read_map_table,
    read_operator,
    sweep_to_csv,
    write_map_table,
    write_operator,
    write_sweep_csv,
)

__version__ = "0.1.0"

__all__ = [
    "HERMITICITY_RTOL",
    "PSD_RTOL",
    "HA_SCHMIDT_ASSUMPTION",
    "NEGATIVITY_CUTOFF",
    "Certificate",
    "HermitianOp",
    "LinearMapTable",
    "MalformedFileError",
    "MixingFamily",
    "MultipartitePair",
    "PerturbationFamily",
    "ScanConfig",
    "SigmaVector",
    "Spectrum",
    "StateFamilyParams",
    "SweepRow",
    "TensorSpace",
    "WitnessFamilyParams",
    "alpha_threshold",
    "bipartite",
    "blockpos_scan",
    "certificate_to_json_dict",
    "certify_atomic_conditional",
    "certify_completely_copositive",
    "certify_detection",
    "certify_indecomposable",
    "certify_ppt",
    "chain_pair",
    "choi_map",
    "convex_combination",
    "dejamiolkowski",
    "ghz_projector",
    "ha_state",
    "identity_map",
    "is_psd",
    "jamiolkowski",
    "kron",
    "lambda_threshold",
    "matrix_unit",
    "max_entangled_projector",
    "maximally_mixed",
    "mixing_family",
    "mu_threshold",
    "multipartite_alpha_threshold",
    "multipartite_lambda_threshold",
    "partial_transpose",
    "perturbation_family",
    "perturbed_witness",
    "pinch",
    "product_basis_state",
    "projector_p",
    "projector_q",
    "read_map_table",
    "read_operator",
    "revalidate",
    "sample_sppt",
    "sample_wind",
    "schmidt_rank",
    "separable_catalog",
    "shift_operator",
    "sigma_indecomposable_certificate",
    "sigma_ppt_check",
    "sweep",
    "sweep_to_csv",
    "tensor_op",
    "trace_pair",
    "transpose_map",
    "witness_dk",
    "witness_from_difference",
    "write_map_table",
    "write_operator",
    "write_sweep_csv",
]
