from .ad import (
    DEFAULT_GAMMAS,
    FIT_GAMMAS,
    FidelityFit,
    ad_kl_gram_vectors,
    ad_kraus,
    error_set,
    fidelity,
    fidelity_series_vectors,
    multimode_kraus,
)
from .api import ad_kl_gram, covariance_check, fidelity_series, pi_deletion_gram, spin_kl_check
from .covariance import (
    CovarianceResult,
    covariance_check_vectors,
    projective_group_order,
    random_unitary,
    sym_action,
)
from .dense import (
    DenseState,
    GramVerdict,
    apply_deletions,
    deletion_closed_form,
    deletion_oracle_check,
    dicke_expand,
    dicke_matrix,
    dicke_vector,
    pi_deletion_gram_vectors,
)
from .spin import (
    SpinVerdict,
    gellmann,
    global_generator,
    global_vs_js_deviation,
    js_generators,
    js_matrix,
    spin_kl_check_vectors,
    structure_constants,
)

__all__ = [
    "CovarianceResult",
    "DEFAULT_GAMMAS",
    "DenseState",
    "FIT_GAMMAS",
    "FidelityFit",
    "GramVerdict",
    "SpinVerdict",
    "ad_kl_gram",
    "ad_kl_gram_vectors",
    "ad_kraus",
    "apply_deletions",
    "covariance_check",
    "covariance_check_vectors",
    "deletion_closed_form",
    "deletion_oracle_check",
    "dicke_expand",
    "dicke_matrix",
    "dicke_vector",
    "error_set",
    "fidelity",
    "fidelity_series",
    "fidelity_series_vectors",
    "gellmann",
    "global_generator",
    "global_vs_js_deviation",
    "js_generators",
    "js_matrix",
    "multimode_kraus",
    "pi_deletion_gram",
    "pi_deletion_gram_vectors",
    "projective_group_order",
    "random_unitary",
    "spin_kl_check",
    "spin_kl_check_vectors",
    "structure_constants",
    "sym_action",
]
