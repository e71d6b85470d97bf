"""whdet: truncated Wiener-Hopf-plus-Hankel and Toeplitz-plus-Hankel
determinants for symbols with a single zero/pole or jump singularity,
their exact finite-size identities, and their large-truncation asymptotics.
"""

from .asymptotics import (
    AsymKind,
    AsymptoteSpec,
    ConvergenceTable,
    asymptote_log,
    c_beta,
    convergence_table,
    ln_c_beta,
)
from .errors import (
    ConstraintError,
    ConvergenceWarning,
    DomainError,
    PoleError,
    QuadFailure,
    SingularMatrix,
    SingularPointError,
    WhdetError,
    ZeroError,
)
from .fredholm import (
    KernelFamily,
    KernelSpec,
    NystromOp,
    default_rule,
    finite_section_quotient,
    fredholm_logdet,
    kernel_eval,
    nystrom,
    quotient_identity,
)
from .logdet import LogDet, logdet, rel_exp_diff
from .params import BetaContext, BetaParam, beta_value, check_beta
from .quadrature import QuadRule, gauss_rule
from .specfun import (
    barnes_ratio_asymptote,
    duplication_residual,
    ln_barnes_g,
    ln_gamma,
)
from .structured import (
    RefinedLogDet,
    d_n,
    d_n_exact,
    det_tn_exact,
    fredholm_det_hankel_reg,
    hankel,
    hankel_section_inverse_det,
    ln_det_hankel_reg_exact,
    toeplitz,
)
from .symbols import (
    CircleKind,
    CircleSymbol,
    CutKernel,
    LineKind,
    LineSymbol,
    cut_kernel,
    eval_circle,
    eval_line,
    fourier_coeff_numeric,
    fourier_coeff_regularized,
    fourier_coeff_u,
    fourier_coeff_v,
    kernel_line,
    reg_coeff_table,
)
from .wienerhopf import (
    TruncatedWH,
    akhiezer_kac_E,
    det_w2r,
    det_wr_pm_hr,
    factor_product_logdet,
    geometric_mean_log,
    ln_akhiezer_kac_E,
    reflected_union_rule,
    wh_rule,
)

__version__ = "0.1.0"
