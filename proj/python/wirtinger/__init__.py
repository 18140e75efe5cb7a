"""Sharp constants of periodic Wirtinger-type inequalities.

Thin wrapper over the compiled ``_core`` extension.
"""

from ._core import (
    InadmissibleError,
    K,
    F,
    NumericalError,
    __version__,
    admissibility,
    alpha_closed_form,
    alpha_p_infinity,
    alpha_q1_r2,
    alpha_q_infinity_r2,
    best_constant,
    beta,
    breakpoint_scan,
    build_profile,
    classify_regime,
    f_prime_at_1,
    find_roots,
    ln_gamma,
    minimize_direct,
    quotient,
    rescale,
    run_cli,
)

__all__ = [
    "InadmissibleError",
    "K",
    "F",
    "NumericalError",
    "__version__",
    "admissibility",
    "alpha_closed_form",
    "alpha_p_infinity",
    "alpha_q1_r2",
    "alpha_q_infinity_r2",
    "best_constant",
    "beta",
    "breakpoint_scan",
    "build_profile",
    "classify_regime",
    "f_prime_at_1",
    "find_roots",
    "ln_gamma",
    "minimize_direct",
    "quotient",
    "rescale",
    "run_cli",
]
