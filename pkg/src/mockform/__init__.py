"""Hurwitz class numbers and Zagier's weight 3/2 mock modular form.

Library layout:

    arithmetic        Kronecker symbol, Bernoulli numbers, zeta values
    characters        quadratic characters chi_d, Gauss sums, L-functions
    class_numbers     Hurwitz / Cohen class numbers, reduced forms, tables
    dirichlet_series  gamma_c Gauss sums and the series E_n(s)
    special_functions incomplete gamma, the Omega integral, the rho kernel
    eisenstein        theta multiplier system, E / F / H series, two routes
    maass             the completed class number series, shadow, Laplacian
    verify            ReportRecord suites behind ``mockform verify``
    cache, cli        persistent table cache and the command line tool
"""

from .arithmetic import (
    DiscriminantFactorization,
    bernoulli_number,
    epsilon_factor,
    fundamental_discriminant,
    kronecker_symbol,
    moebius,
    sigma_divisor,
    zeta_exact_neg,
    zeta_numeric,
)
from .characters import (
    QuadraticCharacter,
    functional_equation_residual,
    gauss_sum,
    l_exact_neg,
    l_numeric,
)
from .class_numbers import (
    ClassNumberTable,
    QuadraticForm,
    build_table,
    cohen_class_number,
    hurwitz_class_number,
    reduced_forms,
    t_chi,
)
from .config import DEFAULT_CONFIG, EvalConfig
from .dirichlet_series import (
    DirichletSeriesValue,
    gauss_sum_gamma,
    lambda_factor,
    series_closed,
    series_odd_even,
    series_partial,
    upsilon,
)
from .eisenstein import (
    Gamma04Matrix,
    automorphy_factor,
    cocycle_sign,
    eisenstein_direct,
    eisenstein_fourier,
    j_factor,
    lattice_tail_estimate,
    modularity_residual,
    multiplier_identity_residual,
    theta_multiplier,
    theta_multiplier_top_row,
)
from .maass import (
    HarmonicFormValue,
    ShadowCoefficient,
    alpha_limit,
    completed_hurwitz_series,
    e2_star,
    fourier_coefficient,
    laplacian_fd,
    s_limit_check,
    theta_series,
    xi_shadow_analytic,
    xi_shadow_fd,
)
from .special_functions import (
    QuadratureError,
    erfc_scalar,
    omega,
    rho_kernel,
    upper_incomplete_gamma,
    xi_fourier_kernel,
)

__version__ = "0.1.0"
