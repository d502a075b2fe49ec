"""
Engine Package

Numeric kernel, special functions, sequences, summation, quadrature and
symbolic Euler sums.
"""
from .numkernel import (
    PrecisionContext,
    make_context,
    agree_digits,
    constant,
    elementary,
    bernoulli,
)

from .specfun import (
    riemann_zeta,
    dirichlet_eta,
    dirichlet_beta,
    polylog,
    loggamma,
    polygamma,
    negapolygamma2,
    log_barnes_g,
    ein,
    ei,
    zeta_prime_neg1,
    zeta_prime_half,
    quarter_values,
)

from .sequences import (
    harmonic,
    gen_harmonic,
    skew_harmonic,
    pochhammer_rising,
    tail_zeta,
    exp_tail,
    frac_ne,
    gf_tail_zeta2,
    gf_tail_zeta3_over_n,
    gf_exp_tail,
)

from .series import (
    sum_direct,
    sum_alternating_accel,
    sum_with_asymptotic_tail,
    abel_transform,
)

from .quadrature import integrate, integrate_param

from .eulersum import (
    Expression,
    euler_classical,
    euler_alternating,
    log_power_integral_closed,
    expr_eval,
    expr_normalize,
    format_expression,
    parse_expression,
)

__all__ = [
    # Kernel
    'PrecisionContext',
    'make_context',
    'agree_digits',
    'constant',
    'elementary',
    'bernoulli',

    # Special functions
    'riemann_zeta',
    'dirichlet_eta',
    'dirichlet_beta',
    'polylog',
    'loggamma',
    'polygamma',
    'negapolygamma2',
    'log_barnes_g',
    'ein',
    'ei',
    'zeta_prime_neg1',
    'zeta_prime_half',
    'quarter_values',

    # Sequences
    'harmonic',
    'gen_harmonic',
    'skew_harmonic',
    'pochhammer_rising',
    'tail_zeta',
    'exp_tail',
    'frac_ne',
    'gf_tail_zeta2',
    'gf_tail_zeta3_over_n',
    'gf_exp_tail',

    # Summation and quadrature
    'sum_direct',
    'sum_alternating_accel',
    'sum_with_asymptotic_tail',
    'abel_transform',
    'integrate',
    'integrate_param',

    # Euler sums
    'Expression',
    'euler_classical',
    'euler_alternating',
    'log_power_integral_closed',
    'expr_eval',
    'expr_normalize',
    'format_expression',
    'parse_expression',
]
