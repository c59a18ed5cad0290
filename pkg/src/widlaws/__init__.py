"""Weakly infinitely divisible laws on the circle, the p-adic integers,
and the p-adic solenoid: exact constructions from real random variables,
closed-form Fourier transforms, and Monte-Carlo verification."""

from .groups import (
    PadicInt,
    PadicIntegers,
    PadicSubgroup,
    Solenoid,
    SolenoidPoint,
    SolenoidSubgroup,
    Torus,
    TorusPoint,
    TorusSubgroup,
    canonical_angle,
    circular_distance,
    is_prime,
    padic_add,
    padic_from_ints,
    padic_in_subgroup,
    padic_mul_nat,
    padic_neg,
    solenoid_from_lift,
    solenoid_inverse,
    solenoid_lift,
    solenoid_mul,
    solenoid_project,
    torus_from_angle,
    torus_inverse,
    torus_mul,
)
from .characters import (
    PadicCharacter,
    SolenoidCharacter,
    TorusCharacter,
    angle_cutoff,
    annihilates,
    character_label,
    eval_char,
    eval_padic_char,
    eval_solenoid_char,
    eval_torus_char,
    local_inner_product,
    quadratic_form,
)
from .measures import (
    EMPTY_LEVY,
    LatticeMeasure,
    LevyMeasure,
    Quadruplet,
    ft_compound_poisson,
    ft_dirac,
    ft_gauss,
    ft_gen_poisson,
    ft_haar,
    ft_quadruplet,
    local_mean_drift,
    pushforward_padic,
    pushforward_solenoid,
    pushforward_torus,
    trivial_quadruplet,
    validate_quadruplet,
)
from .sampling import (
    make_rng,
    sample_compound_poisson,
    sample_normal,
    sample_padic_haar,
    sample_padic_wid,
    sample_poisson_count,
    sample_solenoid_haar,
    sample_solenoid_wid,
    sample_torus_wid,
    sample_uniform_digit,
    sample_uniform_real,
)
from .verification import (
    ComparisonRow,
    PadicSamples,
    SolenoidSamples,
    TorusSamples,
    VerificationReport,
    char_mean,
    check_compare_inequality,
    check_compatibility,
    check_divisibility,
    combine_samples,
    default_characters,
    describe_quadruplet,
    empirical_cf,
    oracle_padic_arithmetic,
    quadruplet_sampler,
    run_suite,
)

__version__ = "0.1.0"
