"""Sums of four squares from Hurwitz continued fractions over the Gaussian integers."""

from .congruence import (
    CongruenceWitness,
    Factorization,
    InvalidInput,
    NoSquareRoot,
    brute_force_root,
    crt_combine,
    factorize,
    hensel_lift_root,
    is_prime,
    prime_3mod4_root,
    solve_root,
    sqrt_mod_prime,
)
from .gaussian import GaussianInt, GaussianRational, div_round, gi_mul, isqrt_classify, norm_sq, round_nearest
from .hcf import (
    Classification,
    HcfExpansion,
    InvalidWitness,
    Selection,
    SimpleCfExpansion,
    hcf_expand,
    hcf_from_root,
    select_index,
    simple_cf_expand,
)
from .quaternion import HurwitzQuaternion, four_from_root_quaternion, hq_mul, hq_right_divmod, right_divides, right_gcd
from .squares import (
    FourSquareRep,
    Method,
    decompose,
    four_from_root,
    hermite_two_squares,
    lift_power_of_two,
    three_square_admissible,
    verify,
)

__version__ = "0.1.0"
