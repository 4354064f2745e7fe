"""Exact multigraded polynomial algebra over GF(p) or Q."""

from .field import PrimeField, RationalField, default_prime
from .groebner import buchberger, normal_form
from .hilbert import h_vector, hilbert_multi, hilbert_std, is_generic_hf, min_gens
from .ideal import (
    Ideal,
    ideal_intersection,
    ideal_product,
    ideal_quotient,
    ideal_sum,
    is_saturated,
    saturation,
    saturation_irrelevant,
    saturation_maximal,
)
from .poly import Polynomial
from .ring import RingSpec
