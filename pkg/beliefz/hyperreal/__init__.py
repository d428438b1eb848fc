from .grammar import parse_hyperreal, render
from .number import EPSILON, ONE, ZERO, Hyperreal, hsum, standard_ratio
from .polynomial import EpsPoly, poly_gcd

__all__ = [
    "EPSILON",
    "ONE",
    "ZERO",
    "EpsPoly",
    "Hyperreal",
    "hsum",
    "parse_hyperreal",
    "poly_gcd",
    "render",
    "standard_ratio",
]
