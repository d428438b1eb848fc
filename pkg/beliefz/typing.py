from fractions import Fraction
from typing import Dict, Union

RationalLike = Union[int, Fraction, str]

# variable name -> value
Assignment = Dict[str, str]
