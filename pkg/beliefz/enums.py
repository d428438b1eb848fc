from enum import Enum, IntEnum
from typing import Tuple


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class PostulateStatus(str, Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    VACUOUS = "vacuous"
    INAPPLICABLE = "inapplicable"


class Postulate(str, Enum):
    SUCCESS = "*1"
    CONDITIONALIZATION = "*2"
    CONSISTENCY = "*3"
    ARROW = "*4"
    I1 = "I1"
    I2 = "I2"
    ITERATED_INCLUSION = "IINC"

    @classmethod
    def basic(cls) -> Tuple["Postulate", ...]:
        return (cls.SUCCESS, cls.CONDITIONALIZATION, cls.CONSISTENCY, cls.ARROW)

    @classmethod
    def iterated(cls) -> Tuple["Postulate", ...]:
        return (cls.I1, cls.I2, cls.ITERATED_INCLUSION)


class I2Reading(str, Enum):
    GLOSS = "gloss"
    LITERAL = "literal"


class Family(str, Enum):
    INDEPENDENT = "independent"
    DEPENDENT = "dependent"
    CORRELATED = "correlated"
    FOOTNOTE4 = "footnote4"


class OutputFormat(str, Enum):
    TSV = "tsv"
    PRETTY = "pretty"


class ExitCode(IntEnum):
    SUCCESS = 0
    FAILURE = 1
    USAGE = 2
