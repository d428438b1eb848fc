from .propositions import (
    CheckOutcome,
    VerificationReport,
    random_lex,
    random_measure,
    verify_lemma1,
    verify_lemma2,
    verify_prop1,
    verify_prop2,
    verify_prop3,
)

__all__ = [
    "CheckOutcome",
    "VerificationReport",
    "random_lex",
    "random_measure",
    "verify_lemma1",
    "verify_lemma2",
    "verify_prop1",
    "verify_prop2",
    "verify_prop3",
]
