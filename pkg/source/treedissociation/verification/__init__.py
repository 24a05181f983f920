from .agreement import AgreementChecker, AgreementSummary, Mismatch

__all__ = [
    "AgreementChecker",
    "AgreementSummary",
    "Mismatch",
]
