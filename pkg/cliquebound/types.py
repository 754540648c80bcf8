"""
Stable vocabularies used in reports, CLI flags and record columns.
"""

from enum import StrEnum, unique


@unique
class BoundId(StrEnum):

    TURAN = "turan"
    CARO_WEI = "caro_wei"
    WILF = "wilf"
    NIKIFOROV = "nikiforov"
    CONJECTURE1 = "conjecture1"
    MOTZKIN_STRAUS = "motzkin_straus"
    EDWARDS_ELPHICK_CHI = "edwards_elphick_chi"
    ANDO_LIN_CHI = "ando_lin_chi"
    FAVARON_UPPER = "favaron_upper"
    WU_ELPHICK_CHI_UPPER = "wu_elphick_chi_upper"
    STANLEY_MU = "stanley_mu"
    WU_ELPHICK_SPLUS = "wu_elphick_splus"
    HONG_MU = "hong_mu"
    ELPHICK_SPLUS = "elphick_splus"

    @property
    def falsifiable(self) -> bool:
        """
        True for the evaluations that are not proven theorems: a negative slack on
        these is a counterexample candidate rather than a bug.
        """
        return self in FALSIFIABLE


FALSIFIABLE = frozenset({BoundId.CONJECTURE1, BoundId.ELPHICK_SPLUS})


@unique
class BoundKind(StrEnum):

    LOWER_OMEGA = "lower-on-omega"
    UPPER_OMEGA = "upper-on-omega"
    LOWER_CHI = "lower-on-chi"
    UPPER_CHI = "upper-on-chi"
    EIGENVALUE = "eigenvalue-inequality"

    @property
    def is_lower(self) -> bool:
        return self in (BoundKind.LOWER_OMEGA, BoundKind.LOWER_CHI)


@unique
class BoundStatus(StrEnum):

    EVALUATED = "evaluated"
    UNDEFINED = "undefined-denominator"
    SKIPPED = "skipped"
    NO_TARGET = "no-target"
    ABORTED = "aborted"


@unique
class SolveStatus(StrEnum):

    EXACT = "exact"
    ABORTED = "aborted"


@unique
class RecordStatus(StrEnum):

    OK = "ok"
    ABORTED = "aborted"
    INCONSISTENT = "inconsistent"


@unique
class Eigensolver(StrEnum):

    JACOBI = "jacobi"
    LAPACK = "lapack"


@unique
class ReportFormat(StrEnum):

    JSONL = "jsonl"
    CSV = "csv"


@unique
class Keep(StrEnum):

    ALL = "all"
    VIOLATIONS = "violations"
    NONE = "none"
