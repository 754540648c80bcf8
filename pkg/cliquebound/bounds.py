"""
Spectral and degree bounds on the clique and chromatic numbers, each evaluated as
an auditable BoundEvaluation with the bound's value, the invariant it bounds, a
holds flag and a signed slack.

Lower bounds have slack = target - value; upper bounds and eigenvalue
inequalities (quantity <= expression) have slack = value - target. A bound holds
when its slack is at least -numeric_tol and is tight when |slack| <= numeric_tol.
"""

import math

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .graph import Graph
from .types import BoundId, BoundKind, BoundStatus
from .exceptions import GraphInputError


NUMERIC_TOL = 1e-6


@dataclass(frozen=True)
class BoundEvaluation:

    id: BoundId
    kind: BoundKind
    value: Optional[float]
    target: Optional[float] = None
    holds: Optional[bool] = None
    slack: Optional[float] = None
    status: BoundStatus = BoundStatus.EVALUATED

    @property
    def violated(self) -> bool:
        return self.holds is False

    def tight(self, tol: float = NUMERIC_TOL) -> bool:
        return self.slack is not None and abs(self.slack) <= tol

    def to_dict(self) -> dict:
        return {
            "id": str(self.id),
            "kind": str(self.kind),
            "value": _finite(self.value),
            "target": _finite(self.target),
            "holds": self.holds,
            "slack": _finite(self.slack),
            "status": str(self.status),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BoundEvaluation":
        return cls(
            id=BoundId(data["id"]),
            kind=BoundKind(data["kind"]),
            value=data.get("value"),
            target=data.get("target"),
            holds=data.get("holds"),
            slack=data.get("slack"),
            status=BoundStatus(data.get("status", BoundStatus.EVALUATED)),
        )


def _finite(value):
    if value is None:
        return None
    value = float(value)
    return value if math.isfinite(value) else None


def evaluate(
    id: BoundId,
    kind: BoundKind,
    value: Optional[float],
    target: Optional[float] = None,
    tol: float = NUMERIC_TOL,
) -> BoundEvaluation:
    """
    Compares a bound value with its target. A None value is an undefined
    denominator; a None target leaves the evaluation unjudged.
    """
    if value is None or not math.isfinite(value):
        target = None if target is None else float(target)
        return BoundEvaluation(id=id, kind=kind, value=None, target=target, status=BoundStatus.UNDEFINED)

    if target is None:
        return BoundEvaluation(id=id, kind=kind, value=float(value), status=BoundStatus.NO_TARGET)

    slack = target - value if kind.is_lower else value - target
    return BoundEvaluation(
        id=id, kind=kind, value=float(value), target=float(target), holds=slack >= -tol, slack=slack,
    )


def skipped(id: BoundId, kind: BoundKind, status: BoundStatus = BoundStatus.SKIPPED) -> BoundEvaluation:
    return BoundEvaluation(id=id, kind=kind, value=None, status=status)


def _ratio(numerator: float, denominator: float, tol: float = NUMERIC_TOL) -> Optional[float]:
    # Undefined when the denominator is negative or within tol of zero.
    if denominator <= tol:
        return None
    return numerator / denominator


##########################################################################
## Lower bounds on the clique number
##########################################################################

def turan_bound(n: int, d: float, omega: int = None, tol: float = NUMERIC_TOL) -> BoundEvaluation:
    """
    Concise Turan bound n / (n - d) <= omega.
    """
    assert 0 <= d < n, "average degree of a simple graph is below n"
    return evaluate(BoundId.TURAN, BoundKind.LOWER_OMEGA, n / (n - d), omega, tol)


def caro_wei_bound(degrees: Sequence[int], omega: int = None, tol: float = NUMERIC_TOL) -> BoundEvaluation:
    """
    Caro-Wei bound sum_i 1 / (n - d_i) <= omega.
    """
    n = len(degrees)
    value = math.fsum(1.0 / (n - d) for d in degrees)
    return evaluate(BoundId.CARO_WEI, BoundKind.LOWER_OMEGA, value, omega, tol)


def wilf_bound(n: int, mu: float, omega: int = None, tol: float = NUMERIC_TOL) -> BoundEvaluation:
    """
    Wilf's spectral bound n / (n - mu) <= omega.
    """
    return evaluate(BoundId.WILF, BoundKind.LOWER_OMEGA, _ratio(n, n - mu, tol), omega, tol)


def nikiforov_bound(m: int, mu: float, omega: int = None, tol: float = NUMERIC_TOL) -> BoundEvaluation:
    """
    Nikiforov's bound 2m / (2m - mu^2) <= omega; undefined when mu^2 >= 2m, which
    for simple graphs only happens without edges.
    """
    return evaluate(BoundId.NIKIFOROV, BoundKind.LOWER_OMEGA, _ratio(2 * m, 2 * m - mu * mu, tol), omega, tol)


def conjecture1_bound(n: int, s_plus: float, omega: int = None, tol: float = NUMERIC_TOL) -> BoundEvaluation:
    """
    The conjectured n / (n - sqrt(s+)) <= omega. An undefined denominator
    (n - sqrt(s+) within tol of zero or below) is returned as an UNDEFINED
    evaluation for the harness to report.
    """
    return evaluate(
        BoundId.CONJECTURE1, BoundKind.LOWER_OMEGA,
        _ratio(n, n - math.sqrt(max(s_plus, 0.0)), tol), omega, tol,
    )


def motzkin_straus_value(g: Graph, weights: Sequence[float]) -> float:
    """
    The Motzkin-Straus quadratic form: the sum over edges ij of p_i * p_j.
    """
    weights = [float(w) for w in weights]
    if len(weights) != g.n:
        raise GraphInputError(f"expected {g.n} weights, got {len(weights)}")
    if any(w < 0 or not math.isfinite(w) for w in weights):
        raise GraphInputError("weights must be finite and non-negative")
    if abs(math.fsum(weights) - 1.0) > 1e-9:
        raise GraphInputError("weights must sum to 1")
    return math.fsum(weights[u] * weights[v] for u, v in g.edges)


def motzkin_straus_bound(
    g: Graph, weights: Sequence[float] = None, omega: int = None, tol: float = NUMERIC_TOL,
) -> BoundEvaluation:
    """
    Rewrites sum p_i p_j <= (omega - 1) / (2 omega) as the lower bound
    1 / (1 - 2 * sum) <= omega. Uniform weights by default, which reproduce the
    Turan bound.
    """
    if weights is None:
        weights = [1.0 / g.n] * g.n
    value = motzkin_straus_value(g, weights)
    return evaluate(BoundId.MOTZKIN_STRAUS, BoundKind.LOWER_OMEGA, _ratio(1.0, 1.0 - 2.0 * value, tol), omega, tol)


def motzkin_straus_ceiling(omega: int) -> float:
    return (omega - 1) / (2 * omega)


##########################################################################
## Bounds on the chromatic number and upper bounds on omega
##########################################################################

def chi_lower_bounds(
    m: int, mu: float, s_plus: float, s_minus: float, chi: int = None, tol: float = NUMERIC_TOL,
) -> Tuple[BoundEvaluation, BoundEvaluation]:
    """
    Edwards-Elphick 2m / (2m - mu^2) <= chi and Ando-Lin 2m / (2m - s+) <= chi.
    Both are undefined for graphs without edges.
    """
    if m == 0:
        return (
            skipped(BoundId.EDWARDS_ELPHICK_CHI, BoundKind.LOWER_CHI, BoundStatus.UNDEFINED),
            skipped(BoundId.ANDO_LIN_CHI, BoundKind.LOWER_CHI, BoundStatus.UNDEFINED),
        )

    edwards = evaluate(BoundId.EDWARDS_ELPHICK_CHI, BoundKind.LOWER_CHI, _ratio(2 * m, 2 * m - mu * mu, tol), chi, tol)
    ando = evaluate(BoundId.ANDO_LIN_CHI, BoundKind.LOWER_CHI, _ratio(2 * m, 2 * m - s_plus, tol), chi, tol)
    return edwards, ando


def ando_lin_ratio_form(s_plus: float, s_minus: float) -> Optional[float]:
    """
    The equivalent form 1 + s+ / s- of the Ando-Lin bound.
    """
    if s_minus <= 0:
        return None
    return 1.0 + s_plus / s_minus


def upper_bounds(
    m: int, mu: float, s_plus: float, omega: int = None, chi: int = None, tol: float = NUMERIC_TOL,
) -> Tuple[BoundEvaluation, BoundEvaluation]:
    """
    Favaron et al. omega <= 2m / mu and Wu-Elphick chi <= 2m / sqrt(s+).
    """
    if m == 0:
        return (
            skipped(BoundId.FAVARON_UPPER, BoundKind.UPPER_OMEGA, BoundStatus.UNDEFINED),
            skipped(BoundId.WU_ELPHICK_CHI_UPPER, BoundKind.UPPER_CHI, BoundStatus.UNDEFINED),
        )

    favaron = evaluate(BoundId.FAVARON_UPPER, BoundKind.UPPER_OMEGA, _ratio(2 * m, mu, tol), omega, tol)
    wu = evaluate(BoundId.WU_ELPHICK_CHI_UPPER, BoundKind.UPPER_CHI, _ratio(2 * m, math.sqrt(s_plus), tol), chi, tol)
    return favaron, wu


##########################################################################
## Eigenvalue inequalities
##########################################################################

def stanley_value(m: int) -> float:
    return (math.sqrt(8 * m + 1) - 1) / 2


def eigenvalue_inequality_checks(
    n: int,
    m: int,
    mu: float,
    s_plus: float,
    isolated: bool = False,
    connected: bool = True,
    tol: float = NUMERIC_TOL,
) -> Tuple[BoundEvaluation, ...]:
    """
    Stanley mu <= (sqrt(8m+1) - 1) / 2, Wu-Elphick sqrt(s+) <= the same, Hong
    mu^2 <= 2m - n + 1 (no isolated vertices) and the Elphick et al. statistic
    s+ <= 2m - n + 1 (connected graphs, holds for almost all of them).
    """
    stanley = stanley_value(m)
    checks = [
        evaluate(BoundId.STANLEY_MU, BoundKind.EIGENVALUE, stanley, mu, tol),
        evaluate(BoundId.WU_ELPHICK_SPLUS, BoundKind.EIGENVALUE, stanley, math.sqrt(max(s_plus, 0.0)), tol),
    ]

    hong = 2 * m - n + 1
    if isolated:
        checks.append(skipped(BoundId.HONG_MU, BoundKind.EIGENVALUE))
    else:
        checks.append(evaluate(BoundId.HONG_MU, BoundKind.EIGENVALUE, hong, mu * mu, tol))

    if isolated or not connected:
        checks.append(skipped(BoundId.ELPHICK_SPLUS, BoundKind.EIGENVALUE))
    else:
        checks.append(evaluate(BoundId.ELPHICK_SPLUS, BoundKind.EIGENVALUE, hong, s_plus, tol))

    return tuple(checks)


##########################################################################
## Family helpers
##########################################################################

def kneser_margin(p: int) -> int:
    """
    2p^2 - 9p + 6: the conjectured bound holds on KG_{p,2} with room to spare when this is
    non-negative, which is every p >= 4.
    """
    return 2 * p * p - 9 * p + 6


def kneser_ceiling(p: int) -> float:
    """
    (p - 1) / 2, which sits between the conjectured bound and omega(KG_{p,2}).
    """
    return (p - 1) / 2


def random_regime_ceiling(p: float) -> float:
    """
    For almost all G(n, p) graphs s+ <= 2m ~ p n^2, so the conjectured bound is at
    most about 1 / (1 - sqrt(p)); roughly 3.414 at p = 1/2.
    """
    if not 0.0 <= p < 1.0:
        raise GraphInputError(f"ceiling is defined for 0 <= p < 1, got {p}")
    return 1.0 / (1.0 - math.sqrt(p))


##########################################################################
## Consistency chains
##########################################################################

@dataclass(frozen=True)
class ChainInputs:
    """
    The per-graph summary every bound is derived from.
    """

    n: int
    m: int
    d: float
    mu: float
    mu_min: float
    s_plus: float
    s_minus: float
    pi: int
    t: int
    regular: bool
    omega: Optional[int] = None
    chi: Optional[int] = None


def check_bound_chain(
    inputs: ChainInputs, evaluations: Sequence[BoundEvaluation], tol: float = NUMERIC_TOL,
) -> List[str]:
    """
    Checks the relations that hold between the bounds on every graph and returns
    the names of those that fail. An empty list means the chain is consistent.
    """
    by_id = {e.id: e.value for e in evaluations if e.value is not None}
    failed = []

    def require(name: str, ok: bool):
        if not ok:
            failed.append(name)

    if inputs.m >= 1:
        turan, wilf = by_id.get(BoundId.TURAN), by_id.get(BoundId.WILF)
        nikiforov, caro = by_id.get(BoundId.NIKIFOROV), by_id.get(BoundId.CARO_WEI)
        conj = by_id.get(BoundId.CONJECTURE1)
        ando = by_id.get(BoundId.ANDO_LIN_CHI)

        if None not in (turan, wilf):
            require("turan<=wilf", turan <= wilf + tol)
        if None not in (wilf, nikiforov):
            require("wilf<=nikiforov", wilf <= nikiforov + tol)
        if None not in (turan, caro):
            require("turan<=caro_wei", turan <= caro + tol)
        if None not in (wilf, conj):
            require("wilf<=conjecture1", wilf <= conj + tol)
        if conj is not None and ando is not None:
            require("conjecture1<=ando_lin", conj <= ando + tol)

        if ando is not None:
            ratio = ando_lin_ratio_form(inputs.s_plus, inputs.s_minus)
            require("ando_lin_forms_agree", ratio is not None and abs(ratio - ando) <= tol)

        favaron, wu = by_id.get(BoundId.FAVARON_UPPER), by_id.get(BoundId.WU_ELPHICK_CHI_UPPER)
        if None not in (favaron, wu):
            require("wu_elphick<=favaron", wu <= favaron + tol)

        if inputs.regular and None not in (turan, wilf, nikiforov):
            require("regular_bounds_equal", abs(turan - wilf) <= tol and abs(turan - nikiforov) <= tol)

        # The conjectured bound strictly beats n/(n-d) on regular graphs with pi > 1.
        if inputs.regular and inputs.pi > 1 and None not in (turan, conj):
            require("regular_conjecture1>turan", conj > turan - tol)

        if inputs.t == 0:
            require("triangle_free_s_minus>=mu^2", inputs.s_minus >= inputs.mu ** 2 - tol)
            require("triangle_free_sqrt_s_plus<=n/2", math.sqrt(inputs.s_plus) <= inputs.n / 2 + tol)

    if inputs.omega is not None and inputs.chi is not None:
        require("omega<=chi", inputs.omega <= inputs.chi)

    return failed
