"""
Adjacency spectra: a cyclic Jacobi eigensolver for dense symmetric matrices,
inertia classification and the s+ / s- invariants, with the trace identities
tr(A) = 0, tr(A^2) = 2m and tr(A^3) = 6t checked on every spectrum.
"""

import math
import logging

import numpy as np

from math import comb
from dataclasses import dataclass
from typing import Sequence, Tuple

from .config import ToleranceConfig
from .graph import Graph, triangle_count
from .types import Eigensolver
from .exceptions import (
    ConsistencyError, ConvergenceError, GraphInputError, NonSymmetricMatrix,
)


logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """
    Eigenvalues of a graph sorted in descending order together with the inertia
    (pi, nu, gamma) and the sums of squares of the positive and negative
    eigenvalues. s_plus is summed from the classified-positive eigenvalues rather
    than derived from 2m - s_minus so that the tr(A^2) identity is a real check.
    """

    eigenvalues: Tuple[float, ...]
    inertia: Tuple[int, int, int]
    mu: float
    mu_min: float
    s_plus: float
    s_minus: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def pi(self) -> int:
        return self.inertia[0]

    @property
    def nu(self) -> int:
        return self.inertia[1]

    @property
    def gamma(self) -> int:
        return self.inertia[2]

    @property
    def trace(self) -> float:
        return math.fsum(self.eigenvalues)

    @property
    def trace_square(self) -> float:
        return math.fsum(x * x for x in self.eigenvalues)

    @property
    def trace_cube(self) -> float:
        return math.fsum(x ** 3 for x in self.eigenvalues)

    @classmethod
    def from_eigenvalues(cls, eigs: Sequence[float], zero_tol: float) -> "Spectrum":
        eigs = tuple(sorted((float(x) for x in eigs), reverse=True))
        inertia = classify_inertia(eigs, zero_tol)
        pi, nu, _ = inertia
        return cls(
            eigenvalues=eigs,
            inertia=inertia,
            mu=eigs[0],
            mu_min=eigs[-1],
            s_plus=math.fsum(x * x for x in eigs[:pi]),
            s_minus=math.fsum(x * x for x in eigs[len(eigs) - nu:]),
        )

    def check(self, g: Graph, tol: ToleranceConfig):
        """
        Verifies every spectrum invariant against the graph and raises
        ConsistencyError naming the first identity that fails.
        """
        identity = tol.identity(g.m)
        if sum(self.inertia) != g.n or self.n != g.n:
            raise ConsistencyError(f"inertia {self.inertia} does not account for n={g.n}")

        if abs(self.trace) > identity:
            raise ConsistencyError(f"tr(A) = {self.trace:.3e} exceeds tolerance {identity:.1e}")

        residual = self.s_plus + self.s_minus - 2 * g.m
        if abs(residual) > identity:
            raise ConsistencyError(
                f"s+ + s- - 2m = {residual:.3e} exceeds tolerance {identity:.1e}"
            )

        if g.m >= 1:
            if self.mu + identity < abs(self.mu_min):
                raise ConsistencyError(f"spectral radius {self.mu} below |mu_n| = {abs(self.mu_min)}")
            if self.mu + identity < 2 * g.m / g.n:
                raise ConsistencyError(f"spectral radius {self.mu} below average degree {2 * g.m / g.n}")
            if self.s_plus + identity < self.mu ** 2:
                raise ConsistencyError(f"s+ = {self.s_plus} below mu^2 = {self.mu ** 2}")


def adjacency_matrix(g: Graph) -> np.ndarray:
    """
    The dense 0/1 adjacency matrix of the graph as float64.
    """
    a = np.zeros((g.n, g.n), dtype=np.float64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def _validate_square_symmetric(a: np.ndarray):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonSymmetricMatrix(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise GraphInputError("eigenvalues of an empty matrix are undefined")
    if not np.all(np.isfinite(a)):
        raise NonSymmetricMatrix("matrix has non-finite entries")
    if np.max(np.abs(a - a.T)) > SYMMETRY_TOL:
        raise NonSymmetricMatrix("matrix is not symmetric")


def _off_diagonal_norm(a: np.ndarray) -> float:
    # Sum the upper triangle; ||A||^2 - ||diag||^2 cancels near convergence.
    return math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))


def jacobi_eigenvalues(matrix, cfg: ToleranceConfig = None) -> np.ndarray:
    """
    Cyclic Jacobi: sweeps over every off-diagonal pair (p, q) in row order and
    applies the plane rotation that zeroes a[p, q], until the off-diagonal
    Frobenius norm drops below zero_eig_tol * 1e-3 (or the rounding floor
    n * eps * ||A||, if that is larger). Returns the eigenvalues in descending
    order.
    """
    cfg = cfg or ToleranceConfig()
    a = np.array(matrix, dtype=np.float64, copy=True)
    _validate_square_symmetric(a)

    n = a.shape[0]
    a = (a + a.T) / 2.0
    floor = n * np.finfo(np.float64).eps * float(np.linalg.norm(a))
    threshold = max(cfg.zero_eig(n) * 1e-3, floor)

    for sweep in range(cfg["solver_sweep_limit"]):
        off = _off_diagonal_norm(a)
        if off < threshold:
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue

                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q

                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q

                a[p, q] = a[q, p] = 0.0
    else:
        off = _off_diagonal_norm(a)
        if off >= threshold:
            raise ConvergenceError(
                f"Jacobi did not converge in {cfg['solver_sweep_limit']} sweeps "
                f"(off-diagonal norm {off:.3e}, threshold {threshold:.1e})"
            )

    return np.sort(np.diag(a))[::-1].copy()


def symmetric_eigenvalues(matrix, cfg: ToleranceConfig = None) -> np.ndarray:
    """
    Eigenvalues of a real symmetric matrix in descending order, computed with the
    eigensolver selected by the tolerance configuration.
    """
    cfg = cfg or ToleranceConfig()
    if cfg.solver == Eigensolver.LAPACK:
        a = np.array(matrix, dtype=np.float64, copy=True)
        _validate_square_symmetric(a)
        return np.linalg.eigvalsh(a)[::-1].copy()
    return jacobi_eigenvalues(matrix, cfg)


def classify_inertia(eigs: Sequence[float], zero_tol: float) -> Tuple[int, int, int]:
    """
    Counts positive, negative and zero eigenvalues. Values with |x| <= zero_tol
    are zero, so a tie at the threshold never inflates s+.
    """
    pi = sum(1 for x in eigs if x > zero_tol)
    nu = sum(1 for x in eigs if x < -zero_tol)
    return pi, nu, len(eigs) - pi - nu


def spectrum_of(g: Graph, cfg: ToleranceConfig = None) -> Spectrum:
    """
    Computes and self-checks the adjacency spectrum of the graph.
    """
    cfg = cfg or ToleranceConfig()
    if g.n == 0:
        raise GraphInputError("spectrum of a graph without vertices is undefined")

    eigs = symmetric_eigenvalues(adjacency_matrix(g), cfg)
    spectrum = Spectrum.from_eigenvalues(eigs, cfg.zero_eig(g.n))
    spectrum.check(g, cfg)
    return spectrum


def trace_cube(g: Graph, spectrum: Spectrum, cfg: ToleranceConfig = None, t: int = None) -> float:
    """
    Sum of cubed eigenvalues, checked against tr(A^3) = 6t within identity_tol * n.
    """
    cfg = cfg or ToleranceConfig()
    t = triangle_count(g) if t is None else t
    value = spectrum.trace_cube
    allowed = cfg.identity(g.m) * g.n
    if abs(value - 6 * t) > allowed:
        raise ConsistencyError(
            f"tr(A^3) = {value:.6f} but 6t = {6 * t} (tolerance {allowed:.1e})"
        )
    return value


def kneser2_closed_form(p: int) -> Spectrum:
    """
    Exact spectrum of KG_{p,2}: C(p-2, 2) once, -(p-3) with multiplicity p-1 and 1
    with multiplicity C(p, 2) - p.
    """
    if p < 4:
        raise GraphInputError(f"closed-form Kneser spectrum needs p >= 4, got {p}")

    eigs = (
        [float(comb(p - 2, 2))]
        + [float(-(p - 3))] * (p - 1)
        + [1.0] * (comb(p, 2) - p)
    )
    eigs.sort(reverse=True)
    pi = sum(1 for x in eigs if x > 0)
    nu = sum(1 for x in eigs if x < 0)
    return Spectrum(
        eigenvalues=tuple(eigs),
        inertia=(pi, nu, len(eigs) - pi - nu),
        mu=eigs[0],
        mu_min=eigs[-1],
        s_plus=float(comb(p - 2, 2) ** 2 + comb(p, 2) - p),
        s_minus=float((p - 1) * (p - 3) ** 2),
    )
