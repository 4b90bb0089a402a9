"""Independent numerical verification engines.

Three oracles cross-check the closed forms elsewhere in the package
without sharing code paths with them:

* a dense eigen-decomposition of the dynamical matrix against the
  quartic-root mode frequencies,
* a finite-difference application of the canonical Hamiltonian to the
  sampled ground state (residual of the eigenvalue equation),
* grid quadrature of the two-mode Gaussian second moments against the
  closed-form covariance entries.

``run_validation`` bundles them, together with a three-path agreement
check of the Simon functional, into a single report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import gaussian, oscillator
from .errors import DomainError, GridConfigurationError
from .gaussian import TwoModeGaussian
from .oscillator import GroundStateLambda, OscillatorParams

MIN_POINTS_PER_AXIS = 33
MIN_RESIDUAL_EXTENT = 6.0
MIN_POINTS_PER_LENGTH = 8.0


@dataclass(frozen=True)
class GridSpec:
    """Square uniform grid, sized in units of the state's characteristic length.

    ``extent`` is the half-width of the grid in characteristic lengths
    (1/sqrt of the smallest real exponent coefficient); the physical
    spacing follows once a concrete state fixes that length.
    """

    extent: float = 8.0
    points_per_axis: int = 257

    def __post_init__(self):
        if not (self.extent > 0):
            raise GridConfigurationError(f"extent must be positive, got {self.extent}")
        if self.points_per_axis < MIN_POINTS_PER_AXIS:
            raise GridConfigurationError(
                f"points_per_axis must be >= {MIN_POINTS_PER_AXIS} "
                f"(got {self.points_per_axis}); below that the stencil error "
                "dominates any physical signal"
            )

    def axis(self, char_length: float) -> tuple[np.ndarray, float]:
        """Physical grid axis and spacing for a given characteristic length."""
        half_width = self.extent * char_length
        x = np.linspace(-half_width, half_width, self.points_per_axis)
        return x, x[1] - x[0]


@dataclass(frozen=True)
class ValidationThresholds:
    """Pass/fail limits for ``run_validation``.

    The Schrodinger threshold reflects the pure O(h^2) discretization
    error of the default 257-point grid; the others are far above the
    oracle noise floor.
    """

    eigen: float = 1e-8
    schrodinger: float = 1e-2
    moments: float = 1e-4
    es_spread: float = 1e-9


@dataclass(frozen=True)
class ValidationReport:
    eigen_residual: float
    schrodinger_residual: float
    moment_max_err: float
    es_spread: float
    passed: bool
    thresholds: ValidationThresholds = field(default_factory=ValidationThresholds)


# Central-difference stencils on zero-padded arrays.  The states sampled
# here decay like exp(-extent^2/2) at the boundary, so the padding error
# is far below every tolerance in use.


def _shift(f: np.ndarray, k: int, axis: int, pad: int) -> np.ndarray:
    fp = np.pad(f, pad)
    fp = np.roll(fp, -k, axis=axis)
    sl = [slice(pad, -pad)] * f.ndim
    return fp[tuple(sl)]


def _d1(f: np.ndarray, h: float, axis: int) -> np.ndarray:
    """First derivative, second order."""
    return (_shift(f, 1, axis, 1) - _shift(f, -1, axis, 1)) / (2 * h)


def _d2(f: np.ndarray, h: float, axis: int) -> np.ndarray:
    """Second derivative, second order."""
    return (_shift(f, 1, axis, 1) - 2 * f + _shift(f, -1, axis, 1)) / (h * h)


def _d1_o6(f: np.ndarray, h: float, axis: int) -> np.ndarray:
    """First derivative, sixth order."""
    s = lambda k: _shift(f, k, axis, 3)
    return (-s(-3) + 9 * s(-2) - 45 * s(-1) + 45 * s(1) - 9 * s(2) + s(3)) / (60 * h)


def _d2_o6(f: np.ndarray, h: float, axis: int) -> np.ndarray:
    """Second derivative, sixth order."""
    s = lambda k: _shift(f, k, axis, 3)
    return (
        2 * s(-3) - 27 * s(-2) + 270 * s(-1) - 490 * f + 270 * s(1) - 27 * s(2) + 2 * s(3)
    ) / (180 * h * h)


def numeric_eigenvalues(omega_matrix: np.ndarray) -> np.ndarray:
    """Eigenvalues of the dynamical matrix, sorted by (imag, real).

    For a valid oscillator matrix these are {-i*s1, -i*s2, +i*s2, +i*s1}
    with real parts at roundoff level.
    """
    m = np.asarray(omega_matrix, dtype=float)
    if not np.all(np.isfinite(m)):
        raise DomainError("dynamical matrix contains non-finite entries")
    evals = np.linalg.eigvals(m)
    return np.array(sorted(evals, key=lambda z: (z.imag, z.real)))


def _sample_ground_state(
    lam: GroundStateLambda, grid: GridSpec
) -> tuple[np.ndarray, np.ndarray, np.ndarray, float]:
    ell = 1.0 / math.sqrt(min(lam.lambda11, lam.lambda22))
    x, h = grid.axis(ell)
    x1, x2 = np.meshgrid(x, x, indexing="ij")
    psi = np.exp(-0.5 * (lam.lambda11 * x1**2 + lam.lambda22 * x2**2 + 2 * lam.lambda12 * x1 * x2))
    return x1, x2, psi, h


def schrodinger_residual(
    params: OscillatorParams, lam: GroundStateLambda, grid: GridSpec
) -> float:
    """Relative L2 residual of (H - E00) psi00 on the grid.

    The canonical Hamiltonian (kinetic terms, quadratic potential and the
    theta cross term with x*d/dx structure) is discretized with
    second-order central differences; the residual therefore converges as
    O(h^2) under grid refinement for the true ground state.
    """
    if grid.extent < MIN_RESIDUAL_EXTENT:
        raise GridConfigurationError(
            f"grid extent must be >= {MIN_RESIDUAL_EXTENT} characteristic lengths "
            f"for a trustworthy residual, got {grid.extent}"
        )
    canon = oscillator.bopp_shift(params)
    spec = oscillator.mode_spectrum(params)
    e00 = 0.5 * (spec.sigma1 + spec.sigma2)

    x1, x2, psi, h = _sample_ground_state(lam, grid)
    h_psi = (
        -_d2(psi, h, 0) / (2 * canon.big_m1)
        - _d2(psi, h, 1) / (2 * canon.big_m2)
        + 0.5 * canon.big_m1 * canon.omega1_sq * x1**2 * psi
        + 0.5 * canon.big_m2 * canon.omega2_sq * x2**2 * psi
        # -theta*(a1 x1 p2 - a2 x2 p1) with p = -i d/dx
        + 1j * params.theta * params.alpha1 * x1 * _d1(psi, h, 1)
        - 1j * params.theta * params.alpha2 * x2 * _d1(psi, h, 0)
    )
    return float(np.linalg.norm(h_psi - e00 * psi) / np.linalg.norm(psi))


def gaussian_moment_quadrature(state: TwoModeGaussian, grid: GridSpec) -> gaussian.CovarianceBlocks:
    """All ten second moments by trapezoidal quadrature on the grid.

    Position moments use the sampled density directly; momentum moments
    apply sixth-order central-difference derivatives to the sampled wave
    function.  Requires at least 8 grid points per characteristic length
    of the narrower direction.
    """
    ell_wide = 1.0 / math.sqrt(min(state.alpha.real, state.beta.real))
    ell_narrow = 1.0 / math.sqrt(max(state.alpha.real, state.beta.real))
    x, h = grid.axis(ell_wide)
    if ell_narrow / h < MIN_POINTS_PER_LENGTH:
        raise GridConfigurationError(
            f"grid spacing {h:.4g} under-resolves the narrowest width "
            f"{ell_narrow:.4g}; need >= {MIN_POINTS_PER_LENGTH} points per length"
        )
    x1, x2 = np.meshgrid(x, x, indexing="ij")
    psi = np.exp(-0.5 * (state.alpha * x1**2 + state.beta * x2**2 + 2 * state.gamma * x1 * x2))
    norm = np.sum(np.abs(psi) ** 2)
    d1 = _d1_o6(psi, h, 0)
    d2 = _d1_o6(psi, h, 1)

    def expval(f):
        return float(np.sum(f).real / norm)

    density = np.abs(psi) ** 2
    x1x1 = expval(density * x1**2)
    x2x2 = expval(density * x2**2)
    x1x2 = expval(density * x1 * x2)
    p1p1 = expval(-np.conj(psi) * _d2_o6(psi, h, 0))
    p2p2 = expval(-np.conj(psi) * _d2_o6(psi, h, 1))
    p1p2 = expval(np.conj(d1) * d2)
    x1p1 = expval(np.conj(psi) * x1 * (-1j * d1))
    x2p2 = expval(np.conj(psi) * x2 * (-1j * d2))
    x1p2 = expval(np.conj(psi) * x1 * (-1j * d2))
    x2p1 = expval(np.conj(psi) * x2 * (-1j * d1))
    return gaussian.CovarianceBlocks(
        a_block=np.array([[x1x1, x1p1], [x1p1, p1p1]]),
        b_block=np.array([[x2x2, x2p2], [x2p2, p2p2]]),
        c_block=np.array([[x1x2, x1p2], [x2p1, p1p2]]),
    )


def _moment_max_err(closed: gaussian.CovarianceBlocks, quad: gaussian.CovarianceBlocks) -> float:
    worst = 0.0
    scale = max(
        np.abs(closed.a_block).max(), np.abs(closed.b_block).max(), np.abs(closed.c_block).max()
    )
    for name in ("a_block", "b_block", "c_block"):
        a = getattr(closed, name)
        b = getattr(quad, name)
        err = np.abs(a - b) / np.maximum(np.abs(a), 1e-3 * scale)
        worst = max(worst, float(err.max()))
    return worst


def run_validation(
    params: OscillatorParams,
    grid: GridSpec | None = None,
    thresholds: ValidationThresholds | None = None,
    lambda_override: GroundStateLambda | None = None,
) -> ValidationReport:
    """Run every oracle against the closed-form pipeline for one parameter set.

    ``lambda_override`` substitutes the ground-state exponent matrix fed to
    the Schrodinger and moment checks; it exists so tests can verify that a
    corrupted state is detected.
    """
    grid = grid or GridSpec()
    thresholds = thresholds or ValidationThresholds()

    spec = oscillator.mode_spectrum(params)
    evals = numeric_eigenvalues(oscillator.build_omega_matrix(params))
    expected = np.array(
        sorted(
            [-1j * spec.sigma1, -1j * spec.sigma2, 1j * spec.sigma2, 1j * spec.sigma1],
            key=lambda z: (z.imag, z.real),
        )
    )
    eigen_residual = float(np.max(np.abs(evals - expected)) / spec.sigma1)

    lam = lambda_override or oscillator.ground_state_lambda_closed(params, spec)
    schrod = schrodinger_residual(params, lam, grid)

    state = oscillator.ground_state_as_gaussian(lam)
    closed_cov = gaussian.covariance_blocks(state)
    quad_cov = gaussian_moment_quadrature(state, grid)
    moment_err = _moment_max_err(closed_cov, quad_cov)

    es_direct = oscillator.es_closed_form(params)
    es_pipeline = gaussian.simon_es(closed_cov)
    es_numeric = gaussian.simon_es(
        gaussian.covariance_blocks(
            oscillator.ground_state_as_gaussian(oscillator.ground_state_lambda_numeric(params))
        )
    )
    es_scale = max(abs(es_direct), abs(es_pipeline), abs(es_numeric), 1e-5)
    es_spread = (
        max(es_direct, es_pipeline, es_numeric) - min(es_direct, es_pipeline, es_numeric)
    ) / es_scale

    passed = (
        eigen_residual < thresholds.eigen
        and schrod < thresholds.schrodinger
        and moment_err < thresholds.moments
        and es_spread < thresholds.es_spread
    )
    return ValidationReport(
        eigen_residual=eigen_residual,
        schrodinger_residual=schrod,
        moment_max_err=moment_err,
        es_spread=es_spread,
        passed=passed,
        thresholds=thresholds,
    )
