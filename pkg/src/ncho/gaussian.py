"""Pure two-mode Gaussian states and their entanglement.

A state is parametrized by the complex coefficients of its exponent,

    psi(x1, x2) = N0 * exp(-(alpha*x1^2 + beta*x2^2 + 2*gamma*x1*x2)/2),

in hbar = 1 oscillator units.  From these coefficients the module computes
the normalization, the 2x2 covariance blocks of both modes and their cross
correlations, the Simon separability functional E_S, and the Entanglement
of Formation E_F (in nats).  All functions are pure and all values are
immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericRangeError

# 2x2 symplectic unit.
_J = np.array([[0.0, 1.0], [-1.0, 0.0]])

#: Default relative comparison tolerance for consistency checks.
DEFAULT_TOL = 1e-10

#: Below this distance of Omega from 1/2 the x*ln(x) limit branch is taken.
OMEGA_LIMIT_GUARD = 1e-15


@dataclass(frozen=True)
class TwoModeGaussian:
    """Exponent coefficients of a normalized two-mode Gaussian.

    Requires Re(alpha) > 0, Re(beta) > 0 and
    Re(alpha)*Re(beta) - Re(gamma)^2 > 0 so the state is square
    integrable.
    """

    alpha: complex
    beta: complex
    gamma: complex

    def __post_init__(self):
        if not (self.alpha.real > 0):
            raise DomainError(f"Re(alpha) > 0 violated: Re(alpha) = {self.alpha.real}")
        if not (self.beta.real > 0):
            raise DomainError(f"Re(beta) > 0 violated: Re(beta) = {self.beta.real}")
        if not (self.delta_sq > 0):
            raise DomainError(
                "Re(alpha)*Re(beta) - Re(gamma)^2 > 0 violated: "
                f"got {self.delta_sq}"
            )

    @property
    def delta_sq(self) -> float:
        """Re(alpha)*Re(beta) - Re(gamma)^2, the squared width determinant."""
        return self.alpha.real * self.beta.real - self.gamma.real**2

    @property
    def delta(self) -> float:
        return math.sqrt(self.delta_sq)


@dataclass(frozen=True)
class CovarianceBlocks:
    """Second-moment blocks of a two-mode state.

    ``a_block`` and ``b_block`` are the symmetric single-mode blocks
    [[<x^2>, <{x,p}/2>], [<{x,p}/2>, <p^2>]]; ``c_block`` holds the cross
    moments [[<x1 x2>, <x1 p2>], [<x2 p1>, <p1 p2>]].
    """

    a_block: np.ndarray
    b_block: np.ndarray
    c_block: np.ndarray

    def __post_init__(self):
        for name in ("a_block", "b_block", "c_block"):
            m = np.asarray(getattr(self, name), dtype=float)
            if m.shape != (2, 2):
                raise DomainError(f"{name} must be a 2x2 matrix, got shape {m.shape}")
            object.__setattr__(self, name, m)


@dataclass(frozen=True)
class EntanglementReport:
    """Simon functional, its derived quantities and the verdict."""

    e_s: float
    omega: float
    e_f: float
    separable: bool


def normalization(state: TwoModeGaussian) -> float:
    """Squared normalization constant |N0|^2 = Delta/pi."""
    return state.delta / math.pi


def covariance_blocks(state: TwoModeGaussian) -> CovarianceBlocks:
    """All ten second moments of the state, in closed form.

    The position moments depend only on the real parts of the exponent
    coefficients; the momentum and mixed moments pick up the imaginary
    parts as well.
    """
    a1, a2 = state.alpha.real, state.alpha.imag
    b1, b2 = state.beta.real, state.beta.imag
    g1, g2 = state.gamma.real, state.gamma.imag
    d2 = state.delta_sq

    x1x1 = b1 / (2 * d2)
    x2x2 = a1 / (2 * d2)
    x1x2 = -g1 / (2 * d2)

    p1p1 = (b1 * (a1 * a1 + a2 * a2) - a1 * (g1 * g1 - g2 * g2) - 2 * a2 * g1 * g2) / (2 * d2)
    p2p2 = (a1 * (b1 * b1 + b2 * b2) - b1 * (g1 * g1 - g2 * g2) - 2 * b2 * g1 * g2) / (2 * d2)
    p1p2 = ((a1 * g1 + a2 * g2) * d2 + (a1 * b2 - g1 * g2) * (a1 * g2 - a2 * g1)) / (2 * a1 * d2)

    # Symmetrized <{x,p}>/2 moments.
    x1p1 = (g1 * g2 - a2 * b1) / (2 * d2)
    x2p2 = (g1 * g2 - a1 * b2) / (2 * d2)
    x1p2 = (g1 * b2 - g2 * b1) / (2 * d2)
    x2p1 = (g1 * a2 - g2 * a1) / (2 * d2)

    return CovarianceBlocks(
        a_block=np.array([[x1x1, x1p1], [x1p1, p1p1]]),
        b_block=np.array([[x2x2, x2p2], [x2p2, p2p2]]),
        c_block=np.array([[x1x2, x1p2], [x2p1, p1p2]]),
    )


def simon_es(cov: CovarianceBlocks) -> float:
    """Simon separability functional from the covariance blocks.

    E_S = det A * det B + (1/4 - |det C|)^2 - tr(A J C J B J C^T J)
          - (det A + det B)/4.

    E_S >= 0 is necessary and sufficient for separability of a bipartite
    Gaussian state; E_S < 0 means entanglement.
    """
    a, b, c = cov.a_block, cov.b_block, cov.c_block
    det_a = float(np.linalg.det(a))
    det_b = float(np.linalg.det(b))
    det_c = float(np.linalg.det(c))
    tr = float(np.trace(a @ _J @ c @ _J @ b @ _J @ c.T @ _J))
    e_s = det_a * det_b + (0.25 - abs(det_c)) ** 2 - tr - 0.25 * (det_a + det_b)
    if not math.isfinite(e_s):
        raise NumericRangeError("Simon functional overflowed; covariance entries too large")
    return e_s


def simon_es_closed(state: TwoModeGaussian) -> float:
    """E_S for a state of the exponent family: -(g1^2 + g2^2)/(4 Delta^2).

    Algebraically identical to ``simon_es(covariance_blocks(state))`` but
    free of the cancellations of the matrix route.
    """
    g1, g2 = state.gamma.real, state.gamma.imag
    return -0.25 * (g1 * g1 + g2 * g2) / state.delta_sq


def entanglement_of_formation(e_s: float) -> tuple[float, float]:
    """(Omega, E_F) from the Simon functional of a pure two-mode Gaussian.

    Omega = sqrt(1/4 - E_S) and

        E_F = (Omega + 1/2) ln(Omega + 1/2) - (Omega - 1/2) ln(Omega - 1/2),

    the von Neumann entropy of either reduced mode, in nats.  The
    Omega -> 1/2 limit is taken continuously, so E_F(0) = 0 exactly.
    """
    if e_s > 0:
        raise DomainError(
            f"E_S = {e_s} > 0: the pure-state Simon functional is never positive; "
            "a positive value indicates a broken covariance computation upstream"
        )
    omega = math.sqrt(0.25 - e_s)
    t = omega - 0.5
    if t < OMEGA_LIMIT_GUARD:
        return omega, 0.0
    e_f = (omega + 0.5) * math.log(omega + 0.5) - t * math.log(t)
    return omega, e_f


def entanglement_report(state: TwoModeGaussian) -> EntanglementReport:
    """Full entanglement analysis of a state."""
    e_s = simon_es(covariance_blocks(state))
    # Matrix-route rounding can leave a tiny positive residue on separable states.
    if 0 < e_s < 1e-12:
        e_s = 0.0
    omega, e_f = entanglement_of_formation(e_s)
    return EntanglementReport(e_s=e_s, omega=omega, e_f=e_f, separable=e_s >= 0)
