"""Anisotropic harmonic oscillator on a noncommutative plane.

The model starts from H = P1^2/2m1 + P2^2/2m2 + alpha1*X1^2 + alpha2*X2^2
with [X1, X2] = i*theta.  A Bopp shift (X1 = x1 - theta*p2/2,
X2 = x2 + theta*p1/2) maps it onto canonical variables, where it becomes a
coupled quadratic Hamiltonian with effective masses M1, M2 and a
theta-dependent cross term.  This module provides:

* the Bopp-shifted canonical parameters,
* the quadratic-form matrix and the dynamical matrix of the equations of
  motion,
* the normal-mode frequencies sigma1 >= sigma2 and the energy levels,
* the ground-state Gaussian exponent matrix (closed form and an
  independent numeric route through the left eigenvectors),
* the closed-form Simon functional, its special cases, and the
  theta -> infinity bounds.

Everything is in hbar = 1 units; theta carries dimension length^2 but all
inputs are treated as plain numbers.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import gaussian
from .errors import (
    DegenerateSpectrumError,
    DomainError,
    SingularConfigurationError,
    SpectrumInconsistencyError,
    UnsupportedCaseError,
)
from .gaussian import TwoModeGaussian

#: Relative tolerance used to clamp a tiny discriminant to the degenerate case.
DEGENERACY_TOL = 1e-12

# i * Sigma_y with Sigma_y = diag(sigma_y, sigma_y); entries are exactly +-1.
_I_SIGMA_Y = np.kron(np.eye(2), np.array([[0.0, 1.0], [-1.0, 0.0]]))


@dataclass(frozen=True)
class OscillatorParams:
    """Physical inputs: masses, potential stiffnesses and the deformation.

    The stiffnesses enter the Hamiltonian as alpha_i * X_i^2, i.e.
    alpha_i = m_i * omega_i^2 / 2 for the commutative oscillator.
    """

    m1: float
    m2: float
    alpha1: float
    alpha2: float
    theta: float

    def __post_init__(self):
        for name in ("m1", "m2", "alpha1", "alpha2"):
            v = getattr(self, name)
            if not (v > 0) or not math.isfinite(v):
                raise DomainError(f"{name} must be positive and finite, got {v}")
        if not (self.theta >= 0) or not math.isfinite(self.theta):
            raise DomainError(f"theta must be nonnegative and finite, got {self.theta}")


@dataclass(frozen=True)
class CanonicalSystem:
    """Bopp-shifted effective masses and squared frequencies."""

    big_m1: float
    big_m2: float
    omega1_sq: float
    omega2_sq: float


@dataclass(frozen=True)
class ModeSpectrum:
    """Characteristic quartic lambda^4 + b*lambda^2 + c and its mode frequencies."""

    b: float
    c: float
    d: float
    sigma1: float
    sigma2: float
    degenerate: bool = False


@dataclass(frozen=True)
class GroundStateLambda:
    """Exponent matrix of the ground state, psi00 ~ exp(-x^T Lambda x / 2).

    The diagonal entries are real and positive; the off-diagonal entry is
    purely imaginary (up to roundoff) and carries all the entanglement.
    lambda21 equals lambda12.
    """

    lambda11: float
    lambda22: float
    lambda12: complex

    def __post_init__(self):
        if not (self.lambda11 > 0 and self.lambda22 > 0):
            raise DomainError(
                f"diagonal exponent coefficients must be positive, got "
                f"({self.lambda11}, {self.lambda22})"
            )


@dataclass(frozen=True)
class AsymptoticBounds:
    """theta -> infinity limits: E_S limit, Omega bound and the E_F bound."""

    e_s_limit: float
    omega0: float
    e_f_bound: float


def bopp_shift(params: OscillatorParams) -> CanonicalSystem:
    """Effective masses and frequencies of the canonical Hamiltonian.

    1/M1 = 1/m1 + alpha2*theta^2/2, 1/M2 = 1/m2 + alpha1*theta^2/2 and
    omega_i^2 = 2*alpha_i/M_i.  Positivity is automatic for valid inputs.
    """
    th2 = params.theta * params.theta
    inv_m1 = 1.0 / params.m1 + params.alpha2 * th2 / 2.0
    inv_m2 = 1.0 / params.m2 + params.alpha1 * th2 / 2.0
    return CanonicalSystem(
        big_m1=1.0 / inv_m1,
        big_m2=1.0 / inv_m2,
        omega1_sq=2.0 * params.alpha1 * inv_m1,
        omega2_sq=2.0 * params.alpha2 * inv_m2,
    )


def build_h_matrix(params: OscillatorParams) -> np.ndarray:
    """Symmetric quadratic-form matrix in the basis (x1, p1, x2, p2).

    H = X^T h X / 2 with diagonal (M1*w1^2, 1/M1, M2*w2^2, 1/M2) and
    couplings -theta*alpha1 at (x1, p2) and +theta*alpha2 at (p1, x2).
    """
    c = bopp_shift(params)
    ta1 = params.theta * params.alpha1
    ta2 = params.theta * params.alpha2
    return np.array(
        [
            [c.big_m1 * c.omega1_sq, 0.0, 0.0, -ta1],
            [0.0, 1.0 / c.big_m1, ta2, 0.0],
            [0.0, ta2, c.big_m2 * c.omega2_sq, 0.0],
            [-ta1, 0.0, 0.0, 1.0 / c.big_m2],
        ]
    )


def build_omega_matrix(params: OscillatorParams) -> np.ndarray:
    """Dynamical matrix of the Heisenberg equations, i*Sigma_y*h."""
    return _I_SIGMA_Y @ build_h_matrix(params)


def _char_factors(params: OscillatorParams, canon: CanonicalSystem) -> tuple[float, float]:
    """The two positive factors whose product is the quartic constant c.

    c1 = w2^2 - theta^2*(M1/M2)*alpha2^2 and
    c2 = w1^2 - theta^2*(M2/M1)*alpha1^2.  Both reduce to
    2*alpha_i/m_i * (M_j/M_i-weighted) combinations that stay positive for
    every valid parameter set.
    """
    th2 = params.theta * params.theta
    c1 = canon.omega2_sq - th2 * (canon.big_m1 / canon.big_m2) * params.alpha2**2
    c2 = canon.omega1_sq - th2 * (canon.big_m2 / canon.big_m1) * params.alpha1**2
    return c1, c2


def mode_spectrum(params: OscillatorParams, tol: float = DEGENERACY_TOL) -> ModeSpectrum:
    """Normal-mode frequencies from the characteristic quartic.

    sigma_{1,2} = sqrt((b +- sqrt(D))/2) with D = b^2 - 4c.  A negative D
    beyond ``tol * b^2`` is impossible for valid parameters and raises
    ``SpectrumInconsistencyError``; a tiny |D| is clamped to zero and the
    spectrum flagged degenerate.
    """
    canon = bopp_shift(params)
    b = canon.omega1_sq + canon.omega2_sq + 2 * params.theta**2 * params.alpha1 * params.alpha2
    c1, c2 = _char_factors(params, canon)
    c = c1 * c2
    if c <= 0:
        raise SpectrumInconsistencyError(
            f"quartic constant c = {c} <= 0 for params {params}; "
            "this cannot occur for valid inputs"
        )
    d = b * b - 4 * c
    degenerate = False
    if d < -tol * b * b:
        raise SpectrumInconsistencyError(
            f"discriminant D = {d} < 0 beyond tolerance for params {params}"
        )
    if abs(d) <= tol * b * b:
        d = 0.0
        degenerate = True
    sigma1 = math.sqrt((b + math.sqrt(d)) / 2)
    # sigma2 via the root product: sqrt((b - sqrt(D))/2) cancels badly
    # when c << b^2, while c is built from two exact positive factors.
    sigma2 = math.sqrt(c) / sigma1
    return ModeSpectrum(b=b, c=c, d=d, sigma1=sigma1, sigma2=sigma2, degenerate=degenerate)


def energy_level(spectrum: ModeSpectrum, n1: int, n2: int) -> float:
    """E(n1, n2) = sigma1*(n1 + 1/2) + sigma2*(n2 + 1/2)."""
    if n1 < 0 or n2 < 0 or n1 != int(n1) or n2 != int(n2):
        raise DomainError(f"quantum numbers must be nonnegative integers, got ({n1}, {n2})")
    return spectrum.sigma1 * (n1 + 0.5) + spectrum.sigma2 * (n2 + 0.5)


def _u_raw(params: OscillatorParams, canon: CanonicalSystem, sigma: float) -> np.ndarray:
    """Unnormalized left eigenvector of the dynamical matrix for eigenvalue -i*sigma."""
    m1, m2 = canon.big_m1, canon.big_m2
    a1, a2, th = params.alpha1, params.alpha2, params.theta
    w2s = canon.omega2_sq
    s2 = sigma * sigma
    return np.array(
        [
            -1j * m1 * m2 * sigma * (s2 - w2s - th * th * a1 * a2),
            m2 * (s2 - w2s) + th * th * m1 * a2 * a2,
            th * m1 * m2 * a2 * (s2 - th * th * a1 * a2) + th * m2 * m2 * a1 * w2s,
            1j * th * sigma * (m1 * a2 + m2 * a1),
        ]
    )


def right_from_left(u: np.ndarray) -> np.ndarray:
    """Right eigenvector paired with a left eigenvector: v = -Sigma_y u^dagger."""
    # Sigma_y = -i * (i Sigma_y), so -Sigma_y u* = i * (i Sigma_y) u*.
    return 1j * (_I_SIGMA_Y @ np.conj(u))


def left_eigenvectors(
    params: OscillatorParams, spectrum: ModeSpectrum
) -> tuple[np.ndarray, np.ndarray]:
    """Normalized left eigenvectors (u1, u2) of the dynamical matrix.

    u_i satisfies u_i @ Omega = -i*sigma_i*u_i and is scaled so that the
    biorthonormality u_i . v_j = delta_ij holds with v_i = -Sigma_y u_i^dagger.
    Returns an array of shape (2, 4) with the eigenvector rows and the
    array of the two normalization constants k_i.

    Raises ``DegenerateSpectrumError`` when sigma1 = sigma2 (the component
    formulas are singular there; the closed-form ground-state path stays
    finite and should be used instead).
    """
    if spectrum.degenerate:
        raise DegenerateSpectrumError(
            "eigenvector formulas are singular for a degenerate spectrum; "
            "use ground_state_lambda_closed"
        )
    canon = bopp_shift(params)
    rows = []
    ks = []
    for sigma in (spectrum.sigma1, spectrum.sigma2):
        u = _u_raw(params, canon, sigma)
        scale = np.abs(u).max()
        if scale == 0:
            raise DegenerateSpectrumError(
                "eigenvector formula degenerates to the zero vector for "
                f"sigma = {sigma}; use ground_state_lambda_closed"
            )
        q = (u @ right_from_left(u)).real
        if q <= 0:
            raise SingularConfigurationError(
                f"eigenvector pairing u.v = {q} is not positive for sigma = {sigma}"
            )
        k = math.sqrt(q)
        u = u / k
        # Phase convention: first nonzero component has argument in (-pi/2, pi/2].
        for comp in u:
            if abs(comp) > 1e-12 * np.abs(u).max():
                phi = cmath.phase(comp)
                if not (-math.pi / 2 < phi <= math.pi / 2):
                    u = -u
                break
        rows.append(u)
        ks.append(k)
    return np.array(rows), np.array(ks)


def ground_state_lambda_closed(
    params: OscillatorParams, spectrum: ModeSpectrum
) -> GroundStateLambda:
    """Ground-state exponent matrix in closed form.

    Using the positive factors c1, c2 of the quartic constant
    (sigma1*sigma2 = sqrt(c1*c2)), the printed expressions

        L11 = M1 M2 s1 s2 (s1+s2) / [M2(w2^2 + s1 s2) - th^2 M1 a2^2]
        L22 = M2 (M2 w2^2 - M1 th^2 a2^2)(s1+s2) / [...]
        L12 = i M2 (th^3 M1 a2^2 a1 - th M2 a1 w2^2 + th M1 a2 s1 s2) / [...]

    simplify (exactly) to

        L11 = M1 sqrt(c2) (s1+s2) / (sqrt(c1)+sqrt(c2))
        L22 = M2 sqrt(c1) (s1+s2) / (sqrt(c1)+sqrt(c2))
        L12 = 2i th a1 a2 M1 M2 (a2/m2 - a1/m1)
              / [(M1 a2 sqrt(c2) + M2 a1 sqrt(c1)) (sqrt(c1)+sqrt(c2))]

    which are used here: they avoid catastrophic cancellation and make
    L12 vanish identically on the separable surface a1/m1 = a2/m2.
    """
    canon = bopp_shift(params)
    c1, c2 = _char_factors(params, canon)
    den_scale = abs(canon.big_m2 * canon.omega2_sq) + abs(
        canon.big_m2 * spectrum.sigma1 * spectrum.sigma2
    ) + abs(params.theta**2 * canon.big_m1 * params.alpha2**2)
    if c1 <= 0 or c2 <= 0 or canon.big_m2 * c1 < 1e-12 * den_scale:
        raise SingularConfigurationError(
            f"ground-state denominator is singular for params {params}"
        )
    r1, r2 = math.sqrt(c1), math.sqrt(c2)
    sig_sum = spectrum.sigma1 + spectrum.sigma2
    lam11 = canon.big_m1 * r2 * sig_sum / (r1 + r2)
    lam22 = canon.big_m2 * r1 * sig_sum / (r1 + r2)
    aniso = params.alpha2 / params.m2 - params.alpha1 / params.m1
    lam12 = (
        2j
        * params.theta
        * params.alpha1
        * params.alpha2
        * canon.big_m1
        * canon.big_m2
        * aniso
        / ((canon.big_m1 * params.alpha2 * r2 + canon.big_m2 * params.alpha1 * r1) * (r1 + r2))
    )
    return GroundStateLambda(lambda11=lam11, lambda22=lam22, lambda12=lam12)


def ground_state_lambda_numeric(params: OscillatorParams) -> GroundStateLambda:
    """Ground-state exponent matrix via numerically computed eigenvectors.

    Solves the left eigenproblem of the dynamical matrix with a dense
    eigensolver, assembles xi from the position components and eta from
    the momentum components of the two eigenvectors with eigenvalues
    -i*sigma_i, and returns Lambda = i * eta^{-1} xi (symmetrized).  The
    result is invariant under any rescaling or mixing of the eigenvector
    rows, so no normalization is needed; this is the independent check on
    the closed forms.
    """
    omega = build_omega_matrix(params)
    evals, vl = scipy.linalg.eig(omega.T)
    order = np.argsort(evals.imag)
    neg = order[:2]  # the two eigenvalues -i*sigma_i
    u = vl[:, neg].T
    xi = u[:, [0, 2]]
    eta = u[:, [1, 3]]
    det_eta = np.linalg.det(eta)
    if abs(det_eta) < 1e-12 * np.abs(eta).max() ** 2:
        raise SingularConfigurationError(
            f"eigenbasis momentum block is ill-conditioned (det = {det_eta})"
        )
    lam = 1j * np.linalg.inv(eta) @ xi
    lam = (lam + lam.T) / 2
    scale = np.abs(lam).max()
    if abs(lam[0, 0].imag) > 1e-9 * scale or abs(lam[1, 1].imag) > 1e-9 * scale:
        raise SingularConfigurationError(
            f"numeric exponent matrix has non-real diagonal: {lam.diagonal()}"
        )
    return GroundStateLambda(
        lambda11=lam[0, 0].real,
        lambda22=lam[1, 1].real,
        lambda12=complex(lam[0, 1]),
    )


def ground_state_as_gaussian(lam: GroundStateLambda) -> TwoModeGaussian:
    """Map the exponent matrix onto the two-mode Gaussian coefficients.

    alpha = Lambda11, beta = Lambda22 and gamma = Lambda12 (the cross term
    of psi00 is (Lambda12 + Lambda21) x1 x2 = 2*Lambda12 x1 x2).
    """
    return TwoModeGaussian(alpha=lam.lambda11, beta=lam.lambda22, gamma=lam.lambda12)


def es_closed_form(params: OscillatorParams) -> float:
    """Simon functional of the ground state, directly from the inputs.

    E_S = -(theta^2/8) sqrt(a1 m2 a2 m1) (sqrt(a1 m2) - sqrt(a2 m1))^2
          / [2 theta^2 a1 m2 a2 m1 + (sqrt(a1 m2) + sqrt(a2 m1))^2]

    Never positive; zero exactly when theta = 0 or a1/m1 = a2/m2.
    """
    x = math.sqrt(params.alpha1 * params.m2)
    y = math.sqrt(params.alpha2 * params.m1)
    th2 = params.theta * params.theta
    return -(th2 / 8) * x * y * (x - y) ** 2 / (2 * th2 * x * x * y * y + (x + y) ** 2)


def es_special_cases(params: OscillatorParams) -> float:
    """Reduced E_S formulas for equal stiffness or equal mass.

    Case (i), alpha1 = alpha2: an oscillator with unequal masses, the
    noncommutative analogue of a charged particle in a transverse field.
    Case (ii), m1 = m2: a conventional anisotropic oscillator.  Raises
    ``UnsupportedCaseError`` when neither applies.
    """
    th2 = params.theta * params.theta
    if params.alpha1 == params.alpha2:
        a = params.alpha1
        m1, m2 = params.m1, params.m2
        return (
            -(th2 * a * m1 * m2 / (8 * math.sqrt(m1 * m2)))
            * (math.sqrt(m1) - math.sqrt(m2)) ** 2
            / (2 * th2 * a * m1 * m2 + (math.sqrt(m1) + math.sqrt(m2)) ** 2)
        )
    if params.m1 == params.m2:
        m = params.m1
        a1, a2 = params.alpha1, params.alpha2
        return (
            -(th2 * m * a1 * a2 / (8 * math.sqrt(a1 * a2)))
            * (math.sqrt(a1) - math.sqrt(a2)) ** 2
            / (2 * th2 * m * a1 * a2 + (math.sqrt(a1) + math.sqrt(a2)) ** 2)
        )
    raise UnsupportedCaseError(
        "special-case formulas require alpha1 == alpha2 or m1 == m2; "
        "use es_closed_form for generic parameters"
    )


def asymptotic_bounds(params: OscillatorParams) -> AsymptoticBounds:
    """theta -> infinity limits; the theta field of the input is ignored.

    E_S(inf) = -(1/16) (sqrt(a1 m2) - sqrt(a2 m1))^2 / sqrt(a1 m2 a2 m1),
    Omega0 = (sqrt(a1 m2) + sqrt(a2 m1)) / (4 (a1 m2 a2 m1)^(1/4)), and
    the E_F bound is the formation entropy evaluated at Omega0.
    Omega0^2 = 1/4 - E_S(inf) holds identically.
    """
    x = math.sqrt(params.alpha1 * params.m2)
    y = math.sqrt(params.alpha2 * params.m1)
    e_s_limit = -(x - y) ** 2 / (16 * x * y)
    omega0 = (x + y) / (4 * math.sqrt(x * y))
    _, e_f_bound = gaussian.entanglement_of_formation(e_s_limit)
    return AsymptoticBounds(e_s_limit=e_s_limit, omega0=omega0, e_f_bound=e_f_bound)


def anisotropy_ratio(params: OscillatorParams) -> float:
    """Generalized anisotropy r = (alpha1/m1)/(alpha2/m2); r = 1 iff separable for all theta."""
    return (params.alpha1 / params.m1) / (params.alpha2 / params.m2)
