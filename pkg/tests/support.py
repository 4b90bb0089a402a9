"""Shared helpers for the test suite."""

import math

from ncho import OscillatorParams, TwoModeGaussian

FIG1_PARAMS = dict(m1=1.0, m2=1.0, alpha1=5.0, alpha2=10.0)


def fig1(theta: float) -> OscillatorParams:
    return OscillatorParams(theta=theta, **FIG1_PARAMS)


def random_params(rng, theta_low=0.0, theta_high=5.0) -> OscillatorParams:
    return OscillatorParams(
        m1=rng.uniform(0.1, 10.0),
        m2=rng.uniform(0.1, 10.0),
        alpha1=rng.uniform(0.1, 10.0),
        alpha2=rng.uniform(0.1, 10.0),
        theta=rng.uniform(theta_low, theta_high),
    )


def random_state(rng, cross_fraction=0.8) -> TwoModeGaussian:
    """A valid random two-mode Gaussian with complex coefficients."""
    a1 = rng.uniform(0.3, 3.0)
    b1 = rng.uniform(0.3, 3.0)
    g1 = cross_fraction * math.sqrt(a1 * b1) * rng.uniform(-1.0, 1.0)
    return TwoModeGaussian(
        alpha=complex(a1, rng.uniform(-1.0, 1.0)),
        beta=complex(b1, rng.uniform(-1.0, 1.0)),
        gamma=complex(g1, rng.uniform(-1.0, 1.0)),
    )
