"""The two-Pauli channel family and its closed forms.

A single rate x in [0, 1] is the probability of leaving the qubit alone;
otherwise one of sigma_x, sigma_y is applied with probability (1 - x)/2
each. Every quantity here has a closed form as well as a generic route
through `qsr.channel`, so the two paths can cross-validate each other.
"""

from __future__ import annotations

import math

import numpy as np

from .channel import (
    BlochVector,
    ChannelMetrics,
    IDENTITY,
    KrausChannel,
    PAULI_X,
    PAULI_Y,
    as_bloch,
    spectrum_entropy,
)
from .linalg import hermitian_eigenvalues


def _check_rate(x: float) -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"flipping rate must be in [0, 1], got {x!r}")
    return x


def make_two_pauli(x: float) -> KrausChannel:
    """Kraus channel: identity with probability x, else sigma_x or sigma_y.

    Operator order is fixed as (identity term, sigma_x term, sigma_y term)
    and the sigma_y operator carries a -i phase. Both conventions are load
    bearing: the closed-form exchange matrix in this module matches this
    layout entry for entry, not just spectrally.
    """
    x = _check_rate(x)
    amp = math.sqrt(0.5 * (1.0 - x))
    ops = (
        math.sqrt(x) * IDENTITY,
        amp * PAULI_X,
        (-1j * amp) * PAULI_Y,
    )
    return KrausChannel(ops, label=f"two-pauli(x={x:g})")


def analytic_output_bloch(state, x: float) -> BlochVector:
    """Channel action on the Bloch vector: (a1 x, a2 x, a3 (2x - 1))."""
    state = as_bloch(state)
    x = _check_rate(x)
    return BlochVector(state.a1 * x, state.a2 * x, state.a3 * (2.0 * x - 1.0))


def analytic_exchange_matrix(state, x: float) -> np.ndarray:
    """Closed-form 3x3 exchange matrix for the two-Pauli channel.

    Matches `qsr.channel.exchange_matrix` on the channel from
    `make_two_pauli` entrywise, including the off-diagonal phases that the
    -i convention on the sigma_y operator produces.
    """
    state = as_bloch(state)
    x = _check_rate(x)
    root = math.sqrt(0.5 * x * (1.0 - x))
    half = 0.5 * (1.0 - x)
    cross = state.a3 * half
    return np.array(
        [
            [x, state.a1 * root, 1j * state.a2 * root],
            [state.a1 * root, half, cross],
            [-1j * state.a2 * root, cross, half],
        ],
        dtype=complex,
    )


def _output_radius(state: BlochVector, x: float) -> float:
    planar = state.a1 * state.a1 + state.a2 * state.a2
    axial = 1.0 - 2.0 * x
    return math.sqrt(planar * x * x + state.a3 * state.a3 * axial * axial)


def analytic_output_entropy(state, x: float) -> float:
    """Output entropy in bits from the output Bloch length |b|.

    The output eigenvalues are (1 +- |b|)/2 with
    |b|^2 = (a1^2 + a2^2) x^2 + a3^2 (1 - 2x)^2.
    """
    state = as_bloch(state)
    x = _check_rate(x)
    r = _output_radius(state, x)
    return spectrum_entropy((0.5 * (1.0 + r), 0.5 * (1.0 - r)))


def analytic_fidelity(state, x: float) -> float:
    """Entangled fidelity (a1^2 + a2^2)(1 - x)/2 + x."""
    state = as_bloch(state)
    x = _check_rate(x)
    planar = state.a1 * state.a1 + state.a2 * state.a2
    return 0.5 * planar * (1.0 - x) + x


def two_pauli_metrics(state, x: float) -> ChannelMetrics:
    """All figures of merit for one (state, x) sample.

    The noise is the entropy of the closed-form exchange matrix spectrum;
    output entropy, fidelity and the output state come from their closed
    forms; coherent information is stored as output entropy minus noise.
    """
    state = as_bloch(state)
    x = _check_rate(x)
    noise = spectrum_entropy(hermitian_eigenvalues(analytic_exchange_matrix(state, x)))
    output_entropy = analytic_output_entropy(state, x)
    norm = state.norm
    input_entropy = spectrum_entropy((0.5 * (1.0 + norm), 0.5 * (1.0 - norm)))
    return ChannelMetrics(
        x=x,
        noise=noise,
        output_entropy=output_entropy,
        coherent_info=output_entropy - noise,
        mutual_info=input_entropy + output_entropy - noise,
        fidelity=analytic_fidelity(state, x),
        output_bloch=analytic_output_bloch(state, x),
    )
