"""Self-check suite for the channel machinery, runnable from the CLI.

Covers completeness of the two-Pauli family, exchange-matrix properties,
agreement between the closed forms and the generic Kraus route, the
system-environment dilation cross-check, and the collapse of coherent
information on pure states. A deliberately broken operator set is included
as a negative control to prove the completeness detector actually fires.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import (
    BlochVector,
    IDENTITY,
    KrausChannel,
    apply_channel,
    bloch_to_density,
    completeness_residual,
    density_to_bloch,
    entangled_fidelity,
    entropy_exchange,
    environment_output,
    exchange_matrix,
    von_neumann_entropy,
)
from .linalg import hermitian_eigenvalues, hermitian_residual
from .resonance import bloch_ball_grid
from .two_pauli import (
    analytic_exchange_matrix,
    analytic_fidelity,
    analytic_output_bloch,
    analytic_output_entropy,
    make_two_pauli,
    two_pauli_metrics,
)

DEFAULT_SEED = 20240117


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def random_bloch_vector(rng, pure: bool = False) -> BlochVector:
    """Random direction; radius 1 if pure, else uniform in the ball."""
    v = rng.normal(size=3)
    v /= np.linalg.norm(v)
    if not pure:
        v *= rng.uniform() ** (1.0 / 3.0)
    return BlochVector(*v)


def _inverse_sqrt_2x2(mat: np.ndarray) -> np.ndarray:
    """Inverse square root of a 2x2 Hermitian positive definite matrix."""
    t = np.trace(mat).real
    d = (mat[0, 0] * mat[1, 1] - mat[0, 1] * mat[1, 0]).real
    if d <= 0.0 or t <= 0.0:
        raise ValueError("matrix is not positive definite")
    s = math.sqrt(d)
    root = (mat + s * IDENTITY) / math.sqrt(t + 2.0 * s)
    det = root[0, 0] * root[1, 1] - root[0, 1] * root[1, 0]
    return (
        np.array([[root[1, 1], -root[0, 1]], [-root[1, 0], root[0, 0]]], dtype=complex)
        / det
    )


def random_kraus_channel(rng, num_operators: int | None = None) -> KrausChannel:
    """Random trace-preserving channel with 1..6 Kraus operators.

    Draws Gaussian complex matrices and right-multiplies by the inverse
    square root of their Gram sum, which enforces completeness exactly
    (up to rounding).
    """
    k = int(num_operators) if num_operators is not None else int(rng.integers(1, 7))
    raw = [rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(k)]
    gram = sum(b.conj().T @ b for b in raw)
    whitener = _inverse_sqrt_2x2(gram)
    ops = tuple(b @ whitener for b in raw)
    return KrausChannel(ops, label=f"random(k={k})")


def check_two_pauli_completeness(samples: int = 101) -> CheckResult:
    worst = max(
        completeness_residual(make_two_pauli(x))
        for x in np.linspace(0.0, 1.0, samples)
    )
    return CheckResult(
        name="two-pauli completeness",
        passed=worst <= 1e-12,
        detail=f"max residual {worst:.3e} over {samples} rates (limit 1e-12)",
    )


def check_broken_channel_detected() -> CheckResult:
    broken = KrausChannel((math.sqrt(0.5) * IDENTITY,), label="broken")
    residual = completeness_residual(broken)
    try:
        apply_channel(broken, bloch_to_density(BlochVector(0.0, 0.0, 0.0)))
    except ValueError:
        rejected = True
    else:
        rejected = False
    passed = rejected and abs(residual - 0.5) < 1e-12
    return CheckResult(
        name="broken-channel negative control",
        passed=passed,
        detail=f"completeness violation detected (residual {residual:.3e})"
        if passed
        else "completeness violation was NOT detected",
    )


def check_exchange_matrix_properties(rng, trials: int = 50) -> CheckResult:
    worst_herm = worst_trace = 0.0
    lowest_eig = 0.0
    for _ in range(trials):
        channel = random_kraus_channel(rng)
        rho = bloch_to_density(random_bloch_vector(rng))
        w = exchange_matrix(channel, rho)
        worst_herm = max(worst_herm, hermitian_residual(w))
        worst_trace = max(worst_trace, abs(np.trace(w).real - 1.0))
        lowest_eig = min(lowest_eig, hermitian_eigenvalues(w)[0])
    passed = worst_herm <= 1e-12 and worst_trace <= 1e-12 and lowest_eig >= -1e-10
    return CheckResult(
        name="exchange matrix is Hermitian, unit trace, PSD",
        passed=passed,
        detail=(
            f"hermitian residual {worst_herm:.3e}, trace error {worst_trace:.3e}, "
            f"lowest eigenvalue {lowest_eig:.3e} over {trials} random channels"
        ),
    )


def check_analytic_generic_agreement(
    grid_resolution: int = 7, x_samples: int = 21
) -> CheckResult:
    worst = 0.0
    for state in bloch_ball_grid(grid_resolution):
        rho = bloch_to_density(state)
        for x in np.linspace(0.0, 1.0, x_samples):
            channel = make_two_pauli(float(x))
            w_gap = np.abs(
                analytic_exchange_matrix(state, x) - exchange_matrix(channel, rho)
            ).max()
            out = apply_channel(channel, rho)
            bloch_gap = max(
                abs(u - v)
                for u, v in zip(
                    analytic_output_bloch(state, x).as_tuple(),
                    density_to_bloch(out).as_tuple(),
                )
            )
            entropy_gap = abs(analytic_output_entropy(state, x) - von_neumann_entropy(out))
            noise_gap = abs(
                two_pauli_metrics(state, x).noise - entropy_exchange(channel, rho)
            )
            fid_gap = abs(analytic_fidelity(state, x) - entangled_fidelity(channel, rho))
            worst = max(worst, float(w_gap), bloch_gap, entropy_gap, noise_gap, fid_gap)
    return CheckResult(
        name="closed forms match generic Kraus route",
        passed=worst <= 1e-12,
        detail=(
            f"max deviation {worst:.3e} over {grid_resolution}^3 ball grid "
            f"x {x_samples} rates (limit 1e-12)"
        ),
    )


def check_dilation_oracle(rng, trials: int = 100) -> CheckResult:
    worst = 0.0
    for _ in range(trials):
        channel = random_kraus_channel(rng)
        rho = bloch_to_density(random_bloch_vector(rng))
        spectrum_w = hermitian_eigenvalues(exchange_matrix(channel, rho))
        spectrum_env = hermitian_eigenvalues(environment_output(channel, rho))
        worst = max(worst, max(abs(u - v) for u, v in zip(spectrum_w, spectrum_env)))
    return CheckResult(
        name="dilation environment matches exchange spectrum",
        passed=worst <= 1e-10,
        detail=f"max spectral gap {worst:.3e} over {trials} random pairs (limit 1e-10)",
    )


def check_pure_state_collapse(rng, states: int = 50, x_samples: int = 101) -> CheckResult:
    worst = 0.0
    for _ in range(states):
        state = random_bloch_vector(rng, pure=True)
        for x in np.linspace(0.0, 1.0, x_samples):
            worst = max(worst, abs(two_pauli_metrics(state, float(x)).coherent_info))
    return CheckResult(
        name="pure-state coherent information collapses to zero",
        passed=worst <= 1e-9,
        detail=f"max |C| {worst:.3e} over {states} pure states (limit 1e-9)",
    )


def run_all(seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Run every check with a fixed seed; deterministic across runs."""
    rng = np.random.default_rng(seed)
    return [
        check_two_pauli_completeness(),
        check_broken_channel_detected(),
        check_exchange_matrix_properties(rng),
        check_analytic_generic_agreement(),
        check_dilation_oracle(rng),
        check_pure_state_collapse(rng),
    ]
