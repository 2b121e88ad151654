"""Brute-force three-qubit reference for the analytic joint distribution.

Everything is done in the 8-dimensional Hilbert space with dense matrices:
the shared state vector, one dichotomic observable per direction, the +1/-1
eigenprojectors, and the projective joint measurement.  This module never
calls into the closed-form evaluation in ``ghz``; it exists to cross-validate
it.

Qubit 1 (player A) is the most significant basis index, so basis state
|q1 q2 q3> sits at index 4*q1 + 2*q2 + q3.
"""

from __future__ import annotations

import math

import numpy as np

from .core import OUTCOMES, Direction, DirectionProfile, JointDistribution

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)

#: Expectation values of Hermitian operators may carry this much imaginary dust.
IMAG_TOL = 1e-12


def ghz_state() -> np.ndarray:
    """The shared state: amplitude 1/sqrt(2) on |000> and |111>, 0 elsewhere."""
    state = np.zeros(8, dtype=complex)
    state[0] = state[7] = 1.0 / math.sqrt(2.0)
    return state


def observable_from_direction(direction: Direction) -> np.ndarray:
    """The dichotomic observable measured along a direction: n . sigma.

    Hermitian with eigenvalues +1 and -1 for any unit direction.
    """
    return (
        direction.a1 * PAULI_X
        + direction.a2 * PAULI_Y
        + direction.a3 * PAULI_Z
    )


def eigenprojector(observable: np.ndarray, sign: int) -> np.ndarray:
    """Projector onto the +1 or -1 eigenspace: (I + sign * observable) / 2."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return (IDENTITY + sign * observable) / 2.0


def joint_distribution_oracle(profile: DirectionProfile) -> JointDistribution:
    """Outcome probabilities via <psi| P_a ox P_b ox P_c |psi> on the GHZ state."""
    psi = ghz_state()
    projectors = []
    for direction in (profile.a, profile.b, profile.c):
        observable = observable_from_direction(direction)
        projectors.append({s: eigenprojector(observable, s) for s in (1, -1)})
    probs = {}
    for outcome in OUTCOMES:
        m, l, k = outcome.signs()
        joint_op = np.kron(np.kron(projectors[0][m], projectors[1][l]), projectors[2][k])
        amplitude = np.vdot(psi, joint_op @ psi)
        if abs(amplitude.imag) > IMAG_TOL:
            raise ArithmeticError(
                f"expectation for outcome {outcome.label()} has imaginary part "
                f"{amplitude.imag!r}"
            )
        probs[outcome] = amplitude.real
    return JointDistribution(probs)
