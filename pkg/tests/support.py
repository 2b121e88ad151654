"""Shared generators and independent evaluation helpers for the test suite."""

from __future__ import annotations

import math

import numpy as np
from hypothesis import strategies as st

from ghzgames.core import (
    OUTCOMES,
    Direction,
    DirectionProfile,
    GeneralGame,
    SymmetricGame,
)

PD = SymmetricGame(alpha=7, beta=9, delta=3, epsilon=0, theta=5, omega=1)
#: Six constants with gamma2 = 0: fully degenerate in-plane regime.
DEGENERATE = SymmetricGame(alpha=3, beta=1, delta=1, epsilon=0, theta=0, omega=0)


def random_direction(rng: np.random.Generator) -> Direction:
    while True:
        v = rng.normal(size=3)
        norm = float(np.linalg.norm(v))
        if norm > 1e-6:
            return Direction(v[0] / norm, v[1] / norm, v[2] / norm)


def random_profile(rng: np.random.Generator) -> DirectionProfile:
    return DirectionProfile(random_direction(rng), random_direction(rng), random_direction(rng))


def random_inplane_direction(rng: np.random.Generator) -> Direction:
    angle = rng.uniform(0.0, 2.0 * math.pi)
    return Direction(math.cos(angle), math.sin(angle), 0.0)


def random_inplane_profile(rng: np.random.Generator) -> DirectionProfile:
    return DirectionProfile(
        random_inplane_direction(rng),
        random_inplane_direction(rng),
        random_inplane_direction(rng),
    )


def zero_correlation_inplane_profile(rng: np.random.Generator) -> DirectionProfile:
    """In-plane profile whose three-way correlation term vanishes.

    With b and c in the plane, picking a = (b1*c2 + b2*c1, b1*c1 - b2*c2, 0)
    makes the correlation term cancel exactly (and a is unit because the two
    components are the real and imaginary parts of a product of phases).
    """
    b = random_inplane_direction(rng)
    c = random_inplane_direction(rng)
    a = Direction(b.a1 * c.a2 + b.a2 * c.a1, b.a1 * c.a1 - b.a2 * c.a2, 0.0)
    return DirectionProfile(a, b, c)


def random_symmetric_game(rng: np.random.Generator, scale: float = 10.0) -> SymmetricGame:
    return SymmetricGame(*rng.uniform(-scale, scale, size=6))


def fibonacci_sphere(n: int) -> np.ndarray:
    """n nearly uniform unit vectors, shape (n, 3)."""
    i = np.arange(n, dtype=float)
    z = 1.0 - (2.0 * i + 1.0) / n
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    phi = i * math.pi * (3.0 - math.sqrt(5.0))
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


def _player_split(outcome, player: str) -> tuple[int, int, int]:
    """(deviator sign, first opponent sign, second opponent sign), opponents in player order."""
    m, l, k = outcome.signs()
    if player == "A":
        return m, l, k
    if player == "B":
        return l, m, k
    return k, m, l


def deviation_payoffs(
    general: GeneralGame,
    profile: DirectionProfile,
    player: str,
    directions: np.ndarray,
) -> np.ndarray:
    """Vectorized payoffs of `player` when they deviate to each row of `directions`.

    Written straight from the outcome-probability formula, independently of
    the closed-form gradient used by the library.
    """
    if player == "A":
        u, v = profile.b, profile.c
    elif player == "B":
        u, v = profile.a, profile.c
    else:
        u, v = profile.a, profile.b
    d1, d2, d3 = directions[:, 0], directions[:, 1], directions[:, 2]
    inner = d1 * (u.a1 * v.a1 - u.a2 * v.a2) - d2 * (u.a1 * v.a2 + u.a2 * v.a1)
    total = np.zeros(len(directions))
    for outcome in OUTCOMES:
        sx, su, sv = _player_split(outcome, player)
        prob = 0.125 * (
            1.0
            + su * sv * u.a3 * v.a3
            + sx * su * d3 * u.a3
            + sx * sv * d3 * v.a3
            + sx * su * sv * inner
        )
        total += prob * general.payoff(outcome).for_player(player)
    return total


# hypothesis strategies -------------------------------------------------------

finite_payoffs = st.floats(
    allow_nan=False, allow_infinity=False, min_value=-1e6, max_value=1e6
)

symmetric_games = st.builds(
    SymmetricGame,
    finite_payoffs, finite_payoffs, finite_payoffs,
    finite_payoffs, finite_payoffs, finite_payoffs,
)

_components = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False)

unit_directions = (
    st.tuples(_components, _components, _components)
    .filter(lambda v: math.hypot(*v) > 1e-3)
    .map(lambda v: Direction(*(x / math.hypot(*v) for x in v)))
)

direction_profiles = st.builds(DirectionProfile, unit_directions, unit_directions, unit_directions)
