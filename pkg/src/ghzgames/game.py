"""Payoff evaluation and distribution analysis for the three-player game.

Covers the classical mixed-strategy expectation, the quantum expectation over
direction profiles, the X-Y-plane special case, the test of whether a quantum
distribution can be reproduced by independent mixed strategies, and the
enumeration of classical pure-strategy equilibria.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from . import ghz
from .core import (
    EXACT_TOL,
    INPLANE_TOL,
    OUTCOMES,
    DirectionProfile,
    GeneralGame,
    MixedProfile,
    NotInPlaneError,
    OutcomeTriple,
    PayoffTriple,
    SymmetricGame,
    symmetric_to_general,
)

#: Residual tolerance for the eight-equation factorizability check; looser
#: than EXACT_TOL to absorb rounding accumulated across the equations.
FACTOR_RESIDUAL_TOL = 1e-9

#: The eight matching equations E1..E8, each pairing one quantum outcome
#: probability with the corresponding product of mixed-strategy weights.
FACTOR_EQUATIONS = (
    ("E1", OutcomeTriple(+1, +1, +1)),
    ("E2", OutcomeTriple(+1, -1, +1)),
    ("E3", OutcomeTriple(+1, +1, -1)),
    ("E4", OutcomeTriple(+1, -1, -1)),
    ("E5", OutcomeTriple(-1, +1, +1)),
    ("E6", OutcomeTriple(-1, -1, +1)),
    ("E7", OutcomeTriple(-1, +1, -1)),
    ("E8", OutcomeTriple(-1, -1, -1)),
)


def product_weight(outcome: OutcomeTriple, mixed: MixedProfile) -> float:
    """Probability of one outcome under independent per-player mixing."""
    wa = mixed.x if outcome.m == 1 else 1.0 - mixed.x
    wb = mixed.y if outcome.l == 1 else 1.0 - mixed.y
    wc = mixed.z if outcome.k == 1 else 1.0 - mixed.z
    return wa * wb * wc


def _expected_payoffs(game: GeneralGame, weight_of) -> PayoffTriple:
    pa = math.fsum(weight_of(o) * game.payoff(o).pi_a for o in OUTCOMES)
    pb = math.fsum(weight_of(o) * game.payoff(o).pi_b for o in OUTCOMES)
    pc = math.fsum(weight_of(o) * game.payoff(o).pi_c for o in OUTCOMES)
    return PayoffTriple(pa, pb, pc)


def classical_payoffs(game: GeneralGame, mixed: MixedProfile) -> PayoffTriple:
    """Expected payoffs when the outcome distribution factorizes over players."""
    return _expected_payoffs(game, lambda o: product_weight(o, mixed))


def quantum_payoffs(game: GeneralGame, profile: DirectionProfile) -> PayoffTriple:
    """Expected payoffs under the GHZ joint distribution for the profile."""
    dist = ghz.joint_distribution(profile)
    return _expected_payoffs(game, dist.__getitem__)


def quantum_payoffs_inplane(game: SymmetricGame, profile: DirectionProfile) -> PayoffTriple:
    """Quantum payoffs for directions confined to the X-Y plane.

    With all third components zero the eight outcome weights collapse to
    (1 + m*l*k*D)/8, so the whole expectation is driven by the single
    correlation term D.  Agrees with quantum_payoffs on the same inputs.
    """
    for direction in (profile.a, profile.b, profile.c):
        if abs(direction.a3) > INPLANE_TOL:
            raise NotInPlaneError(
                f"third component {direction.a3!r} exceeds {INPLANE_TOL}"
            )
    d = ghz.delta(profile)
    table = symmetric_to_general(game)
    return _expected_payoffs(table, lambda o: 0.125 * (1.0 + o.m * o.l * o.k * d))


@dataclass(frozen=True)
class FactorizationReport:
    """Whether a profile's quantum distribution factorizes over the players.

    ``residuals`` holds all eight back-substitution residuals keyed E1..E8;
    ``violated_equations`` repeats the (identifier, residual) pairs above
    FACTOR_RESIDUAL_TOL.  ``solution`` is present exactly when consistent.
    """

    consistent: bool
    solution: MixedProfile | None
    residuals: Mapping[str, float]
    violated_equations: tuple[tuple[str, float], ...]


def factorize(profile: DirectionProfile) -> FactorizationReport:
    """Test whether independent mixed strategies reproduce the quantum distribution.

    Summing the matching equations pairwise cancels every direction term and
    forces the unique candidate (1/2, 1/2, 1/2): adding the four equations
    that share m = +1 gives x = 1/2 exactly, and likewise for y and z.
    Consistency is then a back-substitution of the candidate into all eight
    equations, whose right-hand sides are all 1/8.
    """
    dist = ghz.joint_distribution(profile)
    candidate = MixedProfile(0.5, 0.5, 0.5)
    residuals = {eq: abs(dist[o] - 0.125) for eq, o in FACTOR_EQUATIONS}
    violated = tuple(
        (eq, r) for eq, r in residuals.items() if r > FACTOR_RESIDUAL_TOL
    )
    consistent = not violated
    return FactorizationReport(
        consistent=consistent,
        solution=candidate if consistent else None,
        residuals=residuals,
        violated_equations=violated,
    )


@dataclass(frozen=True)
class PureEquilibrium:
    """A pure-strategy profile no player can profitably leave; strict if every
    unilateral deviation strictly loses."""

    outcome: OutcomeTriple
    payoffs: PayoffTriple
    strict: bool


def classical_pure_ne(game: GeneralGame) -> list[PureEquilibrium]:
    """Enumerate the pure-strategy equilibria of the classical game.

    All eight profiles are checked against all unilateral pure deviations;
    ties (within EXACT_TOL) make an equilibrium weak rather than strict.
    """
    found = []
    for outcome in OUTCOMES:
        base = game.payoff(outcome)
        gains = []
        for index, player in enumerate("ABC"):
            signs = list(outcome.signs())
            signs[index] = -signs[index]
            deviated = game.payoff(OutcomeTriple(*signs))
            gains.append(deviated.for_player(player) - base.for_player(player))
        if max(gains) > EXACT_TOL:
            continue
        strict = all(g < -EXACT_TOL for g in gains)
        found.append(PureEquilibrium(outcome, base, strict))
    return found
