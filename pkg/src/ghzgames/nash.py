"""Equilibrium analysis for direction strategies in the symmetric quantum game.

Each player's expected payoff is affine in their own direction components
once the other two directions are fixed: eight times the payoff equals a
profile-independent constant plus the dot product of the player's direction
with a gradient vector built from two game invariants (``gammas``) and
bilinear combinations of the opponents' components (``delta_set``).  That
structure makes everything here exact:

* unilateral payoff differences have a closed form (``payoff_diff``),
* the best response is the normalized gradient, or full indifference when
  the gradient vanishes (``best_response``),
* equilibrium verdicts are decidable from gradient alignment (``verify_ne``),
  with a three-way taxonomy: strict (every player's gradient is nonzero and
  points along their played direction), weak (no profitable deviation but
  some player is indifferent or the margin is below tolerance), and not an
  equilibrium (a deviation gains more than GAIN_TOL, returned as a witness).

``find_ne`` runs cyclic best-response dynamics from random starts.  The
X-Y-plane constraint analysis (``case_a_constraints``, ``case_b_check``) and
the generalized three-player dilemma gate (``check_pd``) round out the module.

A caution on interpretation: verdicts are always computed from the deviation
inequalities themselves.  For the canonical dilemma payoffs this yields
unconstrained-direction equilibria (the all-x profile is strict, and
degenerate profiles such as (z, z, -z) are weak), although it is sometimes
asserted that no unconstrained equilibrium triple exists for these payoffs.
The command-line reports carry the same caution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .core import (
    INPLANE_TOL,
    PLAYERS,
    Direction,
    DirectionProfile,
    NotInPlaneError,
    SymmetricGame,
)

#: Gradient norms at or below this count as full indifference.
GRADIENT_TOL = 1e-12
#: A played direction within this angle (radians) of the gradient is aligned.
ALIGN_TOL_RAD = 1e-9
#: Deviations must gain more than this to defeat an equilibrium claim.
GAIN_TOL = 1e-12
#: A best-response sweep that moves every player less than this has converged.
SWEEP_MOVE_TOL = 1e-10
#: Fixed points closer than this (max angle over players) are deduplicated.
DEDUP_TOL_RAD = 1e-6
#: Best-response sweeps per seed before giving up.
MAX_SWEEPS = 10_000

STRICT = "strict"
WEAK = "weak"
NOT_NE = "not_ne"


@dataclass(frozen=True)
class GammaPair:
    """The two linear payoff combinations that drive every deviation inequality."""

    gamma1: float
    gamma2: float


def gammas(game: SymmetricGame) -> GammaPair:
    """gamma1 = alpha - beta - epsilon + omega;
    gamma2 = alpha - 2*delta - beta + epsilon + 2*theta - omega."""
    g1 = game.alpha - game.beta - game.epsilon + game.omega
    g2 = game.alpha - 2.0 * game.delta - game.beta + game.epsilon + 2.0 * game.theta - game.omega
    return GammaPair(g1, g2)


@dataclass(frozen=True)
class DeltaSet:
    """Bilinear opponent combinations entering the deviation inequalities.

    Unprimed fields are built from players B and C (they steer player A's
    payoff), primed from A and C (player B), double-primed from A and B
    (player C): d1 = b3 + c3, d2 = b1*c1 - b2*c2, d3 = b1*c2 + b2*c1, and
    the same pattern for the other pairs.
    """

    d1: float
    d2: float
    d3: float
    d1p: float
    d2p: float
    d3p: float
    d1pp: float
    d2pp: float
    d3pp: float


def delta_set(profile: DirectionProfile) -> DeltaSet:
    a, b, c = profile.a, profile.b, profile.c
    return DeltaSet(
        d1=b.a3 + c.a3,
        d2=b.a1 * c.a1 - b.a2 * c.a2,
        d3=b.a1 * c.a2 + b.a2 * c.a1,
        d1p=a.a3 + c.a3,
        d2p=a.a1 * c.a2 + a.a2 * c.a1,
        d3p=a.a1 * c.a1 - a.a2 * c.a2,
        d1pp=a.a3 + b.a3,
        d2pp=a.a1 * b.a2 + a.a2 * b.a1,
        d3pp=a.a1 * b.a1 - a.a2 * b.a2,
    )


def _others(profile: DirectionProfile, player: str) -> tuple[Direction, Direction]:
    if player == "A":
        return (profile.b, profile.c)
    if player == "B":
        return (profile.a, profile.c)
    if player == "C":
        return (profile.a, profile.b)
    raise ValueError(f"player must be one of {PLAYERS}, got {player!r}")


def _own(profile: DirectionProfile, player: str) -> Direction:
    return {"A": profile.a, "B": profile.b, "C": profile.c}[player]


def _payoff_gradient(gp: GammaPair, u: Direction, v: Direction) -> tuple[float, float, float]:
    """Eight times the gradient of a player's payoff in their own components,
    given the two opponents' directions u and v (in player order)."""
    return (
        gp.gamma2 * (u.a1 * v.a1 - u.a2 * v.a2),
        -gp.gamma2 * (u.a1 * v.a2 + u.a2 * v.a1),
        gp.gamma1 * (u.a3 + v.a3),
    )


def payoff_diff(
    game: SymmetricGame,
    starred: DirectionProfile,
    deviator: str,
    alt: Direction,
) -> float:
    """Closed-form payoff loss the deviator suffers by leaving the starred profile.

    Positive means the starred direction beats the alternative; equals the
    direct difference of quantum payoffs for that player.
    """
    gp = gammas(game)
    ds = delta_set(starred)
    if deviator == "A":
        s = starred.a
        return (
            (s.a3 - alt.a3) * ds.d1 * gp.gamma1
            + gp.gamma2 * (s.a1 - alt.a1) * ds.d2
            - gp.gamma2 * (s.a2 - alt.a2) * ds.d3
        ) / 8.0
    if deviator == "B":
        s = starred.b
        return (
            (s.a3 - alt.a3) * ds.d1p * gp.gamma1
            - gp.gamma2 * (s.a2 - alt.a2) * ds.d2p
            + gp.gamma2 * (s.a1 - alt.a1) * ds.d3p
        ) / 8.0
    if deviator == "C":
        s = starred.c
        return (
            (s.a3 - alt.a3) * ds.d1pp * gp.gamma1
            - gp.gamma2 * (s.a2 - alt.a2) * ds.d2pp
            + gp.gamma2 * (s.a1 - alt.a1) * ds.d3pp
        ) / 8.0
    raise ValueError(f"deviator must be one of {PLAYERS}, got {deviator!r}")


def best_response(
    game: SymmetricGame,
    others: tuple[Direction, Direction],
    player: str,
) -> Direction | None:
    """The payoff-maximizing direction against two fixed opponents.

    ``others`` lists the remaining players in A, B, C order.  Returns the
    normalized payoff gradient, or None when the gradient vanishes and every
    direction is optimal (full indifference).
    """
    if player not in PLAYERS:
        raise ValueError(f"player must be one of {PLAYERS}, got {player!r}")
    u, v = others
    grad = _payoff_gradient(gammas(game), u, v)
    norm = math.hypot(*grad)
    if norm <= GRADIENT_TOL:
        return None
    return Direction(grad[0] / norm, grad[1] / norm, grad[2] / norm)


def _angle_between(d: Direction, e: Direction) -> float:
    """Angle in radians between two unit vectors; stable for tiny angles."""
    chord = math.hypot(d.a1 - e.a1, d.a2 - e.a2, d.a3 - e.a3)
    return 2.0 * math.asin(min(1.0, chord / 2.0))


@dataclass(frozen=True)
class DeviationWitness:
    """A profitable unilateral deviation certifying a non-equilibrium."""

    player: str
    direction: Direction
    gain: float


@dataclass(frozen=True)
class NEReport:
    """Verdict for one profile, with each player's best response.

    ``best_responses`` maps player to their payoff-maximizing direction, or
    None for full indifference.  ``witness`` is present exactly when the
    verdict is not_ne, and its gain exceeds GAIN_TOL.
    """

    verdict: str
    best_responses: Mapping[str, Direction | None]
    witness: DeviationWitness | None


def verify_ne(game: SymmetricGame, profile: DirectionProfile) -> NEReport:
    """Classify a profile as strict, weak, or not an equilibrium.

    Strict requires every player's gradient to be nonzero and aligned with
    the played direction within ALIGN_TOL_RAD.  A deviation gaining more than
    GAIN_TOL yields not_ne with the best response as witness (largest gain,
    ties broken in player order).  Everything else is weak.
    """
    gp = gammas(game)
    best: dict[str, Direction | None] = {}
    rows: list[tuple[str, Direction | None, float, bool]] = []
    for player in PLAYERS:
        u, v = _others(profile, player)
        grad = _payoff_gradient(gp, u, v)
        norm = math.hypot(*grad)
        if norm <= GRADIENT_TOL:
            best[player] = None
            rows.append((player, None, 0.0, False))
            continue
        response = Direction(grad[0] / norm, grad[1] / norm, grad[2] / norm)
        own = _own(profile, player)
        gain = (norm - (grad[0] * own.a1 + grad[1] * own.a2 + grad[2] * own.a3)) / 8.0
        if gain < 0.0:
            gain = 0.0
        best[player] = response
        rows.append((player, response, gain, _angle_between(own, response) <= ALIGN_TOL_RAD))
    worst = max(rows, key=lambda row: row[2])
    if worst[2] > GAIN_TOL:
        witness = DeviationWitness(worst[0], worst[1], worst[2])
        return NEReport(NOT_NE, best, witness)
    if all(response is not None and aligned for _, response, _, aligned in rows):
        return NEReport(STRICT, best, None)
    return NEReport(WEAK, best, None)


@dataclass(frozen=True)
class FoundEquilibrium:
    """A deduplicated fixed point of the best-response dynamics."""

    profile: DirectionProfile
    report: NEReport
    seeds: tuple[int, ...]


@dataclass(frozen=True)
class SearchResult:
    """Everything a search run produced; non-converged seeds are never dropped."""

    equilibria: tuple[FoundEquilibrium, ...]
    non_converged: tuple[int, ...]


def _random_direction(rng: np.random.Generator) -> Direction:
    while True:
        v = rng.normal(size=3)
        norm = float(np.linalg.norm(v))
        if norm > 1e-12:
            return Direction(v[0] / norm, v[1] / norm, v[2] / norm)


def _iterate_best_responses(
    game: SymmetricGame, start: DirectionProfile
) -> DirectionProfile | None:
    """Cyclic A, B, C updates until a sweep moves every player < SWEEP_MOVE_TOL.

    Indifferent players keep their current direction.  Returns None when
    MAX_SWEEPS pass without convergence.
    """
    a, b, c = start.a, start.b, start.c
    for _ in range(MAX_SWEEPS):
        moved = 0.0
        response = best_response(game, (b, c), "A")
        if response is not None:
            moved = max(moved, _angle_between(a, response))
            a = response
        response = best_response(game, (a, c), "B")
        if response is not None:
            moved = max(moved, _angle_between(b, response))
            b = response
        response = best_response(game, (a, b), "C")
        if response is not None:
            moved = max(moved, _angle_between(c, response))
            c = response
        if moved < SWEEP_MOVE_TOL:
            return DirectionProfile(a, b, c)
    return None


def _profile_distance(p: DirectionProfile, q: DirectionProfile) -> float:
    return max(
        _angle_between(p.a, q.a),
        _angle_between(p.b, q.b),
        _angle_between(p.c, q.c),
    )


def find_ne(game: SymmetricGame, seeds: int, rng_seed: int) -> SearchResult:
    """Search for equilibria by best-response dynamics from random starts.

    Runs ``seeds`` independent starts drawn uniformly from the sphere (the
    generator is seeded with ``rng_seed``, so results are reproducible).
    Converged fixed points are deduplicated within DEDUP_TOL_RAD, classified
    with verify_ne, and returned in first-seen seed order.  Seeds are
    evaluated sequentially, so the output is independent of any scheduling.
    """
    if seeds < 1:
        raise ValueError(f"seeds must be >= 1, got {seeds!r}")
    rng = np.random.default_rng(rng_seed)
    clusters: list[tuple[DirectionProfile, list[int]]] = []
    failed: list[int] = []
    for seed_index in range(seeds):
        start = DirectionProfile(
            _random_direction(rng), _random_direction(rng), _random_direction(rng)
        )
        fixed = _iterate_best_responses(game, start)
        if fixed is None:
            failed.append(seed_index)
            continue
        for known, hits in clusters:
            if _profile_distance(known, fixed) < DEDUP_TOL_RAD:
                hits.append(seed_index)
                break
        else:
            clusters.append((fixed, [seed_index]))
    equilibria = tuple(
        FoundEquilibrium(profile, verify_ne(game, profile), tuple(hits))
        for profile, hits in clusters
    )
    return SearchResult(equilibria, tuple(failed))


def _require_inplane(profile: DirectionProfile, role: str) -> None:
    for direction in (profile.a, profile.b, profile.c):
        if abs(direction.a3) > INPLANE_TOL:
            raise NotInPlaneError(
                f"{role} profile has third component {direction.a3!r} "
                f"(must be within {INPLANE_TOL} of 0)"
            )


def _cross_term(a: Direction, b: Direction, c: Direction) -> float:
    """In-plane cross term collecting the deviator's components against the
    opponents' products: a1*b2*c2 + a2*b1*c2 - a1*b1*c1 + a2*b2*c1."""
    return (
        a.a1 * b.a2 * c.a2
        + a.a2 * b.a1 * c.a2
        - a.a1 * b.a1 * c.a1
        + a.a2 * b.a2 * c.a1
    )


def case_a_constraints(
    game: SymmetricGame,
    starred: DirectionProfile,
    alt: DirectionProfile,
) -> tuple[float, float, float]:
    """The three in-plane deviation margins, one per player.

    Both profiles must lie in the X-Y plane.  Each returned value is the
    bracketed constraint for one player, with the cross term evaluated using
    that player's alternative direction against the other players' starred
    directions; each equals eight times the corresponding payoff_diff.
    """
    _require_inplane(starred, "starred")
    _require_inplane(alt, "alternative")
    gp = gammas(game)
    ds = delta_set(starred)
    value_a = gp.gamma2 * (
        starred.a.a1 * ds.d2
        - starred.a.a2 * ds.d3
        + _cross_term(alt.a, starred.b, starred.c)
    )
    value_b = gp.gamma2 * (
        -starred.b.a2 * ds.d2p
        + starred.b.a1 * ds.d3p
        + _cross_term(starred.a, alt.b, starred.c)
    )
    value_c = gp.gamma2 * (
        -starred.c.a2 * ds.d2pp
        + starred.c.a1 * ds.d3pp
        + _cross_term(starred.a, starred.b, alt.c)
    )
    return (value_a, value_b, value_c)


def case_b_check(game: SymmetricGame, profile: DirectionProfile) -> bool:
    """True in the fully degenerate regime: gamma2 = 0 and an in-plane profile.

    There every deviation margin vanishes identically, so verify_ne reports
    weak for every in-plane profile.
    """
    if abs(gammas(game).gamma2) > GRADIENT_TOL:
        return False
    return all(
        abs(direction.a3) <= INPLANE_TOL
        for direction in (profile.a, profile.b, profile.c)
    )


@dataclass(frozen=True)
class PDVerdict:
    """Whether six constants form a generalized three-player dilemma."""

    passed: bool
    violated: tuple[str, ...]


def check_pd(game: SymmetricGame) -> PDVerdict:
    """Check the strict inequalities defining the generalized dilemma.

    (a) defection dominates; (b) payoffs rise with opponent cooperation;
    (c) any two players facing a fixed third are themselves in a dilemma.
    """
    a, b, d, e, t, w = game.constants()
    conditions = (
        ("beta>alpha", b > a),
        ("omega>epsilon", w > e),
        ("theta>delta", t > d),
        ("beta>theta", b > t),
        ("theta>omega", t > w),
        ("alpha>delta", a > d),
        ("delta>epsilon", d > e),
        ("delta>omega", d > w),
        ("alpha>theta", a > t),
        ("delta>(epsilon+theta)/2", d > (e + t) / 2.0),
        ("alpha>(delta+beta)/2", a > (d + b) / 2.0),
    )
    violated = tuple(name for name, ok in conditions if not ok)
    return PDVerdict(passed=not violated, violated=violated)
