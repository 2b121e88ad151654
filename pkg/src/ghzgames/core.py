"""Shared domain types and numeric conventions for three-player direction games.

Players A, B, and C each hold one qubit of a shared GHZ state and pick a
measurement direction (a unit vector) as their strategy.  Every measurement
is dichotomic, so a round produces an outcome triple in {+1, -1}^3, and the
eight outcome triples are in bijection with the eight pure-strategy triples
of a 2x2x2 game: outcome +1 corresponds to a player's first pure strategy,
outcome -1 to the second.

This module fixes those conventions once for the whole package:

* the outcome/strategy bijection and the canonical ordering of the eight
  triples (``OUTCOMES``, listed in the conventional payoff-table row order),
* the payoff-table types for general and symmetric games,
* the tolerances every other module shares.

All types are immutable values after construction and safe to share across
threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

#: Direction inputs must have unit norm within this tolerance.
UNIT_NORM_TOL = 1e-9
#: Third components must be this close to zero for "in the X-Y plane".
INPLANE_TOL = 1e-9
#: Probabilities in [-PROB_CLAMP_TOL, 0) read as exactly 0; lower is an error.
PROB_CLAMP_TOL = 1e-12
#: Joint distributions must sum to 1 within this tolerance.
DIST_SUM_TOL = 1e-12
#: Tolerance for comparisons that hold exactly in the algebra.
EXACT_TOL = 1e-12

PLAYERS = ("A", "B", "C")
PAIRS = ("AB", "AC", "BC")


class ZeroVectorError(ValueError):
    """Normalization of the all-zero vector was requested."""


class NotUnitError(ValueError):
    """Components that must form a unit vector do not."""


class NotInPlaneError(ValueError):
    """An X-Y-plane operation received a direction with a third component."""


@dataclass(frozen=True)
class Direction:
    """A player's strategy: the unit vector along which their observable is measured."""

    a1: float
    a2: float
    a3: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "a1", float(self.a1))
        object.__setattr__(self, "a2", float(self.a2))
        object.__setattr__(self, "a3", float(self.a3))
        if not all(math.isfinite(v) for v in (self.a1, self.a2, self.a3)):
            raise NotUnitError(f"direction components must be finite, got {self}")
        norm = math.hypot(self.a1, self.a2, self.a3)
        if abs(norm - 1.0) > UNIT_NORM_TOL:
            raise NotUnitError(
                f"({self.a1}, {self.a2}, {self.a3}) has norm {norm!r}; "
                f"unit norm required within {UNIT_NORM_TOL}"
            )

    def components(self) -> tuple[float, float, float]:
        return (self.a1, self.a2, self.a3)


X_AXIS = Direction(1.0, 0.0, 0.0)
Y_AXIS = Direction(0.0, 1.0, 0.0)
Z_AXIS = Direction(0.0, 0.0, 1.0)


def make_direction(a1: float, a2: float, a3: float, normalize: bool = False) -> Direction:
    """Build a Direction, optionally rescaling the input to unit norm.

    Without ``normalize`` the components must already be unit within
    UNIT_NORM_TOL (raises NotUnitError otherwise).  With ``normalize`` any
    nonzero vector is accepted (the all-zero vector raises ZeroVectorError).
    """
    if normalize:
        norm = math.hypot(a1, a2, a3)
        if norm == 0.0:
            raise ZeroVectorError("cannot normalize the zero vector")
        return Direction(a1 / norm, a2 / norm, a3 / norm)
    return Direction(a1, a2, a3)


@dataclass(frozen=True)
class DirectionProfile:
    """The three players' directions, in player order A, B, C."""

    a: Direction
    b: Direction
    c: Direction


@dataclass(frozen=True)
class OutcomeTriple:
    """Measurement outcomes (m, l, k) for players A, B, C; each is +1 or -1.

    Outcome +1 corresponds to the player's first pure strategy, -1 to the
    second; this is the one canonical table used everywhere in the package.
    """

    m: int
    l: int
    k: int

    def __post_init__(self) -> None:
        for name in ("m", "l", "k"):
            raw = getattr(self, name)
            value = int(raw)
            if value != raw or value not in (1, -1):
                raise ValueError(f"outcome {name} must be +1 or -1, got {raw!r}")
            object.__setattr__(self, name, value)

    def signs(self) -> tuple[int, int, int]:
        return (self.m, self.l, self.k)

    def label(self) -> str:
        """Compact form like '+-+' in player order A, B, C."""
        return "".join("+" if s > 0 else "-" for s in self.signs())

    def strategies(self) -> tuple[str, str, str]:
        """Pure-strategy labels ('S1' or 'S2') for each player."""
        return tuple("S1" if s > 0 else "S2" for s in self.signs())

    @classmethod
    def from_strategies(cls, strategies: Sequence[str]) -> "OutcomeTriple":
        if len(strategies) != 3:
            raise ValueError(f"need exactly 3 strategy labels, got {strategies!r}")
        signs = []
        for label in strategies:
            if label == "S1":
                signs.append(1)
            elif label == "S2":
                signs.append(-1)
            else:
                raise ValueError(f"strategy label must be 'S1' or 'S2', got {label!r}")
        return cls(*signs)

    @classmethod
    def from_label(cls, label: str) -> "OutcomeTriple":
        if len(label) != 3 or any(ch not in "+-" for ch in label):
            raise ValueError(f"outcome label must be three of '+'/'-', got {label!r}")
        return cls(*(1 if ch == "+" else -1 for ch in label))


#: The eight outcome triples in the canonical payoff-table row order.
OUTCOMES = (
    OutcomeTriple(+1, +1, +1),
    OutcomeTriple(-1, +1, +1),
    OutcomeTriple(+1, -1, +1),
    OutcomeTriple(+1, +1, -1),
    OutcomeTriple(+1, -1, -1),
    OutcomeTriple(-1, +1, -1),
    OutcomeTriple(-1, -1, +1),
    OutcomeTriple(-1, -1, -1),
)


@dataclass(frozen=True)
class PayoffTriple:
    """Payoffs to players A, B, C for one outcome (or in expectation)."""

    pi_a: float
    pi_b: float
    pi_c: float

    def __post_init__(self) -> None:
        for name in ("pi_a", "pi_b", "pi_c"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"payoff {name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    def for_player(self, player: str) -> float:
        try:
            return {"A": self.pi_a, "B": self.pi_b, "C": self.pi_c}[player]
        except KeyError:
            raise ValueError(f"player must be one of {PLAYERS}, got {player!r}") from None


@dataclass(frozen=True)
class GeneralGame:
    """A 2x2x2 game: one payoff triple per pure-strategy triple (all 8 present)."""

    entries: Mapping[OutcomeTriple, PayoffTriple]

    def __post_init__(self) -> None:
        items = dict(self.entries)
        if set(items) != set(OUTCOMES):
            raise ValueError("a general game needs exactly one entry per strategy triple")
        table = {}
        for outcome in OUTCOMES:
            value = items[outcome]
            if not isinstance(value, PayoffTriple):
                value = PayoffTriple(*value)
            table[outcome] = value
        object.__setattr__(self, "entries", table)

    def payoff(self, outcome: OutcomeTriple) -> PayoffTriple:
        return self.entries[outcome]


@dataclass(frozen=True)
class SymmetricGame:
    """A symmetric 2x2x2 game, fully described by six payoff constants.

    ``alpha`` pays everyone when all cooperate (first strategy); ``omega``
    when all defect.  ``beta`` is the lone defector's payoff against two
    cooperators (who each get ``delta``); ``epsilon`` is the lone cooperator's
    payoff against two defectors (who each get ``theta``).
    """

    alpha: float
    beta: float
    delta: float
    epsilon: float
    theta: float
    omega: float

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "delta", "epsilon", "theta", "omega"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"payoff constant {name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    def constants(self) -> tuple[float, float, float, float, float, float]:
        return (self.alpha, self.beta, self.delta, self.epsilon, self.theta, self.omega)


def symmetric_to_general(game: SymmetricGame) -> GeneralGame:
    """Expand the six constants into the full eight-row payoff table."""
    a, b, d, e, t, w = game.constants()
    rows = {
        OutcomeTriple(+1, +1, +1): (a, a, a),
        OutcomeTriple(-1, +1, +1): (b, d, d),
        OutcomeTriple(+1, -1, +1): (d, b, d),
        OutcomeTriple(+1, +1, -1): (d, d, b),
        OutcomeTriple(+1, -1, -1): (e, t, t),
        OutcomeTriple(-1, +1, -1): (t, e, t),
        OutcomeTriple(-1, -1, +1): (t, t, e),
        OutcomeTriple(-1, -1, -1): (w, w, w),
    }
    return GeneralGame({o: PayoffTriple(*p) for o, p in rows.items()})


@dataclass(frozen=True)
class SymmetryReport:
    """Outcome of the player-symmetry check on a general game.

    When symmetric, ``game`` holds the recovered six constants.  Otherwise
    ``violations`` names every failed equality, written with the row payoffs
    ``a<i>``/``b<i>``/``c<i>`` = payoff to player A/B/C in the i-th canonical
    row (1-based, in ``OUTCOMES`` order).
    """

    symmetric: bool
    game: SymmetricGame | None
    violations: tuple[str, ...]


# The 18 equalities a payoff table must satisfy to be player-symmetric,
# written over the row payoffs a1..a8, b1..b8, c1..c8.
_SYMMETRY_CONDITIONS = (
    ("b1", "a1"), ("b2", "a3"), ("b3", "a2"), ("b4", "a3"),
    ("b5", "a6"), ("b6", "a5"), ("b7", "a6"), ("b8", "a8"),
    ("c1", "a1"), ("c2", "a3"), ("c3", "a3"), ("c4", "a2"),
    ("c5", "a6"), ("c6", "a6"), ("c7", "a5"), ("c8", "a8"),
    ("a6", "a7"), ("a3", "a4"),
)


def check_symmetry(game: GeneralGame) -> SymmetryReport:
    """Decide whether a general game is player-symmetric.

    All 18 defining equalities must hold within EXACT_TOL; on success the six
    constants are read off rows 1, 2, 3, 5, 6, and 8.
    """
    values: dict[str, float] = {}
    for i, outcome in enumerate(OUTCOMES, start=1):
        payoffs = game.payoff(outcome)
        values[f"a{i}"] = payoffs.pi_a
        values[f"b{i}"] = payoffs.pi_b
        values[f"c{i}"] = payoffs.pi_c
    violations = tuple(
        f"{lhs} = {rhs}"
        for lhs, rhs in _SYMMETRY_CONDITIONS
        if abs(values[lhs] - values[rhs]) > EXACT_TOL
    )
    if violations:
        return SymmetryReport(False, None, violations)
    recovered = SymmetricGame(
        alpha=values["a1"], beta=values["a2"], delta=values["a3"],
        epsilon=values["a5"], theta=values["a6"], omega=values["a8"],
    )
    return SymmetryReport(True, recovered, ())


@dataclass(frozen=True)
class MixedProfile:
    """Mixed strategies: each player's probability of playing their first pure strategy."""

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            value = float(getattr(self, name))
            if not (0.0 <= value <= 1.0):
                raise ValueError(f"probability {name} must lie in [0, 1], got {value!r}")
            object.__setattr__(self, name, value)


class JointDistribution:
    """Probabilities over the eight outcome triples.

    Construction checks that exactly the canonical eight outcomes are present,
    that entries sum to 1 within DIST_SUM_TOL, and that no entry lies below
    -PROB_CLAMP_TOL.  Reads clamp rounding dust in [-PROB_CLAMP_TOL, 0) to
    exactly 0.
    """

    __slots__ = ("_probs",)

    def __init__(self, probs: Mapping[OutcomeTriple, float]):
        items = dict(probs)
        if set(items) != set(OUTCOMES):
            raise ValueError("a joint distribution needs exactly the 8 canonical outcomes")
        for outcome in OUTCOMES:
            p = float(items[outcome])
            if not math.isfinite(p):
                raise ValueError(f"probability for {outcome.label()} must be finite")
            if p < -PROB_CLAMP_TOL:
                raise ValueError(
                    f"probability {p!r} for {outcome.label()} is below -{PROB_CLAMP_TOL}"
                )
        total = math.fsum(items[o] for o in OUTCOMES)
        if abs(total - 1.0) > DIST_SUM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, expected 1")
        self._probs = {o: float(items[o]) for o in OUTCOMES}

    def __getitem__(self, outcome: OutcomeTriple) -> float:
        p = self._probs[outcome]
        return 0.0 if p < 0.0 else p

    def __iter__(self):
        return iter(OUTCOMES)

    def __len__(self) -> int:
        return len(self._probs)

    def items(self):
        """(outcome, probability) pairs in canonical order, clamped on read."""
        return [(o, self[o]) for o in OUTCOMES]

    def as_dict(self) -> dict[OutcomeTriple, float]:
        return {o: self[o] for o in OUTCOMES}

    def __repr__(self) -> str:
        entries = ", ".join(f"{o.label()}: {self[o]!r}" for o in OUTCOMES)
        return f"JointDistribution({{{entries}}})"
