"""Command-line front end.

Subcommands: probs, payoffs, factorize, ne, sweep, check-game.  Global flags
select the output format (table, json, csv), suppress the timestamp for
byte-reproducible reports (--deterministic), normalize direction inputs
(--normalize), and switch direction flags to spherical angles (--spherical).

Exit codes are stable: 0 ok, 2 parse error, 3 invalid direction, 4 game-shape
error, 5 search failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Sequence

from . import __version__, game as game_mod, ghz, nash, oracle
from .core import (
    OUTCOMES,
    Direction,
    DirectionProfile,
    GeneralGame,
    MixedProfile,
    NotUnitError,
    OutcomeTriple,
    PayoffTriple,
    SymmetricGame,
    ZeroVectorError,
    check_symmetry,
    make_direction,
    symmetric_to_general,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DIRECTION = 3
EXIT_GAME_SHAPE = 4
EXIT_SEARCH = 5

EQUILIBRIUM_NOTE = (
    "Verdicts are computed directly from the deviation inequalities for the "
    "affine-on-the-sphere payoffs. Under this evaluation unconstrained "
    "direction triples can satisfy every inequality (for the canonical "
    "three-player dilemma the all-x profile is a strict equilibrium and "
    "profiles such as (z, z, -z) are weak), even though it is sometimes "
    "asserted that no unconstrained equilibrium triple exists for those "
    "payoffs. This tool always reports what the inequalities yield."
)

_SYMMETRIC_FIELDS = ("alpha", "beta", "delta", "epsilon", "theta", "omega")


class CliError(Exception):
    """Error with a stable process exit code."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _parse_floats(text: str, count: int, what: str) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != count:
        raise CliError(EXIT_PARSE, f"{what}: expected {count} comma-separated numbers, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise CliError(EXIT_PARSE, f"{what}: could not parse numbers from {text!r}") from None


def _parse_direction(text: str, normalize: bool, spherical: bool, flag: str) -> Direction:
    if spherical:
        theta, phi = _parse_floats(text, 2, flag)
        return Direction(
            math.sin(theta) * math.cos(phi),
            math.sin(theta) * math.sin(phi),
            math.cos(theta),
        )
    a1, a2, a3 = _parse_floats(text, 3, flag)
    try:
        return make_direction(a1, a2, a3, normalize=normalize)
    except (NotUnitError, ZeroVectorError) as err:
        raise CliError(EXIT_DIRECTION, f"{flag}: {err}") from None


def _parse_profile(args: argparse.Namespace) -> DirectionProfile:
    missing = [flag for flag in ("a", "b", "c") if getattr(args, flag) is None]
    if missing:
        raise CliError(EXIT_PARSE, f"missing direction flag(s): {', '.join('--' + m for m in missing)}")
    return DirectionProfile(
        _parse_direction(args.a, args.normalize, args.spherical, "--a"),
        _parse_direction(args.b, args.normalize, args.spherical, "--b"),
        _parse_direction(args.c, args.normalize, args.spherical, "--c"),
    )


def load_game_file(path: str) -> tuple[GeneralGame, SymmetricGame | None, dict[str, Any]]:
    """Read a game definition file (UTF-8 JSON, extension-agnostic).

    Returns the general payoff table, the symmetric constants when the game
    is player-symmetric (recovered for 'general' files), and an echo of the
    parsed definition for reports.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise CliError(EXIT_PARSE, f"cannot read game file {path!r}: {err}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise CliError(EXIT_PARSE, f"game file {path!r} is not valid JSON: {err}") from None
    if not isinstance(data, dict) or "type" not in data:
        raise CliError(EXIT_PARSE, f"game file {path!r} must be an object with a 'type' field")

    if data["type"] == "symmetric":
        try:
            constants = {name: float(data[name]) for name in _SYMMETRIC_FIELDS}
        except (KeyError, TypeError, ValueError):
            raise CliError(
                EXIT_PARSE,
                f"symmetric game file needs numeric fields {_SYMMETRIC_FIELDS}",
            ) from None
        symmetric = SymmetricGame(**constants)
        echo = {"type": "symmetric", **constants}
        return symmetric_to_general(symmetric), symmetric, echo

    if data["type"] == "general":
        entries = data.get("entries")
        if not isinstance(entries, list) or len(entries) != 8:
            raise CliError(EXIT_PARSE, "general game file needs an 'entries' list of 8 records")
        table: dict[OutcomeTriple, PayoffTriple] = {}
        for record in entries:
            try:
                outcome = OutcomeTriple.from_strategies(record["strategies"])
                payoffs = PayoffTriple(*(float(v) for v in record["payoffs"]))
            except (KeyError, TypeError, ValueError) as err:
                raise CliError(EXIT_PARSE, f"bad game entry {record!r}: {err}") from None
            if outcome in table:
                raise CliError(EXIT_PARSE, f"duplicate strategy triple {record['strategies']!r}")
            table[outcome] = payoffs
        try:
            general = GeneralGame(table)
        except ValueError as err:
            raise CliError(EXIT_PARSE, str(err)) from None
        report = check_symmetry(general)
        echo = {"type": "general", "entries": entries}
        return general, report.game, echo

    raise CliError(EXIT_PARSE, f"unknown game file type {data['type']!r}")


def _direction_list(d: Direction) -> list[float]:
    return [d.a1, d.a2, d.a3]


def _report_envelope(args: argparse.Namespace, command: str, inputs: dict[str, Any],
                     results: dict[str, Any], rng_seed: int | None = None) -> dict[str, Any]:
    report: dict[str, Any] = {
        "command": command,
        "inputs": inputs,
        "results": results,
        "tool_version": __version__,
    }
    if rng_seed is not None:
        report["rng_seed"] = rng_seed
    if not args.deterministic:
        report["timestamp"] = datetime.now(timezone.utc).isoformat()
    return report


def _print_json(report: dict[str, Any]) -> None:
    print(json.dumps(report, indent=2, sort_keys=True))


def parse_report(text: str) -> dict[str, Any]:
    """Parse a JSON report emitted by any subcommand (round-trip helper)."""
    return json.loads(text)


def parse_records(text: str) -> list[dict[str, Any]]:
    """Parse JSON-lines output (one record per line) from the sweep command."""
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def _print_csv(fieldnames: Sequence[str], rows: Sequence[dict[str, Any]]) -> None:
    writer = csv.DictWriter(sys.stdout, fieldnames=list(fieldnames), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)


def _print_table(lines: Sequence[str], report: dict[str, Any]) -> None:
    for line in lines:
        print(line)
    if "timestamp" in report:
        print(f"timestamp: {report['timestamp']}")


def _fmt(value: float) -> str:
    """Shortest decimal form that reconstructs the exact binary value."""
    return repr(float(value))


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_probs(args: argparse.Namespace) -> int:
    profile = _parse_profile(args)
    dist = ghz.joint_distribution(profile)
    inputs = {
        "a": _direction_list(profile.a),
        "b": _direction_list(profile.b),
        "c": _direction_list(profile.c),
        "normalize": args.normalize,
        "oracle": args.oracle,
    }
    results: dict[str, Any] = {
        "probabilities": {o.label(): dist[o] for o in OUTCOMES},
    }
    rows = [{"outcome": o.label(), "probability": _fmt(dist[o])} for o in OUTCOMES]
    fields = ["outcome", "probability"]
    lines = ["outcome  probability"]
    if args.oracle:
        reference = oracle.joint_distribution_oracle(profile)
        max_diff = max(abs(dist[o] - reference[o]) for o in OUTCOMES)
        results["oracle_probabilities"] = {o.label(): reference[o] for o in OUTCOMES}
        results["max_abs_discrepancy"] = max_diff
        fields = ["outcome", "probability", "oracle", "abs_diff"]
        lines = ["outcome  probability            oracle                 abs_diff"]
        rows = []
        for o in OUTCOMES:
            rows.append({
                "outcome": o.label(),
                "probability": _fmt(dist[o]),
                "oracle": _fmt(reference[o]),
                "abs_diff": _fmt(abs(dist[o] - reference[o])),
            })
            lines.append(f"{o.label():8} {_fmt(dist[o]):22} {_fmt(reference[o]):22} {_fmt(abs(dist[o] - reference[o]))}")
        lines.append(f"max |analytic - oracle| = {_fmt(max_diff)}")
    else:
        for o in OUTCOMES:
            lines.append(f"{o.label():8} {_fmt(dist[o])}")
    report = _report_envelope(args, "probs", inputs, results)
    if args.format == "json":
        _print_json(report)
    elif args.format == "csv":
        _print_csv(fields, rows)
    else:
        _print_table(lines, report)
    return EXIT_OK


def _cmd_payoffs(args: argparse.Namespace) -> int:
    general, _, echo = load_game_file(args.game_file)
    direction_flags = [f for f in (args.a, args.b, args.c) if f is not None]
    if args.classical is not None and direction_flags:
        raise CliError(EXIT_PARSE, "give either --classical or direction flags, not both")
    if args.classical is None and len(direction_flags) != 3:
        raise CliError(EXIT_PARSE, "give either --classical x,y,z or all of --a/--b/--c")

    inputs: dict[str, Any] = {"game": echo}
    if args.classical is not None:
        x, y, z = _parse_floats(args.classical, 3, "--classical")
        try:
            mixed = MixedProfile(x, y, z)
        except ValueError as err:
            raise CliError(EXIT_PARSE, str(err)) from None
        payoffs = game_mod.classical_payoffs(general, mixed)
        inputs["classical"] = [mixed.x, mixed.y, mixed.z]
        mode = "classical"
    else:
        profile = _parse_profile(args)
        payoffs = game_mod.quantum_payoffs(general, profile)
        inputs["a"] = _direction_list(profile.a)
        inputs["b"] = _direction_list(profile.b)
        inputs["c"] = _direction_list(profile.c)
        mode = "quantum"

    results = {"mode": mode, "payoffs": {"A": payoffs.pi_a, "B": payoffs.pi_b, "C": payoffs.pi_c}}
    report = _report_envelope(args, "payoffs", inputs, results)
    if args.format == "json":
        _print_json(report)
    elif args.format == "csv":
        _print_csv(["player", "payoff"], [
            {"player": p, "payoff": _fmt(v)} for p, v in results["payoffs"].items()
        ])
    else:
        lines = [f"{mode} payoffs"]
        lines += [f"  {p}: {_fmt(v)}" for p, v in results["payoffs"].items()]
        _print_table(lines, report)
    return EXIT_OK


def _cmd_factorize(args: argparse.Namespace) -> int:
    profile = _parse_profile(args)
    report_obj = game_mod.factorize(profile)
    inputs = {
        "a": _direction_list(profile.a),
        "b": _direction_list(profile.b),
        "c": _direction_list(profile.c),
    }
    results: dict[str, Any] = {
        "consistent": report_obj.consistent,
        "solution": None if report_obj.solution is None else [
            report_obj.solution.x, report_obj.solution.y, report_obj.solution.z,
        ],
        "residuals": dict(report_obj.residuals),
        "violated_equations": [list(v) for v in report_obj.violated_equations],
    }
    report = _report_envelope(args, "factorize", inputs, results)
    if args.format == "json":
        _print_json(report)
    elif args.format == "csv":
        violated = {eq for eq, _ in report_obj.violated_equations}
        _print_csv(["equation", "residual", "violated"], [
            {"equation": eq, "residual": _fmt(r), "violated": str(eq in violated).lower()}
            for eq, r in report_obj.residuals.items()
        ])
    else:
        lines = [f"consistent: {report_obj.consistent}"]
        if report_obj.solution is not None:
            s = report_obj.solution
            lines.append(f"solution: x={_fmt(s.x)} y={_fmt(s.y)} z={_fmt(s.z)}")
        else:
            lines.append("solution: none")
        lines.append("equation residuals:")
        violated = {eq for eq, _ in report_obj.violated_equations}
        for eq, r in report_obj.residuals.items():
            marker = "  VIOLATED" if eq in violated else ""
            lines.append(f"  {eq}: {_fmt(r)}{marker}")
        _print_table(lines, report)
    return EXIT_OK


def _require_symmetric(args: argparse.Namespace) -> tuple[SymmetricGame, dict[str, Any]]:
    general, symmetric, echo = load_game_file(args.game_file)
    if symmetric is None:
        violations = check_symmetry(general).violations
        raise CliError(
            EXIT_GAME_SHAPE,
            "equilibrium analysis needs a symmetric game; violated: " + "; ".join(violations),
        )
    return symmetric, echo


def _ne_report_dict(report: nash.NEReport) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "verdict": report.verdict,
        "best_responses": {
            player: None if d is None else _direction_list(d)
            for player, d in report.best_responses.items()
        },
    }
    if report.witness is None:
        payload["witness"] = None
    else:
        payload["witness"] = {
            "player": report.witness.player,
            "direction": _direction_list(report.witness.direction),
            "gain": report.witness.gain,
        }
    return payload


def _pd_lines(verdict: nash.PDVerdict) -> list[str]:
    lines = [f"dilemma conditions: {'pass' if verdict.passed else 'fail'}"]
    for name in verdict.violated:
        lines.append(f"  violated: {name}")
    return lines


def _cmd_ne(args: argparse.Namespace) -> int:
    symmetric, echo = _require_symmetric(args)
    inputs: dict[str, Any] = {"game": echo, "subaction": args.subaction}
    results: dict[str, Any] = {"note": EQUILIBRIUM_NOTE}
    lines: list[str] = []
    rng_seed: int | None = None

    if args.check_pd:
        verdict = nash.check_pd(symmetric)
        results["pd_check"] = {"passed": verdict.passed, "violated": list(verdict.violated)}
        lines += _pd_lines(verdict)

    if args.subaction == "verify":
        profile = _parse_profile(args)
        inputs["a"] = _direction_list(profile.a)
        inputs["b"] = _direction_list(profile.b)
        inputs["c"] = _direction_list(profile.c)
        ne_report = nash.verify_ne(symmetric, profile)
        results["report"] = _ne_report_dict(ne_report)
        lines.append(f"verdict: {ne_report.verdict}")
        for player, d in ne_report.best_responses.items():
            shown = "indifferent" if d is None else f"({_fmt(d.a1)}, {_fmt(d.a2)}, {_fmt(d.a3)})"
            lines.append(f"  best response {player}: {shown}")
        if ne_report.witness is not None:
            w = ne_report.witness
            lines.append(
                f"  witness: player {w.player} deviates to "
                f"({_fmt(w.direction.a1)}, {_fmt(w.direction.a2)}, {_fmt(w.direction.a3)}) "
                f"for gain {_fmt(w.gain)}"
            )
        csv_rows = [{"key": "verdict", "value": ne_report.verdict}]
        csv_rows += [
            {"key": f"best_response_{p}", "value": "indifferent" if d is None else ",".join(_fmt(x) for x in _direction_list(d))}
            for p, d in ne_report.best_responses.items()
        ]
        if ne_report.witness is not None:
            w = ne_report.witness
            csv_rows.append({
                "key": f"witness_{w.player}",
                "value": ",".join(_fmt(x) for x in _direction_list(w.direction)) + f" gain {_fmt(w.gain)}",
            })
        fields = ["key", "value"]
    else:  # find
        if args.seeds < 1:
            raise CliError(EXIT_PARSE, "--seeds must be >= 1")
        rng_seed = args.rng_seed
        inputs["seeds"] = args.seeds
        search = nash.find_ne(symmetric, args.seeds, args.rng_seed)
        if not search.equilibria:
            raise CliError(EXIT_SEARCH, "no seed converged to a fixed point")
        results["equilibria"] = [
            {
                "profile": {
                    "a": _direction_list(eq.profile.a),
                    "b": _direction_list(eq.profile.b),
                    "c": _direction_list(eq.profile.c),
                },
                "report": _ne_report_dict(eq.report),
                "seeds": list(eq.seeds),
            }
            for eq in search.equilibria
        ]
        results["non_converged_seeds"] = list(search.non_converged)
        lines.append(f"equilibria found: {len(search.equilibria)}")
        csv_rows = []
        for index, eq in enumerate(search.equilibria):
            p = eq.profile
            lines.append(
                f"  [{index}] {eq.report.verdict}  "
                f"a=({_fmt(p.a.a1)}, {_fmt(p.a.a2)}, {_fmt(p.a.a3)}) "
                f"b=({_fmt(p.b.a1)}, {_fmt(p.b.a2)}, {_fmt(p.b.a3)}) "
                f"c=({_fmt(p.c.a1)}, {_fmt(p.c.a2)}, {_fmt(p.c.a3)}) "
                f"seeds={list(eq.seeds)}"
            )
            csv_rows.append({
                "index": index,
                "verdict": eq.report.verdict,
                "a": ",".join(_fmt(x) for x in _direction_list(p.a)),
                "b": ",".join(_fmt(x) for x in _direction_list(p.b)),
                "c": ",".join(_fmt(x) for x in _direction_list(p.c)),
                "seeds": " ".join(str(s) for s in eq.seeds),
            })
        if search.non_converged:
            lines.append(f"non-converged seeds: {list(search.non_converged)}")
        fields = ["index", "verdict", "a", "b", "c", "seeds"]

    lines.append(f"note: {EQUILIBRIUM_NOTE}")
    report = _report_envelope(args, "ne", inputs, results, rng_seed=rng_seed)
    if args.format == "json":
        _print_json(report)
    elif args.format == "csv":
        _print_csv(fields, csv_rows)
    else:
        _print_table(lines, report)
    return EXIT_OK


_PLANE_BUILDERS = {
    "xy": lambda t: (math.cos(t), math.sin(t), 0.0),
    "yz": lambda t: (0.0, math.cos(t), math.sin(t)),
    "xz": lambda t: (math.cos(t), 0.0, math.sin(t)),
}


def _cmd_sweep(args: argparse.Namespace) -> int:
    general, _, _ = load_game_file(args.game_file)
    player = args.rotate
    if player.startswith("player="):
        player = player[len("player="):]
    if player not in ("A", "B", "C"):
        raise CliError(EXIT_PARSE, f"--rotate must name player A, B, or C, got {args.rotate!r}")
    if args.plane not in _PLANE_BUILDERS:
        raise CliError(EXIT_PARSE, f"--plane must be one of xy, yz, xz, got {args.plane!r}")
    if args.steps < 1:
        raise CliError(EXIT_PARSE, "--steps must be >= 1")

    fixed: dict[str, Direction] = {}
    for name, flag_value in (("A", args.a), ("B", args.b), ("C", args.c)):
        if name == player:
            continue
        if flag_value is None:
            raise CliError(EXIT_PARSE, f"missing --{name.lower()} for the fixed player {name}")
        fixed[name] = _parse_direction(flag_value, args.normalize, args.spherical, f"--{name.lower()}")

    build = _PLANE_BUILDERS[args.plane]
    records = []
    for step in range(args.steps):
        angle = 2.0 * math.pi * step / args.steps
        rotated = Direction(*build(angle))
        directions = dict(fixed)
        directions[player] = rotated
        profile = DirectionProfile(directions["A"], directions["B"], directions["C"])
        dist = ghz.joint_distribution(profile)
        payoffs = game_mod.quantum_payoffs(general, profile)
        records.append({
            "angle": angle,
            "probabilities": {o.label(): dist[o] for o in OUTCOMES},
            "payoffs": {"A": payoffs.pi_a, "B": payoffs.pi_b, "C": payoffs.pi_c},
        })

    if args.format == "json":
        for record in records:
            print(json.dumps(record, sort_keys=True))
    else:  # csv is also the table rendering of a record stream
        fields = (
            ["angle"]
            + [f"prob_{o.label()}" for o in OUTCOMES]
            + ["payoff_a", "payoff_b", "payoff_c"]
        )
        rows = []
        for record in records:
            row: dict[str, str] = {"angle": _fmt(record["angle"])}
            for o in OUTCOMES:
                row[f"prob_{o.label()}"] = _fmt(record["probabilities"][o.label()])
            row["payoff_a"] = _fmt(record["payoffs"]["A"])
            row["payoff_b"] = _fmt(record["payoffs"]["B"])
            row["payoff_c"] = _fmt(record["payoffs"]["C"])
            rows.append(row)
        _print_csv(fields, rows)
    return EXIT_OK


def _cmd_check_game(args: argparse.Namespace) -> int:
    general, symmetric, echo = load_game_file(args.game_file)
    report_obj = check_symmetry(general)
    results: dict[str, Any] = {
        "type": echo["type"],
        "symmetric": report_obj.symmetric,
        "constants": None,
        "violations": list(report_obj.violations),
    }
    if symmetric is not None:
        results["constants"] = {
            name: getattr(symmetric, name) for name in _SYMMETRIC_FIELDS
        }
    report = _report_envelope(args, "check-game", {"game": echo}, results)
    if args.format == "json":
        _print_json(report)
    elif args.format == "csv":
        rows = [{"key": "symmetric", "value": str(report_obj.symmetric).lower()}]
        if results["constants"] is not None:
            rows += [{"key": k, "value": _fmt(v)} for k, v in results["constants"].items()]
        rows += [{"key": "violation", "value": v} for v in report_obj.violations]
        _print_csv(["key", "value"], rows)
    else:
        lines = [f"symmetric: {report_obj.symmetric}"]
        if results["constants"] is not None:
            for k, v in results["constants"].items():
                lines.append(f"  {k} = {_fmt(v)}")
        for v in report_obj.violations:
            lines.append(f"  violated: {v}")
        _print_table(lines, report)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring


def _add_direction_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--a", help="player A direction as x,y,z (or theta,phi with --spherical)")
    parser.add_argument("--b", help="player B direction")
    parser.add_argument("--c", help="player C direction")


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("table", "json", "csv"), default="table")
    parser.add_argument("--deterministic", action="store_true",
                        help="omit the timestamp so identical runs are byte-identical")
    parser.add_argument("--normalize", action="store_true",
                        help="rescale direction inputs to unit norm")
    parser.add_argument("--spherical", action="store_true",
                        help="read direction flags as theta,phi angles")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghzgames",
        description="Three-player direction games on a shared GHZ state",
    )
    parser.add_argument("--version", action="version", version=f"ghzgames {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    probs = sub.add_parser("probs", help="eight-outcome joint distribution for a profile")
    _add_direction_flags(probs)
    probs.add_argument("--oracle", action="store_true",
                       help="add the brute-force 3-qubit column and the max discrepancy")
    _add_common_flags(probs)
    probs.set_defaults(handler=_cmd_probs)

    payoffs = sub.add_parser("payoffs", help="expected payoffs for a profile or mixed strategies")
    payoffs.add_argument("game_file", help="game definition file (JSON)")
    _add_direction_flags(payoffs)
    payoffs.add_argument("--classical", help="mixed strategies as x,y,z instead of directions")
    _add_common_flags(payoffs)
    payoffs.set_defaults(handler=_cmd_payoffs)

    factorize = sub.add_parser("factorize", help="test whether the distribution factorizes")
    _add_direction_flags(factorize)
    _add_common_flags(factorize)
    factorize.set_defaults(handler=_cmd_factorize)

    ne = sub.add_parser("ne", help="verify a profile or search for equilibria")
    ne.add_argument("game_file", help="game definition file (must be symmetric)")
    ne.add_argument("subaction", choices=("verify", "find"))
    _add_direction_flags(ne)
    ne.add_argument("--seeds", type=int, default=64, help="random starts for find")
    ne.add_argument("--rng-seed", type=int, default=0, dest="rng_seed")
    ne.add_argument("--check-pd", action="store_true", dest="check_pd",
                    help="prefix the report with the generalized-dilemma check")
    _add_common_flags(ne)
    ne.set_defaults(handler=_cmd_ne)

    sweep = sub.add_parser("sweep", help="rotate one player through a plane, one record per step")
    sweep.add_argument("game_file", help="game definition file (JSON)")
    sweep.add_argument("--rotate", required=True, help="player to rotate: A, B, C (or player=A)")
    sweep.add_argument("--plane", default="xy", help="rotation plane: xy, yz, xz")
    sweep.add_argument("--steps", type=int, required=True, help="samples over [0, 2*pi)")
    _add_direction_flags(sweep)
    _add_common_flags(sweep)
    sweep.set_defaults(handler=_cmd_sweep)

    check = sub.add_parser("check-game", help="validate a game file and report its symmetry")
    check.add_argument("game_file", help="game definition file (JSON)")
    _add_common_flags(check)
    check.set_defaults(handler=_cmd_check_game)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return args.handler(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code


def app() -> None:
    sys.exit(main())


if __name__ == "__main__":
    app()
