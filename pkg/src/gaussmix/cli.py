"""Command-line interface: scenario files in, JSON verdicts and CSV sweeps out.

Subcommands:

* check      - single-shot verdict for one scenario (JSON on stdout)
* sweep      - grid sweep to CSV, optionally with a rendered figure
* io-fidelity - sweep preset to the input-output fidelity mode
* certify    - randomized iff certification campaign

Exit codes: 0 success (regardless of the physics verdict), 2 malformed
input, 3 domain/numeric error, 4 unwritable output, 5 certification found a
disagreement.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import verify
from .errors import DomainError, GaussMixError, InvalidParameterError, NumericError
from .evolution import CouplingSpec
from .states import GaussianParams
from .verify import DEFAULT_SEED, SweepSample

SEED_ENV_VAR = "GAUSSMIX_SEED"

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_DOMAIN = 3
EXIT_UNWRITABLE = 4
EXIT_DISAGREEMENT = 5

_MODES = ("theorem", "corollary", "io-fidelity")
_SWEEP_VARIABLES = ("psi", "tau")
_SCENARIO_KEYS = {"state1", "state2", "tau", "g", "t", "sweep", "seed", "mode"}
_SWEEP_KEYS = {"variable", "from", "to", "points"}

CSV_COLUMNS = ("psi", "tau", "fidelity", "threshold", "lambda_tilde", "entangled")
CSV_IO_COLUMNS = CSV_COLUMNS + ("f_io_11", "f_io_12", "f_io_21", "f_io_22")
CERTIFY_COLUMNS = (
    "mode", "index",
    "alpha_re1", "alpha_im1", "r1", "psi1", "n_th1",
    "alpha_re2", "alpha_im2", "r2", "psi2", "n_th2",
    "tau", "fidelity", "threshold", "lambda_tilde",
    "verdict_fidelity", "verdict_simon", "boundary_excluded",
)


@dataclass(frozen=True)
class Scenario:
    state1: GaussianParams
    state2: GaussianParams
    tau: float
    mode: str
    sweep: dict | None
    seed: int | None


def _require_number(value, label: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidParameterError(f"{label} must be a number, got {value!r}")
    if not math.isfinite(float(value)):
        raise InvalidParameterError(f"{label} must be finite, got {value!r}")
    return float(value)


def parse_scenario(data: dict) -> Scenario:
    """Validate a scenario object. Unknown fields are rejected."""
    if not isinstance(data, dict):
        raise InvalidParameterError("scenario must be a JSON object")
    unknown = set(data) - _SCENARIO_KEYS
    if unknown:
        raise InvalidParameterError(f"unknown scenario field(s): {sorted(unknown)}")
    for key in ("state1", "state2", "mode"):
        if key not in data:
            raise InvalidParameterError(f"scenario is missing required field {key!r}")
    if data["mode"] not in _MODES:
        raise InvalidParameterError(f"mode must be one of {_MODES}, got {data['mode']!r}")

    has_tau = "tau" in data
    has_gt = "g" in data or "t" in data
    if has_tau == ("g" in data and "t" in data) or (has_gt and not ("g" in data and "t" in data)):
        raise InvalidParameterError("exactly one of 'tau' or the pair ('g', 't') must be given")
    if has_tau:
        tau = _require_number(data["tau"], "tau")
        coupling = CouplingSpec(tau=tau)
    else:
        coupling = CouplingSpec.from_interaction(
            _require_number(data["g"], "g"), _require_number(data["t"], "t")
        )

    sweep = None
    if "sweep" in data:
        raw = data["sweep"]
        if not isinstance(raw, dict):
            raise InvalidParameterError("sweep must be an object")
        unknown = set(raw) - _SWEEP_KEYS
        if unknown:
            raise InvalidParameterError(f"unknown sweep field(s): {sorted(unknown)}")
        missing = _SWEEP_KEYS - set(raw)
        if missing:
            raise InvalidParameterError(f"sweep is missing field(s): {sorted(missing)}")
        if raw["variable"] not in _SWEEP_VARIABLES:
            raise InvalidParameterError(
                f"sweep.variable must be one of {_SWEEP_VARIABLES}, got {raw['variable']!r}"
            )
        points = raw["points"]
        if isinstance(points, bool) or not isinstance(points, int) or points < 2:
            raise InvalidParameterError(f"sweep.points must be an integer >= 2, got {points!r}")
        sweep = {
            "variable": raw["variable"],
            "from": _require_number(raw["from"], "sweep.from"),
            "to": _require_number(raw["to"], "sweep.to"),
            "points": points,
        }

    seed = None
    if "seed" in data:
        raw_seed = data["seed"]
        if isinstance(raw_seed, bool) or not isinstance(raw_seed, int) or not 0 <= raw_seed < 2**64:
            raise InvalidParameterError(f"seed must be an unsigned 64-bit integer, got {raw_seed!r}")
        seed = raw_seed

    return Scenario(
        state1=GaussianParams.from_dict(data["state1"]),
        state2=GaussianParams.from_dict(data["state2"]),
        tau=coupling.tau,
        mode=data["mode"],
        sweep=sweep,
        seed=seed,
    )


def load_scenario(path: str) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidParameterError(f"cannot read scenario file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"scenario file {path!r} is not valid JSON: {exc}") from exc
    return parse_scenario(data)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _json_float(value: float):
    return None if math.isnan(value) else value


def resolve_seed(flag_seed: int | None) -> int:
    """--seed beats GAUSSMIX_SEED beats the built-in default."""
    if flag_seed is not None:
        if not 0 <= flag_seed < 2**64:
            raise InvalidParameterError(f"--seed must be an unsigned 64-bit integer, got {flag_seed}")
        return flag_seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            seed = int(env)
        except ValueError as exc:
            raise InvalidParameterError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from exc
        if not 0 <= seed < 2**64:
            raise InvalidParameterError(f"{SEED_ENV_VAR} must be an unsigned 64-bit integer, got {seed}")
        return seed
    return DEFAULT_SEED


def _verdict_json(sample: SweepSample) -> dict:
    out = {
        "fidelity": sample.fidelity,
        "threshold": _json_float(sample.threshold),
        "lambda_tilde": sample.lambda_tilde,
        "entangled": sample.verdict_simon,
        "margin": sample.lambda_tilde - 0.5,
        "boundary_excluded": sample.boundary_excluded,
    }
    if math.isnan(sample.threshold):
        out["note"] = "no-interaction"
    return out


def cmd_check(args) -> int:
    scenario = load_scenario(args.scenario)
    tau = args.tau if args.tau is not None else scenario.tau
    CouplingSpec(tau=tau)
    if scenario.mode == "theorem":
        sample = verify.check_theorem(scenario.state1, scenario.state2, tau)
    elif scenario.mode == "corollary":
        sample = verify.check_corollary(scenario.state1, scenario.state2, tau)
    else:
        sample = verify._sweep_point(scenario.state1, scenario.state2, tau, "io-fidelity")
    payload = _verdict_json(sample)
    if scenario.mode == "io-fidelity":
        report = verify.io_fidelity_thresholds(scenario.state1, scenario.state2, tau)
        payload["io"] = {
            "fidelities": list(report.fidelities),
            "thresholds": list(report.thresholds) if report.thresholds is not None else None,
            "psi_e_numeric": report.psi_e_numeric,
        }
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def _write_rows(path: str, header: tuple, rows: list[list]) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
    except OSError as exc:
        raise _UnwritableOutput(f"cannot write {path!r}: {exc}") from exc


class _UnwritableOutput(GaussMixError):
    pass


def cmd_sweep(args, forced_mode: str | None = None) -> int:
    scenario = load_scenario(args.scenario)
    if forced_mode is not None:
        scenario = Scenario(state1=scenario.state1, state2=scenario.state2,
                            tau=scenario.tau, mode=forced_mode,
                            sweep=scenario.sweep, seed=scenario.seed)
    if scenario.sweep is None:
        raise InvalidParameterError("sweep requires a scenario with a sweep block")
    tau = args.tau if args.tau is not None else scenario.tau
    CouplingSpec(tau=tau)
    points = args.points if args.points is not None else scenario.sweep["points"]
    if points < 2:
        raise InvalidParameterError(f"--points must be >= 2, got {points}")
    variable = scenario.sweep["variable"]
    lo, hi = scenario.sweep["from"], scenario.sweep["to"]
    grid = np.linspace(lo, hi, points)

    if variable == "psi":
        samples = verify.sweep_psi(scenario.state1, scenario.state2, tau, points,
                                   psi_from=lo, psi_to=hi, mode=scenario.mode)
    else:
        samples = verify.sweep_tau(scenario.state1, scenario.state2, lo, hi, points,
                                   mode=scenario.mode)

    io_mode = scenario.mode == "io-fidelity"
    header = CSV_IO_COLUMNS if io_mode else CSV_COLUMNS
    rows = []
    for value, sample in zip(grid, samples):
        psi = value if variable == "psi" else sample.params2.psi
        row_tau = sample.tau
        row = [float(psi), float(row_tau), sample.fidelity, sample.threshold,
               sample.lambda_tilde, sample.verdict_simon]
        if io_mode:
            row.extend(sample.io_fidelities)
        rows.append(row)
    _write_rows(args.out, header, rows)

    io_report = None
    if io_mode and variable == "psi":
        io_report = verify.io_fidelity_thresholds(scenario.state1, scenario.state2, tau)

    plot_path = None
    if args.plot is not None:
        plot_path = args.plot if args.plot != "" else os.path.splitext(args.out)[0] + ".png"
        from .plotting import render_sweep_figure

        try:
            render_sweep_figure(grid, samples, variable, plot_path, io_report=io_report)
        except OSError as exc:
            raise _UnwritableOutput(f"cannot write {plot_path!r}: {exc}") from exc

    if not args.quiet:
        summary = {
            "command": "sweep",
            "mode": scenario.mode,
            "variable": variable,
            "rows": len(rows),
            "entangled_rows": sum(1 for s in samples if s.verdict_simon),
            "out": args.out,
        }
        if io_report is not None:
            summary["io_thresholds"] = (
                list(io_report.thresholds) if io_report.thresholds is not None else None
            )
            summary["psi_e_numeric"] = io_report.psi_e_numeric
        if plot_path is not None:
            summary["plot"] = plot_path
        print(json.dumps(summary, indent=2))
    return EXIT_OK


def cmd_certify(args) -> int:
    seed = resolve_seed(args.seed)
    summary, rows = verify.certify(args.samples, seed, mode="both")
    if args.out is not None:
        csv_rows = []
        for index, (chain, s) in enumerate(rows):
            csv_rows.append([
                chain, index,
                s.params1.alpha_re, s.params1.alpha_im, s.params1.r, s.params1.psi, s.params1.n_th,
                s.params2.alpha_re, s.params2.alpha_im, s.params2.r, s.params2.psi, s.params2.n_th,
                s.tau, s.fidelity, s.threshold, s.lambda_tilde,
                s.verdict_fidelity, s.verdict_simon, s.boundary_excluded,
            ])
        _write_rows(args.out, CERTIFY_COLUMNS, csv_rows)
    payload = {
        "samples": summary.samples,
        "checks": summary.checks,
        "disagreements": summary.disagreements,
        "boundary_excluded_count": summary.boundary_excluded_count,
        "max_margin_violation": summary.max_margin_violation,
        "seed": seed,
        "out": args.out,
    }
    print(json.dumps(payload, indent=2))
    return EXIT_DISAGREEMENT if summary.disagreements else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussmix",
        description="Gaussian-state mixing: fidelity thresholds and entanglement verdicts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_out: bool):
        p.add_argument("--scenario", required=True, help="path to a scenario JSON file")
        p.add_argument("--tau", type=float, default=None, help="override the scenario coupling")
        p.add_argument("--quiet", action="store_true", help="suppress the stdout summary")
        if needs_out:
            p.add_argument("--out", required=True, help="output CSV path")
            p.add_argument("--points", type=int, default=None, help="override sweep point count")
            p.add_argument("--plot", nargs="?", const="", default=None, metavar="PATH",
                           help="render a figure next to the CSV (or at PATH)")

    add_common(sub.add_parser("check", help="single verdict for a scenario"), needs_out=False)
    add_common(sub.add_parser("sweep", help="grid sweep to CSV"), needs_out=True)
    add_common(sub.add_parser("io-fidelity", help="sweep in input-output fidelity mode"),
               needs_out=True)

    cert = sub.add_parser("certify", help="randomized iff certification")
    cert.add_argument("--samples", type=int, default=10000, help="number of random draws")
    cert.add_argument("--seed", type=int, default=None,
                      help=f"RNG seed (beats {SEED_ENV_VAR}; default {DEFAULT_SEED})")
    cert.add_argument("--out", default=None, help="optional per-sample CSV path")
    cert.add_argument("--quiet", action="store_true", help="suppress the stdout summary")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            return cmd_check(args)
        if args.command == "sweep":
            return cmd_sweep(args)
        if args.command == "io-fidelity":
            return cmd_sweep(args, forced_mode="io-fidelity")
        if args.command == "certify":
            return cmd_certify(args)
        parser.error(f"unknown command {args.command!r}")
    except _UnwritableOutput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    except (DomainError, NumericError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (InvalidParameterError, GaussMixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    return EXIT_BAD_INPUT


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
