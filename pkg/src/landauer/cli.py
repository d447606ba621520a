"""
Command-line front end.

    landauer entropy --state gaussian --sigma 1
    landauer erase --mode ontic --temperature 300 --ratio 2
    landauer measure --sigma-before 1 --sigma-after 0.5 --verify-numerically
    landauer demon --mass 6.6335e-26 --temperature 300 --photon-fraction 0.01
    landauer uncertainty-check --trials 100 --seed 42

Exit codes: 0 ok, 1 bound violated (numerics bug), 2 bad arguments,
3 state does not fit the grid, 4 numerical cross-check failed.
Floats are printed with 12 significant digits; set LANDAUER_DIGITS to change that.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import demon as demon_mod
from . import entropy as entropy_mod
from . import thermo
from .constants import BOLTZMANN_K, BOUND_TOLERANCE
from .errors import GenerationFailed, GridTooSmall, InvalidGrid, LandauerError, MismatchBeyondTolerance
from .wavegrid import Grid, make_gaussian, make_uniform, random_state, to_momentum

EXIT_OK, EXIT_BOUND, EXIT_USAGE, EXIT_GRID, EXIT_MISMATCH = 0, 1, 2, 3, 4
DEFAULT_DIGITS = 12


def _digits() -> int:
    raw = os.environ.get("LANDAUER_DIGITS")
    if raw is None:
        return DEFAULT_DIGITS
    try:
        d = int(raw)
    except ValueError:
        return DEFAULT_DIGITS
    return min(max(d, 1), 17)


def format_float(v: float, digits: int | None = None) -> str:
    digits = digits or _digits()
    if not math.isfinite(v):
        # JSON has no literal for these; emitted as strings.
        return json.dumps(repr(v))
    return f"{v:.{digits - 1}e}"


def to_json(obj, digits: int | None = None, indent: int = 0) -> str:
    """JSON with every float at a fixed number of significant digits."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {to_json(v, digits, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + to_json(v, digits, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj), digits)
    if obj is None:
        return "null"
    return json.dumps(str(obj))


def _scalar(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return format_float(float(v))
    if v is None:
        return ""
    return str(v)


def _flatten(d: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        else:
            out[key] = v
    return out


def render(envelope: dict, fmt: str) -> str:
    results = envelope["results"]
    if fmt == "json":
        return to_json(envelope) + "\n"
    rows = results if isinstance(results, list) else [results]
    rows = [_flatten(r) for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(list(rows[0]))
        for r in rows:
            writer.writerow([_scalar(v) for v in r.values()])
        return buf.getvalue()
    lines = [f"# {envelope['command']} ({envelope['units']})"]
    for i, r in enumerate(rows):
        if len(rows) > 1:
            lines.append(f"[{i}]")
        width = max(len(k) for k in r)
        lines.extend(f"{k.ljust(width)}  {_scalar(v)}" for k, v in r.items())
    return "\n".join(lines) + "\n"


def envelope(command: str, inputs: dict, results, units: str) -> dict:
    return {"command": command, "inputs": inputs, "results": results, "units": units}


def _positive(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def _nonnegative(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(v) and v >= 0):
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return v


def _finite(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite, got {text}")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return v


def _fraction_list(text: str) -> list[float]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("sweep needs at least one fraction")
    return [_positive(p) for p in parts]


def _grid_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=_positive_int, default=4096, help="grid points (power of two >= 16)")
    p.add_argument("--dx", type=_positive, default=0.01, help="grid spacing, h = 1 units")


def _format_arg(p: argparse.ArgumentParser, default: str | None = "json") -> None:
    p.add_argument("--format", choices=("json", "csv", "table"), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="landauer", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", help="joint position/momentum information of a grid state")
    p.add_argument("--state", choices=("gaussian", "uniform", "random"), default="gaussian")
    p.add_argument("--sigma", type=_positive, default=1.0, help="Gaussian density std")
    p.add_argument("--length", type=_positive, default=1.0, help="uniform support length")
    p.add_argument("--center", type=_finite, default=0.0)
    p.add_argument("--edge-smoothing", type=_nonnegative, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--smoothness", type=_positive, default=0.3)
    p.add_argument("--bound-tolerance", type=_nonnegative, default=BOUND_TOLERANCE)
    _grid_args(p)
    _format_arg(p)

    p = sub.add_parser("erase", help="work/heat ledger of a piston reset")
    p.add_argument("--mode", choices=("ontic", "epistemic-left", "epistemic-right"), required=True)
    p.add_argument("--temperature", type=_positive, default=300.0, help="K")
    p.add_argument("--box-length", type=_positive, default=1.0, help="m")
    p.add_argument("--ratio", type=_positive, default=2.0, help="compression ratio V_i/V_f (> 1)")
    p.add_argument("--translation-force", type=_nonnegative, default=0.0,
                   help="piston force on an R molecule, N (reported separately)")
    _format_arg(p)

    p = sub.add_parser("measure", help="cost of a position measurement on a Gaussian")
    p.add_argument("--sigma-before", type=_positive, required=True)
    p.add_argument("--sigma-after", type=_positive, required=True)
    p.add_argument("--temperature", type=_positive, default=300.0, help="K")
    p.add_argument("--verify-numerically", action="store_true")
    _grid_args(p)
    _format_arg(p)

    p = sub.add_parser("demon", help="door width versus post-measurement spread")
    p.add_argument("--mass", type=_positive, required=True, help="kg")
    p.add_argument("--temperature", type=_positive, required=True, help="K")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--photon-energy", type=_positive, help="J")
    g.add_argument("--photon-fraction", type=_positive, help="photon energy / (k_B T)")
    p.add_argument("--sweep", type=_fraction_list, help="comma-separated photon fractions")
    _format_arg(p, default=None)

    p = sub.add_parser("uncertainty-check", help="joint-information bound over random states")
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--smoothness", type=_positive, default=0.3)
    p.add_argument("--bound-tolerance", type=_nonnegative, default=BOUND_TOLERANCE)
    _grid_args(p)
    _format_arg(p)
    return parser


def _grid(args) -> Grid:
    return Grid.centered(args.n, args.dx)


def cmd_entropy(args):
    grid = _grid(args)
    inputs = {"state": args.state, "n": args.n, "dx": args.dx}
    if args.state == "gaussian":
        inputs.update(sigma=args.sigma, center=args.center)
        state = make_gaussian(grid, args.sigma, args.center)
    elif args.state == "uniform":
        inputs.update(length=args.length, center=args.center, edge_smoothing=args.edge_smoothing)
        state = make_uniform(grid, args.length, args.center, args.edge_smoothing)
    else:
        inputs.update(seed=args.seed, smoothness=args.smoothness)
        state = random_state(args.seed, grid, args.smoothness)
    if state.sharp_edges:
        print("note: sharp-edged box; h_p carries a grid-truncation error", file=sys.stderr)
    report = entropy_mod.joint_information(state, args.bound_tolerance)
    results = report.to_dict()
    results["s_thermo"] = entropy_mod.thermodynamic_entropy(to_momentum(state), 1.0)
    results["sharp_edges"] = state.sharp_edges
    env = envelope("entropy", inputs, results, "natural-h1")
    return env, EXIT_OK if report.bound_satisfied else EXIT_BOUND


_MODE = {"ontic": "ontic_spread", "epistemic-left": "epistemic_left",
         "epistemic-right": "epistemic_right"}


def cmd_erase(args):
    scenario = thermo.MemoryScenario(
        mode=_MODE[args.mode], box_length=args.box_length, temperature=args.temperature,
        compression_ratio=args.ratio, translation_force=args.translation_force,
    )
    ledger = thermo.evaluate_reset(scenario, BOLTZMANN_K)
    inputs = {"mode": args.mode, "temperature": args.temperature, "box_length": args.box_length,
              "ratio": args.ratio, "translation_force": args.translation_force}
    return envelope("erase", inputs, ledger.to_dict(), "SI"), EXIT_OK


def cmd_measure(args):
    result = thermo.measurement_ledger(args.sigma_before, args.sigma_after, args.temperature, BOLTZMANN_K)
    inputs = {"sigma_before": args.sigma_before, "sigma_after": args.sigma_after,
              "temperature": args.temperature, "verify_numerically": args.verify_numerically}
    results = result.to_dict()
    code = EXIT_OK
    if args.verify_numerically:
        inputs.update(n=args.n, dx=args.dx)
        try:
            check = thermo.verify_measurement_numerically(
                args.sigma_before, _grid(args), args.sigma_after)
        except MismatchBeyondTolerance as exc:
            check = exc.report
            code = EXIT_MISMATCH
        results["numerical"] = check.to_dict()
    return envelope("measure", inputs, results, "SI"), code


def cmd_demon(args):
    if args.sweep is None and args.photon_energy is None and args.photon_fraction is None:
        raise _UsageError("one of --photon-energy, --photon-fraction or --sweep is required")
    inputs = {"mass": args.mass, "temperature": args.temperature}
    if args.sweep is not None:
        if args.photon_energy is not None or args.photon_fraction is not None:
            raise _UsageError("--sweep cannot be combined with a single photon energy")
        inputs["sweep"] = args.sweep
        base = demon_mod.DemonParams.from_fraction(args.mass, args.temperature, 1.0)
        reports = demon_mod.sweep_photon_energy(base, args.sweep)
        results = [r.to_dict() for r in reports]
        return envelope("demon", inputs, results, "SI"), EXIT_OK, reports
    if args.photon_fraction is not None:
        inputs["photon_fraction"] = args.photon_fraction
        params = demon_mod.DemonParams.from_fraction(args.mass, args.temperature, args.photon_fraction)
    else:
        inputs["photon_energy"] = args.photon_energy
        params = demon_mod.DemonParams(args.mass, args.temperature, args.photon_energy)
    report = demon_mod.demon_feasibility(params)
    return envelope("demon", inputs, report.to_dict(), "SI"), EXIT_OK, None


def cmd_uncertainty_check(args):
    grid = _grid(args)
    margins = np.empty(args.trials)
    for i in range(args.trials):
        state = random_state(args.seed + i, grid, args.smoothness)
        margins[i] = entropy_mod.joint_information(state, args.bound_tolerance).margin
    violations = int(np.sum(margins < -args.bound_tolerance))
    results = {
        "trials": args.trials,
        "min_margin": float(margins.min()),
        "median_margin": float(np.median(margins)),
        "max_margin": float(margins.max()),
        "violations": violations,
        "bound": entropy_mod.JOINT_BOUND_H1,
        "tolerance": args.bound_tolerance,
    }
    inputs = {"trials": args.trials, "seed": args.seed, "smoothness": args.smoothness,
              "n": args.n, "dx": args.dx}
    env = envelope("uncertainty-check", inputs, results, "natural-h1")
    return env, EXIT_OK if violations == 0 else EXIT_BOUND


class _UsageError(Exception):
    pass


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK

    try:
        if args.command == "demon":
            env, code, reports = cmd_demon(args)
            fmt = args.format or ("csv" if reports is not None else "json")
            if reports is not None and fmt == "csv":
                text = demon_mod.reports_to_csv(reports, format_float)
            else:
                text = render(env, fmt)
        else:
            handler = {"entropy": cmd_entropy, "erase": cmd_erase, "measure": cmd_measure,
                       "uncertainty-check": cmd_uncertainty_check}[args.command]
            env, code = handler(args)
            text = render(env, args.format)
    except _UsageError as exc:
        print(f"landauer {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GridTooSmall, GenerationFailed, InvalidGrid) as exc:
        print(f"landauer {args.command}: grid error: {exc}", file=sys.stderr)
        return EXIT_GRID
    except LandauerError as exc:
        print(f"landauer {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
