"""Command-line front end.

Runs pair-spectrum scenarios, builds the entropy table, checks the ring-mode
construction against its closed form, and scans entropy conventions.  All
artifacts are deterministic: the same configuration produces byte-identical
files.

Exit codes: 0 ok, 2 configuration error, 3 quadrature non-convergence or a
failed construction check, 4 spectrum window too small.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, fields
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np

from .entanglement import Convention, EntropyReport, calibrate, entropy_table
from .modes import (BESSEL_GAUSS, DEFAULT_RING_RADIUS, DEFAULT_RING_WIDTH, LG,
                    POV, ModeSpec, bg_mode, fourier_lens_transform,
                    lens_output_ring, pov_mode, pov_radial)
from .overlap import conserves_oam
from .quadrature import QuadratureConfig, QuadratureError
from .spectrum import (Scenario, WindowTooSmallError, build_spectrum,
                       global_maxima, spectrum_width)

OUTDIR_ENV = "SPDC_OAM_OUTDIR"
COMMANDS = ("spectrum", "entropy-table", "validate-pov", "calibrate")

# lens parameters of the construction check and the tolerance it enforces
POV_CHECK_PARAMS = {"k": 4.0, "f": 1.0, "k_r": 1.0, "w": 1.0}
POV_CHECK_ORDERS = (0, 1, 2, 3)
POV_CHECK_TOLERANCE = 1e-4


class ConfigError(ValueError):
    """Rejected configuration; maps to exit code 2."""


def _require_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError("%s: expected an integer, got %r" % (name, value))
    return value


def _require_float(name, value, minimum=None, strict=True):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError("%s: expected a number, got %r" % (name, value))
    value = float(value)
    if minimum is not None and (value <= minimum if strict else value < minimum):
        raise ConfigError("%s: must be %s %g" % (name, ">" if strict else ">=", minimum))
    return value


def _require_bool(name, value):
    if not isinstance(value, bool):
        raise ConfigError("%s: expected true/false, got %r" % (name, value))
    return value


def _require_choice(name, value, choices):
    if value not in choices:
        raise ConfigError("%s: must be one of %s, got %r" % (name, "/".join(map(str, choices)), value))
    return value


@dataclass(frozen=True)
class RunConfig:
    """Everything one invocation needs; round-trips through to_dict/from_dict."""

    command: str
    # scenario
    pump_family: str = LG
    pump_l: int = 1
    pump_p: int = 0
    project_family: str = LG
    l_window: Optional[int] = None
    ring_radius: float = DEFAULT_RING_RADIUS
    ring_width: float = DEFAULT_RING_WIDTH
    normalize_projections: bool = False
    # quadrature overrides
    r_max: float = 8.0
    radial_nodes: int = 32
    panels: int = 8
    azimuthal_nodes: int = 256
    rel_tol: float = 1e-10
    # entropy convention
    log_base: Union[str, float] = "e"
    normalize_weights: bool = True
    conventions: str = "default"
    # debug pair query for the spectrum command
    query: Optional[Tuple[int, int]] = None
    # output
    output: Optional[str] = None
    outdir: Optional[str] = None
    format: Optional[str] = None

    def __post_init__(self):
        _require_choice("command", self.command, COMMANDS)
        _require_choice("pump_family", self.pump_family, (LG, POV))
        _require_choice("project_family", self.project_family, (LG, POV))
        _require_int("pump_l", self.pump_l)
        _require_int("pump_p", self.pump_p)
        if self.pump_p < 0:
            raise ConfigError("pump_p: must be a nonnegative integer")
        if self.pump_p != 0 and self.pump_family != LG:
            raise ConfigError("pump_p: radial index is only supported for LG pumps")
        if self.l_window is not None:
            _require_int("l_window", self.l_window)
            if self.l_window < abs(self.pump_l) + 4:
                raise ConfigError("l_window: must be at least |pump_l| + 4 = %d"
                                  % (abs(self.pump_l) + 4))
        _require_float("ring_radius", self.ring_radius, minimum=0.0)
        _require_float("ring_width", self.ring_width, minimum=0.0)
        _require_float("r_max", self.r_max, minimum=0.0)
        if _require_int("radial_nodes", self.radial_nodes) < 2:
            raise ConfigError("radial_nodes: must be at least 2")
        if _require_int("panels", self.panels) < 1:
            raise ConfigError("panels: must be at least 1")
        if _require_int("azimuthal_nodes", self.azimuthal_nodes) < 4:
            raise ConfigError("azimuthal_nodes: must be at least 4")
        rel_tol = _require_float("rel_tol", self.rel_tol, minimum=0.0)
        if rel_tol < 1e-12:
            raise ConfigError("rel_tol: below 1e-12 is tighter than the arithmetic supports")
        if isinstance(self.log_base, str):
            if self.log_base not in ("e", "ln"):
                raise ConfigError("log_base: must be 'e', 'ln', or a positive number != 1")
        else:
            base = _require_float("log_base", self.log_base, minimum=0.0)
            if base == 1.0:
                raise ConfigError("log_base: base 1 is undefined")
        _require_bool("normalize_projections", self.normalize_projections)
        _require_bool("normalize_weights", self.normalize_weights)
        _require_choice("conventions", self.conventions, ("default", "all"))
        if self.query is not None:
            q = self.query
            if len(q) != 2:
                raise ConfigError("query: expected exactly two integers l_s l_i")
            _require_int("query", q[0])
            _require_int("query", q[1])
        if self.format is not None:
            _require_choice("format", self.format, ("csv", "json"))

    def to_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, tuple):
                value = list(value)
            out[f.name] = value
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "RunConfig":
        if not isinstance(data, dict):
            raise ConfigError("config: expected a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError("unknown config field(s): %s" % ", ".join(unknown))
        data = dict(data)
        if isinstance(data.get("query"), list):
            data["query"] = tuple(data["query"])
        base = data.get("log_base")
        if isinstance(base, str) and base not in ("e", "ln"):
            try:
                data["log_base"] = float(base)
            except ValueError:
                raise ConfigError("log_base: must be 'e', 'ln', or a positive number != 1")
        elif isinstance(base, int) and not isinstance(base, bool):
            data["log_base"] = float(base)
        if "command" not in data:
            raise ConfigError("command: missing")
        return cls(**data)


def _load_config_file(path: str) -> Dict[str, object]:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError("cannot read config file: %s" % exc)
    except json.JSONDecodeError as exc:
        raise ConfigError("config file is not valid JSON: %s" % exc)
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a JSON object")
    return data


# ---------------------------------------------------------------- output


def _fmt(x: float) -> str:
    # fixed 12-significant-digit decimals keep artifacts byte-identical
    return "%.12g" % x


def _round_floats(obj):
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _dump_json(obj) -> str:
    return json.dumps(_round_floats(obj), indent=2, sort_keys=True) + "\n"


def _artifact_path(config: RunConfig, default_name: str) -> str:
    name = config.output if config.output else default_name
    if not os.path.isabs(name):
        outdir = config.outdir or os.environ.get(OUTDIR_ENV) or "."
        name = os.path.join(outdir, name)
    try:
        parent = os.path.dirname(name)
        if parent:
            os.makedirs(parent, exist_ok=True)
    except OSError as exc:
        raise ConfigError("cannot create output directory: %s" % exc)
    return name


def _write_artifact(path: str, text: str) -> None:
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError("cannot write %s: %s" % (path, exc))


def _scenario_dict(sc: Scenario) -> Dict[str, object]:
    d: Dict[str, object] = {
        "pump_family": sc.pump.family,
        "pump_l": sc.pump.l,
        "pump_p": sc.pump.p,
        "signal_family": sc.signal_family,
        "idler_family": sc.idler_family,
        "l_window": sc.window,
        "normalize_projections": sc.normalize_projections,
    }
    if POV in (sc.pump.family, sc.signal_family, sc.idler_family):
        d["ring_radius"] = sc.ring_radius
        d["ring_width"] = sc.ring_width
    return d


# ---------------------------------------------------------------- commands


def _scenario_from(config: RunConfig) -> Scenario:
    if config.pump_family == LG:
        pump = ModeSpec(LG, config.pump_l, p=config.pump_p, w0=1.0)
    else:
        pump = ModeSpec(POV, config.pump_l, r0=config.ring_radius, w0=config.ring_width)
    return Scenario(pump, config.project_family, config.project_family,
                    l_window=config.l_window,
                    ring_radius=config.ring_radius, ring_width=config.ring_width,
                    normalize_projections=config.normalize_projections)


def _cmd_spectrum(config: RunConfig, quad: QuadratureConfig) -> int:
    scenario = _scenario_from(config)
    if config.query is not None:
        # widen the window so a conserving query pair is actually computed
        ls, li = config.query
        if conserves_oam(scenario.pump.l, ls, li):
            needed = max(abs(ls), abs(li))
            if needed > scenario.window:
                scenario = Scenario(scenario.pump, scenario.signal_family,
                                    scenario.idler_family, l_window=needed,
                                    ring_radius=scenario.ring_radius,
                                    ring_width=scenario.ring_width,
                                    normalize_projections=scenario.normalize_projections)
    grid = build_spectrum(scenario, quad)

    fmt = config.format or "csv"
    if fmt == "csv":
        w = scenario.window
        lines = ["l_s,l_i,probability"]
        for ls in range(-w, w + 1):
            for li in range(-w, w + 1):
                lines.append("%d,%d,%s" % (ls, li, _fmt(grid.probability(ls, li))))
        text = "\n".join(lines) + "\n"
        path = _artifact_path(config, _default_name(config, "csv"))
    else:
        payload = {
            "scenario": _scenario_dict(scenario),
            "tail_mass": grid.tail_mass,
            "raw_total": grid.raw_total,
            "pairs": [{"l_s": ls, "l_i": li, "probability": p}
                      for ls, li, p in grid.anti_diagonal()],
        }
        text = _dump_json(payload)
        path = _artifact_path(config, _default_name(config, "json"))
    _write_artifact(path, text)

    print("scenario %s, window %d" % (scenario.label(), scenario.window))
    tops = global_maxima(grid)
    print("maxima: " + "  ".join("(%d,%d) %s" % (pair[0], pair[1], _fmt(p))
                                 for pair, p in tops))
    print("width (participation ratio): %s" % _fmt(spectrum_width(grid)))
    if config.query is not None:
        ls, li = config.query
        print("query %d,%d -> probability %s" % (ls, li, _fmt(grid.probability(ls, li))))
    print("wrote %s" % path)
    return 0


def _default_name(config: RunConfig, ext: str) -> str:
    if config.command == "spectrum":
        return "spectrum_%s_l%d_%s.%s" % (config.pump_family.lower(), config.pump_l,
                                          config.project_family.lower(), ext)
    return "%s.%s" % (config.command.replace("-", "_"), ext)


def _orderings(report: EntropyReport) -> Dict[str, bool]:
    rows_ordered = all(r[0] > r[1] > r[2] for r in report.cells)
    cols_increasing = all(
        all(report.cells[i][c] < report.cells[i + 1][c]
            for i in range(len(report.cells) - 1))
        for c in range(len(report.columns)))
    return {"scenario_ordering_strict": rows_ordered,
            "monotone_in_pump_order": cols_increasing}


def _entropy_csv(report: EntropyReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["l_p"] + list(report.columns))
    for lp, row in zip(report.l_p_values, report.cells):
        writer.writerow([lp] + [_fmt(v) for v in row])
    return buf.getvalue()


def _cmd_entropy_table(config: RunConfig, quad: QuadratureConfig) -> int:
    if config.conventions == "all":
        blocks = []
        for base in ("e", 2.0):
            for wnorm in (True, False):
                conv = Convention(log_base=base, normalize_weights=wnorm,
                                  ring_radius=config.ring_radius,
                                  ring_width=config.ring_width,
                                  normalize_projections=config.normalize_projections)
                report = entropy_table(quad=quad, convention=conv)
                orderings = _orderings(report)
                blocks.append((report, orderings))
                print("convention base=%s normalize_weights=%s:" % (base, wnorm))
                print(report.to_text())
                print("  scenario ordering strict: %s" % orderings["scenario_ordering_strict"])
                print("  monotone in pump order:   %s" % orderings["monotone_in_pump_order"])
                print()
        payload = {"conventions": [dict(r.to_dict(), orderings=o) for r, o in blocks]}
        path = _artifact_path(config, _default_name(config, "json"))
        _write_artifact(path, _dump_json(payload))
        print("wrote %s" % path)
        return 0

    conv = Convention(log_base=config.log_base,
                      normalize_weights=config.normalize_weights,
                      ring_radius=config.ring_radius,
                      ring_width=config.ring_width,
                      normalize_projections=config.normalize_projections)
    report = entropy_table(quad=quad, convention=conv)
    fmt = config.format or "json"
    if fmt == "csv":
        text = _entropy_csv(report)
    else:
        text = _dump_json(report.to_dict())
    path = _artifact_path(config, _default_name(config, fmt))
    _write_artifact(path, text)
    print(report.to_text())
    print("wrote %s" % path)
    return 0


def _cmd_validate_pov(config: RunConfig, quad: QuadratureConfig) -> int:
    k = POV_CHECK_PARAMS["k"]
    f = POV_CHECK_PARAMS["f"]
    k_r = POV_CHECK_PARAMS["k_r"]
    w = POV_CHECK_PARAMS["w"]
    r0, w0 = lens_output_ring(k_r, w, f, k)
    const = k * w * w / (2.0 * f)  # envelope-waist prefactor of the lens output

    # ring amplitude is below 1e-9 of peak past r = 2.5 at this geometry
    radii = np.linspace(0.0, 2.5, 51)
    weights = radii * np.gradient(radii)

    results = []
    all_pass = True
    for l in POV_CHECK_ORDERS:
        bg = ModeSpec(BESSEL_GAUSS, l, k_r=k_r, w0=w)
        transformed = np.array([fourier_lens_transform(
            lambda rho, theta: bg_mode(bg, rho, theta), f, k, r, 0.0, quad)
            for r in radii])
        closed = const * pov_radial(l, r0, w0, radii)
        err = math.sqrt(float(np.sum(weights * (np.abs(transformed) - closed) ** 2))
                        / float(np.sum(weights * closed ** 2)))
        # global phase read off at the amplitude peak (away from the axis)
        idx = 1 + int(np.argmax(closed[1:]))
        ref = const * pov_mode(ModeSpec(POV, l, r0=r0, w0=w0), radii[idx], 0.0,
                               normalized=False)
        phase = transformed[idx] / ref
        ok = err < POV_CHECK_TOLERANCE
        all_pass = all_pass and ok
        results.append({"l": l, "rel_l2_error": err,
                        "global_phase_over_pi": math.atan2(phase.imag, phase.real) / math.pi,
                        "pass": bool(ok)})
        print("l=%d  rel_l2_error=%s  global_phase_over_pi=%s  %s"
              % (l, _fmt(err), _fmt(results[-1]["global_phase_over_pi"]),
                 "PASS" if ok else "FAIL"))

    payload = dict(POV_CHECK_PARAMS)
    payload.update({"ring_radius": r0, "ring_width": w0,
                    "tolerance": POV_CHECK_TOLERANCE, "results": results})
    path = _artifact_path(config, _default_name(config, "json"))
    _write_artifact(path, _dump_json(payload))
    print("wrote %s" % path)
    if not all_pass:
        print("construction check failed: transform disagrees with the closed form",
              file=sys.stderr)
        return 3
    return 0


def _cmd_calibrate(config: RunConfig, quad: QuadratureConfig) -> int:
    report = calibrate(quad=quad)
    path = _artifact_path(config, _default_name(config, "json"))
    _write_artifact(path, _dump_json(report.to_dict()))
    print(report.to_text())
    print("wrote %s" % path)
    return 0


_HANDLERS = {
    "spectrum": _cmd_spectrum,
    "entropy-table": _cmd_entropy_table,
    "validate-pov": _cmd_validate_pov,
    "calibrate": _cmd_calibrate,
}


# ---------------------------------------------------------------- parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spdc-oam",
        description="Pair OAM spectra and entanglement entropy for structured pumps.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="FILE",
                        help="JSON config file; explicit flags win on conflict")
    common.add_argument("--output", metavar="FILE",
                        help="artifact file name (default derived from the command)")
    common.add_argument("--outdir", metavar="DIR",
                        help="output directory (default $%s or '.')" % OUTDIR_ENV)
    common.add_argument("--format", choices=("csv", "json"))
    quad = common.add_argument_group("quadrature overrides")
    quad.add_argument("--r-max", type=float, dest="r_max")
    quad.add_argument("--radial-nodes", type=int, dest="radial_nodes")
    quad.add_argument("--panels", type=int)
    quad.add_argument("--azimuthal-nodes", type=int, dest="azimuthal_nodes")
    quad.add_argument("--rel-tol", type=float, dest="rel_tol")

    geometry = argparse.ArgumentParser(add_help=False)
    geometry.add_argument("--ring-radius", type=float, dest="ring_radius")
    geometry.add_argument("--ring-width", type=float, dest="ring_width")
    geometry.add_argument("--normalize-projections", action=argparse.BooleanOptionalAction,
                          default=None, dest="normalize_projections")

    p = sub.add_parser("spectrum", parents=[common, geometry],
                       help="pair OAM probability grid for one scenario")
    p.add_argument("--pump", choices=(LG, POV), dest="pump_family")
    p.add_argument("--lp", type=int, dest="pump_l")
    p.add_argument("--p", type=int, dest="pump_p")
    p.add_argument("--project", choices=(LG, POV), dest="project_family")
    p.add_argument("--l-window", type=int, dest="l_window")
    p.add_argument("--query", nargs=2, type=int, metavar=("LS", "LI"),
                   help="print the probability of one pair and exit")

    p = sub.add_parser("entropy-table", parents=[common, geometry],
                       help="entanglement entropy per pump order and scenario")
    p.add_argument("--log-base", dest="log_base")
    p.add_argument("--normalize-weights", action=argparse.BooleanOptionalAction,
                   default=None, dest="normalize_weights")
    p.add_argument("--conventions", choices=("default", "all"))

    sub.add_parser("validate-pov", parents=[common],
                   help="check the lens transform against the closed-form ring mode")
    sub.add_parser("calibrate", parents=[common],
                   help="scan entropy conventions against the benchmark table")
    return parser


_CONFIG_FIELDS = tuple(f.name for f in fields(RunConfig) if f.name != "command")


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    merged: Dict[str, object] = {}
    if getattr(args, "config", None):
        merged.update(_load_config_file(args.config))
    merged["command"] = args.command  # the subcommand always wins
    for name in _CONFIG_FIELDS:
        value = getattr(args, name, None)
        if value is not None:
            merged[name] = value
    if isinstance(merged.get("query"), list):
        merged["query"] = tuple(merged["query"])
    return RunConfig.from_dict(merged)


def run(config: RunConfig) -> int:
    """Execute one parsed configuration; returns the process exit status."""
    try:
        try:
            quad = QuadratureConfig(r_max=config.r_max,
                                    radial_nodes=config.radial_nodes,
                                    panels=config.panels,
                                    azimuthal_nodes=config.azimuthal_nodes,
                                    rel_tol=config.rel_tol)
        except ValueError as exc:
            raise ConfigError(str(exc))
        return _HANDLERS[config.command](config, quad)
    except ConfigError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return 2
    except QuadratureError as exc:
        print("quadrature error: %s" % exc, file=sys.stderr)
        return 3
    except WindowTooSmallError as exc:
        print("window too small: %s" % exc, file=sys.stderr)
        return 4


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
    except ConfigError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
