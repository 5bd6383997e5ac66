"""Command-line interface.

Subcommands::

    slabshift shift   --config cfg.txt            single-point energy shift
    slabshift wfun    --zeta 8 --lam 1 --n 2      dimensionless W functions
    slabshift sweep   --axis zeta --lo .1 --hi 10 --points 50 ...
    slabshift modes   --k-par 3 --n 2 --thickness 1
    slabshift asympt  --config cfg.txt            full vs asymptotic values

Exit codes: 0 ok, 2 input error, 3 quadrature non-convergence, 4 partial
sweep failure.  ``SLABSHIFT_JOBS`` sets the default worker count.

Config files are flat ``key = value`` text; ``#`` starts a comment::

    units = natural            # or eV-nm
    slab.n = 2.0
    slab.L = 1.0               # nm in eV-nm mode
    geometry.Z = 8.0
    atom.transitions[0].E_ji = 1.0        # eV in eV-nm mode
    atom.transitions[0].mu_par_sq = 2.0
    atom.transitions[0].mu_perp_sq = 1.0
    quad.rel_tol = 1e-8
    quad.abs_tol = 1e-14

Flags override file values.  In ``eV-nm`` mode energies are converted to
inverse nanometres on input (lengths stay in nm, dipole squares are nm^2)
and shift values are reported both in 1/nm and in eV.

CSV output is deterministic: 17-significant-digit scientific notation,
comma separated, with a ``#``-prefixed manifest block; only the manifest
timestamp varies between identical runs.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import math
import os
import re
import sys
from dataclasses import dataclass
from datetime import datetime, timezone

from . import __version__
from .asymptotics import (buhmann_U, classify_regime, halfspace_S,
                          nonretarded_shift, nonretarded_thin_shift,
                          retarded_thin_shift)
from .core import (AtomSpec, ReducedParams, Slab, Transition, reduce,
                   static_polarizability)
from .errors import ConvergenceError
from .quadrature import QuadratureSpec
from .reflection import Polarization
from .modes import find_trapped_modes
from .shift import W_SCALE, energy_shift, w_pair
from .units import ev_to_inv_nm, inv_nm_to_ev

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONVERGENCE = 3
EXIT_PARTIAL = 4


class ConfigError(Exception):
    """Invalid or incomplete run configuration."""


def _fmt(x: float) -> str:
    return f"{x:.16e}"


# ---------------------------------------------------------------------------
# config handling

_KEY_RE = re.compile(r"^[A-Za-z_.\[\]0-9]+$")


def parse_config_text(text: str) -> dict[str, str]:
    """Parse flat 'key = value' lines into a dict of strings."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not _KEY_RE.match(key):
            raise ConfigError(f"line {lineno}: malformed key {key!r}")
        out[key] = value
    return out


def _get_float(cfg: dict[str, str], key: str) -> float:
    if key not in cfg:
        raise ConfigError(f"missing required field: {key}")
    try:
        return float(cfg[key])
    except ValueError:
        raise ConfigError(f"field {key} is not a number: {cfg[key]!r}") from None


@dataclass(frozen=True)
class RunInput:
    """A fully validated single-point problem in natural units."""

    atom: AtomSpec
    slab: Slab
    Z: float
    quad: QuadratureSpec
    units: str  # "natural" | "eV-nm"


def _transition_indices(cfg: dict[str, str]) -> list[int]:
    idx = set()
    pat = re.compile(r"^atom\.transitions\[(\d+)\]\.")
    for key in cfg:
        m = pat.match(key)
        if m:
            idx.add(int(m.group(1)))
    return sorted(idx)


def build_run_input(cfg: dict[str, str]) -> RunInput:
    units = cfg.get("units", "natural")
    if units not in ("natural", "eV-nm"):
        raise ConfigError(f"units must be 'natural' or 'eV-nm', got {units!r}")
    n = _get_float(cfg, "slab.n")
    L_raw = cfg.get("slab.L")
    if L_raw is None:
        raise ConfigError("missing required field: slab.L")
    L = math.inf if L_raw.strip() == "inf" else _get_float(cfg, "slab.L")
    Z = _get_float(cfg, "geometry.Z")
    indices = _transition_indices(cfg)
    if not indices:
        raise ConfigError("missing required field: atom.transitions[0].E_ji")
    if indices != list(range(len(indices))):
        raise ConfigError("atom.transitions indices must be contiguous from 0")
    transitions = []
    for i in indices:
        base = f"atom.transitions[{i}]"
        E = _get_float(cfg, f"{base}.E_ji")
        mu_par = _get_float(cfg, f"{base}.mu_par_sq")
        mu_perp = _get_float(cfg, f"{base}.mu_perp_sq")
        if units == "eV-nm":
            E = ev_to_inv_nm(E)
        try:
            transitions.append(Transition(E_ji=E, mu_par_sq=mu_par,
                                          mu_perp_sq=mu_perp))
        except ValueError as exc:
            raise ConfigError(f"{base}: {exc}") from None
    quad = QuadratureSpec(
        rel_tol=float(cfg.get("quad.rel_tol", QuadratureSpec.rel_tol)),
        abs_tol=float(cfg.get("quad.abs_tol", QuadratureSpec.abs_tol)),
        s_cutoff_decades=float(cfg.get("quad.s_cutoff_decades",
                                       QuadratureSpec.s_cutoff_decades)),
        max_subdivisions=int(cfg.get("quad.max_subdivisions",
                                     QuadratureSpec.max_subdivisions)),
    )
    try:
        slab = Slab(n=n, L=L)
        if not Z > 0.0:
            raise ValueError(f"geometry.Z must be positive, got {Z}")
        atom = AtomSpec(transitions)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return RunInput(atom=atom, slab=slab, Z=Z, quad=quad, units=units)


def _config_from_args(args: argparse.Namespace) -> dict[str, str]:
    cfg: dict[str, str] = {}
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                cfg = parse_config_text(fh.read())
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from None
    # inline single-transition flags override the file
    overrides = {
        "slab.n": args.n,
        "slab.L": args.thickness,
        "geometry.Z": args.distance,
        "atom.transitions[0].E_ji": args.e_ji,
        "atom.transitions[0].mu_par_sq": args.mu_par_sq,
        "atom.transitions[0].mu_perp_sq": args.mu_perp_sq,
    }
    for key, val in overrides.items():
        if val is not None:
            cfg[key] = str(val)
    if args.rel_tol is not None:
        cfg["quad.rel_tol"] = str(args.rel_tol)
    if args.units is not None:
        cfg["units"] = args.units
    return cfg


# ---------------------------------------------------------------------------
# output plumbing

def _manifest_lines(command: str, inputs: dict[str, object],
                    quad: QuadratureSpec) -> list[str]:
    lines = [f"# slabshift {command}",
             f"# version = {__version__}",
             f"# timestamp = {datetime.now(timezone.utc).isoformat()}"]
    for key in sorted(inputs):
        lines.append(f"# {key} = {inputs[key]}")
    lines.append(f"# quad.rel_tol = {quad.rel_tol:g}")
    lines.append(f"# quad.abs_tol = {quad.abs_tol:g}")
    lines.append(f"# quad.s_cutoff_decades = {quad.s_cutoff_decades:g}")
    lines.append(f"# quad.max_subdivisions = {quad.max_subdivisions}")
    return lines


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_csv(manifest: list[str], header: list[str],
                 rows: list[dict[str, object]]) -> str:
    lines = list(manifest)
    lines.append(",".join(header))
    for row in rows:
        cells = []
        for col in header:
            val = row[col]
            cells.append(_fmt(val) if isinstance(val, float) else str(val))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _json_safe(rows: list[dict[str, object]]) -> list[dict[str, object]]:
    safe = []
    for row in rows:
        safe.append({k: (None if isinstance(v, float) and math.isnan(v) else v)
                     for k, v in row.items()})
    return safe


def _rows_to_json(command: str, inputs: dict[str, object],
                  quad: QuadratureSpec, rows: list[dict[str, object]]) -> str:
    rows = _json_safe(rows)
    doc = {
        "command": command,
        "version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "inputs": {k: str(v) for k, v in sorted(inputs.items())},
        "quad": {"rel_tol": quad.rel_tol, "abs_tol": quad.abs_tol,
                 "s_cutoff_decades": quad.s_cutoff_decades,
                 "max_subdivisions": quad.max_subdivisions},
        "rows": rows,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# subcommands

def cmd_shift(args: argparse.Namespace) -> int:
    run = build_run_input(_config_from_args(args))
    shift = energy_shift(run.atom, run.slab, run.Z, run.quad)
    rows = []
    for i, tr in enumerate(run.atom.transitions):
        p = reduce(run.slab, tr, run.Z)
        wp = w_pair(p, run.quad)
        regime = classify_regime(p)
        rows.append({
            "transition": i,
            "E_ji": tr.E_ji,
            "zeta": p.zeta,
            "lam": p.lam,
            "w_par": wp.w_par,
            "w_z": wp.w_z,
            "err_est": wp.err_est,
            "contribution": shift.per_transition[i],
            "regime": regime.regime,
            "two_zeta": regime.two_zeta,
        })

    if args.format == "json":
        doc_rows = rows + [{"total_shift": shift.value}]
        _emit(_rows_to_json("shift", _input_echo(run), run.quad, doc_rows),
              args.output)
        return EXIT_OK

    out = []
    out.append(f"energy shift: {_fmt(shift.value)}"
               + (" (1/nm)" if run.units == "eV-nm" else " (natural units)"))
    if run.units == "eV-nm":
        out.append(f"energy shift: {_fmt(inv_nm_to_ev(shift.value))} (eV)")
    for row in rows:
        out.append(
            f"transition {row['transition']}: E_ji={_fmt(row['E_ji'])} "
            f"zeta={_fmt(row['zeta'])} lam={_fmt(row['lam'])}")
        out.append(
            f"  W_par={_fmt(row['w_par'])} W_z={_fmt(row['w_z'])} "
            f"err_est={_fmt(row['err_est'])}")
        out.append(
            f"  contribution={_fmt(row['contribution'])} "
            f"regime={row['regime']} (2*zeta={_fmt(row['two_zeta'])})")
    _emit("\n".join(out) + "\n", args.output)
    return EXIT_OK


def _input_echo(run: RunInput) -> dict[str, object]:
    echo: dict[str, object] = {
        "slab.n": run.slab.n,
        "slab.L": run.slab.L,
        "geometry.Z": run.Z,
        "units": run.units,
    }
    for i, tr in enumerate(run.atom.transitions):
        echo[f"atom.transitions[{i}].E_ji"] = tr.E_ji
        echo[f"atom.transitions[{i}].mu_par_sq"] = tr.mu_par_sq
        echo[f"atom.transitions[{i}].mu_perp_sq"] = tr.mu_perp_sq
    return echo


def cmd_wfun(args: argparse.Namespace) -> int:
    lam = math.inf if args.lam == "inf" else float(args.lam)
    quad = QuadratureSpec(rel_tol=args.rel_tol) if args.rel_tol else QuadratureSpec()
    try:
        p = ReducedParams(zeta=args.zeta, lam=lam, n=args.n)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    wp = w_pair(p, quad)
    row = {"zeta": p.zeta, "lam": p.lam, "n": p.n,
           "w_par": wp.w_par, "w_z": wp.w_z, "err_est": wp.err_est}
    if args.format == "json":
        _emit(_rows_to_json("wfun", {}, quad, [row]), args.output)
    else:
        _emit(f"W_par={_fmt(wp.w_par)} W_z={_fmt(wp.w_z)} "
              f"err_est={_fmt(wp.err_est)}\n", args.output)
    return EXIT_OK


_SWEEP_AXES = ("zeta", "lambda", "n")


def _sweep_grid(lo: float, hi: float, points: int, scale: str) -> list[float]:
    if points < 2:
        raise ConfigError(f"points must be >= 2, got {points}")
    if not lo < hi:
        raise ConfigError(f"need lo < hi, got [{lo}, {hi}]")
    if scale == "linear":
        step = (hi - lo) / (points - 1)
        return [lo + i * step for i in range(points)]
    if scale == "log":
        if lo <= 0.0:
            raise ConfigError("log scale needs lo > 0")
        ratio = (hi / lo) ** (1.0 / (points - 1))
        return [lo * ratio ** i for i in range(points)]
    raise ConfigError(f"scale must be 'linear' or 'log', got {scale!r}")


def _sweep_point(task: tuple[float, str, float, float, float, tuple]) -> dict:
    """Evaluate one sweep grid point (top level so worker pools can pickle it)."""
    value, axis, zeta, lam, n, quad_tuple = task
    quad = QuadratureSpec(*quad_tuple)
    if axis == "zeta":
        zeta = value
    elif axis == "lambda":
        lam = value
    else:
        n = value
    row: dict[str, object] = {"value": value}
    try:
        p = ReducedParams(zeta=zeta, lam=lam, n=n)
        wp = w_pair(p, quad)
        hs_par, hs_perp = halfspace_S(zeta, n, quad)
        scale = W_SCALE * zeta ** 4
        row.update(w_par=wp.w_par, w_z=wp.w_z,
                   w_par_halfspace=scale * hs_par,
                   w_z_halfspace=scale * hs_perp,
                   err_est=wp.err_est, status="ok")
    except Exception as exc:  # per-point failures stay in-row
        row.update(w_par=math.nan, w_z=math.nan,
                   w_par_halfspace=math.nan, w_z_halfspace=math.nan,
                   err_est=math.nan,
                   status="failed: " + str(exc).replace(",", ";"))
    return row


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.axis not in _SWEEP_AXES:
        raise ConfigError(f"axis must be one of {_SWEEP_AXES}, got {args.axis!r}")
    fixed = {"zeta": args.zeta, "lambda": args.lam, "n": args.n}
    if fixed[args.axis] is not None:
        raise ConfigError(f"--{'lam' if args.axis == 'lambda' else args.axis} "
                          "must not be given when it is the sweep axis")
    for name in _SWEEP_AXES:
        if name != args.axis and fixed[name] is None:
            flag = "lam" if name == "lambda" else name
            raise ConfigError(f"missing fixed value: --{flag}")
    zeta = fixed["zeta"] if fixed["zeta"] is not None else 1.0
    lam_raw = fixed["lambda"]
    lam = (math.inf if lam_raw == "inf" else float(lam_raw)) \
        if lam_raw is not None else 1.0
    n = float(fixed["n"]) if fixed["n"] is not None else 1.0

    grid = _sweep_grid(args.lo, args.hi, args.points, args.scale)
    quad = QuadratureSpec(rel_tol=args.rel_tol) if args.rel_tol else QuadratureSpec()
    quad_tuple = (quad.rel_tol, quad.abs_tol, quad.s_cutoff_decades,
                  quad.max_subdivisions)
    tasks = [(v, args.axis, float(zeta), lam, n, quad_tuple) for v in grid]

    jobs = args.jobs
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_point, tasks))
    else:
        rows = [_sweep_point(t) for t in tasks]

    inputs: dict[str, object] = {
        "axis": args.axis, "lo": args.lo, "hi": args.hi,
        "points": args.points, "scale": args.scale,
    }
    for name in _SWEEP_AXES:
        if name != args.axis:
            inputs[f"fixed.{name}"] = {"zeta": zeta, "lambda": lam, "n": n}[name]
    header = ["value", "w_par", "w_z", "w_par_halfspace", "w_z_halfspace",
              "err_est", "status"]
    if args.format == "json":
        _emit(_rows_to_json("sweep", inputs, quad, rows), args.output)
    else:
        _emit(_rows_to_csv(_manifest_lines("sweep", inputs, quad), header, rows),
              args.output)
    failed = any(row["status"] != "ok" for row in rows)
    return EXIT_PARTIAL if failed else EXIT_OK


def cmd_modes(args: argparse.Namespace) -> int:
    if args.k_par is None or not args.k_par > 0.0:
        raise ConfigError(f"k_par must be positive, got {args.k_par}")
    try:
        slab = Slab(n=args.n, L=args.thickness)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    rows = []
    for pol in (Polarization.TE, Polarization.TM):
        for parity in ("S", "A"):
            for mode in find_trapped_modes(pol, parity, args.k_par, slab):
                rows.append({"pol": pol.value, "parity": parity,
                             "k_zd": mode.k_zd, "kappa": mode.kappa,
                             "residual": mode.residual})
    inputs = {"k_par": args.k_par, "slab.n": args.n, "slab.L": args.thickness}
    quad = QuadratureSpec()
    header = ["pol", "parity", "k_zd", "kappa", "residual"]
    if args.format == "json":
        _emit(_rows_to_json("modes", inputs, quad, rows), args.output)
    else:
        _emit(_rows_to_csv(_manifest_lines("modes", inputs, quad), header, rows),
              args.output)
    return EXIT_OK


def cmd_asympt(args: argparse.Namespace) -> int:
    run = build_run_input(_config_from_args(args))
    full = energy_shift(run.atom, run.slab, run.Z, run.quad)

    def rel_dev(approx: float) -> float:
        if full.value == 0.0:
            return math.nan
        return abs(approx - full.value) / abs(full.value)

    lines = [f"full integral: {_fmt(full.value)}"]
    comparisons: list[tuple[str, float]] = []
    comparisons.append(("retarded thin slab",
                        retarded_thin_shift(run.atom, run.slab, run.Z).value))
    comparisons.append(("non-retarded (image series)",
                        nonretarded_shift(run.atom, run.slab, run.Z).value))
    comparisons.append(("non-retarded thin slab",
                        nonretarded_thin_shift(run.atom, run.slab, run.Z).value))
    try:
        alpha0 = static_polarizability(run.atom)
        comparisons.append(("thin-plate polarizability form",
                            buhmann_U(alpha0, run.slab.n, run.slab.L, run.Z)))
    except ValueError:
        lines.append("thin-plate polarizability form: skipped "
                     "(anisotropic atom)")
    for label, value in comparisons:
        lines.append(f"{label}: {_fmt(value)} "
                     f"rel_deviation={_fmt(rel_dev(value))}")
    for i, tr in enumerate(run.atom.transitions):
        regime = classify_regime(reduce(run.slab, tr, run.Z))
        lines.append(
            f"transition {i}: regime={regime.regime} "
            f"2*zeta={_fmt(regime.two_zeta)} L/Z={_fmt(regime.lambda_over_zeta)}"
            + (" (no validity claim)" if regime.regime == "intermediate" else ""))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="path to a key=value config file")
    parser.add_argument("--output", help="write the report here instead of stdout")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--jobs", type=int,
                        default=int(os.environ.get("SLABSHIFT_JOBS", "1")),
                        help="worker processes for sweeps "
                             "(default: SLABSHIFT_JOBS or 1)")
    parser.add_argument("--rel-tol", type=float, default=None,
                        help="quadrature relative tolerance override")
    parser.add_argument("--units", choices=("natural", "eV-nm"), default=None)


def _add_problem_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=float, default=None, help="refractive index")
    parser.add_argument("--thickness", type=float, default=None,
                        help="slab thickness L")
    parser.add_argument("--distance", type=float, default=None,
                        help="atom-surface distance Z")
    parser.add_argument("--e-ji", type=float, default=None,
                        help="transition energy (single-transition shortcut)")
    parser.add_argument("--mu-par-sq", type=float, default=None)
    parser.add_argument("--mu-perp-sq", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slabshift",
        description="Casimir-Polder shift of a ground-state atom near a "
                    "dielectric slab")
    sub = parser.add_subparsers(dest="command", required=True)

    p_shift = sub.add_parser("shift", help="single-point energy shift")
    _add_common(p_shift)
    _add_problem_flags(p_shift)
    p_shift.set_defaults(func=cmd_shift)

    p_wfun = sub.add_parser("wfun", help="dimensionless W functions at one point")
    _add_common(p_wfun)
    p_wfun.add_argument("--zeta", type=float, required=True)
    p_wfun.add_argument("--lam", required=True,
                        help="L*E_ji, or 'inf' for the half-space")
    p_wfun.add_argument("--n", type=float, required=True)
    p_wfun.set_defaults(func=cmd_wfun)

    p_sweep = sub.add_parser("sweep", help="tabulate W over a parameter grid")
    _add_common(p_sweep)
    p_sweep.add_argument("--axis", required=True, choices=_SWEEP_AXES)
    p_sweep.add_argument("--lo", type=float, required=True)
    p_sweep.add_argument("--hi", type=float, required=True)
    p_sweep.add_argument("--points", type=int, required=True)
    p_sweep.add_argument("--scale", choices=("linear", "log"), default="linear")
    p_sweep.add_argument("--zeta", type=float, default=None,
                         help="fixed zeta (when not the axis)")
    p_sweep.add_argument("--lam", default=None,
                         help="fixed L*E_ji, or 'inf' (when not the axis)")
    p_sweep.add_argument("--n", type=float, default=None,
                         help="fixed refractive index (when not the axis)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_modes = sub.add_parser("modes", help="trapped-mode table at fixed k_par")
    _add_common(p_modes)
    p_modes.add_argument("--k-par", type=float, required=True)
    p_modes.add_argument("--n", type=float, required=True)
    p_modes.add_argument("--thickness", type=float, required=True)
    p_modes.set_defaults(func=cmd_modes)

    p_asympt = sub.add_parser("asympt",
                              help="full integral against every asymptotic form")
    _add_common(p_asympt)
    _add_problem_flags(p_asympt)
    p_asympt.set_defaults(func=cmd_asympt)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"slabshift: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConvergenceError as exc:
        print(f"slabshift: quadrature did not converge: {exc}", file=sys.stderr)
        if exc.estimate is not None:
            print(f"slabshift: best estimate {_fmt(exc.estimate)} "
                  f"(error bound {_fmt(exc.err_est or math.nan)})",
                  file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
