"""Command-line interface.

Three subcommands:

* ``force``: force per unit area over a separation grid, CSV or JSON.
* ``check``: built-in cross-validation suites, one pass/fail line each.
* ``propagator``: dump propagator values at requested points as CSV.

Exit codes: 0 success; 1 malformed configuration, medium file or arguments;
2 medium unstable (or outside a boundary condition's validity regime);
3 rows emitted but not all clean (unconverged quadrature or pole sentinels);
4 a check suite failed.

Output is byte-deterministic for a fixed configuration and build: every
number is printed with 17 significant digits so values round-trip exactly.
The core works in natural units (hbar = c = 1); ``--scale`` multiplies
emitted forces by a constant for unit conversions.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from .checks import SUITES, run_suite
from .errors import (
    CasimirMediumError,
    InvalidRegimeError,
    MediumFileError,
    MediumInstabilityError,
    PoleError,
)
from .forces import BoundaryCondition, ForceQuery, force_field_bc, force_polarization_bc
from .medium import FieldKind, Medium, VACUUM, load_medium
from .propagators import (
    Axis,
    MomentumFrequencyPoint,
    cross_correlators,
    g0,
    g_omega,
    g_phiphi,
)
from .quadrature import QuadratureSpec

RELTOL_ENV = "CASIMIR_MEDIUM_RELTOL"

_FORCE_COLUMNS = (
    "H",
    "force_per_area",
    "error_estimate",
    "vacuum_ratio",
    "evaluations",
    "converged",
)
_PROPAGATOR_COLUMNS = ("axis", "kind", "k", "freq", "re", "im", "status")
_PROPAGATOR_KINDS = ("G0", "Gomega", "Gphiphi", "GphiP", "GphiM", "GPP", "GMM")
_CONFIG_KEYS = {
    "medium", "field", "bc", "hmin", "hmax", "points", "log",
    "rel_tol", "abs_tol", "format", "out", "eta", "scale",
}


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _resolve(flag, config: dict, key: str, fallback):
    if flag is not None:
        return flag
    if key in config:
        return config[key]
    return fallback


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as err:
        raise MediumFileError(f"{path}: {err.strerror or err}") from err
    except json.JSONDecodeError as err:
        raise MediumFileError(f"{path}:{err.lineno}:{err.colno}: {err.msg}") from err
    if not isinstance(cfg, dict):
        raise MediumFileError(f"{path}: config must be a JSON object")
    unknown = set(cfg) - _CONFIG_KEYS
    if unknown:
        raise MediumFileError(f"{path}: unknown config key {sorted(unknown)[0]!r}")
    return cfg


def _env_rel_tol() -> float | None:
    raw = os.environ.get(RELTOL_ENV)
    if raw is None:
        return None
    try:
        value = float(raw)
    except ValueError:
        raise MediumFileError(f"{RELTOL_ENV}={raw!r} is not a number") from None
    if not (value > 0.0 and math.isfinite(value)):
        raise MediumFileError(f"{RELTOL_ENV}={raw!r} must be positive")
    return value


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _separation_grid(hmin: float, hmax: float, points: int, log: bool) -> list[float]:
    if not (hmin > 0.0 and math.isfinite(hmin)):
        raise MediumFileError(f"hmin must be > 0, got {hmin!r}")
    if points < 1:
        raise MediumFileError(f"points must be >= 1, got {points!r}")
    if points == 1:
        return [hmin]
    if not (hmax >= hmin and math.isfinite(hmax)):
        raise MediumFileError(f"hmax must be >= hmin, got {hmax!r}")
    grid = np.geomspace(hmin, hmax, points) if log else np.linspace(hmin, hmax, points)
    return [float(h) for h in grid]


def _cmd_force(args: argparse.Namespace) -> int:
    config = _load_config(args.config)
    medium_path = _resolve(args.medium, config, "medium", None)
    medium = load_medium(medium_path) if medium_path else VACUUM
    field = FieldKind(_resolve(args.field, config, "field", "scalar"))
    bc = BoundaryCondition(_resolve(args.bc, config, "bc", "field"))
    hmin = float(_resolve(args.hmin, config, "hmin", 1.0))
    hmax = float(_resolve(args.hmax, config, "hmax", hmin))
    points = int(_resolve(args.points, config, "points", 1))
    log = bool(_resolve(args.log, config, "log", False))
    rel_tol = float(_resolve(args.rel_tol, config, "rel_tol", _env_rel_tol() or 1e-9))
    abs_tol = float(_resolve(args.abs_tol, config, "abs_tol", 1e-12))
    fmt = _resolve(args.format, config, "format", "csv")
    out = _resolve(args.out, config, "out", None)
    scale = float(_resolve(args.scale, config, "scale", 1.0))
    if fmt not in ("csv", "json"):
        raise MediumFileError(f"format must be csv or json, got {fmt!r}")

    spec = QuadratureSpec(rel_tol=rel_tol, abs_tol=abs_tol)
    grid = _separation_grid(hmin, hmax, points, log)
    compute = force_field_bc if bc is BoundaryCondition.FIELD else force_polarization_bc

    rows = []
    for h in grid:
        query = ForceQuery(medium=medium, kind=field, bc=bc, separation=h, spec=spec)
        res = compute(query)
        rows.append(
            {
                "H": h,
                "force_per_area": scale * res.force_per_area,
                "error_estimate": scale * res.error_estimate,
                "vacuum_ratio": res.vacuum_ratio,
                "evaluations": res.evaluations,
                "converged": res.converged,
            }
        )

    if fmt == "csv":
        lines = [",".join(_FORCE_COLUMNS)]
        for row in rows:
            lines.append(
                ",".join(
                    (
                        _fmt(row["H"]),
                        _fmt(row["force_per_area"]),
                        _fmt(row["error_estimate"]),
                        _fmt(row["vacuum_ratio"]),
                        str(row["evaluations"]),
                        "true" if row["converged"] else "false",
                    )
                )
            )
        _write_out("\n".join(lines) + "\n", out)
    else:
        _write_out(json.dumps({"rows": rows}, indent=2) + "\n", out)
    return 0 if all(row["converged"] for row in rows) else 3


def _cmd_check(args: argparse.Namespace) -> int:
    names = args.suite or sorted(SUITES)
    for name in names:
        if name not in SUITES:
            sys.stderr.write(
                f"unknown check suite {name!r}; available: {', '.join(sorted(SUITES))}\n"
            )
            return 1
    rel_tol = args.rel_tol if args.rel_tol is not None else (_env_rel_tol() or 1e-9)
    spec = QuadratureSpec(rel_tol=rel_tol)
    all_passed = True
    for name in names:
        for result in run_suite(name, spec):
            sys.stdout.write(result.format_line() + "\n")
            all_passed = all_passed and result.passed
    return 0 if all_passed else 4


def _parse_point(raw: str) -> tuple[float, float]:
    parts = raw.split(",")
    if len(parts) != 2:
        raise MediumFileError(f"--point expects 'k,freq', got {raw!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise MediumFileError(f"--point expects two numbers, got {raw!r}") from None


def _propagator_value(
    kind: str,
    medium: Medium,
    field: FieldKind,
    point: MomentumFrequencyPoint,
    omega_res: float,
    eta: float,
) -> complex:
    if kind == "G0":
        return g0(point.k, point.frequency, eta)
    if kind == "Gomega":
        return g_omega(omega_res, point.frequency, eta)
    if kind == "Gphiphi":
        return g_phiphi(medium, field, point, eta).value
    correlators = cross_correlators(medium, point, eta)
    return {
        "GphiP": correlators.g_phi_p,
        "GphiM": correlators.g_phi_m,
        "GPP": correlators.g_pp,
        "GMM": correlators.g_mm,
    }[kind]


def _cmd_propagator(args: argparse.Namespace) -> int:
    medium = load_medium(args.medium) if args.medium else VACUUM
    field = FieldKind(args.field)
    axis = Axis(args.axis)
    kinds = [k.strip() for k in args.kinds.split(",") if k.strip()]
    for kind in kinds:
        if kind not in _PROPAGATOR_KINDS:
            raise MediumFileError(
                f"unknown propagator kind {kind!r}; "
                f"available: {', '.join(_PROPAGATOR_KINDS)}"
            )
        if axis is Axis.EUCLIDEAN and kind != "Gphiphi":
            raise MediumFileError(
                f"kind {kind!r} is defined on the real axis only"
            )
    if not args.point:
        raise MediumFileError("at least one --point k,freq is required")

    lines = [",".join(_PROPAGATOR_COLUMNS)]
    clean = True
    for raw in args.point:
        k, freq = _parse_point(raw)
        point = MomentumFrequencyPoint(k=k, frequency=freq, axis=axis)
        for kind in kinds:
            try:
                value = _propagator_value(
                    kind, medium, field, point, args.omega_res, args.eta
                )
                re, im, status = _fmt(value.real), _fmt(value.imag), "ok"
            except PoleError:
                re, im, status = "", "", "pole"
                clean = False
            except MediumInstabilityError:
                raise
            except CasimirMediumError:
                re, im, status = "", "", "error"
                clean = False
            lines.append(
                ",".join((axis.value, kind, _fmt(k), _fmt(freq), re, im, status))
            )
    _write_out("\n".join(lines) + "\n", args.out)
    return 0 if clean else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir-medium",
        description="Casimir force per unit area across a dispersive medium "
        "(natural units, attractive forces negative).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    force = sub.add_parser("force", help="force over a separation grid")
    force.add_argument("--medium", help="path to a medium JSON file (default vacuum)")
    force.add_argument("--field", choices=("scalar", "em"))
    force.add_argument("--bc", choices=("field", "polarization"))
    force.add_argument("--hmin", type=float, help="smallest separation (default 1)")
    force.add_argument("--hmax", type=float, help="largest separation")
    force.add_argument("--points", type=int, help="grid size (default 1)")
    force.add_argument(
        "--log", action=argparse.BooleanOptionalAction, help="log-spaced grid"
    )
    force.add_argument("--rel-tol", dest="rel_tol", type=float)
    force.add_argument("--abs-tol", dest="abs_tol", type=float)
    force.add_argument("--format", choices=("csv", "json"))
    force.add_argument("--out", help="write output to this file instead of stdout")
    force.add_argument("--eta", type=float, help="accepted for symmetry; "
                       "the Euclidean force route needs no pole regulator")
    force.add_argument("--scale", type=float, help="multiply emitted forces")
    force.add_argument("--config", help="JSON file with these options; flags win")
    force.set_defaults(handler=_cmd_force)

    check = sub.add_parser("check", help="run built-in validation suites")
    check.add_argument(
        "suite", nargs="*", help=f"suites to run (default all: {', '.join(sorted(SUITES))})"
    )
    check.add_argument("--rel-tol", dest="rel_tol", type=float)
    check.set_defaults(handler=_cmd_check)

    prop = sub.add_parser("propagator", help="dump propagator values as CSV")
    prop.add_argument("--medium", help="path to a medium JSON file (default vacuum)")
    prop.add_argument("--axis", choices=("real", "euclidean"), default="real")
    prop.add_argument("--field", choices=("scalar", "em"), default="em")
    prop.add_argument(
        "--kinds",
        default="Gphiphi",
        help=f"comma-separated subset of {','.join(_PROPAGATOR_KINDS)}",
    )
    prop.add_argument(
        "--point",
        action="append",
        help="momentum,frequency pair; repeat for more points",
    )
    prop.add_argument(
        "--omega-res",
        dest="omega_res",
        type=float,
        default=1.0,
        help="reservoir frequency for Gomega rows (momentum column is ignored)",
    )
    prop.add_argument("--eta", type=float, default=1e-8, help="retarded pole shift")
    prop.add_argument("--out", help="write output to this file instead of stdout")
    prop.set_defaults(handler=_cmd_propagator)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (MediumInstabilityError, InvalidRegimeError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
    except MediumFileError as err:
        sys.stderr.write(f"error: {err}\n")
        return 1
    except CasimirMediumError as err:
        sys.stderr.write(f"error: {err}\n")
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
