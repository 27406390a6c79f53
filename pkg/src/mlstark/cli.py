"""Command-line front end.

Subcommands: ``levels``, ``stark``, ``scan``, ``verify``, ``report``.
Defaults reproduce the headline estimate scenario (eta = 1, minimum length
2.86e-17 m, field 1e7 V/m).  Exit codes: 0 success, 1 verification failure,
2 invalid input or quadrature non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, replace

from . import ml_corrections, oracle, stark, units
from .hydrogen import QuantumNumbers, energy_level
from .matrices import diagonalize
from .units import (DeformationParams, PhenomenologyParams, Quantity,
                    from_phenomenology)

DEFAULT_FIELD_V_PER_M = 1e7
DEFAULT_DELTA_X_MIN_M = 2.86e-17
DEFAULT_ETA = 1.0

LAMB_SHIFT_1S_J = 7.024e-29       # experimental-minus-theoretical budget, 1s
LAMB_SHIFT_2S_2P_J = 7.951e-30    # same budget for the 2s-2p splitting

_UNITS = ("J", "eV", "hartree")
_FORMATS = ("table", "csv", "json")
_SCAN_PARAMS = ("eta", "delta_x", "field")


class ConfigError(ValueError):
    def __init__(self, field_name: str, message: str):
        super().__init__(f"invalid {field_name}: {message}")
        self.field_name = field_name


@dataclass(frozen=True)
class ScanSpec:
    parameter: str
    start: float
    stop: float
    steps: int


@dataclass(frozen=True)
class RunConfig:
    field_v_per_m: float = DEFAULT_FIELD_V_PER_M
    delta_x_min_m: float = DEFAULT_DELTA_X_MIN_M
    eta: float = DEFAULT_ETA
    unit_out: str = "J"
    format: str = "table"
    scan: ScanSpec | None = None

    def validate(self) -> "RunConfig":
        if self.field_v_per_m < 0:
            raise ConfigError("field", "field strength must be nonnegative")
        if self.delta_x_min_m < 0:
            raise ConfigError("delta-x", "minimum length must be nonnegative")
        if not (1.0 / 3.0 - 1e-12 <= self.eta <= 1.0 + 1e-12):
            raise ConfigError("eta", f"must lie in [1/3, 1], got {self.eta}")
        if self.unit_out not in _UNITS:
            raise ConfigError("unit", f"must be one of {_UNITS}")
        if self.format not in _FORMATS:
            raise ConfigError("format", f"must be one of {_FORMATS}")
        if self.scan is not None:
            if self.scan.parameter not in _SCAN_PARAMS:
                raise ConfigError("scan-param", f"must be one of {_SCAN_PARAMS}")
            if self.scan.steps < 2:
                raise ConfigError("steps", "a scan needs at least 2 steps")
            if self.scan.start < 0 or self.scan.stop < 0:
                raise ConfigError("start/stop", "scan range must be nonnegative")
        return self

    def phenomenology(self) -> PhenomenologyParams:
        return PhenomenologyParams(self.delta_x_min_m, self.eta)

    def deformation(self) -> DeformationParams:
        return from_phenomenology(self.phenomenology())


@dataclass(frozen=True)
class ReportRow:
    label: str
    value: float
    unit: str
    kind: str          # shift | bound | correction | reference-constant
    provenance: str

    def __post_init__(self):
        # builtin float (repr stability in machine formats), -0.0 normalized
        object.__setattr__(self, "value", float(self.value) + 0.0)


def _energy_row(label: str, q: Quantity, kind: str, provenance: str,
                unit_out: str) -> ReportRow:
    return ReportRow(label, units.energy_in(q, unit_out), unit_out, kind, provenance)


def _plain_row(label: str, value: float, unit: str, kind: str, provenance: str) -> ReportRow:
    return ReportRow(label, value, unit, kind, provenance)


def levels_rows(config: RunConfig) -> list[ReportRow]:
    """Unperturbed levels E_n (n <= 3) and the minimum-length shifts."""
    u = config.unit_out
    d = config.deformation()
    rows = [_energy_row(f"E_{n}", energy_level(n), "reference-constant",
                        "hydrogen.level", u) for n in (1, 2, 3)]
    limit_branch = d.b_squared == 0.0 and (d.beta + d.beta_prime) > 0.0
    suffix = "[b->0 limit]" if limit_branch else ""
    rows.append(_energy_row("shift 1s (minimum length)", ml_corrections.shift_1s(d).value,
                            "shift", "ml.shift_1s" + suffix, u))
    rows.append(_energy_row("shift 2s (minimum length)", ml_corrections.shift_2s(d).value,
                            "shift", "ml.shift_2s" + suffix, u))
    rows.append(_energy_row("shift 2p (minimum length)",
                            ml_corrections.shift_general(QuantumNumbers(2, 1, 0), 3, d).value,
                            "shift", "ml.shift_2p.general", u))
    return rows


def _orders_below(small: float, big: float) -> float:
    return math.floor(math.log10(big / small))


def stark_rows(config: RunConfig) -> list[ReportRow]:
    """Bounds, n = 2 eigenvalues, and the minimum-length correction estimates."""
    u = config.unit_out
    f = stark.FieldSpec(config.field_v_per_m)
    p = config.phenomenology()
    d = config.deformation()

    bound = stark.quadratic_shift_bound(f)
    bound_ml = stark.quadratic_shift_bound_ml(f, d)
    eig = diagonalize(stark.stark_matrix_n2(f))
    eig_ml = diagonalize(stark.stark_matrix_n2_ml(f, d))
    sigma = stark.sigma_correction(f, p)
    chi = stark.chi_correction(f, p)

    rows = [
        _energy_row("quadratic Stark shift, lower bound", bound,
                    "bound", "stark.bound.quadratic", u),
        _energy_row("linear Stark eigenvalue (upper)",
                    Quantity(eig.eigenvalues[0], bound.dimension, bound.system),
                    "shift", "stark.linear.eigenvalue", u),
        _energy_row("linear Stark eigenvalue (lower)",
                    Quantity(eig.eigenvalues[-1], bound.dimension, bound.system),
                    "shift", "stark.linear.eigenvalue", u),
        _energy_row("quadratic Stark shift with minimum length, lower bound", bound_ml,
                    "bound", "stark.bound.quadratic_ml", u),
        _energy_row("linear Stark eigenvalue with minimum length (upper)",
                    Quantity(eig_ml.eigenvalues[0], bound.dimension, bound.system),
                    "shift", "stark.linear.eigenvalue_ml", u),
        _energy_row("linear Stark eigenvalue with minimum length (lower)",
                    Quantity(eig_ml.eigenvalues[-1], bound.dimension, bound.system),
                    "shift", "stark.linear.eigenvalue_ml", u),
        _energy_row("sigma: minimum-length correction, quadratic effect", sigma,
                    "correction", "stark.correction.sigma", u),
        _energy_row("chi: minimum-length correction, linear effect", chi,
                    "correction", "stark.correction.chi", u),
        _energy_row("Lamb shift budget, 1s",
                    Quantity(LAMB_SHIFT_1S_J, bound.dimension, bound.system),
                    "reference-constant", "const.lamb_shift_1s", u),
        _energy_row("Lamb shift budget, 2s-2p",
                    Quantity(LAMB_SHIFT_2S_2P_J, bound.dimension, bound.system),
                    "reference-constant", "const.lamb_shift_2s_2p", u),
    ]

    sigma_j = units.energy_in(sigma, "J")
    chi_j = units.energy_in(chi, "J")
    bound_j = units.energy_in(bound, "J")
    element_j = stark.stark_matrix_n2(f).entries[0, 1]
    ratios = [
        ("sigma / Lamb-shift budget(1s)", abs(sigma_j) / LAMB_SHIFT_1S_J,
         "ratio.sigma_vs_lamb_1s"),
        ("chi / Lamb-shift budget(1s)", abs(chi_j) / LAMB_SHIFT_1S_J,
         "ratio.chi_vs_lamb_1s"),
        ("sigma / ordinary quadratic bound", abs(sigma_j) / abs(bound_j) if bound_j else 0.0,
         "ratio.sigma_vs_quadratic"),
        ("chi / ordinary linear element", abs(chi_j) / abs(element_j) if element_j else 0.0,
         "ratio.chi_vs_linear"),
    ]
    for label, value, prov in ratios:
        rows.append(_plain_row(label, value, "1", "correction", prov))
        if 0.0 < value < 1.0:
            rows.append(_plain_row(label.replace(" / ", " below ") + ", orders of magnitude",
                                   float(_orders_below(value, 1.0)), "1", "correction",
                                   prov + ".orders"))
    return rows


def scan_rows(config: RunConfig) -> list[ReportRow]:
    """One block of stark rows per scan step, step value embedded in labels."""
    assert config.scan is not None
    spec = config.scan
    rows: list[ReportRow] = []
    for k in range(spec.steps):
        frac = k / (spec.steps - 1)
        value = spec.start + (spec.stop - spec.start) * frac
        if spec.parameter == "eta":
            step_cfg = replace(config, eta=value, scan=None)
        elif spec.parameter == "delta_x":
            step_cfg = replace(config, delta_x_min_m=value, scan=None)
        else:
            step_cfg = replace(config, field_v_per_m=value, scan=None)
        step_cfg.validate()
        tag = f"[{spec.parameter}={value!r}]"
        rows.extend(ReportRow(r.label + " " + tag, r.value, r.unit, r.kind, r.provenance)
                    for r in stark_rows(step_cfg))
    return rows


# ---------------------------------------------------------------------------
# output formatting
# ---------------------------------------------------------------------------

def format_table(rows: list[ReportRow]) -> str:
    head = ("label", "value", "unit", "kind", "provenance")
    printed = [(r.label, f"{r.value:.4g}", r.unit, r.kind, r.provenance) for r in rows]
    widths = [max(len(h), *(len(p[i]) for p in printed)) for i, h in enumerate(head)]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(head)),
             "  ".join("-" * w for w in widths)]
    lines += ["  ".join(p[i].ljust(widths[i]) for i in range(5)) for p in printed]
    return "\n".join(lines)


def format_csv(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "value", "unit", "kind", "provenance"])
    for r in rows:
        writer.writerow([r.label, repr(r.value), r.unit, r.kind, r.provenance])
    return buf.getvalue()


def format_json(rows: list[ReportRow]) -> str:
    return json.dumps([{"label": r.label, "value": r.value, "unit": r.unit,
                        "kind": r.kind, "provenance": r.provenance} for r in rows],
                      indent=2)


def emit(rows: list[ReportRow], fmt: str) -> str:
    if fmt == "table":
        return format_table(rows)
    if fmt == "csv":
        return format_csv(rows)
    return format_json(rows)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--field", type=float, default=None,
                        help="electric field magnitude in V/m")
    parser.add_argument("--delta-x", type=float, default=None,
                        help="minimum length in m")
    parser.add_argument("--eta", type=float, default=None,
                        help="deformation mixing parameter in [1/3, 1]")
    parser.add_argument("--unit", choices=_UNITS, default=None,
                        help="energy output unit")
    parser.add_argument("--format", choices=_FORMATS, default=None,
                        help="output format")
    parser.add_argument("--config", default=None,
                        help="JSON config file; flags override its values")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mlstark",
        description="Hydrogen level shifts under a minimal-length deformed "
                    "Heisenberg algebra, with and without a uniform electric field.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in (("levels", "energy levels and minimum-length shifts"),
                       ("stark", "Stark bounds, eigenvalues and correction estimates")):
        p = sub.add_parser(name, help=text)
        _add_common(p)

    p = sub.add_parser("scan", help="parameter sweep of the stark quantities "
                                    "(emits csv or json; table requests fall back to csv)")
    _add_common(p)
    p.add_argument("--scan-param", choices=_SCAN_PARAMS, default=None)
    p.add_argument("--start", type=float, default=None)
    p.add_argument("--stop", type=float, default=None)
    p.add_argument("--steps", type=int, default=None)

    p = sub.add_parser("verify", help="run the numerical verification suite")
    p.add_argument("--profile", choices=("fast", "thorough"), default="fast")

    p = sub.add_parser("report", help="write delimited output and figures to a directory")
    _add_common(p)
    p.add_argument("--outdir", default="mlstark-report")
    return parser


def _load_config(args: argparse.Namespace) -> RunConfig:
    values: dict = {}
    if getattr(args, "config", None):
        try:
            with open(args.config, encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError("config", str(exc))
        if not isinstance(raw, dict):
            raise ConfigError("config", "config file must hold a JSON object")
        mapping = {"field_v_per_m": "field_v_per_m", "delta_x_min_m": "delta_x_min_m",
                   "eta": "eta", "unit": "unit_out", "format": "format"}
        for key, attr in mapping.items():
            if key in raw:
                values[attr] = raw[key]
        if "scan" in raw:
            s = raw["scan"]
            try:
                values["scan"] = ScanSpec(s["parameter"], float(s["start"]),
                                          float(s["stop"]), int(s["steps"]))
            except (KeyError, TypeError, ValueError) as exc:
                raise ConfigError("scan", f"malformed scan block: {exc}")

    if getattr(args, "field", None) is not None:
        values["field_v_per_m"] = args.field
    if getattr(args, "delta_x", None) is not None:
        values["delta_x_min_m"] = args.delta_x
    if getattr(args, "eta", None) is not None:
        values["eta"] = args.eta
    if getattr(args, "unit", None) is not None:
        values["unit_out"] = args.unit
    if getattr(args, "format", None) is not None:
        values["format"] = args.format

    scan_flags = [getattr(args, k, None) for k in ("scan_param", "start", "stop", "steps")]
    if any(v is not None for v in scan_flags):
        if any(v is None for v in scan_flags):
            raise ConfigError("scan", "--scan-param, --start, --stop and --steps "
                                      "must be given together")
        values["scan"] = ScanSpec(args.scan_param, args.start, args.stop, args.steps)

    try:
        config = RunConfig(**values)
    except TypeError as exc:
        raise ConfigError("config", str(exc))
    return config.validate()


def _run_verify(profile: str) -> int:
    try:
        checks = oracle.run_checks(profile)
    except oracle.QuadratureToleranceError as exc:
        print(f"ERROR quadrature did not converge: {exc}", file=sys.stderr)
        return 2
    failed = 0
    for c in checks:
        tag = c.status.upper()
        line = f"{tag:5s} {c.name}: measured {c.measured:.3e} (threshold {c.threshold:.3e})"
        if c.note:
            line += f" -- {c.note}"
        print(line)
        failed += c.failed
    total = len(checks)
    print(f"{total - failed}/{total} checks passed"
          + (f", {failed} FAILED" if failed else ""))
    return 1 if failed else 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return _run_verify(args.profile)
    try:
        config = _load_config(args)
        if args.command == "levels":
            print(emit(levels_rows(config), config.format))
        elif args.command == "stark":
            print(emit(stark_rows(config), config.format))
        elif args.command == "scan":
            if config.scan is None:
                raise ConfigError("scan", "the scan command needs a scan block "
                                          "(--scan-param/--start/--stop/--steps)")
            fmt = config.format if config.format != "table" else "csv"
            print(emit(scan_rows(config), fmt))
        elif args.command == "report":
            from .report import render_report
            written = render_report(config, args.outdir)
            for path in written:
                print(f"wrote {path}")
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
