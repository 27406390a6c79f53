"""Report rendering: delimited output plus matplotlib figures on disk.

The ``report`` subcommand writes the stark table (CSV + JSON), two parameter
scans (CSV), and three figures: the corrections against eta, the corrections
against field strength, and the n = 2 splitting with and without the minimum
length.
"""

from __future__ import annotations

import os
from dataclasses import replace

import matplotlib
import numpy as np

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from . import stark  # noqa: E402
from .cli import RunConfig, format_csv, format_json, stark_rows  # noqa: E402
from .units import PhenomenologyParams  # noqa: E402

_ETA_MIN = 1.0 / 3.0


def _correction_curves(config: RunConfig, etas, fields):
    f0 = stark.FieldSpec(config.field_v_per_m)
    sigma_eta = [abs(stark.sigma_correction(
        f0, PhenomenologyParams(config.delta_x_min_m, e)).value) for e in etas]
    chi_eta = [abs(stark.chi_correction(
        f0, PhenomenologyParams(config.delta_x_min_m, e)).value) for e in etas]
    p0 = config.phenomenology()
    sigma_field = [abs(stark.sigma_correction(stark.FieldSpec(fv), p0).value)
                   for fv in fields]
    chi_field = [abs(stark.chi_correction(stark.FieldSpec(fv), p0).value)
                 for fv in fields]
    return sigma_eta, chi_eta, sigma_field, chi_field


def _write_scan_csv(path: str, header: list[str], columns: list[np.ndarray]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(header) + "\n")
        for row in zip(*columns):
            fh.write(",".join(repr(float(v)) for v in row) + "\n")


def render_report(config: RunConfig, outdir: str) -> list[str]:
    """Write tables, scans and figures to ``outdir``; returns the paths."""
    os.makedirs(outdir, exist_ok=True)
    written = []

    rows = stark_rows(replace(config, scan=None))
    for name, text in (("report.csv", format_csv(rows)),
                       ("report.json", format_json(rows))):
        path = os.path.join(outdir, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
        written.append(path)

    etas = np.linspace(_ETA_MIN, 1.0, 41)
    fields = np.logspace(6, 7, 41)
    sigma_eta, chi_eta, sigma_field, chi_field = _correction_curves(config, etas, fields)

    eta_path = os.path.join(outdir, "eta_scan.csv")
    _write_scan_csv(eta_path, ["eta", "abs_sigma_J", "abs_chi_J"],
                    [etas, np.array(sigma_eta), np.array(chi_eta)])
    written.append(eta_path)
    field_path = os.path.join(outdir, "field_scan.csv")
    _write_scan_csv(field_path, ["field_V_per_m", "abs_sigma_J", "abs_chi_J"],
                    [fields, np.array(sigma_field), np.array(chi_field)])
    written.append(field_path)

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.plot(etas, sigma_eta, label=r"$|\varsigma(\eta)|$ (quadratic effect)")
    ax.plot(etas, chi_eta, label=r"$|\chi(\eta)|$ (linear effect)")
    ax.set_xlabel(r"$\eta$")
    ax.set_ylabel("correction magnitude (J)")
    ax.set_yscale("log")
    ax.set_title(f"Minimum-length Stark corrections, "
                 f"$\\Delta x_{{min}}$ = {config.delta_x_min_m:.3g} m, "
                 f"|E| = {config.field_v_per_m:.3g} V/m")
    ax.legend()
    ax.grid(True, alpha=0.3)
    path = os.path.join(outdir, "corrections_vs_eta.png")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.loglog(fields, sigma_field, label=r"$|\varsigma| \propto |E|^2$")
    ax.loglog(fields, chi_field, label=r"$|\chi| \propto |E|$")
    ax.set_xlabel("|E| (V/m)")
    ax.set_ylabel("correction magnitude (J)")
    ax.set_title(f"Field scaling of the corrections, $\\eta$ = {config.eta:.3g}")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    path = os.path.join(outdir, "corrections_vs_field.png")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    written.append(path)

    d = config.deformation()
    split = np.array([abs(float(stark.stark_matrix_n2(stark.FieldSpec(fv)).entries[0, 1]))
                      for fv in fields])
    split_ml = np.array([abs(float(stark.stark_matrix_n2_ml(stark.FieldSpec(fv),
                                                            d).entries[0, 1]))
                         for fv in fields])
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10.4, 4.2))
    ax1.loglog(fields, split, label="ordinary coupling $3 e a_0 |E|$")
    ax1.loglog(fields, split_ml, "--", label="with minimum length")
    ax1.set_xlabel("|E| (V/m)")
    ax1.set_ylabel("n=2 coupling element magnitude (J)")
    ax1.legend()
    ax1.grid(True, which="both", alpha=0.3)
    gap = np.abs(split - split_ml)
    ax2.loglog(fields, gap, color="tab:red")
    ax2.set_xlabel("|E| (V/m)")
    ax2.set_ylabel("coupling difference (J)")
    ax2.grid(True, which="both", alpha=0.3)
    fig.suptitle("n = 2 level coupling with and without the minimum length")
    path = os.path.join(outdir, "n2_splitting_vs_field.png")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    written.append(path)
    return written
