"""Batch command-line interface.

    vdw spectrum|enhancement|peaks|validate --config <file> [--points N] [--out <path>]

Exit codes: 0 ok, 1 config error, 2 I/O error, 3 quadrature failure,
4 validation failure.  Set VDW_LOG_LEVEL (debug/info/warning) to control
logging verbosity; nothing else is read from the environment.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from dataclasses import replace
from pathlib import Path

from .config import RunConfig, load_config, resolve_config_path
from .errors import ConfigError, ParameterError, QuadratureError, VdwError
from .greens import AtomPositions, nonretarded_limit_check
from .spectra import find_peaks, scan_enhancement, scan_spectrum

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2
EXIT_QUADRATURE = 3
EXIT_VALIDATION = 4

log = logging.getLogger("vdwsurf")


def _fmt(x) -> str:
    """Numeric CSV cell: up to 12 significant digits, trailing zeros trimmed."""
    if x is None:
        return "nan"
    x = float(x)
    if math.isnan(x):
        return "nan"
    return format(x, ".12g")


def _write_text(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _write_table(path: str, fmt: str, header: list, rows: list) -> None:
    """Rows of already-ordered numeric cells, as CSV or a JSON array."""
    if fmt == "json":
        payload = [dict(zip(header, row)) for row in rows]
        _write_text(path, json.dumps(payload, indent=2) + "\n")
    else:
        lines = [",".join(header)]
        lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
        _write_text(path, "\n".join(lines) + "\n")


def _out_path(cfg: RunConfig, args, default: str) -> tuple:
    fmt = cfg.output.format if cfg.output else "csv"
    path = args.out or (cfg.output.path if cfg.output else default)
    return path, fmt


def cmd_spectrum(cfg: RunConfig, args) -> int:
    rows = scan_spectrum(cfg.system, cfg.atom_a, cfg.atom_b, cfg.scan, cfg.quadrature)
    header = ["omega_over_ref", "u_resonant", "u_resonant_no_lf", "g", "g_no_lf"]
    if cfg.scan.include_offresonant:
        header.append("u_offresonant")
    table = []
    for row in rows:
        cells = [row.omega, row.u_resonant, row.u_resonant_no_lf, row.g, row.g_no_lf]
        if cfg.scan.include_offresonant:
            cells.append(row.u_offresonant)
        table.append(cells)
    path, fmt = _out_path(cfg, args, "vdw_spectrum.csv")
    _write_table(path, fmt, header, table)
    log.info("wrote %d spectrum rows to %s", len(table), path)
    return EXIT_OK


def cmd_enhancement(cfg: RunConfig, args) -> int:
    rows = scan_enhancement(cfg.system, cfg.scan)
    path, fmt = _out_path(cfg, args, "vdw_enhancement.csv")
    _write_table(path, fmt, ["omega_over_ref", "g", "g_no_lf"], rows)
    log.info("wrote %d enhancement rows to %s", len(rows), path)
    return EXIT_OK


def cmd_peaks(cfg: RunConfig, args) -> int:
    rows = scan_spectrum(cfg.system, cfg.atom_a, cfg.atom_b, cfg.scan, cfg.quadrature)
    peaks = find_peaks(cfg.system, cfg.atom_b, rows)
    payload = [
        {
            "location": peak.location,
            "height": peak.height,
            "width_fwhm": None if math.isnan(peak.width_fwhm) else peak.width_fwhm,
            "kind": peak.kind.value,
        }
        for peak in peaks
    ]
    path, _ = _out_path(cfg, args, "vdw_peaks.json")
    _write_text(path, json.dumps(payload, indent=2) + "\n")
    log.info("wrote %d peaks to %s", len(payload), path)
    return EXIT_OK


def cmd_validate(cfg: RunConfig, args) -> int:
    v = cfg.validate
    pos = AtomPositions(v.r_a, v.r_b)
    report = nonretarded_limit_check(
        cfg.system, v.omega, pos, v.scales, cfg.quadrature
    )
    table = [
        [row.scale, row.component, _fmt(row.ratio.real), _fmt(row.ratio.imag)]
        for row in report.rows
    ]
    lines = ["scale,component,ratio_re,ratio_im"]
    lines.extend(",".join([_fmt(r[0]), r[1], r[2], r[3]]) for r in table)
    path, _ = _out_path(cfg, args, "vdw_validate.csv")
    _write_text(path, "\n".join(lines) + "\n")
    ok = report.passed(v.tolerance)
    log.info(
        "validation %s (max deviation %.3e at scale %s)",
        "PASS" if ok else "FAIL",
        report.max_deviation(min(v.scales)) if v.scales else float("nan"),
        min(v.scales) if v.scales else "-",
    )
    if not ok:
        print(
            f"validation FAILED: ratios at scale {min(v.scales)} deviate "
            f"by up to {report.max_deviation(min(v.scales)):.3e} (> {v.tolerance})",
            file=sys.stderr,
        )
        return EXIT_VALIDATION
    return EXIT_OK


_COMMANDS = {
    "spectrum": cmd_spectrum,
    "enhancement": cmd_enhancement,
    "peaks": cmd_peaks,
    "validate": cmd_validate,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vdw",
        description="Interface-enhanced van der Waals interaction tables",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("spectrum", "scan the excited atom's transition frequency, write the potential table"),
        ("enhancement", "write the enhancement-factor table over the scan grid"),
        ("peaks", "locate, refine and classify resonance peaks, write a JSON report"),
        ("validate", "check the Sommerfeld integral against the near-field closed form"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, help="JSON run configuration (path or bundled name such as 'fig2')")
        p.add_argument("--points", type=int, default=None, help="override scan.n_points")
        p.add_argument("--out", default=None, help="override the output path")
    return parser


def main(argv=None) -> int:
    logging.basicConfig(
        level=os.environ.get("VDW_LOG_LEVEL", "warning").upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(resolve_config_path(args.config))
        if args.points is not None:
            try:
                cfg = replace(cfg, scan=replace(cfg.scan, n_points=args.points))
            except ParameterError as exc:
                raise ConfigError(f"--points: {exc}", field="scan.n_points") from None
        return _COMMANDS[args.command](cfg, args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except QuadratureError as exc:
        print(f"quadrature error: {exc}", file=sys.stderr)
        return EXIT_QUADRATURE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except VdwError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
