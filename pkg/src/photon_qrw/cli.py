"""
Command-line front end.

    photon-qrw single --steps 50 --initial hx-vy
    photon-qrw two-photon --steps 25 --initial psi+
    photon-qrw coherent --steps 5 --initial coh:0.1,-0.1
    photon-qrw asymptotic-compare --steps 50 --initial hy-vx
    photon-qrw tables --which I

Exit codes: 0 success, 1 usage or parse error, 2 golden-table mismatch,
3 I/O error. ``PHOTON_QRW_OUTPUT_DIR`` overrides the output directory
unless ``--output-dir`` is given.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Sequence

from . import golden
from .asymptotics import approx_single_state, approx_two_photon_state
from .coherent import CoherentField, evolve_coherent, normalized_detection
from .descriptors import (
    CoherentDescriptor,
    DescriptorError,
    SingleDescriptor,
    TwoPhotonDescriptor,
    parse_initial,
)
from .export import (
    distribution_rows,
    fmt_x128,
    heatmap_svg,
    joint_rows,
    line_plot_svg,
    write_csv,
    write_json,
)
from .modes import reachable_modes
from .single import SinglePhotonState, evolve, position_distribution
from .tables import TableCheck, check_table, coherent_row
from .transform import build_mode_matrix, verify_heisenberg_table
from .two_photon import (
    evolve_two_photon,
    joint_matrix,
    joint_probability,
    marginal_at_least_one,
    named_input,
)

__all__ = ["ExperimentConfig", "RunResult", "UsageError", "run", "main", "EXIT_OK", "EXIT_USAGE",
           "EXIT_MISMATCH", "EXIT_IO", "OUTPUT_DIR_ENV"]

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_IO = 0, 1, 2, 3
OUTPUT_DIR_ENV = "PHOTON_QRW_OUTPUT_DIR"

EXPERIMENTS = ("single", "two-photon", "coherent", "asymptotic-compare", "tables")
FORMATS = ("csv", "json", "svg")
TABLE_CHOICES = ("I", "II", "III", "transform", "all")
DEFAULT_INITIAL = {
    "single": "hx",
    "two-photon": "xy",
    "coherent": "coh:1,1",
    "asymptotic-compare": "hx-vy",
    "tables": "",
}


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str
    steps: int = 5
    initial: str = ""
    output_dir: Path = Path("results")
    formats: tuple[str, ...] = ("csv", "json")
    which: str = "all"

    def validate(self) -> "ExperimentConfig":
        if self.experiment not in EXPERIMENTS:
            raise UsageError(f"unknown experiment {self.experiment!r}; expected one of {EXPERIMENTS}")
        if not isinstance(self.steps, int) or self.steps < 0:
            raise UsageError(f"steps must be a non-negative integer, got {self.steps!r}")
        bad = [f for f in self.formats if f not in FORMATS]
        if bad or not self.formats:
            raise UsageError(f"formats must be a non-empty subset of {FORMATS}, got {list(self.formats)}")
        if self.which not in TABLE_CHOICES:
            raise UsageError(f"--which must be one of {TABLE_CHOICES}, got {self.which!r}")
        if self.experiment == "asymptotic-compare" and self.steps < 1:
            raise UsageError("asymptotic-compare needs at least one step")
        return self


@dataclass
class RunResult:
    exit_code: int
    manifest: list[Path] = field(default_factory=list)
    messages: list[str] = field(default_factory=list)


def _slug(text: str) -> str:
    table = str.maketrans({"+": "p", "-": "m", ":": "_", ",": "_", " ": "", ".": "d"})
    return text.translate(table) or "default"


def _stem(cfg: ExperimentConfig) -> str:
    return f"{cfg.experiment}_{_slug(cfg.initial)}_n{cfg.steps}"


def _require(desc, kind, cfg: ExperimentConfig):
    if not isinstance(desc, kind):
        raise DescriptorError(f"initial state {cfg.initial!r} does not fit experiment {cfg.experiment!r}")
    return desc


def _run_single(cfg: ExperimentConfig, res: RunResult):
    desc = _require(parse_initial(cfg.initial), SingleDescriptor, cfg)
    dist = position_distribution(evolve(SinglePhotonState.from_coin(desc.coin), cfg.steps))
    rows = distribution_rows(dist)
    out, stem = cfg.output_dir, _stem(cfg)
    if "csv" in cfg.formats:
        res.manifest.append(write_csv(out / f"{stem}.csv", ("q", "P"), rows))
    if "json" in cfg.formats:
        res.manifest.append(write_json(out / f"{stem}.json", cfg.experiment, cfg.steps, cfg.initial,
                                       [[q, p] for q, p in rows]))
    if "svg" in cfg.formats:
        res.manifest.append(line_plot_svg(out / f"{stem}.svg", [q for q, _ in rows], {"exact": [p for _, p in rows]},
                                          title=f"P(q), initial {cfg.initial}, n={cfg.steps}"))


def _write_joint(cfg: ExperimentConfig, res: RunResult, stem: str, state, x128: bool = False):
    out = cfg.output_dir
    joint = joint_probability(state)
    if "csv" in cfg.formats:
        header = ("q1", "q2", "P", "P_x128") if x128 else ("q1", "q2", "P")
        res.manifest.append(write_csv(out / f"{stem}.csv", header, joint_rows(joint, x128=x128)))
    sites, mat = joint_matrix(state)
    if "json" in cfg.formats:
        marg = marginal_at_least_one(state)
        data = {"sites": sites, "matrix": mat.tolist(), "marginal": [marg[q] for q in sites]}
        res.manifest.append(write_json(out / f"{stem}.json", cfg.experiment, cfg.steps, cfg.initial, data))
    if "svg" in cfg.formats:
        res.manifest.append(heatmap_svg(out / f"{stem}.svg", sites, mat, title=f"P(q1,q2) {stem}"))


def _run_two_photon(cfg: ExperimentConfig, res: RunResult):
    desc = _require(parse_initial(cfg.initial), TwoPhotonDescriptor, cfg)
    state = evolve_two_photon(named_input(desc.kind), cfg.steps)
    _write_joint(cfg, res, _stem(cfg), state)


def _run_coherent(cfg: ExperimentConfig, res: RunResult):
    desc = _require(parse_initial(cfg.initial), CoherentDescriptor, cfg)
    field_out = evolve_coherent(CoherentField.two_port(desc.alpha, desc.beta), cfg.steps)
    dist = normalized_detection(field_out)
    rows = distribution_rows(dist)
    amps = [(str(m), float(a.real), float(a.imag)) for m, a in zip(reachable_modes(cfg.steps), field_out.vector)]
    out, stem = cfg.output_dir, _stem(cfg)
    if "csv" in cfg.formats:
        res.manifest.append(write_csv(out / f"{stem}.csv", ("q", "P"), rows))
        res.manifest.append(write_csv(out / f"{stem}_amplitudes.csv", ("mode", "re", "im"), amps))
    if "json" in cfg.formats:
        data = {"distribution": [[q, p] for q, p in rows], "amplitudes": [list(a) for a in amps]}
        res.manifest.append(write_json(out / f"{stem}.json", cfg.experiment, cfg.steps, cfg.initial, data))
    if "svg" in cfg.formats:
        res.manifest.append(line_plot_svg(out / f"{stem}.svg", [q for q, _ in rows], {"normalized": [p for _, p in rows]},
                                          title=f"coherent P(q), {cfg.initial}, n={cfg.steps}"))


def _run_asymptotic(cfg: ExperimentConfig, res: RunResult):
    desc = parse_initial(cfg.initial)
    out, stem = cfg.output_dir, _stem(cfg)
    if isinstance(desc, SingleDescriptor):
        exact = position_distribution(evolve(SinglePhotonState.from_coin(desc.coin), cfg.steps))
        approx = position_distribution(approx_single_state(cfg.steps, desc.coin))
        rows = [(q, exact[q], approx[q], abs(exact[q] - approx[q])) for q in sorted(exact)]
        header = ("q", "P_exact", "P_approx", "abs_diff")
    elif isinstance(desc, TwoPhotonDescriptor):
        exact = joint_probability(evolve_two_photon(named_input(desc.kind), cfg.steps))
        approx = joint_probability(approx_two_photon_state(cfg.steps, desc.kind))
        rows = [(q1, q2, exact[(q1, q2)], approx[(q1, q2)], abs(exact[(q1, q2)] - approx[(q1, q2)]))
                for (q1, q2) in sorted(exact)]
        header = ("q1", "q2", "P_exact", "P_approx", "abs_diff")
    else:
        raise DescriptorError("asymptotic-compare takes a single-photon coin or a two-photon input")
    tv = 0.5 * sum(r[-1] for r in rows)
    res.messages.append(f"total variation distance exact vs approximate: {tv:.6f}")
    if "csv" in cfg.formats:
        res.manifest.append(write_csv(out / f"{stem}.csv", header, rows))
    if "json" in cfg.formats:
        res.manifest.append(write_json(out / f"{stem}.json", cfg.experiment, cfg.steps, cfg.initial,
                                       {"columns": list(header), "rows": [list(r) for r in rows],
                                        "total_variation": tv}))
    if "svg" in cfg.formats and isinstance(desc, SingleDescriptor):
        res.manifest.append(line_plot_svg(out / f"{stem}.svg", [r[0] for r in rows],
                                          {"exact": [r[1] for r in rows], "approximate": [r[2] for r in rows]},
                                          title=f"P(q), initial {cfg.initial}, n={cfg.steps}"))


def _run_tables(cfg: ExperimentConfig, res: RunResult):
    which = ("I", "II", "III", "transform") if cfg.which == "all" else (cfg.which,)
    out = cfg.output_dir
    report = []
    for name in which:
        if name in ("I", "III"):
            panels = golden.TABLE_I_PANELS if name == "I" else golden.TABLE_III_PANELS
            for letter, kind in panels.items():
                stem = f"table_{name}_{letter}_{_slug(kind)}"
                state = evolve_two_photon(named_input(kind), 5)
                _write_joint(replace(cfg, steps=5, initial=kind), res, stem, state, x128=True)
            checks = check_table(name)
        elif name == "II":
            rows = []
            for (a, b) in golden.TABLE_II:
                sites, probs = coherent_row(a, b)
                rows.extend((f"{a}f", f"{b}f", q, p, fmt_x128(p)) for q, p in zip(sites, probs))
            if "csv" in cfg.formats:
                res.manifest.append(write_csv(out / "table_II.csv", ("alpha", "beta", "q", "P", "P_x128"), rows))
            checks = check_table("II")
        else:
            mm = build_mode_matrix(5)
            heis = mm.heisenberg()
            scale = 4.0 * math.sqrt(2.0)
            rows = []
            for i, m_in in enumerate(mm.in_modes):
                reference = golden.HEISENBERG_5[m_in.coin]
                for j, m_out in enumerate(mm.out_modes):
                    rows.append((str(m_in), str(m_out), float(heis[i, j].real * scale),
                                 reference.get((m_out.q, m_out.coin), 0)))
            if "csv" in cfg.formats:
                res.manifest.append(write_csv(out / "heisenberg_5.csv",
                                              ("input", "output", "coeff_x4sqrt2", "reference_x4sqrt2"), rows))
            rep = verify_heisenberg_table(mm)
            checks = [TableCheck("transform", coin, dev, 1e-12) for coin, dev in rep.per_input.items()]
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            res.messages.append(f"[{status}] table {c.table} {c.panel}: max deviation {c.max_deviation:.3e} (tol {c.tol:g})")
            report.append({"table": c.table, "panel": c.panel, "max_deviation": c.max_deviation,
                           "tol": c.tol, "passed": c.passed})
    if "json" in cfg.formats:
        res.manifest.append(write_json(out / "tables_report.json", "tables", 5, cfg.which, report))
    if not all(r["passed"] for r in report):
        res.exit_code = EXIT_MISMATCH


_RUNNERS = {
    "single": _run_single,
    "two-photon": _run_two_photon,
    "coherent": _run_coherent,
    "asymptotic-compare": _run_asymptotic,
    "tables": _run_tables,
}


def run(config: ExperimentConfig) -> RunResult:
    """Run one experiment, writing artifacts under ``config.output_dir``."""
    res = RunResult(EXIT_OK)
    try:
        cfg = config.validate()
        if not cfg.initial:
            cfg = replace(cfg, initial=DEFAULT_INITIAL[cfg.experiment])
        _RUNNERS[cfg.experiment](cfg, res)
    except (UsageError, DescriptorError) as exc:
        res.exit_code = EXIT_USAGE
        res.messages.append(f"error: {exc}")
    except OSError as exc:
        res.exit_code = EXIT_IO
        res.messages.append(f"I/O error: {exc}")
    return res


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="photon-qrw", description="Quantum random walks of one and two photons on a line.")
    sub = parser.add_subparsers(dest="experiment", required=True, parser_class=_Parser)
    for name in EXPERIMENTS:
        p = sub.add_parser(name)
        p.add_argument("--steps", type=int, default=None)
        p.add_argument("--initial", default=None)
        p.add_argument("--output-dir", type=Path, default=None)
        p.add_argument("--formats", default=None, help="comma-separated subset of csv,json,svg")
        p.add_argument("--config", type=Path, default=None, help="JSON file with config fields; flags win")
        if name == "tables":
            p.add_argument("--which", default=None, choices=TABLE_CHOICES)
    return parser


def _config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    values: dict = {"experiment": args.experiment}
    if args.config is not None:
        try:
            with open(args.config, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file {args.config} is not valid JSON: {exc}") from None
        known = {f.name for f in fields(ExperimentConfig)}
        unknown = set(loaded) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        if loaded.get("experiment", args.experiment) != args.experiment:
            raise UsageError(f"config file is for experiment {loaded['experiment']!r}, not {args.experiment!r}")
        values.update(loaded)
    if isinstance(values.get("formats"), str):
        values["formats"] = values["formats"].split(",")
    env_dir = os.environ.get(OUTPUT_DIR_ENV)
    if env_dir:
        values["output_dir"] = env_dir
    for key in ("steps", "initial", "output_dir", "which"):
        v = getattr(args, key, None)
        if v is not None:
            values[key] = v
    if args.formats is not None:
        values["formats"] = [f.strip() for f in args.formats.split(",") if f.strip()]
    if "formats" in values:
        values["formats"] = tuple(values["formats"])
    if "output_dir" in values:
        values["output_dir"] = Path(values["output_dir"])
    return ExperimentConfig(**values)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        config = _config_from_args(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    result = run(config)
    for msg in result.messages:
        print(msg, file=sys.stderr if result.exit_code == EXIT_USAGE else sys.stdout)
    for path in result.manifest:
        print(path)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
