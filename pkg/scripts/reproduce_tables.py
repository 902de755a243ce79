"""Recompute the five-step reference tables and write CSV, JSON and SVG artifacts.

    python3 scripts/reproduce_tables.py [--output-dir results/tables]

Exits 2 if any panel disagrees with the stored reference values.
"""

import argparse
from pathlib import Path

from photon_qrw.cli import ExperimentConfig, run


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--output-dir", type=Path, default=Path("results/tables"))
    args = parser.parse_args()
    res = run(ExperimentConfig("tables", output_dir=args.output_dir, formats=("csv", "json", "svg")))
    for line in res.messages:
        print(line)
    print(f"{len(res.manifest)} files written to {args.output_dir}")
    return res.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
