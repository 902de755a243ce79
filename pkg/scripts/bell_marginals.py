"""Single-site marginals for the four Bell inputs after many steps.

    python3 scripts/bell_marginals.py [--steps 100] [--output-dir results/marginals]
"""

import argparse
from pathlib import Path

from photon_qrw.export import line_plot_svg, write_csv
from photon_qrw.two_photon import BELL_KINDS, evolve_two_photon, marginal_at_least_one, named_input


def main():
    parser = argparse.ArgumentParser(description="Bell-state marginals")
    parser.add_argument("--steps", type=int, default=100)
    parser.add_argument("--output-dir", type=Path, default=Path("results/marginals"))
    args = parser.parse_args()
    n = args.steps

    margs = {k: marginal_at_least_one(evolve_two_photon(named_input(k), n)) for k in BELL_KINDS}
    qs = sorted(margs[BELL_KINDS[0]])
    write_csv(args.output_dir / f"bell_marginals_n{n}.csv", ("q",) + BELL_KINDS,
              [(q,) + tuple(margs[k][q] for k in BELL_KINDS) for q in qs])
    line_plot_svg(args.output_dir / f"bell_marginals_n{n}.svg", qs,
                  {k: [margs[k][q] for q in qs] for k in BELL_KINDS}, title=f"P(q), n={n}")
    for k in BELL_KINDS:
        m = margs[k]
        asym = max(abs(m[q] - m[-q]) for q in qs)
        print(f"{k:5s} P(0)={m[0]:.4f}  max|P(q)-P(-q)|={asym:.1e}")


if __name__ == "__main__":
    main()
