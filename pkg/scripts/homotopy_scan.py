"""Scan the phase homotopy F_t over windows and grid sizes and tabulate the
defects and commutator tails.

    python3 scripts/homotopy_scan.py --windows 16 32 64 --steps 10 --csv scan.csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field

from ncgroups.homotopy import homotopy_report

COLUMNS = [
    "window", "steps", "square_defect", "unitarity_defect", "endpoint_offaxis",
    "axis_support", "lipschitz_ratio", "lipschitz_bound", "tail_V_t0", "passed",
]


@dataclass
class ScanConfig:
    windows: list = field(default_factory=lambda: [16, 32, 64])
    steps: list = field(default_factory=lambda: [10])
    tolerance: float = 1e-9


def scan(cfg: ScanConfig):
    for N in cfg.windows:
        for steps in cfg.steps:
            r = homotopy_report(steps, N, cfg.tolerance)
            v0 = [r.tail_decay["V"]["0"][str(R)] for R in r.tail_radii]
            yield {
                "window": N,
                "steps": steps,
                "square_defect": f"{r.square_defect:.2e}",
                "unitarity_defect": f"{r.unitarity_defect:.2e}",
                "endpoint_offaxis": f"{r.endpoint_offaxis_commutator:.2e}",
                "axis_support": r.endpoint_axis_support,
                "lipschitz_ratio": f"{r.lipschitz_ratio:.3f}",
                "lipschitz_bound": r.lipschitz_bound,
                "tail_V_t0": " ".join(f"R{R}:{x:.4f}" for R, x in zip(r.tail_radii, v0)),
                "passed": r.passed,
            }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--windows", type=int, nargs="+", default=[16, 32, 64])
    ap.add_argument("--steps", type=int, nargs="+", default=[10])
    ap.add_argument("--tolerance", type=float, default=1e-9)
    ap.add_argument("--csv", help="write rows here instead of stdout")
    args = ap.parse_args()
    cfg = ScanConfig(args.windows, args.steps, args.tolerance)
    fh = open(args.csv, "w", newline="") if args.csv else sys.stdout
    writer = csv.DictWriter(fh, fieldnames=COLUMNS)
    writer.writeheader()
    for row in scan(cfg):
        writer.writerow(row)
        fh.flush()
    if args.csv:
        fh.close()


if __name__ == "__main__":
    main()
