"""Temperature grids for the exact solution and each fixed-temperature approximation.

Writes one CSV per method plus ``max_abs_difference.csv``, the largest
|T_method - T_exact| / theta_inf at each sampled time.

Usage: python3 scripts/field_grids.py [OUT_DIR] [ALPHA] [STE]
"""
import sys
from pathlib import Path

import numpy as np

from stefan_hbim import ProblemParams, sample_field, solve
from stefan_hbim.report import field_to_csv, fmt_number

THETA_INF = 30.0
X_MAX = 2.0
T_RANGE = (0.1, 1.0)
NX, NT = 81, 10
METHODS = ["p1", "p2", "p3", "p4"]


def run(out_dir: Path, alpha: float, ste: float) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    p = ProblemParams(alpha, ste, theta_inf=THETA_INF)
    grids = {}
    for name in ["exact", *METHODS]:
        grids[name] = sample_field(p, solve(name, p), X_MAX, T_RANGE, NX, NT)
        (out_dir / f"field_{name}.csv").write_text(field_to_csv(grids[name]), newline="\n")
    ref = grids["exact"].temperature
    lines = ["t," + ",".join(METHODS)]
    for i, t in enumerate(grids["exact"].t_values):
        cells = []
        for name in METHODS:
            # a NaN on either side means the point lies past one of the two fronts
            diff = np.abs(grids[name].temperature[i] - ref[i]) / THETA_INF
            cells.append(fmt_number(float(np.nanmax(diff))))
        lines.append(f"{fmt_number(float(t))}," + ",".join(cells))
    (out_dir / "max_abs_difference.csv").write_text("\n".join(lines) + "\n", newline="\n")
    print(f"wrote {len(grids) + 1} files to {out_dir}")


if __name__ == "__main__":
    args = sys.argv[1:]
    run(Path(args[0] if args else "fields"),
        float(args[1]) if len(args) > 1 else 5.0,
        float(args[2]) if len(args) > 2 else 0.5)
