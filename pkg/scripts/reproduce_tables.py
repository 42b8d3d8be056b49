"""Regenerate every reference table as CSV through the command-line interface.

Usage: python3 scripts/reproduce_tables.py [OUT_DIR]   (default: ./tables)

Each entry of TABLES is one CLI invocation; the argument lists double as
documentation of how to produce a table by hand with ``stefan-hbim``.
"""
import sys
from pathlib import Path

from stefan_hbim.cli import main

STE_SWEEP = "0.1:1.0:0.1"
BI_SWEEP = "1,10,20,30,40,50,60,70,80,90,100"

TABLES = {
    "dirichlet_alpha0.csv": ["table", "--alpha", "0", "--ste", STE_SWEEP, "--methods", "p1,p2,p3"],
    "dirichlet_alpha0.5.csv": ["table", "--alpha", "0.5", "--ste", STE_SWEEP, "--methods", "p1,p2,p3"],
    "dirichlet_alpha5.csv": ["table", "--alpha", "5", "--ste", STE_SWEEP, "--methods", "p1,p2,p3"],
    "convective_alpha0.csv": ["table", "--alpha", "0", "--ste", "0.5", "--bi", BI_SWEEP, "--methods", "p1h,p2h,p3h"],
    "convective_alpha0.5.csv": ["table", "--alpha", "0.5", "--ste", "0.5", "--bi", BI_SWEEP, "--methods", "p1h,p2h,p3h"],
    "convective_alpha5.csv": ["table", "--alpha", "5", "--ste", "0.5", "--bi", BI_SWEEP, "--methods", "p1h,p2h,p3h"],
    "least_squares_alpha0.csv": ["table", "--alpha", "0", "--ste", STE_SWEEP, "--methods", "p2,p4"],
    "least_squares_convective_ste0.02.csv": ["table", "--alpha", "0", "--ste", "0.02", "--bi", "1:5:1", "--methods", "p2h,p4h"],
    "least_squares_convective_ste0.5.csv": ["table", "--alpha", "0", "--ste", "0.5", "--bi", BI_SWEEP, "--methods", "p2h,p4h"],
    "convergence_p2h_alpha1.csv": ["converge", "--alpha", "1", "--ste", "0.5", "--bi", "1,10,100,1000,10000,100000,1000000", "--method", "p2h"],
}


def run(out_dir: Path) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    worst = 0
    for name, argv in TABLES.items():
        code = main([*argv, "--format", "csv", "-o", str(out_dir / name)])
        print(f"{name}: exit {code}")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(run(Path(sys.argv[1] if len(sys.argv) > 1 else "tables")))
