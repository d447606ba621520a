"""Grid convergence of the measurement cross-check (sigma -> sigma/2) against n at fixed extent."""

import argparse

from landauer.thermo import verify_measurement_numerically
from landauer.wavegrid import Grid

parser = argparse.ArgumentParser()
parser.add_argument("--sigma", type=float, default=1.0)
parser.add_argument("--extent", type=float, default=16.0)
args = parser.parse_args()

print(f"{'n':>6} {'dx':>10} {'dH_x':>14} {'dH_p':>14} {'rel err x':>10} {'rel err p':>10}")
for n in (16, 32, 64, 128, 256, 1024, 4096):
    grid = Grid.centered(n, args.extent / n)
    try:
        c = verify_measurement_numerically(args.sigma, grid, raise_on_mismatch=False)
    except ValueError as exc:
        print(f"{n:6d} {grid.dx:10.4g}  skipped: {exc}")
        continue
    print(f"{n:6d} {grid.dx:10.4g} {c.delta_h_x:14.10f} {c.delta_h_p:14.10f} "
          f"{c.rel_error_x:10.2e} {c.rel_error_p:10.2e}")
