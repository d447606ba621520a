"""Door width against post-measurement spread for a few gases and photon energies."""

import numpy as np

from landauer.demon import DemonParams, sweep_photon_energy

AMU = 1.66053906660e-27
GASES = {"H2": 2.016, "He": 4.0026, "N2": 28.014, "Ar": 39.948, "Xe": 131.29}
FRACTIONS = np.array([1e-3, 1e-2, 0.1, 0.5, 1.0, 3.0, 10.0])

print(f"{'gas':>4} {'T/K':>6} {'f = hv/kT':>10} {'door/m':>12} {'spread/m':>12} {'ratio':>9} sortable")
for name, amu in GASES.items():
    for T in (77.0, 300.0):
        base = DemonParams.from_fraction(amu * AMU, T, 1.0)
        for f, r in zip(FRACTIONS, sweep_photon_energy(base, FRACTIONS)):
            print(f"{name:>4} {T:6.0f} {f:10.3g} {r.door_width:12.4e} {r.sigma_x_after:12.4e} "
                  f"{r.ratio:9.4f} {'yes' if r.sorting_feasible else 'no'}")
