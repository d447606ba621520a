"""
Order-of-magnitude feasibility of a momentum-sorting demon.

To keep thermal molecules from leaking, the trap door may be no wider than
their position spread ``h / (4 pi p_rms)``. Measuring a molecule's momentum
accurately needs a soft photon (energy well below kT), which leaves the
molecule spread over ``h / (4 pi sqrt(m h nu))``. The ratio of the two is
``sqrt(3 kT / h nu)``, independent of the mass; above 1 the molecule no
longer fits through the door it was sorted for.

The "~" relations are evaluated as equalities with their 4 pi factors, so
outputs are estimates, not sharp thresholds.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass
from typing import Iterable

from .constants import BOLTZMANN_K, PLANCK_H
from .errors import NonPositiveInput

# Photon energies below this fraction of kT count as the soft-photon regime.
LOW_ENERGY_FRACTION = 0.1

CSV_HEADER = ("p_rms", "sigma_p", "door_width", "sigma_x_after", "ratio", "feasible")


@dataclass(frozen=True)
class DemonParams:
    mass: float
    temperature: float
    photon_energy: float
    h: float = PLANCK_H
    k_b: float = BOLTZMANN_K

    def __post_init__(self):
        for name in ("mass", "temperature", "photon_energy", "h", "k_b"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise NonPositiveInput(f"{name} must be positive and finite, got {v}")

    @classmethod
    def from_fraction(cls, mass: float, temperature: float, fraction: float,
                      h: float = PLANCK_H, k_b: float = BOLTZMANN_K) -> "DemonParams":
        """Photon energy given as a multiple of ``k_b T``."""
        if not fraction > 0:
            raise NonPositiveInput(f"photon fraction must be positive, got {fraction}")
        return cls(mass, temperature, fraction * k_b * temperature, h, k_b)


@dataclass(frozen=True)
class DemonReport:
    p_rms: float
    sigma_p: float
    door_width: float
    sigma_x_after: float
    ratio: float
    sorting_feasible: bool
    low_energy_photon: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def csv_row(self) -> tuple:
        return (self.p_rms, self.sigma_p, self.door_width, self.sigma_x_after,
                self.ratio, self.sorting_feasible)


def demon_feasibility(params: DemonParams) -> DemonReport:
    m, T, k, h = params.mass, params.temperature, params.k_b, params.h
    # 3*k*T and f*k*T must round identically at f = 3 so the boundary ratio is exactly 1.
    p_rms = math.sqrt(m * (3.0 * k * T))
    door = h / (4.0 * math.pi * p_rms)
    sigma_x = h / (4.0 * math.pi * math.sqrt(m * params.photon_energy))
    ratio = sigma_x / door
    return DemonReport(
        p_rms=p_rms,
        sigma_p=p_rms,
        door_width=door,
        sigma_x_after=sigma_x,
        ratio=ratio,
        sorting_feasible=ratio <= 1.0,
        low_energy_photon=params.photon_energy < LOW_ENERGY_FRACTION * k * T,
    )


def closed_form_ratio(temperature: float, photon_energy: float, k_b: float = BOLTZMANN_K) -> float:
    """``sqrt(3 kT / h nu)``, the door/spread ratio with the mass cancelled."""
    return math.sqrt(3.0 * k_b * temperature / photon_energy)


def sweep_photon_energy(params_base: DemonParams, fractions: Iterable[float]) -> list[DemonReport]:
    """One report per photon energy ``f * k_b * T``; the base photon energy is ignored."""
    fractions = list(fractions)
    if not fractions:
        raise NonPositiveInput("fractions must be nonempty")
    p = params_base
    return [demon_feasibility(DemonParams.from_fraction(p.mass, p.temperature, f, p.h, p.k_b))
            for f in fractions]


def reports_to_csv(reports: Iterable[DemonReport], fmt=lambda v: repr(v)) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in reports:
        writer.writerow([str(v).lower() if isinstance(v, bool) else fmt(v) for v in r.csv_row()])
    return buf.getvalue()
