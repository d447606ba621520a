"""
Work, heat and entropy bookkeeping for a single molecule in a box.

Sign conventions: ``work_on_system`` is work done on the gas,
``heat_to_bath`` is heat leaving the gas. All processes are treated in the
reversible limit, so ``delta_s_total`` is reported as an equality where a
physical process would only satisfy ``>=``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Literal

from .constants import BOLTZMANN_K
from .errors import (
    InvalidScenario,
    InvalidSigmas,
    InvalidVolumes,
    MismatchBeyondTolerance,
    NonPositiveTemperature,
)
from .entropy import joint_information
from .wavegrid import GaussianWindow, Grid, make_gaussian, measure_position, window_sigma_for

Mode = Literal["ontic_spread", "epistemic_left", "epistemic_right"]
MODES = ("ontic_spread", "epistemic_left", "epistemic_right")


@dataclass(frozen=True)
class ThermoLedger:
    work_on_system: float
    heat_to_bath: float
    delta_f: float
    delta_s_system: float
    delta_s_bath: float
    delta_s_total: float
    translation_energy: float
    temperature: float

    def __add__(self, other: "ThermoLedger") -> "ThermoLedger":
        """Ledger of two processes run back to back in the same bath."""
        if not isinstance(other, ThermoLedger):
            return NotImplemented
        if other.temperature != self.temperature:
            raise ValueError("cannot compose ledgers at different temperatures")
        fields = {k: getattr(self, k) + getattr(other, k) for k in _SUMMED}
        return ThermoLedger(temperature=self.temperature, **fields)

    def to_dict(self) -> dict:
        return asdict(self)


_SUMMED = ("work_on_system", "heat_to_bath", "delta_f", "delta_s_system",
           "delta_s_bath", "delta_s_total", "translation_energy")


def zero_ledger(temperature: float) -> ThermoLedger:
    return ThermoLedger(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, temperature)


def _check_temperature(temperature):
    if not (math.isfinite(temperature) and temperature > 0):
        raise NonPositiveTemperature(f"temperature must be positive, got {temperature}")


def isothermal_compression_ledger(v_initial: float, v_final: float, temperature: float,
                                  boltzmann_k: float = BOLTZMANN_K) -> ThermoLedger:
    """Quasi-static isothermal compression of a one-molecule ideal gas.

    With p = kT/V the work on the gas is ``kT ln(V_i/V_f)``; since the
    internal energy is unchanged, the same amount leaves as heat. A ratio of
    2 is the erasure of one bit of position information.
    """
    _check_temperature(temperature)
    if not (v_final > 0 and v_initial > 0 and v_final <= v_initial):
        raise InvalidVolumes(f"need 0 < v_final <= v_initial, got {v_initial}, {v_final}")
    if v_final == v_initial:
        return zero_ledger(temperature)
    log_ratio = math.log(v_initial / v_final)
    work = boltzmann_k * temperature * log_ratio
    ds_sys = -boltzmann_k * log_ratio
    ds_bath = boltzmann_k * log_ratio
    return ThermoLedger(
        work_on_system=work,
        heat_to_bath=work,
        delta_f=work,
        delta_s_system=ds_sys,
        delta_s_bath=ds_bath,
        delta_s_total=ds_sys + ds_bath,
        translation_energy=0.0,
        temperature=temperature,
    )


@dataclass(frozen=True)
class MemoryScenario:
    """A one-molecule memory in a box, reset by a piston from the right.

    ``ontic_spread``: the molecule's spread fills the box, and the piston
    genuinely compresses it by ``compression_ratio``.
    ``epistemic_left`` / ``epistemic_right``: the molecule is already confined
    to one half; only which half is unknown. ``translation_force`` is the
    optional constant force (N) the piston exerts while pushing an R molecule
    across half the box. No model for it is assumed, so it defaults to 0.
    """

    mode: Mode
    box_length: float = 1.0
    temperature: float = 300.0
    compression_ratio: float = 2.0
    translation_force: float = 0.0

    def __post_init__(self):
        if self.mode not in MODES:
            raise InvalidScenario(f"mode must be one of {MODES}, got {self.mode!r}")
        if not self.box_length > 0:
            raise InvalidScenario(f"box_length must be positive, got {self.box_length}")
        _check_temperature(self.temperature)
        if not self.compression_ratio > 1:
            raise InvalidScenario(f"compression_ratio must exceed 1, got {self.compression_ratio}")
        if self.translation_force < 0:
            raise InvalidScenario("translation_force must be nonnegative")

    @property
    def support_before(self) -> float:
        """Length accessible to the molecule before the reset."""
        if self.mode == "ontic_spread":
            return self.box_length
        return 0.5 * self.box_length


def evaluate_reset(scenario: MemoryScenario, boltzmann_k: float = BOLTZMANN_K) -> ThermoLedger:
    """Ledger of the piston reset for each memory reading.

    An L molecule never touches the piston, so nothing is exchanged. An R
    molecule is pushed from one half-box to the other: its accessible length
    stays L/2, so there is no pdV work and no entropy change. Any mechanical
    energy ``F * (L/2)`` spent moving it is reported separately and kept out
    of the free energy.
    """
    T = scenario.temperature
    if scenario.mode == "ontic_spread":
        v = scenario.box_length
        return isothermal_compression_ledger(v, v / scenario.compression_ratio, T, boltzmann_k)
    if scenario.mode == "epistemic_left":
        return zero_ledger(T)
    translation = scenario.translation_force * 0.5 * scenario.box_length
    return ThermoLedger(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, translation, T)


@dataclass(frozen=True)
class MeasurementLedger:
    """Ledger of a position measurement plus the information shifts behind it.

    ``heat_to_bath`` carries the minimum detection energy dQ = -kT dI_x
    delivered with the measuring probe. Its entropy dQ/T is booked on the
    molecule (``delta_s_system``), so ``delta_s_bath`` is zero and
    ``delta_f = W + dQ - T dS`` vanishes.
    """

    ledger: ThermoLedger
    delta_i_ox: float
    delta_i_op: float

    def to_dict(self) -> dict:
        d = self.ledger.to_dict()
        d["delta_i_ox"] = self.delta_i_ox
        d["delta_i_op"] = self.delta_i_op
        return d


def measurement_ledger(sigma_before: float, sigma_after: float, temperature: float,
                       boltzmann_k: float = BOLTZMANN_K) -> MeasurementLedger:
    """Cost of narrowing a minimum-uncertainty Gaussian from ``sigma_before`` to ``sigma_after``.

    The position information drops by ``ln(sigma_after/sigma_before)``; for a
    Gaussian the momentum information rises by exactly the same amount, and
    the momentum-form entropy rises by ``k`` times that.
    """
    _check_temperature(temperature)
    if not (sigma_after > 0 and sigma_before > 0 and sigma_after < sigma_before):
        raise InvalidSigmas(
            f"need 0 < sigma_after < sigma_before, got {sigma_before}, {sigma_after}")
    d_ix = math.log(sigma_after / sigma_before)
    d_ip = -d_ix
    ds_sys = boltzmann_k * d_ip
    heat = -temperature * boltzmann_k * d_ix
    ledger = ThermoLedger(
        work_on_system=0.0,
        heat_to_bath=heat,
        delta_f=0.0,
        delta_s_system=ds_sys,
        delta_s_bath=0.0,
        delta_s_total=ds_sys,
        translation_energy=0.0,
        temperature=temperature,
    )
    return MeasurementLedger(ledger, d_ix, d_ip)


@dataclass(frozen=True)
class MeasurementCheck:
    sigma_before: float
    sigma_after: float
    delta_h_x: float
    delta_h_p: float
    expected_delta_h_x: float
    expected_delta_h_p: float
    rel_error_x: float
    rel_error_p: float
    sigma_after_measured: float
    within_tolerance: bool
    tolerance: float = field(default=0.01)

    def to_dict(self) -> dict:
        return asdict(self)


def verify_measurement_numerically(sigma_before: float, grid: Grid, sigma_after: float | None = None,
                                   tolerance: float = 0.01, *, raise_on_mismatch: bool = True
                                   ) -> MeasurementCheck:
    """Repeat the measurement on grid states and compare entropy shifts with the closed form.

    A Gaussian of spread ``sigma_before`` (h = 1 units) is filtered by the
    Gaussian window that leaves spread ``sigma_after`` (default half), and
    both entropy reports are recomputed on the grid.
    """
    if sigma_after is None:
        sigma_after = 0.5 * sigma_before
    closed = measurement_ledger(sigma_before, sigma_after, 1.0, 1.0)
    center = grid.midpoint
    before = make_gaussian(grid, sigma_before, center=center)
    window = GaussianWindow(window_sigma_for(sigma_before, sigma_after), center)
    after = measure_position(before, window)
    rep0 = joint_information(before)
    rep1 = joint_information(after)
    dhx = rep1.h_x - rep0.h_x
    dhp = rep1.h_p - rep0.h_p
    err_x = abs(dhx - closed.delta_i_ox) / abs(closed.delta_i_ox)
    err_p = abs(dhp - closed.delta_i_op) / abs(closed.delta_i_op)
    check = MeasurementCheck(
        sigma_before=sigma_before, sigma_after=sigma_after,
        delta_h_x=dhx, delta_h_p=dhp,
        expected_delta_h_x=closed.delta_i_ox, expected_delta_h_p=closed.delta_i_op,
        rel_error_x=err_x, rel_error_p=err_p,
        sigma_after_measured=after.std(),
        within_tolerance=bool(err_x <= tolerance and err_p <= tolerance),
        tolerance=tolerance,
    )
    if raise_on_mismatch and not check.within_tolerance:
        raise MismatchBeyondTolerance(
            f"grid entropy shifts ({dhx:.6g}, {dhp:.6g}) differ from closed form "
            f"({closed.delta_i_ox:.6g}, {closed.delta_i_op:.6g}) beyond {tolerance:.0%}",
            report=check,
        )
    return check
