"""
Single-particle pure states on a uniform 1D grid.

Units are natural with h = 1. The position/momentum pair is linked by the
unitary kernel ``exp(-2j*pi*p*x)``:

    phi(p) = sum_i psi(x_i) exp(-2j pi p x_i) dx

so that the conjugate grid has spacing ``dp = 1/(n dx)`` and a Gaussian
with density standard deviation ``sigma_x`` has momentum spread
``1/(4 pi sigma_x)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Literal, Union

import numpy as np
from scipy.interpolate import CubicSpline

from .constants import NORMALIZATION_TOL, TAIL_FRACTION, TAIL_MASS_TOL
from .errors import (
    GenerationFailed,
    GridTooSmall,
    InvalidGrid,
    InvalidSmoothing,
    NonPositiveSigma,
    NotNormalized,
    VanishingOverlap,
)

# Gaussian mass allowed outside the grid by make_gaussian.
GAUSSIAN_OUTSIDE_TOL = 1e-10
MIN_OVERLAP = 1e-12


@dataclass(frozen=True)
class Grid:
    """Uniform grid ``x_i = x0 + i*dx`` for ``i = 0..n-1``."""

    n: int
    dx: float
    x0: float = 0.0

    def __post_init__(self):
        n = self.n
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise InvalidGrid(f"n must be an integer, got {n!r}")
        if n < 16 or (n & (n - 1)) != 0:
            raise InvalidGrid(f"n must be a power of two >= 16, got {n}")
        if not (math.isfinite(self.dx) and self.dx > 0):
            raise InvalidGrid(f"dx must be positive and finite, got {self.dx}")
        if not math.isfinite(self.x0) or not math.isfinite(self.n * self.dx):
            raise InvalidGrid("grid extent must be finite")
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "dx", float(self.dx))
        object.__setattr__(self, "x0", float(self.x0))

    @classmethod
    def centered(cls, n: int, dx: float) -> "Grid":
        """Grid of ``n`` points whose index ``n/2`` sits at the origin."""
        return cls(n, dx, -(n // 2) * dx)

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(self.n)

    @property
    def extent(self) -> float:
        return self.n * self.dx

    @property
    def midpoint(self) -> float:
        return self.x0 + 0.5 * (self.n - 1) * self.dx

    def conjugate(self) -> "Grid":
        """Momentum grid: spacing ``1/(n dx)``, zero frequency at index ``n/2``."""
        dp = 1.0 / (self.n * self.dx)
        return Grid(self.n, dp, -(self.n // 2) * dp)


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.complex128, copy=True)
    a.flags.writeable = False
    return a


def tail_mass(density: np.ndarray, spacing: float, fraction: float = TAIL_FRACTION) -> float:
    """Probability in the outermost ``fraction`` of samples at both ends combined."""
    k = max(1, int(len(density) * fraction))
    return float((density[:k].sum() + density[-k:].sum()) * spacing)


def _moments(density, coords, spacing):
    mean = float(np.sum(density * coords) * spacing)
    var = float(np.sum(density * (coords - mean) ** 2) * spacing)
    return mean, math.sqrt(var)


@dataclass(frozen=True)
class PositionState:
    """Samples of psi(x) on ``grid``.

    ``sharp_edges`` marks idealized box states whose momentum density decays
    only as 1/p^2; their momentum entropy carries a grid-truncation error.
    """

    grid: Grid
    amplitudes: np.ndarray
    sharp_edges: bool = False

    def __post_init__(self):
        amps = _readonly(self.amplitudes)
        if amps.shape != (self.grid.n,):
            raise InvalidGrid(f"expected {self.grid.n} amplitudes, got shape {amps.shape}")
        if not np.all(np.isfinite(amps)):
            raise NotNormalized("amplitudes contain non-finite values")
        object.__setattr__(self, "amplitudes", amps)
        norm = self.norm()
        if abs(norm - 1.0) > NORMALIZATION_TOL:
            raise NotNormalized(f"sum |psi|^2 dx = {norm!r}, expected 1")
        tail = tail_mass(self.density, self.grid.dx)
        if tail >= TAIL_MASS_TOL:
            raise GridTooSmall(f"tail mass {tail:.3e} >= {TAIL_MASS_TOL:g}; state does not fit the grid")

    @property
    def density(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm(self) -> float:
        return float(np.sum(self.density) * self.grid.dx)

    def mean(self) -> float:
        return _moments(self.density, self.grid.x, self.grid.dx)[0]

    def std(self) -> float:
        return _moments(self.density, self.grid.x, self.grid.dx)[1]


@dataclass(frozen=True)
class MomentumState:
    """Samples of phi(p) on the conjugate grid.

    ``position_grid`` keeps the origin needed to transform back.
    """

    grid: Grid
    amplitudes: np.ndarray
    position_grid: Grid = field(repr=False, default=None)

    def __post_init__(self):
        amps = _readonly(self.amplitudes)
        if amps.shape != (self.grid.n,):
            raise InvalidGrid(f"expected {self.grid.n} amplitudes, got shape {amps.shape}")
        object.__setattr__(self, "amplitudes", amps)
        if self.position_grid is None:
            dx = 1.0 / (self.grid.n * self.grid.dx)
            object.__setattr__(self, "position_grid", Grid.centered(self.grid.n, dx))
        norm = self.norm()
        if abs(norm - 1.0) > NORMALIZATION_TOL:
            raise NotNormalized(f"sum |phi|^2 dp = {norm!r}, expected 1")

    @property
    def density(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm(self) -> float:
        return float(np.sum(self.density) * self.grid.dx)

    def mean(self) -> float:
        return _moments(self.density, self.grid.x, self.grid.dx)[0]

    def std(self) -> float:
        return _moments(self.density, self.grid.x, self.grid.dx)[1]


def _normalized(grid: Grid, psi: np.ndarray) -> np.ndarray:
    norm = float(np.sum(np.abs(psi) ** 2) * grid.dx)
    return psi / math.sqrt(norm)


def make_gaussian(grid: Grid, sigma_x: float, center: float = 0.0,
                  momentum_shift: float = 0.0) -> PositionState:
    """Gaussian with density standard deviation ``sigma_x``.

    The optional ``momentum_shift`` multiplies by ``exp(2j pi k x)``, moving
    the momentum density by ``k``.
    """
    if not sigma_x > 0:
        raise NonPositiveSigma(f"sigma_x must be positive, got {sigma_x}")
    lo = grid.x0 - 0.5 * grid.dx
    hi = grid.x0 + (grid.n - 0.5) * grid.dx
    if not lo < center < hi:
        raise GridTooSmall(f"center {center} lies outside the grid [{lo}, {hi}]")
    scale = sigma_x * math.sqrt(2.0)
    outside = 0.5 * math.erfc((center - lo) / scale) + 0.5 * math.erfc((hi - center) / scale)
    if outside >= GAUSSIAN_OUTSIDE_TOL:
        raise GridTooSmall(
            f"Gaussian mass outside grid {outside:.3e}; need extent of roughly 14 sigma")
    x = grid.x
    psi = np.exp(-((x - center) ** 2) / (4.0 * sigma_x**2)).astype(np.complex128)
    if momentum_shift:
        psi = psi * np.exp(2j * np.pi * momentum_shift * x)
    return PositionState(grid, _normalized(grid, psi))


def make_uniform(grid: Grid, support_length: float, center: float = 0.0,
                 edge_smoothing: float = 0.0) -> PositionState:
    """Box state on ``[center - L/2, center + L/2)``.

    With ``edge_smoothing = w > 0`` the amplitude rises as a raised cosine over
    the first and last ``w`` of the support, which shortens the flat top and
    restores fast momentum decay. ``w = 0`` gives the sharp box.
    """
    if not support_length > 0:
        raise GridTooSmall(f"support_length must be positive, got {support_length}")
    if not 0.0 <= edge_smoothing < support_length / 4:
        raise InvalidSmoothing(
            f"edge_smoothing must lie in [0, {support_length / 4}), got {edge_smoothing}")
    a = center - 0.5 * support_length
    b = center + 0.5 * support_length
    margin = TAIL_FRACTION * grid.extent
    if a < grid.x0 + margin or b > grid.x0 + grid.extent - margin:
        raise GridTooSmall(f"support [{a}, {b}] does not fit the grid with a 5% margin")

    x = grid.x
    eps = 1e-9 * grid.dx
    inside = (x >= a - eps) & (x < b - eps)
    amp = inside.astype(float)
    if edge_smoothing > 0:
        w = edge_smoothing
        rise = 0.5 * (1.0 - np.cos(np.pi * np.clip((x - a) / w, 0.0, 1.0)))
        fall = 0.5 * (1.0 - np.cos(np.pi * np.clip((b - x) / w, 0.0, 1.0)))
        amp = amp * rise * fall
    if not np.any(amp > 0):
        raise GridTooSmall("support contains no grid samples")
    return PositionState(grid, _normalized(grid, amp.astype(np.complex128)),
                         sharp_edges=edge_smoothing == 0)


def to_momentum(state: PositionState) -> MomentumState:
    grid = state.grid
    pgrid = grid.conjugate()
    alternating = np.where(np.arange(grid.n) % 2 == 0, 1.0, -1.0)
    phase = np.exp(-2j * np.pi * pgrid.x * grid.x0)
    phi = grid.dx * phase * np.fft.fft(state.amplitudes * alternating)
    return MomentumState(pgrid, phi, grid)


def to_position(mstate: MomentumState) -> PositionState:
    grid = mstate.position_grid
    pgrid = mstate.grid
    alternating = np.where(np.arange(grid.n) % 2 == 0, 1.0, -1.0)
    phase = np.exp(2j * np.pi * pgrid.x * grid.x0)
    psi = alternating * (pgrid.dx * grid.n) * np.fft.ifft(mstate.amplitudes * phase)
    return PositionState(grid, psi)


@dataclass(frozen=True)
class GaussianWindow:
    """Amplitude filter ``exp(-(x-c)^2 / (4 sigma_w^2))``.

    On a Gaussian state of spread s the result has spread
    ``(1/s^2 + 1/sigma_w^2)^(-1/2)``.
    """

    sigma_w: float
    center: float = 0.0

    def __post_init__(self):
        if not self.sigma_w > 0:
            raise NonPositiveSigma(f"sigma_w must be positive, got {self.sigma_w}")

    def profile(self, x):
        return np.exp(-((x - self.center) ** 2) / (4.0 * self.sigma_w**2))


@dataclass(frozen=True)
class HalfBox:
    """Indicator of one side of ``split`` (defaults to the state's mean position)."""

    side: Literal["left", "right"]
    split: float | None = None

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")

    def profile(self, x, split):
        return (x < split if self.side == "left" else x >= split).astype(float)


Window = Union[GaussianWindow, HalfBox, np.ndarray, Callable[[np.ndarray], np.ndarray]]


def window_sigma_for(sigma_before: float, sigma_after: float) -> float:
    """Gaussian window width taking a Gaussian of spread ``sigma_before`` to ``sigma_after``."""
    if not 0 < sigma_after < sigma_before:
        raise NonPositiveSigma("need 0 < sigma_after < sigma_before")
    return 1.0 / math.sqrt(1.0 / sigma_after**2 - 1.0 / sigma_before**2)


def measure_position(state: PositionState, window: Window) -> PositionState:
    """Filter the amplitudes by a window profile and renormalize."""
    x = state.grid.x
    if isinstance(window, HalfBox):
        split = state.mean() if window.split is None else window.split
        profile = window.profile(x, split)
    elif isinstance(window, GaussianWindow):
        profile = window.profile(x)
    elif callable(window):
        profile = np.asarray(window(x))
    else:
        profile = np.asarray(window)
    if profile.shape != x.shape:
        raise InvalidGrid(f"window profile has shape {profile.shape}, expected {x.shape}")
    psi = state.amplitudes * profile
    norm = float(np.sum(np.abs(psi) ** 2) * state.grid.dx)
    if not norm > MIN_OVERLAP:
        raise VanishingOverlap(f"post-measurement norm {norm:.3e} underflows")
    return PositionState(state.grid, psi / math.sqrt(norm), sharp_edges=state.sharp_edges)


def random_state(seed: int, grid: Grid, smoothness: float = 0.3, *,
                 max_retries: int = 32) -> PositionState:
    """Seeded superposition of one to four Gaussian packets.

    ``smoothness`` sets the packet width scale (position units). Packets sit
    within ``3*smoothness`` of the grid midpoint with random boosts, so both
    densities are smooth and decay fast on a grid that is large enough.
    Draws that violate the tail invariants in either representation are
    rejected and redrawn from the same stream.
    """
    if not smoothness > 0:
        raise NonPositiveSigma(f"smoothness must be positive, got {smoothness}")
    rng = np.random.default_rng(seed)
    x = grid.x
    for _ in range(max_retries):
        k = int(rng.integers(1, 5))
        centers = grid.midpoint + smoothness * rng.uniform(-3.0, 3.0, k)
        widths = smoothness * rng.uniform(0.5, 1.5, k)
        boosts = rng.uniform(-3.0, 3.0, k) / (4.0 * np.pi * smoothness)
        coefs = rng.normal(size=k) + 1j * rng.normal(size=k)
        psi = np.zeros(grid.n, dtype=np.complex128)
        for c, w, q, z in zip(centers, widths, boosts, coefs):
            psi += z * np.exp(-((x - c) ** 2) / (4.0 * w**2) + 2j * np.pi * q * (x - c))
        norm = float(np.sum(np.abs(psi) ** 2) * grid.dx)
        if not norm > MIN_OVERLAP:
            continue
        try:
            state = PositionState(grid, psi / math.sqrt(norm))
        except GridTooSmall:
            continue
        mom = to_momentum(state)
        if tail_mass(mom.density, mom.grid.dx) < TAIL_MASS_TOL:
            return state
    raise GenerationFailed(f"no admissible state after {max_retries} draws (seed={seed})")


def scale_state(state: PositionState, a: float) -> PositionState:
    """Dilation ``sqrt(a) psi(a x)`` about the origin, resampled by cubic splines."""
    if not a > 0:
        raise ValueError(f"scale factor must be positive, got {a}")
    if a == 1:
        return state
    x = state.grid.x
    y = a * x
    psi = state.amplitudes
    re = CubicSpline(x, psi.real, extrapolate=False)(y)
    im = CubicSpline(x, psi.imag, extrapolate=False)(y)
    scaled = np.nan_to_num(re + 1j * im, nan=0.0) * math.sqrt(a)
    norm = float(np.sum(np.abs(scaled) ** 2) * state.grid.dx)
    if not norm > MIN_OVERLAP:
        raise GridTooSmall("scaled state left the grid")
    try:
        return PositionState(state.grid, scaled / math.sqrt(norm))
    except GridTooSmall as exc:
        raise GridTooSmall(f"scaled state (a={a}) does not fit the grid: {exc}") from None


def translate(state: PositionState, steps: int) -> PositionState:
    """Shift by an integer number of samples (circular; the tails are negligible)."""
    return PositionState(state.grid, np.roll(state.amplitudes, steps), state.sharp_edges)


def boost(state: PositionState, momentum: float) -> PositionState:
    """Multiply by ``exp(2j pi momentum x)``."""
    phase = np.exp(2j * np.pi * momentum * state.grid.x)
    return PositionState(state.grid, state.amplitudes * phase, state.sharp_edges)


def save_state(state: PositionState, fh) -> None:
    """Write the text format: three header lines, then ``re im`` per sample."""
    g = state.grid
    fh.write(f"# n {g.n}\n# dx {g.dx!r}\n# x0 {g.x0!r}\n")
    for z in state.amplitudes:
        fh.write(f"{float(z.real)!r} {float(z.imag)!r}\n")


def load_state(fh) -> PositionState:
    header = {}
    values = []
    for line in fh:
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, val = line[1:].split()
            header[key] = val
        else:
            re, im = line.split()
            values.append(complex(float(re), float(im)))
    try:
        grid = Grid(int(header["n"]), float(header["dx"]), float(header["x0"]))
    except KeyError as exc:
        raise InvalidGrid(f"missing header field {exc}") from None
    return PositionState(grid, np.array(values))
