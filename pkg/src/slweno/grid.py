"""Uniform cell-centered phase-space grids, periodic in both directions.

Index arithmetic wraps on the fly; no ghost layers are ever stored. A
distribution is a plain (N_x, N_v) array of point values f(x_i, v_j) with the
global solution bounds attached.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MIN_CELLS = 8  # fifth-order stencils plus a one-cell shift need 7; require 8

__all__ = [
    "Grid1D",
    "PhaseGrid",
    "Distribution",
    "make_grid1d",
    "make_phase_grid",
    "extract_bounds",
    "write_snapshot",
    "read_snapshot",
]


@dataclass(frozen=True, eq=False)
class Grid1D:
    """Cell-centered uniform grid on [lo, hi] with periodic topology."""

    n: int
    lo: float
    hi: float
    dx: float
    centers: np.ndarray

    def wrap(self, i):
        """Periodic index map; accepts scalars or integer arrays."""
        return np.asarray(i) % self.n


def make_grid1d(lo: float, hi: float, n: int) -> Grid1D:
    if hi <= lo:
        raise ValueError(f"empty extent [{lo}, {hi}]")
    if n < MIN_CELLS:
        raise ValueError(f"grid too small: {n} cells, need at least {MIN_CELLS}")
    dx = (hi - lo) / n
    centers = lo + (np.arange(n) + 0.5) * dx
    centers.flags.writeable = False
    return Grid1D(n=int(n), lo=float(lo), hi=float(hi), dx=dx, centers=centers)


@dataclass(frozen=True, eq=False)
class PhaseGrid:
    """Tensor grid over x in [0, L] and v in [-V_c, V_c]."""

    gx: Grid1D
    gv: Grid1D

    @property
    def shape(self) -> tuple[int, int]:
        return (self.gx.n, self.gv.n)

    @property
    def cell_area(self) -> float:
        return self.gx.dx * self.gv.dx


def make_phase_grid(L: float, V_c: float, N_x: int, N_v: int) -> PhaseGrid:
    if L <= 0 or V_c <= 0:
        raise ValueError("domain extents must be positive")
    return PhaseGrid(gx=make_grid1d(0.0, L, N_x), gv=make_grid1d(-V_c, V_c, N_v))


@dataclass
class Distribution:
    """Point values f(x_i, v_j), shape (N_x, N_v), with frozen global bounds.

    The bounds come from the initial condition and are never updated during a
    run; with the flux limiter enabled all values stay inside them up to
    machine precision.
    """

    values: np.ndarray
    bounds: tuple[float, float]

    def __post_init__(self) -> None:
        f_m, f_M = self.bounds
        if not f_m <= f_M:
            raise ValueError(f"invalid bounds ({f_m}, {f_M})")

    def bound_excess(self) -> float:
        """Largest distance any value lies outside [f_m, f_M] (0 if inside)."""
        f_m, f_M = self.bounds
        lo = f_m - self.values.min() if np.isfinite(f_m) else 0.0
        hi = self.values.max() - f_M if np.isfinite(f_M) else 0.0
        return max(0.0, lo, hi)


def extract_bounds(values: np.ndarray) -> tuple[float, float]:
    """Global (min, max) of the sampled initial condition."""
    values = np.asarray(values)
    if values.size == 0:
        raise ValueError("empty array")
    return float(values.min()), float(values.max())


def write_snapshot(path, values: np.ndarray, grid: PhaseGrid, t: float) -> None:
    """Plain-text matrix dump: header "N_x N_v L V_c t", then N_v rows of N_x
    values in full double precision."""
    values = np.asarray(values)
    with open(path, "w") as fh:
        fh.write(
            f"{grid.gx.n} {grid.gv.n} {grid.gx.hi:.17g} {grid.gv.hi:.17g} {t:.17g}\n"
        )
        np.savetxt(fh, values.T, fmt="%.17g")


def read_snapshot(path) -> tuple[np.ndarray, dict]:
    with open(path) as fh:
        head = fh.readline().split()
        meta = {
            "N_x": int(head[0]),
            "N_v": int(head[1]),
            "L": float(head[2]),
            "V_c": float(head[3]),
            "t": float(head[4]),
        }
        rows = np.loadtxt(fh)
    values = rows.reshape(meta["N_v"], meta["N_x"]).T
    return values, meta
