"""Trapezoid-rule evaluation of the continuous real Fourier transform in 1-D
and Hermite function eigen-checks.

On the real line the transform is

    F(y) = (2*pi)**-0.5 * integral f(x) * (cos(y*x) - sin(y*x)) dx,

and the Hermite functions are its eigenfunctions with eigenvalues following
the period-four sign pattern ``+ - - +``.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .arrays import NonFiniteError

MAX_HERMITE_ORDER = 60
EDGE_DECAY = 1e-12

DEFAULT_HALF_WIDTH = 16.0
DEFAULT_COUNT = 2048


class DecayWarning(UserWarning):
    """Integrand does not decay at the edges of the grid."""


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid of ``count`` nodes on ``[-half_width, half_width]``."""

    half_width: float
    count: int

    def __post_init__(self):
        if not (self.half_width > 0 and math.isfinite(self.half_width)):
            raise ValueError(f"half_width must be positive and finite, got {self.half_width}")
        if int(self.count) != self.count or self.count < 2:
            raise ValueError(f"count must be an integer >= 2, got {self.count}")

    @property
    def spacing(self):
        return 2.0 * self.half_width / (self.count - 1)

    @property
    def nodes(self):
        # integer numerators keep x_j == -x_{N-1-j} exactly
        j = np.arange(self.count)
        return self.half_width * (2 * j - (self.count - 1)) / (self.count - 1)

    @property
    def weights(self):
        w = np.full(self.count, self.spacing)
        w[0] = w[-1] = 0.5 * self.spacing
        return w


@dataclass(frozen=True, eq=False)
class SampledFunction:
    grid: Grid1D
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.shape != (self.grid.count,):
            raise ValueError(f"expected {self.grid.count} values, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise NonFiniteError("sampled values must be finite")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def norm(self):
        """Quadrature L2 norm."""
        return math.sqrt(quad_inner(self, self))


def default_grid():
    return Grid1D(DEFAULT_HALF_WIDTH, DEFAULT_COUNT)


def quad_inner(f, g):
    """Trapezoid approximation of the L2 inner product on a shared grid."""
    if f.grid != g.grid:
        raise ValueError("functions live on different grids")
    return float(np.sum(f.grid.weights * f.values * g.values))


def hermite(k, grid=None):
    """Sample the normalized Hermite function of order ``k`` on ``grid``.

    Uses the three-term recurrence started from ``pi**-0.25 * exp(-x**2/2)``,
    which is stable where the derivative formula is not.
    """
    if int(k) != k or not 0 <= k <= MAX_HERMITE_ORDER:
        raise ValueError(f"Hermite order must be an integer in [0, {MAX_HERMITE_ORDER}], got {k}")
    grid = grid or default_grid()
    x = grid.nodes
    prev = np.zeros_like(x)
    cur = np.pi**-0.25 * np.exp(-0.5 * x * x)
    for j in range(int(k)):
        prev, cur = cur, math.sqrt(2.0 / (j + 1)) * x * cur - math.sqrt(j / (j + 1)) * prev
    return SampledFunction(grid, cur)


def quad_rft(f, ygrid=None):
    """Trapezoid approximation of the continuous transform of ``f`` on ``ygrid``.

    ``ygrid`` defaults to the grid of ``f``. Warns with :class:`DecayWarning`
    when ``|f|`` at either edge exceeds ``1e-12``.
    """
    ygrid = ygrid or f.grid
    vals = f.values
    if max(abs(vals[0]), abs(vals[-1])) > EDGE_DECAY:
        warnings.warn("integrand has not decayed at the grid edges", DecayWarning, stacklevel=2)
    x = f.grid.nodes
    weighted = f.grid.weights * vals
    phase = np.outer(ygrid.nodes, x)
    out = ((np.cos(phase) - np.sin(phase)) @ weighted) / math.sqrt(2.0 * np.pi)
    return SampledFunction(ygrid, out)


def expected_sign(k):
    """Eigenvalue of the k-th Hermite function: ``(-1)**floor((k+1)/2)``."""
    return -1 if ((k + 1) // 2) % 2 else 1


def fitted_eigen(k, grid=None):
    """Return ``(sign, residual)`` for the k-th Hermite function.

    ``sign`` is the sign of ``<quad_rft(psi_k), psi_k>``, and ``residual``
    is ``||quad_rft(psi_k) - sign * psi_k|| / ||psi_k||``.
    """
    psi = hermite(k, grid)
    image = quad_rft(psi)
    sign = 1 if quad_inner(image, psi) >= 0 else -1
    diff = SampledFunction(psi.grid, image.values - sign * psi.values)
    return sign, diff.norm() / psi.norm()


def hermite_eigencheck(k, grid=None):
    """Relative L2 residual of the Hermite eigenrelation for order ``k``."""
    return fitted_eigen(k, grid)[1]
