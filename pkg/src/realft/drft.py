"""Discrete real Fourier transform.

The transform of a real array ``x`` of shape ``(N_1, ..., N_d)`` is

    G[k] = 1/sqrt(N_total) * sum_n x[n] * (cos(theta) - sin(theta)),
    theta = 2*pi * sum_j k_j * n_j / N_j,

i.e. the real plus the imaginary part of the unitary complex DFT. It is real
to real, orthogonal and its own inverse.

Two evaluation strategies exist. The fast one runs an iterative radix-2 FFT
per axis (the last axis uses the half-length packing trick for real input)
and sums the real and imaginary parts. The naive one evaluates the kernel
sum directly and serves as the reference; it is O(N_total**2).
"""

import functools
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .arrays import (
    NonFiniteError,
    ParityPair,
    ShapeMismatchError,
    _reflect,
    as_real_array,
    make_pair,
)

__all__ = [
    "Plan",
    "PerformanceWarning",
    "make_plan",
    "complex_dft",
    "complex_idft",
    "components",
    "anti_components",
    "rft",
    "irft",
]

# elements per block in the naive matrix evaluations (~32 MB of float64)
_BLOCK_ELEMENTS = 1 << 22
# non-power-of-two axes longer than this trigger a PerformanceWarning
_NAIVE_WARN_LENGTH = 2048


class PerformanceWarning(UserWarning):
    """A plan falls back to the quadratic kernel sum on a long axis."""


def is_power_of_two(n):
    return n >= 1 and (n & (n - 1)) == 0


def _bit_reverse_permutation(m):
    bits = m.bit_length() - 1
    idx = np.arange(m)
    rev = np.zeros(m, dtype=np.intp)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def _readonly(a):
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Plan:
    """Precomputed, immutable description of a transform of one shape.

    Attributes:
        shape: extents of the arrays this plan transforms.
        strategy: ``"fast"`` or ``"naive"`` per axis.
        twiddles: per axis, ``exp(-2j*pi*m/N)`` for ``m = 0..N-1``, each
            entry evaluated directly from its angle.
        normalization: per axis factor ``1/sqrt(N_j)``.
    """

    shape: tuple
    strategy: tuple
    twiddles: tuple
    normalization: tuple
    _bitrev: tuple
    _bitrev_half: tuple

    @property
    def size(self):
        return math.prod(self.shape)

    @property
    def scale(self):
        """Total normalization ``1/sqrt(N_total)``."""
        return 1.0 / math.sqrt(self.size)

    @property
    def all_fast(self):
        return all(s == "fast" for s in self.strategy)

    @property
    def all_naive(self):
        return all(s == "naive" for s in self.strategy)


@functools.lru_cache(maxsize=64)
def _build_plan(shape, strategy):
    twiddles, norms, strategies, bitrev, bitrev_half = [], [], [], [], []
    for n, s in zip(shape, strategy):
        if s == "auto":
            s = "fast" if is_power_of_two(n) else "naive"
            if s == "naive" and n > _NAIVE_WARN_LENGTH:
                warnings.warn(
                    f"axis of length {n} is not a power of two; using the O(N^2) kernel sum",
                    PerformanceWarning,
                    stacklevel=3,
                )
        if s not in ("fast", "naive"):
            raise ValueError(f"unknown strategy {s!r}")
        if s == "fast" and not is_power_of_two(n):
            raise ValueError(f"fast strategy needs a power-of-two extent, got {n}")
        angle = 2.0 * np.pi * np.arange(n) / n
        twiddles.append(_readonly(np.cos(angle) - 1j * np.sin(angle)))
        norms.append(1.0 / math.sqrt(n))
        strategies.append(s)
        if s == "fast":
            bitrev.append(_readonly(_bit_reverse_permutation(n)))
            bitrev_half.append(_readonly(_bit_reverse_permutation(max(n // 2, 1))))
        else:
            bitrev.append(None)
            bitrev_half.append(None)
    return Plan(
        shape=shape,
        strategy=tuple(strategies),
        twiddles=tuple(twiddles),
        normalization=tuple(norms),
        _bitrev=tuple(bitrev),
        _bitrev_half=tuple(bitrev_half),
    )


def make_plan(shape, strategy="auto"):
    """Return the (cached) plan for ``shape``.

    Args:
        shape: int or tuple of positive ints.
        strategy: ``"auto"`` (fast on power-of-two axes, naive elsewhere),
            ``"fast"``, ``"naive"``, or a per-axis tuple of those.
    """
    if isinstance(shape, (int, np.integer)):
        shape = (int(shape),)
    shape = tuple(int(n) for n in shape)
    if not shape or any(n < 1 for n in shape):
        raise ValueError(f"invalid shape {shape}")
    if isinstance(strategy, str):
        strategy = (strategy,) * len(shape)
    strategy = tuple(strategy)
    if len(strategy) != len(shape):
        raise ValueError("one strategy per axis required")
    return _build_plan(shape, strategy)


def _resolve_plan(x, plan):
    if plan is None:
        return make_plan(x.shape)
    if tuple(x.shape) != plan.shape:
        raise ShapeMismatchError(f"array shape {x.shape} does not match plan shape {plan.shape}")
    return plan


def as_complex_array(x, name="x"):
    arr = np.asarray(x, dtype=np.complex128)
    if arr.ndim == 0 or any(n < 1 for n in arr.shape):
        raise ValueError(f"{name} must have rank >= 1 and no empty axis")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError(f"{name} contains non-finite values")
    return arr


# -- 1-D kernels along the last axis ------------------------------------------


def _fft_last(z, table, bitrev):
    """Unnormalized radix-2 DIT FFT of length M along the last axis.

    ``table`` holds ``exp(-2j*pi*m/N)`` for some N that M divides.
    """
    m_len = z.shape[-1]
    if m_len == 1:
        return z.copy()
    lead = z.shape[:-1]
    z = z[..., bitrev]
    span = 2
    while span <= m_len:
        half = span // 2
        step = len(table) // span
        w = table[: half * step : step]
        blocks = z.reshape(lead + (m_len // span, span))
        even = blocks[..., :half]
        odd = blocks[..., half:] * w
        z = np.concatenate((even + odd, even - odd), axis=-1).reshape(lead + (m_len,))
        span *= 2
    return z


def _real_fft_last(x, table, bitrev_half):
    """Unnormalized full-length FFT of real data along the last axis.

    Packs even/odd samples into one complex sequence of half length,
    transforms it, and untangles the two spectra.
    """
    n = x.shape[-1]
    if n == 1:
        return x.astype(np.complex128)
    half = n // 2
    z = x[..., 0::2] + 1j * x[..., 1::2]
    zf = _fft_last(z, table, bitrev_half)
    # zr[k] = conj(Z[(half - k) mod half])
    zr = np.conj(np.roll(np.flip(zf, axis=-1), 1, axis=-1))
    even = 0.5 * (zf + zr)
    odd = -0.5j * (zf - zr)
    t = table[:half] * odd
    return np.concatenate((even + t, even - t), axis=-1)


def _naive_dft_last(z, table):
    """Unnormalized O(N^2) DFT along the last axis via the twiddle table."""
    n = z.shape[-1]
    k = np.arange(n)
    out = np.empty(z.shape, dtype=np.complex128)
    rows = max(1, _BLOCK_ELEMENTS // n)
    for start in range(0, n, rows):
        kb = k[start : start + rows]
        mat = table[np.outer(kb, k) % n]
        out[..., start : start + rows] = z @ mat.T
    return out


def _dft(x, plan, real_input):
    """Unnormalized separable DFT over every axis."""
    z = x
    axes = range(x.ndim - 1, -1, -1)
    for step, axis in enumerate(axes):
        z = np.moveaxis(z, axis, -1)
        table = plan.twiddles[axis]
        if plan.strategy[axis] == "fast":
            if step == 0 and real_input:
                z = _real_fft_last(z, table, plan._bitrev_half[axis])
            else:
                z = _fft_last(z.astype(np.complex128, copy=False), table, plan._bitrev[axis])
        else:
            z = _naive_dft_last(z.astype(np.complex128, copy=False), table)
        z = np.moveaxis(z, -1, axis)
    return np.ascontiguousarray(z)


def _naive_kernel_sum(x, plan):
    """Direct evaluation of sum_n x[n] (cos theta - sin theta), unnormalized.

    The phase is reduced exactly to an integer index modulo the lcm of the
    extents, so only ``lcm`` distinct kernel values are ever evaluated.
    """
    shape = plan.shape
    period = math.lcm(*shape)
    angle = 2.0 * np.pi * np.arange(period) / period
    cas = np.cos(angle) - np.sin(angle)
    total = plan.size
    nidx = np.unravel_index(np.arange(total), shape)
    flat = x.ravel()
    out = np.empty(total)
    rows = max(1, _BLOCK_ELEMENTS // total)
    for start in range(0, total, rows):
        kflat = np.arange(start, min(start + rows, total))
        kidx = np.unravel_index(kflat, shape)
        phase = np.zeros((len(kflat), total), dtype=np.int64)
        for kj, nj, n in zip(kidx, nidx, shape):
            phase += (np.outer(kj, nj) % n) * (period // n)
        out[start : start + len(kflat)] = cas[phase % period] @ flat
    return out.reshape(shape)


# -- public operations -------------------------------------------------------


def complex_dft(x, plan=None):
    """Unitary complex DFT, ``X[k] = N^-1/2 sum_n x[n] exp(-2j pi k.n/N)``."""
    x = as_complex_array(x)
    plan = _resolve_plan(x, plan)
    return _dft(x, plan, real_input=False) * plan.scale


def complex_idft(x, plan=None):
    """Inverse of :func:`complex_dft` (also unitary)."""
    x = as_complex_array(x)
    return np.conj(complex_dft(np.conj(x), plan))


def components(x, plan=None):
    """Cosine and negative-sine parts of the transform of a real array.

    Returns a :class:`ParityPair` ``(F1, F2)`` with ``F1 = Re X`` and
    ``F2 = Im X`` where ``X`` is the unitary complex DFT. Rounding residue of
    the wrong parity is projected out, so ``F1`` is exactly even and ``F2``
    exactly odd.
    """
    x = as_real_array(x)
    plan = _resolve_plan(x, plan)
    spec = _dft(x, plan, real_input=True) * plan.scale
    re, im = spec.real, spec.imag
    return ParityPair(0.5 * (re + _reflect(re)), 0.5 * (im - _reflect(im)))


def anti_components(p, plan=None):
    """Rebuild a real array from its (even, odd) transform components.

    Raises:
        ParityError: if the pair does not have exact even/odd symmetry.
    """
    p = make_pair(p[0], p[1])
    plan = _resolve_plan(p.even, plan)
    spec = p.even + 1j * p.odd
    return complex_idft(spec, plan).real


def rft(x, plan=None):
    """Real Fourier transform of a real array.

    With a plan whose axes are all naive, the kernel sum is evaluated
    directly; otherwise the result is ``sum_pair(components(x))``.

    >>> rft([0.0, 1.0, 0.0, 0.0])
    array([ 0.5, -0.5, -0.5,  0.5])
    """
    x = as_real_array(x)
    plan = _resolve_plan(x, plan)
    if plan.all_naive:
        return _naive_kernel_sum(x, plan) * plan.scale
    f1, f2 = components(x, plan)
    return f1 + f2


def irft(x, plan=None):
    """Inverse real Fourier transform. The transform is an involution, so
    this is the same operation as :func:`rft`."""
    return rft(x, plan)
