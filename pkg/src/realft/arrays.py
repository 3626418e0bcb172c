"""Real sample arrays, the discrete parity operator and parity decomposition.

Arrays are plain ``numpy.ndarray`` objects of dtype float64. The helpers here
validate them, reflect them through the origin (modular index negation) and
split them into even and odd parts.
"""

from typing import NamedTuple

import numpy as np


class NonFiniteError(ValueError):
    """Input contains NaN or infinite values."""


class ShapeMismatchError(ValueError):
    """Two arrays that must share a shape do not."""


class ParityError(ValueError):
    """An array lacks the parity structure an operation requires."""


def as_real_array(x, name="x"):
    """Return ``x`` as a validated float64 array of rank >= 1.

    Raises:
        ValueError: if ``x`` is complex, zero-rank or has an empty axis.
        NonFiniteError: if any element is NaN or infinite.
    """
    arr = np.asarray(x)
    if np.iscomplexobj(arr):
        raise ValueError(f"{name} must be real-valued")
    arr = np.asarray(arr, dtype=np.float64)
    if arr.ndim == 0:
        raise ValueError(f"{name} must have rank >= 1")
    if any(n < 1 for n in arr.shape):
        raise ValueError(f"{name} has an empty axis: shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError(f"{name} contains non-finite values")
    return arr


def check_same_shape(x, y):
    if x.shape != y.shape:
        raise ShapeMismatchError(f"shape mismatch: {x.shape} vs {y.shape}")


def _reflect(x):
    # n -> (N - n) mod N on every axis; works for any dtype
    out = x
    for axis in range(x.ndim):
        out = np.roll(np.flip(out, axis=axis), 1, axis=axis)
    return out


def parity_reverse(x):
    """Reflect ``x`` through the origin: ``out[n] = x[(-n) mod N]`` per axis.

    Index 0 on every axis is a fixed point, as is ``N/2`` for even ``N``.

    >>> parity_reverse([1.0, 2.0, 3.0, 4.0])
    array([1., 4., 3., 2.])
    """
    return _reflect(as_real_array(x))


def is_even(x):
    """Exact structural test ``x == parity_reverse(x)``."""
    x = as_real_array(x)
    return bool(np.array_equal(x, _reflect(x)))


def is_odd(x):
    """Exact structural test ``x == -parity_reverse(x)``."""
    x = as_real_array(x)
    return bool(np.array_equal(x, -_reflect(x)))


class ParityPair(NamedTuple):
    """An (even, odd) pair of equally shaped real arrays.

    Construct through :func:`make_pair` to get the symmetry checks; the
    plain tuple constructor does not validate.
    """

    even: np.ndarray
    odd: np.ndarray

    @property
    def shape(self):
        return self.even.shape


def make_pair(even, odd):
    """Build a validated :class:`ParityPair`.

    Raises:
        ShapeMismatchError: if the two parts differ in shape.
        ParityError: if ``even`` is not exactly even or ``odd`` not exactly odd.
    """
    even = as_real_array(even, "even")
    odd = as_real_array(odd, "odd")
    check_same_shape(even, odd)
    if not np.array_equal(even, _reflect(even)):
        raise ParityError("even part is not parity-even")
    if not np.array_equal(odd, -_reflect(odd)):
        raise ParityError("odd part is not parity-odd")
    return ParityPair(even, odd)


def decompose(x):
    """Split ``x`` into its parity-even and parity-odd parts.

    ``even = (x + Px) / 2`` and ``odd = (x - Px) / 2``. Both parts satisfy
    their symmetry exactly, since reflection is an index permutation and
    floating-point addition is commutative.
    """
    x = as_real_array(x)
    px = _reflect(x)
    return ParityPair(0.5 * (x + px), 0.5 * (x - px))


def sum_pair(p):
    """Recombine a parity pair by pointwise addition."""
    even = as_real_array(p[0], "even")
    odd = as_real_array(p[1], "odd")
    check_same_shape(even, odd)
    return even + odd


def inner(x, y):
    """Unweighted inner product ``sum(x * y)`` over the flattened arrays.

    The reduction is numpy's pairwise sum over the row-major flattening, so
    the result is reproducible bit for bit for a given input.
    """
    x = as_real_array(x)
    y = as_real_array(y, "y")
    check_same_shape(x, y)
    return float(np.sum(x.ravel() * y.ravel()))


def norm(x, which="two"):
    """l1, l2 or l-infinity norm of the flattened array.

    ``which`` is one of ``"one"``, ``"two"``, ``"inf"`` (``1``, ``2`` and
    ``np.inf`` are accepted too).
    """
    flat = as_real_array(x).ravel()
    if which in ("one", 1):
        return float(np.sum(np.abs(flat)))
    if which in ("two", 2):
        return float(np.sqrt(np.sum(flat * flat)))
    if which in ("inf", np.inf):
        return float(np.max(np.abs(flat)))
    raise ValueError(f"unknown norm {which!r}")
