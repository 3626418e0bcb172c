"""Slow, independent reference implementations used only by the tests.

Pure Python loops over ``math.cos``/``math.sin``: no numpy FFT, no twiddle
tables shared with the library.
"""

import itertools
import math


def _indices(shape):
    return list(itertools.product(*(range(n) for n in shape)))


def _phase(k, n, shape):
    return 2.0 * math.pi * sum(kj * nj / nn for kj, nj, nn in zip(k, n, shape))


def brute_dft(values, shape):
    """Unitary complex DFT of a dict/flat list indexed row-major."""
    idx = _indices(shape)
    scale = 1.0 / math.sqrt(math.prod(shape))
    flat = list(values)
    out = []
    for k in idx:
        acc = 0j
        for pos, n in enumerate(idx):
            t = _phase(k, n, shape)
            acc += flat[pos] * complex(math.cos(t), -math.sin(t))
        out.append(acc * scale)
    return out


def brute_rft(values, shape):
    idx = _indices(shape)
    scale = 1.0 / math.sqrt(math.prod(shape))
    flat = list(values)
    out = []
    for k in idx:
        acc = 0.0
        for pos, n in enumerate(idx):
            t = _phase(k, n, shape)
            acc += flat[pos] * (math.cos(t) - math.sin(t))
        out.append(acc * scale)
    return out


def brute_conv(a, b):
    """Circular convolution of two equal-length 1-D sequences."""
    n = len(a)
    return [sum(a[(i - m) % n] * b[m] for m in range(n)) for i in range(n)]
