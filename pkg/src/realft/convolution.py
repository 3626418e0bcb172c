"""Circular convolution and its spectral forms under the real transform.

With ``A = rft(a)``, ``B = rft(b)`` and ``P`` the parity reversal, the
transform of a circular convolution obeys the four-term rule

    rft(a * b) / sqrt(N) = (A.B + A.PB + PA.B - PA.PB) / 2,

and dually ``rft(a . b) = (A*B + A*PB + PA*B - PA*PB) / (2 sqrt(N))``.
When either input is parity-even the cross terms cancel and
``rft(a * b) / sqrt(N) = A.B``.
"""

import math

import numpy as np

from .arrays import ParityError, _reflect, as_real_array, check_same_shape, is_even
from .drft import _resolve_plan, as_complex_array, complex_dft, components, rft

__all__ = [
    "conv_direct",
    "conv_spectral",
    "conv_spectral_even",
    "product_spectrum",
    "complex_conv_check",
    "linear_convolve",
]


def _circular(a, b):
    # Sequential sum over m of b[m] * a[(n - m) mod N]; any dtype.
    out = np.zeros(a.shape, dtype=np.result_type(a, b, np.float64))
    axes = tuple(range(a.ndim))
    for m in np.ndindex(*a.shape):
        bm = b[m]
        if bm != 0:
            out += bm * np.roll(a, m, axis=axes)
    return out


def conv_direct(a, b):
    """Circular convolution by direct summation, O(N_total**2).

    ``out[n] = sum_m a[(n - m) mod N] * b[m]``, per axis.
    """
    a = as_real_array(a, "a")
    b = as_real_array(b, "b")
    check_same_shape(a, b)
    return _circular(a, b)


def _four_term(fa, fb, op):
    pa, pb = _reflect(fa), _reflect(fb)
    return 0.5 * (op(fa, fb) + op(fa, pb) + op(pa, fb) - op(pa, pb))


def conv_spectral(a, b, plan=None):
    """Circular convolution through the four-term spectral rule."""
    a = as_real_array(a, "a")
    b = as_real_array(b, "b")
    check_same_shape(a, b)
    plan = _resolve_plan(a, plan)
    spec = _four_term(rft(a, plan), rft(b, plan), np.multiply)
    return rft(math.sqrt(plan.size) * spec, plan)


def conv_spectral_even(a, b, plan=None):
    """Circular convolution through the two-term rule ``rft(a*b) = sqrt(N) A.B``.

    Raises:
        ParityError: if neither input is exactly parity-even; use
            :func:`conv_spectral` in that case.
    """
    a = as_real_array(a, "a")
    b = as_real_array(b, "b")
    check_same_shape(a, b)
    if not (is_even(a) or is_even(b)):
        raise ParityError("neither input is parity-even; the four-term rule is required")
    plan = _resolve_plan(a, plan)
    return rft(math.sqrt(plan.size) * rft(a, plan) * rft(b, plan), plan)


def product_spectrum(a, b, plan=None):
    """Transform of the pointwise product ``a.b`` built from convolutions of
    the two transforms."""
    a = as_real_array(a, "a")
    b = as_real_array(b, "b")
    check_same_shape(a, b)
    plan = _resolve_plan(a, plan)
    return _four_term(rft(a, plan), rft(b, plan), _circular) / math.sqrt(plan.size)


def _residual(lhs, rhs, ref):
    if ref == 0:
        return 0.0
    return float(np.max(np.abs(lhs - rhs)) / ref)


def complex_conv_check(a, b, plan=None):
    """Largest relative residual among the complex convolution/product rules
    and their cosine/sine component forms.

    Checks, with ``X = complex_dft`` and ``(F1, F2)`` its real and imaginary
    parts::

        X(a*b) / sqrt(N) = X(a) X(b)
        X(a.b)           = X(a) * X(b) / sqrt(N)
        F1(a*b) / sqrt(N) = F1a F1b - F2a F2b
        F2(a*b) / sqrt(N) = F1a F2b + F2a F1b
        F1(a.b) = (F1a * F1b - F2a * F2b) / sqrt(N)
        F2(a.b) = (F1a * F2b + F2a * F1b) / sqrt(N)

    Real inputs enter the complex rules with zero imaginary part. Residuals
    of the convolution rules are divided by ``max|X(a)| max|X(b)|``, those of
    the product rules by ``||a||_2 ||b||_2 / sqrt(N)``; both bound the size
    of the terms involved.
    """
    a = as_real_array(a, "a")
    b = as_real_array(b, "b")
    check_same_shape(a, b)
    plan = _resolve_plan(a, plan)
    root = math.sqrt(plan.size)
    ac, bc = as_complex_array(a), as_complex_array(b)
    conv = _circular(a, b)
    prod = a * b
    xa, xb = complex_dft(ac, plan), complex_dft(bc, plan)
    f1a, f2a = components(a, plan)
    f1b, f2b = components(b, plan)
    f1c, f2c = components(conv, plan)
    f1p, f2p = components(prod, plan)
    conv_ref = float(np.max(np.abs(xa)) * np.max(np.abs(xb)))
    prod_ref = float(np.linalg.norm(a) * np.linalg.norm(b)) / root
    residuals = [
        _residual(complex_dft(_circular(ac, bc), plan) / root, xa * xb, conv_ref),
        _residual(complex_dft(ac * bc, plan), _circular(xa, xb) / root, prod_ref),
        _residual(f1c / root, f1a * f1b - f2a * f2b, conv_ref),
        _residual(f2c / root, f1a * f2b + f2a * f1b, conv_ref),
        _residual(f1p, (_circular(f1a, f1b) - _circular(f2a, f2b)) / root, prod_ref),
        _residual(f2p, (_circular(f1a, f2b) + _circular(f2a, f1b)) / root, prod_ref),
    ]
    return max(residuals)


def next_power_of_two(n):
    return 1 << max(0, (int(n) - 1).bit_length())


def linear_convolve(a, b, method="direct"):
    """Linear (non-wrapping) convolution via zero padding.

    Each axis is padded to the next power of two >= ``Na + Nb - 1``, the
    circular convolution is taken with ``method`` (``"direct"``,
    ``"spectral"`` or ``"spectral-even"``), and the result is trimmed to
    ``Na + Nb - 1``.
    """
    a = as_real_array(a, "a")
    b = as_real_array(b, "b")
    if a.ndim != b.ndim:
        raise ValueError("inputs must have the same rank")
    full = tuple(na + nb - 1 for na, nb in zip(a.shape, b.shape))
    padded = tuple(next_power_of_two(n) for n in full)
    pa = np.zeros(padded)
    pb = np.zeros(padded)
    pa[tuple(slice(0, n) for n in a.shape)] = a
    pb[tuple(slice(0, n) for n in b.shape)] = b
    out = CONVOLVERS[method](pa, pb)
    return out[tuple(slice(0, n) for n in full)]


CONVOLVERS = {
    "direct": conv_direct,
    "spectral": conv_spectral,
    "spectral-even": conv_spectral_even,
}
