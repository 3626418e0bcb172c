"""Involutive real-to-real Fourier transform with kernel cos - sin."""

from .arrays import (
    NonFiniteError,
    ParityError,
    ParityPair,
    ShapeMismatchError,
    as_real_array,
    decompose,
    inner,
    is_even,
    is_odd,
    make_pair,
    norm,
    parity_reverse,
    sum_pair,
)
from .drft import (
    PerformanceWarning,
    Plan,
    anti_components,
    complex_dft,
    complex_idft,
    components,
    irft,
    make_plan,
    rft,
)

__version__ = "0.1.0"
