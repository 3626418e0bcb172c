"""
Convolution under the real transform
====================================

Products and convolutions do not map to single products as with the complex
DFT. The transform of a circular convolution needs four terms built from the
two transforms and their reflections, unless one input is even.
"""

# %%
import math

import numpy as np

import realft as rf
from realft.convolution import conv_direct, conv_spectral, conv_spectral_even, product_spectrum

rng = np.random.default_rng(42)
n = 256
a, b = rng.uniform(-1, 1, (2, n))

# %% [markdown]
# The four-term rule, checked numerically.

# %%
A, B = rf.rft(a), rf.rft(b)
PA, PB = rf.parity_reverse(A), rf.parity_reverse(B)
lhs = rf.rft(conv_direct(a, b)) / math.sqrt(n)
rhs = 0.5 * (A * B + A * PB + PA * B - PA * PB)
print("max |lhs - rhs| =", np.max(np.abs(lhs - rhs)))

# %% [markdown]
# Using it as a convolution algorithm gives the same result as direct
# summation.

# %%
print("spectral vs direct:", np.max(np.abs(conv_spectral(a, b) - conv_direct(a, b))))
print("product rule      :", np.max(np.abs(product_spectrum(a, b) - rf.rft(a * b))))

# %% [markdown]
# With an even window the cross terms cancel and a plain product suffices.

# %%
k = np.minimum(np.arange(n), n - np.arange(n))
window = np.exp(-0.5 * (k / 4.0) ** 2)
print("window is even:", rf.is_even(window))
smoothed = conv_spectral_even(window, b)
print("two-term vs direct:", np.max(np.abs(smoothed - conv_direct(window, b))))

try:
    conv_spectral_even(a, b)
except rf.ParityError as exc:
    print("neither even ->", exc)
