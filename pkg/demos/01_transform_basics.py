"""
Real Fourier transform basics
=============================

The transform maps a real array to a real array of the same shape and is its
own inverse. Here we look at a few small cases, compare with the complex DFT,
and check the parity behaviour.
"""

# %%
import numpy as np

import realft as rf

# %% [markdown]
# A shifted delta. The complex DFT has real and imaginary parts; the real
# transform is their sum.

# %%
x = np.array([0.0, 1.0, 0.0, 0.0])
X = rf.complex_dft(x)
print("complex DFT :", np.round(X, 12))
print("rft         :", rf.rft(x))
print("rft(rft(x)) :", np.round(rf.rft(rf.rft(x)), 12))

# %% [markdown]
# Components: the cosine part is even, the negative-sine part odd, and
# adding them gives the transform back.

# %%
f1, f2 = rf.components(x)
print("F1 =", f1, " F2 =", f2)
print("sum_pair == rft:", np.array_equal(rf.sum_pair((f1, f2)), rf.rft(x)))

# %% [markdown]
# Parity. Even inputs produce even outputs (equal to the real part of the
# complex DFT); odd inputs produce odd outputs (equal to the imaginary part).

# %%
rng = np.random.default_rng(0)
even, odd = rf.decompose(rng.uniform(-1, 1, 16))
print("even in -> even out:", np.allclose(rf.rft(even), rf.parity_reverse(rf.rft(even))))
print("odd in  -> odd out :", np.allclose(rf.rft(odd), -rf.parity_reverse(rf.rft(odd))))
print("even: rft == Re DFT:", np.allclose(rf.rft(even), rf.complex_dft(even).real))

# %% [markdown]
# Energy is preserved, in any number of dimensions.

# %%
img = rng.uniform(-1, 1, (32, 32))
print("||x||   =", rf.norm(img))
print("||Gx||  =", rf.norm(rf.rft(img)))
