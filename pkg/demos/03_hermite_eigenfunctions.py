"""
Hermite functions as eigenfunctions
===================================

On the real line the Hermite functions are eigenfunctions of the continuous
real transform with eigenvalues +1 or -1, repeating with period four in the
order. We approximate the integral with the trapezoid rule on [-16, 16].
"""

# %%
from realft.quadrature import Grid1D, expected_sign, fitted_eigen, hermite, quad_inner

grid = Grid1D(16.0, 2048)

# %%
print(" k  sign  expected  residual")
for k in range(12):
    sign, residual = fitted_eigen(k, grid)
    print(f"{k:2d}  {sign:+d}    {expected_sign(k):+d}       {residual:.2e}")

# %% [markdown]
# Orthonormality under the same quadrature.

# %%
psi = [hermite(k, grid) for k in range(6)]
gram = [[quad_inner(p, q) for q in psi] for p in psi]
for row in gram:
    print(" ".join(f"{v:+.1e}" for v in row))
