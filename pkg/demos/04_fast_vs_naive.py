"""
Fast path versus kernel sum
===========================

The naive transform evaluates the cos - sin kernel sum directly in O(N^2).
The fast path runs a radix-2 FFT and adds the real and imaginary parts. This
script times both over a range of lengths and plots the speedup when
matplotlib is available.
"""

# %%
from realft.bench import run_bench

sizes = [64, 256, 1024, 4096, 8192]
rows = run_bench(sizes, repeat=5)
for r in rows:
    print(f"N={r['size']:5d}  naive {r['naive_ns'] / 1e6:9.3f} ms  "
          f"fast {r['fast_ns'] / 1e6:7.3f} ms  speedup {r['speedup']:8.1f}x")

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.loglog(sizes, [r["naive_ns"] for r in rows], "o-", label="kernel sum")
    ax.loglog(sizes, [r["fast_ns"] for r in rows], "s-", label="fast")
    ax.set_xlabel("N")
    ax.set_ylabel("time [ns]")
    ax.legend()
    fig.tight_layout()
    fig.savefig("fast_vs_naive.png", dpi=120)
    print("wrote fast_vs_naive.png")
