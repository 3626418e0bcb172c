"""Timing of the naive kernel sum against the fast path."""

import csv
import time

import numpy as np

from .drft import is_power_of_two, make_plan, rft

FIELDS = ("size", "naive_ns", "fast_ns", "speedup", "warning")
AGREEMENT_TOL = 1e-10


def _best_ns(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter_ns()
        fn()
        dt = time.perf_counter_ns() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_size(n, repeat=5, seed=0):
    """Time one 1-D length. Returns a dict with the keys in ``FIELDS``.

    For power-of-two lengths the two outputs are compared first and a
    ``RuntimeError`` is raised if they differ by more than ``1e-10``
    relative. Other lengths only get a naive timing, flagged ``naive-only``.
    """
    x = np.random.default_rng(seed).uniform(-1.0, 1.0, n)
    naive = make_plan(n, "naive")
    if not is_power_of_two(n):
        naive_ns = _best_ns(lambda: rft(x, naive), 1)
        return dict(size=n, naive_ns=naive_ns, fast_ns="", speedup="", warning="naive-only")
    fast = make_plan(n, "fast")
    ref = rft(x, naive)
    got = rft(x, fast)
    err = np.max(np.abs(ref - got)) / np.max(np.abs(x))
    if err > AGREEMENT_TOL:
        raise RuntimeError(f"fast and naive paths disagree at N={n}: {err:.3e}")
    naive_ns = _best_ns(lambda: rft(x, naive), max(1, min(repeat, 3)))
    fast_ns = _best_ns(lambda: rft(x, fast), repeat)
    return dict(
        size=n,
        naive_ns=naive_ns,
        fast_ns=fast_ns,
        speedup=round(naive_ns / fast_ns, 3),
        warning="",
    )


def run_bench(sizes, repeat=5, seed=0):
    return [bench_size(n, repeat, seed) for n in sizes]


def write_csv(rows, fh):
    writer = csv.DictWriter(fh, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
