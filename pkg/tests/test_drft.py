import math
import threading

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from oracles import brute_dft, brute_rft
from realft import (
    NonFiniteError,
    ParityError,
    PerformanceWarning,
    ShapeMismatchError,
    anti_components,
    complex_dft,
    complex_idft,
    components,
    decompose,
    inner,
    irft,
    make_plan,
    norm,
    parity_reverse,
    rft,
    sum_pair,
)

# magnitudes below 1e-100 underflow when squared inside the l2 norms
finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False).filter(
    lambda v: v == 0 or abs(v) > 1e-100
)
small_shapes = hnp.array_shapes(min_dims=1, max_dims=3, min_side=1, max_side=9)
real_arrays = hnp.arrays(np.float64, small_shapes, elements=finite)

SHAPES = [(1,), (2,), (3,), (4,), (5,), (8,), (12,), (16,), (2, 3), (4, 4), (3, 8), (2, 2, 2), (2, 3, 4)]


def rel_inf(got, want):
    scale = max(np.max(np.abs(want)), 1e-300)
    return np.max(np.abs(np.asarray(got) - np.asarray(want))) / scale


# -- complex DFT -------------------------------------------------------------


def test_complex_dft_delta_and_constant():
    np.testing.assert_allclose(complex_dft([1, 0, 0, 0]), [0.5] * 4, atol=1e-15)
    np.testing.assert_allclose(complex_dft([1, 1, 1, 1]), [2, 0, 0, 0], atol=1e-15)


def test_complex_dft_shifted_delta():
    # frozen from oracles.brute_dft([0, 1, 0, 0], (4,))
    want = [0.5, -0.5j, -0.5, 0.5j]
    np.testing.assert_allclose(complex_dft([0, 1, 0, 0]), want, atol=1e-15)
    np.testing.assert_allclose(complex_idft(want), [0, 1, 0, 0], atol=1e-15)
    np.testing.assert_allclose(complex_idft([0.5] * 4), [1, 0, 0, 0], atol=1e-15)


@pytest.mark.parametrize("shape", SHAPES)
def test_complex_dft_matches_oracle(shape, rng):
    z = rng.uniform(-1, 1, shape) + 1j * rng.uniform(-1, 1, shape)
    want = np.array(brute_dft(z.ravel(), shape)).reshape(shape)
    assert rel_inf(complex_dft(z), want) < 1e-13
    assert rel_inf(complex_idft(complex_dft(z)), z) < 1e-12


def test_complex_dft_errors():
    with pytest.raises(ShapeMismatchError):
        complex_dft(np.ones(4), make_plan(8))
    with pytest.raises(NonFiniteError):
        complex_dft([1.0, complex(np.nan, 0)])


# -- components --------------------------------------------------------------


def test_components_example():
    f1, f2 = components([0.0, 1.0, 0.0, 0.0])
    np.testing.assert_allclose(f1, [0.5, 0, -0.5, 0], atol=1e-15)
    np.testing.assert_allclose(f2, [0, -0.5, 0, 0.5], atol=1e-15)


@pytest.mark.parametrize("shape", SHAPES)
def test_components_parity_and_inversion(shape, rng):
    x = rng.uniform(-1, 1, shape)
    f1, f2 = components(x)
    np.testing.assert_array_equal(parity_reverse(f1), f1)
    np.testing.assert_array_equal(parity_reverse(f2), -f2)
    spec = complex_dft(x)
    assert rel_inf(f1 + 1j * f2, spec) < 1e-13
    assert rel_inf(anti_components((f1, f2)), x) < 1e-12

    even, odd = decompose(x)
    assert norm(components(even)[1], "inf") <= 1e-13 * norm(x)
    assert norm(components(odd)[0], "inf") <= 1e-13 * norm(x)


def test_anti_components_examples():
    got = anti_components(([0.5, 0, -0.5, 0], [0, -0.5, 0, 0.5]))
    np.testing.assert_allclose(got, [0, 1, 0, 0], atol=1e-15)
    np.testing.assert_array_equal(anti_components((np.zeros(4), np.zeros(4))), 0)
    e = np.array([3.0, 1.0, -2.0, 1.0])
    f1, _ = components(e)
    np.testing.assert_allclose(anti_components((f1, np.zeros(4))), e, atol=1e-14)


def test_anti_components_rejects_non_pair():
    with pytest.raises(ParityError):
        anti_components(([1.0, 2.0, 3.0], [0.0, 0.0, 0.0]))


# -- rft ---------------------------------------------------------------------


def test_rft_examples():
    np.testing.assert_allclose(rft([1.0, 0, 0, 0]), [0.5] * 4, atol=1e-15)
    np.testing.assert_allclose(rft([0.0, 1, 0, 0]), [0.5, -0.5, -0.5, 0.5], atol=1e-15)
    np.testing.assert_allclose(irft([0.5, -0.5, -0.5, 0.5]), [0, 1, 0, 0], atol=1e-15)
    # rft([1, 2, 3, 4]) = Re + Im of [5, -1+i, -1, -1-i]
    np.testing.assert_allclose(rft([1.0, 2, 3, 4]), [5, 0, -1, -2], atol=1e-14)
    np.testing.assert_allclose(rft(rft([1.0, 2, 3, 4])), [1, 2, 3, 4], atol=1e-14)


def test_rft_2d_frozen():
    # frozen from oracles.brute_rft([1..6], (2, 3))
    want = [8.573214099741124, -0.5176380902050435, -1.9318516525781382,
            -3.674234614174769, 0.0, 0.0]
    got = rft(np.arange(1.0, 7.0).reshape(2, 3))
    np.testing.assert_allclose(got.ravel(), want, atol=1e-14)


@pytest.mark.parametrize("shape", SHAPES)
@pytest.mark.parametrize("strategy", ["auto", "naive"])
def test_rft_matches_kernel_oracle(shape, strategy, rng):
    x = rng.uniform(-1, 1, shape)
    want = np.array(brute_rft(x.ravel(), shape)).reshape(shape)
    assert rel_inf(rft(x, make_plan(shape, strategy)), want) < 1e-12


def test_rft_even_input_is_real_part(rng):
    n = 64
    grid = np.minimum(np.arange(n), n - np.arange(n))
    e = np.exp(-0.05 * grid**2)
    spec = complex_dft(e)
    assert np.max(np.abs(spec.imag)) < 1e-14
    assert rel_inf(rft(e), spec.real) < 1e-13


@pytest.mark.parametrize("shape", [(16,), (64,), (4, 8), (2, 4, 8), (8, 3), (6,)])
def test_mixed_and_forced_strategies_agree(shape, rng):
    x = rng.uniform(-1, 1, shape)
    naive = rft(x, make_plan(shape, "naive"))
    auto = rft(x, make_plan(shape))
    assert rel_inf(auto, naive) < 1e-12
    if all(n & (n - 1) == 0 for n in shape):
        assert rel_inf(rft(x, make_plan(shape, "fast")), naive) < 1e-12


def test_plan_contract():
    plan = make_plan((8, 6))
    assert plan.strategy == ("fast", "naive")
    assert plan.normalization == (1 / math.sqrt(8), 1 / math.sqrt(6))
    assert plan.scale == pytest.approx(1 / math.sqrt(48))
    assert make_plan((8, 6)) is plan
    with pytest.raises(ValueError):
        make_plan(6, "fast")
    with pytest.raises(ValueError):
        make_plan((0,))
    with pytest.raises(ValueError):
        plan.twiddles[0][0] = 2.0
    np.testing.assert_allclose(plan.twiddles[1], np.exp(-2j * np.pi * np.arange(6) / 6), atol=1e-15)


def test_long_non_power_of_two_warns():
    with pytest.warns(PerformanceWarning):
        make_plan(3001)


def test_rft_errors():
    with pytest.raises(ShapeMismatchError):
        rft(np.ones(4), make_plan(8))
    with pytest.raises(NonFiniteError):
        rft([0.0, np.inf])


def test_concurrent_calls_share_plan(rng):
    plan = make_plan(1024)
    xs = [rng.uniform(-1, 1, 1024) for _ in range(8)]
    want = [rft(x, plan) for x in xs]
    got = [None] * len(xs)

    def work(i):
        got[i] = rft(xs[i], plan)

    threads = [threading.Thread(target=work, args=(i,)) for i in range(len(xs))]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for g, w in zip(got, want):
        np.testing.assert_array_equal(g, w)


# -- properties --------------------------------------------------------------


@settings(deadline=None, max_examples=60)
@given(real_arrays)
def test_involution(x):
    assert norm(rft(rft(x)) - x, "inf") <= 1e-10 * max(norm(x, "inf"), 1e-300)


@settings(deadline=None, max_examples=60)
@given(small_shapes.flatmap(lambda s: st.tuples(
    hnp.arrays(np.float64, s, elements=finite), hnp.arrays(np.float64, s, elements=finite))))
def test_unitarity_and_symmetry(pair):
    f, g = pair
    scale = norm(f) * norm(g)
    assert abs(inner(rft(f), rft(g)) - inner(f, g)) <= 1e-10 * scale
    assert abs(inner(f, rft(g)) - inner(rft(f), g)) <= 1e-10 * scale
    assert abs(norm(rft(f)) - norm(f)) <= 1e-10 * norm(f)


@settings(deadline=None, max_examples=60)
@given(real_arrays, st.floats(-5, 5), st.floats(-5, 5))
def test_linearity(x, a, b):
    y = np.sin(x) * 100
    want = a * rft(x) + b * rft(y)
    scale = abs(a) * norm(rft(x), "inf") + abs(b) * norm(rft(y), "inf")
    assert norm(rft(a * x + b * y) - want, "inf") <= 1e-12 * scale + 1e-300


@settings(deadline=None, max_examples=60)
@given(real_arrays)
def test_parity_structure(x):
    even, odd = decompose(x)
    scale = norm(x) + 1e-300
    fe, fo = rft(even), rft(odd)
    assert norm(fe - parity_reverse(fe), "inf") <= 1e-12 * scale
    assert norm(fo + parity_reverse(fo), "inf") <= 1e-12 * scale
    f1, f2 = components(even)
    assert norm(fe - f1, "inf") <= 1e-12 * scale and norm(f2, "inf") <= 1e-12 * scale
    f1, f2 = components(odd)
    assert norm(fo - f2, "inf") <= 1e-12 * scale and norm(f1, "inf") <= 1e-12 * scale
    diff = rft(parity_reverse(x)) - parity_reverse(rft(x))
    assert norm(diff, "inf") <= 1e-12 * max(norm(x, "inf"), 1e-300)


@settings(deadline=None, max_examples=60)
@given(real_arrays)
def test_l1_to_linf_bound(x):
    bound = math.sqrt(2) / math.sqrt(x.size) * norm(x, "one")
    assert norm(rft(x), "inf") <= bound + 1e-12


@settings(deadline=None, max_examples=60)
@given(real_arrays)
def test_rft_is_sum_of_components(x):
    plan = make_plan(x.shape)
    got = rft(x, plan)
    composed = sum_pair(components(x, plan))
    if plan.all_naive:
        assert norm(got - composed, "inf") <= 1e-12 * max(norm(x, "inf"), 1e-300)
    else:
        np.testing.assert_array_equal(got, composed)
