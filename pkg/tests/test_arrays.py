import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from realft import (
    NonFiniteError,
    ParityError,
    ShapeMismatchError,
    decompose,
    inner,
    is_even,
    is_odd,
    make_pair,
    norm,
    parity_reverse,
    sum_pair,
)

finite = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)
real_arrays = hnp.arrays(
    np.float64, hnp.array_shapes(min_dims=1, max_dims=3, min_side=1, max_side=7), elements=finite
)


def test_parity_reverse_examples():
    np.testing.assert_array_equal(parity_reverse([5.0, 5.0, 5.0, 5.0]), [5, 5, 5, 5])
    np.testing.assert_array_equal(parity_reverse([1.0, 2.0, 3.0, 4.0]), [1, 4, 3, 2])


def test_parity_reverse_2d():
    x = np.arange(12.0).reshape(3, 4)
    got = parity_reverse(x)
    for i in range(3):
        for j in range(4):
            assert got[i, j] == x[-i % 3, -j % 4]


@given(real_arrays)
def test_parity_is_involution(x):
    np.testing.assert_array_equal(parity_reverse(parity_reverse(x)), x)


def test_decompose_example():
    even, odd = decompose([1.0, 2.0, 3.0, 4.0])
    np.testing.assert_array_equal(even, [1, 3, 3, 3])
    np.testing.assert_array_equal(odd, [0, -1, 0, 1])


def test_decompose_of_even_and_zero():
    e = np.array([2.0, 1.0, 0.0, 1.0])
    even, odd = decompose(e)
    np.testing.assert_array_equal(even, e)
    np.testing.assert_array_equal(odd, 0)
    even, odd = decompose(np.zeros(5))
    assert not even.any() and not odd.any()


@given(real_arrays)
def test_decompose_gives_exact_parity_pair(x):
    even, odd = decompose(x)
    np.testing.assert_array_equal(parity_reverse(even), even)
    np.testing.assert_array_equal(parity_reverse(odd), -odd)
    make_pair(even, odd)  # does not raise


@given(real_arrays)
def test_sum_decompose_within_one_ulp(x):
    # cancellation against the mirrored element bounds the error by its ulp
    back = sum_pair(decompose(x))
    scale = np.maximum(np.abs(x), np.abs(parity_reverse(x)))
    assert np.all(np.abs(back - x) <= np.spacing(scale))


def test_sum_pair_examples():
    np.testing.assert_array_equal(sum_pair(([1.0, 3, 3, 3], [0.0, -1, 0, 1])), [1, 2, 3, 4])
    e = np.array([1.0, 2.0, 2.0])
    o = np.array([0.0, 1.0, -1.0])
    np.testing.assert_array_equal(sum_pair((e, np.zeros(3))), e)
    np.testing.assert_array_equal(sum_pair((np.zeros(3), o)), o)


def test_decompose_of_pair_sum_is_identity():
    e = np.array([1.0, 3, 3, 3])
    o = np.array([0.0, -1, 0, 1])
    even, odd = decompose(sum_pair((e, o)))
    np.testing.assert_array_equal(even, e)
    np.testing.assert_array_equal(odd, o)


def test_sum_pair_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        sum_pair((np.zeros(3), np.zeros(4)))


def test_make_pair_rejects_wrong_parity():
    with pytest.raises(ParityError):
        make_pair([1.0, 2.0, 3.0], [0.0, 0.0, 0.0])
    with pytest.raises(ParityError):
        make_pair([1.0, 2.0, 2.0], [1.0, 0.0, 0.0])


def test_parity_predicates():
    assert is_even([2.0, 1.0, 0.0, 1.0])
    assert not is_even([1.0, 2.0, 3.0, 4.0])
    assert is_odd([0.0, -1.0, 0.0, 1.0])
    assert is_even(np.zeros(3)) and is_odd(np.zeros(3))


def test_inner_examples():
    assert inner([1.0, 0.0], [0.0, 1.0]) == 0
    assert inner([1.0, 2.0], [3.0, 4.0]) == 11
    x = np.array([3.0, -4.0, 12.0])
    assert inner(x, x) == pytest.approx(norm(x) ** 2)
    with pytest.raises(ShapeMismatchError):
        inner([1.0], [1.0, 2.0])


@given(real_arrays, st.floats(-10, 10), st.floats(-10, 10))
def test_inner_symmetric_bilinear(x, a, b):
    y = np.roll(x, 1)
    z = np.cos(x)
    assert inner(x, y) == inner(y, x)
    lhs = inner(a * y + b * z, x)
    rhs = a * inner(y, x) + b * inner(z, x)
    scale = (abs(a) * norm(y) + abs(b) * norm(z)) * norm(x)
    assert abs(lhs - rhs) <= 1e-12 * scale + 1e-300
    assert inner(x, x) >= 0
    assert (inner(x, x) == 0) == (not (x * x).any())


def test_norm_examples():
    assert norm([3.0, 4.0], "two") == 5
    assert norm([-1.0, 2.0, -3.0], "one") == 6
    assert norm([-1.0, 2.0, -3.0], "inf") == 3
    with pytest.raises(ValueError):
        norm([1.0], "three")


def test_validation():
    with pytest.raises(NonFiniteError):
        parity_reverse([1.0, np.nan])
    with pytest.raises(NonFiniteError):
        decompose([np.inf])
    with pytest.raises(ValueError):
        parity_reverse(3.0)
    with pytest.raises(ValueError):
        parity_reverse([1 + 2j])
