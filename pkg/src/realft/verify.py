"""Seeded property suite for the transform, quadrature and convolution code.

Every property draws its inputs from its own PRNG stream, keyed by
``(seed, property name)``, so a property's result does not depend on which
other properties run or in what order.
"""

import datetime
import json
import math
import zlib
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .arrays import ParityError, _reflect, decompose, inner, norm, parity_reverse, sum_pair
from .convolution import (
    _circular,
    complex_conv_check,
    conv_direct,
    conv_spectral,
    conv_spectral_even,
    product_spectrum,
)
from .drft import (
    anti_components,
    complex_dft,
    complex_idft,
    components,
    is_power_of_two,
    make_plan,
    rft,
)
from .quadrature import (
    Grid1D,
    SampledFunction,
    default_grid,
    expected_sign,
    fitted_eigen,
    hermite,
    quad_inner,
    quad_rft,
)

DEFAULT_SIZES = ((8,), (64,), (1024,), (12,), (8, 8), (6, 10), (4, 4, 4))
# O(N^2) properties only run on shapes up to this many elements
QUADRATIC_LIMIT = 1024
SIGMA_MODE_LIMIT = 1024

_REGISTRY = {}


def _property(name, tolerance):
    def register(fn):
        _REGISTRY[name] = (fn, tolerance)
        return fn

    return register


REQUIRED_PROPERTIES = (
    # arrays
    "parity_involution",
    "decompose_parity",
    "sum_decompose_identity",
    "inner_symmetric_bilinear",
    # transform
    "involution",
    "unitarity",
    "symmetry",
    "linearity",
    "parity_preservation",
    "parity_commutation",
    "even_odd_reduction",
    "l1_linf_bound",
    "fast_equals_naive",
    "components_sum",
    "components_inversion",
    "complex_inversion",
    "sigma_mode_orthonormality",
    # quadrature
    "hermite_eigen_pattern",
    "hermite_orthonormality",
    "quad_involution",
    "quad_parity",
    # convolution
    "convolution_form",
    "product_form",
    "even_shortcut",
    "complex_rules",
    "convolution_algebra",
)


@dataclass
class SuiteConfig:
    seed: int = 42
    sizes: tuple = DEFAULT_SIZES
    trials: int = 3
    tolerances: dict = field(default_factory=dict)

    def validate(self):
        if int(self.seed) != self.seed or self.seed < 0:
            raise ValueError("seed must be a non-negative integer")
        if int(self.trials) != self.trials or self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not self.sizes:
            raise ValueError("at least one size is required")
        for shape in self.sizes:
            if not shape or any(int(n) != n or n < 1 for n in shape):
                raise ValueError(f"invalid shape {shape}")
        for name, tol in self.tolerances.items():
            if name not in _REGISTRY:
                raise ValueError(f"unknown property {name!r}")
            if not tol >= 0:
                raise ValueError(f"tolerance for {name!r} must be >= 0")


@dataclass
class PropertyResult:
    name: str
    trials: int
    max_observed_error: float
    tolerance: float

    @property
    def passed(self):
        return self.max_observed_error <= self.tolerance


@dataclass
class Report:
    results: list
    seed: int
    sizes: list
    version: str = __version__
    timestamp: str = ""

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def numeric_content(self):
        """Everything except the timestamp, as plain data."""
        return {
            "version": self.version,
            "seed": self.seed,
            "sizes": [list(s) for s in self.sizes],
            "pass": self.passed,
            "properties": [
                {
                    "name": r.name,
                    "trials": r.trials,
                    "max_observed_error": r.max_observed_error,
                    "tolerance": r.tolerance,
                    "pass": r.passed,
                }
                for r in self.results
            ],
        }

    def to_dict(self):
        data = self.numeric_content()
        data["timestamp"] = self.timestamp
        return data

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def stream(seed, name):
    """Independent generator for ``(seed, name)``."""
    return np.random.default_rng([int(seed), zlib.crc32(name.encode("utf-8"))])


def _uniform(rng, shape):
    return rng.uniform(-1.0, 1.0, size=shape)


def _even(rng, shape):
    return decompose(_uniform(rng, shape)).even


def _odd(rng, shape):
    return decompose(_uniform(rng, shape)).odd


def _rel(got, want):
    scale = np.max(np.abs(want))
    diff = np.max(np.abs(np.asarray(got) - np.asarray(want)))
    return float(diff / scale) if scale > 0 else float(diff)


def _small(config):
    return [s for s in config.sizes if math.prod(s) <= QUADRATIC_LIMIT]


# -- arrays ------------------------------------------------------------------


@_property("parity_involution", 0.0)
def _parity_involution(rng, config):
    worst = 0.0
    for shape in config.sizes:
        for _ in range(config.trials):
            x = _uniform(rng, shape)
            worst = max(worst, float(np.max(np.abs(parity_reverse(parity_reverse(x)) - x))))
    return worst


@_property("decompose_parity", 0.0)
def _decompose_parity(rng, config):
    worst = 0.0
    for shape in config.sizes:
        for _ in range(config.trials):
            even, odd = decompose(_uniform(rng, shape))
            worst = max(
                worst,
                float(np.max(np.abs(_reflect(even) - even))),
                float(np.max(np.abs(_reflect(odd) + odd))),
            )
    return worst


@_property("sum_decompose_identity", 1.0)
def _sum_decompose_identity(rng, config):
    # error in ulps of the larger of x[n] and x[-n]
    worst = 0.0
    for shape in config.sizes:
        for _ in range(config.trials):
            x = _uniform(rng, shape)
            scale = np.maximum(np.abs(x), np.abs(_reflect(x)))
            ulps = np.abs(sum_pair(decompose(x)) - x) / np.spacing(scale)
            worst = max(worst, float(np.max(ulps)))
    return worst


@_property("inner_symmetric_bilinear", 1e-12)
def _inner_props(rng, config):
    worst = 0.0
    for shape in config.sizes:
        for _ in range(config.trials):
            x, y, z = (_uniform(rng, shape) for _ in range(3))
            a, b = rng.uniform(-2, 2, 2)
            scale = norm(x) * (norm(y) + norm(z)) * (abs(a) + abs(b)) + 1.0
            lin = inner(a * y + b * z, x) - (a * inner(y, x) + b * inner(z, x))
            worst = max(
                worst,
                abs(inner(x, y) - inner(y, x)) / (norm(x) * norm(y)),
                abs(lin) / scale,
                abs(inner(x, x) - norm(x) ** 2) / norm(x) ** 2,
            )
            if inner(x, x) <= 0:
                worst = math.inf
    return worst


# -- transform ---------------------------------------------------------------


@_property("involution", 1e-10)
def _involution(rng, config):
    worst = 0.0
    for shape in config.sizes:
        plan = make_plan(shape)
        for _ in range(config.trials):
            x = _uniform(rng, shape)
            worst = max(worst, _rel(rft(rft(x, plan), plan), x))
    return worst


@_property("unitarity", 1e-10)
def _unitarity(rng, config):
    worst = 0.0
    for shape in config.sizes:
        plan = make_plan(shape)
        for _ in range(config.trials):
            f, g = _uniform(rng, shape), _uniform(rng, shape)
            ff, fg = rft(f, plan), rft(g, plan)
            scale = norm(f) * norm(g)
            worst = max(
                worst,
                abs(inner(ff, fg) - inner(f, g)) / scale,
                abs(norm(ff) - norm(f)) / norm(f),
            )
    return worst


@_property("symmetry", 1e-10)
def _symmetry(rng, config):
    worst = 0.0
    for shape in config.sizes:
        plan = make_plan(shape)
        for _ in range(config.trials):
            f, g = _uniform(rng, shape), _uniform(rng, shape)
            diff = inner(f, rft(g, plan)) - inner(rft(f, plan), g)
            worst = max(worst, abs(diff) / (norm(f) * norm(g)))
    return worst


@_property("linearity", 1e-12)
def _linearity(rng, config):
    worst = 0.0
    for shape in config.sizes:
        plan = make_plan(shape)
        for _ in range(config.trials):
            x, y = _uniform(rng, shape), _uniform(rng, shape)
            a, b = rng.uniform(-2, 2, 2)
            fx, fy = rft(x, plan), rft(y, plan)
            want = a * fx + b * fy
            scale = abs(a) * norm(fx, "inf") + abs(b) * norm(fy, "inf")
            err = np.max(np.abs(rft(a * x + b * y, plan) - want)) / scale
            worst = max(worst, float(err))
    return worst


@_property("parity_preservation", 1e-12)
def _parity_preservation(rng, config):
    worst = 0.0
    for shape in config.sizes:
        plan = make_plan(shape)
        for _ in range(config.trials):
            e, o = _even(rng, shape), _odd(rng, shape)
            fe, fo = rft(e, plan), rft(o, plan)
            worst = max(worst, norm(fe - _reflect(fe), "inf") / norm(e))
            if norm(o) > 0:
                worst = max(worst, norm(fo + _reflect(fo), "inf") / norm(o))
    return worst


@_property("parity_commutation", 1e-12)
def _parity_commutation(rng, config):
    worst = 0.0
    for shape in config.sizes:
        plan = make_plan(shape)
        for _ in range(config.trials):
            x = _uniform(rng, shape)
            diff = rft(parity_reverse(x), plan) - parity_reverse(rft(x, plan))
            worst = max(worst, norm(diff, "inf") / norm(x, "inf"))
    return worst


@_property("even_odd_reduction", 1e-12)
def _even_odd_reduction(rng, config):
    worst = 0.0
    for shape in config.sizes:
        plan = make_plan(shape)
        for _ in range(config.trials):
            e = _even(rng, shape)
            f1, f2 = components(e, plan)
            spec = complex_dft(e, plan)
            errs = [
                norm(rft(e, plan) - f1, "inf"),
                norm(f2, "inf"),
                norm(rft(e, plan) - spec.real, "inf"),
                float(np.max(np.abs(spec.imag))),
            ]
            worst = max(worst, max(errs) / norm(e))
            o = _odd(rng, shape)
            if norm(o) == 0:
                continue
            f1, f2 = components(o, plan)
            spec = complex_dft(o, plan)
            errs = [
                norm(rft(o, plan) - f2, "inf"),
                norm(f1, "inf"),
                norm(rft(o, plan) - spec.imag, "inf"),
                float(np.max(np.abs(spec.real))),
            ]
            worst = max(worst, max(errs) / norm(o))
    return worst


@_property("l1_linf_bound", 1e-12)
def _l1_linf_bound(rng, config):
    # observed error is the amount by which the bound is exceeded
    worst = 0.0
    for shape in config.sizes:
        plan = make_plan(shape)
        bound = math.sqrt(2.0) / math.sqrt(plan.size)
        for _ in range(config.trials):
            x = _uniform(rng, shape)
            worst = max(worst, norm(rft(x, plan), "inf") - bound * norm(x, "one"))
    return worst


@_property("fast_equals_naive", 1e-10)
def _fast_equals_naive(rng, config):
    worst = 0.0
    for shape in config.sizes:
        if not all(is_power_of_two(n) for n in shape):
            continue
        fast, naive = make_plan(shape, "fast"), make_plan(shape, "naive")
        for _ in range(config.trials):
            x = _uniform(rng, shape)
            worst = max(worst, _rel(rft(x, fast), rft(x, naive)))
    return worst


@_property("components_sum", 1e-12)
def _components_sum(rng, config):
    worst = 0.0
    for shape in config.sizes:
        plan = make_plan(shape)
        for _ in range(config.trials):
            x = _uniform(rng, shape)
            diff = rft(x, plan) - sum_pair(components(x, plan))
            worst = max(worst, norm(diff, "inf") / norm(x, "inf"))
    return worst


@_property("components_inversion", 1e-12)
def _components_inversion(rng, config):
    worst = 0.0
    for shape in config.sizes:
        plan = make_plan(shape)
        for _ in range(config.trials):
            x = _uniform(rng, shape)
            worst = max(worst, _rel(anti_components(components(x, plan), plan), x))
    return worst


@_property("complex_inversion", 1e-12)
def _complex_inversion(rng, config):
    worst = 0.0
    for shape in config.sizes:
        plan = make_plan(shape)
        for _ in range(config.trials):
            z = _uniform(rng, shape) + 1j * _uniform(rng, shape)
            worst = max(worst, _rel(complex_idft(complex_dft(z, plan), plan), z))
    return worst


def sigma_mode_orthonormality(plan):
    """Largest entry of ``|G^T G - I|`` for the explicit 1-D transform matrix.

    ``G[k, n] = (cos - sin)(2 pi k n / N) / sqrt(N)``; the angles are reduced
    to ``(k n) mod N`` before evaluation.
    """
    if len(plan.shape) != 1:
        raise ValueError("sigma-mode check needs a 1-D plan")
    (n,) = plan.shape
    if n > SIGMA_MODE_LIMIT:
        raise ValueError(f"sigma-mode check limited to N <= {SIGMA_MODE_LIMIT}")
    k = np.arange(n)
    theta = 2.0 * np.pi * (np.outer(k, k) % n) / n
    g = (np.cos(theta) - np.sin(theta)) / math.sqrt(n)
    return float(np.max(np.abs(g.T @ g - np.eye(n))))


@_property("sigma_mode_orthonormality", 1e-12)
def _sigma_modes(rng, config):
    return max(sigma_mode_orthonormality(make_plan(n)) for n in (1, 2, 4, 12, 64, 256))


# -- quadrature --------------------------------------------------------------


@_property("hermite_eigen_pattern", 1e-8)
def _hermite_pattern(rng, config):
    # residual against the expected sign: a wrong sign shows up as ~2
    grid = default_grid()
    worst = 0.0
    for k in range(12):
        sign, residual = fitted_eigen(k, grid)
        worst = max(worst, residual if sign == expected_sign(k) else 2.0)
    return worst


@_property("hermite_orthonormality", 1e-8)
def _hermite_orthonormality(rng, config):
    grid = default_grid()
    psis = [hermite(k, grid) for k in range(11)]
    worst = 0.0
    for j, pj in enumerate(psis):
        for k, pk in enumerate(psis):
            worst = max(worst, abs(quad_inner(pj, pk) - (j == k)))
    return worst


def _shifted_gaussian(grid, shift, width):
    x = grid.nodes
    f = np.exp(-0.5 * ((x - shift) / width) ** 2)
    y = grid.nodes
    # exact transform of the shifted Gaussian
    g = width * np.exp(-0.5 * (width * y) ** 2) * (np.cos(shift * y) - np.sin(shift * y))
    return SampledFunction(grid, f), g


@_property("quad_involution", 1e-12)
def _quad_involution(rng, config):
    # excess of the round-trip error over twice the single-pass error
    grid = Grid1D(16.0, 1024)
    worst = 0.0
    for _ in range(config.trials):
        shift, width = rng.uniform(-2, 2), rng.uniform(0.7, 1.5)
        f, exact = _shifted_gaussian(grid, shift, width)
        once = quad_rft(f)
        single = norm(once.values - exact, "inf") / norm(exact, "inf")
        double = norm(quad_rft(once).values - f.values, "inf") / norm(f.values, "inf")
        worst = max(worst, double - 2.0 * single)
    return worst


@_property("quad_parity", 1e-12)
def _quad_parity(rng, config):
    grid = Grid1D(16.0, 1024)
    x = grid.nodes
    worst = 0.0
    for _ in range(config.trials):
        c = rng.uniform(-1, 1, 4)
        env = np.exp(-0.5 * x * x)
        even = SampledFunction(grid, env * (c[0] + c[1] * x * x))
        odd = SampledFunction(grid, env * x * (c[2] + c[3] * x * x))
        fe, fo = quad_rft(even).values, quad_rft(odd).values
        worst = max(
            worst,
            norm(fe - fe[::-1], "inf") / norm(fe, "inf"),
            norm(fo + fo[::-1], "inf") / norm(fo, "inf"),
        )
    return worst


# -- convolution -------------------------------------------------------------


def _four_term(fa, fb, op):
    pa, pb = _reflect(fa), _reflect(fb)
    return 0.5 * (op(fa, fb) + op(fa, pb) + op(pa, fb) - op(pa, pb))


@_property("convolution_form", 1e-9)
def _convolution_form(rng, config):
    worst = 0.0
    for shape in _small(config):
        plan = make_plan(shape)
        root = math.sqrt(plan.size)
        for _ in range(config.trials):
            a, b = _uniform(rng, shape), _uniform(rng, shape)
            direct = conv_direct(a, b)
            rhs = _four_term(rft(a, plan), rft(b, plan), np.multiply)
            worst = max(
                worst,
                _rel(rft(direct, plan) / root, rhs),
                _rel(conv_spectral(a, b, plan), direct),
            )
    return worst


@_property("product_form", 1e-9)
def _product_form(rng, config):
    worst = 0.0
    for shape in _small(config):
        plan = make_plan(shape)
        for _ in range(config.trials):
            a, b = _uniform(rng, shape), _uniform(rng, shape)
            worst = max(worst, _rel(product_spectrum(a, b, plan), rft(a * b, plan)))
    return worst


@_property("even_shortcut", 1e-9)
def _even_shortcut(rng, config):
    worst = 0.0
    for shape in _small(config):
        plan = make_plan(shape)
        root = math.sqrt(plan.size)
        for _ in range(config.trials):
            e, b = _even(rng, shape), _uniform(rng, shape)
            direct = conv_direct(e, b)
            fe, fb = rft(e, plan), rft(b, plan)
            worst = max(
                worst,
                _rel(rft(direct, plan) / root, fe * fb),
                _rel(conv_spectral_even(e, b, plan), direct),
                _rel(conv_spectral_even(b, e, plan), direct),
                _rel(rft(e * b, plan), _circular(fe, fb) / root),
            )
            o = _odd(rng, shape) + b
            if not np.array_equal(o, _reflect(o)) and not np.array_equal(b, _reflect(b)):
                try:
                    conv_spectral_even(o, b, plan)
                except ParityError:
                    pass
                else:
                    worst = math.inf
    return worst


@_property("complex_rules", 1e-10)
def _complex_rules(rng, config):
    worst = 0.0
    for shape in _small(config):
        plan = make_plan(shape)
        for _ in range(config.trials):
            a, b = _uniform(rng, shape), _uniform(rng, shape)
            worst = max(worst, complex_conv_check(a, b, plan))
    return worst


def _brute_conv(a, b):
    # index-by-index oracle, independent of conv_direct's roll formulation
    shape = a.shape
    out = np.zeros(shape)
    for n in np.ndindex(*shape):
        acc = 0.0
        for m in np.ndindex(*shape):
            idx = tuple((ni - mi) % s for ni, mi, s in zip(n, m, shape))
            acc += a[idx] * b[m]
        out[n] = acc
    return out


@_property("convolution_algebra", 1e-12)
def _convolution_algebra(rng, config):
    worst = 0.0
    for shape in [s for s in config.sizes if math.prod(s) <= 64]:
        for _ in range(config.trials):
            a, b, c = (_uniform(rng, shape) for _ in range(3))
            ab = conv_direct(a, b)
            worst = max(
                worst,
                _rel(ab, _brute_conv(a, b)),
                _rel(ab, conv_direct(b, a)),
                _rel(conv_direct(ab, c), conv_direct(a, conv_direct(b, c))),
                _rel(conv_direct(a, b + c), ab + conv_direct(a, c)),
            )
    return worst


# -- runner ------------------------------------------------------------------


def _check_coverage():
    missing = [name for name in REQUIRED_PROPERTIES if name not in _REGISTRY]
    extra = [name for name in _REGISTRY if name not in REQUIRED_PROPERTIES]
    if missing or extra:
        raise RuntimeError(f"property registry out of sync: missing={missing} extra={extra}")


def run_suite(config=None, only=None):
    """Run every registered property and return a :class:`Report`.

    Args:
        config: a :class:`SuiteConfig`; defaults to seed 42 and the default sizes.
        only: optional iterable of property names to restrict the run to.
    """
    config = config or SuiteConfig()
    config.validate()
    _check_coverage()
    names = REQUIRED_PROPERTIES if only is None else tuple(only)
    results = []
    for name in names:
        fn, default_tol = _REGISTRY[name]
        observed = float(fn(stream(config.seed, name), config))
        tol = float(config.tolerances.get(name, default_tol))
        results.append(PropertyResult(name, config.trials, observed, tol))
    return Report(
        results=results,
        seed=int(config.seed),
        sizes=[tuple(int(n) for n in s) for s in config.sizes],
        timestamp=datetime.datetime.now(datetime.timezone.utc).isoformat(),
    )
