import json

import numpy as np
import pytest

from realft import make_plan
from realft.verify import (
    REQUIRED_PROPERTIES,
    SuiteConfig,
    _REGISTRY,
    run_suite,
    sigma_mode_orthonormality,
    stream,
)

QUICK = SuiteConfig(seed=42, sizes=((8,), (12,), (4, 4)), trials=1)


def test_default_suite_passes():
    report = run_suite()
    failed = [r.name for r in report.results if not r.passed]
    assert report.passed, failed
    assert [r.name for r in report.results] == list(REQUIRED_PROPERTIES)


def test_registry_covers_required_properties():
    assert set(_REGISTRY) == set(REQUIRED_PROPERTIES)


def test_deterministic_numeric_content():
    a = run_suite(QUICK).numeric_content()
    b = run_suite(QUICK).numeric_content()
    assert a == b


def test_property_streams_are_independent():
    only = run_suite(QUICK, only=["involution"]).results[0]
    full = {r.name: r for r in run_suite(QUICK).results}
    assert only.max_observed_error == full["involution"].max_observed_error
    x = stream(42, "involution").uniform(size=4)
    y = stream(42, "unitarity").uniform(size=4)
    assert not np.array_equal(x, y)


def test_invalid_configs():
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(trials=0))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(sizes=()))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(sizes=((0,),)))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(tolerances={"no_such_property": 1.0}))
    with pytest.raises(ValueError):
        run_suite(SuiteConfig(tolerances={"involution": -1.0}))


def test_zero_tolerance_fails_involution():
    config = SuiteConfig(seed=42, sizes=((1024,),), trials=2, tolerances={"involution": 0.0})
    result = run_suite(config, only=["involution"]).results[0]
    assert result.max_observed_error > 0
    assert not result.passed


def test_report_json_schema():
    report = run_suite(QUICK, only=["involution", "linearity"])
    data = json.loads(report.to_json())
    assert set(data) == {"version", "seed", "sizes", "pass", "properties", "timestamp"}
    assert data["properties"][0] == {
        "name": "involution",
        "trials": 1,
        "max_observed_error": report.results[0].max_observed_error,
        "tolerance": 1e-10,
        "pass": True,
    }


@pytest.mark.parametrize("n,tol", [(1, 0.0), (4, 1e-14), (256, 1e-12)])
def test_sigma_mode_orthonormality(n, tol):
    assert sigma_mode_orthonormality(make_plan(n)) <= tol


def test_sigma_mode_guards():
    with pytest.raises(ValueError):
        sigma_mode_orthonormality(make_plan(2048))
    with pytest.raises(ValueError):
        sigma_mode_orthonormality(make_plan((4, 4)))
