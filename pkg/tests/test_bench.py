import pytest

from realft import bench


def test_bench_rows():
    rows = bench.run_bench([16, 24], repeat=2)
    assert rows[0]["size"] == 16 and rows[0]["speedup"] > 0 and rows[0]["warning"] == ""
    assert rows[1]["warning"] == "naive-only" and rows[1]["fast_ns"] == ""


def test_bench_refuses_to_time_disagreeing_paths(monkeypatch):
    monkeypatch.setattr(bench, "AGREEMENT_TOL", -1.0)
    with pytest.raises(RuntimeError):
        bench.bench_size(16)
