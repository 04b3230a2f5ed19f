import json
import math

import numpy as np
import pytest

from colebrook.core import FlowConditions, residual_x
from colebrook.solvers import reference_x
from colebrook.sweep import (
    NONCONVERGED,
    DomainSpec,
    Estimator,
    MetricKind,
    SweepResult,
    error_map,
    iteration_map,
    materialize,
    mean_iterations,
    sobol_2d,
)


def anchored_box_discrepancy(points, k=64):
    """Max |fraction inside [0,a)x[0,b) - a*b| over a k-by-k lattice of corners."""
    ix = np.minimum((points[:, 0] * k).astype(int), k - 1)
    iy = np.minimum((points[:, 1] * k).astype(int), k - 1)
    hist = np.zeros((k, k))
    np.add.at(hist, (ix, iy), 1)
    frac = hist.cumsum(0).cumsum(1) / len(points)
    edges = np.arange(1, k + 1) / k
    return np.abs(frac - np.outer(edges, edges)).max()


def test_sobol_first_points():
    assert sobol_2d(1).tolist() == [[0.5, 0.5]]
    assert sobol_2d(4).tolist() == [[0.5, 0.5], [0.75, 0.25], [0.25, 0.75], [0.375, 0.375]]


def test_sobol_prefix_is_stable():
    assert np.array_equal(sobol_2d(100), sobol_2d(1000)[:100])


def test_sobol_beats_pseudo_random():
    sobol = sobol_2d(65536)
    assert ((sobol >= 0) & (sobol < 1)).all()
    random = np.random.default_rng(2024).random((65536, 2))
    assert anchored_box_discrepancy(sobol) < anchored_box_discrepancy(random)


def test_sobol_rejects_empty():
    with pytest.raises(ValueError):
        sobol_2d(0)


def test_grid_corners():
    pts = materialize(DomainSpec.grid(2, 2))
    assert [(p.re, p.rr) for p in pts] == [(4000, 1e-7), (4000, 0.05), (1e8, 1e-7), (1e8, 0.05)]


def test_log_midpoint():
    mid = materialize(DomainSpec.grid(3, 3))[4]
    assert mid.re == pytest.approx(10 ** ((math.log10(4000) + 8) / 2), rel=1e-14)
    assert mid.rr == pytest.approx(10 ** ((-7 + math.log10(0.05)) / 2), rel=1e-14)
    first = materialize(DomainSpec.sobol(2))[0]
    assert (first.re, first.rr) == (mid.re, mid.rr)


def test_sobol_conditions_in_range_and_unique():
    pts = materialize(DomainSpec.sobol(65536))
    assert len(pts) == len(set(pts)) == 65536
    assert all(4000 <= p.re <= 1e8 and 1e-7 <= p.rr <= 0.05 for p in pts)


@pytest.mark.parametrize(
    "kw",
    [dict(rr_min=0.0), dict(re_min=1e8, re_max=4000), dict(sampler="lhs"), dict(nx=1), dict(sampler="sobol", n=1)],
)
def test_domain_validation(kw):
    with pytest.raises(ValueError):
        DomainSpec(**kw)


def test_estimator_text_forms():
    for text in ("approx:0", "approx:1", "approx:2", "traditional", "approx-seeded", "lambert"):
        assert str(Estimator.parse(text)) == text
    for bad in ("approx:3", "bogus"):
        with pytest.raises(ValueError):
            Estimator.parse(bad)


SMALL = DomainSpec.grid(12, 12)


def test_parallel_equals_sequential():
    seq = iteration_map("newton-x", "traditional", SMALL)
    par = iteration_map("newton-x", "traditional", SMALL, jobs=2)
    assert seq.metrics == par.metrics
    err_seq = error_map("approx:1", DomainSpec.sobol(300))
    err_par = error_map("approx:1", DomainSpec.sobol(300), jobs=3)
    assert err_seq.metrics == err_par.metrics


def test_determinism():
    assert error_map("lambert", DomainSpec.sobol(200)).metrics == error_map("lambert", DomainSpec.sobol(200)).metrics


def test_iteration_map_bounds():
    result = iteration_map("newton-x", "traditional", SMALL, max_iterations=100)
    assert result.metric_kind is MetricKind.ITERATION_COUNT
    assert result.n_nonconverged == 0
    assert all(1 <= m <= 100 for m in result.metrics)
    assert result.metrics[result.argmax_index] == result.max_value


def test_error_maps_non_negative():
    for est in ("approx:0", "traditional", "approx-seeded", "lambert"):
        assert min(error_map(est, DomainSpec.sobol(256)).metrics) >= 0


def test_non_converged_points_use_sentinel():
    result = iteration_map("fixed-point", None, DomainSpec.grid(3, 3), max_iterations=2)
    assert result.n_nonconverged > 0
    assert NONCONVERGED in result.metrics
    assert result.summary()["n_nonconverged"] == result.n_nonconverged


def test_argmax_ties_take_lowest_index():
    pts = [FlowConditions(1e4 * (i + 1), 1e-4) for i in range(4)]
    result = SweepResult(pts, [2.0, 5.0, NONCONVERGED, 5.0], MetricKind.ITERATION_COUNT)
    assert result.argmax_index == 1
    assert result.argmax == pts[1]
    assert result.mean == pytest.approx(4.0)


def test_mean_iterations_edge_cases():
    one = SweepResult([FlowConditions(1e5, 1e-4)], [3.0], MetricKind.ITERATION_COUNT)
    assert mean_iterations(one) == 3.0
    flat = SweepResult([FlowConditions(1e5, 1e-4)] * 5, [4.0] * 5, MetricKind.ITERATION_COUNT)
    assert mean_iterations(flat) == 4.0
    with pytest.raises(ValueError):
        mean_iterations(SweepResult([], [], MetricKind.ITERATION_COUNT))
    with pytest.raises(ValueError):
        mean_iterations(SweepResult([], [], MetricKind.RELATIVE_ERROR_PCT))


def test_csv_and_summary_format(tmp_path):
    result = error_map("approx:2", DomainSpec.grid(2, 3))
    result.write_csv(tmp_path / "m.csv")
    result.write_summary(tmp_path / "m.json")
    lines = (tmp_path / "m.csv").read_text().splitlines()
    assert lines[0] == "re,rr,metric"
    assert len(lines) == 7
    re, rr, metric = lines[1].split(",")
    assert float(re) == 4000.0 and float(rr) == 1e-7
    assert len(metric.split("e")[0].replace(".", "").lstrip("-")) == 17
    summary = json.loads((tmp_path / "m.json").read_text())
    assert set(summary) == {"metric_kind", "n_points", "max_value", "argmax_re", "argmax_rr", "mean", "n_nonconverged"}
    assert summary["metric_kind"] == "RelativeErrorPct"
    assert summary["n_points"] == 6


def test_reference_roots_are_certified():
    for fc in materialize(DomainSpec.sobol(2000)):
        assert abs(residual_x(reference_x(fc), fc)) <= 1e-13
