"""Сітка припущень"""

from datetime import date

import pytest

from core.bounds import BoundMethod
from core.errors import ConfigError, DataValidationError
from core.sweep import SWEEP_COLUMNS, SweepGrid, run_sweep

EVAL_DATE = date(2020, 4, 6)


class TestSweepGrid:

    def test_axes_are_sorted_and_deduplicated(self):
        grid = SweepGrid(miss_lo_values=(0.1, 0.0, 0.1), miss_hi_values=(0.4,))
        assert grid.miss_lo_values == (0.0, 0.1)

    def test_inverted_points_are_skipped(self):
        grid = SweepGrid(miss_lo_values=(0.1, 0.5), miss_hi_values=(0.4,))
        points, skipped = grid.points()
        assert skipped == 1
        assert points == [(0.1, 0.4, None, BoundMethod.TEMPORAL_ENVELOPE)]

    def test_points_order(self):
        grid = SweepGrid(miss_lo_values=(0.1, 0.0), miss_hi_values=(0.4, 0.2),
                         methods=(BoundMethod.ASYM_REFINED, BoundMethod.TESTING_MONOTONE),
                         alpha_lo_values=(0.5, 0.25))
        points, _ = grid.points()
        assert points == sorted(points, key=lambda point: (point[0], point[1]))
        assert points[:3] == [
            (0.0, 0.2, None, BoundMethod.TESTING_MONOTONE),
            (0.0, 0.2, 0.25, BoundMethod.ASYM_REFINED),
            (0.0, 0.2, 0.5, BoundMethod.ASYM_REFINED),
        ]

    def test_asym_needs_alpha_axis(self):
        with pytest.raises(ConfigError) as info:
            SweepGrid(miss_lo_values=(0.1,), miss_hi_values=(0.4,), methods=(BoundMethod.ASYM_REFINED,))
        assert info.value.invariant == "alpha_required"

    def test_axis_range(self):
        with pytest.raises(ConfigError):
            SweepGrid(miss_lo_values=(-0.1,), miss_hi_values=(0.4,))

    def test_from_dict(self):
        grid = SweepGrid.from_dict({
            'methods': ['envelope', 'asym_refined'],
            'grid': {'miss_lo': [0.0, 0.1], 'miss_hi': [0.4], 'alpha_lo': [0.25], 'alpha_hi': 0.5},
        })
        assert grid.methods == (BoundMethod.TEMPORAL_ENVELOPE, BoundMethod.ASYM_REFINED)
        assert grid.alpha_hi == 0.5


class TestRunSweep:

    def test_single_point_matches_envelope(self, italy):
        grid = SweepGrid(miss_lo_values=(0.1,), miss_hi_values=(0.4,))
        result = run_sweep(italy, grid, EVAL_DATE)
        assert len(result.rows) == 1
        bound = result.rows[0].bound
        assert bound.lo == pytest.approx(0.003, abs=1e-3)
        assert bound.hi == pytest.approx(0.510, abs=1e-3)

    def test_lower_miss_rate_lowers_lower_bound(self, italy):
        grid = SweepGrid(miss_lo_values=(0.0, 0.1), miss_hi_values=(0.4,))
        rows = run_sweep(italy, grid, EVAL_DATE).rows
        assert rows[0].bound.lo < rows[1].bound.lo
        assert rows[0].bound.hi == rows[1].bound.hi

    def test_asym_rows(self, new_york):
        grid = SweepGrid(miss_lo_values=(0.1,), miss_hi_values=(0.4,),
                         methods=(BoundMethod.TEMPORAL_ENVELOPE, BoundMethod.ASYM_REFINED),
                         alpha_lo_values=(0.25, 0.5), alpha_hi=0.4)
        rows = run_sweep(new_york, grid, EVAL_DATE).rows
        assert [row.alpha_lo for row in rows] == [None, 0.25, 0.5]
        assert rows[0].bound.lo < rows[1].bound.lo < rows[2].bound.lo

    def test_empty_valid_grid(self, italy):
        grid = SweepGrid(miss_lo_values=(0.5,), miss_hi_values=(0.4,))
        with pytest.raises(ConfigError) as info:
            run_sweep(italy, grid, EVAL_DATE)
        assert info.value.invariant == "empty_grid"
        assert "empty valid grid" in str(info.value)

    def test_date_outside_window(self, italy):
        grid = SweepGrid(miss_lo_values=(0.1,), miss_hi_values=(0.4,))
        with pytest.raises(DataValidationError) as info:
            run_sweep(italy, grid, date(2020, 3, 1))
        assert info.value.invariant == "date_absent"

    def test_deterministic_frame(self, illinois):
        grid = SweepGrid(miss_lo_values=(0.0, 0.1, 0.2), miss_hi_values=(0.1, 0.4))
        first = run_sweep(illinois, grid, EVAL_DATE)
        second = run_sweep(illinois, grid, EVAL_DATE)
        assert first.to_csv() == second.to_csv()
        assert list(first.to_frame().columns) == SWEEP_COLUMNS
        assert first.header() == "# eval_date=2020-04-06 rows=5 skipped=1"
