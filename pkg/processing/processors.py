"""
Concrete Series Processors
Таблиці ймовірностей, меж на частку інфікованих, меж тяжких наслідків та сітки
"""

from datetime import date
from typing import Callable, Optional, Sequence

import pandas as pd

from core.assumptions import AssumptionConfig
from core.bounds import BoundMethod, BoundSeries, bound_series, severe_bound_series
from core.errors import DataValidationError
from core.ingest import confirmed_case_rate, rates_series
from core.records import EmpiricalRates, RegionSeries, SevereOutcome
from core.sweep import SweepGrid, SweepResult, run_sweep
from .template import SeriesProcessor

AssumptionFactory = Callable[[Sequence[EmpiricalRates]], AssumptionConfig]


class RatesProcessor(SeriesProcessor):
    """Спостережувані ймовірності за датами"""

    def __init__(self, **kwargs):
        super().__init__("RatesProcessor", **kwargs)

    def process_data(self, series: RegionSeries) -> list[EmpiricalRates]:
        return rates_series(series)

    def generate_report(self, series: RegionSeries, processed: list[EmpiricalRates]) -> pd.DataFrame:
        outcomes = [outcome for outcome in SevereOutcome if series.has_outcome(outcome)]
        rows = []
        for rates in processed:
            row = {
                'date': rates.date.isoformat(),
                'p_tested': rates.p_tested,
                'p_pos_given_tested': rates.p_pos_given_tested,
            }
            for outcome in outcomes:
                row[f'p_{outcome.value}'] = rates.severe_rate(outcome)
            rows.append(row)
        columns = ['date', 'p_tested', 'p_pos_given_tested'] + [f'p_{outcome.value}' for outcome in outcomes]
        return pd.DataFrame(rows, columns=columns)


class BoundsProcessor(SeriesProcessor):
    """Межі на P(C_d=1) вибраним методом"""

    def __init__(self, assumptions: AssumptionFactory, method: BoundMethod = BoundMethod.TEMPORAL_ENVELOPE,
                 **kwargs):
        super().__init__("BoundsProcessor", **kwargs)
        self._assumptions = assumptions
        self._method = method

    def process_data(self, series: RegionSeries) -> BoundSeries:
        cfg = self._assumptions(rates_series(series))
        bounds = bound_series(series, cfg, self._method)
        clamped = sum(item.clamped for item in bounds.intervals)
        if clamped:
            self.notify('clamped', {'method': self._method.value, 'dates': clamped})
        self.notify('computed', {'method': self._method.value, 'dates': len(bounds)})
        return bounds

    def generate_report(self, series: RegionSeries, processed: BoundSeries) -> pd.DataFrame:
        return processed.to_frame()


class SevereProcessor(SeriesProcessor):
    """Межі на P(V_d=1 | C_d=1) за межами обвідної та частка серед підтверджених"""

    def __init__(self, assumptions: AssumptionFactory,
                 outcomes: Sequence[SevereOutcome] = tuple(SevereOutcome), **kwargs):
        super().__init__("SevereProcessor", **kwargs)
        self._assumptions = assumptions
        self._outcomes = tuple(outcomes)

    def process_data(self, series: RegionSeries) -> dict[SevereOutcome, BoundSeries]:
        for outcome in self._outcomes:
            if not series.has_outcome(outcome):
                raise DataValidationError(f"Відсутній стовпець '{outcome.field_name}'",
                                          invariant="missing_column", source=self.source)
        cfg = self._assumptions(rates_series(series))
        envelope = bound_series(series, cfg, BoundMethod.TEMPORAL_ENVELOPE)
        result = {outcome: severe_bound_series(series, envelope, outcome) for outcome in self._outcomes}
        self.notify('computed', {'outcomes': ",".join(outcome.value for outcome in self._outcomes)})
        return result

    def generate_report(self, series: RegionSeries, processed: dict[SevereOutcome, BoundSeries]) -> pd.DataFrame:
        rows = []
        for index, day in enumerate(series.dates):
            row = {'date': day.isoformat()}
            for outcome, bounds in processed.items():
                interval = bounds.intervals[index]
                row[f'{outcome.value}_lo'] = interval.lo
                row[f'{outcome.value}_hi'] = interval.hi
                row[f'{outcome.value}_confirmed'] = _confirmed_or_none(series, day, outcome)
            rows.append(row)
        columns = ['date'] + [f'{outcome.value}_{suffix}' for outcome in processed
                              for suffix in ('lo', 'hi', 'confirmed')]
        return pd.DataFrame(rows, columns=columns)


def _confirmed_or_none(series: RegionSeries, day: date, outcome: SevereOutcome) -> Optional[float]:
    if series.record_on(day).cum_positive == 0:
        return None
    return confirmed_case_rate(series, day, outcome)


class SweepProcessor(SeriesProcessor):
    """Межі на дату оцінки для кожної точки сітки"""

    def __init__(self, grid: SweepGrid, eval_date: date, assumptions: AssumptionFactory, **kwargs):
        super().__init__("SweepProcessor", **kwargs)
        self._grid = grid
        self._eval_date = eval_date
        self._assumptions = assumptions

    def process_data(self, series: RegionSeries) -> SweepResult:
        base = self._assumptions(rates_series(series))
        result = run_sweep(series, self._grid, self._eval_date, base)
        self.notify('computed', {'rows': len(result.rows), 'skipped': result.skipped})
        return result

    def generate_report(self, series: RegionSeries, processed: SweepResult) -> pd.DataFrame:
        return processed.to_frame()
