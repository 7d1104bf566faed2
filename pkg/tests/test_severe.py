"""Межі тяжких наслідків серед інфікованих (Італія)"""

from datetime import date

import pytest

from core.assumptions import AssumptionConfig
from core.bounds import BoundMethod, bound_series, severe_bound_series
from core.errors import DataValidationError
from core.records import ColumnMapping, SevereOutcome
from processing.processors import SevereProcessor
from tests.conftest import POPULATIONS
from tests.reference_tables import DATES, ITALY_SEVERE_BOUNDS
from utils.config import Config

TOLERANCE = 5e-3


@pytest.fixture(scope="module")
def severe_bounds(italy):
    envelope = bound_series(italy, AssumptionConfig.default(), BoundMethod.TEMPORAL_ENVELOPE)
    return {outcome: severe_bound_series(italy, envelope, outcome) for outcome in SevereOutcome}


def test_published_bounds(severe_bounds):
    for index, (day, expected) in enumerate(zip(DATES, ITALY_SEVERE_BOUNDS)):
        actual = []
        for outcome in (SevereOutcome.H, SevereOutcome.U, SevereOutcome.D):
            interval = severe_bounds[outcome].intervals[index]
            actual.extend([interval.lo, interval.hi])
        assert actual == pytest.approx(list(expected), abs=TOLERANCE), day


def test_death_bound_below_confirmed_fatality(italy, severe_bounds):
    # летальність серед підтверджених (~0.125 на 2020-04-06) переоцінює летальність серед інфікованих
    for day, interval in zip(severe_bounds[SevereOutcome.D].dates, severe_bounds[SevereOutcome.D].intervals):
        record = italy.record_on(day)
        assert interval.hi < 0.125
        assert interval.hi < record.cum_deaths / record.cum_positive


def test_method_tag(severe_bounds):
    assert {item.method for item in severe_bounds[SevereOutcome.U].intervals} == {BoundMethod.SEVERE_RATIO}


def test_missing_outcome(illinois, default_cfg):
    envelope = bound_series(illinois, default_cfg, BoundMethod.TEMPORAL_ENVELOPE)
    with pytest.raises(DataValidationError) as info:
        severe_bound_series(illinois, envelope, SevereOutcome.D)
    assert info.value.invariant == "missing_column"


class TestSevereProcessor:

    def test_report_columns(self):
        processor = SevereProcessor(lambda rates: AssumptionConfig.default(), outcomes=(SevereOutcome.D,))
        schema = ColumnMapping.canonical('italy', POPULATIONS['italy'])
        result = processor.process(Config.get_fixture_path('italy.csv'), schema)
        assert list(result.report.columns) == ['date', 'D_lo', 'D_hi', 'D_confirmed']
        last = result.report.iloc[-1]
        assert last['date'] == date(2020, 4, 6).isoformat()
        assert last['D_confirmed'] == pytest.approx(16523 / 132547)
        assert result.steps == ['validated', 'windowed', 'computed', 'reported']

    def test_missing_column_names_source(self):
        processor = SevereProcessor(lambda rates: AssumptionConfig.default())
        schema = ColumnMapping.canonical('illinois', POPULATIONS['illinois'])
        path = Config.get_fixture_path('illinois.csv')
        with pytest.raises(DataValidationError) as info:
            processor.process(path, schema)
        assert info.value.source == path
