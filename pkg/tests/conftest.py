"""Спільні фікстури: еталонні ряди Іллінойсу, Нью-Йорка та Італії"""

import pytest

from core.assumptions import AssumptionConfig
from core.ingest import analysis_window, load_region_series
from core.records import ColumnMapping
from utils.config import Config

POPULATIONS = {
    'illinois': 12671821,
    'new_york': 19453561,
    'italy': 60359546,
}


def load_fixture(region_id: str):
    schema = ColumnMapping.canonical(region_id, POPULATIONS[region_id])
    return load_region_series(Config.get_fixture_path(f"{region_id}.csv"), schema)


@pytest.fixture(scope="session")
def illinois():
    return analysis_window(load_fixture('illinois'))


@pytest.fixture(scope="session")
def new_york():
    return analysis_window(load_fixture('new_york'))


@pytest.fixture(scope="session")
def italy():
    return analysis_window(load_fixture('italy'))


@pytest.fixture(scope="session")
def regions(illinois, new_york, italy):
    return {'illinois': illinois, 'new_york': new_york, 'italy': italy}


@pytest.fixture
def default_cfg():
    return AssumptionConfig.default()
