"""
Bounds - множинні оцінки частки інфікованих
Найгірший випадок, монотонність тестування, часова обвідна, уточнення
для безсимптомних, межі тяжких наслідків та стратифіковані межі
"""

import io
import json
import logging
from dataclasses import dataclass, field
from datetime import date
from enum import Enum
from typing import Hashable, Mapping, Optional, Sequence

import numpy as np
import pandas as pd

from core.assumptions import AssumptionConfig
from core.errors import AssumptionInconsistencyError, ConfigError, DataValidationError
from core.ingest import rates_series
from core.records import EmpiricalRates, RegionSeries, SevereOutcome
from utils.config import Config

logger = logging.getLogger(__name__)


class BoundMethod(Enum):
    WORST_CASE = 'worst_case'
    TESTING_MONOTONE = 'testing_monotone'
    TEMPORAL_ENVELOPE = 'temporal_envelope'
    ASYM_REFINED = 'asym_refined'
    SEVERE_RATIO = 'severe_ratio'
    STRATIFIED = 'stratified'

    @classmethod
    def parse(cls, value: str) -> 'BoundMethod':
        if value == 'envelope':
            return cls.TEMPORAL_ENVELOPE
        try:
            return cls(value)
        except ValueError:
            raise ConfigError(f"Невідомий метод: {value}", invariant="method") from None


@dataclass(frozen=True)
class BoundInterval:
    """Замкнений підінтервал [0, 1] з позначкою методу"""
    lo: float
    hi: float
    method: BoundMethod
    clamped: bool = False

    def __post_init__(self):
        if not (0.0 <= self.lo <= self.hi <= 1.0):
            raise ValueError(f"Некоректний інтервал [{self.lo}, {self.hi}]")

    def contains(self, value: float) -> bool:
        return self.lo <= value <= self.hi

    def is_subset_of(self, other: 'BoundInterval') -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def __str__(self) -> str:
        return f"[{self.lo:.6f}, {self.hi:.6f}] ({self.method.value})"


def make_interval(lo: float, hi: float, method: BoundMethod, day: Optional[date] = None,
                  clamped: bool = False) -> BoundInterval:
    """
    Обрізати обчислені межі до [0, 1] та перевірити, що вони не перетнулися

    Raises:
        AssumptionInconsistencyError: якщо lo > hi
    """
    if lo > hi:
        raise AssumptionInconsistencyError(
            f"Межі перетнулися: lo = {lo:.6f} > hi = {hi:.6f} ({method.value}); "
            f"дані спростовують прийняті припущення",
            invariant="bounds_cross",
            date=day,
        )
    was_clamped = clamped or lo < 0.0 or hi > 1.0
    if was_clamped and not clamped:
        logger.warning("Межі [%.6f, %.6f] обрізано до [0, 1] (%s, %s)", lo, hi, method.value,
                       day.isoformat() if day else "-")
    return BoundInterval(
        lo=min(max(lo, 0.0), 1.0),
        hi=min(max(hi, 0.0), 1.0),
        method=method,
        clamped=was_clamped,
    )


@dataclass(frozen=True)
class WidthDecomposition:
    """Внески у ширину межі: точність тесту та ненатестовані"""
    accuracy_part: float
    untested_part: float

    @property
    def total(self) -> float:
        return self.accuracy_part + self.untested_part


def worst_case_bound(rates: EmpiricalRates, cfg: AssumptionConfig) -> BoundInterval:
    """
    Межа на P(C_d=1) за явних інтервалів [L_d0, U_d0] та [L_d10, U_d10]

    Args:
        rates: Спостережувані ймовірності на дату
        cfg: Припущення з явним інтервалом для ненатестованих

    Returns:
        BoundInterval з методом worst_case
    """
    if cfg.derives_untested:
        raise ConfigError("worst_case потребує явного інтервалу для ненатестованих",
                          invariant="untested_explicit", date=rates.date)
    miss = cfg.miss_rate_on(rates.date)
    untested = cfg.untested
    tested_negative = rates.p_tested_negative
    lo = rates.p_pos + untested.lo * rates.p_untested + miss.lo * tested_negative
    hi = rates.p_pos + untested.hi * rates.p_untested + miss.hi * tested_negative
    return make_interval(lo, hi, BoundMethod.WORST_CASE, rates.date)


def bound_width(bound: BoundInterval) -> float:
    """Ширина інтервалу hi − lo"""
    return bound.hi - bound.lo


def monotone_untested_upper(rates: EmpiricalRates, u_d10: float) -> float:
    """
    U_d0, виведена з монотонності тестування

    Returns:
        u_d10 + (1 − u_d10)·P(R_d=1|T_d=1)
    """
    if not (0.0 <= u_d10 <= 1.0):
        raise ConfigError(f"U_d10 поза [0, 1]: {u_d10}", invariant="interval_order")
    return u_d10 + (1.0 - u_d10) * rates.p_pos_given_tested


def testing_monotone_bound(rates: EmpiricalRates, cfg: AssumptionConfig) -> BoundInterval:
    """
    Межа на P(C_d=1) за монотонності тестування (L_d0 = 0, U_d0 з U_d10)

    Args:
        rates: Спостережувані ймовірності на дату
        cfg: Припущення з untested = TESTING_MONOTONE

    Returns:
        BoundInterval з методом testing_monotone
    """
    if not cfg.derives_untested:
        raise ConfigError("testing_monotone потребує untested = testing_monotone",
                          invariant="untested_derived", date=rates.date)
    miss = cfg.miss_rate_on(rates.date)
    tested_negative = rates.p_tested_negative
    lo = rates.p_pos + miss.lo * tested_negative
    hi = (rates.p_pos + miss.hi * tested_negative
          + (rates.p_pos_given_tested + miss.hi * rates.p_neg_given_tested) * rates.p_untested)
    return make_interval(lo, hi, BoundMethod.TESTING_MONOTONE, rates.date)


def width_decomposition(rates: EmpiricalRates, cfg: AssumptionConfig) -> WidthDecomposition:
    """
    Розклад ширини межі у замкненій формі

    Для явного інтервалу ненатестованих:
        (U_d10 − L_d10)·P(R=0|T=1)·P(T=1) + (U_d0 − L_d0)·P(T=0)
    За монотонності тестування:
        (U_d10 − L_d10)·P(R=0|T=1)·P(T=1) + [r + U_d10·(1 − r)]·P(T=0)
    """
    miss = cfg.miss_rate_on(rates.date)
    accuracy_part = (miss.hi - miss.lo) * rates.p_neg_given_tested * rates.p_tested
    if cfg.derives_untested:
        untested_part = (rates.p_pos_given_tested + miss.hi * rates.p_neg_given_tested) * rates.p_untested
    else:
        untested_part = (cfg.untested.hi - cfg.untested.lo) * rates.p_untested
    return WidthDecomposition(accuracy_part=accuracy_part, untested_part=untested_part)


def base_bound(rates: EmpiricalRates, cfg: AssumptionConfig) -> BoundInterval:
    """Межа на дату: testing_monotone або worst_case залежно від cfg.untested"""
    if cfg.derives_untested:
        return testing_monotone_bound(rates, cfg)
    return worst_case_bound(rates, cfg)


def temporal_envelope(intervals: Sequence[BoundInterval],
                      dates: Optional[Sequence[date]] = None) -> list[BoundInterval]:
    """
    Часова обвідна: lo є біжучим максимумом минулих нижніх меж,
    hi є мінімумом верхніх меж поточної та наступних дат

    Args:
        intervals: Межі за впорядкованими датами
        dates: Дати для повідомлень про перетин

    Returns:
        Список BoundInterval з методом temporal_envelope
    """
    if not intervals:
        return []
    los = np.maximum.accumulate(np.array([item.lo for item in intervals], dtype=float))
    his = np.minimum.accumulate(np.array([item.hi for item in intervals], dtype=float)[::-1])[::-1]

    result = []
    for index, item in enumerate(intervals):
        day = dates[index] if dates is not None else None
        result.append(make_interval(float(los[index]), float(his[index]),
                                    BoundMethod.TEMPORAL_ENVELOPE, day, clamped=item.clamped))
    return result


def _refined_lower(rates: EmpiricalRates, cfg: AssumptionConfig) -> tuple[float, bool]:
    if cfg.alpha is None:
        raise ConfigError("Не задано інтервал частки безсимптомних", invariant="alpha_required",
                          date=rates.date)
    if cfg.alpha.hi >= 1.0:
        raise ConfigError(f"Потрібно α_hi < 1, отримано {cfg.alpha.hi}", invariant="alpha_below_one",
                          date=rates.date)
    miss = cfg.miss_rate_on(rates.date)
    lower = rates.p_pos + miss.lo * rates.p_tested_negative
    refined = lower / (1.0 - cfg.alpha.lo)
    if refined > 1.0:
        logger.warning("Уточнену нижню межу %.6f обрізано до 1 (%s)", refined, rates.date.isoformat())
        return 1.0, True
    return refined, False


def asymptomatic_refined_lower(rates: EmpiricalRates, cfg: AssumptionConfig) -> float:
    """
    Нижня межа з урахуванням частки безсимптомних α ∈ [α_lo, α_hi]

    Returns:
        (1 − α_lo)⁻¹·[P(R_d=1) + L_d10·P(T_d=1, R_d=0)], не більше 1
    """
    return _refined_lower(rates, cfg)[0]


def asymptomatic_envelope(rates: Sequence[EmpiricalRates], cfg: AssumptionConfig) -> list[BoundInterval]:
    """
    Уточнені межі: біжучий максимум уточнених нижніх меж та верхня межа обвідної
    """
    envelope = temporal_envelope([base_bound(item, cfg) for item in rates], [item.date for item in rates])
    refined = [_refined_lower(item, cfg) for item in rates]
    lowers = np.maximum.accumulate(np.array([value for value, _ in refined], dtype=float))
    # обрізана до 1 межа домінує в усіх наступних максимумах
    clamped = np.logical_or.accumulate(np.array([flag for _, flag in refined], dtype=bool))
    return [
        make_interval(float(lowers[index]), env.hi, BoundMethod.ASYM_REFINED, rates[index].date,
                      clamped=env.clamped or bool(clamped[index]))
        for index, env in enumerate(envelope)
    ]


def severe_conditional_bound(p_severe: float, infection_bound: BoundInterval,
                             day: Optional[date] = None) -> BoundInterval:
    """
    Межа на P(V_d=1 | C_d=1) = P(V_d=1) / P(C_d=1)

    Нижня межа досягається на верхній межі P(C_d=1), верхня на нижній.
    Якщо нижня межа інфікованих дорівнює 0, верхня межа дорівнює 1.

    Raises:
        AssumptionInconsistencyError: якщо P(V_d=1) > верхньої межі P(C_d=1)
    """
    if not (0.0 <= p_severe <= 1.0):
        raise ConfigError(f"P(V_d=1) поза [0, 1]: {p_severe}", invariant="probability_range", date=day)
    if p_severe > infection_bound.hi:
        raise AssumptionInconsistencyError(
            f"P(V_d=1) = {p_severe:.6f} перевищує верхню межу P(C_d=1) = {infection_bound.hi:.6f}",
            invariant="severe_implies_infected",
            date=day,
        )
    if p_severe == 0.0:
        return BoundInterval(0.0, 0.0, BoundMethod.SEVERE_RATIO)

    lo = p_severe / infection_bound.hi
    if infection_bound.lo == 0.0:
        return BoundInterval(lo, 1.0, BoundMethod.SEVERE_RATIO)
    hi = p_severe / infection_bound.lo
    return make_interval(lo, hi, BoundMethod.SEVERE_RATIO, day)


@dataclass(frozen=True)
class StratifiedBounds:
    """Межі за стратами та, за наявності ваг, їхня суміш"""
    per_stratum: Mapping[Hashable, BoundInterval]
    blend: Optional[BoundInterval] = None


def blend_weights_from_population(populations: Mapping[Hashable, int]) -> dict:
    """Ваги страт як частки населення"""
    total = sum(populations.values())
    if total <= 0:
        raise ConfigError("Сумарне населення страт має бути додатним", invariant="population_positive")
    return {key: value / total for key, value in populations.items()}


def stratified_bound(per_stratum: Mapping[Hashable, tuple[EmpiricalRates, AssumptionConfig]],
                     weights: Optional[Mapping[Hashable, float]] = None) -> StratifiedBounds:
    """
    Межі всередині кожної страти X та, якщо задано ваги, суміш Σ w_X·bound_X

    Args:
        per_stratum: X → (спостережувані ймовірності, припущення)
        weights: X → w_X, сума має дорівнювати 1

    Returns:
        StratifiedBounds
    """
    bounds = {key: base_bound(rates, cfg) for key, (rates, cfg) in per_stratum.items()}
    if weights is None:
        return StratifiedBounds(per_stratum=bounds)

    if set(weights) != set(bounds):
        raise ConfigError("Ключі ваг не збігаються зі стратами", invariant="weights_keys")
    if any(weight < 0.0 for weight in weights.values()):
        raise ConfigError("Ваги мають бути невід'ємними", invariant="weights_nonnegative")
    total = sum(weights.values())
    if abs(total - 1.0) > Config.WEIGHT_TOLERANCE:
        raise ConfigError(f"Сума ваг {total} не дорівнює 1", invariant="weights_sum")

    lo = sum(weights[key] * bound.lo for key, bound in bounds.items())
    hi = sum(weights[key] * bound.hi for key, bound in bounds.items())
    blend = make_interval(lo, hi, BoundMethod.STRATIFIED,
                          clamped=any(bound.clamped for bound in bounds.values()))
    return StratifiedBounds(per_stratum=bounds, blend=blend)


@dataclass(frozen=True)
class BoundSeries:
    """Межі для кожної дати ряду разом зі знімком припущень"""
    region_id: str
    dates: tuple[date, ...]
    intervals: tuple[BoundInterval, ...]
    config: Optional[AssumptionConfig] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.dates) != len(self.intervals):
            raise ValueError("Кількість дат і меж не збігається")

    def interval_on(self, day: date) -> BoundInterval:
        return self.intervals[self.dates.index(day)]

    def __len__(self) -> int:
        return len(self.dates)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            'date': [day.isoformat() for day in self.dates],
            'method': [item.method.value for item in self.intervals],
            'lo': [item.lo for item in self.intervals],
            'hi': [item.hi for item in self.intervals],
            'clamped': [item.clamped for item in self.intervals],
        }, columns=['date', 'method', 'lo', 'hi', 'clamped'])

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False, lineterminator='\n')

    def to_json(self) -> str:
        data = {
            'region_id': self.region_id,
            'config': self.config.to_dict() if self.config is not None else None,
            'intervals': [
                {'date': day.isoformat(), 'method': item.method.value,
                 'lo': item.lo, 'hi': item.hi, 'clamped': item.clamped}
                for day, item in zip(self.dates, self.intervals)
            ],
        }
        return json.dumps(data, indent=2, ensure_ascii=False)

    @classmethod
    def from_rows(cls, region_id: str, rows: Sequence[Mapping]) -> 'BoundSeries':
        dates, intervals = [], []
        for index, row in enumerate(rows, start=1):
            try:
                dates.append(date.fromisoformat(str(row['date'])))
                intervals.append(BoundInterval(
                    lo=float(row['lo']),
                    hi=float(row['hi']),
                    method=BoundMethod(str(row['method'])),
                    clamped=str(row.get('clamped', False)).lower() == 'true',
                ))
            except (KeyError, ValueError) as exc:
                raise DataValidationError(f"Некоректний запис меж: {exc}", invariant="bound_series_row",
                                          row=index) from None
        return cls(region_id=region_id, dates=tuple(dates), intervals=tuple(intervals))

    @classmethod
    def from_csv(cls, text: str, region_id: str = "") -> 'BoundSeries':
        try:
            frame = pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)
        except (pd.errors.EmptyDataError, pd.errors.ParserError) as exc:
            raise DataValidationError(f"Некоректний файл меж: {exc}", invariant="bound_series") from None
        return cls.from_rows(region_id, frame.to_dict(orient='records'))

    @classmethod
    def from_json(cls, text: str) -> 'BoundSeries':
        try:
            data = json.loads(text)
            return cls.from_rows(data.get('region_id', ""), data['intervals'])
        except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as exc:
            raise DataValidationError(f"Некоректний файл меж: {exc}", invariant="bound_series") from None


def bound_series(series: RegionSeries, cfg: AssumptionConfig, method: BoundMethod,
                 allow_untested: bool = False) -> BoundSeries:
    """
    Межі на P(C_d=1) для кожної дати ряду

    Args:
        series: Ряд у вікні аналізу
        cfg: Припущення
        method: worst_case, testing_monotone, temporal_envelope або asym_refined
        allow_untested: Дозволити дати з cum_tested = 0 (r = 0)

    Returns:
        BoundSeries
    """
    rates = rates_series(series, allow_untested)
    dates = tuple(item.date for item in rates)

    if method is BoundMethod.WORST_CASE:
        intervals = [worst_case_bound(item, cfg) for item in rates]
    elif method is BoundMethod.TESTING_MONOTONE:
        intervals = [testing_monotone_bound(item, cfg) for item in rates]
    elif method is BoundMethod.TEMPORAL_ENVELOPE:
        intervals = temporal_envelope([base_bound(item, cfg) for item in rates], dates)
    elif method is BoundMethod.ASYM_REFINED:
        intervals = asymptomatic_envelope(rates, cfg)
    else:
        raise ConfigError(f"Метод {method.value} не дає меж на частку інфікованих", invariant="method")

    return BoundSeries(region_id=series.region_id, dates=dates, intervals=tuple(intervals), config=cfg)


def severe_bound_series(series: RegionSeries, infection: BoundSeries, outcome: SevereOutcome) -> BoundSeries:
    """Межі на P(V_d=1 | C_d=1) для наслідку за межами інфікованих"""
    if not series.has_outcome(outcome):
        raise DataValidationError(f"Відсутній стовпець '{outcome.field_name}'", invariant="missing_column")
    intervals = []
    for day, infection_bound in zip(infection.dates, infection.intervals):
        count = series.record_on(day).severe_count(outcome)
        intervals.append(severe_conditional_bound(count / series.population, infection_bound, day))
    return BoundSeries(region_id=series.region_id, dates=infection.dates, intervals=tuple(intervals),
                       config=infection.config)
