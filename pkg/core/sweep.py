"""
Sweep - оцінка меж на сітці припущень
Показує, як висновки реагують на невизначеність NPV та частки безсимптомних
"""

import logging
from dataclasses import dataclass, field
from datetime import date
from itertools import product
from typing import Mapping, Optional, Sequence

import pandas as pd

from core.assumptions import AssumptionConfig
from core.bounds import BoundInterval, BoundMethod, bound_series
from core.errors import ConfigError, DataValidationError
from core.records import RegionSeries

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ['miss_lo', 'miss_hi', 'alpha_lo', 'method', 'lo', 'hi']

_METHOD_ORDER = {method: index for index, method in enumerate(BoundMethod)}


def _ordered(values: Sequence[float], axis: str) -> tuple[float, ...]:
    if not values:
        raise ConfigError(f"Порожня вісь сітки '{axis}'", invariant="empty_axis")
    for value in values:
        if not (0.0 <= value <= 1.0):
            raise ConfigError(f"Значення {value} осі '{axis}' поза [0, 1]", invariant="probability_range")
    return tuple(sorted(set(float(value) for value in values)))


@dataclass(frozen=True)
class SweepGrid:
    """
    Сітка припущень

    Оцінюються лише пари miss_lo ≤ miss_hi. Вісь alpha_lo використовується
    методом asym_refined; верхня межа α береться як max(alpha_lo, alpha_hi).
    """
    miss_lo_values: tuple[float, ...]
    miss_hi_values: tuple[float, ...]
    methods: tuple[BoundMethod, ...] = (BoundMethod.TEMPORAL_ENVELOPE,)
    alpha_lo_values: tuple[float, ...] = ()
    alpha_hi: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, 'miss_lo_values', _ordered(self.miss_lo_values, 'miss_lo'))
        object.__setattr__(self, 'miss_hi_values', _ordered(self.miss_hi_values, 'miss_hi'))
        if self.alpha_lo_values:
            object.__setattr__(self, 'alpha_lo_values', _ordered(self.alpha_lo_values, 'alpha_lo'))
        if not self.methods:
            raise ConfigError("Не вибрано жодного методу", invariant="empty_axis")
        if BoundMethod.ASYM_REFINED in self.methods and not self.alpha_lo_values:
            raise ConfigError("asym_refined потребує осі alpha_lo", invariant="alpha_required")

    @classmethod
    def from_dict(cls, section: Mapping) -> 'SweepGrid':
        grid = section.get('grid', section)
        methods = tuple(BoundMethod.parse(name) for name in section.get('methods', ['temporal_envelope']))
        return cls(
            miss_lo_values=tuple(grid.get('miss_lo', ())),
            miss_hi_values=tuple(grid.get('miss_hi', ())),
            methods=methods,
            alpha_lo_values=tuple(grid.get('alpha_lo', ())),
            alpha_hi=grid.get('alpha_hi'),
        )

    def points(self) -> tuple[list[tuple], int]:
        """
        Точки сітки у лексикографічному порядку

        Returns:
            Tuple[[(miss_lo, miss_hi, alpha_lo, method), ...], skipped_count]
        """
        points = []
        skipped = 0
        for miss_lo, miss_hi in product(self.miss_lo_values, self.miss_hi_values):
            if miss_lo > miss_hi:
                skipped += len(self._alpha_method_pairs())
                logger.warning("Пропущено точку сітки miss = [%s, %s]", miss_lo, miss_hi)
                continue
            for alpha_lo, method in self._alpha_method_pairs():
                points.append((miss_lo, miss_hi, alpha_lo, method))
        points.sort(key=lambda point: (point[0], point[1],
                                       -1.0 if point[2] is None else point[2],
                                       _METHOD_ORDER[point[3]]))
        return points, skipped

    def _alpha_method_pairs(self) -> list[tuple[Optional[float], BoundMethod]]:
        pairs = []
        for method in self.methods:
            if method is BoundMethod.ASYM_REFINED:
                pairs.extend((alpha_lo, method) for alpha_lo in self.alpha_lo_values)
            else:
                pairs.append((None, method))
        return pairs


@dataclass(frozen=True)
class SweepRow:
    miss_lo: float
    miss_hi: float
    alpha_lo: Optional[float]
    method: BoundMethod
    bound: BoundInterval


@dataclass
class SweepResult:
    """Рядки сітки та кількість пропущених точок"""
    eval_date: date
    rows: list[SweepRow] = field(default_factory=list)
    skipped: int = 0

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [[row.miss_lo, row.miss_hi, row.alpha_lo, row.method.value, row.bound.lo, row.bound.hi]
             for row in self.rows],
            columns=SWEEP_COLUMNS,
        )

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False, lineterminator='\n')

    def header(self) -> str:
        return (f"# eval_date={self.eval_date.isoformat()} rows={len(self.rows)} "
                f"skipped={self.skipped}")


def _point_config(base: AssumptionConfig, grid: SweepGrid, miss_lo: float, miss_hi: float,
                  alpha_lo: Optional[float]) -> AssumptionConfig:
    cfg = base.with_miss_rate(miss_lo, miss_hi)
    if alpha_lo is not None:
        alpha_hi = max(alpha_lo, grid.alpha_hi if grid.alpha_hi is not None else alpha_lo)
        cfg = cfg.with_alpha(alpha_lo, alpha_hi)
    return cfg


def run_sweep(series: RegionSeries, grid: SweepGrid, eval_date: date,
              base: Optional[AssumptionConfig] = None) -> SweepResult:
    """
    Межі на eval_date для кожної допустимої точки сітки та кожного методу

    Args:
        series: Ряд у вікні аналізу
        grid: Сітка припущень
        eval_date: Дата оцінки (має бути у вікні)
        base: Решта припущень (untested тощо); за замовчуванням монотонність тестування

    Returns:
        SweepResult з рядками у лексикографічному порядку
    """
    if eval_date not in series.dates:
        raise DataValidationError(f"Дата {eval_date.isoformat()} поза вікном аналізу",
                                  invariant="date_absent", date=eval_date)
    base = base or AssumptionConfig.default()

    points, skipped = grid.points()
    if not points:
        raise ConfigError("Порожня сітка: немає точок з miss_lo ≤ miss_hi (empty valid grid)",
                          invariant="empty_grid")

    result = SweepResult(eval_date=eval_date, skipped=skipped)
    for miss_lo, miss_hi, alpha_lo, method in points:
        cfg = _point_config(base, grid, miss_lo, miss_hi, alpha_lo)
        bound = bound_series(series, cfg, method).interval_on(eval_date)
        result.rows.append(SweepRow(miss_lo, miss_hi, alpha_lo, method, bound))

    logger.info("Сітка: %d рядків, %d пропущено", len(result.rows), skipped)
    return result
