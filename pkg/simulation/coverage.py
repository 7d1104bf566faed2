"""
Coverage - оракул валідності меж
Проганяє ряд синтетичного світу через повний конвеєр і перевіряє,
чи містять межі справжню частку інфікованих
"""

import logging
from dataclasses import dataclass, field
from datetime import date
from functools import reduce
from typing import Iterable, Optional, Sequence

from core.assumptions import AssumptionConfig, ProbabilityInterval
from core.bounds import BoundMethod, bound_series
from core.errors import AssumptionInconsistencyError, CoverageFailure
from core.ingest import parse_region_series
from observers.observer import Subject
from simulation.world import SimParams, SyntheticWorld, simulate

logger = logging.getLogger(__name__)

COVERAGE_TOLERANCE = 1e-12

DEFAULT_METHODS = (BoundMethod.TESTING_MONOTONE, BoundMethod.TEMPORAL_ENVELOPE)


@dataclass(frozen=True)
class DayCoverage:
    seed: int
    date: date
    method: BoundMethod
    truth: float
    lo: Optional[float]
    hi: Optional[float]

    @property
    def covered(self) -> bool:
        if self.lo is None or self.hi is None:
            return False
        return self.lo - COVERAGE_TOLERANCE <= self.truth <= self.hi + COVERAGE_TOLERANCE

    @property
    def relative_slack(self) -> float:
        """min(truth − lo, hi − truth) / (hi − lo); від'ємна, якщо truth поза межами"""
        if self.lo is None or self.hi is None:
            return float('-inf')
        slack = min(self.truth - self.lo, self.hi - self.truth)
        width = self.hi - self.lo
        if width > 0.0:
            return slack / width
        return 0.0 if self.covered else float('-inf')


@dataclass(frozen=True)
class AssumptionAudit:
    """
    Перевірка припущень у реалізованому світі

    testing_monotone_days: дні, де P(C_d=1|T_d=1) < P(C_d=1|T_d=0)
    miss_rate_days: дні, де реалізована P(C_d=1|T_d=1,R_d=0) поза інтервалом
    parameter_flags: порушення на рівні параметрів (seed, тег)
    """
    testing_monotone_days: tuple[tuple[int, date], ...] = ()
    miss_rate_days: tuple[tuple[int, date], ...] = ()
    parameter_flags: tuple[tuple[int, str], ...] = ()

    @property
    def flag_count(self) -> int:
        return len(self.testing_monotone_days) + len(self.miss_rate_days) + len(self.parameter_flags)

    @property
    def clean(self) -> bool:
        return self.flag_count == 0

    def merge(self, other: 'AssumptionAudit') -> 'AssumptionAudit':
        return AssumptionAudit(
            testing_monotone_days=self.testing_monotone_days + other.testing_monotone_days,
            miss_rate_days=self.miss_rate_days + other.miss_rate_days,
            parameter_flags=self.parameter_flags + other.parameter_flags,
        )


@dataclass(frozen=True)
class CoverageReport:
    """
    Покриття за днями та методами плюс аудит припущень

    Загальне покриття є кон'юнкцією денних індикаторів. merge асоціативне.
    """
    days: tuple[DayCoverage, ...] = ()
    audit: AssumptionAudit = field(default_factory=AssumptionAudit)
    worlds: int = 0
    # світи, для яких параметри задовольняють припущення
    satisfied_seeds: frozenset = frozenset()
    inconsistencies: tuple[tuple[int, str, str], ...] = ()

    def merge(self, other: 'CoverageReport') -> 'CoverageReport':
        return CoverageReport(
            days=self.days + other.days,
            audit=self.audit.merge(other.audit),
            worlds=self.worlds + other.worlds,
            satisfied_seeds=self.satisfied_seeds | other.satisfied_seeds,
            inconsistencies=self.inconsistencies + other.inconsistencies,
        )

    @property
    def covered(self) -> bool:
        return all(day.covered for day in self.days)

    @property
    def methods(self) -> list[BoundMethod]:
        seen = {day.method for day in self.days}
        return [method for method in BoundMethod if method in seen]

    def coverage_rate(self, method: BoundMethod) -> float:
        selected = [day for day in self.days if day.method is method]
        if not selected:
            return float('nan')
        return sum(day.covered for day in selected) / len(selected)

    def worst_relative_slack(self, method: BoundMethod) -> float:
        return min((day.relative_slack for day in self.days if day.method is method), default=float('nan'))

    @property
    def misses(self) -> list[DayCoverage]:
        return [day for day in self.days if not day.covered]

    @property
    def failed_under_assumptions(self) -> bool:
        """Межа не покрила істину у світі з виконаними припущеннями"""
        return any(day.seed in self.satisfied_seeds for day in self.misses)

    def summary(self) -> dict:
        return {
            'worlds': self.worlds,
            'covered': self.covered,
            'coverage': {method.value: self.coverage_rate(method) for method in self.methods},
            'worst_relative_slack': {method.value: self.worst_relative_slack(method)
                                     for method in self.methods},
            'misses': len(self.misses),
            'audit_flags': self.audit.flag_count,
            'testing_monotone_violations': len(self.audit.testing_monotone_days),
            'miss_rate_violations': len(self.audit.miss_rate_days),
            'parameter_flags': len(self.audit.parameter_flags),
            'failed_under_assumptions': self.failed_under_assumptions,
        }


def audit_world(world: SyntheticWorld, cfg: AssumptionConfig) -> AssumptionAudit:
    """Перевірити монотонність тестування та інтервал пропусків у реалізованому світі"""
    seed = world.params.seed
    monotone_days, miss_days = [], []
    for day in world.truth():
        tested_rate, untested_rate = day.tested_rate, day.untested_rate
        if tested_rate is not None and untested_rate is not None and tested_rate < untested_rate:
            monotone_days.append((seed, day.date))
        realized = day.miss_rate
        if realized is not None and not cfg.miss_rate_on(day.date).contains(realized):
            miss_days.append((seed, day.date))

    flags = []
    if world.params.triage_strength < 1.0:
        flags.append((seed, 'triage_below_one'))
    if not cfg.miss_rate.contains(world.params.miss_rate_true):
        flags.append((seed, 'miss_rate_true_outside'))
    return AssumptionAudit(
        testing_monotone_days=tuple(monotone_days),
        miss_rate_days=tuple(miss_days),
        parameter_flags=tuple(flags),
    )


def _method_config(cfg: AssumptionConfig, method: BoundMethod) -> AssumptionConfig:
    # worst_case без явного інтервалу для ненатестованих використовує [0, 1]
    if method is BoundMethod.WORST_CASE and cfg.derives_untested:
        return cfg.with_untested(ProbabilityInterval(0.0, 1.0))
    return cfg


def check_coverage(world: SyntheticWorld, cfg: AssumptionConfig,
                   methods: Iterable[BoundMethod] = DEFAULT_METHODS) -> CoverageReport:
    """
    Прогнати експортований ряд світу через ingest → bounds і порівняти з істиною

    Args:
        world: Синтетичний світ
        cfg: Припущення, з якими обчислюються межі
        methods: Методи для перевірки

    Returns:
        CoverageReport (порушення припущень лише фіксуються, не кидаються)
    """
    seed = world.params.seed
    series = parse_region_series(world.surveillance_csv(), world.column_mapping(),
                                 source=f"synthetic seed={seed}")
    truth = {day.date: day.infection_rate for day in world.truth()}

    days, inconsistencies = [], []
    for method in methods:
        try:
            bounds = bound_series(series, _method_config(cfg, method), method, allow_untested=True)
            for current, interval in zip(bounds.dates, bounds.intervals):
                days.append(DayCoverage(seed, current, method, truth[current], interval.lo, interval.hi))
        except AssumptionInconsistencyError as exc:
            logger.info("seed=%d, %s: %s", seed, method.value, exc)
            inconsistencies.append((seed, method.value, str(exc)))
            days.extend(DayCoverage(seed, current, method, truth[current], None, None) for current in series.dates)

    audit = audit_world(world, cfg)
    return CoverageReport(
        days=tuple(days),
        audit=audit,
        worlds=1,
        satisfied_seeds=frozenset() if audit.parameter_flags else frozenset({seed}),
        inconsistencies=tuple(inconsistencies),
    )


class CoverageRunner(Subject):
    """Прогін оракула по зернах; кожен звіт публікується подією 'seed_checked'"""

    def __init__(self, params: SimParams, cfg: AssumptionConfig,
                 methods: Sequence[BoundMethod] = DEFAULT_METHODS):
        super().__init__()
        self._params = params
        self._cfg = cfg
        self._methods = tuple(methods)

    def run(self, seeds: Iterable[int]) -> CoverageReport:
        reports = []
        for seed in seeds:
            world = simulate(self._params.with_seed(seed))
            report = check_coverage(world, self._cfg, self._methods)
            reports.append(report)
            self.notify('seed_checked', {'seed': seed, 'report': report})
        merged = reduce(CoverageReport.merge, reports, CoverageReport())
        self.notify('coverage_done', {'report': merged})
        return merged


def run_coverage(params: SimParams, cfg: AssumptionConfig, seeds: Iterable[int],
                 methods: Sequence[BoundMethod] = DEFAULT_METHODS, observers: Sequence = ()) -> CoverageReport:
    """
    Оракул покриття по багатьох зернах

    Returns:
        Об'єднаний CoverageReport
    """
    runner = CoverageRunner(params, cfg, methods)
    for observer in observers:
        runner.attach(observer)
    return runner.run(seeds)


def require_coverage(report: CoverageReport):
    """
    Raises:
        CoverageFailure: якщо межа не покрила істину за виконаних припущень
    """
    if report.failed_under_assumptions:
        first = next(day for day in report.misses if day.seed in report.satisfied_seeds)
        raise CoverageFailure(
            f"Межа {first.method.value} не покриває P(C_d=1) = {first.truth:.6f} (seed={first.seed})",
            invariant="coverage",
            date=first.date,
        )
