"""
Assumptions - оголошені припущення ідентифікації
AssumptionConfig та його читання з JSON-конфігурації запуску
"""

from dataclasses import dataclass, field, replace
from datetime import date
from typing import Iterable, Mapping, Optional, Union

from core.accuracy import AccuracyKind, AccuracySpec, MissRateInterval, miss_rate_from_spec
from core.errors import ConfigError
from core.records import EmpiricalRates
from utils.config import Config

TESTING_MONOTONE = 'testing_monotone'


@dataclass(frozen=True)
class ProbabilityInterval:
    """Замкнений підінтервал [0, 1]"""
    lo: float
    hi: float

    def __post_init__(self):
        if not (0.0 <= self.lo <= self.hi <= 1.0):
            raise ConfigError(f"Потрібно 0 ≤ lo ≤ hi ≤ 1, отримано [{self.lo}, {self.hi}]",
                              invariant="interval_order")

    @classmethod
    def from_dict(cls, data: Mapping) -> 'ProbabilityInterval':
        return cls(lo=float(data['lo']), hi=float(data['hi']))

    def to_dict(self) -> dict:
        return {'lo': self.lo, 'hi': self.hi}


@dataclass(frozen=True)
class AssumptionConfig:
    """
    Припущення: інтервал пропусків, межі для ненатестованих, частка безсимптомних

    untested є або явним інтервалом [L_d0, U_d0], або тегом TESTING_MONOTONE
    (U_d0 виводиться з монотонності тестування, L_d0 = 0).
    """
    miss_rate: MissRateInterval
    untested: Union[ProbabilityInterval, str] = TESTING_MONOTONE
    alpha: Optional[ProbabilityInterval] = None
    ppv_one: bool = True
    miss_rate_by_date: Mapping[date, MissRateInterval] = field(default_factory=dict)

    def __post_init__(self):
        if not self.ppv_one:
            raise ConfigError("Підтримується лише припущення PPV = 1", invariant="ppv_one")
        if not isinstance(self.untested, ProbabilityInterval) and self.untested != TESTING_MONOTONE:
            raise ConfigError(f"Невідоме значення untested: {self.untested}", invariant="untested_kind")

    @property
    def derives_untested(self) -> bool:
        return self.untested == TESTING_MONOTONE

    def miss_rate_on(self, day: Optional[date]) -> MissRateInterval:
        """Інтервал пропусків на дату (стала за замовчуванням)"""
        if day is not None and day in self.miss_rate_by_date:
            return self.miss_rate_by_date[day]
        return self.miss_rate

    def with_miss_rate(self, lo: float, hi: float) -> 'AssumptionConfig':
        return replace(self, miss_rate=MissRateInterval(lo, hi), miss_rate_by_date={})

    def with_alpha(self, lo: float, hi: float) -> 'AssumptionConfig':
        return replace(self, alpha=ProbabilityInterval(lo, hi))

    def with_untested(self, untested: Union[ProbabilityInterval, str]) -> 'AssumptionConfig':
        return replace(self, untested=untested)

    def to_dict(self) -> dict:
        data = {
            'miss_rate': {'lo': self.miss_rate.lo, 'hi': self.miss_rate.hi},
            'untested': self.untested if self.derives_untested else self.untested.to_dict(),
            'ppv_one': self.ppv_one,
        }
        if self.alpha is not None:
            data['alpha'] = self.alpha.to_dict()
        if self.miss_rate_by_date:
            data['miss_rate_by_date'] = {
                day.isoformat(): {'lo': interval.lo, 'hi': interval.hi}
                for day, interval in sorted(self.miss_rate_by_date.items())
            }
        return data

    @classmethod
    def default(cls) -> 'AssumptionConfig':
        lo, hi = Config.DEFAULT_MISS_RATE
        return cls(miss_rate=MissRateInterval(lo, hi))

    @classmethod
    def from_dict(cls, section: Mapping, rates: Optional[Iterable[EmpiricalRates]] = None) -> 'AssumptionConfig':
        """
        Побудувати припущення з розділу 'assumptions' конфігурації

        Args:
            section: Розділ конфігурації
            rates: Спостережувані ймовірності за датами; потрібні, якщо точність
                   задано інтервалом чутливості (інтервал пропусків залежить від r)

        Returns:
            AssumptionConfig
        """
        section = section or {}
        by_date = {
            date.fromisoformat(day): MissRateInterval(float(item['lo']), float(item['hi']))
            for day, item in section.get('miss_rate_by_date', {}).items()
        }

        if 'accuracy' in section:
            spec = AccuracySpec.from_dict(section['accuracy'])
        else:
            lo, hi = Config.DEFAULT_MISS_RATE
            spec = AccuracySpec(AccuracyKind.DIRECT_MISS_RATE, lo, hi)

        if spec.depends_on_positivity:
            if rates is None:
                raise ConfigError("Інтервал чутливості потребує ряду спостережень",
                                  invariant="positivity_required")
            derived = {item.date: miss_rate_from_spec(spec, item.p_pos_given_tested) for item in rates}
            if not derived:
                raise ConfigError("Порожній ряд спостережень", invariant="no_records")
            miss_rate = MissRateInterval(
                lo=min(interval.lo for interval in derived.values()),
                hi=max(interval.hi for interval in derived.values()),
            )
            by_date = {**derived, **by_date}
        else:
            miss_rate = miss_rate_from_spec(spec)

        untested = section.get('untested', TESTING_MONOTONE)
        if isinstance(untested, Mapping):
            untested = ProbabilityInterval.from_dict(untested)

        alpha = section.get('alpha')
        return cls(
            miss_rate=miss_rate,
            untested=untested,
            alpha=ProbabilityInterval.from_dict(alpha) if alpha else None,
            ppv_one=bool(section.get('ppv_one', True)),
            miss_rate_by_date=by_date,
        )
