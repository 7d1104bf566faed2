"""
Synthetic world - синтетична популяція, у якій припущення виконуються за побудовою

Рецепт вибірки (генератор numpy Generator(PCG64(seed))):

1. Для кожного дня d = 0..horizon-1:
   a. u = rng.random(population); кожна ще не інфікована особа з
      u < daily_infection_hazard[d] інфікується в день d.
   b. Кандидати на тест: особи, яких ще не тестували (у порядку індексу).
      k = min(test_budget[d], кількість кандидатів). Якщо k > 0:
      ваги = triage_strength для інфікованих на день d, 1 для решти;
      chosen = rng.choice(candidates, size=k, replace=False, p=ваги/сума).
   c. v = rng.random(k); особа chosen[i] отримує позитивний результат,
      якщо вона інфікована і v[i] ≥ miss_rate_true.
2. Після денного циклу, для наслідків у порядку H, U, D:
   w = rng.random(population) (лише якщо наслідок має ймовірність);
   H: інфіковані з w < severe_hazards['H'];
   U: госпіталізовані (інфіковані, якщо H не задано) з w < severe_hazards['U'];
   D: інфіковані з w < severe_hazards['D'].
   Датою наслідку вважається дата інфікування.
"""

import logging
from dataclasses import dataclass, field, replace
from datetime import date, timedelta
from typing import Mapping, Optional, Sequence, Union

import numpy as np
import pandas as pd

from core.errors import ConfigError
from core.ingest import write_region_series
from core.records import ColumnMapping, DailyRecord, RegionSeries, SevereOutcome

logger = logging.getLogger(__name__)

NEVER = -1

GROUND_TRUTH_COLUMNS = ['date', 'true_infected_count', 'true_untested_infected_count']


def _schedule(value: Union[float, Sequence[float]], horizon: int, name: str) -> tuple:
    if isinstance(value, (int, float)):
        return tuple([value] * horizon)
    values = tuple(value)
    if len(values) != horizon:
        raise ConfigError(f"'{name}' має містити {horizon} значень, отримано {len(values)}",
                          invariant="schedule_length")
    return values


@dataclass(frozen=True)
class SimParams:
    """
    Параметри синтетичного світу

    triage_strength ≥ 1 гарантує, що інфіковані мають не менші шанси на тест,
    ніж неінфіковані. enforce_triage=False вимикає цю перевірку для
    навмисних порушень.
    """
    population: int
    horizon: int
    daily_infection_hazard: tuple[float, ...]
    test_budget: tuple[int, ...]
    triage_strength: float = 1.0
    miss_rate_true: float = 0.0
    severe_hazards: Mapping[SevereOutcome, float] = field(default_factory=dict)
    seed: int = 0
    start_date: date = date(2020, 3, 1)
    enforce_triage: bool = True

    def __post_init__(self):
        if self.population <= 0:
            raise ConfigError("Населення має бути додатним", invariant="population_positive")
        if self.horizon <= 0:
            raise ConfigError("Горизонт має бути додатним", invariant="horizon_positive")
        object.__setattr__(self, 'daily_infection_hazard',
                           _schedule(self.daily_infection_hazard, self.horizon, 'daily_infection_hazard'))
        object.__setattr__(self, 'test_budget',
                           tuple(int(value) for value in _schedule(self.test_budget, self.horizon,
                                                                   'test_budget')))
        if any(not (0.0 <= value <= 1.0) for value in self.daily_infection_hazard):
            raise ConfigError("Денна ймовірність інфікування поза [0, 1]", invariant="probability_range")
        if any(value < 0 or value > self.population for value in self.test_budget):
            raise ConfigError("Бюджет тестів має бути в [0, population]", invariant="budget_range")
        if self.triage_strength <= 0.0:
            raise ConfigError("triage_strength має бути додатним", invariant="triage_positive")
        if self.enforce_triage and self.triage_strength < 1.0:
            raise ConfigError(f"triage_strength = {self.triage_strength} < 1", invariant="triage_ge_one")
        if not (0.0 <= self.miss_rate_true <= 1.0):
            raise ConfigError("miss_rate_true поза [0, 1]", invariant="probability_range")
        for outcome, value in self.severe_hazards.items():
            if not (0.0 <= value <= 1.0):
                raise ConfigError(f"Ймовірність наслідку {outcome.value} поза [0, 1]",
                                  invariant="probability_range")

    def with_seed(self, seed: int) -> 'SimParams':
        return replace(self, seed=seed)

    @classmethod
    def from_dict(cls, data: Mapping) -> 'SimParams':
        horizon = int(data['horizon'])
        start = data.get('start_date')
        return cls(
            population=int(data['population']),
            horizon=horizon,
            daily_infection_hazard=data['daily_infection_hazard'],
            test_budget=data['test_budget'],
            triage_strength=float(data.get('triage_strength', 1.0)),
            miss_rate_true=float(data.get('miss_rate_true', 0.0)),
            severe_hazards={SevereOutcome.parse(key): float(value)
                            for key, value in data.get('severe_hazards', {}).items()},
            seed=int(data.get('seed', 0)),
            start_date=date.fromisoformat(start) if start else date(2020, 3, 1),
            enforce_triage=bool(data.get('enforce_triage', True)),
        )


@dataclass(frozen=True)
class TrueDayRates:
    """Справжні агрегати на день d (кумулятивно)"""
    date: date
    infected: int
    tested: int
    tested_infected: int
    tested_negative: int
    tested_negative_infected: int
    population: int

    @property
    def untested(self) -> int:
        return self.population - self.tested

    @property
    def untested_infected(self) -> int:
        return self.infected - self.tested_infected

    @property
    def infection_rate(self) -> float:
        """P(C_d=1)"""
        return self.infected / self.population

    @property
    def untested_rate(self) -> Optional[float]:
        """P(C_d=1|T_d=0)"""
        return self.untested_infected / self.untested if self.untested else None

    @property
    def tested_rate(self) -> Optional[float]:
        """P(C_d=1|T_d=1)"""
        return self.tested_infected / self.tested if self.tested else None

    @property
    def miss_rate(self) -> Optional[float]:
        """P(C_d=1|T_d=1,R_d=0)"""
        return self.tested_negative_infected / self.tested_negative if self.tested_negative else None


@dataclass(frozen=True, eq=False)
class SyntheticWorld:
    """Індивідуальні траєкторії та справжні агрегати за днями"""
    params: SimParams
    infection_day: np.ndarray
    test_day: np.ndarray
    test_positive: np.ndarray
    severe_day: Mapping[SevereOutcome, np.ndarray] = field(default_factory=dict)

    @property
    def dates(self) -> list[date]:
        return [self.params.start_date + timedelta(days=day) for day in range(self.params.horizon)]

    def truth(self) -> list[TrueDayRates]:
        infected_by, tested_by = self._by_day(self.infection_day), self._by_day(self.test_day)
        result = []
        for day, current in enumerate(self.dates):
            infected = infected_by[day]
            tested = tested_by[day]
            negative = tested & ~self.test_positive
            result.append(TrueDayRates(
                date=current,
                infected=int(infected.sum()),
                tested=int(tested.sum()),
                tested_infected=int((tested & infected).sum()),
                tested_negative=int(negative.sum()),
                tested_negative_infected=int((negative & infected).sum()),
                population=self.params.population,
            ))
        return result

    def _by_day(self, event_day: np.ndarray) -> list[np.ndarray]:
        happened = event_day != NEVER
        return [happened & (event_day <= day) for day in range(self.params.horizon)]

    def to_region_series(self, region_id: str = "synthetic") -> RegionSeries:
        """Спостережуваний ряд (кумулятивні лічильники); H та U кумулятивні"""
        tested_by = self._by_day(self.test_day)
        severe_by = {outcome: self._by_day(days) for outcome, days in self.severe_day.items()}
        records = []
        for day, current in enumerate(self.dates):
            tested = tested_by[day]
            severe = {outcome.field_name: int(by_day[day].sum()) for outcome, by_day in severe_by.items()}
            records.append(DailyRecord(
                date=current,
                cum_tested=int(tested.sum()),
                cum_positive=int((tested & self.test_positive).sum()),
                **severe,
            ))
        return RegionSeries(
            region_id=region_id,
            population=self.params.population,
            records=tuple(records),
            severe_semantics=self.severe_semantics(),
        )

    @staticmethod
    def severe_semantics() -> dict:
        return {'H': 'cumulative', 'U': 'cumulative', 'D': 'cumulative'}

    def column_mapping(self, region_id: str = "synthetic") -> ColumnMapping:
        return ColumnMapping(region_id=region_id, population=self.params.population,
                             severe_semantics=self.severe_semantics())

    def surveillance_csv(self) -> str:
        return write_region_series(self.to_region_series())

    def ground_truth_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [[day.date.isoformat(), day.infected, day.untested_infected] for day in self.truth()],
            columns=GROUND_TRUTH_COLUMNS,
        )

    def ground_truth_csv(self) -> str:
        return self.ground_truth_frame().to_csv(index=False, lineterminator='\n')


def simulate(params: SimParams) -> SyntheticWorld:
    """
    Згенерувати синтетичний світ за рецептом з документації модуля

    Args:
        params: Параметри світу

    Returns:
        SyntheticWorld, детермінований за params.seed
    """
    rng = np.random.Generator(np.random.PCG64(params.seed))
    size = params.population
    infection_day = np.full(size, NEVER, dtype=np.int64)
    test_day = np.full(size, NEVER, dtype=np.int64)
    test_positive = np.zeros(size, dtype=bool)

    for day in range(params.horizon):
        draws = rng.random(size)
        newly = (infection_day == NEVER) & (draws < params.daily_infection_hazard[day])
        infection_day[newly] = day

        candidates = np.flatnonzero(test_day == NEVER)
        k = min(params.test_budget[day], candidates.size)
        if k == 0:
            continue
        infected = infection_day[candidates] != NEVER
        weights = np.where(infected, params.triage_strength, 1.0)
        chosen = rng.choice(candidates, size=k, replace=False, p=weights / weights.sum())
        results = rng.random(k)
        test_day[chosen] = day
        test_positive[chosen] = (infection_day[chosen] != NEVER) & (results >= params.miss_rate_true)

    severe_day = {}
    infected_ever = infection_day != NEVER
    for outcome in SevereOutcome:
        hazard = params.severe_hazards.get(outcome)
        if hazard is None:
            continue
        draws = rng.random(size)
        if outcome is SevereOutcome.U and SevereOutcome.H in severe_day:
            eligible = severe_day[SevereOutcome.H] != NEVER
        else:
            eligible = infected_ever
        severe_day[outcome] = np.where(eligible & (draws < hazard), infection_day, NEVER)

    logger.debug("Світ seed=%d: інфіковано %d з %d, протестовано %d", params.seed,
                 int(infected_ever.sum()), size, int((test_day != NEVER).sum()))
    return SyntheticWorld(
        params=params,
        infection_day=infection_day,
        test_day=test_day,
        test_positive=test_positive,
        severe_day=severe_day,
    )
