"""
Domain records - Core types
Типи даних для щоденних рядів епіднагляду та спостережуваних ймовірностей
"""

from dataclasses import dataclass, field
from datetime import date
from enum import Enum
from typing import Mapping, Optional


class SevereOutcome(Enum):
    """Тяжкі наслідки: госпіталізація, реанімація, смерть"""

    H = 'H'
    U = 'U'
    D = 'D'

    @property
    def field_name(self) -> str:
        """Поле DailyRecord, з якого береться лічильник наслідку"""
        return _OUTCOME_FIELDS[self]

    @property
    def label(self) -> str:
        return _OUTCOME_LABELS[self]

    @classmethod
    def parse(cls, value: str) -> 'SevereOutcome':
        """Розпізнати наслідок за тегом (H/U/D) або назвою поля"""
        for outcome in cls:
            if value in (outcome.value, outcome.field_name, outcome.label):
                return outcome
        raise ValueError(f"Невідомий тяжкий наслідок: {value}")


_OUTCOME_FIELDS = {
    SevereOutcome.H: 'hosp_level',
    SevereOutcome.U: 'icu_level',
    SevereOutcome.D: 'cum_deaths',
}

_OUTCOME_LABELS = {
    SevereOutcome.H: 'hospitalization',
    SevereOutcome.U: 'icu',
    SevereOutcome.D: 'death',
}


@dataclass(frozen=True)
class DailyRecord:
    """Кумулятивні лічильники за одну дату"""
    date: date
    cum_tested: int
    cum_positive: int
    hosp_level: Optional[int] = None
    icu_level: Optional[int] = None
    cum_deaths: Optional[int] = None

    def severe_count(self, outcome: SevereOutcome) -> Optional[int]:
        """Лічильник тяжкого наслідку (None, якщо стовпця немає)"""
        return getattr(self, outcome.field_name)


@dataclass(frozen=True)
class ColumnMapping:
    """
    Схема вхідного файлу: відображення канонічних полів на стовпці джерела

    severe_semantics задає для кожного наслідку, чи є стовпець рівнем
    ('level') чи кумулятивною сумою ('cumulative').
    """
    region_id: str
    population: Optional[int] = None
    columns: Mapping[str, str] = field(default_factory=dict)
    delimiter: str = ','
    population_column: Optional[str] = None
    severe_semantics: Mapping[str, str] = field(default_factory=lambda: {
        'H': 'level',
        'U': 'level',
        'D': 'cumulative',
    })

    def source_column(self, canonical: str) -> str:
        """Назва стовпця у джерелі для канонічного поля"""
        return self.columns.get(canonical, canonical)

    def is_cumulative(self, outcome: SevereOutcome) -> bool:
        return self.severe_semantics.get(outcome.value, 'level') == 'cumulative'

    @classmethod
    def canonical(cls, region_id: str, population: int) -> 'ColumnMapping':
        """Схема для канонічного CSV без перейменувань"""
        return cls(region_id=region_id, population=population)


@dataclass(frozen=True)
class RegionSeries:
    """Населення регіону та впорядкована за датою послідовність записів"""
    region_id: str
    population: int
    records: tuple[DailyRecord, ...]
    severe_semantics: Mapping[str, str] = field(default_factory=lambda: {
        'H': 'level',
        'U': 'level',
        'D': 'cumulative',
    })

    @property
    def dates(self) -> list[date]:
        return [record.date for record in self.records]

    @property
    def first_date(self) -> date:
        return self.records[0].date

    @property
    def last_date(self) -> date:
        return self.records[-1].date

    def index_of(self, day: date) -> int:
        """Індекс запису за датою (ValueError, якщо дати немає)"""
        for index, record in enumerate(self.records):
            if record.date == day:
                return index
        raise ValueError(f"Дата {day.isoformat()} відсутня в ряді {self.region_id}")

    def record_on(self, day: date) -> DailyRecord:
        return self.records[self.index_of(day)]

    def has_outcome(self, outcome: SevereOutcome) -> bool:
        """Чи містить ряд стовпець для наслідку"""
        return bool(self.records) and all(
            record.severe_count(outcome) is not None for record in self.records
        )

    def suffix(self, start: int) -> 'RegionSeries':
        """Ряд, що починається із запису start"""
        return RegionSeries(
            region_id=self.region_id,
            population=self.population,
            records=self.records[start:],
            severe_semantics=self.severe_semantics,
        )

    def __len__(self) -> int:
        return len(self.records)

    def __str__(self) -> str:
        if not self.records:
            return f"RegionSeries('{self.region_id}', порожній)"
        return (f"RegionSeries('{self.region_id}', {len(self.records)} дат, "
                f"{self.first_date.isoformat()}..{self.last_date.isoformat()})")


@dataclass(frozen=True)
class EmpiricalRates:
    """Спостережувані ймовірності на одну дату"""
    date: date
    p_tested: float
    p_pos_given_tested: float
    severe: Mapping[SevereOutcome, float] = field(default_factory=dict)

    @property
    def p_untested(self) -> float:
        return 1.0 - self.p_tested

    @property
    def p_neg_given_tested(self) -> float:
        return 1.0 - self.p_pos_given_tested

    @property
    def p_pos(self) -> float:
        """P(R_d=1) = P(R_d=1|T_d=1)·P(T_d=1)"""
        return self.p_pos_given_tested * self.p_tested

    @property
    def p_tested_negative(self) -> float:
        """P(T_d=1, R_d=0)"""
        return self.p_neg_given_tested * self.p_tested

    def severe_rate(self, outcome: SevereOutcome) -> Optional[float]:
        return self.severe.get(outcome)
