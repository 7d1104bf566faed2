"""
Series Validators - Record Invariant Checks
Перевірки інваріантів DailyRecord та RegionSeries
"""

from core.records import RegionSeries, SevereOutcome
from .strategy import CompositeValidator, ValidationIssue, ValidationResult, ValidationStrategy


class NonEmptyValidator(ValidationStrategy):
    """Ряд повинен містити хоча б один запис"""

    def __init__(self, name: str = "NonEmptyValidator"):
        super().__init__(name)

    def validate(self, series: RegionSeries) -> ValidationResult:
        result = self._new_result()
        if not series.records:
            result.add_issue(ValidationIssue(
                message="Немає записів (no records)",
                invariant="no_records",
            ))
        return result


class DateOrderValidator(ValidationStrategy):
    """Дати строго зростають, без повторів"""

    def __init__(self, name: str = "DateOrderValidator"):
        super().__init__(name)

    def validate(self, series: RegionSeries) -> ValidationResult:
        result = self._new_result()
        records = series.records
        for index in range(1, len(records)):
            previous, current = records[index - 1].date, records[index].date
            if current == previous:
                result.add_issue(ValidationIssue(
                    message="Повторна дата",
                    invariant="duplicate_date",
                    index=index,
                    date=current,
                ))
            elif current < previous:
                result.add_issue(ValidationIssue(
                    message=f"Дата менша за попередню ({previous.isoformat()})",
                    invariant="date_order",
                    index=index,
                    date=current,
                ))
        return result


class CountRangeValidator(ValidationStrategy):
    """
    Перевірка меж лічильників у кожному записі

    0 ≤ cum_positive ≤ cum_tested, усі лічильники невід'ємні та не більші
    за населення, hosp_level ≥ icu_level, якщо обидва присутні.
    """

    COUNT_FIELDS = ('cum_tested', 'cum_positive', 'hosp_level', 'icu_level', 'cum_deaths')

    def __init__(self, name: str = "CountRangeValidator"):
        super().__init__(name)

    def validate(self, series: RegionSeries) -> ValidationResult:
        result = self._new_result()
        if series.population <= 0:
            result.add_issue(ValidationIssue(
                message=f"Населення має бути додатним, отримано {series.population}",
                invariant="population_positive",
            ))
            return result

        for index, record in enumerate(series.records):
            for name in self.COUNT_FIELDS:
                value = getattr(record, name)
                if value is None:
                    continue
                if value < 0:
                    result.add_issue(ValidationIssue(
                        message=f"{name} від'ємний: {value}",
                        invariant="nonnegative_count",
                        index=index,
                        date=record.date,
                        field_name=name,
                    ))
                elif value > series.population:
                    result.add_issue(ValidationIssue(
                        message=f"{name} = {value} перевищує населення {series.population}",
                        invariant="count_exceeds_population",
                        index=index,
                        date=record.date,
                        field_name=name,
                    ))

            if record.cum_positive > record.cum_tested:
                result.add_issue(ValidationIssue(
                    message=(f"cum_positive = {record.cum_positive} більше за "
                             f"cum_tested = {record.cum_tested}"),
                    invariant="positive_le_tested",
                    index=index,
                    date=record.date,
                    field_name='cum_positive',
                ))

            if (record.hosp_level is not None and record.icu_level is not None
                    and record.icu_level > record.hosp_level):
                result.add_issue(ValidationIssue(
                    message=(f"icu_level = {record.icu_level} більше за "
                             f"hosp_level = {record.hosp_level}"),
                    invariant="icu_le_hosp",
                    index=index,
                    date=record.date,
                    field_name='icu_level',
                ))

        return result


class CumulativeMonotoneValidator(ValidationStrategy):
    """
    Кумулятивні стовпці не спадають у часі

    hosp_level та icu_level перевіряються лише тоді, коли схема оголошує їх
    кумулятивними.
    """

    def __init__(self, name: str = "CumulativeMonotoneValidator"):
        super().__init__(name)

    @staticmethod
    def cumulative_fields(series: RegionSeries) -> list[str]:
        fields = ['cum_tested', 'cum_positive']
        for outcome in SevereOutcome:
            if series.severe_semantics.get(outcome.value, 'level') == 'cumulative':
                fields.append(outcome.field_name)
        return fields

    def validate(self, series: RegionSeries) -> ValidationResult:
        result = self._new_result()
        for name in self.cumulative_fields(series):
            previous = None
            for index, record in enumerate(series.records):
                value = getattr(record, name)
                if value is None:
                    continue
                if previous is not None and value < previous:
                    result.add_issue(ValidationIssue(
                        message=f"{name} спадає: {previous} → {value}",
                        invariant="cumulative_monotone",
                        index=index,
                        date=record.date,
                        field_name=name,
                    ))
                previous = value
        return result


def default_series_validator() -> CompositeValidator:
    """Повний набір перевірок RegionSeries"""
    validator = CompositeValidator("SeriesValidator")
    validator.add_validator(NonEmptyValidator())
    validator.add_validator(DateOrderValidator())
    validator.add_validator(CountRangeValidator())
    validator.add_validator(CumulativeMonotoneValidator())
    return validator
