"""
Ingest - розбір та нормалізація рядів епіднагляду
Перетворює кумулятивні лічильники на спостережувані ймовірності за датами
"""

import io
import logging
from dataclasses import replace
from datetime import date
from typing import BinaryIO, Iterable, Optional, Union

import pandas as pd

from core.errors import ConfigError, DataValidationError
from core.records import ColumnMapping, DailyRecord, EmpiricalRates, RegionSeries, SevereOutcome
from utils.config import Config
from validation.series_validator import CumulativeMonotoneValidator, default_series_validator

logger = logging.getLogger(__name__)

REPAIR_MODES = ('reject', 'clamp')

REQUIRED_FIELDS = ('date', 'cum_tested', 'cum_positive')
OPTIONAL_FIELDS = ('hosp_level', 'icu_level', 'cum_deaths')


def _read_text(raw: Union[bytes, str, BinaryIO]) -> str:
    if isinstance(raw, bytes):
        return raw.decode('utf-8')
    if isinstance(raw, str):
        return raw
    data = raw.read()
    return data.decode('utf-8') if isinstance(data, bytes) else data


def _column_text(frame: pd.DataFrame, column: str) -> pd.Series:
    # pandas fills short rows with NaN
    return frame[column].fillna('').str.strip()


def _first_row(mask: pd.Series) -> int:
    return int(mask.to_numpy().argmax()) + 1


def _parse_counts(frame: pd.DataFrame, column: str, name: str, required: bool) -> pd.Series:
    """Стовпець лічильників як Int64; порожні клітинки стають <NA>"""
    text = _column_text(frame, column)
    blank = text == ''
    if required and blank.any():
        raise DataValidationError(f"Порожнє значення у стовпці '{name}'", invariant="malformed_row",
                                  row=_first_row(blank))
    numbers = pd.to_numeric(text.mask(blank), errors='coerce')
    unparsed = numbers.isna() & ~blank
    if unparsed.any():
        row = _first_row(unparsed)
        raise DataValidationError(
            f"Не вдалося розібрати '{text.iloc[row - 1]}' у стовпці '{name}' як ціле число",
            invariant="malformed_row",
            row=row,
        )
    fractional = numbers.notna() & (numbers % 1 != 0)
    if fractional.any():
        row = _first_row(fractional)
        raise DataValidationError(f"Значення '{text.iloc[row - 1]}' у стовпці '{name}' не є цілим",
                                  invariant="malformed_row", row=row)
    return numbers.astype('Int64')


def _parse_dates(frame: pd.DataFrame, column: str) -> pd.Series:
    text = _column_text(frame, column)
    parsed = pd.to_datetime(text, format='%Y-%m-%d', errors='coerce')
    invalid = parsed.isna()
    if invalid.any():
        row = _first_row(invalid)
        raise DataValidationError(f"Дата '{text.iloc[row - 1]}' не у форматі ISO-8601",
                                  invariant="malformed_row", row=row)
    return parsed


def _optional_count(value) -> Optional[int]:
    return None if pd.isna(value) else int(value)


def _resolve_population(frame: pd.DataFrame, schema: ColumnMapping) -> int:
    if schema.population is not None:
        return int(schema.population)
    column = schema.population_column
    if column is None or column not in frame.columns:
        raise ConfigError(
            "Населення не задано ні у схемі, ні стовпцем",
            invariant="population_missing",
        )
    values = _parse_counts(frame, column, column, required=False).dropna().unique()
    if len(values) != 1:
        raise DataValidationError(
            f"Стовпець населення '{column}' має містити одне значення, отримано {sorted(values)}",
            invariant="population_column",
        )
    return int(values[0])


def repair_cumulative(series: RegionSeries) -> tuple[RegionSeries, list[tuple[date, str, int, int]]]:
    """
    Замінити спадні значення кумулятивних стовпців попередніми

    Returns:
        Tuple[repaired_series, [(date, field, old, new), ...]]
    """
    fields = CumulativeMonotoneValidator.cumulative_fields(series)
    previous: dict[str, int] = {}
    repaired = []
    repairs = []
    for record in series.records:
        changes = {}
        for name in fields:
            value = getattr(record, name)
            if value is None:
                continue
            if name in previous and value < previous[name]:
                changes[name] = previous[name]
                repairs.append((record.date, name, value, previous[name]))
                logger.warning("Виправлено %s на %s: %d → %d (repair clamp)",
                               name, record.date.isoformat(), value, previous[name])
            else:
                previous[name] = value
        repaired.append(replace(record, **changes) if changes else record)
    return replace(series, records=tuple(repaired)), repairs


def parse_region_series(raw: Union[bytes, str, BinaryIO],
                        schema: ColumnMapping,
                        repair: str = 'reject',
                        source: Optional[str] = None,
                        repair_log: Optional[list] = None) -> RegionSeries:
    """
    Розібрати текст з роздільниками у RegionSeries

    Args:
        raw: Вміст файлу (UTF-8, рядок заголовка)
        schema: Відображення стовпців, населення, семантика тяжких наслідків
        repair: 'reject' (помилка на спадних кумулятивних значеннях) або 'clamp'
        source: Назва файлу для повідомлень про помилки
        repair_log: Список, до якого додаються виправлення (date, field, old, new)

    Returns:
        RegionSeries, що задовольняє всі інваріанти, відсортований за датою
    """
    if repair not in REPAIR_MODES:
        raise ConfigError(f"Невідомий режим repair: {repair}", invariant="repair_mode", source=source)

    text = _read_text(raw)
    try:
        frame = pd.read_csv(io.StringIO(text), sep=schema.delimiter, dtype=str,
                            keep_default_na=False, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        raise DataValidationError("Немає записів (no records)", invariant="no_records",
                                  source=source) from None
    except pd.errors.ParserError as exc:
        raise DataValidationError(f"Некоректний рядок: {exc}", invariant="malformed_row",
                                  source=source) from None

    frame.columns = [column.strip() for column in frame.columns]
    for name in REQUIRED_FIELDS:
        column = schema.source_column(name)
        if column not in frame.columns:
            raise DataValidationError(f"Відсутній стовпець '{column}'", invariant="missing_column",
                                      source=source)

    if frame.empty:
        raise DataValidationError("Немає записів (no records)", invariant="no_records", source=source)

    try:
        population = _resolve_population(frame, schema)
        optional = [name for name in OPTIONAL_FIELDS if schema.source_column(name) in frame.columns]
        table = pd.DataFrame({
            'date': _parse_dates(frame, schema.source_column('date')),
            **{name: _parse_counts(frame, schema.source_column(name), name, required=True)
               for name in REQUIRED_FIELDS[1:]},
            **{name: _parse_counts(frame, schema.source_column(name), name, required=False)
               for name in optional},
        })
    except DataValidationError as exc:
        raise exc.with_source(source)

    table['row'] = range(1, len(table) + 1)
    table = table.sort_values('date', kind='stable')
    table['date'] = table['date'].dt.date
    row_numbers = table['row'].tolist()
    records = tuple(
        DailyRecord(
            date=item['date'],
            cum_tested=int(item['cum_tested']),
            cum_positive=int(item['cum_positive']),
            **{name: _optional_count(item[name]) for name in optional},
        )
        for item in table.to_dict('records')
    )
    series = RegionSeries(
        region_id=schema.region_id,
        population=population,
        records=records,
        severe_semantics=dict(schema.severe_semantics),
    )

    if repair == 'clamp':
        series, repairs = repair_cumulative(series)
        if repair_log is not None:
            repair_log.extend(repairs)

    result = default_series_validator().validate(series)
    if not result.is_valid:
        issue = result.first_issue
        raise DataValidationError(
            issue.message,
            invariant=issue.invariant,
            source=source,
            date=issue.date,
            row=row_numbers[issue.index] if issue.index is not None else None,
            issues=result.issues,
        )

    logger.debug("Розібрано %s", series)
    return series


def load_region_series(path: str, schema: ColumnMapping, repair: str = 'reject',
                       repair_log: Optional[list] = None) -> RegionSeries:
    """Прочитати та розібрати файл ряду"""
    try:
        with open(path, 'rb') as handle:
            raw = handle.read()
    except OSError as exc:
        raise ConfigError(f"Не вдалося прочитати файл: {exc.strerror}", invariant="input_file",
                          source=path) from None
    return parse_region_series(raw, schema, repair=repair, source=path, repair_log=repair_log)


def write_region_series(series: RegionSeries) -> str:
    """Серіалізувати ряд у канонічний CSV"""
    columns = list(REQUIRED_FIELDS) + [
        name for name in OPTIONAL_FIELDS
        if any(getattr(record, name) is not None for record in series.records)
    ]
    rows = []
    for record in series.records:
        row = {'date': record.date.isoformat()}
        for name in columns[1:]:
            value = getattr(record, name)
            row[name] = '' if value is None else value
        rows.append(row)
    frame = pd.DataFrame(rows, columns=columns, dtype=object)
    return frame.to_csv(index=False, lineterminator='\n')


def _first_qualifying_index(series: RegionSeries, threshold: int) -> Optional[int]:
    for index, record in enumerate(series.records):
        if record.cum_positive >= threshold:
            return index
    return None


def analysis_window(series: RegionSeries, threshold: int = Config.DEFAULT_THRESHOLD) -> RegionSeries:
    """
    Суфікс ряду, що починається з першої дати з cum_positive ≥ threshold

    Args:
        series: Ряд епіднагляду
        threshold: Мінімальна кількість підтверджених випадків (≥ 1)

    Returns:
        Обрізаний RegionSeries
    """
    if threshold < 1:
        raise ConfigError(f"Поріг має бути ≥ 1, отримано {threshold}", invariant="threshold_positive")
    start = _first_qualifying_index(series, threshold)
    if start is None:
        raise DataValidationError(
            f"Жодна дата ряду {series.region_id} не має {threshold} підтверджених випадків",
            invariant="no_qualifying_date",
        )
    return series.suffix(start)


def joint_analysis_window(series_list: Iterable[RegionSeries],
                          threshold: int = Config.DEFAULT_THRESHOLD) -> list[RegionSeries]:
    """
    Спільне вікно: перша дата, на яку кожен регіон досяг порогу

    Кожен ряд обрізається з цієї спільної дати.
    """
    windows = [analysis_window(series, threshold) for series in series_list]
    if not windows:
        return []
    start = max(window.first_date for window in windows)
    result = []
    for window in windows:
        index = next((i for i, record in enumerate(window.records) if record.date >= start), None)
        if index is None:
            raise DataValidationError(
                f"Ряд {window.region_id} закінчується до спільного початку {start.isoformat()}",
                invariant="no_qualifying_date",
            )
        result.append(window.suffix(index))
    return result


def empirical_rates(series: RegionSeries, day: date, allow_untested: bool = False) -> EmpiricalRates:
    """
    Частотні оцінки спостережуваних ймовірностей на дату

    Args:
        series: Ряд епіднагляду
        day: Дата, присутня в ряді
        allow_untested: Якщо cum_tested = 0, покласти P(R=1|T=1) = 0 замість помилки

    Returns:
        EmpiricalRates
    """
    try:
        record = series.record_on(day)
    except ValueError as exc:
        raise DataValidationError(str(exc), invariant="date_absent", date=day) from None

    if record.cum_tested == 0:
        if not allow_untested:
            raise DataValidationError(
                "cum_tested = 0, P(R_d=1|T_d=1) не визначена",
                invariant="tested_positive",
                date=day,
            )
        p_pos_given_tested = 0.0
    else:
        p_pos_given_tested = record.cum_positive / record.cum_tested

    severe = {}
    for outcome in SevereOutcome:
        count = record.severe_count(outcome)
        if count is not None:
            severe[outcome] = count / series.population

    return EmpiricalRates(
        date=day,
        p_tested=record.cum_tested / series.population,
        p_pos_given_tested=p_pos_given_tested,
        severe=severe,
    )


def rates_series(series: RegionSeries, allow_untested: bool = False) -> list[EmpiricalRates]:
    """Спостережувані ймовірності для кожної дати ряду"""
    return [empirical_rates(series, record.date, allow_untested) for record in series.records]


def confirmed_case_rate(series: RegionSeries, day: date, outcome: SevereOutcome) -> float:
    """Частка тяжкого наслідку серед підтверджених випадків (напр., летальність)"""
    record = series.record_on(day)
    count = record.severe_count(outcome)
    if count is None:
        raise DataValidationError(f"Відсутній стовпець '{outcome.field_name}'",
                                  invariant="missing_column", date=day)
    if record.cum_positive == 0:
        raise DataValidationError("cum_positive = 0", invariant="positive_cases", date=day)
    return count / record.cum_positive
