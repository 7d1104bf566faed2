"""
Template Method Pattern - Series Processor
Визначає загальний алгоритм обробки файлу ряду епіднагляду
"""

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Optional

import pandas as pd

from core.errors import BoundsEngineError
from core.ingest import analysis_window, load_region_series
from core.records import ColumnMapping, RegionSeries
from observers.observer import Subject
from utils.config import Config

logger = logging.getLogger(__name__)


@dataclass
class ProcessingResult:
    """Результат проходження конвеєра"""
    processor: str
    source: str
    series: Optional[RegionSeries] = None
    processed: Any = None
    report: Optional[pd.DataFrame] = None
    steps: list[str] = field(default_factory=list)
    duration: float = 0.0


class SeriesProcessor(Subject, ABC):
    """
    Абстрактний процесор ряду (Template Method Pattern)
    Скелет: load → validate → window → process → report

    BoundsEngineError публікується подією 'failed' і прокидається далі з кодом виходу.
    """

    def __init__(self, name: str = "SeriesProcessor", repair: str = 'reject',
                 threshold: int = Config.DEFAULT_THRESHOLD):
        """
        Ініціалізація процесора

        Args:
            name: Назва процесора
            repair: Режим виправлення кумулятивних стовпців
            threshold: Поріг вікна аналізу
        """
        super().__init__()
        self._name = name
        self._repair = repair
        self._threshold = threshold
        self._last_result: Optional[ProcessingResult] = None
        self._source: Optional[str] = None

    def process(self, filepath: str, schema: ColumnMapping) -> ProcessingResult:
        """
        Шаблонний метод обробки файлу

        Args:
            filepath: Шлях до файлу ряду
            schema: Відображення стовпців

        Returns:
            ProcessingResult
        """
        start_time = time.time()
        self._source = filepath
        result = ProcessingResult(processor=self._name, source=filepath)
        try:
            series = self.load_series(filepath, schema)
            result.steps.append('validated')

            series = self.window_series(series)
            result.series = series
            result.steps.append('windowed')

            result.processed = self.process_data(series)
            result.steps.append('computed')

            result.report = self.generate_report(series, result.processed)
            result.steps.append('reported')
        except BoundsEngineError as exc:
            self.notify('failed', {'invariant': exc.invariant, 'after': result.steps[-1] if result.steps else '-'})
            raise
        finally:
            result.duration = time.time() - start_time
            self._last_result = result
        return result

    def load_series(self, filepath: str, schema: ColumnMapping) -> RegionSeries:
        repairs: list = []
        series = load_region_series(filepath, schema, repair=self._repair, repair_log=repairs)
        self.notify('loaded', {'source': filepath, 'records': len(series)})
        if repairs:
            self.notify('repaired', {'source': filepath, 'rows': len(repairs)})
        self.notify('validated', {'region': series.region_id})
        return series

    def window_series(self, series: RegionSeries) -> RegionSeries:
        window = analysis_window(series, self._threshold)
        self.notify('windowed', {'start': window.first_date.isoformat(), 'dates': len(window)})
        return window

    @abstractmethod
    def process_data(self, series: RegionSeries) -> Any:
        """Обчислення над рядом у вікні аналізу"""
        pass

    @abstractmethod
    def generate_report(self, series: RegionSeries, processed: Any) -> pd.DataFrame:
        """Таблиця звіту з необрізаною точністю"""
        pass

    @property
    def name(self) -> str:
        return self._name

    @property
    def source(self) -> Optional[str]:
        """Шлях до файлу, що обробляється"""
        return self._source

    @property
    def last_result(self) -> Optional[ProcessingResult]:
        return self._last_result
