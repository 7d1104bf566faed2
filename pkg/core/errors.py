"""
Ієрархія винятків Bounds Engine
Кожен виняток несе назву порушеного інваріанта та контекст (файл, дата, рядок)
"""

from datetime import date
from typing import Optional

from utils.config import Config


class BoundsEngineError(Exception):
    """Базовий виняток застосунку"""

    exit_code = Config.EXIT_USAGE

    def __init__(self,
                 message: str,
                 invariant: str = "unspecified",
                 source: Optional[str] = None,
                 date: Optional[date] = None):
        super().__init__(message)
        self.message = message
        self.invariant = invariant
        self.source = source
        self.date = date

    def with_source(self, source: str) -> 'BoundsEngineError':
        """Додати шлях до файлу, якщо його ще не задано"""
        if self.source is None:
            self.source = source
        return self

    def _context(self) -> list[str]:
        parts = []
        if self.source:
            parts.append(f"файл {self.source}")
        if self.date is not None:
            parts.append(f"дата {self.date.isoformat()}")
        return parts

    def __str__(self) -> str:
        context = self._context()
        suffix = f" ({', '.join(context)})" if context else ""
        return f"[{self.invariant}] {self.message}{suffix}"


class ConfigError(BoundsEngineError):
    """Помилка використання або конфігурації"""

    exit_code = Config.EXIT_USAGE


class DataValidationError(BoundsEngineError):
    """Вхідний ряд порушує інваріанти даних"""

    exit_code = Config.EXIT_DATA

    def __init__(self, message: str, invariant: str = "data", source: Optional[str] = None,
                 date: Optional[date] = None, row: Optional[int] = None, issues: Optional[list] = None):
        super().__init__(message, invariant=invariant, source=source, date=date)
        self.row = row
        self.issues = issues or []

    def _context(self) -> list[str]:
        parts = super()._context()
        if self.row is not None:
            parts.append(f"рядок {self.row}")
        return parts


class AssumptionInconsistencyError(BoundsEngineError):
    """Дані спростовують сукупність прийнятих припущень (межі перетнулися)"""

    exit_code = Config.EXIT_INCONSISTENT


class CoverageFailure(BoundsEngineError):
    """Межі не покрили справжню частку інфікованих за виконаних припущень"""

    exit_code = Config.EXIT_COVERAGE
