"""
Log Observer
Перетворює події конвеєра на записи журналу
"""

import logging
from typing import Any

from observers.observer import Observer

logger = logging.getLogger(__name__)


class LogObserver(Observer):
    """Спостерігач, що журналює кроки конвеєра та зберігає їхню історію"""

    LEVELS = {
        'repaired': logging.WARNING,
        'clamped': logging.WARNING,
        'failed': logging.ERROR,
    }

    def __init__(self, name: str = "LogObserver"):
        super().__init__(name)
        self._events: list[tuple[str, dict]] = []

    def update(self, subject: Any, event_type: str, data: dict = None):
        data = data or {}
        self._events.append((event_type, data))
        details = ", ".join(f"{key}={value}" for key, value in data.items())
        logger.log(self.LEVELS.get(event_type, logging.INFO), "%s: %s", event_type, details or "-")

    @property
    def events(self) -> list[str]:
        """Типи отриманих подій у порядку надходження"""
        return [event_type for event_type, _ in self._events]

    def last(self, event_type: str) -> dict:
        for current, data in reversed(self._events):
            if current == event_type:
                return data
        return {}
