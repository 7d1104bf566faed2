"""
Observer Pattern - Base Observer
Базові класи спостерігача та суб'єкта для подій конвеєра
"""

import logging
from abc import ABC, abstractmethod
from typing import Any

logger = logging.getLogger(__name__)


class Observer(ABC):
    """
    Абстрактний базовий клас для спостерігачів
    Спостерігачі отримують сповіщення про кроки конвеєра та симуляції
    """

    def __init__(self, name: str = "Observer"):
        """
        Ініціалізація спостерігача

        Args:
            name: Ім'я спостерігача для ідентифікації
        """
        self._name = name

    @abstractmethod
    def update(self, subject: Any, event_type: str, data: dict = None):
        """
        Метод, який викликається при події

        Args:
            subject: Об'єкт, що опублікував подію
            event_type: Тип події ('loaded', 'validated', 'windowed', 'computed' тощо)
            data: Додаткові дані про подію
        """
        pass

    @property
    def name(self) -> str:
        return self._name

    def __str__(self) -> str:
        return f"{self.__class__.__name__}('{self._name}')"


class Subject:
    """Об'єкт, за яким спостерігають"""

    def __init__(self):
        self._observers: list[Observer] = []

    def attach(self, observer: Observer):
        if observer not in self._observers:
            self._observers.append(observer)

    def detach(self, observer: Observer):
        if observer in self._observers:
            self._observers.remove(observer)

    def notify(self, event_type: str, data: dict = None):
        """
        Сповістити всіх спостерігачів

        Помилка одного спостерігача логується і не перериває решту.
        """
        for observer in self._observers:
            try:
                observer.update(self, event_type, data or {})
            except Exception:
                logger.exception("Помилка в observer %s", observer.name)
