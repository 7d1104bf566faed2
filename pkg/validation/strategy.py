"""
Strategy Pattern - Validation Strategy
Базовий інтерфейс для стратегій перевірки рядів епіднагляду
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import date
from typing import Any, Optional


@dataclass
class ValidationIssue:
    """Порушення інваріанта з місцем, де його виявлено"""
    message: str
    invariant: str
    index: Optional[int] = None
    date: Optional[date] = None
    field_name: Optional[str] = None

    def __str__(self) -> str:
        where = []
        if self.index is not None:
            where.append(f"запис {self.index}")
        if self.date is not None:
            where.append(self.date.isoformat())
        prefix = f"[{', '.join(where)}] " if where else ""
        return f"{prefix}{self.invariant}: {self.message}"


@dataclass
class ValidationResult:
    is_valid: bool
    validator_name: str
    message: str = ""
    issues: list[ValidationIssue] = field(default_factory=list)

    def add_issue(self, issue: ValidationIssue):
        self.issues.append(issue)
        self.is_valid = False

    @property
    def first_issue(self) -> Optional[ValidationIssue]:
        return self.issues[0] if self.issues else None


class ValidationStrategy(ABC):
    """
    Абстрактна стратегія перевірки
    Перевірка збирає всі порушення, а не зупиняється на першому
    """

    def __init__(self, name: str = "Validator"):
        self._name = name

    @abstractmethod
    def validate(self, target: Any) -> ValidationResult:
        """
        Перевірити об'єкт

        Args:
            target: Ряд епіднагляду або розібрана конфігурація

        Returns:
            ValidationResult з усіма порушеннями
        """
        pass

    def _new_result(self) -> ValidationResult:
        return ValidationResult(is_valid=True, validator_name=self._name)

    @property
    def name(self) -> str:
        return self._name

    def __str__(self) -> str:
        return f"{self.__class__.__name__}('{self._name}')"


class CompositeValidator(ValidationStrategy):
    """
    Складений валідатор (Composite Pattern)
    Порушення всіх вкладених перевірок об'єднуються в порядку додавання
    """

    def __init__(self, name: str = "CompositeValidator"):
        super().__init__(name)
        self._validators: list[ValidationStrategy] = []

    def add_validator(self, validator: ValidationStrategy):
        if validator not in self._validators:
            self._validators.append(validator)

    def validate(self, target: Any) -> ValidationResult:
        result = self._new_result()
        for validator in self._validators:
            partial = validator.validate(target)
            if not partial.is_valid:
                result.is_valid = False
            result.issues.extend(partial.issues)

        if result.is_valid:
            result.message = f"Всі перевірки ({len(self._validators)}) пройдено"
        else:
            result.message = f"Виявлено {len(result.issues)} порушень"
        return result

    def __len__(self) -> int:
        return len(self._validators)
