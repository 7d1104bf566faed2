"""
Schema Validator - JSON Schema Validation
Перевірка конфігурації запуску за допомогою JSON Schema
"""

import json
from typing import Optional

import jsonschema
from jsonschema import ValidationError as JsonSchemaValidationError

from core.errors import ConfigError
from .strategy import ValidationIssue, ValidationResult, ValidationStrategy


class SchemaValidator(ValidationStrategy):
    """
    Валідатор JSON Schema
    Збирає всі невідповідності розібраної конфігурації схемі
    """

    def __init__(self, schema: Optional[dict] = None, schema_path: Optional[str] = None,
                 name: str = "SchemaValidator"):
        """
        Ініціалізація валідатора схеми

        Args:
            schema: JSON Schema як словник
            schema_path: Шлях до файлу зі схемою
            name: Назва валідатора
        """
        super().__init__(name)
        self._schema_path = schema_path
        self._schema = schema
        if self._schema is None and schema_path:
            self._schema = self._load_schema_from_file(schema_path)

    @staticmethod
    def _load_schema_from_file(filepath: str) -> dict:
        try:
            with open(filepath, 'r', encoding='utf-8') as handle:
                return json.load(handle)
        except FileNotFoundError:
            raise ConfigError("Файл схеми не знайдено", invariant="schema_file", source=filepath) from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"Невалідний JSON у файлі схеми: {exc.msg}", invariant="schema_file",
                              source=filepath) from None

    def validate(self, data: dict) -> ValidationResult:
        """
        Перевірити конфігурацію за схемою

        Args:
            data: Розібрана JSON-конфігурація

        Returns:
            ValidationResult з усіма порушеннями схеми
        """
        result = self._new_result()
        if self._schema is None:
            result.add_issue(ValidationIssue(message="JSON Schema не встановлена", invariant="no_schema"))
            return result

        try:
            validator_class = jsonschema.validators.validator_for(self._schema)
            validator = validator_class(self._schema, format_checker=validator_class.FORMAT_CHECKER)
            errors: list[JsonSchemaValidationError] = sorted(validator.iter_errors(data),
                                                             key=lambda error: list(error.path))
        except jsonschema.SchemaError as exc:
            result.add_issue(ValidationIssue(message=f"JSON Schema невалідна: {exc.message}",
                                             invariant="schema_error"))
            return result

        for error in errors:
            path = " → ".join(str(part) for part in error.path) if error.path else "root"
            result.add_issue(ValidationIssue(message=f"{path}: {error.message}", invariant="config_schema",
                                             field_name=path))

        result.message = "Конфігурація відповідає схемі" if result.is_valid else "Конфігурація не відповідає схемі"
        return result

    @property
    def schema(self) -> Optional[dict]:
        return self._schema

    @property
    def schema_path(self) -> Optional[str]:
        return self._schema_path
