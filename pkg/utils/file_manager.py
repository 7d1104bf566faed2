"""
Менеджер роботи з файлами
Читання вхідних файлів та запис результатів
"""

import json
import os
import sys
from typing import Optional

from core.errors import ConfigError


class FileManager:
    """Клас для роботи з файловою системою"""

    @staticmethod
    def read_file(filepath: str) -> str:
        """
        Читання текстового файлу (UTF-8)

        Raises:
            ConfigError: файл не існує або недоступний
        """
        if not os.path.exists(filepath):
            raise ConfigError("Файл не знайдено", invariant="input_file", source=filepath)
        try:
            with open(filepath, 'r', encoding='utf-8') as file:
                return file.read()
        except PermissionError:
            raise ConfigError("Немає прав доступу до файлу", invariant="input_file", source=filepath) from None
        except (OSError, UnicodeDecodeError) as exc:
            raise ConfigError(f"Помилка читання файлу: {exc}", invariant="input_file",
                              source=filepath) from None

    @staticmethod
    def write_file(filepath: str, content: str):
        """Запис файлу, батьківська папка створюється за потреби"""
        directory = os.path.dirname(filepath)
        try:
            if directory and not os.path.exists(directory):
                os.makedirs(directory)
            with open(filepath, 'w', encoding='utf-8', newline='\n') as file:
                file.write(content)
        except OSError as exc:
            raise ConfigError(f"Помилка запису файлу: {exc.strerror}", invariant="output_file",
                              source=filepath) from None

    @staticmethod
    def load_json(filepath: str) -> dict:
        """Прочитати JSON-файл"""
        content = FileManager.read_file(filepath)
        try:
            return json.loads(content)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"Невалідний JSON: {exc.msg} (рядок {exc.lineno})", invariant="config_json",
                              source=filepath) from None

    @staticmethod
    def emit(content: str, filepath: Optional[str] = None):
        """Записати результат у файл або, якщо шлях не задано, у stdout"""
        if filepath:
            FileManager.write_file(filepath, content)
        else:
            sys.stdout.write(content)
            if content and not content.endswith('\n'):
                sys.stdout.write('\n')
