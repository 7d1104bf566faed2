"""
Конфігураційний модуль для Bounds Engine
Містить сталі налаштування застосунку
"""

import os


class Config:
    """Клас конфігурації застосунку"""

    APP_NAME = "Bounds Engine"
    APP_VERSION = "1.0.0"

    # Вікно аналізу: перша дата з щонайменше стількома підтвердженими випадками
    DEFAULT_THRESHOLD = 100

    # Інтервал [L_d10, U_d10], що відповідає NPV у [0.6, 0.9]
    DEFAULT_MISS_RATE = (0.1, 0.4)

    # Допуск, у межах якого r може перевищувати нижню межу чутливості
    SENSITIVITY_SLACK = 0.01

    WEIGHT_TOLERANCE = 1e-9

    RATE_DECIMALS = 3
    BOUND_DECIMALS = 3
    SEVERE_DECIMALS = 5

    OUTPUT_FORMATS = ('text', 'csv', 'json')

    EXIT_OK = 0
    EXIT_USAGE = 1
    EXIT_DATA = 2
    EXIT_INCONSISTENT = 3
    EXIT_COVERAGE = 4

    CHART_WIDTH = 8.0
    CHART_HEIGHT = 4.5
    CHART_COLORS = {
        'band': '#9FC5E8',
        'lo': '#1F4E79',
        'hi': '#A61C00',
    }

    LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

    BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    DATA_DIR = os.path.join(BASE_DIR, 'data')
    FIXTURES_DIR = os.path.join(DATA_DIR, 'fixtures')
    SCHEMA_PATH = os.path.join(DATA_DIR, 'config_schema.json')

    @classmethod
    def get_data_path(cls, filename):
        """Отримати повний шлях до файлу в папці data"""
        return os.path.join(cls.DATA_DIR, filename)

    @classmethod
    def get_fixture_path(cls, filename):
        """Отримати повний шлях до файлу з еталонними рядами"""
        return os.path.join(cls.FIXTURES_DIR, filename)
