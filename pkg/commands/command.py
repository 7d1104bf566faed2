"""
Command Pattern - Base Command
Базовий клас підкоманд командного рядка
"""

import argparse
import os
from abc import ABC, abstractmethod
from typing import Optional

from core.assumptions import AssumptionConfig
from core.errors import BoundsEngineError, ConfigError
from core.run_config import RunConfig
from observers.log_observer import LogObserver
from processing.template import SeriesProcessor
from utils.config import Config
from utils.file_manager import FileManager


def parse_interval(text: str) -> tuple[float, float]:
    """Розібрати 'LO:HI' у пару ймовірностей"""
    parts = text.split(':')
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"очікується LO:HI, отримано '{text}'")
    try:
        lo, hi = float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"очікуються числа, отримано '{text}'") from None
    if not (0.0 <= lo <= hi <= 1.0):
        raise argparse.ArgumentTypeError(f"потрібно 0 ≤ LO ≤ HI ≤ 1, отримано '{text}'")
    return lo, hi


class Command(ABC):
    """
    Абстрактна підкоманда
    Інкапсулює аргументи та виконання одного сценарію
    """

    name = ""
    description = ""

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser):
        pass

    @abstractmethod
    def execute(self, args: argparse.Namespace) -> int:
        """
        Виконати підкоманду

        Returns:
            Код виходу
        """
        pass

    def __str__(self) -> str:
        return f"{self.__class__.__name__}('{self.name}')"


class ReportCommand(Command):
    """Спільні аргументи та кроки для підкоманд, що читають ряд регіону"""

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument('--input', help="файл ряду (за замовчуванням region.input з конфігурації)")
        parser.add_argument('--config', required=True, help="JSON-конфігурація запуску")
        parser.add_argument('--format', choices=Config.OUTPUT_FORMATS, help="формат виводу")
        parser.add_argument('--output', help="файл результату (за замовчуванням stdout)")
        parser.add_argument('--repair', choices=('reject', 'clamp'), default='reject',
                            help="обробка спадних кумулятивних значень")
        parser.add_argument('--threshold', type=int, help="поріг вікна аналізу")

    @staticmethod
    def load_config(args: argparse.Namespace) -> RunConfig:
        return RunConfig.load(args.config)

    @staticmethod
    def input_path(args: argparse.Namespace, run_config: RunConfig) -> str:
        if args.input:
            return args.input
        if run_config.input_path:
            base = os.path.dirname(os.path.abspath(args.config))
            return os.path.join(base, run_config.input_path)
        raise ConfigError("Не задано вхідний файл (--input або region.input)", invariant="input_file",
                          source=args.config)

    @staticmethod
    def output_format(args: argparse.Namespace, run_config: RunConfig) -> str:
        return args.format or run_config.output_format

    @staticmethod
    def processor_options(args: argparse.Namespace, run_config: RunConfig) -> dict:
        threshold = args.threshold if args.threshold is not None else run_config.threshold
        return {'repair': args.repair, 'threshold': threshold}

    @staticmethod
    def assumptions_factory(run_config: RunConfig, miss_rate: Optional[tuple] = None,
                            alpha: Optional[tuple] = None):
        def build(rates) -> AssumptionConfig:
            cfg = run_config.assumptions(rates)
            if miss_rate is not None:
                cfg = cfg.with_miss_rate(*miss_rate)
            if alpha is not None:
                cfg = cfg.with_alpha(*alpha)
            return cfg
        return build

    @staticmethod
    def run_processor(processor: SeriesProcessor, path: str, run_config: RunConfig):
        processor.attach(LogObserver())
        try:
            return processor.process(path, run_config.column_mapping())
        except BoundsEngineError as exc:
            raise exc.with_source(path)

    @staticmethod
    def emit(content: str, args: argparse.Namespace) -> int:
        FileManager.emit(content, args.output)
        return Config.EXIT_OK
