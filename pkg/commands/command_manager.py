"""
Command Manager
Реєстр підкоманд, розбір аргументів та відображення винятків на коди виходу
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from core.errors import BoundsEngineError, ConfigError
from utils.config import Config
from .command import Command

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """argparse, що повідомляє про помилку використання винятком, а не sys.exit(2)"""

    def error(self, message: str):
        raise ConfigError(message, invariant="usage")


class CommandManager:
    """
    Менеджер команд
    Реєструє підкоманди та виконує вибрану
    """

    def __init__(self, commands: Sequence[Command] = ()):
        self._commands: dict[str, Command] = {}
        for command in commands:
            self.register(command)

    def register(self, command: Command):
        if command.name in self._commands:
            raise ValueError(f"Команду '{command.name}' вже зареєстровано")
        self._commands[command.name] = command

    def build_parser(self) -> argparse.ArgumentParser:
        parser = _ArgumentParser(prog="bounds-engine", description=Config.APP_NAME)
        parser.add_argument('-v', '--verbose', action='count', default=0, help="докладніший журнал")
        parser.add_argument('--version', action='version', version=f"%(prog)s {Config.APP_VERSION}")
        subparsers = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=_ArgumentParser)
        subparsers.required = True
        for name, command in self._commands.items():
            subparser = subparsers.add_parser(name, help=command.description, description=command.description)
            command.add_arguments(subparser)
        return parser

    @staticmethod
    def configure_logging(verbosity: int):
        level = logging.WARNING
        if verbosity == 1:
            level = logging.INFO
        elif verbosity > 1:
            level = logging.DEBUG
        logging.basicConfig(level=level, format=Config.LOG_FORMAT, stream=sys.stderr, force=True)

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        Розібрати аргументи та виконати підкоманду

        Returns:
            0 успіх, 1 використання/конфігурація, 2 дані, 3 суперечність припущень, 4 покриття
        """
        verbose = 0
        try:
            parser = self.build_parser()
            args = parser.parse_args(argv)
            verbose = args.verbose
            self.configure_logging(verbose)
            return self._commands[args.command].execute(args)
        except BoundsEngineError as exc:
            if verbose:
                logger.exception("Помилку виконання")
            print(f"помилка: {exc}", file=sys.stderr)
            return exc.exit_code

    def get_commands(self) -> list[str]:
        return list(self._commands)
