"""
Bounds Engine - Main Entry Point
Точка входу командного рядка
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from commands.bounds_command import BoundsCommand  # noqa: E402
from commands.command_manager import CommandManager  # noqa: E402
from commands.plot_command import PlotCommand  # noqa: E402
from commands.rates_command import RatesCommand  # noqa: E402
from commands.severe_command import SevereCommand  # noqa: E402
from commands.simulate_command import SimulateCommand  # noqa: E402
from commands.sweep_command import SweepCommand  # noqa: E402


def build_manager() -> CommandManager:
    return CommandManager([
        RatesCommand(),
        BoundsCommand(),
        SevereCommand(),
        SweepCommand(),
        SimulateCommand(),
        PlotCommand(),
    ])


def main(argv=None) -> int:
    """Головна функція застосунку"""
    return build_manager().run(argv)


if __name__ == "__main__":
    sys.exit(main())
