"""
Simulate Command
Оракул покриття на синтетичних світах з розділу 'simulation'
"""

import argparse
import json
import os

import pandas as pd

from core.assumptions import AssumptionConfig
from observers.coverage_observer import CoverageObserver
from simulation.coverage import CoverageReport, require_coverage, run_coverage
from simulation.world import SimParams, simulate
from ui.table_view import TableView
from utils.config import Config
from utils.file_manager import FileManager
from .command import Command, ReportCommand


def summary_frame(report: CoverageReport) -> pd.DataFrame:
    return pd.DataFrame(
        [[method.value, report.coverage_rate(method), report.worst_relative_slack(method),
          sum(1 for day in report.misses if day.method is method)]
         for method in report.methods],
        columns=['method', 'coverage', 'worst_relative_slack', 'misses'],
    )


def summary_header(report: CoverageReport) -> str:
    summary = report.summary()
    return (f"# worlds={summary['worlds']} audit_flags={summary['audit_flags']} "
            f"testing_monotone_violations={summary['testing_monotone_violations']} "
            f"miss_rate_violations={summary['miss_rate_violations']} "
            f"parameter_flags={summary['parameter_flags']}")


class SimulateCommand(Command):
    name = "simulate"
    description = "перевірка покриття меж на синтетичних світах"

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument('--config', required=True, help="JSON-конфігурація запуску")
        parser.add_argument('--format', choices=Config.OUTPUT_FORMATS, help="формат виводу")
        parser.add_argument('--output', help="файл результату (за замовчуванням stdout)")
        parser.add_argument('--export-dir', help="папка для рядів та справжніх значень кожного світу")

    @staticmethod
    def export_worlds(params: SimParams, seeds, directory: str):
        for seed in seeds:
            world = simulate(params.with_seed(seed))
            FileManager.write_file(os.path.join(directory, f"world_{seed}.csv"), world.surveillance_csv())
            FileManager.write_file(os.path.join(directory, f"truth_{seed}.csv"), world.ground_truth_csv())

    def execute(self, args: argparse.Namespace) -> int:
        run_config = ReportCommand.load_config(args)
        section = run_config.simulation()
        params = SimParams.from_dict(section.params)
        cfg = AssumptionConfig.from_dict(section.assumptions)

        report = run_coverage(params, cfg, section.seeds, section.methods, observers=(CoverageObserver(),))

        export_dir = args.export_dir or section.export_dir
        if export_dir:
            self.export_worlds(params, section.seeds, export_dir)

        fmt = args.format or run_config.output_format
        if fmt == 'json':
            content = json.dumps(report.summary(), indent=2, ensure_ascii=False) + "\n"
        else:
            content = TableView().render(summary_frame(report), fmt, summary_header(report))
        FileManager.emit(content, args.output)

        require_coverage(report)
        return Config.EXIT_OK
