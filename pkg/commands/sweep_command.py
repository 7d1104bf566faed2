"""
Sweep Command
Межі на дату оцінки для сітки припущень з розділу 'sweep'
"""

import argparse

from processing.processors import SweepProcessor
from ui.table_view import TableView
from .command import ReportCommand


class SweepCommand(ReportCommand):
    name = "sweep"
    description = "межі на сітці інтервалів пропусків та часток безсимптомних"

    def execute(self, args: argparse.Namespace) -> int:
        run_config = self.load_config(args)
        grid, eval_date = run_config.sweep()
        path = self.input_path(args, run_config)
        processor = SweepProcessor(grid, eval_date, self.assumptions_factory(run_config),
                                   **self.processor_options(args, run_config))
        result = self.run_processor(processor, path, run_config)
        fmt = self.output_format(args, run_config)
        header = result.processed.header() if fmt != 'json' else None
        return self.emit(TableView().render(result.report, fmt, header), args)
