"""
Rates Command
Таблиця спостережуваних ймовірностей за датами
"""

import argparse

from processing.processors import RatesProcessor
from ui.table_view import RATES_DECIMALS, TableView
from .command import ReportCommand


class RatesCommand(ReportCommand):
    name = "rates"
    description = "P(T_d=1), P(R_d=1|T_d=1) та частки тяжких наслідків за датами"

    def execute(self, args: argparse.Namespace) -> int:
        run_config = self.load_config(args)
        path = self.input_path(args, run_config)
        processor = RatesProcessor(**self.processor_options(args, run_config))
        result = self.run_processor(processor, path, run_config)
        view = TableView(RATES_DECIMALS)
        return self.emit(view.render(result.report, self.output_format(args, run_config)), args)
