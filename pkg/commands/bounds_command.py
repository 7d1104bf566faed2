"""
Bounds Command
Межі на частку інфікованих за датами
"""

import argparse

from core.bounds import BoundMethod
from processing.processors import BoundsProcessor
from ui.table_view import TableView
from .command import ReportCommand, parse_interval

INFECTION_METHODS = ('worst_case', 'testing_monotone', 'temporal_envelope', 'envelope', 'asym_refined')


class BoundsCommand(ReportCommand):
    name = "bounds"
    description = "межі на P(C_d=1) вибраним методом"

    def add_arguments(self, parser: argparse.ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('--method', choices=INFECTION_METHODS,
                            help="метод (за замовчуванням temporal_envelope)")
        parser.add_argument('--miss-rate', type=parse_interval, metavar='LO:HI',
                            help="інтервал P(C_d=1|T_d=1,R_d=0)")
        parser.add_argument('--refine-asymptomatic', type=parse_interval, metavar='LO:HI',
                            help="інтервал частки безсимптомних; вмикає asym_refined")

    @staticmethod
    def method(args: argparse.Namespace, run_config) -> BoundMethod:
        if args.method:
            return BoundMethod.parse(args.method)
        if args.refine_asymptomatic:
            return BoundMethod.ASYM_REFINED
        return run_config.output_method

    def execute(self, args: argparse.Namespace) -> int:
        run_config = self.load_config(args)
        path = self.input_path(args, run_config)
        processor = BoundsProcessor(
            self.assumptions_factory(run_config, args.miss_rate, args.refine_asymptomatic),
            self.method(args, run_config),
            **self.processor_options(args, run_config),
        )
        result = self.run_processor(processor, path, run_config)

        fmt = self.output_format(args, run_config)
        if fmt == 'json':
            return self.emit(result.processed.to_json() + "\n", args)
        if fmt == 'csv':
            return self.emit(result.processed.to_csv(), args)
        return self.emit(TableView().render(result.report, fmt, header=f"# {result.series.region_id}"), args)
