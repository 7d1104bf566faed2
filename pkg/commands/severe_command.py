"""
Severe Command
Межі на частку тяжких наслідків серед інфікованих
"""

import argparse

from core.records import SevereOutcome
from processing.processors import SevereProcessor
from ui.table_view import TableView
from .command import ReportCommand, parse_interval


def parse_outcomes(text: str) -> tuple[SevereOutcome, ...]:
    try:
        return tuple(SevereOutcome.parse(part.strip()) for part in text.split(',') if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class SevereCommand(ReportCommand):
    name = "severe"
    description = "межі на P(V_d=1|C_d=1) для госпіталізації, реанімації та смерті"

    def add_arguments(self, parser: argparse.ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('--miss-rate', type=parse_interval, metavar='LO:HI',
                            help="інтервал P(C_d=1|T_d=1,R_d=0)")
        parser.add_argument('--outcomes', type=parse_outcomes, default=tuple(SevereOutcome),
                            help="наслідки через кому (H,U,D)")

    def execute(self, args: argparse.Namespace) -> int:
        run_config = self.load_config(args)
        path = self.input_path(args, run_config)
        processor = SevereProcessor(
            self.assumptions_factory(run_config, args.miss_rate),
            args.outcomes,
            **self.processor_options(args, run_config),
        )
        result = self.run_processor(processor, path, run_config)
        header = f"# {result.series.region_id}"
        return self.emit(TableView().render(result.report, self.output_format(args, run_config), header), args)
