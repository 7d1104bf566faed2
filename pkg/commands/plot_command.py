"""
Plot Command
SVG-діаграма смуги меж з файлу BoundSeries (CSV або JSON)
"""

import argparse
import os

from core.bounds import BoundSeries
from core.errors import BoundsEngineError
from ui.band_chart import render_band_chart
from utils.config import Config
from utils.file_manager import FileManager
from .command import Command


def read_bound_series(path: str) -> BoundSeries:
    text = FileManager.read_file(path)
    try:
        if path.lower().endswith('.json'):
            return BoundSeries.from_json(text)
        region_id = os.path.splitext(os.path.basename(path))[0]
        return BoundSeries.from_csv(text, region_id=region_id)
    except BoundsEngineError as exc:
        raise exc.with_source(path)


class PlotCommand(Command):
    name = "plot"
    description = "діаграма смуги [lo, hi] у форматі SVG"

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument('--input', required=True, help="файл меж (CSV або JSON)")
        parser.add_argument('--output', help="SVG-файл (за замовчуванням stdout)")
        parser.add_argument('--title', default="", help="заголовок діаграми")

    def execute(self, args: argparse.Namespace) -> int:
        bounds = read_bound_series(args.input)
        try:
            svg = render_band_chart(bounds, args.title)
        except BoundsEngineError as exc:
            raise exc.with_source(args.input)
        FileManager.emit(svg, args.output)
        return Config.EXIT_OK
