"""
Table View
Відображення таблиць звітів у текстовому, CSV та JSON форматах
"""

import json
import math
from decimal import ROUND_HALF_UP, Decimal
from typing import Mapping, Optional

import pandas as pd

from core.errors import ConfigError
from utils.config import Config


def round_half_up(value: float, decimals: int) -> str:
    """Округлення половини вгору за десятковим записом числа"""
    quantum = Decimal(1).scaleb(-decimals)
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def _is_missing(value) -> bool:
    return value is None or (isinstance(value, float) and math.isnan(value))


class TableView:
    """
    Рендер таблиці звіту

    Округлення застосовується лише до текстового формату; CSV та JSON
    зберігають повну точність.
    """

    def __init__(self, decimals: Optional[Mapping[str, int]] = None,
                 default_decimals: int = Config.BOUND_DECIMALS):
        self._decimals = dict(decimals or {})
        self._default_decimals = default_decimals

    def render(self, frame: pd.DataFrame, fmt: str = 'text', header: Optional[str] = None) -> str:
        if fmt == 'text':
            return self.render_text(frame, header)
        if fmt == 'csv':
            text = frame.to_csv(index=False, lineterminator='\n')
            return f"{header}\n{text}" if header else text
        if fmt == 'json':
            return self.render_json(frame)
        raise ConfigError(f"Невідомий формат виводу: {fmt}", invariant="output_format")

    def format_cell(self, column: str, value) -> str:
        if _is_missing(value):
            return "-"
        if isinstance(value, bool):
            return "так" if value else "ні"
        if isinstance(value, float):
            return round_half_up(value, self._decimals.get(column, self._default_decimals))
        return str(value)

    def render_text(self, frame: pd.DataFrame, header: Optional[str] = None) -> str:
        columns = list(frame.columns)
        cells = [[self.format_cell(column, value) for column, value in zip(columns, row)]
                 for row in frame.astype(object).itertuples(index=False, name=None)]
        widths = [max([len(column)] + [len(row[index]) for row in cells]) for index, column in enumerate(columns)]

        lines = [header] if header else []
        lines.append("  ".join(column.ljust(width) for column, width in zip(columns, widths)).rstrip())
        lines.append("  ".join("-" * width for width in widths))
        for row in cells:
            lines.append("  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"

    @staticmethod
    def render_json(frame: pd.DataFrame) -> str:
        records = [
            {column: (None if _is_missing(value) else value) for column, value in row.items()}
            for row in frame.astype(object).to_dict(orient='records')
        ]
        return json.dumps(records, indent=2, ensure_ascii=False) + "\n"


RATES_DECIMALS = {
    'p_tested': Config.RATE_DECIMALS,
    'p_pos_given_tested': Config.RATE_DECIMALS,
    'p_H': Config.SEVERE_DECIMALS,
    'p_U': Config.SEVERE_DECIMALS,
    'p_D': Config.SEVERE_DECIMALS,
}
