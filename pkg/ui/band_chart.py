"""
Band Chart
SVG-діаграма смуги [lo, hi] за датами
"""

import io
import json
import xml.etree.ElementTree as ElementTree

import matplotlib
from matplotlib.figure import Figure

from core.bounds import BoundSeries
from core.errors import DataValidationError
from utils.config import Config

DC_NAMESPACE = 'http://purl.org/dc/elements/1.1/'


def _endpoints(bounds: BoundSeries) -> dict:
    return {
        'region_id': bounds.region_id,
        'dates': [day.isoformat() for day in bounds.dates],
        'lo': [item.lo for item in bounds.intervals],
        'hi': [item.hi for item in bounds.intervals],
    }


def render_band_chart(bounds: BoundSeries, title: str = "") -> str:
    """
    Намалювати смугу меж як SVG

    Кінці смуг записуються в метадані SVG (dc:description) як JSON.

    Args:
        bounds: Ряд меж
        title: Заголовок діаграми

    Returns:
        SVG-документ
    """
    if len(bounds) == 0:
        raise DataValidationError("Порожній ряд меж", invariant="no_records")

    dates = list(bounds.dates)
    los = [item.lo for item in bounds.intervals]
    his = [item.hi for item in bounds.intervals]
    colors = Config.CHART_COLORS
    marker = 'o' if len(dates) == 1 else None

    figure = Figure(figsize=(Config.CHART_WIDTH, Config.CHART_HEIGHT))
    axes = figure.add_subplot(1, 1, 1)
    band = axes.fill_between(dates, los, his, color=colors['band'], alpha=0.6, linewidth=0)
    band.set_gid('band')
    (lower,) = axes.plot(dates, los, color=colors['lo'], marker=marker, label='lo')
    lower.set_gid('lo')
    (upper,) = axes.plot(dates, his, color=colors['hi'], marker=marker, label='hi')
    upper.set_gid('hi')

    method = bounds.intervals[0].method.value
    axes.set_title(title or f"{bounds.region_id}: {method}")
    axes.set_ylabel("P(C_d=1)")
    axes.set_ylim(0.0, 1.0)
    axes.legend(loc='upper left')
    figure.autofmt_xdate()

    buffer = io.StringIO()
    with matplotlib.rc_context({'svg.hashsalt': Config.APP_NAME, 'svg.fonttype': 'none'}):
        figure.savefig(buffer, format='svg', metadata={
            'Title': axes.get_title(),
            'Description': json.dumps(_endpoints(bounds)),
            'Date': None,
        })
    return buffer.getvalue()


def extract_band_endpoints(svg_text: str) -> dict:
    """Прочитати кінці смуг з метаданих SVG, записаних render_band_chart"""
    try:
        root = ElementTree.fromstring(svg_text)
    except ElementTree.ParseError as exc:
        raise DataValidationError(f"Некоректний SVG: {exc}", invariant="svg") from None
    node = root.find(f'.//{{{DC_NAMESPACE}}}description')
    if node is None or not node.text:
        raise DataValidationError("SVG не містить опису меж", invariant="svg")
    return json.loads(node.text)
