"""
Coverage Observer
Об'єднує звіти покриття, що надходять від прогону по зернах
"""

import logging
from typing import Any

from observers.observer import Observer
from simulation.coverage import CoverageReport

logger = logging.getLogger(__name__)


class CoverageObserver(Observer):
    """Накопичує CoverageReport.merge по подіях 'seed_checked'"""

    def __init__(self, name: str = "CoverageObserver", progress_every: int = 100):
        super().__init__(name)
        self._report = CoverageReport()
        self._progress_every = progress_every

    def update(self, subject: Any, event_type: str, data: dict = None):
        if event_type != 'seed_checked':
            return
        report: CoverageReport = data['report']
        self._report = self._report.merge(report)
        if not report.covered:
            logger.info("seed=%d: межа не покрила істину (%d днів)", data['seed'], len(report.misses))
        if self._report.worlds % self._progress_every == 0:
            logger.info("Перевірено %d світів", self._report.worlds)

    @property
    def report(self) -> CoverageReport:
        return self._report
