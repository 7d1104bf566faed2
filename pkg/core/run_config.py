"""
Run configuration - JSON-конфігурація запуску, спільна для всіх підкоманд
"""

import logging
from dataclasses import dataclass, field
from datetime import date
from typing import Iterable, Optional

from core.assumptions import AssumptionConfig
from core.bounds import BoundMethod
from core.errors import ConfigError
from core.records import ColumnMapping, EmpiricalRates
from core.sweep import SweepGrid
from utils.config import Config
from utils.file_manager import FileManager
from validation.schema_validator import SchemaValidator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimulationSection:
    params: dict
    seeds: tuple[int, ...]
    methods: tuple[BoundMethod, ...]
    assumptions: dict
    export_dir: Optional[str] = None


@dataclass(frozen=True)
class RunConfig:
    """Перевірена за схемою конфігурація з доступом до розділів"""
    data: dict = field(default_factory=dict)
    source: Optional[str] = None

    @classmethod
    def load(cls, path: str, schema_path: str = Config.SCHEMA_PATH) -> 'RunConfig':
        return cls.from_dict(FileManager.load_json(path), source=path, schema_path=schema_path)

    @classmethod
    def from_dict(cls, data: dict, source: Optional[str] = None,
                  schema_path: str = Config.SCHEMA_PATH) -> 'RunConfig':
        """
        Raises:
            ConfigError: конфігурація не відповідає схемі
        """
        result = SchemaValidator(schema_path=schema_path).validate(data)
        if not result.is_valid:
            raise ConfigError(str(result.first_issue.message), invariant="config_schema", source=source)
        logger.debug("Конфігурацію %s перевірено", source or "<dict>")
        return cls(data=data, source=source)

    def _section(self, name: str) -> dict:
        if name not in self.data:
            raise ConfigError(f"Відсутній розділ конфігурації '{name}'", invariant="config_section",
                              source=self.source)
        return self.data[name]

    def has_section(self, name: str) -> bool:
        return name in self.data

    @property
    def input_path(self) -> Optional[str]:
        return self.data.get('region', {}).get('input')

    def column_mapping(self) -> ColumnMapping:
        region = self._section('region')
        defaults = ColumnMapping(region_id=region['region_id'])
        if 'population' not in region and 'population_column' not in region:
            raise ConfigError("Розділ 'region' має задати population або population_column",
                              invariant="population_missing", source=self.source)
        return ColumnMapping(
            region_id=region['region_id'],
            population=region.get('population'),
            columns=dict(region.get('columns', {})),
            delimiter=region.get('delimiter', ','),
            population_column=region.get('population_column'),
            severe_semantics={**defaults.severe_semantics, **region.get('severe_semantics', {})},
        )

    @property
    def threshold(self) -> int:
        return int(self.data.get('window', {}).get('threshold', Config.DEFAULT_THRESHOLD))

    def assumptions(self, rates: Optional[Iterable[EmpiricalRates]] = None) -> AssumptionConfig:
        try:
            return AssumptionConfig.from_dict(self.data.get('assumptions', {}), rates)
        except ConfigError as exc:
            raise exc.with_source(self.source)

    @property
    def output_format(self) -> str:
        return self.data.get('output', {}).get('format', 'text')

    @property
    def output_method(self) -> BoundMethod:
        return BoundMethod.parse(self.data.get('output', {}).get('method', 'temporal_envelope'))

    def sweep(self) -> tuple[SweepGrid, date]:
        section = self._section('sweep')
        return SweepGrid.from_dict(section), date.fromisoformat(section['eval_date'])

    def simulation(self) -> SimulationSection:
        section = self._section('simulation')
        seeds = section.get('seeds', [section['params'].get('seed', 0)])
        if isinstance(seeds, dict):
            start = int(seeds.get('start', 0))
            seeds = range(start, start + int(seeds['count']))
        methods = section.get('methods', ['testing_monotone', 'temporal_envelope'])
        return SimulationSection(
            params=section['params'],
            seeds=tuple(int(seed) for seed in seeds),
            methods=tuple(BoundMethod.parse(name) for name in methods),
            assumptions=section.get('assumptions', self.data.get('assumptions', {})),
            export_dir=section.get('export_dir'),
        )
