# Copyright (c) SI-Analytics. All rights reserved.
import math
import operator
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from hgc.core import ContextManager
from hgc.grid import Grid, is_power_of_two
from hgc.groups import build_group
from hgc.multipliers import MULTIPLIERS
from hgc.utils import ConfigError, GridError, GroupLawError

COMPARISONS: Dict[str, Callable[[float, float], bool]] = {
    '<': operator.lt,
    '<=': operator.le,
    '>': operator.gt,
    '>=': operator.ge,
}

# keys every experiment config may carry
COMMON_KEYS = ('scenario', 'group', 'grid', 'seed', 'out_dir', 'log_level')


@dataclass
class Check:
    """A measured value judged against a threshold.

    Attributes:
        name (str): What was measured.
        value (float): The measurement.
        threshold (float): The bound it is judged by.
        comparison (str): One of ``<``, ``<=``, ``>``, ``>=``.
        invariant (str): The property the bound comes from.
    """
    name: str
    value: float
    threshold: float
    comparison: str = '<'
    invariant: str = ''

    @property
    def passed(self) -> bool:
        value = float(self.value)
        if math.isnan(value):
            return False
        return COMPARISONS[self.comparison](value, float(self.threshold))

    def to_dict(self) -> dict:
        return dict(
            name=self.name,
            value=float(self.value),
            threshold=float(self.threshold),
            comparison=self.comparison,
            invariant=self.invariant,
            passed=self.passed)


@dataclass
class ExperimentReport:
    """Outcome of one scenario run.

    Attributes:
        scenario (str): Scenario name.
        config (dict): Echo of the validated config.
        checks (list[Check]): Pass/fail judgements.
        measurements (dict): JSON-ready measured values.
        series (dict): Name to ``(columns, rows)`` written as CSV.
        timing (dict): Wall-clock seconds; the only non-deterministic
            part of the report.
    """
    scenario: str
    config: dict
    checks: List[Check] = field(default_factory=list)
    measurements: Dict[str, Any] = field(default_factory=dict)
    series: Dict[str, Tuple[Sequence[str], List[list]]] = field(
        default_factory=dict)
    timing: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def add_check(self, *args, **kwargs) -> Check:
        check = Check(*args, **kwargs)
        self.checks.append(check)
        return check

    def to_dict(self) -> dict:
        return dict(
            scenario=self.scenario,
            config=self.config,
            passed=self.passed,
            checks=[c.to_dict() for c in self.checks],
            measurements=self.measurements,
            series={
                name: f'{name}.csv'
                for name in sorted(self.series)
            },
            timing=self.timing)


@dataclass
class Param:
    """One scenario parameter of the config schema."""
    kind: type
    default: Any = None
    required: bool = False
    help: str = ''

    def coerce(self, name: str, value):
        if value is None:
            return None
        if self.kind is float and isinstance(value, (int, float)) \
                and not isinstance(value, bool):
            return float(value)
        if self.kind is int and isinstance(value, int) \
                and not isinstance(value, bool):
            return value
        if self.kind is list and isinstance(value, (list, tuple)):
            return list(value)
        if self.kind is bool and isinstance(value, bool):
            return value
        if self.kind is object:
            return value
        raise ConfigError(f'"{name}" must be of type {self.kind.__name__}, '
                          f'got {value!r}')

    def to_dict(self) -> dict:
        return dict(
            type=self.kind.__name__,
            default=self.default,
            required=self.required,
            help=self.help)


@dataclass
class Diagnostics:
    """Result of validating a config without running it."""
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.errors

    def to_dict(self) -> dict:
        return dict(
            valid=self.valid, errors=self.errors, warnings=self.warnings)


class BaseScenario(metaclass=ABCMeta):
    """Base class of experiment scenarios.

    A scenario declares its parameters in :attr:`schema`, resolves the
    config through a :class:`~hgc.core.ContextManager` pipeline and runs
    the owning module's operations, judging the results with
    :class:`Check` entries.

    Attributes:
        name (str): The registry name, e.g. ``'fj-lemma'``.
        schema (dict): Parameter name to :class:`Param`.
        multiplier_keys (tuple): Parameters naming multipliers.
        default_grids (dict): Group dimension to a default grid block;
            key ``None`` covers the other dimensions.
        fourier_grid (bool): Whether the scenario takes discrete Fourier
            transforms on its grid, which needs power-of-two sizes.
    """
    name: str = ''
    schema: Dict[str, Param] = {}
    multiplier_keys: Tuple[str, ...] = ()
    default_grids: Dict[Optional[int], dict] = {}
    fourier_grid: bool = False

    def default_grid(self, dim: int) -> Optional[dict]:
        return self.default_grids.get(dim, self.default_grids.get(None))

    @property
    def rewriters(self) -> List[dict]:
        return [
            dict(type='ResolveGroup'),
            dict(type='BuildGrid'),
            dict(type='ResolveMultipliers', keys=self.multiplier_keys),
            dict(type='SeedRandom'),
        ]

    def catalog(self) -> dict:
        return {name: param.to_dict() for name, param in self.schema.items()}

    def validate(self, cfg: dict) -> Diagnostics:
        """Check keys, types and resolvability without computing."""
        diag = Diagnostics()
        if not cfg.get('group'):
            diag.errors.append('missing required field "group"')
        for key in cfg:
            if key not in COMMON_KEYS and key not in self.schema:
                diag.errors.append(f'unknown key "{key}"')
        for key, param in self.schema.items():
            if param.required and cfg.get(key) is None:
                diag.errors.append(f'missing required field "{key}"')
            elif key in cfg:
                try:
                    param.coerce(key, cfg[key])
                except ConfigError as err:
                    diag.errors.append(str(err))
        if diag.errors:
            return diag
        try:
            group = build_group(cfg['group'])
        except (GroupLawError, OSError, KeyError) as err:
            diag.errors.append(f'cannot resolve "group": {err}')
            return diag
        grid_cfg = cfg.get('grid') or self.default_grid(group.dim)
        if grid_cfg is None:
            diag.errors.append('missing required field "grid"')
        else:
            self.check_grid(group, grid_cfg, diag)
        for key in self.multiplier_keys:
            value = self.params(cfg).get(key)
            name = value.get('type') if isinstance(value, dict) else value
            if name is not None and MULTIPLIERS.get(name) is None:
                diag.errors.append(f'unknown multiplier "{name}" in "{key}"')
        if not diag.errors:
            self.check_params(group, self.params(cfg), diag)
        return diag

    def check_grid(self, group, grid_cfg: dict, diag: Diagnostics) -> None:
        try:
            grid = grid_cfg if isinstance(grid_cfg, Grid) else Grid.from_cfg(
                grid_cfg, group.dim)
        except (GridError, KeyError, TypeError, ValueError) as err:
            diag.errors.append(f'invalid "grid": {err}')
            return
        if self.fourier_grid and not is_power_of_two(grid):
            diag.errors.append(
                f'"grid" sizes {list(grid.sizes)} must be powers of two for '
                f'{self.name}, which takes discrete Fourier transforms')

    def check_params(self, group, params: dict, diag: Diagnostics) -> None:
        """Scenario-specific checks; append to ``diag``."""

    def params(self, cfg: dict) -> dict:
        """Schema parameters with defaults filled in and types coerced."""
        return {
            key: param.coerce(key, cfg.get(key, param.default))
            for key, param in self.schema.items()
        }

    def context_aware_run(self, cfg: dict) -> ExperimentReport:
        """Resolve ``cfg`` through the rewriters and run the scenario.

        Raises:
            ConfigError: If the config does not validate.
        """
        diag = self.validate(cfg)
        if not diag.valid:
            raise ConfigError('; '.join(diag.errors))
        group_dim = build_group(cfg['group']).dim
        context = dict(
            group=cfg['group'],
            grid=cfg.get('grid') or self.default_grid(group_dim),
            seed=int(cfg.get('seed', 0)),
            out_dir=cfg.get('out_dir'),
            **self.params(cfg))
        return ContextManager(self.rewriters)(self._run)(**context)

    def _run(self, **context) -> ExperimentReport:
        report = self.new_report(**context)
        self.run(report, **context)
        return report

    def new_report(self, **context) -> ExperimentReport:
        config = {
            key: value
            for key, value in context.items() if key != 'rng'
        }
        config['group'] = context['group'].name
        config['grid'] = context['grid'].to_dict()
        for key in self.multiplier_keys:
            if config.get(key) is not None:
                config[key] = repr(config[key])
        return ExperimentReport(self.name, config)

    @abstractmethod
    def run(self, report: ExperimentReport, **context) -> None:
        """Compute and record checks, measurements and series in
        ``report``; the context holds ``group``, ``grid``, ``seed``,
        ``rng`` and the schema parameters."""
