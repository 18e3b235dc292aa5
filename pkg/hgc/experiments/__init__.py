# Copyright (c) SI-Analytics. All rights reserved.
from .base import (BaseScenario, Check, Diagnostics, ExperimentReport,
                   Param)
from .builder import SCENARIOS, build_scenario
from .runner import list_scenarios, run_experiment, validate, write_report
from .scenarios import *  # noqa F403

__all__ = [
    'BaseScenario', 'Check', 'Diagnostics', 'ExperimentReport', 'Param',
    'SCENARIOS', 'build_scenario', 'list_scenarios', 'run_experiment',
    'validate', 'write_report'
]
