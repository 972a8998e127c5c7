from .generators import MatNormalGenerator, StrictMvnGenerator
from .scenario import (DIAGNOSTICS, LRT, Scenario, ScenarioFailure,
                       ScenarioResult, generate_data, run_scenario, run_suite,
                       scenarios_from_config)

__all__ = [
    'MatNormalGenerator', 'StrictMvnGenerator', 'Scenario', 'ScenarioResult',
    'ScenarioFailure', 'generate_data', 'run_scenario', 'run_suite',
    'scenarios_from_config', 'DIAGNOSTICS', 'LRT'
]
