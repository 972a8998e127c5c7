"""Scenario runner for the simulation study.

A scenario fixes a generator, a shape ``(c, r)``, a sample size and a seed.
Running it draws the data, fits the Kronecker model and computes every
requested diagnostic. Diagnostics that need the unstructured fit are
replaced by a notice when ``N <= cr``: that infeasibility is a result in
its own right, not a warning.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from mmengine.logging import print_log

from matnormdiag.core import MatrixDataset
from matnormdiag.core.exceptions import DegenerateTest, ScenarioFailed
from matnormdiag.diagnostics import (DD, HEALY_TYPE, MHEALY, NOMINAL,
                                     AlignmentStats, LrtResult, PlotSeries,
                                     alignment, dd_series, healy_type_series,
                                     mhealy_series, separability_lrt)
from matnormdiag.distributions import RngStream
from matnormdiag.estimation import (FlipFlopConfig, FlipFlopReport,
                                    flipflop_mle, mvn_mle)
from matnormdiag.registry import GENERATORS
from matnormdiag.utils import ordered_map

LRT = 'lrt'
DIAGNOSTICS = (MHEALY, DD, HEALY_TYPE, LRT)
UNSTRUCTURED = (DD, HEALY_TYPE, LRT)


@dataclass(frozen=True)
class Scenario:
    """One simulated experiment.

    Args:
        name (str): Unique name within a suite.
        generator (str | dict): Registered generator name
            (``'matnormal'`` or ``'strict_mvn'``) or its config dict.
        n_samples (int): N.
        n_rows (int): c.
        n_cols (int): r.
        seed (int): 64-bit unsigned seed of the data draw.
        diagnostics (Sequence[str]): Subset of ``('mhealy', 'dd',
            'healy_type', 'lrt')``. Defaults to all four.
    """
    name: str
    generator: Union[str, dict]
    n_samples: int
    n_rows: int
    n_cols: int
    seed: int
    diagnostics: Tuple[str, ...] = DIAGNOSTICS

    def __post_init__(self):
        diagnostics = tuple(self.diagnostics)
        unknown = set(diagnostics) - set(DIAGNOSTICS)
        if unknown:
            raise ValueError(f'unknown diagnostics {sorted(unknown)} in '
                             f'scenario {self.name!r}')
        if len(set(diagnostics)) != len(diagnostics):
            raise ValueError(
                f'duplicated diagnostics in scenario {self.name!r}')
        for key in ('n_samples', 'n_rows', 'n_cols'):
            if getattr(self, key) < 1:
                raise ValueError(f'{key} should be positive in scenario '
                                 f'{self.name!r}')
        generator = self.generator
        if isinstance(generator, dict):
            generator = dict(generator)
        object.__setattr__(self, 'generator', generator)
        object.__setattr__(self, 'diagnostics', diagnostics)

    @property
    def dim(self) -> int:
        return self.n_rows * self.n_cols

    def generator_cfg(self) -> dict:
        if isinstance(self.generator, str):
            return dict(type=self.generator)
        return dict(self.generator)

    def split_diagnostics(self) -> Tuple[Tuple[str, ...], List[str]]:
        """Feasible diagnostics and notices for the infeasible ones."""
        if self.n_samples > self.dim:
            return self.diagnostics, []
        feasible = tuple(d for d in self.diagnostics if d not in UNSTRUCTURED)
        notices = [
            f'{d}: infeasible, needs N > cr but N={self.n_samples} <= '
            f'cr={self.dim}' for d in self.diagnostics if d in UNSTRUCTURED
        ]
        return feasible, notices

    def to_dict(self) -> dict:
        return dict(
            name=self.name,
            generator=self.generator,
            n_samples=self.n_samples,
            n_rows=self.n_rows,
            n_cols=self.n_cols,
            seed=self.seed,
            diagnostics=list(self.diagnostics))

    @classmethod
    def from_dict(cls, info: dict) -> 'Scenario':
        return cls(**info)


@dataclass(frozen=True, eq=False)
class ScenarioResult:
    """Diagnostic bundle of a scenario."""
    scenario: Scenario
    fit_report: FlipFlopReport
    plot_series: Dict[str, PlotSeries] = field(default_factory=dict)
    alignment: Dict[str, AlignmentStats] = field(default_factory=dict)
    lrt: Optional[LrtResult] = None
    notices: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return dict(
            scenario=self.scenario.to_dict(),
            fit_report=self.fit_report.to_dict(),
            plot_series={
                k: v.to_dict()
                for k, v in self.plot_series.items()
            },
            alignment={k: v.to_dict()
                       for k, v in self.alignment.items()},
            lrt=None if self.lrt is None else self.lrt.to_dict(),
            notices=list(self.notices))

    @classmethod
    def from_dict(cls, info: dict) -> 'ScenarioResult':
        return cls(
            scenario=Scenario.from_dict(info['scenario']),
            fit_report=FlipFlopReport.from_dict(info['fit_report']),
            plot_series={
                k: PlotSeries.from_dict(v)
                for k, v in info['plot_series'].items()
            },
            alignment={
                k: AlignmentStats.from_dict(v)
                for k, v in info['alignment'].items()
            },
            lrt=None
            if info['lrt'] is None else LrtResult.from_dict(info['lrt']),
            notices=list(info['notices']))


@dataclass(frozen=True)
class ScenarioFailure:
    """A scenario of a suite that aborted; replayable from name and seed."""
    scenario: Scenario
    error: str
    message: str

    def to_dict(self) -> dict:
        return dict(
            scenario=self.scenario.to_dict(),
            error=self.error,
            message=self.message)


def generate_data(scenario: Scenario) -> MatrixDataset:
    """Draw the scenario dataset; a pure function of the scenario."""
    generator = GENERATORS.build(scenario.generator_cfg())
    return generator(
        RngStream(scenario.seed), scenario.n_samples, scenario.n_rows,
        scenario.n_cols)


def _diagnose(scenario: Scenario, flipflop_cfg: Optional[FlipFlopConfig],
              plotting_position: str) -> ScenarioResult:
    data = generate_data(scenario)
    report = flipflop_mle(data, flipflop_cfg)
    feasible, notices = scenario.split_diagnostics()
    series = {}
    fit_vec = None
    if DD in feasible or HEALY_TYPE in feasible:
        fit_vec = mvn_mle(data)
    for kind in feasible:
        if kind == MHEALY:
            series[kind] = mhealy_series(data, report.params,
                                         plotting_position)
        elif kind == HEALY_TYPE:
            series[kind] = healy_type_series(data, fit_vec, plotting_position)
        elif kind == DD:
            series[kind] = dd_series(data, report.params, fit_vec)
    lrt = None
    if LRT in feasible:
        try:
            lrt = separability_lrt(data, fitted=report.params)
        except DegenerateTest as e:
            notices.append(f'{LRT}: {e}')
    for notice in notices:
        print_log(f'[{scenario.name}] {notice}', logger='current')
    return ScenarioResult(
        scenario=scenario,
        fit_report=report,
        plot_series=series,
        alignment={k: alignment(v)
                   for k, v in series.items()},
        lrt=lrt,
        notices=notices)


def run_scenario(scenario: Scenario,
                 flipflop_cfg: Optional[FlipFlopConfig] = None,
                 plotting_position: str = NOMINAL) -> ScenarioResult:
    """Draw, fit and diagnose one scenario.

    Raises:
        ScenarioFailed: Any failure, carrying the scenario name and seed.
    """
    try:
        return _diagnose(scenario, flipflop_cfg, plotting_position)
    except Exception as e:
        raise ScenarioFailed(
            f'scenario {scenario.name!r} (seed {scenario.seed}) failed: '
            f'{type(e).__name__}: {e}', scenario.name, scenario.seed) from e


def _suite_task(task: tuple) -> Union[ScenarioResult, ScenarioFailure]:
    scenario, cfg, plotting_position = task
    flipflop_cfg = None if cfg is None else FlipFlopConfig(**cfg)
    try:
        return run_scenario(scenario, flipflop_cfg, plotting_position)
    except ScenarioFailed as e:
        cause = e.__cause__ or e
        print_log(str(e), logger='current', level=logging.ERROR)
        return ScenarioFailure(scenario, type(cause).__name__, str(cause))


def run_suite(scenarios: Sequence[Scenario],
              parallelism: Optional[int] = None,
              flipflop_cfg: Optional[FlipFlopConfig] = None,
              plotting_position: str = NOMINAL,
              progress: bool = False
              ) -> List[Union[ScenarioResult, ScenarioFailure]]:
    """Run every scenario, in parallel when allowed.

    Results keep the input order. A failing scenario yields a
    :class:`ScenarioFailure` in its slot and the suite goes on.
    """
    names = [s.name for s in scenarios]
    duplicated = sorted({n for n in names if names.count(n) > 1})
    if duplicated:
        raise ValueError(f'scenario names must be unique: {duplicated}')
    cfg = None if flipflop_cfg is None else flipflop_cfg.to_dict()
    tasks = [(s, cfg, plotting_position) for s in scenarios]
    return ordered_map(_suite_task, tasks, parallelism, progress=progress)


def scenarios_from_config(cfg_scenarios: Sequence[dict]) -> List[Scenario]:
    """Build scenarios from the ``scenarios`` list of a suite config."""
    return [Scenario.from_dict(dict(s)) for s in cfg_scenarios]
