"""Timing harness for the four composition generators.

Cells run one after another on the calling thread. Each cell builds its
count outside the timed region, discards ``warmup`` runs, then times
``repetitions`` full enumerations whose outputs are consumed and dropped.
"""
import csv
import logging
import math
import platform
import statistics
import time
from threading import Lock
from typing import Iterable, Literal, Optional, TextIO

from pydantic import BaseModel, ConfigDict, Field, model_validator

from models import counting
from models.domain import CompositionSpec, PartDomain
from models.errors import BenchBusyError, BenchError
from models.generation import GeneratorKind, generate

log = logging.getLogger(__name__)

CSV_HEADER = ["algorithm", "n", "k", "a", "b", "count", "node_expansions", "seconds_mean", "seconds_stddev"]

DEFAULT_CELL_TIMEOUT = 120.0
# A timed-out cell reports this in seconds_mean and carries timed_out=True.
TIMEOUT_SENTINEL = math.inf
_DEADLINE_CHECK_EVERY = 4096

# Seconds measured in the original environment (2.4 GHz machine, another
# Python build). Documentation only: never compared against.
REFERENCE_SECONDS = {
    (22, 11): {"successor": 0.89, "binomial": 1.42, "interval": 3.68, "naive": 6.29},
    (22, 16): {"successor": 0.10, "binomial": 0.27, "interval": 6.53, "naive": 6.15},
}
REFERENCE_RATIO_K16 = 65.3

_running = Lock()


class KRule(BaseModel):
    """How k is picked for each n: n/2, a fixed k, or a sweep."""

    model_config = ConfigDict(frozen=True)

    rule: Literal["half_n", "fixed", "sweep"]
    k: Optional[int] = Field(None, ge=0)
    k_min: Optional[int] = Field(None, ge=0)
    k_max: Optional[int] = Field(None, ge=0)

    @model_validator(mode="after")
    def _complete(self) -> "KRule":
        if self.rule == "fixed" and self.k is None:
            raise ValueError("fixed k rule needs k")
        if self.rule == "sweep":
            if self.k_min is None or self.k_max is None:
                raise ValueError("sweep k rule needs k_min and k_max")
            if self.k_min > self.k_max:
                raise ValueError(f"k_min={self.k_min} exceeds k_max={self.k_max}")
        return self

    def ks_for(self, n: int) -> list[int]:
        if self.rule == "half_n":
            return [n // 2]
        if self.rule == "fixed":
            return [self.k]
        return list(range(self.k_min, self.k_max + 1))


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "preset": "custom", "n_values": [6], "k_rule": {"rule": "fixed", "k": 5},
                "a": 1, "b": 3, "algorithms": ["naive", "binomial", "interval", "successor"],
                "repetitions": 1, "warmup": 0,
            }
        },
    )

    preset: Literal["fig1", "fig2", "fig3", "custom"] = "custom"
    n_values: list[int] = Field(..., min_length=1)
    k_rule: KRule
    a: int = Field(1, ge=0)
    b: int = Field(7, ge=0)
    algorithms: list[GeneratorKind] = Field(default_factory=lambda: list(GeneratorKind), min_length=1)
    repetitions: int = Field(10, gt=0)
    warmup: int = Field(2, ge=0)
    cell_timeout: float = Field(DEFAULT_CELL_TIMEOUT, gt=0)

    @model_validator(mode="after")
    def _check(self) -> "ExperimentConfig":
        if self.a > self.b:
            raise ValueError(f"empty interval: a={self.a} > b={self.b}")
        if any(n < 0 for n in self.n_values):
            raise ValueError("n values must be nonnegative")
        return self

    @classmethod
    def preset_config(cls, name: str, **overrides) -> "ExperimentConfig":
        """Configs for the three published experiments, all over [1, 7]."""
        presets = {
            "fig1": dict(n_values=list(range(10, 23, 2)), k_rule=KRule(rule="half_n")),
            "fig2": dict(n_values=[22], k_rule=KRule(rule="sweep", k_min=2, k_max=22)),
            "fig3": dict(n_values=[22], k_rule=KRule(rule="sweep", k_min=4, k_max=20),
                         algorithms=[GeneratorKind.INTERVAL_RECURSION, GeneratorKind.SUCCESSOR]),
        }
        if name not in presets:
            raise BenchError(f"unknown preset {name!r}; choose one of {', '.join(presets)}")
        fields = dict(preset=name, a=1, b=7, **presets[name])
        fields.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**fields)


class ExperimentRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    algorithm: str
    n: int
    k: int
    a: int
    b: int
    count: int
    node_expansions: int
    seconds: float = Field(..., ge=0)
    seconds_stddev: float = Field(0.0, ge=0)
    timed_out: bool = False

    def csv_fields(self) -> list[str]:
        return [self.algorithm, str(self.n), str(self.k), str(self.a), str(self.b), str(self.count),
                str(self.node_expansions), format(self.seconds, ".6g"), format(self.seconds_stddev, ".6g")]

    def to_dict(self):
        return {
            'algorithm': self.algorithm,
            'n': self.n,
            'k': self.k,
            'a': self.a,
            'b': self.b,
            'count': str(self.count),
            'node_expansions': self.node_expansions,
            'seconds_mean': None if self.timed_out else self.seconds,
            'seconds_stddev': self.seconds_stddev,
            'timed_out': self.timed_out,
        }


def _consume(generation, deadline: float) -> bool:
    """Drain the stream; True if the deadline passed first."""
    stream = iter(generation)
    try:
        for i, _ in enumerate(stream, 1):
            if not i % _DEADLINE_CHECK_EVERY and time.perf_counter() > deadline:
                return True
    finally:
        stream.close()
    return time.perf_counter() > deadline


def _run_cell(kind: GeneratorKind, spec: CompositionSpec, config: ExperimentConfig) -> ExperimentRow:
    d = spec.domain
    count = counting.count_fixed_k(spec.n, spec.k, d)
    base = dict(algorithm=kind.value, n=spec.n, k=spec.k, a=d.a, b=d.b, count=count)

    samples = []
    expansions = set()
    for rep in range(config.warmup + config.repetitions):
        generation = generate(spec, kind)
        start = time.perf_counter()
        timed_out = _consume(generation, start + config.cell_timeout)
        elapsed = time.perf_counter() - start
        if timed_out:
            log.warning("%s %s timed out after %.1fs", kind.value, spec, elapsed)
            return ExperimentRow(**base, node_expansions=generation.stats.node_expansions,
                                 seconds=TIMEOUT_SENTINEL, timed_out=True)
        if generation.stats.emitted != count:
            raise BenchError(f"{kind.value} emitted {generation.stats.emitted} for {spec}, expected {count}")
        if rep >= config.warmup:
            samples.append(elapsed)
            expansions.add(generation.stats.node_expansions)

    if len(expansions) != 1:
        raise BenchError(f"{kind.value} expansions vary across repetitions on {spec}: {sorted(expansions)}")
    mean = statistics.fmean(samples)
    stddev = statistics.stdev(samples) if len(samples) > 1 else 0.0
    log.info("%-9s %s count=%d expansions=%d mean=%.6gs", kind.value, spec, count, expansions.pop(), mean)
    return ExperimentRow(**base, node_expansions=generation.stats.node_expansions,
                         seconds=mean, seconds_stddev=stddev)


def run_experiment(config: ExperimentConfig) -> list[ExperimentRow]:
    """One row per (algorithm, n, k) cell, in that order."""
    if not _running.acquire(blocking=False):
        raise BenchBusyError("another benchmark is already running in this process")
    try:
        domain = PartDomain.interval(config.a, config.b)
        rows = []
        for kind in config.algorithms:
            for n in config.n_values:
                for k in config.k_rule.ks_for(n):
                    spec = CompositionSpec(n=n, k=k, domain=domain)
                    rows.append(_run_cell(kind, spec, config))
        return rows
    finally:
        _running.release()


def summarize_ratio(rows: Iterable[ExperimentRow],
                    numerator: GeneratorKind = GeneratorKind.INTERVAL_RECURSION,
                    denominator: GeneratorKind = GeneratorKind.SUCCESSOR) -> list[tuple[int, float]]:
    """Mean-seconds ratio numerator/denominator per k, ascending k."""
    series: dict[str, dict[int, list[float]]] = {numerator.value: {}, denominator.value: {}}
    for row in rows:
        if row.algorithm in series:
            series[row.algorithm].setdefault(row.k, []).append(row.seconds)
    top, bottom = series[numerator.value], series[denominator.value]
    missing = set(top) ^ set(bottom)
    if missing or not top:
        raise BenchError(f"ratio needs both {numerator.value} and {denominator.value} "
                         f"for every k; unmatched k: {sorted(missing)}")
    ratios = []
    for k in sorted(top):
        num, den = statistics.fmean(top[k]), statistics.fmean(bottom[k])
        if num == den:
            ratios.append((k, 1.0))
        elif den == 0:
            ratios.append((k, math.inf))
        else:
            ratios.append((k, num / den))
    return ratios


def environment_description() -> str:
    cpu = platform.processor() or platform.machine() or "unknown cpu"
    return f"{cpu}; {platform.platform()}; Python {platform.python_version()}"


def write_csv(rows: Iterable[ExperimentRow], out: TextIO, environment: Optional[str] = None) -> None:
    if environment is not None:
        out.write(f"# environment: {environment}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())
