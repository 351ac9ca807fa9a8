"""Streaming generators for restricted compositions and partitions.

Composition algorithms:

* ``naive``     -- expands c_A(n, k) = sum_x c_A(n - x, k - 1) depth first, no pruning
* ``binomial``  -- places i copies of the largest value b, recurses on [a, b - 1]
* ``interval``  -- first part n - i with i in [max{1, n - b}, n - a], as the interval recursion reads
* ``successor`` -- lexicographic successor, one step per emitted composition

Every run is wrapped in a :class:`Generation`, an iterable whose ``stats``
become final when the stream is exhausted or closed.

Node expansions count invocations of the recursive routine, the root call
excluded. The successor generator counts one expansion per emitted
composition. A root that emits directly (k = 0, a single part, or a = b)
counts as one expansion so that a nonempty stream never reports zero.
"""
import logging
import time
from bisect import bisect_right
from collections import Counter
from enum import Enum
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterator, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from models import counting
from models.domain import Composition, CompositionSpec, PartDomain, validate_composition
from models.errors import DomainMismatchError, InvalidCompositionError

log = logging.getLogger(__name__)


class GeneratorKind(str, Enum):
    NAIVE_SUM = "naive"
    BINOMIAL_SPLIT = "binomial"
    INTERVAL_RECURSION = "interval"
    SUCCESSOR = "successor"

    @property
    def needs_interval(self) -> bool:
        return self in (GeneratorKind.BINOMIAL_SPLIT, GeneratorKind.INTERVAL_RECURSION)

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    GeneratorKind.NAIVE_SUM: "(6)",
    GeneratorKind.BINOMIAL_SPLIT: "(10)",
    GeneratorKind.INTERVAL_RECURSION: "(O)",
    GeneratorKind.SUCCESSOR: "(V)",
}


class PartitionKind(str, Enum):
    NAIVE_SUFFIX = "naive"
    BINOMIAL_SPLIT = "binomial"


# Recursive calls reported for n=6, k=5, [1,3] in the original comparison.
# Reference points only; tree conventions differ, the ordering is what holds.
REFERENCE_EXPANSIONS = {
    GeneratorKind.SUCCESSOR: 5,
    GeneratorKind.BINOMIAL_SPLIT: 12,
    GeneratorKind.INTERVAL_RECURSION: 19,
    GeneratorKind.NAIVE_SUM: 41,
}


class GenStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    node_expansions: int = Field(0, ge=0)
    emitted: int = Field(0, ge=0)
    elapsed: float = Field(0.0, ge=0, description="Wall seconds from first pull to exhaustion")
    node_visits: Optional[dict[tuple[int, ...], int]] = Field(
        None, description="How often each recursion node key was expanded (trace runs only)"
    )

    def repeated_nodes(self) -> dict[tuple[int, ...], int]:
        return {key: hits for key, hits in (self.node_visits or {}).items() if hits > 1}

    def to_dict(self):
        return {
            'node_expansions': self.node_expansions,
            'emitted': self.emitted,
            'elapsed': self.elapsed,
            'repeated_nodes': len(self.repeated_nodes()),
        }


class Generation:
    """Single-use stream of compositions or partitions with final statistics."""

    def __init__(self, spec: CompositionSpec, kind: Enum, walker):
        self.spec = spec
        self.kind = kind
        self.stats = GenStats()
        self._walker = walker
        self._started = False

    def __iter__(self) -> Iterator[Composition]:
        if self._started:
            raise RuntimeError("a Generation can only be iterated once")
        self._started = True
        return self._run()

    def _run(self) -> Iterator[Composition]:
        walker = self._walker
        emitted = 0
        start = time.perf_counter()
        try:
            for item in walker.walk():
                emitted += 1
                yield item
        finally:
            elapsed = time.perf_counter() - start
            self.stats = GenStats(
                node_expansions=max(walker.expansions, 1 if emitted else 0),
                emitted=emitted,
                elapsed=elapsed,
                node_visits=dict(walker.visits) if walker.visits is not None else None,
            )

    def drain(self) -> GenStats:
        """Consume the stream without keeping anything; return the stats."""
        for _ in self:
            pass
        return self.stats


# ---------------------------------------------------------------- feasibility

class Feasibility:
    """Whether `remaining` can be written as exactly `parts_left` parts of the domain.

    Interval domains use k*a <= r <= k*b (exact). Explicit sets ask the count
    table, since the min/max bound is only necessary there.
    """

    def __init__(self, domain: PartDomain):
        self.domain = domain
        self._table = None if domain.is_interval else counting.count_table(domain)

    def __call__(self, remaining: int, parts_left: int) -> bool:
        if remaining < 0:
            return False
        if self._table is None:
            return parts_left * self.domain.a <= remaining <= parts_left * self.domain.b
        return self._table.count(remaining, parts_left) > 0


def _fill_least(parts: list, start: int, remaining: int, domain: PartDomain, feasible: Feasibility) -> None:
    """Overwrite parts[start:] with the lexicographically least tail summing to remaining."""
    k = len(parts)
    if domain.is_interval:
        a, b = domain.a, domain.b
        for pos in range(start, k):
            x = max(a, remaining - (k - pos - 1) * b)
            parts[pos] = x
            remaining -= x
        return
    for pos in range(start, k):
        left = k - pos - 1
        for x in domain.values:
            if feasible(remaining - x, left):
                break
        parts[pos] = x
        remaining -= x


def _advance(parts: list, domain: PartDomain, feasible: Feasibility) -> bool:
    """Step parts to its lexicographic successor in place; False at the last one."""
    k = len(parts)
    tail = 0
    if domain.is_interval:
        a, b = domain.a, domain.b
        for j in range(k - 1, -1, -1):
            left = k - j - 1
            budget = parts[j] + tail
            y = max(parts[j] + 1, budget - left * b)
            if y <= b and y <= budget - left * a:
                parts[j] = y
                _fill_least(parts, j + 1, budget - y, domain, feasible)
                return True
            tail = budget
        return False
    values = domain.values
    for j in range(k - 1, -1, -1):
        left = k - j - 1
        budget = parts[j] + tail
        for idx in range(bisect_right(values, parts[j]), len(values)):
            y = values[idx]
            if y > budget:
                break
            if feasible(budget - y, left):
                parts[j] = y
                _fill_least(parts, j + 1, budget - y, domain, feasible)
                return True
        tail = budget
    return False


def first_composition(spec: CompositionSpec) -> Optional[Composition]:
    """Lexicographically least member of C_A(n, k), or None if the set is empty."""
    feasible = Feasibility(spec.domain)
    if not feasible(spec.n, spec.k):
        return None
    parts = [0] * spec.k
    _fill_least(parts, 0, spec.n, spec.domain, feasible)
    return tuple(parts)


def successor(current: Sequence[int], spec: CompositionSpec) -> Optional[Composition]:
    """Next member of C_A(n, k) in lexicographic order, or None after the last."""
    if not validate_composition(current, spec):
        raise InvalidCompositionError(f"{tuple(current)} is not a composition of {spec}")
    parts = list(current)
    if _advance(parts, spec.domain, Feasibility(spec.domain)):
        return tuple(parts)
    return None


# ---------------------------------------------------------------- composition walkers

class _Walker:
    def __init__(self, spec: CompositionSpec, trace: bool):
        self.spec = spec
        self.expansions = 0
        self.visits: Optional[Counter] = Counter() if trace else None


class _NaiveSum(_Walker):
    def walk(self):
        self._values = self.spec.domain.values
        return self._expand(self.spec.n, self.spec.k, [])

    def _expand(self, n, k, prefix):
        if k == 0:
            if n == 0:
                yield tuple(prefix)
            return
        visits = self.visits
        for x in self._values:
            if x > n:
                break
            self.expansions += 1
            if visits is not None:
                visits[(n - x, k - 1)] += 1
            prefix.append(x)
            yield from self._expand(n - x, k - 1, prefix)
            prefix.pop()


class _IntervalRecursion(_Walker):
    def walk(self):
        a = self.spec.domain.a
        # The printed bound max{1, n - b} assumes a >= 1; with a = 0 remainders may be 0.
        self._floor = min(1, a)
        return self._expand(self.spec.n, self.spec.k, [])

    def _expand(self, n, k, prefix):
        a, b = self.spec.domain.a, self.spec.domain.b
        if k == 0:
            if n == 0:
                yield ()
            return
        if k == 1:
            if a <= n <= b:
                prefix.append(n)
                yield tuple(prefix)
                prefix.pop()
            return
        visits = self.visits
        for i in range(max(self._floor, n - b), n - a + 1):
            self.expansions += 1
            if visits is not None:
                visits[(i, k - 1)] += 1
            prefix.append(n - i)
            yield from self._expand(i, k - 1, prefix)
            prefix.pop()


class _BinomialSplit(_Walker):
    def walk(self):
        return self._expand(self.spec.n, self.spec.k, self.spec.domain.b)

    def _expand(self, n, k, b):
        a = self.spec.domain.a
        if b == a:
            if n == k * a:
                yield (a,) * k
            return
        visits = self.visits
        for i in range(min(k, n // b) + 1):
            self.expansions += 1
            if visits is not None:
                visits[(n - b * i, k - i, b - 1)] += 1
            for rest in self._expand(n - b * i, k - i, b - 1):
                if i == 0:
                    yield rest
                    continue
                # Subsets in lexicographic order; ascending inserts land on the chosen slots.
                for chosen in combinations(range(k), i):
                    parts = list(rest)
                    for pos in chosen:
                        parts.insert(pos, b)
                    yield tuple(parts)


_TAIL_TABLE_LIMIT = 4096
_MAX_TAIL = 4


@lru_cache(maxsize=64)
def _tail_table(a: int, b: int, width: int) -> dict[int, list[Composition]]:
    """Every `width`-tuple over [a, b], grouped by sum, each group in lexicographic order.

    Cached and shared between walks, so callers must not mutate it.
    """
    table: dict[int, list[Composition]] = {}
    for tail in product(range(a, b + 1), repeat=width):
        table.setdefault(sum(tail), []).append(tail)
    return table


class _Successor(_Walker):
    def walk(self):
        spec = self.spec
        d = spec.domain
        if d.is_interval and spec.k > 0 and d.b - d.a + 1 <= _TAIL_TABLE_LIMIT:
            return self._walk_interval()
        return self._walk_general()

    def _walk_general(self):
        spec = self.spec
        feasible = Feasibility(spec.domain)
        if not feasible(spec.n, spec.k):
            return
        parts = [0] * spec.k
        _fill_least(parts, 0, spec.n, spec.domain, feasible)
        self.expansions += 1
        yield tuple(parts)
        while _advance(parts, spec.domain, feasible):
            self.expansions += 1
            yield tuple(parts)

    def _walk_interval(self):
        """Successor steps on parts[:m]; the last k - m parts come from the tail table.

        Concatenating a prefix with its remainder's tails in table order is the
        same run of successor steps, without touching the prefix in between.
        """
        n, k = self.spec.n, self.spec.k
        a, b = self.spec.domain.a, self.spec.domain.b
        if not k * a <= n <= k * b:
            return
        width = 1
        while width < min(k, _MAX_TAIL) and (b - a + 1) ** (width + 1) <= _TAIL_TABLE_LIMIT:
            width += 1
        tails = _tail_table(a, b, width)
        m = k - width

        parts = [0] * m
        rem = n
        for pos in range(m):
            x = max(a, rem - (k - pos - 1) * b)
            parts[pos] = x
            rem -= x

        while True:
            prefix = tuple(parts)
            block = tails[rem]
            self.expansions += len(block)
            for tail in block:
                yield prefix + tail

            # advance the prefix; `rem` is the sum held by the tail
            tail_sum = rem
            for j in range(m - 1, -1, -1):
                left = k - j - 1
                budget = parts[j] + tail_sum
                y = max(parts[j] + 1, budget - left * b)
                if y <= b and y <= budget - left * a:
                    parts[j] = y
                    rem = budget - y
                    for pos in range(j + 1, m):
                        x = max(a, rem - (k - pos - 1) * b)
                        parts[pos] = x
                        rem -= x
                    break
                tail_sum = budget
            else:
                return


_WALKERS: dict[GeneratorKind, Callable[..., _Walker]] = {
    GeneratorKind.NAIVE_SUM: _NaiveSum,
    GeneratorKind.BINOMIAL_SPLIT: _BinomialSplit,
    GeneratorKind.INTERVAL_RECURSION: _IntervalRecursion,
    GeneratorKind.SUCCESSOR: _Successor,
}


def _require_interval(spec: CompositionSpec, kind: Enum) -> None:
    if not spec.domain.is_interval:
        log.warning("%s generator rejected explicit domain %s", kind.value, spec.domain)
        raise DomainMismatchError(f"{kind.value} generation needs an interval domain, got {spec.domain}")


def generate(spec: CompositionSpec, kind: GeneratorKind | str = GeneratorKind.SUCCESSOR,
             trace: bool = False) -> Generation:
    """Stream every member of C_A(n, k) exactly once.

    An infeasible spec gives an empty stream. ``binomial`` and ``interval``
    raise DomainMismatchError on explicit-set domains.
    """
    kind = GeneratorKind(kind)
    if kind.needs_interval:
        _require_interval(spec, kind)
    return Generation(spec, kind, _WALKERS[kind](spec, trace))


# ---------------------------------------------------------------- partition walkers

class _NaiveSuffix(_Walker):
    """Smallest part x first, then partitions of n - x over {y in A : y >= x}."""

    def walk(self):
        self._values = self.spec.domain.values
        return self._expand(self.spec.n, self.spec.k, 0)

    def _expand(self, n, k, start):
        if k == 0:
            if n == 0:
                yield ()
            return
        values = self._values
        visits = self.visits
        for j in range(start, len(values)):
            x = values[j]
            if x > n:
                break
            self.expansions += 1
            if visits is not None:
                visits[(n - x, k - 1, x)] += 1
            for rest in self._expand(n - x, k - 1, j):
                yield rest + (x,)


class _PartitionBinomialSplit(_Walker):
    """i copies of the largest value b up front, then partitions over [a, b - 1]."""

    def walk(self):
        return self._expand(self.spec.n, self.spec.k, self.spec.domain.b)

    def _expand(self, n, k, b):
        a = self.spec.domain.a
        if b == a:
            if n == k * a:
                yield (a,) * k
            return
        visits = self.visits
        for i in range(min(k, n // b) + 1):
            self.expansions += 1
            if visits is not None:
                visits[(n - b * i, k - i, b - 1)] += 1
            head = (b,) * i
            for rest in self._expand(n - b * i, k - i, b - 1):
                yield head + rest


_PARTITION_WALKERS = {
    PartitionKind.NAIVE_SUFFIX: _NaiveSuffix,
    PartitionKind.BINOMIAL_SPLIT: _PartitionBinomialSplit,
}


def generate_partitions(spec: CompositionSpec, kind: PartitionKind | str = PartitionKind.BINOMIAL_SPLIT,
                        trace: bool = False) -> Generation:
    """Stream every member of P_A(n, k) once, parts weakly decreasing."""
    kind = PartitionKind(kind)
    if kind is PartitionKind.BINOMIAL_SPLIT:
        _require_interval(spec, kind)
    return Generation(spec, kind, _PARTITION_WALKERS[kind](spec, trace))


def expansion_report(spec: CompositionSpec) -> list[dict]:
    """Node expansions of each composition algorithm on one instance."""
    report = []
    for kind in GeneratorKind:
        stats = generate(spec, kind).drain()
        report.append({
            'algorithm': kind.value,
            'label': kind.label,
            'node_expansions': stats.node_expansions,
            'emitted': stats.emitted,
            'reference': REFERENCE_EXPANSIONS[kind] if spec == _REFERENCE_SPEC else None,
        })
    return report


_REFERENCE_SPEC = CompositionSpec.of(6, 5, 1, 3)
