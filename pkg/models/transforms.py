"""Shift bijection and the k-range / quadruple wrappers.

The wrappers only loop over parameter values and delegate to a generator;
they add no algorithmic content of their own.
"""
from itertools import chain
from typing import Iterator, Sequence

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt

from models.domain import Composition, CompositionSpec, KRange, PartDomain
from models.errors import ShiftError
from models.generation import (GeneratorKind, PartitionKind, generate,
                               generate_partitions)


class QuadrupleSpec(BaseModel):
    """Sets of sums N, part counts K, lower bounds A and upper bounds B."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"N": [3], "K": [2], "A": [1, 2], "B": [2]}},
    )

    N: frozenset[NonNegativeInt] = Field(..., min_length=1)
    K: frozenset[NonNegativeInt] = Field(..., min_length=1)
    A: frozenset[NonNegativeInt] = Field(..., min_length=1)
    B: frozenset[NonNegativeInt] = Field(..., min_length=1)


def shift_down(spec: CompositionSpec) -> tuple[CompositionSpec, int]:
    """C_[a,b](n, k) -> C_[0,b-a](n - k*a, k); returns the reduced spec and the offset a."""
    d = spec.domain
    if not d.is_interval:
        raise ShiftError(f"shift needs an interval domain, got {d}")
    target = spec.n - spec.k * d.a
    if target < 0:
        raise ShiftError(f"n={spec.n} < k*a={spec.k * d.a}: nothing to shift")
    reduced = CompositionSpec(n=target, k=spec.k, domain=PartDomain.interval(0, d.b - d.a))
    return reduced, d.a


def shift_up(parts: Sequence[int], offset: int) -> Composition:
    """Add offset to every part. Order of parts is untouched, so partitions stay partitions."""
    if offset < 0:
        raise ShiftError(f"offset must be nonnegative, got {offset}")
    return tuple(p + offset for p in parts)


def generate_shifted(spec: CompositionSpec, kind: GeneratorKind | str = GeneratorKind.SUCCESSOR) -> Iterator[Composition]:
    """Generate on the [0, b-a] instance and shift every output back up by a."""
    if spec.domain.is_interval and spec.n < spec.k * spec.domain.a:
        return
    reduced, offset = shift_down(spec)
    for parts in generate(reduced, kind):
        yield shift_up(parts, offset)


def generate_k_range(n: int, kr: KRange, domain: PartDomain,
                     kind: GeneratorKind | str = GeneratorKind.SUCCESSOR) -> Iterator[Composition]:
    """generate(n, k, domain) for k = k_min .. k_max, one after the other."""
    return chain.from_iterable(
        generate(CompositionSpec(n=n, k=k, domain=domain), kind) for k in kr.ks()
    )


def generate_partitions_k_range(n: int, kr: KRange, domain: PartDomain,
                                kind: PartitionKind | str = PartitionKind.BINOMIAL_SPLIT) -> Iterator[Composition]:
    return chain.from_iterable(
        generate_partitions(CompositionSpec(n=n, k=k, domain=domain), kind) for k in kr.ks()
    )


def generate_quadruple(q: QuadrupleSpec, kind: GeneratorKind | str = GeneratorKind.SUCCESSOR
                       ) -> Iterator[tuple[int, int, int, int, Composition]]:
    for n in sorted(q.N):
        for k in sorted(q.K):
            for a in sorted(q.A):
                for b in sorted(q.B):
                    if a > b:
                        continue
                    for parts in generate(CompositionSpec.of(n, k, a, b), kind):
                        yield n, k, a, b, parts
