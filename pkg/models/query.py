"""Request model shared by the CLI flags and the HTTP query parameters."""
from itertools import chain, islice
from typing import Iterator, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from models import counting
from models.domain import Composition, CompositionSpec, KRange, PartDomain
from models.errors import DivergentCountError, QueryError
from models.generation import (Generation, GeneratorKind, PartitionKind, generate,
                               generate_partitions)


def parse_value_list(text: str) -> list[int]:
    """'4,1,2' -> [1, 2, 4]."""
    try:
        values = sorted({int(item) for item in text.split(",") if item.strip()})
    except ValueError:
        raise QueryError(f"--set expects comma-separated integers, got {text!r}")
    if not values:
        raise QueryError("--set needs at least one value")
    return values


class CompositionQuery(BaseModel):
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"n": 6, "k": 5, "a": 1, "b": 3, "objects": "compositions", "algo": "successor"}
        },
    )

    n: Optional[int] = Field(None, ge=0)
    k: Optional[int] = Field(None, ge=0)
    kmin: Optional[int] = Field(None, ge=0)
    kmax: Optional[int] = Field(None, ge=0)
    a: Optional[int] = Field(None, ge=0, description="--min")
    b: Optional[int] = Field(None, ge=0, description="--max")
    values: Optional[list[int]] = Field(None, description="--set")
    objects: Literal["compositions", "partitions"] = "compositions"
    method: Optional[Literal["interval", "binomial", "set"]] = None
    algo: Optional[GeneratorKind] = None

    # ---------------------------------------------------------------- parsing

    def domain(self) -> PartDomain:
        has_interval = self.a is not None or self.b is not None
        if has_interval and self.values is not None:
            raise QueryError("give either --min/--max or --set, not both")
        if self.values is not None:
            return PartDomain.explicit(self.values)
        if self.a is None or self.b is None:
            raise QueryError("part domain needs both --min and --max (or --set)")
        return PartDomain.interval(self.a, self.b)

    def k_range(self) -> Optional[KRange]:
        """None means every k >= 1."""
        ranged = self.kmin is not None or self.kmax is not None
        if self.k is not None and ranged:
            raise QueryError("give either --k or --kmin/--kmax, not both")
        if self.k is not None:
            return KRange(k_min=self.k, k_max=self.k)
        if ranged:
            if self.kmin is None or self.kmax is None:
                raise QueryError("a k range needs both --kmin and --kmax")
            return KRange(k_min=self.kmin, k_max=self.kmax)
        return None

    def _target(self) -> int:
        if self.n is None:
            raise QueryError("--n is required")
        return self.n

    def _method(self, domain: PartDomain) -> str:
        method = self.method or ("interval" if domain.is_interval else "set")
        if not domain.is_interval and method != "set":
            raise QueryError(f"--method {method} needs --min/--max, not --set")
        return method

    def spec(self) -> CompositionSpec:
        """The single (n, k, A) instance; k ranges are rejected."""
        kr = self.k_range()
        if kr is None or kr.k_min != kr.k_max:
            raise QueryError("this operation needs a single --k")
        return CompositionSpec(n=self._target(), k=kr.k_min, domain=self.domain())

    # ---------------------------------------------------------------- counting

    def count(self) -> int:
        n = self._target()
        domain = self.domain()
        kr = self.k_range()
        method = self._method(domain)
        if kr is None:
            return self._count_any(n, domain, method)
        return sum(self._count_fixed(n, k, domain, method) for k in kr.ks())

    def _count_fixed(self, n: int, k: int, domain: PartDomain, method: str) -> int:
        if self.objects == "compositions":
            if method == "binomial":
                return counting.count_fixed_k_binomial(n, k, domain.a, domain.b)
            return counting.count_fixed_k(n, k, domain)
        if method == "binomial":
            return counting.count_partitions_binomial(n, k, domain.a, domain.b)
        if method == "set":
            return counting.count_partitions_set(n, k, domain)
        return counting.count_partitions_fixed_k(n, k, domain.a, domain.b)

    def _count_any(self, n: int, domain: PartDomain, method: str) -> int:
        if method == "binomial":
            raise QueryError("--method binomial needs --k or --kmin/--kmax")
        if self.objects == "compositions":
            return counting.count_any_k(n, domain)
        if method == "interval":
            return counting.count_partitions_any_k(n, domain.a, domain.b)
        if domain.a == 0:
            raise DivergentCountError(f"0 is in {domain}: infinitely many partitions of {n}")
        return sum(counting.count_partitions_set(n, k, domain) for k in range(1, n // domain.a + 1))

    # ---------------------------------------------------------------- generation

    def generator_name(self, domain: PartDomain) -> str:
        if self.algo is not None:
            return self.algo.value
        if self.objects == "compositions":
            return GeneratorKind.SUCCESSOR.value
        return PartitionKind.BINOMIAL_SPLIT.value if domain.is_interval else PartitionKind.NAIVE_SUFFIX.value

    def generations(self) -> list[Generation]:
        """One Generation per k in the requested range; nothing runs until iterated."""
        n = self._target()
        domain = self.domain()
        kr = self.k_range()
        if kr is None:
            raise QueryError("generation needs --k or --kmin/--kmax")
        name = self.generator_name(domain)
        if self.objects == "partitions":
            if name not in {kind.value for kind in PartitionKind}:
                raise QueryError(f"--algo {name} does not generate partitions; use naive or binomial")
            return [generate_partitions(CompositionSpec(n=n, k=k, domain=domain), name) for k in kr.ks()]
        return [generate(CompositionSpec(n=n, k=k, domain=domain), name) for k in kr.ks()]

    def stream(self, limit: Optional[int] = None) -> Iterator[Composition]:
        if limit is not None and limit < 0:
            raise QueryError(f"--limit must be nonnegative, got {limit}")
        items = chain.from_iterable(self.generations())
        return items if limit is None else islice(items, limit)
