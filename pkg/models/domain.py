from bisect import bisect_left
from typing import Iterable, Literal, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

# Plain tuples keep the generators allocation-light; the aliases document intent.
Composition = tuple[int, ...]
Partition = tuple[int, ...]


class PartDomain(BaseModel):
    """Allowed part values: a discrete interval [a, b] or an explicit finite set.

    Build one with ``PartDomain.interval(a, b)`` or ``PartDomain.explicit(values)``.
    For explicit sets ``a`` and ``b`` hold the minimum and maximum member.
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "examples": [
                {"kind": "interval", "a": 1, "b": 7, "members": None},
                {"kind": "explicit", "a": 1, "b": 4, "members": [1, 2, 4]},
            ]
        },
    )

    kind: Literal["interval", "explicit"]
    a: int = Field(..., ge=0, description="Smallest allowed part")
    b: int = Field(..., ge=0, description="Largest allowed part")
    members: Optional[tuple[int, ...]] = Field(None, description="Explicit members, strictly increasing")

    @classmethod
    def interval(cls, a: int, b: int) -> "PartDomain":
        return cls(kind="interval", a=a, b=b)

    @classmethod
    def explicit(cls, values: Iterable[int]) -> "PartDomain":
        members = tuple(values)
        if not members:
            raise ValueError("explicit domain must be nonempty")
        return cls(kind="explicit", a=members[0], b=members[-1], members=members)

    @model_validator(mode="after")
    def _check_shape(self) -> "PartDomain":
        if self.kind == "interval":
            if self.members is not None:
                raise ValueError("interval domain takes no explicit members")
            if self.a > self.b:
                raise ValueError(f"empty interval: a={self.a} > b={self.b}")
            return self
        if not self.members:
            raise ValueError("explicit domain must be nonempty")
        if any(x < 0 for x in self.members):
            raise ValueError("parts must be nonnegative")
        if any(x >= y for x, y in zip(self.members, self.members[1:])):
            raise ValueError("explicit members must be strictly increasing")
        if self.a != self.members[0] or self.b != self.members[-1]:
            raise ValueError("a/b must be the min/max of the explicit members")
        return self

    @property
    def is_interval(self) -> bool:
        return self.kind == "interval"

    @property
    def values(self) -> tuple[int, ...]:
        if self.members is not None:
            return self.members
        return tuple(range(self.a, self.b + 1))

    @property
    def size(self) -> int:
        if self.members is not None:
            return len(self.members)
        return self.b - self.a + 1

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int) or isinstance(x, bool):
            return False
        if self.members is None:
            return self.a <= x <= self.b
        i = bisect_left(self.members, x)
        return i < len(self.members) and self.members[i] == x

    def at_least(self, lower: int) -> "PartDomain":
        """Sub-domain {y in domain : y >= lower}; used by the partition recursions."""
        if self.members is None:
            return PartDomain.interval(max(self.a, lower), self.b)
        return PartDomain.explicit(x for x in self.members if x >= lower)

    def __str__(self) -> str:
        if self.members is None:
            return f"[{self.a},{self.b}]"
        return "{" + ",".join(map(str, self.members)) + "}"


class CompositionSpec(BaseModel):
    """One counting/generation instance: compositions of n into k parts from domain."""

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"n": 6, "k": 5, "domain": {"kind": "interval", "a": 1, "b": 3, "members": None}}
        },
    )

    n: int = Field(..., ge=0, description="Target sum")
    k: int = Field(..., ge=0, description="Number of parts")
    domain: PartDomain

    @classmethod
    def of(cls, n: int, k: int, a: int, b: int) -> "CompositionSpec":
        return cls(n=n, k=k, domain=PartDomain.interval(a, b))

    def __str__(self) -> str:
        return f"(n={self.n}, k={self.k}, {self.domain})"


class KRange(BaseModel):
    model_config = ConfigDict(frozen=True)

    k_min: int = Field(..., ge=0)
    k_max: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _ordered(self) -> "KRange":
        if self.k_min > self.k_max:
            raise ValueError(f"k_min={self.k_min} exceeds k_max={self.k_max}")
        return self

    def ks(self) -> range:
        return range(self.k_min, self.k_max + 1)


def is_feasible(spec: CompositionSpec) -> bool:
    """k*min <= n <= k*max. Exact for intervals, only necessary for explicit sets."""
    d = spec.domain
    return spec.k * d.a <= spec.n <= spec.k * d.b


def validate_composition(parts: Sequence[int], spec: CompositionSpec) -> bool:
    try:
        if len(parts) != spec.k:
            return False
        return sum(parts) == spec.n and all(p in spec.domain for p in parts)
    except TypeError:
        return False


def validate_partition(parts: Sequence[int], spec: CompositionSpec) -> bool:
    if not validate_composition(parts, spec):
        return False
    return all(x >= y for x, y in zip(parts, parts[1:]))
