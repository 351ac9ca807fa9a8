"""Oracle sweep: every generator and counter against brute force on a grid of instances."""
import logging
from typing import Optional

from pydantic import BaseModel, Field

from models import counting, generation, oracle
from models.domain import CompositionSpec, PartDomain

log = logging.getLogger(__name__)


class VerificationReport(BaseModel):
    passed: bool
    instances: int = Field(..., ge=0)
    checks: int = Field(..., ge=0)
    failure: Optional[str] = None

    def to_dict(self):
        return {
            'passed': self.passed,
            'instances': self.instances,
            'checks': self.checks,
            'failure': self.failure,
        }

    def summary(self) -> str:
        if self.passed:
            return f"PASS {self.instances} instances, {self.checks} checks"
        return f"FAIL at {self.failure}"


class _Mismatch(Exception):
    pass


def _expect(actual, expected, what: str, spec: CompositionSpec) -> None:
    if actual != expected:
        raise _Mismatch(f"{spec}: {what} gave {actual!r}, expected {expected!r}")


def _check_instance(spec: CompositionSpec, truth: list) -> int:
    n, k, d = spec.n, spec.k, spec.domain
    a, b = d.a, d.b
    checks = 0
    for kind in generation.GeneratorKind:
        _expect(sorted(generation.generate(spec, kind)), truth, f"{kind.value} generator", spec)
        checks += 1

    expected = len(truth)
    _expect(counting.count_fixed_k(n, k, d), expected, "count_fixed_k", spec)
    _expect(counting.count_fixed_k_binomial(n, k, a, b), expected, "count_fixed_k_binomial", spec)
    checks += 2
    if n >= k * a:
        _expect(counting.count_fixed_k(n - k * a, k, PartDomain.interval(0, b - a)), expected,
                "shifted count", spec)
        checks += 1

    partitions = [t for t in truth if all(x >= y for x, y in zip(t, t[1:]))]
    for kind in generation.PartitionKind:
        _expect(sorted(generation.generate_partitions(spec, kind)), partitions,
                f"{kind.value} partition generator", spec)
        checks += 1
    expected = len(partitions)
    _expect(counting.count_partitions_fixed_k(n, k, a, b), expected, "count_partitions_fixed_k", spec)
    _expect(counting.count_partitions_binomial(n, k, a, b), expected, "count_partitions_binomial", spec)
    _expect(counting.count_partitions_set(n, k, d), expected, "count_partitions_set", spec)
    return checks + 3


def run_verification(nmax: int = 12, kmax: int = 6, bmax: int = 5) -> VerificationReport:
    """Sweep every (n, k, a, b) with n <= nmax, k <= kmax, 0 <= a <= b <= bmax."""
    for name, value in (("nmax", nmax), ("kmax", kmax), ("bmax", bmax)):
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")
    instances = checks = 0
    try:
        for k in range(kmax + 1):
            for b in range(bmax + 1):
                for a in range(b + 1):
                    domain = PartDomain.interval(a, b)
                    by_sum = oracle.brute_compositions_by_sum(k, domain)
                    for n in range(nmax + 1):
                        spec = CompositionSpec(n=n, k=k, domain=domain)
                        checks += _check_instance(spec, by_sum.get(n, []))
                        instances += 1
    except _Mismatch as exc:
        log.error("verification failed: %s", exc)
        return VerificationReport(passed=False, instances=instances, checks=checks, failure=str(exc))
    return VerificationReport(passed=True, instances=instances, checks=checks)
