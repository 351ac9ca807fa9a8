"""Memoized counting recursions for restricted compositions and partitions.

Every count is an exact Python int. Tables are created once per domain (or
per lower bound for the binomial tables) and reused across queries; entries
are only ever added, never rewritten.
"""
import logging
from math import comb
from threading import Lock

from models.domain import KRange, PartDomain
from models.errors import DivergentCountError

log = logging.getLogger(__name__)


class CountTable:
    """c_A(n, k) = sum over x in A of c_A(n - x, k - 1), with c_A(0, 0) = 1."""

    def __init__(self, domain: PartDomain):
        self.domain = domain
        self.memo: dict[tuple[int, int], int] = {}
        self.any_memo: dict[int, int] = {}
        self._values = domain.values

    def count(self, n: int, k: int) -> int:
        key = (n, k)
        if key in self.memo:
            return self.memo[key]
        a, b = self.domain.a, self.domain.b
        if n < 0 or not k * a <= n <= k * b:
            return 0
        # Bottom-up over the number of parts. Level j only needs remainders
        # that the k - j parts still to be placed can leave behind.
        memo = self.memo
        for j in range(k + 1):
            lo = max(0, n - (k - j) * b)
            hi = n - (k - j) * a
            for m in range(lo, hi + 1):
                if (m, j) in memo:
                    continue
                if j == 0:
                    memo[(m, j)] = 1 if m == 0 else 0
                    continue
                total = 0
                for x in self._values:
                    if x > m:
                        break
                    total += memo[(m - x, j - 1)]
                memo[(m, j)] = total
        return memo[key]

    def count_any(self, n: int) -> int:
        """Compositions of n with any number k >= 1 of parts."""
        if self.domain.a == 0:
            raise DivergentCountError(f"0 is in {self.domain}: infinitely many compositions of {n}")
        if n == 0:
            return 0
        memo = self.any_memo
        if n in memo:
            return memo[n]
        if self.domain.is_interval:
            a, b = self.domain.a, self.domain.b
            for m in range(1, n + 1):
                if m in memo:
                    continue
                # I(a <= m <= b) is the single-part composition; i is what the first part leaves.
                total = 1 if a <= m <= b else 0
                for i in range(max(1, m - b), m - a + 1):
                    total += memo[i]
                memo[m] = total
            return memo[n]
        # Set form: memo[0] = 1 stands for the empty composition.
        memo.setdefault(0, 1)
        for m in range(1, n + 1):
            if m not in memo:
                memo[m] = sum(memo[m - x] for x in self._values if x <= m)
        return memo[n]


class BinomialTable:
    """Recursions on the multiplicity i of the largest allowed value b.

    c_[a,b](n, k) = sum_i C(k, i) c_[a,b-1](n - b*i, k - i)
    p_[a,b](n, k) = sum_i p_[a,b-1](n - b*i, k - i)
    """

    def __init__(self, a: int):
        self.a = a
        self.compositions: dict[tuple[int, int, int], int] = {}
        self.partitions: dict[tuple[int, int, int], int] = {}

    def count_compositions(self, n: int, k: int, b: int) -> int:
        a = self.a
        if b == a:
            return 1 if n == k * a else 0
        if not k * a <= n <= k * b:
            return 0
        key = (n, k, b)
        if key in self.compositions:
            return self.compositions[key]
        total = 0
        for i in range(k + 1):
            rest = n - b * i
            if rest < (k - i) * a:
                break
            total += comb(k, i) * self.count_compositions(rest, k - i, b - 1)
        self.compositions[key] = total
        return total

    def count_partitions(self, n: int, k: int, b: int) -> int:
        a = self.a
        if b == a:
            return 1 if n == k * a else 0
        if not k * a <= n <= k * b:
            return 0
        key = (n, k, b)
        if key in self.partitions:
            return self.partitions[key]
        total = 0
        for i in range(min(k, n // b) + 1):
            total += self.count_partitions(n - b * i, k - i, b - 1)
        self.partitions[key] = total
        return total


class PartitionCountTable:
    """p(n, k, lower) over [lower, upper]; the smallest part x raises the lower bound.

    p(n, k, lo) = sum_{x=lo}^{min(upper, n // k)} p(n - x, k - 1, x), p(0, 0, .) = 1.
    """

    def __init__(self, upper: int):
        self.upper = upper
        self.memo: dict[tuple[int, int, int], int] = {}
        self.any_memo: dict[tuple[int, int], int] = {}

    def count(self, n: int, k: int, lower: int) -> int:
        if k == 0:
            return 1 if n == 0 else 0
        key = (n, k, lower)
        memo = self.memo
        if key in memo:
            return memo[key]
        upper = self.upper
        if lower > upper or not k * lower <= n <= k * upper:
            return 0
        # Bottom-up over j, the parts still to place. The k - j parts already
        # placed lie in [lower, upper], which bounds the remainder m.
        for j in range(1, k + 1):
            m_lo = max(0, n - (k - j) * upper)
            m_hi = n - (k - j) * lower
            for lo in range(lower, min(upper, m_hi // j) + 1):
                for m in range(max(m_lo, j * lo), min(m_hi, j * upper) + 1):
                    if (m, j, lo) in memo:
                        continue
                    if j == 1:
                        memo[(m, j, lo)] = 1
                        continue
                    total = 0
                    for x in range(lo, min(upper, m // j) + 1):
                        total += memo.get((m - x, j - 1, x), 0)
                    memo[(m, j, lo)] = total
        return memo[key]

    def count_any(self, n: int, lower: int) -> int:
        """p(n, lo) = I(lo <= n <= upper) + sum_{x=lo}^{min(upper, n-1)} p(n - x, x)."""
        memo = self.any_memo
        if (n, lower) in memo:
            return memo[(n, lower)]
        # Ascending m: every term on the right has a strictly smaller sum.
        for m in range(1, n + 1):
            for lo in range(self.upper, lower - 1, -1):
                if (m, lo) in memo:
                    continue
                total = 1 if lo <= m <= self.upper else 0
                for x in range(lo, min(self.upper, m - 1) + 1):
                    if m - x >= x:
                        total += memo[(m - x, x)]
                memo[(m, lo)] = total
        return memo.get((n, lower), 0)


class SetPartitionCountTable:
    """p_A(n, k) = sum over x in A of p_{A_x}(n - x, k - 1), A_x = {y in A : y >= x}.

    The moving sub-domain A_x is keyed by its starting index into the sorted members.
    """

    def __init__(self, domain: PartDomain):
        self.domain = domain
        self.memo: dict[tuple[int, int, int], int] = {}
        self._values = domain.values

    def count(self, n: int, k: int, start: int = 0) -> int:
        if k == 0:
            return 1 if n == 0 else 0
        key = (n, k, start)
        memo = self.memo
        if key in memo:
            return memo[key]
        values = self._values
        if start >= len(values):
            return 0
        low, high = values[start], values[-1]
        if not k * low <= n <= k * high:
            return 0
        members = set(values)
        # Bottom-up over j, the parts still to place, as in PartitionCountTable.
        for j in range(1, k + 1):
            m_lo = max(0, n - (k - j) * high)
            m_hi = n - (k - j) * low
            for idx in range(start, len(values)):
                smallest = values[idx]
                if j * smallest > m_hi:
                    break
                for m in range(max(m_lo, j * smallest), min(m_hi, j * high) + 1):
                    if (m, j, idx) in memo:
                        continue
                    if j == 1:
                        memo[(m, j, idx)] = 1 if m in members else 0
                        continue
                    total = 0
                    for i in range(idx, len(values)):
                        x = values[i]
                        if j * x > m:
                            break
                        total += memo.get((m - x, j - 1, i), 0)
                    memo[(m, j, idx)] = total
        return memo[key]


_lock = Lock()
_count_tables: dict[PartDomain, CountTable] = {}
_binomial_tables: dict[int, BinomialTable] = {}
_partition_tables: dict[int, PartitionCountTable] = {}
_set_partition_tables: dict[PartDomain, SetPartitionCountTable] = {}


def _registered(registry, key, factory):
    table = registry.get(key)
    if table is None:
        with _lock:
            table = registry.get(key)
            if table is None:
                log.debug("new %s for %s", factory.__name__, key)
                table = registry[key] = factory(key)
    return table


def count_table(domain: PartDomain) -> CountTable:
    return _registered(_count_tables, domain, CountTable)


def clear_tables() -> None:
    """Drop every cached table (benchmarks and tests start from a cold cache)."""
    with _lock:
        _count_tables.clear()
        _binomial_tables.clear()
        _partition_tables.clear()
        _set_partition_tables.clear()


def _nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


def _interval(a: int, b: int) -> None:
    _nonnegative(a=a, b=b)
    if a > b:
        raise ValueError(f"empty interval: a={a} > b={b}")


def count_fixed_k(n: int, k: int, domain: PartDomain) -> int:
    _nonnegative(n=n, k=k)
    return count_table(domain).count(n, k)


def count_any_k(n: int, domain: PartDomain) -> int:
    _nonnegative(n=n)
    return count_table(domain).count_any(n)


def count_k_range(n: int, kr: KRange, domain: PartDomain) -> int:
    _nonnegative(n=n)
    table = count_table(domain)
    return sum(table.count(n, k) for k in kr.ks())


def count_fixed_k_binomial(n: int, k: int, a: int, b: int) -> int:
    _nonnegative(n=n, k=k)
    _interval(a, b)
    return _registered(_binomial_tables, a, BinomialTable).count_compositions(n, k, b)


def count_partitions_fixed_k(n: int, k: int, a: int, b: int) -> int:
    _nonnegative(n=n, k=k)
    _interval(a, b)
    return _registered(_partition_tables, b, PartitionCountTable).count(n, k, a)


def count_partitions_any_k(n: int, a: int, b: int) -> int:
    _nonnegative(n=n)
    _interval(a, b)
    if a == 0:
        raise DivergentCountError(f"0 is in [{a},{b}]: infinitely many partitions of {n}")
    if n == 0:
        return 0
    return _registered(_partition_tables, b, PartitionCountTable).count_any(n, a)


def count_partitions_k_range(n: int, kr: KRange, a: int, b: int) -> int:
    return sum(count_partitions_fixed_k(n, k, a, b) for k in kr.ks())


def count_partitions_set(n: int, k: int, domain: PartDomain) -> int:
    _nonnegative(n=n, k=k)
    return _registered(_set_partition_tables, domain, SetPartitionCountTable).count(n, k)


def count_partitions_binomial(n: int, k: int, a: int, b: int) -> int:
    _nonnegative(n=n, k=k)
    _interval(a, b)
    return _registered(_binomial_tables, a, BinomialTable).count_partitions(n, k, b)
