"""Brute-force ground truth: enumerate the whole k-fold product and filter.

Shares no code with the counting or generation modules.
"""
from collections import defaultdict
from itertools import product

from models.domain import Composition, PartDomain
from models.errors import OracleTooLargeError

MAX_PRODUCT = 10 ** 8


def _check_size(k: int, domain: PartDomain) -> None:
    size = domain.size ** k
    if size > MAX_PRODUCT:
        raise OracleTooLargeError(f"|{domain}|^{k} = {size} exceeds {MAX_PRODUCT}")


def brute_compositions(n: int, k: int, domain: PartDomain) -> list[Composition]:
    _check_size(k, domain)
    return sorted(t for t in product(domain.values, repeat=k) if sum(t) == n)


def brute_partitions(n: int, k: int, domain: PartDomain) -> list[Composition]:
    return [t for t in brute_compositions(n, k, domain)
            if all(x >= y for x, y in zip(t, t[1:]))]


def brute_compositions_by_sum(k: int, domain: PartDomain) -> dict[int, list[Composition]]:
    """One pass over the product, bucketed by sum; for sweeps over many n."""
    _check_size(k, domain)
    buckets = defaultdict(list)
    for t in product(domain.values, repeat=k):
        buckets[sum(t)].append(t)
    # product() runs in lexicographic order, so every bucket is already sorted.
    return dict(buckets)
