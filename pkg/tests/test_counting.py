import pytest
from hypothesis import given, settings, strategies as st

from models import counting, oracle
from models.domain import KRange, PartDomain
from models.errors import DivergentCountError


def interval(a, b):
    return PartDomain.interval(a, b)


# ==================== KNOWN VALUES ====================

@pytest.mark.parametrize("n,k,a,b,expected", [
    (6, 5, 1, 3, 5),
    (8, 4, 2, 2, 1),
    (0, 0, 1, 3, 1),
    (10, 2, 1, 3, 0),
    (3, 0, 1, 3, 0),
])
def test_count_fixed_k(n, k, a, b, expected):
    assert counting.count_fixed_k(n, k, interval(a, b)) == expected


def test_count_fixed_k_matches_brute_force_over_1_to_7():
    d = interval(1, 7)
    assert counting.count_fixed_k(10, 4, d) == len(oracle.brute_compositions(10, 4, d))


def test_count_fixed_k_over_explicit_set():
    d = PartDomain.explicit([1, 3])
    assert counting.count_fixed_k(4, 2, d) == 2
    assert counting.count_fixed_k(5, 2, d) == 0


def test_counts_are_exact_beyond_64_bits():
    # compositions of 200 into 100 parts of 1 or 3: C(100, 50)
    from math import comb
    assert counting.count_fixed_k(200, 100, interval(1, 3)) > 2 ** 64
    assert counting.count_fixed_k(200, 100, PartDomain.explicit([1, 3])) == comb(100, 50)


@pytest.mark.parametrize("n,a,b,expected", [(4, 1, 2, 5), (1, 1, 3, 1), (3, 2, 3, 1), (0, 1, 3, 0)])
def test_count_any_k(n, a, b, expected):
    assert counting.count_any_k(n, interval(a, b)) == expected


def test_count_any_k_fibonacci_over_one_and_two():
    fib = [1, 1]
    for _ in range(40):
        fib.append(fib[-1] + fib[-2])
    for n in range(1, 41):
        assert counting.count_any_k(n, interval(1, 2)) == fib[n]


def test_count_any_k_interval_and_set_forms_agree():
    for a in range(1, 4):
        for b in range(a, 6):
            as_interval = interval(a, b)
            as_set = PartDomain.explicit(range(a, b + 1))
            for n in range(0, 25):
                assert counting.count_any_k(n, as_interval) == counting.count_any_k(n, as_set)


def test_count_any_k_sums_fixed_k():
    d = interval(2, 5)
    for n in range(1, 30):
        assert counting.count_any_k(n, d) == sum(counting.count_fixed_k(n, k, d) for k in range(1, n + 1))


def test_count_any_k_diverges_when_zero_is_allowed():
    with pytest.raises(DivergentCountError):
        counting.count_any_k(3, interval(0, 2))
    with pytest.raises(DivergentCountError):
        counting.count_any_k(3, PartDomain.explicit([0, 2]))


@pytest.mark.parametrize("kmin,kmax,expected", [(2, 3, 8), (5, 5, 5), (0, 0, 0)])
def test_count_k_range(kmin, kmax, expected):
    assert counting.count_k_range(6, KRange(k_min=kmin, k_max=kmax), interval(1, 3)) == expected


def test_count_fixed_k_binomial():
    assert counting.count_fixed_k_binomial(6, 5, 1, 3) == 5
    assert counting.count_fixed_k_binomial(12, 4, 3, 3) == 1
    assert counting.count_fixed_k_binomial(22, 11, 1, 7) == counting.count_fixed_k(22, 11, interval(1, 7))


@pytest.mark.parametrize("n,k,a,b,expected", [(6, 3, 1, 6, 3), (6, 5, 1, 3, 1), (5, 2, 3, 3, 0), (0, 0, 2, 4, 1)])
def test_count_partitions_fixed_k(n, k, a, b, expected):
    assert counting.count_partitions_fixed_k(n, k, a, b) == expected
    assert counting.count_partitions_binomial(n, k, a, b) == expected


def test_count_partitions_binomial_minimum_sum_is_unique():
    for k in range(0, 6):
        for a in range(0, 4):
            assert counting.count_partitions_binomial(k * a, k, a, a + 3) == 1


@pytest.mark.parametrize("n,a,b,expected", [
    (4, 1, 4, 5),
    (1, 1, 1, 1),
    # (5) and (3,2); no other partition of 5 has every part in [2,5]
    (5, 2, 5, 2),
    (0, 1, 3, 0),
])
def test_count_partitions_any_k(n, a, b, expected):
    assert counting.count_partitions_any_k(n, a, b) == expected


def test_count_partitions_any_k_rejects_zero_parts():
    with pytest.raises(DivergentCountError):
        counting.count_partitions_any_k(4, 0, 3)


def test_count_partitions_any_k_sums_fixed_k():
    for a, b in [(1, 1), (1, 4), (2, 5), (3, 7)]:
        for n in range(1, 30):
            expected = counting.count_partitions_k_range(n, KRange(k_min=1, k_max=n), a, b)
            assert counting.count_partitions_any_k(n, a, b) == expected


def test_count_partitions_any_k_after_a_larger_lower_bound():
    # tables are shared per upper bound; a later query with a smaller lower bound must still be exact
    assert counting.count_partitions_any_k(10, 3, 6) == 3
    assert counting.count_partitions_any_k(10, 1, 6) == len(
        [p for k in range(1, 11) for p in oracle.brute_partitions(10, k, interval(1, 6))]
    )


def test_partition_counts_over_any_unrestricted_n_are_p_of_n():
    p = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231]
    for n in range(1, len(p)):
        assert counting.count_partitions_any_k(n, 1, n) == p[n]


def test_count_partitions_set():
    assert counting.count_partitions_set(6, 3, PartDomain.explicit([1, 2, 4])) == 2
    assert counting.count_partitions_set(6, 3, interval(1, 6)) == 3
    assert counting.count_partitions_set(0, 0, PartDomain.explicit([5, 9])) == 1


def test_invalid_arguments_raise():
    with pytest.raises(ValueError):
        counting.count_fixed_k(-1, 2, interval(1, 3))
    with pytest.raises(ValueError):
        counting.count_fixed_k_binomial(6, 5, 3, 1)
    with pytest.raises(ValueError):
        counting.count_partitions_fixed_k(6, -5, 1, 3)


# ==================== CROSS-CHECKS ====================

def test_counts_agree_with_oracle_on_small_grid():
    for k in range(0, 5):
        for b in range(0, 5):
            for a in range(0, b + 1):
                d = interval(a, b)
                by_sum = oracle.brute_compositions_by_sum(k, d)
                for n in range(0, 13):
                    truth = by_sum.get(n, [])
                    assert counting.count_fixed_k(n, k, d) == len(truth)
                    partitions = [t for t in truth if list(t) == sorted(t, reverse=True)]
                    assert counting.count_partitions_fixed_k(n, k, a, b) == len(partitions)


def test_cross_recursion_agreement():
    for b in range(0, 8):
        for a in range(0, b + 1):
            d = interval(a, b)
            for k in range(0, 16):
                for n in range(0, 31):
                    assert counting.count_fixed_k(n, k, d) == counting.count_fixed_k_binomial(n, k, a, b)
                    assert counting.count_partitions_fixed_k(n, k, a, b) == \
                        counting.count_partitions_binomial(n, k, a, b)


def test_set_recursion_agrees_with_interval_recursion():
    for b in range(0, 6):
        for a in range(0, b + 1):
            as_set = PartDomain.explicit(range(a, b + 1))
            for k in range(0, 7):
                for n in range(0, 20):
                    assert counting.count_partitions_set(n, k, as_set) == counting.count_partitions_fixed_k(n, k, a, b)
                    assert counting.count_fixed_k(n, k, as_set) == counting.count_fixed_k(n, k, interval(a, b))


@settings(max_examples=150, deadline=None)
@given(n=st.integers(0, 40), k=st.integers(0, 12), a=st.integers(0, 5), width=st.integers(0, 5))
def test_shift_preserves_cardinality(n, k, a, width):
    b = a + width
    if n < k * a:
        return
    assert counting.count_fixed_k(n, k, interval(a, b)) == counting.count_fixed_k(n - k * a, k, interval(0, b - a))


def test_k_range_sum_law():
    for b in range(0, 6):
        for a in range(0, b + 1):
            d = interval(a, b)
            for n in range(0, 13):
                for k0 in range(0, 7):
                    for k1 in range(k0, 7):
                        kr = KRange(k_min=k0, k_max=k1)
                        ks = range(k0, k1 + 1)
                        assert counting.count_k_range(n, kr, d) == \
                            sum(counting.count_fixed_k(n, k, d) for k in ks)
                        assert counting.count_partitions_k_range(n, kr, a, b) == \
                            sum(counting.count_partitions_fixed_k(n, k, a, b) for k in ks)


def test_partition_counts_with_a_thousand_parts():
    # c1 + c2 + c3 = 1000 and c1 + 2*c2 + 3*c3 = 1500 leave c3 free in 0..250
    assert counting.count_partitions_fixed_k(1500, 1000, 1, 3) == 251
    assert counting.count_partitions_set(1500, 1000, PartDomain.explicit([1, 2, 3])) == 251
    assert counting.count_partitions_set(1500, 1000, PartDomain.explicit([1, 3])) == 1
    assert counting.count_partitions_fixed_k(3001, 1000, 1, 3) == 0


def test_cached_tables_give_same_answers_in_any_query_order():
    d = interval(1, 7)
    forward = [counting.count_fixed_k(n, 6, d) for n in range(0, 45)]
    counting.clear_tables()
    backward = [counting.count_fixed_k(n, 6, d) for n in reversed(range(0, 45))]
    assert forward == backward[::-1]
