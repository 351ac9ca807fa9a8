import pytest

from models import oracle
from models.domain import CompositionSpec, KRange, PartDomain
from models.errors import ShiftError
from models.generation import GeneratorKind, PartitionKind
from models.transforms import (QuadrupleSpec, generate_k_range, generate_partitions_k_range,
                               generate_quadruple, generate_shifted, shift_down, shift_up)


@pytest.mark.parametrize("n,k,a,b,reduced,offset", [
    (6, 5, 1, 3, (1, 5, 0, 2), 1),
    (8, 4, 2, 2, (0, 4, 0, 0), 2),
    (22, 11, 1, 7, (11, 11, 0, 6), 1),
])
def test_shift_down(n, k, a, b, reduced, offset):
    spec, shift = shift_down(CompositionSpec.of(n, k, a, b))
    assert (spec.n, spec.k, spec.domain.a, spec.domain.b) == reduced
    assert spec.domain.is_interval
    assert shift == offset


def test_shift_down_errors():
    with pytest.raises(ShiftError):
        shift_down(CompositionSpec.of(3, 4, 1, 3))
    with pytest.raises(ShiftError):
        shift_down(CompositionSpec(n=4, k=2, domain=PartDomain.explicit([1, 3])))


def test_shift_up():
    assert shift_up((0, 0, 0, 0, 1), 1) == (1, 1, 1, 1, 2)
    assert shift_up((4, 0, 2), 0) == (4, 0, 2)
    assert shift_up((2, 0, 1), 3) == (5, 3, 4)
    with pytest.raises(ShiftError):
        shift_up((1, 2), -1)


def test_shift_round_trip_is_a_bijection():
    for k in range(0, 5):
        for b in range(0, 5):
            for a in range(0, b + 1):
                d = PartDomain.interval(a, b)
                for n in range(k * a, 13):
                    spec = CompositionSpec(n=n, k=k, domain=d)
                    reduced, offset = shift_down(spec)
                    lifted = sorted(shift_up(p, offset) for p in oracle.brute_compositions(reduced.n, k, reduced.domain))
                    assert lifted == oracle.brute_compositions(n, k, d)


@pytest.mark.parametrize("kind", list(GeneratorKind))
def test_generate_shifted_matches_direct_generation(kind):
    spec = CompositionSpec.of(9, 4, 1, 4)
    assert sorted(generate_shifted(spec, kind)) == oracle.brute_compositions(9, 4, spec.domain)


def test_generate_shifted_below_minimum_sum_is_empty():
    assert list(generate_shifted(CompositionSpec.of(3, 4, 1, 3))) == []


@pytest.mark.parametrize("kmin,kmax,expected", [(2, 3, 8), (5, 5, 5), (7, 9, 0)])
def test_generate_k_range(kmin, kmax, expected):
    out = list(generate_k_range(6, KRange(k_min=kmin, k_max=kmax), PartDomain.interval(1, 3)))
    assert len(out) == expected
    assert len(set(out)) == expected


def test_generate_k_range_runs_k_in_order():
    out = list(generate_k_range(4, KRange(k_min=1, k_max=4), PartDomain.interval(1, 4), GeneratorKind.BINOMIAL_SPLIT))
    assert [len(p) for p in out] == sorted(len(p) for p in out)


def test_generate_partitions_k_range():
    out = list(generate_partitions_k_range(4, KRange(k_min=1, k_max=4), PartDomain.interval(1, 4),
                                           PartitionKind.NAIVE_SUFFIX))
    assert sorted(out) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]


def test_generate_quadruple():
    single = list(generate_quadruple(QuadrupleSpec(N={6}, K={5}, A={1}, B={3})))
    assert len(single) == 5
    assert all(tuple(tag) == (6, 5, 1, 3) for *tag, _ in single)

    mixed = list(generate_quadruple(QuadrupleSpec(N={3}, K={2}, A={1, 2}, B={2})))
    assert mixed == [(3, 2, 1, 2, (1, 2)), (3, 2, 1, 2, (2, 1))]

    assert list(generate_quadruple(QuadrupleSpec(N={0}, K={0}, A={0}, B={0}))) == [(0, 0, 0, 0, ())]


def test_generate_quadruple_skips_empty_intervals():
    out = list(generate_quadruple(QuadrupleSpec(N={2}, K={1}, A={1, 3}, B={2})))
    assert out == [(2, 1, 1, 2, (2,))]


def test_quadruple_spec_needs_nonempty_sets():
    with pytest.raises(ValueError):
        QuadrupleSpec(N=set(), K={1}, A={1}, B={1})
