import pytest
from pydantic import ValidationError

from models.counting import count_fixed_k
from models.domain import (CompositionSpec, KRange, PartDomain, is_feasible, validate_composition,
                           validate_partition)


def test_interval_domain_values_and_membership():
    d = PartDomain.interval(1, 3)
    assert d.is_interval
    assert d.values == (1, 2, 3)
    assert d.size == 3
    assert 2 in d
    assert 0 not in d and 4 not in d
    assert str(d) == "[1,3]"


def test_explicit_domain_membership_uses_members_only():
    d = PartDomain.explicit([1, 2, 4])
    assert not d.is_interval
    assert (d.a, d.b) == (1, 4)
    assert 3 not in d
    assert 4 in d
    assert str(d) == "{1,2,4}"


def test_non_integers_are_never_members():
    d = PartDomain.interval(0, 3)
    assert True not in d
    assert 1.0 not in d
    assert "1" not in d


@pytest.mark.parametrize("build", [
    lambda: PartDomain.interval(3, 1),
    lambda: PartDomain.interval(-1, 2),
    lambda: PartDomain.explicit([]),
    lambda: PartDomain.explicit([3, 1]),
    lambda: PartDomain.explicit([1, 1, 2]),
    lambda: PartDomain.explicit([-2, 1]),
])
def test_malformed_domains_are_rejected(build):
    with pytest.raises(ValueError):
        build()


def test_domains_are_frozen_and_hashable():
    d = PartDomain.interval(1, 7)
    with pytest.raises(ValidationError):
        d.a = 2
    assert {d: 1}[PartDomain.interval(1, 7)] == 1


def test_at_least_restricts_from_below():
    assert PartDomain.interval(1, 5).at_least(3) == PartDomain.interval(3, 5)
    assert PartDomain.explicit([1, 3, 4]).at_least(2).values == (3, 4)


@pytest.mark.parametrize("n,k,expected", [(6, 5, True), (10, 2, False), (0, 0, True)])
def test_is_feasible(n, k, expected):
    assert is_feasible(CompositionSpec.of(n, k, 1, 3)) is expected


def test_is_feasible_is_only_necessary_for_explicit_sets():
    # 3 is between 1*1 and 1*4 but not a member of {1,4}
    spec = CompositionSpec(n=3, k=1, domain=PartDomain.explicit([1, 4]))
    assert is_feasible(spec)
    assert count_fixed_k(3, 1, spec.domain) == 0
    # no two members of {2,3,7} sum to 11
    d = PartDomain.explicit([2, 3, 7])
    assert is_feasible(CompositionSpec(n=11, k=2, domain=d))
    assert count_fixed_k(11, 2, d) == 0


def test_validate_composition():
    assert validate_composition((2, 1, 1, 1, 1), CompositionSpec.of(6, 5, 1, 3))
    assert not validate_composition((3, 3), CompositionSpec.of(6, 5, 1, 3))
    assert not validate_composition((4, 2), CompositionSpec.of(6, 2, 1, 3))
    assert not validate_composition(("a", 6), CompositionSpec.of(6, 2, 1, 6))


def test_validate_partition_needs_weakly_decreasing_parts():
    spec = CompositionSpec.of(6, 3, 1, 6)
    assert validate_partition((3, 2, 1), spec)
    assert validate_partition((2, 2, 2), spec)
    assert not validate_partition((1, 2, 3), spec)


def test_spec_rejects_negative_inputs():
    with pytest.raises(ValueError):
        CompositionSpec.of(-1, 2, 1, 3)
    with pytest.raises(ValueError):
        CompositionSpec.of(3, -2, 1, 3)


def test_k_range():
    assert list(KRange(k_min=2, k_max=4).ks()) == [2, 3, 4]
    with pytest.raises(ValueError):
        KRange(k_min=3, k_max=2)
