from models import counting, generation, verify
from models.domain import CompositionSpec
from models.verify import run_verification


def test_small_sweep_passes():
    report = run_verification(nmax=8, kmax=4, bmax=3)
    assert report.passed
    # (nmax + 1) * (kmax + 1) * number of intervals [a, b] with b <= bmax
    assert report.instances == 9 * 5 * 10
    assert report.checks > report.instances
    assert report.summary() == f"PASS {report.instances} instances, {report.checks} checks"


def test_trivial_sweep_passes():
    report = run_verification(nmax=0, kmax=0, bmax=0)
    assert report.passed
    assert report.instances == 1


def test_default_sweep_passes():
    report = run_verification()
    assert report.passed
    assert report.instances == 13 * 7 * 21


def test_corrupted_counter_is_caught(monkeypatch):
    real = counting.count_fixed_k_binomial

    def off_by_one(n, k, a, b):
        value = real(n, k, a, b)
        return value + 1 if (n, k, a, b) == (6, 3, 1, 3) else value

    monkeypatch.setattr(counting, "count_fixed_k_binomial", off_by_one)
    report = run_verification(nmax=8, kmax=4, bmax=3)
    assert not report.passed
    assert "(n=6, k=3, [1,3])" in report.failure
    assert "count_fixed_k_binomial" in report.failure
    assert report.summary().startswith("FAIL at (n=6, k=3, [1,3])")


def test_corrupted_generator_is_caught(monkeypatch):
    real = generation.generate

    def drops_last(spec, kind=generation.GeneratorKind.SUCCESSOR, trace=False):
        items = list(real(spec, kind, trace))
        if spec == CompositionSpec.of(5, 2, 1, 4) and kind is generation.GeneratorKind.INTERVAL_RECURSION:
            return items[:-1]
        return items

    monkeypatch.setattr(generation, "generate", drops_last)
    report = run_verification(nmax=6, kmax=3, bmax=4)
    assert not report.passed
    assert "interval generator" in report.failure


def test_report_serializes():
    data = run_verification(nmax=2, kmax=1, bmax=1).to_dict()
    assert data == {'passed': True, 'instances': 3 * 2 * 3, 'checks': data['checks'], 'failure': None}
    assert verify.VerificationReport(**data).passed
