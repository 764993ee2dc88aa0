import pytest
from hypothesis import given, strategies as st

from conftest import PRIMES_197
from dhm.cyclotomy import build_classes
from dhm.gaussring import gauss_periods
from dhm.ntheory import DomainError, build_params
from dhm.sequence import (
    ALL_TRIPLES,
    autocorr_spectrum,
    autocorrelation,
    build_sequence,
    condition_match,
    condition_tags,
    crt_forward,
    crt_inverse,
    evaluate_at_2,
    matched_conditions,
    max_offpeak,
    verify_s2_congruence,
)


def ctx(q, theta=None):
    p = build_params(q, theta)
    t = build_classes(p)
    return p, t, gauss_periods(p, t)


def test_crt_examples():
    assert crt_forward(5, 0, 1) == 6
    assert crt_forward(5, 0, 0) == 0
    assert crt_forward(5, 1, 3) == 3
    assert crt_inverse(5, 7) == (1, 2)
    assert crt_inverse(5, 0) == (0, 0)
    assert crt_inverse(5, 8) == (0, 3)
    with pytest.raises(DomainError):
        crt_inverse(5, 10)


@given(st.sampled_from(PRIMES_197), st.integers(0, 1), st.integers(0, 10**6))
def test_crt_roundtrip(q, a, b):
    b %= q
    lam = crt_forward(q, a, b)
    assert 0 <= lam < 2 * q
    assert crt_inverse(q, lam) == (a, b)


def test_golden_sequences_q5():
    p, t, _ = ctx(5, 3)
    s = build_sequence(p, t, (1, 0, 3), tilde=True)
    assert s.bits == (1, 1, 0, 0, 0, 0, 1, 1, 1, 0)
    assert build_sequence(p, t, (1, 2, 3), tilde=True).bitstring() == "1000100111"
    assert build_sequence(p, t, (1, 0, 3)).weight == 4


def test_invalid_triple():
    p, t, _ = ctx(5)
    with pytest.raises(DomainError):
        build_sequence(p, t, (0, 0, 1))
    with pytest.raises(DomainError):
        build_sequence(p, t, (0, 1, 4))


def test_weight_and_first_bit(q):
    p, t, _ = ctx(q)
    for triple in ALL_TRIPLES:
        plain = build_sequence(p, t, triple)
        tl = build_sequence(p, t, triple, tilde=True)
        assert plain.weight == q - 1 and plain.bits[0] == 0
        assert tl.weight == q and tl.bits[0] == 1


def test_autocorrelation_examples():
    p, t, _ = ctx(5, 3)
    s = build_sequence(p, t, (1, 0, 3), tilde=True)
    assert autocorrelation(s, 0) == 10
    assert autocorrelation(s, 5) == -2
    spec = autocorr_spectrum(s)
    assert len(spec) == 10 and spec[0] == 10
    assert max_offpeak(s) == 2
    assert all((a - 10) % 4 == 0 for a in spec)


def test_q13_optimal():
    p, t, _ = ctx(13)
    s = build_sequence(p, t, (0, 1, 3))
    assert condition_match(p, (0, 1, 3), False).kind == "I-t1"
    assert max_offpeak(s) == 2
    assert set(autocorr_spectrum(s)[1:]) <= {-2, 2}


@pytest.mark.parametrize("q", [5, 13, 29])
def test_spectrum_matches_direct_sum(q):
    p, t, _ = ctx(q)
    for triple in ALL_TRIPLES[:6]:
        for tilde in (False, True):
            s = build_sequence(p, t, triple, tilde)
            assert autocorr_spectrum(s) == [autocorrelation(s, tau) for tau in range(s.N)]


def test_spectrum_congruent_to_period(q):
    p, t, _ = ctx(q)
    for triple in ALL_TRIPLES:
        spec = autocorr_spectrum(build_sequence(p, t, triple))
        assert spec[0] == 2 * q
        assert all((a + 2 * q) % 4 == 0 for a in spec)


def test_matched_sequences_are_optimal(q):
    p, t, _ = ctx(q)
    for tilde, triple, _kind in matched_conditions(p):
        spec = autocorr_spectrum(build_sequence(p, t, triple, tilde))
        assert spec[0] == 2 * q
        assert set(spec[1:]) <= {-2, 2}


def test_evaluate_at_2():
    p, t, _ = ctx(5, 3)
    assert evaluate_at_2(build_sequence(p, t, (1, 0, 3), True)) == 451 == 1 + 2 + 2**6 + 2**7 + 2**8
    assert evaluate_at_2(build_sequence(p, t, (1, 0, 3))) == 450
    zero = build_sequence(p, t, (1, 0, 3)).__class__(p, (1, 0, 3), False, (0,) * 10)
    assert evaluate_at_2(zero) == 0


def test_condition_match():
    p5, *_ = ctx(5, 3)
    assert condition_match(p5, (1, 0, 3), True).kind == "II~-s1"
    p13, *_ = ctx(13)
    assert condition_match(p13, (0, 1, 2), False).kind == "none"
    assert condition_match(p13, (0, 1, 3), False).kind == "I-t1"
    assert condition_tags(p13, (0, 1, 2), False) == []


def test_matched_counts():
    assert len(matched_conditions(ctx(5)[0])) == 12  # s = t = 1
    assert len(matched_conditions(ctx(13)[0])) == 6  # t = 1 only
    assert len(matched_conditions(ctx(37)[0])) == 6  # s = 1 only
    assert matched_conditions(ctx(61)[0]) == []  # s = 5, t = 3


def test_s2_congruence_examples():
    p, t, gps = ctx(5, 3)
    assert verify_s2_congruence(build_sequence(p, t, (1, 0, 3)), gps)
    assert verify_s2_congruence(build_sequence(p, t, (0, 1, 2)), gps)


def test_s2_congruence_all_triples(q):
    p, t, gps = ctx(q)
    for triple in ALL_TRIPLES:
        for tilde in (False, True):
            assert verify_s2_congruence(build_sequence(p, t, triple, tilde), gps)
