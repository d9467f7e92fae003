import pytest

from dseqrng.dsequence import (DSeqConfig, dseq_digit, dseq_period, dseq_stream, expansion_digit,
                               half_period_digit_sums, verify_half_period_complement)
from dseqrng.errors import InvalidPrimeError, NotCoprimeError, NotMaximumLengthError
from dseqrng.numtheory import is_primitive_root
from oracles import linear_order, naive_pow, trial_prime

ODD_PRIMES_100 = [p for p in range(3, 100) if trial_prime(p)]


@pytest.mark.parametrize("i, p, r, expected", [(1, 7, 2, 0), (3, 7, 2, 1), (1, 7, 10, 3)])
def test_dseq_digit(i, p, r, expected):
    assert dseq_digit(i, DSeqConfig(p, r)) == expected


def test_dseq_stream_p11():
    # 2**i mod 11 for i = 1..10 is 2,4,8,5,10,9,7,3,6,1
    assert dseq_stream(DSeqConfig(11), 10) == [0, 0, 0, 1, 0, 1, 1, 1, 0, 1]


def test_dseq_stream_small():
    assert dseq_stream(DSeqConfig(3), 2) == [0, 1]
    six = dseq_stream(DSeqConfig(7), 6)
    assert six[:3] == six[3:] == [0, 0, 1]


@pytest.mark.parametrize("p", ODD_PRIMES_100)
@pytest.mark.parametrize("r", [2, 3, 10])
def test_stream_matches_direct_definition(p, r):
    if r % p == 0:
        return
    cfg = DSeqConfig(p, r, start_index=3)
    assert dseq_stream(cfg, 2 * p) == [naive_pow(r, i, p) % r for i in range(3, 3 + 2 * p)]


@pytest.mark.parametrize("p, r, expected", [(11, 2, 10), (7, 2, 3), (5, 4, 2)])
def test_dseq_period(p, r, expected):
    assert dseq_period(DSeqConfig(p, r)) == expected


@pytest.mark.parametrize("p", ODD_PRIMES_100)
def test_periodicity(p):
    cfg = DSeqConfig(p)
    t = dseq_period(cfg)
    assert t == linear_order(2, p)
    assert all(dseq_digit(i + t, cfg) == dseq_digit(i, cfg) for i in range(1, 2 * p))


@pytest.mark.parametrize("p", [11, 13, 5])
def test_half_period_complement_examples(p):
    assert verify_half_period_complement(DSeqConfig(p))


def test_half_period_complement_exhaustive():
    for p in ODD_PRIMES_100:
        if is_primitive_root(2, p):
            assert verify_half_period_complement(DSeqConfig(p)), p


def test_half_period_complement_precondition():
    with pytest.raises(NotMaximumLengthError):
        verify_half_period_complement(DSeqConfig(7))
    with pytest.raises(NotMaximumLengthError):
        verify_half_period_complement(DSeqConfig(7, 3))


def test_general_base_half_period_sum():
    for q in filter(trial_prime, range(3, 50)):
        for r in (2, 3, 10):
            if r % q == 0 or not is_primitive_root(r, q):
                continue
            cfg = DSeqConfig(q, r)
            if dseq_period(cfg) % 2 == 0:
                assert half_period_digit_sums(cfg) == {r - 1}, (q, r)


def test_expansion_digits_of_one_seventh():
    cfg = DSeqConfig(7, 10)
    assert [expansion_digit(i, cfg) for i in range(1, 13)] == [1, 4, 2, 8, 5, 7] * 2


def test_expansion_digits_by_long_division():
    for q in filter(trial_prime, range(3, 50)):
        for r in (2, 3, 10):
            if r % q == 0:
                continue
            cfg, rem = DSeqConfig(q, r), 1
            for i in range(1, 2 * q):
                rem *= r
                assert expansion_digit(i, cfg) == rem // q
                rem %= q


def test_residue_low_digit_is_not_the_expansion_digit():
    # the half-period sum property needs the expansion digit when r > 2
    cfg = DSeqConfig(7, 3)
    half = dseq_period(cfg) // 2
    assert {dseq_digit(i, cfg) + dseq_digit(i + half, cfg) for i in range(1, half + 1)} == {1, 4}
    assert half_period_digit_sums(cfg) == {2}


def test_binary_expansion_digit_equals_low_bit():
    for p in ODD_PRIMES_100:
        cfg = DSeqConfig(p)
        assert all(expansion_digit(i, cfg) == dseq_digit(i, cfg) for i in range(1, 2 * p))


def test_config_validation():
    with pytest.raises(InvalidPrimeError):
        DSeqConfig(9)
    with pytest.raises(NotCoprimeError):
        DSeqConfig(5, 10)
    with pytest.raises(ValueError):
        DSeqConfig(7, 1)
