from itertools import combinations, permutations

import pytest

from dseqrng.dsequence import DSeqConfig, dseq_digit
from dseqrng.errors import InvalidArgumentsError, InvalidPrimeError, NotCoprimeError
from dseqrng.kak import (KakIndexConfig, KakPowerConfig, kak_index_bit, kak_index_period_bound,
                         kak_index_stream, kak_power_stream, residue_tuple_period)
from oracles import gcd, naive_lcm, naive_pow, trial_prime


@pytest.mark.parametrize("i, expected", [(1, 0), (2, 1), (3, 1)])
def test_kak_index_bit(i, expected):
    assert kak_index_bit(i, KakIndexConfig((3, 5))) == expected


def test_kak_index_stream_matches_bits():
    cfg = KakIndexConfig((5, 7, 11))
    assert kak_index_stream(cfg, 50) == [kak_index_bit(i, cfg) for i in range(1, 51)]


@pytest.mark.parametrize("primes, expected", [((3, 5), (4, True)), ((23, 29), (308, False)),
                                              ((7,), (6, False))])
def test_kak_index_period_bound(primes, expected):
    assert kak_index_period_bound(KakIndexConfig(primes)) == expected


def test_single_prime_reduces_to_dsequence():
    for p in filter(trial_prime, range(3, 60)):
        cfg, d = KakIndexConfig((p,)), DSeqConfig(p)
        assert all(kak_index_bit(i, cfg) == dseq_digit(i, d) for i in range(1, 3 * p))


def _brute_tuple_period(p1, p2):
    start = (2 % p1, 2 % p2)
    i = 1
    while True:
        i += 1
        if (naive_pow(2, i, p1), naive_pow(2, i, p2)) == start:
            return i - 1


def test_residue_tuple_period_divides_lcm():
    primes = [p for p in range(3, 50) if trial_prime(p)]
    for p1, p2 in combinations(primes, 2):
        per = _brute_tuple_period(p1, p2)
        assert residue_tuple_period((p1, p2)) == per
        bound, exact = kak_index_period_bound(KakIndexConfig((p1, p2)))
        assert bound == naive_lcm([p1 - 1, p2 - 1])
        assert bound % per == 0
        if exact:
            assert per == bound


def test_xor_is_order_independent():
    base = kak_index_stream(KakIndexConfig((3, 5, 13)), 200)
    for perm in permutations((3, 5, 13)):
        assert kak_index_stream(KakIndexConfig(perm), 200) == base


def test_kak_index_validation():
    with pytest.raises(InvalidArgumentsError):
        KakIndexConfig(())
    with pytest.raises(InvalidPrimeError):
        KakIndexConfig((3, 3))


@pytest.mark.parametrize("seed, moduli, length, expected", [
    (2, (3,), 3, [0, 1, 1]),
    (3, (7, 11), 4, [0, 1, 0, 1]),
    (1, (7,), 2, [1, 1]),
])
def test_kak_power_examples(seed, moduli, length, expected):
    assert kak_power_stream(KakPowerConfig(seed, moduli), length) == expected


def test_kak_power_matches_direct_powers():
    for m in range(3, 100):
        for seed in (2, 3, 5, 7):
            if gcd(seed, m) != 1:
                continue
            bits = kak_power_stream(KakPowerConfig(seed, (m,)), 21)
            assert bits == [pow(seed, 2**j, m) & 1 for j in range(21)]


def test_kak_power_composite_moduli():
    cfg = KakPowerConfig(5, (77, 3 * 11))
    assert kak_power_stream(cfg, 10) == [
        (pow(5, 2**j, 77) & 1) ^ (pow(5, 2**j, 33) & 1) for j in range(10)]


def test_kak_power_validation():
    with pytest.raises(NotCoprimeError):
        KakPowerConfig(6, (9,))
    with pytest.raises(InvalidArgumentsError):
        KakPowerConfig(2, (13,), enforce_bbs_rule=True)
    # 7 and 11 are both 3 mod 4, as is every factor of 77
    KakPowerConfig(2, (7, 11, 77), enforce_bbs_rule=True)
