"""XOR combinations of binary d-sequences.

Two generators live here: the index generator, which XORs the low bits
of 2**i modulo several primes, and the power-exponent generator, which
squares a seed repeatedly modulo each modulus and XORs the low bits.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from math import gcd
from typing import Iterator, Sequence

from .errors import InvalidArgumentsError, NotCoprimeError
from .numtheory import Modulus, is_primitive_root, lcm_many, odd_primes


@dataclass(frozen=True)
class KakIndexConfig:
    primes: tuple

    def __post_init__(self):
        if not self.primes:
            raise InvalidArgumentsError("at least one prime is required")
        object.__setattr__(self, "primes", odd_primes(self.primes))


@dataclass(frozen=True)
class KakPowerConfig:
    seed: int
    moduli: tuple
    enforce_bbs_rule: bool = False

    def __post_init__(self):
        if not self.moduli:
            raise InvalidArgumentsError("at least one modulus is required")
        if self.seed < 1:
            raise InvalidArgumentsError(f"seed must be positive, got {self.seed}")
        moduli = tuple(Modulus.of(m) for m in self.moduli)
        object.__setattr__(self, "moduli", moduli)
        for m in moduli:
            if gcd(self.seed, m.value) != 1:
                raise NotCoprimeError(self.seed, m.value)
            if self.enforce_bbs_rule:
                bad = [p for p in m.prime_factors() if p % 4 != 3]
                if bad:
                    raise InvalidArgumentsError(
                        f"modulus {m.value} has prime factors {bad} not congruent to 3 mod 4")


def kak_index_bit(i: int, cfg: KakIndexConfig) -> int:
    if i < 1:
        raise InvalidArgumentsError("index must be >= 1")
    bit = 0
    for p in cfg.primes:
        bit ^= pow(2, i, p) & 1
    return bit


def iter_kak_index(cfg: KakIndexConfig, start_index: int = 1) -> Iterator[int]:
    residues = [pow(2, start_index, p) for p in cfg.primes]
    while True:
        bit = 0
        for r in residues:
            bit ^= r & 1
        yield bit
        residues = [r * 2 % p for r, p in zip(residues, cfg.primes)]


def kak_index_stream(cfg: KakIndexConfig, length: int, start_index: int = 1) -> list[int]:
    if length < 1:
        raise InvalidArgumentsError("length must be >= 1")
    return list(islice(iter_kak_index(cfg, start_index), length))


def kak_index_period_bound(cfg: KakIndexConfig) -> tuple[int, bool]:
    """(lcm of p - 1, whether that bound is the exact residue-tuple period)."""
    bound = lcm_many(p - 1 for p in cfg.primes)
    exact = all(is_primitive_root(2, p) for p in cfg.primes)
    return bound, exact


def iter_kak_power(cfg: KakPowerConfig) -> Iterator[int]:
    mods = [m.value for m in cfg.moduli]
    state = [cfg.seed % m for m in mods]
    while True:
        bit = 0
        for r in state:
            bit ^= r & 1
        yield bit
        state = [r * r % m for r, m in zip(state, mods)]


def kak_power_stream(cfg: KakPowerConfig, length: int) -> list[int]:
    if length < 1:
        raise InvalidArgumentsError("length must be >= 1")
    return list(islice(iter_kak_power(cfg), length))


def residue_tuple_period(primes: Sequence[int], base: int = 2) -> int:
    """Brute-force period of (base**i mod p_1, base**i mod p_2, ...)."""
    start = tuple(base % p for p in primes)
    cur, n = start, 0
    while True:
        cur = tuple(r * base % p for r, p in zip(cur, primes))
        n += 1
        if cur == start:
            return n
