"""
Recursive two-loop d-sequence generator.

An inner loop sums the residues S**i mod p_1j over a set of inner primes,
producing the SeedSet S_1..S_w.  An outer loop raises every SeedSet value
to the power k and XORs the low bits of the results modulo each outer
prime.  Bits are emitted k-major: for k = 1..u, for q = 1..w.

The stream period is predicted exactly as

    P = lcm(ord(S_q, p_2r) for all q, r) * w

and :func:`measure_period` checks that prediction by brute force.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from math import gcd
from typing import Iterator, Optional, Sequence

from .errors import InvalidArgumentsError, NotCoprimeError
from .numtheory import divisors, is_primitive_root, lcm_many, multiplicative_order, odd_primes


_CACHE_LIMIT = 1 << 16  # SeedSet values kept in memory across sweeps


@dataclass(frozen=True)
class BitStream:
    bits: tuple

    def __post_init__(self):
        bits = tuple(self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("bit streams may only contain 0 and 1")
        object.__setattr__(self, "bits", bits)

    def __len__(self):
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, item):
        return self.bits[item]


def inner_period(seed: int, inner_primes: Sequence[int]) -> int:
    """Exact period of the integer sum of S**i mod p over the inner primes."""
    for p in inner_primes:
        if gcd(seed, p) != 1:
            raise NotCoprimeError(seed, p)
    return lcm_many(multiplicative_order(seed, p) for p in inner_primes)


@dataclass(frozen=True)
class RecursiveConfig:
    seed: int
    inner_primes: tuple
    outer_primes: tuple
    outer_iterations: int = 1
    seedset_size: Optional[int] = None
    inner_period: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.seed < 2:
            raise InvalidArgumentsError(f"seed must be >= 2, got {self.seed}")
        if not self.inner_primes or not self.outer_primes:
            raise InvalidArgumentsError("inner and outer prime lists must be nonempty")
        object.__setattr__(self, "inner_primes", odd_primes(self.inner_primes))
        object.__setattr__(self, "outer_primes", odd_primes(self.outer_primes))
        if self.outer_iterations < 1:
            raise InvalidArgumentsError("outer_iterations must be >= 1")
        t = inner_period(self.seed, self.inner_primes)
        object.__setattr__(self, "inner_period", t)
        if self.seedset_size is not None and not 1 <= self.seedset_size <= t:
            raise InvalidArgumentsError(
                f"seedset_size must be in 1..{t}, got {self.seedset_size}")

    @property
    def w(self) -> int:
        return self.seedset_size or self.inner_period

    @property
    def length(self) -> int:
        return self.w * self.outer_iterations

    def with_iterations(self, u: int) -> "RecursiveConfig":
        return RecursiveConfig(self.seed, self.inner_primes, self.outer_primes, u,
                               self.seedset_size)


@dataclass(frozen=True)
class SeedSet:
    values: tuple
    inner_period: int

    def __len__(self):
        return len(self.values)


def iter_seedset(seed: int, inner_primes: Sequence[int], w: int) -> Iterator[int]:
    residues = [seed % p for p in inner_primes]
    for _ in range(w):
        yield sum(residues)
        residues = [r * seed % p for r, p in zip(residues, inner_primes)]


def build_seedset(cfg: RecursiveConfig) -> SeedSet:
    values = tuple(iter_seedset(cfg.seed, cfg.inner_primes, cfg.w))
    return SeedSet(values, cfg.inner_period)


def iter_bits(cfg: RecursiveConfig, outer_iterations: Optional[int] = None) -> Iterator[int]:
    """Lazily emit the k-major stream; pass a larger bound to run past cfg's u.

    SeedSets larger than _CACHE_LIMIT are regenerated on every sweep so
    memory stays bounded however large w gets.
    """
    u = cfg.outer_iterations if outer_iterations is None else outer_iterations
    outer = cfg.outer_primes
    cached = None
    if cfg.w <= _CACHE_LIMIT:
        cached = list(iter_seedset(cfg.seed, cfg.inner_primes, cfg.w))
    for k in range(1, u + 1):
        sweep = cached if cached is not None else iter_seedset(cfg.seed, cfg.inner_primes, cfg.w)
        for s in sweep:
            bit = 0
            for p in outer:
                bit ^= pow(s, k, p) & 1
            yield bit


def generate(cfg: RecursiveConfig) -> BitStream:
    return BitStream(tuple(iter_bits(cfg)))


@dataclass(frozen=True)
class PeriodReport:
    seedset: tuple
    inner_period: int
    order_matrix: tuple
    per_prime_lcm: tuple
    outer_period: int
    total_period: int
    seed_primitivity: tuple

    @property
    def w(self) -> int:
        return len(self.seedset)


def seed_order(value: int, p: int) -> int:
    """Order of a SeedSet value modulo an outer prime; 1 when p divides it."""
    if value % p == 0:
        return 1
    return multiplicative_order(value, p)


def predict_period(cfg: RecursiveConfig) -> PeriodReport:
    seedset = build_seedset(cfg).values
    matrix = tuple(tuple(seed_order(s, p) for p in cfg.outer_primes) for s in seedset)
    per_prime = tuple(lcm_many(row[r] for row in matrix) for r in range(len(cfg.outer_primes)))
    outer = lcm_many(per_prime)
    primitivity = tuple(is_primitive_root(cfg.seed, p) for p in cfg.inner_primes)
    return PeriodReport(
        seedset=seedset,
        inner_period=cfg.inner_period,
        order_matrix=matrix,
        per_prime_lcm=per_prime,
        outer_period=outer,
        total_period=outer * len(seedset),
        seed_primitivity=primitivity,
    )


def least_period(bits: Sequence[int]) -> int:
    """Smallest p with bits[n] == bits[n + p] over the whole window.

    Uses the prefix function: the least period of s is len(s) - pi[-1].
    """
    n = len(bits)
    if n == 0:
        raise InvalidArgumentsError("empty window")
    pi = [0] * n
    for i in range(1, n):
        k = pi[i - 1]
        while k and bits[i] != bits[k]:
            k = pi[k - 1]
        if bits[i] == bits[k]:
            k += 1
        pi[i] = k
    return n - pi[-1]


def _take(cfg: RecursiveConfig, n: int) -> list[int]:
    u = -(-n // cfg.w)
    return list(islice(iter_bits(cfg, u), n))


def measure_period(cfg: RecursiveConfig, max_bits: int) -> Optional[int]:
    """Minimal period of the first max_bits bits, or None if none is <= max_bits / 2."""
    if max_bits < 2:
        raise InvalidArgumentsError("max_bits must be >= 2")
    window = _take(cfg, max_bits)
    p = least_period(window)
    return p if p <= max_bits // 2 else None


def check_divisor_periods(cfg: RecursiveConfig, max_bits: int,
                          predicted: Optional[int] = None) -> dict[int, bool]:
    """For each divisor d of the predicted period with d < max_bits, whether
    shifting the first max_bits bits by d leaves them unchanged.

    This is the fallback when the window is too short to measure the period.
    """
    if predicted is None:
        predicted = predict_period(cfg).total_period
    window = _take(cfg, max_bits)
    out = {}
    for d in divisors(predicted):
        if d >= max_bits:
            break
        out[d] = window[d:] == window[:max_bits - d]
    return out


def check_single_inner_guarantee(p11: int, outer_primes: Sequence[int], seed: int) -> bool:
    """With one inner prime and seed a primitive root of it, every outer
    prime below p11 should see some SeedSet value that is a primitive root.
    """
    (p11,) = odd_primes([p11])
    outer = odd_primes(outer_primes)
    if seed % p11 == 0 or not is_primitive_root(seed, p11):
        raise InvalidArgumentsError(f"seed {seed} is not a primitive root of {p11}")
    if not outer or any(p >= p11 for p in outer):
        raise InvalidArgumentsError(f"every outer prime must be below {p11}")
    seedset = list(iter_seedset(seed, [p11], p11 - 1))
    return all(any(s % p and is_primitive_root(s, p) for s in seedset) for p in outer)
