"""Plain d-sequences: digit i is (base**i mod prime) mod base."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator

from .errors import InvalidArgumentsError, NotCoprimeError, NotMaximumLengthError
from .numtheory import OddPrime, is_primitive_root, multiplicative_order


@dataclass(frozen=True)
class DSeqConfig:
    prime: int
    base: int = 2
    start_index: int = 1

    def __post_init__(self):
        object.__setattr__(self, "prime", OddPrime(self.prime))
        if self.base < 2:
            raise InvalidArgumentsError(f"base must be >= 2, got {self.base}")
        if self.base % self.prime == 0:
            raise NotCoprimeError(self.base, self.prime)
        if self.start_index < 1:
            raise InvalidArgumentsError("start_index must be >= 1")


def dseq_digit(i: int, cfg: DSeqConfig) -> int:
    if i < 1:
        raise InvalidArgumentsError("index must be >= 1")
    return pow(cfg.base, i, cfg.prime) % cfg.base


def iter_dseq(cfg: DSeqConfig) -> Iterator[int]:
    """Endless digit stream starting at cfg.start_index.

    Keeps the running residue and multiplies by the base each step.
    """
    r = pow(cfg.base, cfg.start_index, cfg.prime)
    while True:
        yield r % cfg.base
        r = r * cfg.base % cfg.prime


def dseq_stream(cfg: DSeqConfig, length: int) -> list[int]:
    if length < 1:
        raise InvalidArgumentsError("length must be >= 1")
    return list(islice(iter_dseq(cfg), length))


def dseq_period(cfg: DSeqConfig) -> int:
    return multiplicative_order(cfg.base, cfg.prime)


def verify_half_period_complement(cfg: DSeqConfig) -> bool:
    """Check a(i + (p-1)/2) == 1 - a(i) over the first half period.

    Only defined for maximum-length binary sequences.
    """
    if cfg.base != 2 or not is_primitive_root(2, cfg.prime):
        raise NotMaximumLengthError(
            f"base {cfg.base} is not a primitive root generating a binary "
            f"maximum-length sequence for p={cfg.prime}")
    half = (cfg.prime - 1) // 2
    return all(dseq_digit(i + half, cfg) == 1 - dseq_digit(i, cfg)
               for i in range(1, half + 1))


def expansion_digit(i: int, cfg: DSeqConfig) -> int:
    """i-th digit after the radix point of 1/prime written in base cfg.base."""
    if i < 1:
        raise InvalidArgumentsError("index must be >= 1")
    return cfg.base * pow(cfg.base, i - 1, cfg.prime) // cfg.prime


def half_period_digit_sums(cfg: DSeqConfig) -> set[int]:
    """Distinct values of d(i) + d(i + period/2) over one half period, where d
    is the expansion digit of 1/prime.  Empty when the period is odd.

    For base 2 the expansion digit equals the residue low bit, since
    x_i = 2 x_(i-1) - p a_i with p odd, so the binary case is the same sequence.
    """
    period = dseq_period(cfg)
    if period % 2:
        return set()
    half = period // 2
    return {expansion_digit(i, cfg) + expansion_digit(i + half, cfg) for i in range(1, half + 1)}
