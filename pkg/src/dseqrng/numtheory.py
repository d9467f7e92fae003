"""
Exact integer number theory: modular powers, multiplicative orders,
primitive roots, deterministic primality and lcm.

Python integers are unbounded, so intermediate products never overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from .errors import EmptyInputError, InvalidModulusError, InvalidPrimeError, NotCoprimeError

# Miller-Rabin with these witnesses is exact for n < 3.3e24, which covers 64 bits.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3317044064679887385961981


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    if modulus < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {modulus}")
    if base < 0 or exponent < 0:
        raise ValueError("base and exponent must be non-negative")
    result = 1 % modulus
    base %= modulus
    while exponent:
        if exponent & 1:
            result = result * base % modulus
        base = base * base % modulus
        exponent >>= 1
    return result


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} is beyond the deterministic primality range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def multiplicative_order(a: int, m: int) -> int:
    """Least e >= 1 with a**e == 1 (mod m).

    Prime moduli scan the divisors of m - 1 in increasing order; composite
    moduli fall back to a linear search bounded by m.
    """
    if m < 2:
        raise InvalidModulusError(f"modulus must be >= 2, got {m}")
    a %= m
    if gcd(a, m) != 1:
        raise NotCoprimeError(a, m)
    if m == 2:
        return 1
    if is_prime(m):
        for d in divisors(m - 1):
            if pow(a, d, m) == 1:
                return d
        raise AssertionError("unreachable: Fermat guarantees a divisor")
    x = a
    for e in range(1, m):
        if x == 1:
            return e
        x = x * a % m
    raise AssertionError("unreachable: order is bounded by the totient")


def is_primitive_root(a: int, p: int) -> bool:
    if a % p == 0:
        raise NotCoprimeError(a, p)
    return multiplicative_order(a, p) == p - 1


def lcm_many(values: Iterable[int]) -> int:
    values = list(values)
    if not values:
        raise EmptyInputError("lcm of an empty list")
    if any(v < 1 for v in values):
        raise ValueError("lcm_many requires positive integers")
    return reduce(lcm, values)


class OddPrime(int):
    """An int that is verified to be an odd prime at construction."""

    def __new__(cls, value):
        value = int(value)
        if value < 3 or not is_prime(value):
            raise InvalidPrimeError(f"{value} is not an odd prime")
        return super().__new__(cls, value)

    @property
    def value(self) -> int:
        return int(self)


@dataclass(frozen=True)
class Modulus:
    value: int
    factorization: Optional[tuple[tuple[int, int], ...]] = None

    def __post_init__(self):
        if self.value < 3:
            raise InvalidModulusError(f"modulus must be >= 3, got {self.value}")
        if self.factorization is not None:
            fac = tuple((int(p), int(e)) for p, e in self.factorization)
            object.__setattr__(self, "factorization", fac)
            prod = 1
            for p, e in fac:
                prod *= p**e
            if prod != self.value:
                raise InvalidModulusError(
                    f"factorization {fac} does not multiply to {self.value}")

    @classmethod
    def of(cls, value: int) -> "Modulus":
        if isinstance(value, Modulus):
            return value
        return cls(int(value), tuple(sorted(factorize(int(value)).items())))

    def prime_factors(self) -> list[int]:
        fac = self.factorization or tuple(sorted(factorize(self.value).items()))
        return [p for p, _ in fac]


def odd_primes(values: Sequence[int]) -> tuple[OddPrime, ...]:
    """Validate a list of distinct odd primes."""
    primes = tuple(OddPrime(v) for v in values)
    if len(set(primes)) != len(primes):
        raise InvalidPrimeError(f"primes must be pairwise distinct: {list(values)}")
    return primes
