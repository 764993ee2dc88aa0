"""Integer arithmetic and the per-prime parameters every other module uses.

Everything here works on plain Python ints, which are arbitrary precision,
so residues modulo ``2**N - 1`` for ``N`` in the hundreds need no special
big-number type.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ConsistencyError(ArithmeticError):
    """Two independent computations of the same quantity disagree."""


# Deterministic Miller-Rabin witnesses: correct for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_EXTRA_ROUNDS = 64  # error <= 4**-64 = 2**-128 above the limit


def _mr_round(n: int, d: int, r: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test, exact for ``n < 3.3e24``.

    Larger inputs get 64 extra Miller-Rabin rounds with bases drawn from a
    generator seeded by ``n``, so the answer is reproducible and the chance
    of a composite slipping through is below ``2**-128``.
    """
    if n < 2:
        raise DomainError(f"primality is undefined for n={n} < 2")
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if not all(_mr_round(n, d, r, a) for a in _MR_BASES):
        return False
    if n < _MR_DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(n)
    return all(_mr_round(n, d, r, rng.randrange(2, n - 1)) for _ in range(_MR_EXTRA_ROUNDS))


def mod_pow(base: int, exp: int, modulus: int) -> int:
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise DomainError("negative exponents are not supported")
    return pow(base, exp, modulus)


def big_gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division (small ``n`` only)."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_generator(g: int, q: int) -> bool:
    """True iff ``g`` generates the multiplicative group of F_q."""
    if g % q == 0:
        return False
    return all(pow(g, (q - 1) // p, q) != 1 for p in prime_factors(q - 1))


def find_generator(q: int) -> int:
    """Smallest primitive root modulo the prime ``q``."""
    if q < 2 or not is_prime(q):
        raise DomainError(f"{q} is not prime")
    if q == 2:
        return 1
    for g in range(2, q):
        if is_generator(g, q):
            return g
    raise ConsistencyError(f"no primitive root found modulo {q}")  # unreachable for prime q


@dataclass(frozen=True)
class PrimeParams:
    """Arithmetic context for one prime ``q = 8m - 3``.

    ``theta`` is the generator the class labels are built from. When the
    requested generator produced a negative ``t`` it was replaced by its
    inverse (which swaps classes 1 and 3) and ``relabeled`` is set.
    """

    q: int
    f: int
    m: int
    theta: int
    s: int
    t: int
    k: int
    relabeled: bool = False

    @property
    def N(self) -> int:
        return 2 * self.q

    @property
    def modulus(self) -> int:
        return (1 << self.N) - 1


def check_q(q: int) -> None:
    if q < 5 or not is_prime(q):
        raise DomainError(f"q={q} must be a prime >= 5")
    if q % 8 != 5:
        raise DomainError(f"q={q} must satisfy q = 5 (mod 8), got q mod 8 = {q % 8}")


def build_params(q: int, theta_override: int | None = None) -> PrimeParams:
    from .cyclotomy import build_table, recover_st

    check_q(q)
    if theta_override is None:
        theta = find_generator(q)
    else:
        theta = theta_override % q
        if not is_generator(theta, q):
            raise DomainError(f"theta={theta_override} is not a primitive root modulo {q}")

    table = build_table(q, theta)
    s, t = recover_st(table)
    relabeled = False
    if t < 0:
        theta = pow(theta, -1, q)
        table = build_table(q, theta)
        s, t = recover_st(table)
        relabeled = True
    if t <= 0 or s % 4 != 1:
        raise ConsistencyError(f"normalization failed for q={q}: s={s}, t={t}")

    return PrimeParams(
        q=q,
        f=(q - 1) // 4,
        m=(q + 3) // 8,
        theta=theta,
        s=s,
        t=t,
        k=table.class_of[2],
        relabeled=relabeled,
    )


def primes_5_mod_8(q_max: int) -> list[int]:
    """All primes ``q <= q_max`` with ``q = 5 (mod 8)``, ascending."""
    return [q for q in range(5, q_max + 1, 8) if is_prime(q)]
