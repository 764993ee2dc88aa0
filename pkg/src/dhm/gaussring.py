"""Residues modulo 2^N - 1 and ring-valued Gauss periods.

With ``N = 2q`` the map ``a -> 4^a`` is well defined on Z_q, so summing it
over a cyclotomic class gives a "Gauss period" living in Z_{2^N - 1}. The
``*_checks`` functions below evaluate each quadratic identity these periods
satisfy, one :class:`Check` per instance, so callers can either ask "did
everything hold" or list exactly which instance failed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .cyclotomy import CyclotomicTable
from .ntheory import DomainError, PrimeParams


def fold(x: int, N: int) -> int:
    """Reduce ``x`` modulo ``2**N - 1`` using ``2**N = 1``.

    Non-negative inputs are reduced by adding the high bits back onto the
    low bits; negatives fall back to ``%``.
    """
    M = (1 << N) - 1
    if x < 0:
        return x % M
    while x >> N:
        x = (x & M) + (x >> N)
    return 0 if x == M else x


Operand = Union["RingElement", int]


@dataclass(frozen=True)
class RingElement:
    """An element of Z_{2^N - 1} held by its canonical representative."""

    N: int
    value: int

    def __post_init__(self):
        if self.N <= 0:
            raise DomainError(f"N must be positive, got {self.N}")
        if not 0 <= self.value < (1 << self.N) - 1:
            object.__setattr__(self, "value", fold(self.value, self.N))

    @property
    def modulus(self) -> int:
        return (1 << self.N) - 1

    def _coerce(self, other: Operand) -> int:
        if isinstance(other, RingElement):
            if other.N != self.N:
                raise DomainError(f"ring mismatch: N={self.N} vs N={other.N}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other: Operand) -> RingElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return RingElement(self.N, fold(self.value + v, self.N))

    __radd__ = __add__

    def __sub__(self, other: Operand) -> RingElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return RingElement(self.N, fold(self.value - v, self.N))

    def __rsub__(self, other: Operand) -> RingElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return RingElement(self.N, fold(v - self.value, self.N))

    def __mul__(self, other: Operand) -> RingElement:
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return RingElement(self.N, fold(self.value * v, self.N))

    __rmul__ = __mul__

    def __neg__(self) -> RingElement:
        return RingElement(self.N, fold(-self.value, self.N))

    def __pow__(self, e: int) -> RingElement:
        return RingElement(self.N, pow(self.value, e, self.modulus))

    def __eq__(self, other) -> bool:
        if isinstance(other, RingElement):
            return self.N == other.N and self.value == other.value
        if isinstance(other, int):
            return self.value == fold(other, self.N)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.N, self.value))

    def __int__(self) -> int:
        return self.value


def third(q: int) -> int:
    """``(4^q - 1) / 3`` as an exact integer.

    Computed before any reduction: 3 divides ``2^{2q} - 1``, so it has no
    inverse in the ring and dividing after reducing would be wrong.
    """
    return ((1 << (2 * q)) - 1) // 3


@dataclass(frozen=True)
class GaussPeriodSet:
    params: PrimeParams
    eta: tuple[RingElement, RingElement, RingElement, RingElement]
    G: RingElement

    def __getitem__(self, lam: int) -> RingElement:
        return self.eta[lam % 4]


def gauss_periods(params: PrimeParams, table: CyclotomicTable) -> GaussPeriodSet:
    N = params.N
    eta = tuple(
        RingElement(N, sum(1 << (2 * i) for i in table.classes[lam])) for lam in range(4)
    )
    G = eta[0] - eta[1] + eta[2] - eta[3]
    return GaussPeriodSet(params, eta, G)


@dataclass(frozen=True)
class Check:
    """One instance of an identity: its name, the indices, and both sides."""

    name: str
    indices: tuple[int, ...]
    lhs: RingElement
    rhs: RingElement

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def gauss_sum_square_checks(gps: GaussPeriodSet) -> Iterator[Check]:
    q = gps.params.q
    yield Check("G^2 = q - (4^q-1)/3", (), gps.G * gps.G, RingElement(gps.G.N, q - third(q)))


def period_product_checks(gps: GaussPeriodSet, table: CyclotomicTable, shift: int = 0) -> Iterator[Check]:
    """``eta_{l+i} eta_{m+i} = f*[l = m+2] + sum_v (l-v+2, m-v) eta_{v+i}`` for all 16 pairs."""
    f = gps.params.f
    num = table.numbers
    for lam in range(4):
        for mu in range(4):
            rhs = f if (lam - mu - 2) % 4 == 0 else 0
            for nu in range(4):
                rhs = gps[nu + shift] * num[(lam - nu + 2) % 4][(mu - nu) % 4] + rhs
            lhs = gps[lam + shift] * gps[mu + shift]
            yield Check("eta product via cyclotomic numbers", (lam, mu, shift), lhs, rhs)


def scaled_product_checks(gps: GaussPeriodSet) -> Iterator[Check]:
    """The four product families, each with ``lambda = 0..3``.

    The square is checked in both of its stated forms: the one with the
    raw constants and the one rewritten using the sum of all periods.
    """
    p = gps.params
    q, s, t = p.q, p.s, p.t
    N = p.N
    A = q - 7 + 2 * s
    B = q + 1 + 2 * s - 8 * t
    Bb = q + 1 + 2 * s + 8 * t
    C = q + 1 - 6 * s
    base = RingElement(N, (third(q) - 1) * q)
    e = gps

    def prod_next(lam):
        return (
            base
            + (-3 - 2 * s) * (e[lam] + e[lam + 1])
            + (1 + 2 * s + 8 * t) * e[lam + 2]
            + (1 + 2 * s - 8 * t) * e[lam + 3]
        )

    for lam in range(4):
        sq = 16 * (e[lam] * e[lam])
        yield Check("16 eta_l^2 (constants)", (lam,), sq,
                    A * e[lam] + B * e[lam + 1] + C * e[lam + 2] + Bb * e[lam + 3])
        yield Check("16 eta_l^2", (lam,), sq,
                    base
                    + (-7 + 2 * s) * e[lam]
                    + (1 + 2 * s - 8 * t) * e[lam + 1]
                    + (1 - 6 * s) * e[lam + 2]
                    + (1 + 2 * s + 8 * t) * e[lam + 3])
        yield Check("16 eta_l eta_{l+1}", (lam,), 16 * (e[lam] * e[lam + 1]), prod_next(lam))
        yield Check("16 eta_l eta_{l+2}", (lam,), 16 * (e[lam] * e[lam + 2]),
                    base
                    + (-7 + 2 * s) * (e[lam] + e[lam + 2])
                    + (-3 - 2 * s) * (e[lam + 1] + e[lam + 3])
                    + 4 * (q - 1))
        yield Check("16 eta_l eta_{l+3}", (lam,), 16 * (e[lam] * e[lam + 3]), prod_next(lam + 3))


def difference_square_checks(gps: GaussPeriodSet) -> Iterator[Check]:
    p = gps.params
    q, s, t = p.q, p.s, p.t
    e, G = gps.eta, gps.G
    T = third(q)

    def sq(x):
        return x * x

    yield Check("(e0-e1)^2 + (e2-e3)^2 = -tG", (0, 1, 2, 3), sq(e[0] - e[1]) + sq(e[2] - e[3]), -(t * G))
    yield Check("2(e0-e2)^2 = -(sG+q) + T", (0, 2), 2 * sq(e[0] - e[2]), T - (s * G + q))
    yield Check("(e0-e3)^2 + (e2-e1)^2 = tG", (0, 3, 2, 1), sq(e[0] - e[3]) + sq(e[2] - e[1]), t * G)
    yield Check("2(e1-e3)^2 = sG - q + T", (1, 3), 2 * sq(e[1] - e[3]), s * G - q + T)


def _all(checks: Iterator[Check]) -> bool:
    return all(c.ok for c in checks)


def verify_gauss_sum_square(gps: GaussPeriodSet) -> bool:
    return _all(gauss_sum_square_checks(gps))


def verify_period_products(gps: GaussPeriodSet, table: CyclotomicTable, shift: int = 0) -> bool:
    return _all(period_product_checks(gps, table, shift))


def verify_scaled_products(gps: GaussPeriodSet, params: PrimeParams | None = None) -> bool:
    if params is not None and params != gps.params:
        raise DomainError("params do not match the Gauss period set")
    return _all(scaled_product_checks(gps))


def verify_difference_squares(gps: GaussPeriodSet, params: PrimeParams | None = None) -> bool:
    if params is not None and params != gps.params:
        raise DomainError("params do not match the Gauss period set")
    return _all(difference_square_checks(gps))
