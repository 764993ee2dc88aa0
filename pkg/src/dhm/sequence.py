"""Ding-Helleseth-Martinsen sequences of period 2q.

A position ``lam`` in Z_{2q} is split by CRT into ``(lam mod 2, lam mod q)``.
The sequence S(i, j, l) is 1 where the pair is ``(0, b)`` with b in D_i or
D_j, or ``(1, b)`` with b in D_l or D_j. The tilde variant also sets
position 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .cyclotomy import CyclotomicTable
from .gaussring import GaussPeriodSet, RingElement
from .ntheory import DomainError, PrimeParams

Triple = tuple[int, int, int]

# Triples for which the sequence is known to have optimal autocorrelation,
# keyed by (tilde, kind). Kinds ending in "t1" need t = 1, "s1" need s = 1.
CONDITION_LISTS: dict[tuple[bool, str], tuple[Triple, ...]] = {
    (False, "I-t1"): ((0, 1, 3), (0, 2, 1)),
    (False, "II-s1"): ((1, 0, 3), (0, 1, 2)),
    (True, "I~-t1"): ((0, 1, 3), (0, 2, 3), (1, 2, 0), (1, 3, 0)),
    (True, "II~-s1"): ((0, 1, 2), (0, 3, 2), (1, 0, 3), (1, 2, 3)),
}

ALL_TRIPLES: tuple[Triple, ...] = tuple(permutations(range(4), 3))


def crt_forward(q: int, a: int, b: int) -> int:
    return ((q + 1) * b + q * a) % (2 * q)


def crt_inverse(q: int, lam: int) -> tuple[int, int]:
    if not 0 <= lam < 2 * q:
        raise DomainError(f"index {lam} outside 0..{2 * q - 1}")
    return lam % 2, lam % q


@dataclass(frozen=True)
class DhmSequence:
    params: PrimeParams
    triple: Triple
    tilde: bool
    bits: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def bitstring(self) -> str:
        return "".join(map(str, self.bits))


def check_triple(triple) -> Triple:
    t = tuple(int(x) for x in triple)
    if len(t) != 3 or len(set(t)) != 3 or not all(0 <= x <= 3 for x in t):
        raise DomainError(f"(i, j, l) must be three distinct values in 0..3, got {triple}")
    return t


def build_sequence(params: PrimeParams, table: CyclotomicTable, triple, tilde: bool = False) -> DhmSequence:
    i, j, l = check_triple(triple)
    q = params.q
    bits = [0] * (2 * q)
    for b in range(1, q):
        c = table.class_of[b]
        if c == i or c == j:
            bits[crt_forward(q, 0, b)] = 1
        if c == l or c == j:
            bits[crt_forward(q, 1, b)] = 1
    if tilde:
        bits[0] = 1
    return DhmSequence(params, (i, j, l), bool(tilde), tuple(bits))


def autocorrelation(seq: DhmSequence, tau: int) -> int:
    N = seq.N
    b = seq.bits
    return sum(1 if b[(t + tau) % N] == b[t] else -1 for t in range(N))


def autocorr_spectrum(seq: DhmSequence) -> list[int]:
    """``A(tau)`` for ``tau = 0..N-1``; exact integer arithmetic throughout."""
    x = 1 - 2 * np.asarray(seq.bits, dtype=np.int64)
    return [int(x @ np.roll(x, -tau)) for tau in range(seq.N)]


def max_offpeak(seq: DhmSequence) -> int:
    return max(abs(a) for a in autocorr_spectrum(seq)[1:])


def evaluate_at_2(seq: DhmSequence) -> int:
    return sum(1 << lam for lam, bit in enumerate(seq.bits) if bit)


@dataclass(frozen=True)
class ConditionTag:
    kind: str  # one of the CONDITION_LISTS kinds, or "none"
    matched_triple: Triple


def _applies(kind: str, params: PrimeParams) -> bool:
    return params.t == 1 if kind.endswith("t1") else params.s == 1


def condition_tags(params: PrimeParams, triple, tilde: bool) -> list[ConditionTag]:
    """Every condition list containing ``triple`` whose hypothesis holds at ``q``."""
    triple = check_triple(triple)
    return [
        ConditionTag(kind, triple)
        for (tl, kind), triples in CONDITION_LISTS.items()
        if tl == bool(tilde) and triple in triples and _applies(kind, params)
    ]


def condition_match(params: PrimeParams, triple, tilde: bool) -> ConditionTag:
    tags = condition_tags(params, triple, tilde)
    return tags[0] if tags else ConditionTag("none", check_triple(triple))


def matched_conditions(params: PrimeParams) -> list[tuple[bool, Triple, str]]:
    """All ``(tilde, triple, kind)`` combinations whose condition holds at ``q``.

    Ordered by ``(tilde, triple, kind)``.
    """
    out = [
        (tl, triple, kind)
        for (tl, kind), triples in CONDITION_LISTS.items()
        if _applies(kind, params)
        for triple in triples
    ]
    return sorted(out)


def s2_from_periods(params: PrimeParams, gps: GaussPeriodSet, triple, tilde: bool) -> RingElement:
    """``S(2)`` predicted from the Gauss periods, shifted by the class of 2."""
    i, j, l = check_triple(triple)
    k = params.k
    two_q = 1 << params.q
    rhs = gps[i - k] + gps[j - k] + two_q * (gps[l - k] + gps[j - k])
    return rhs + 1 if tilde else rhs


def verify_s2_congruence(seq: DhmSequence, gps: GaussPeriodSet) -> bool:
    if seq.params != gps.params:
        raise DomainError("sequence and Gauss periods were built for different parameters")
    lhs = RingElement(seq.N, evaluate_at_2(seq))
    return lhs == s2_from_periods(seq.params, gps, seq.triple, seq.tilde)
