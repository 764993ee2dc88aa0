"""Order-four cyclotomic classes of F_q and their cyclotomic numbers.

The class of a nonzero residue ``x`` is ``log_theta(x) mod 4``. Cyclotomic
numbers ``(i, j)`` count ``a`` in class ``i`` with ``a + 1`` in class ``j``.
They are always computed by direct counting here; the closed form in terms
of ``q = s^2 + 4t^2`` is only ever compared against that count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .ntheory import ConsistencyError, DomainError, PrimeParams


@dataclass(frozen=True)
class CyclotomicTable:
    q: int
    theta: int
    class_of: tuple[int, ...]  # index x in 0..q-1; class_of[0] == -1
    classes: tuple[tuple[int, ...], ...]
    numbers: tuple[tuple[int, ...], ...]

    @property
    def f(self) -> int:
        return (self.q - 1) // 4


class ClosedForm(NamedTuple):
    A: int
    B: int
    Bbar: int
    C: int
    Dnum: int


def _classes(q: int, theta: int) -> tuple[list[int], list[list[int]]]:
    class_of = [-1] * q
    classes: list[list[int]] = [[], [], [], []]
    x = 1
    for e in range(q - 1):
        lam = e % 4
        class_of[x] = lam
        classes[lam].append(x)
        x = x * theta % q
    return class_of, classes


def cyclotomic_number_bruteforce(table: CyclotomicTable, i: int, j: int) -> int:
    """Count ``a`` in ``D_i`` with ``a + 1`` in ``D_j`` (``a + 1 = 0`` is skipped)."""
    if not (0 <= i <= 3 and 0 <= j <= 3):
        raise DomainError(f"class indices must lie in 0..3, got ({i}, {j})")
    q = table.q
    return sum(1 for a in table.classes[i] if (a + 1) % q and table.class_of[(a + 1) % q] == j)


def build_table(q: int, theta: int) -> CyclotomicTable:
    """Classes and brute-force cyclotomic numbers for the generator ``theta``."""
    class_of, classes = _classes(q, theta)
    if any(len(c) != (q - 1) // 4 for c in classes):
        raise DomainError(f"theta={theta} is not a generator modulo {q}")
    partial = CyclotomicTable(q, theta, tuple(class_of), tuple(map(tuple, classes)), ())
    numbers = tuple(
        tuple(cyclotomic_number_bruteforce(partial, i, j) for j in range(4)) for i in range(4)
    )
    return CyclotomicTable(q, theta, partial.class_of, partial.classes, numbers)


def build_classes(params: PrimeParams) -> CyclotomicTable:
    return build_table(params.q, params.theta)


def closed_form_numbers(q: int, s: int, t: int) -> ClosedForm:
    """The five scaled constants ``16 * (i, j)`` as functions of ``(q, s, t)``."""
    if s * s + 4 * t * t != q or s % 4 != 1:
        raise DomainError(f"need q = s^2 + 4t^2 with s = 1 (mod 4); got q={q}, s={s}, t={t}")
    cf = ClosedForm(
        A=q - 7 + 2 * s,
        B=q + 1 + 2 * s - 8 * t,
        Bbar=q + 1 + 2 * s + 8 * t,
        C=q + 1 - 6 * s,
        Dnum=q - 3 - 2 * s,
    )
    for name, v in cf._asdict().items():
        if v < 0 or v % 16:
            raise ConsistencyError(f"{name}={v} is not a non-negative multiple of 16 (q={q}, s={s}, t={t})")
    return cf


def pattern_matrix(cf: ClosedForm) -> tuple[tuple[int, ...], ...]:
    """Place the closed-form constants in their 16 slots, divided by 16."""
    A, B, Bb, C, D = (v // 16 for v in cf)
    return (
        (A, B, C, Bb),
        (D, D, Bb, B),
        (A, D, A, D),
        (D, Bb, B, D),
    )


def recover_st(table: CyclotomicTable) -> tuple[int, int]:
    """Read ``(s, t)`` off the counted numbers; ``t`` may come back negative."""
    q = table.q
    n = table.numbers
    twice_s = 16 * n[0][0] - q + 7
    if twice_s % 2:
        raise ConsistencyError(f"16*(0,0) - q + 7 = {twice_s} is odd for q={q}")
    s = twice_s // 2
    t = n[0][3] - n[0][1]
    if s * s + 4 * t * t != q:
        raise ConsistencyError(f"recovered s={s}, t={t} but s^2 + 4t^2 != {q}")
    return s, t


def closed_form_mismatches(table: CyclotomicTable, params: PrimeParams) -> list[tuple[int, int]]:
    """Slots ``(i, j)`` where the counted number differs from the closed form."""
    expected = pattern_matrix(closed_form_numbers(params.q, params.s, params.t))
    return [(i, j) for i in range(4) for j in range(4) if table.numbers[i][j] != expected[i][j]]


def quadratic_character(table: CyclotomicTable, x: int) -> int:
    x %= table.q
    if x == 0:
        raise DomainError("the quadratic character is undefined at 0")
    return 1 if table.class_of[x] % 2 == 0 else -1
