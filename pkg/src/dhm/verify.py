"""Run every algebraic identity for a range of primes and collect failures."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomy import build_classes, closed_form_mismatches
from .gaussring import (
    gauss_periods,
    gauss_sum_square_checks,
    period_product_checks,
    scaled_product_checks,
    difference_square_checks,
)
from .ntheory import build_params, primes_5_mod_8
from .sequence import ALL_TRIPLES, build_sequence, verify_s2_congruence


@dataclass(frozen=True)
class Finding:
    q: int
    identity: str
    detail: str
    indices: tuple


@dataclass
class SuiteResult:
    primes: list[int] = field(default_factory=list)
    checks: int = 0
    failures: list[Finding] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_prime(q: int, result: SuiteResult | None = None) -> SuiteResult:
    res = result if result is not None else SuiteResult()
    params = build_params(q)
    table = build_classes(params)
    gps = gauss_periods(params, table)
    res.primes.append(q)

    res.checks += 16
    for ij in closed_form_mismatches(table, params):
        res.failures.append(Finding(q, "cyclotomic-numbers", "counted number != closed form", ij))

    groups = [("gauss-sum-square", gauss_sum_square_checks(gps))]
    groups += [("period-products", period_product_checks(gps, table, shift)) for shift in range(4)]
    groups += [("scaled-products", scaled_product_checks(gps)), ("difference-squares", difference_square_checks(gps))]
    for identity, checks in groups:
        for c in checks:
            res.checks += 1
            if not c.ok:
                res.failures.append(Finding(q, identity, c.name, c.indices))

    for tilde in (False, True):
        for triple in ALL_TRIPLES:
            res.checks += 1
            if not verify_s2_congruence(build_sequence(params, table, triple, tilde), gps):
                res.failures.append(Finding(q, "s2-congruence", f"S(2) vs Gauss periods, tilde={tilde}", triple))
    return res


def run_suite(q_max: int) -> SuiteResult:
    res = SuiteResult()
    for q in primes_5_mod_8(q_max):
        check_prime(q, res)
    return res
