import pytest

# primes q = 5 (mod 8) up to 197, listed by hand
PRIMES_197 = [5, 13, 29, 37, 53, 61, 101, 109, 149, 157, 173, 181, 197]


def trial_division_is_prime(n):
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


PRIMES_500 = [q for q in range(5, 501) if q % 8 == 5 and trial_division_is_prime(q)]


@pytest.fixture(params=PRIMES_197)
def q(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in test_acceptance.RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}")
