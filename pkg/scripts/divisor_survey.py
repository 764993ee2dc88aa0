"""List primes q = 5 (mod 8) where l = (q^2+3q+4)/4 can divide 2^q - 1 or 2^q + 1.

These are the only q at which the 2-adic complexity can drop below its
generic value. No sequences are built, so the survey reaches large q fast.

Usage: python scripts/divisor_survey.py --qmax 100000
"""

import argparse

from dhm.adic import plain_divisor_criterion, tilde_divisor_criterion
from dhm.ntheory import primes_5_mod_8


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--qmax", type=int, default=20000)
    args = ap.parse_args()

    qs = primes_5_mod_8(args.qmax)
    n_prime = 0
    print(f"{'q':>8} {'l':>12}  divides")
    for q in qs:
        l, prime, plain = plain_divisor_criterion(q)
        _, _, tilde = tilde_divisor_criterion(q)
        n_prime += prime
        if prime and (plain or tilde):
            print(f"{q:>8} {l:>12}  {'2^q-1' if plain else '2^q+1'}")
    print(f"\n{len(qs)} primes checked, l prime for {n_prime}")


if __name__ == "__main__":
    main()
