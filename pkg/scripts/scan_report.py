"""Scan all matched DHM sequences up to --qmax and summarize the outcome.

Usage: python scripts/scan_report.py --qmax 1000 [--workers 4]
"""

import argparse
import collections
import time

from dhm.adic import scan
from dhm.ntheory import build_params, primes_5_mod_8


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--qmax", type=int, default=1000)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()

    t0 = time.perf_counter()
    rows = scan(args.qmax, workers=args.workers)
    elapsed = time.perf_counter() - t0

    by_q = collections.defaultdict(list)
    for v in rows:
        by_q[v.q].append(v)

    print(f"{'q':>6} {'s':>5} {'t':>4} {'rows':>4}  plain d  tilde d  notes")
    for q in primes_5_mod_8(args.qmax):
        p = build_params(q)
        vs = by_q.get(q, [])
        plain = sorted({v.observed_d for v in vs if not v.tilde})
        tilde = sorted({v.observed_d for v in vs if v.tilde})
        notes = []
        if any(v.Dbound > 1 for v in vs):
            hit = [v for v in vs if v.Dbound > 1 and v.divides_S2]
            notes.append(f"bound {vs[0].l_candidate} available, attained by {len(hit)}")
        if not all(v.agree for v in vs):
            notes.append("DISAGREEMENT")
        if vs:
            print(f"{q:>6} {p.s:>5} {p.t:>4} {len(vs):>4}  {str(plain):>7}  {str(tilde):>7}  {'; '.join(notes)}")

    print(f"\n{len(rows)} verdicts, {sum(v.agree for v in rows)} agree, {elapsed:.2f}s")


if __name__ == "__main__":
    main()
