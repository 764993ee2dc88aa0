"""Command-line front end: ``dhm gen|autocorr|c2|verify|scan``.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 I/O error.
Every big integer is written as a decimal string so no format loses digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from . import adic, verify
from .ntheory import ConsistencyError, DomainError
from .sequence import autocorr_spectrum, build_sequence, check_triple, condition_tags

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

SCAN_COLUMNS = [
    "q", "triple", "tilde", "tag", "D", "D_prime", "pow_ok", "divides_S2",
    "d", "c2_exact", "agree", "predicted_d", "d1", "d2", "Dbound",
]
_BOOL_COLUMNS = {"tilde", "D_prime", "pow_ok", "divides_S2", "agree"}
_INT_COLUMNS = {"q"}



def warn(msg: str) -> None:
    print(f"dhm: warning: {msg}", file=sys.stderr)


def error(msg: str) -> None:
    print(f"dhm: error: {msg}", file=sys.stderr)


class UsageError(Exception):
    pass


def fmt_triple(t) -> str:
    return ",".join(map(str, t))


def parse_triple(text: str) -> tuple[int, int, int]:
    try:
        return check_triple([int(x) for x in text.split(",")])
    except (ValueError, DomainError) as e:
        raise UsageError(f"--ijl expects three distinct digits 0..3 like 1,0,3: {e}") from None


def scan_row(v: adic.TheoremVerdict) -> dict:
    return {
        "q": v.q,
        "triple": fmt_triple(v.triple),
        "tilde": v.tilde,
        "tag": v.kind,
        "D": str(v.l_candidate),
        "D_prime": v.l_prime,
        "pow_ok": v.power_residue_ok,
        "divides_S2": v.divides_S2,
        "d": str(v.observed_d),
        "c2_exact": v.c2_exact(),
        "agree": v.agree,
        "predicted_d": str(v.predicted_d),
        "d1": str(v.d1),
        "d2": str(v.d2),
        "Dbound": str(v.Dbound),
    }


def envelope(records: list) -> dict:
    return {"schema_version": SCHEMA_VERSION, "records": records}


def dumps_json(records: list) -> str:
    return json.dumps(envelope(records), indent=2) + "\n"


def loads_json(text: str) -> list:
    obj = json.loads(text)
    if obj.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {obj.get('schema_version')!r}")
    return obj["records"]


def dumps_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SCAN_COLUMNS, lineterminator="\r\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: (str(r[k]).lower() if k in _BOOL_COLUMNS else r[k]) for k in SCAN_COLUMNS})
    return buf.getvalue()


def loads_csv(text: str) -> list[dict]:
    """Parse scan CSV back into the same typed dicts the JSON form holds."""
    rows = []
    for raw in csv.DictReader(io.StringIO(text, newline="")):
        row = {}
        for k in SCAN_COLUMNS:
            v = raw[k]
            if k in _BOOL_COLUMNS:
                row[k] = v == "true"
            elif k in _INT_COLUMNS:
                row[k] = int(v)
            else:
                row[k] = v
        rows.append(row)
    return rows


def write_output(text: str, out: str | None) -> None:
    """Write to stdout, or atomically replace ``out``."""
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    target = os.path.abspath(out)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".dhm-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _sequence(args):
    ctx = adic.context(args.q, args.theta)
    return ctx, build_sequence(ctx.params, ctx.table, args.ijl, args.tilde)


def cmd_gen(args) -> int:
    ctx, seq = _sequence(args)
    p = ctx.params
    rec = {
        "q": p.q,
        "theta": p.theta,
        "relabeled": p.relabeled,
        "s": p.s,
        "t": p.t,
        "k": p.k,
        "triple": fmt_triple(seq.triple),
        "tilde": seq.tilde,
        "bits": seq.bitstring(),
        "weight": seq.weight,
        "tags": [tag.kind for tag in condition_tags(p, seq.triple, seq.tilde)],
    }
    write_output(dumps_json([rec]), args.out)
    return EXIT_OK


def cmd_autocorr(args) -> int:
    _, seq = _sequence(args)
    spec = autocorr_spectrum(seq)
    rec = {
        "q": args.q,
        "triple": fmt_triple(seq.triple),
        "tilde": seq.tilde,
        "spectrum": spec,
        "max_offpeak": max(abs(a) for a in spec[1:]),
    }
    write_output(dumps_json([rec]), args.out)
    return EXIT_OK


def cmd_c2(args) -> int:
    _, seq = _sequence(args)
    rep = adic.complexity(seq)
    num, den = rep.exact_value
    rec = {
        "q": args.q,
        "triple": fmt_triple(seq.triple),
        "tilde": seq.tilde,
        "N": rep.N,
        "S2": str(rep.S2),
        "d": str(rep.d),
        "d1": str(rep.d1),
        "d2": str(rep.d2),
        "numerator": str(num),
        "divisor": str(den),
        "value": rep.exact_str(),
        "approx_bits": rep.approx_bits,
    }
    write_output(dumps_json([rec]), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    res = verify.run_suite(args.qmax)
    if not res.primes:
        warn(f"no primes q = 5 (mod 8) with q <= {args.qmax}; nothing was checked")
    rec = {
        "qmax": args.qmax,
        "primes": res.primes,
        "checks": res.checks,
        "ok": res.ok,
        "failures": [
            {"q": f.q, "identity": f.identity, "detail": f.detail, "indices": list(f.indices)}
            for f in res.failures
        ],
    }
    for f in res.failures:
        error(f"q={f.q} {f.identity} failed at {f.indices}: {f.detail}")
    write_output(dumps_json([rec]), args.out)
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_scan(args) -> int:
    rows = [scan_row(v) for v in adic.scan(args.qmax)]
    text = dumps_csv(rows) if args.format == "csv" else dumps_json(rows)
    write_output(text, args.out)
    bad = [r for r in rows if not r["agree"]]
    for r in bad:
        error(f"q={r['q']} ({r['triple']}) tilde={r['tilde']}: "
              f"predicted d={r['predicted_d']}, observed d={r['d']}")
    return EXIT_FAIL if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dhm", description="DHM sequences and their 2-adic complexity.")
    sub = ap.add_subparsers(dest="command", required=True)

    def seq_args(p):
        p.add_argument("--q", type=int, required=True, help="prime q = 5 (mod 8)")
        p.add_argument("--ijl", type=parse_triple_arg, required=True, help="class triple, e.g. 1,0,3")
        p.add_argument("--tilde", action="store_true", help="force bit 0 to 1")
        p.add_argument("--theta", type=int, default=None, help="primitive root to label classes with")
        p.add_argument("--out", default=None, help="output file (default stdout)")

    seq_args(sub.add_parser("gen", help="print one period of a sequence"))
    seq_args(sub.add_parser("autocorr", help="periodic autocorrelation spectrum"))
    seq_args(sub.add_parser("c2", help="exact 2-adic complexity"))

    p = sub.add_parser("verify", help="check every algebraic identity for q <= qmax")
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("scan", help="predicted vs observed complexity for all matched sequences")
    p.add_argument("--qmax", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)
    return ap


def parse_triple_arg(text: str):
    try:
        return parse_triple(text)
    except UsageError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


COMMANDS = {
    "gen": cmd_gen,
    "autocorr": cmd_autocorr,
    "c2": cmd_c2,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (DomainError, UsageError) as e:
        error(str(e))
        return EXIT_USAGE
    except ConsistencyError as e:
        error(str(e))
        return EXIT_FAIL
    except OSError as e:
        error(f"I/O error: {e}")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
