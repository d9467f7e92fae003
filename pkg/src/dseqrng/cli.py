"""dseqrng command line.

Exit statuses: 0 success, 1 validation error, 2 I/O error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import sys
from itertools import islice

from . import analysis, recursive, verify
from .dsequence import DSeqConfig, iter_dseq
from .encoding import ENCODINGS, decode, encode_chunks
from .errors import DSeqError, EmptyInputError
from .kak import KakIndexConfig, KakPowerConfig, iter_kak_index, iter_kak_power
from .recursive import RecursiveConfig

EXIT_OK, EXIT_INVALID, EXIT_IO, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(DSeqError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def int_list(text):
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _write_stream(bits, encoding, out):
    for chunk in encode_chunks(bits, encoding):
        out.write(chunk)
    out.flush()


def _out():
    return sys.stdout.buffer


def cmd_dseq(args):
    cfg = DSeqConfig(args.prime, args.base, args.start_index)
    digits = islice(iter_dseq(cfg), args.length)
    if cfg.base == 2:
        _write_stream(digits, args.encoding, _out())
    else:
        if args.encoding != "ascii01":
            raise UsageError("only ascii01 output is available for base > 2")
        # digits >= 10 are comma separated
        sep = "" if cfg.base <= 10 else ","
        _out().write((sep.join(map(str, digits)) + "\n").encode())
    return EXIT_OK


def cmd_kak_index(args):
    cfg = KakIndexConfig(tuple(args.primes))
    _write_stream(islice(iter_kak_index(cfg, args.start_index), args.length), args.encoding, _out())
    return EXIT_OK


def cmd_kak_power(args):
    cfg = KakPowerConfig(args.seed, tuple(args.moduli), args.enforce_bbs)
    _write_stream(islice(iter_kak_power(cfg), args.length), args.encoding, _out())
    return EXIT_OK


def _recursive_cfg(args, u=1):
    return RecursiveConfig(args.seed, tuple(args.inner), tuple(args.outer), u, args.w)


def cmd_recursive(args):
    cfg = _recursive_cfg(args, args.u)
    n = cfg.length
    if args.length is not None:
        if args.length > n:
            raise UsageError(f"--length {args.length} exceeds w*u = {n}")
        n = args.length
    _write_stream(islice(recursive.iter_bits(cfg), n), args.encoding, _out())
    return EXIT_OK


def format_report(cfg, report, measure=None):
    lines = [
        f"seed={cfg.seed}",
        "inner_primes=" + ",".join(map(str, cfg.inner_primes)),
        "outer_primes=" + ",".join(map(str, cfg.outer_primes)),
        f"t={report.inner_period}",
        f"w={report.w}",
        f"m={len(cfg.outer_primes)}",
        "seedset=" + ",".join(map(str, report.seedset)),
    ]
    for p, prim in zip(cfg.inner_primes, report.seed_primitivity):
        lines.append(f"seed_primitive[{p}]={str(prim).lower()}")
    for q, row in enumerate(report.order_matrix, 1):
        for r, v in enumerate(row, 1):
            lines.append(f"order[{q}][{r}]={v}")
    for p, v in zip(cfg.outer_primes, report.per_prime_lcm):
        lines.append(f"per_prime_lcm[{p}]={v}")
    lines.append(f"outer_period={report.outer_period}")
    lines.append(f"total_period={report.total_period}")
    measured = None
    if measure is not None:
        predicted = report.total_period
        measured = recursive.measure_period(cfg, measure)
        lines.append(f"measure_window={measure}")
        lines.append(f"measured_period={measured if measured is not None else 'none'}")
        if predicted <= measure // 2:
            verdict = "AGREE" if measured == predicted else "DISAGREE"
        elif measured is not None and predicted % measured:
            verdict = "DISAGREE"
        else:
            verdict = "INCONCLUSIVE"
            holds = recursive.check_divisor_periods(cfg, measure, predicted)
            for d, ok in holds.items():
                lines.append(f"divisor_holds[{d}]={str(ok).lower()}")
        lines.append(f"verdict={verdict}")
    ref = verify.reference_period(cfg)
    if ref is not None:
        lines.append(f"reference_period={ref}")
        note = verify.reference_note(cfg, report.total_period, measured)
        if note:
            lines.append(f"reference_note={note}")
    return "\n".join(lines) + "\n"


def cmd_period(args):
    cfg = _recursive_cfg(args)
    if args.measure is not None and args.measure < 2:
        raise UsageError("--measure needs at least 2 bits")
    report = recursive.predict_period(cfg)
    _out().write(format_report(cfg, report, args.measure).encode())
    return EXIT_OK


def cmd_autocorr(args):
    if args.input in (None, "-"):
        data = sys.stdin.buffer.read()
    else:
        with open(args.input, "rb") as fh:
            data = fh.read()
    bits = decode(data, args.input_encoding, args.bits)
    if not bits:
        raise EmptyInputError("input contains no bits")
    if args.window is not None:
        n = min(args.window, len(bits))
    else:
        n = analysis.analysis_window(None, len(bits))
    seq = analysis.to_bipolar(bits[:n])
    fn = analysis.circular_autocorr if args.mode == "circular" else analysis.linear_autocorr
    series = fn(seq, args.max_lag)
    out = _out()
    out.write(b"lag,value\n")
    out.write("".join(f"{lag},{v}\n" for lag, v in series.entries).encode())
    return EXIT_OK


def cmd_verify(args):
    checks = verify.run_checks()
    out = _out()
    for c in checks:
        out.write((c.line() + "\n").encode())
    failed = sum(not c.passed for c in checks)
    out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n".encode())
    return EXIT_OK if not failed else EXIT_VERIFY


def build_parser():
    p = _Parser(prog="dseqrng", description="d-sequence random bit generators")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def encoding_opt(sp):
        sp.add_argument("--encoding", choices=ENCODINGS, default="ascii01")

    sp = sub.add_parser("dseq", help="plain d-sequence digits")
    sp.add_argument("--prime", type=int, required=True)
    sp.add_argument("--base", type=int, default=2)
    sp.add_argument("--length", type=positive, required=True)
    sp.add_argument("--start-index", type=positive, default=1)
    encoding_opt(sp)
    sp.set_defaults(func=cmd_dseq)

    sp = sub.add_parser("kak-index", help="XOR of binary d-sequences over several primes")
    sp.add_argument("--primes", type=int_list, required=True)
    sp.add_argument("--length", type=positive, required=True)
    sp.add_argument("--start-index", type=positive, default=1)
    encoding_opt(sp)
    sp.set_defaults(func=cmd_kak_index)

    sp = sub.add_parser("kak-power", help="iterated-squaring XOR generator")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--moduli", type=int_list, required=True)
    sp.add_argument("--length", type=positive, required=True)
    sp.add_argument("--enforce-bbs", action="store_true",
                    help="require every prime factor to be 3 mod 4")
    encoding_opt(sp)
    sp.set_defaults(func=cmd_kak_power)

    def recursive_opts(sp):
        sp.add_argument("--seed", type=int, required=True)
        sp.add_argument("--inner", type=int_list, required=True)
        sp.add_argument("--outer", type=int_list, required=True)
        sp.add_argument("--w", type=positive, default=None, help="SeedSet size (default: full period)")

    sp = sub.add_parser("recursive", help="recursive two-loop generator")
    recursive_opts(sp)
    sp.add_argument("--u", type=positive, required=True, help="outer iterations")
    sp.add_argument("--length", type=positive, default=None)
    encoding_opt(sp)
    sp.set_defaults(func=cmd_recursive)

    sp = sub.add_parser("period", help="predicted (and optionally measured) period report")
    recursive_opts(sp)
    sp.add_argument("--measure", type=int, default=None, metavar="MAX_BITS")
    sp.set_defaults(func=cmd_period)

    sp = sub.add_parser("autocorr", help="unnormalized autocorrelation as CSV")
    sp.add_argument("input", nargs="?", default=None)
    sp.add_argument("--mode", choices=("circular", "linear"), default="circular")
    sp.add_argument("--max-lag", type=int, default=None)
    sp.add_argument("--window", type=positive, default=None)
    sp.add_argument("--input-encoding", choices=ENCODINGS, default="ascii01")
    sp.add_argument("--bits", type=positive, default=None, help="trim decoded input to this many bits")
    sp.set_defaults(func=cmd_autocorr)

    sp = sub.add_parser("verify", help="reproduce the worked examples")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except DSeqError as exc:
        print(f"dseqrng: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"dseqrng: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
