"""Command-line interface.

Exit codes: 0 success, 1 property failure (not synchronizable, not
aperiodic, word does not synchronize), 2 input error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from .automaton import Dfa, format_word, is_synchronizing_word, parse_dfa, parse_word, serialize_dfa
from .corpus import FAMILIES, GenSpec, SplitMix64, generate
from .errors import CapExceeded, DfaFormatError, NotAperiodicError, NotSynchronizableError
from .monoid import DEFAULT_MONOID_CAP, is_aperiodic, sinks
from .oracle import DEFAULT_ORACLE_CAP, shortest_sync_word
from .pairgraph import DEFAULT_PAIR_CAP, has_pair_sink
from .synthesis import certificate_to_text, greedy_synchronize, synchronize_aperiodic

EXIT_OK, EXIT_PROPERTY, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

BENCH_COLUMNS = (
    "seed", "n", "k", "aperiodic", "synchronizable",
    "oracle_len", "synth_len", "bound", "bound_ok",
)


class InputError(Exception):
    pass


def _yn(flag) -> str:
    return "yes" if flag else "no"


def _read_dfa(path: str) -> Dfa:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    try:
        return parse_dfa(text)
    except DfaFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _tsv(header, rows) -> str:
    out = ["\t".join(header)]
    out += ["\t".join(str(x) for x in row) for row in rows]
    return "\n".join(out) + "\n"


def cmd_analyze(args) -> int:
    dfa = _read_dfa(args.file)
    sink = sinks(dfa)
    sync = has_pair_sink(dfa, args.pair_cap)
    capped = False
    try:
        ap = is_aperiodic(dfa, args.monoid_cap)
    except CapExceeded:
        ap, capped = None, True
    if ap is None:
        aperiodic, size = "unknown", "capped"
    elif ap:
        aperiodic, size = "yes", str(ap.monoid_size)
    else:
        w = format_word(ap.witness_word, dfa.k)
        aperiodic = f"no (witness {w}, period {ap.witness.period})"
        size = str(ap.monoid_size)
    fields = [
        ("n", dfa.n),
        ("k", dfa.k),
        ("sinks", " ".join(map(str, sorted(sink))) or "none"),
        ("strongly_connected", _yn(len(sink) == dfa.n)),
        ("synchronizable", _yn(sync)),
        ("aperiodic", aperiodic),
        ("monoid_size", size),
    ]
    if args.format == "tsv":
        sys.stdout.write(_tsv([k for k, _ in fields], [[v for _, v in fields]]))
    else:
        for key, value in fields:
            print(f"{key}: {value}")
    if capped:
        print(f"monoid enumeration hit --monoid-cap {args.monoid_cap}", file=sys.stderr)
        return EXIT_CAP
    return EXIT_OK


def _emit_certificate(cert, dfa, fmt):
    if fmt == "tsv":
        header = ("word", "length", "bound_kind", "bound", "bound_ok", "verified")
        row = (
            format_word(cert.word, dfa.k), len(cert.word), cert.bound_kind,
            "-" if cert.bound is None else cert.bound,
            "-" if cert.bound_ok is None else _yn(cert.bound_ok), _yn(cert.verified),
        )
        sys.stdout.write(_tsv(header, [row]))
    else:
        sys.stdout.write(certificate_to_text(cert, dfa.k))


def cmd_synthesize(args) -> int:
    dfa = _read_dfa(args.file)
    if not has_pair_sink(dfa, args.pair_cap):
        print("not synchronizable")
        return EXIT_PROPERTY
    try:
        ap = is_aperiodic(dfa, args.monoid_cap)
    except CapExceeded:
        ap = None
        print("monoid cap reached; aperiodicity not verified", file=sys.stderr)
    if ap is not None and not ap:
        w = format_word(ap.witness_word, dfa.k)
        print(f"not aperiodic: witness {w}, period {ap.witness.period}", file=sys.stderr)
    cert = None
    try:
        cert = synchronize_aperiodic(dfa, pair_cap=args.pair_cap)
    except NotAperiodicError as exc:
        print(f"t-cycle: {' '.join(map(str, exc.cycle))}")
        ap = False
    except NotSynchronizableError as exc:
        print(f"not synchronizable: {exc}")
        return EXIT_PROPERTY
    if ap is not None and not ap:
        print("falling back to greedy pair merging", file=sys.stderr)
        _emit_certificate(greedy_synchronize(dfa, args.pair_cap), dfa, args.format)
        return EXIT_PROPERTY
    _emit_certificate(cert, dfa, args.format)
    return EXIT_OK if cert.verified and cert.bound_ok else EXIT_PROPERTY


def cmd_shortest(args) -> int:
    dfa = _read_dfa(args.file)
    res = shortest_sync_word(dfa, args.oracle_cap)
    if res.word is None:
        print("word: none")
        print(f"explored: {res.explored}")
        return EXIT_PROPERTY
    if args.format == "tsv":
        sys.stdout.write(_tsv(("word", "length", "explored"),
                              [(format_word(res.word, dfa.k), len(res.word), res.explored)]))
    else:
        print(f"word: {format_word(res.word, dfa.k)}")
        print(f"length: {len(res.word)}")
        print(f"explored: {res.explored}")
    return EXIT_OK


def cmd_check(args) -> int:
    dfa = _read_dfa(args.file)
    try:
        word = parse_word(args.word, dfa.k)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if is_synchronizing_word(dfa, word):
        print("synchronizes")
        return EXIT_OK
    print("does not synchronize")
    return EXIT_PROPERTY


def cmd_gen(args) -> int:
    try:
        spec = GenSpec(args.family, args.n, args.k, args.seed, args.max_tries)
        dfa = generate(spec)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if dfa is None:
        print(f"no aperiodic sample in {args.max_tries} tries", file=sys.stderr)
        return EXIT_PROPERTY
    sys.stdout.write(serialize_dfa(dfa))
    return EXIT_OK


def bench_row(spec: GenSpec, monoid_cap: int, pair_cap: int, oracle_cap: int) -> tuple:
    dfa = generate(spec)
    if dfa is None:
        return (spec.seed, spec.n, spec.k, "none", "-", -1, -1, "-", "-")
    try:
        aperiodic = "yes" if is_aperiodic(dfa, monoid_cap) else "no"
    except CapExceeded:
        aperiodic = "capped"
    sync = has_pair_sink(dfa, pair_cap)
    oracle_len = -1
    if sync and dfa.n <= oracle_cap:
        oracle_len = len(shortest_sync_word(dfa, oracle_cap).word)
    synth_len, bound, bound_ok = -1, dfa.n * (dfa.n - 1) // 2, "-"
    if sync and aperiodic == "yes":
        cert = synchronize_aperiodic(dfa, pair_cap=pair_cap)
        synth_len = len(cert.word)
        bound_ok = _yn(cert.verified and cert.bound_ok)
    return (spec.seed, dfa.n, dfa.k, aperiodic, _yn(sync), oracle_len, synth_len, bound, bound_ok)


def bench_specs(args) -> list[GenSpec]:
    rng = SplitMix64(args.seed)
    specs = []
    for _ in range(args.count):
        seed = rng.next()
        n = args.n_min + rng.below(args.n_max - args.n_min + 1)
        k = args.k_min + rng.below(args.k_max - args.k_min + 1)
        specs.append(GenSpec(args.family, n, k, seed, args.max_tries))
    return specs


def cmd_bench(args) -> int:
    if args.n_min > args.n_max or args.k_min > args.k_max:
        raise InputError("empty n or k range")
    try:
        specs = bench_specs(args)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    caps = (args.monoid_cap, args.pair_cap, args.oracle_cap)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(bench_row, specs, *([c] * len(specs) for c in caps)))
    else:
        rows = [bench_row(s, *caps) for s in specs]
    sys.stdout.write(_tsv(BENCH_COLUMNS, rows))
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--monoid-cap", type=_positive, default=DEFAULT_MONOID_CAP)
    common.add_argument("--pair-cap", type=_positive, default=DEFAULT_PAIR_CAP)
    common.add_argument("--oracle-cap", type=_positive, default=DEFAULT_ORACLE_CAP)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("human", "tsv"), default="human")

    parser = argparse.ArgumentParser(
        prog="aperiodic-sync",
        description="Synchronizing words for aperiodic automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="sinks, synchronizability, aperiodicity")
    p.add_argument("file", help="automaton file, or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("synthesize", parents=[common], help="construct a certified synchronizing word")
    p.add_argument("file")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("shortest", parents=[common], help="exact shortest synchronizing word")
    p.add_argument("file")
    p.set_defaults(func=cmd_shortest)

    p = sub.add_parser("check", parents=[common], help="test whether a word synchronizes")
    p.add_argument("file")
    p.add_argument("word", help="letters a-z, or 'l0 l1 ...' when k > 26")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", parents=[common], help="generate an automaton file")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive, default=2)
    p.add_argument("--max-tries", type=_positive, default=1000)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common], help="TSV benchmark over a seeded corpus")
    p.add_argument("--family", choices=FAMILIES, default="monotone")
    p.add_argument("--count", type=_positive, default=100)
    p.add_argument("--n-min", type=_positive, default=2)
    p.add_argument("--n-max", type=_positive, default=8)
    p.add_argument("--k-min", type=_positive, default=2)
    p.add_argument("--k-max", type=_positive, default=3)
    p.add_argument("--max-tries", type=_positive, default=1000)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
