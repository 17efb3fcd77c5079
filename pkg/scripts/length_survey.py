"""Average synthesized vs. shortest word length per state count.

    python scripts/length_survey.py --family monotone --per-n 200 --n-max 10

Prints a TSV with one row per n: samples, synchronizable count, mean oracle
length, mean synthesized length, max synthesized length and the bound.
"""

import argparse
import sys
from statistics import mean

from aperiodic_sync.corpus import GenSpec, SplitMix64, random_aperiodic_dfa, random_monotone_dfa
from aperiodic_sync.oracle import shortest_sync_word
from aperiodic_sync.pairgraph import has_pair_sink
from aperiodic_sync.synthesis import synchronize_aperiodic


def sample(family, n, k, seed):
    if family == "monotone":
        return random_monotone_dfa(GenSpec("monotone", n, k, seed))
    return random_aperiodic_dfa(GenSpec("aperiodic_rejection", n, k, seed, max_tries=300), 20000)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=("monotone", "aperiodic_rejection"), default="monotone")
    ap.add_argument("--per-n", type=int, default=100)
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = SplitMix64(args.seed)
    print("n\tsamples\tsynchronizable\tmean_oracle\tmean_synth\tmax_synth\tbound")
    for n in range(args.n_min, args.n_max + 1):
        oracle, synth = [], []
        samples = 0
        for _ in range(args.per_n):
            dfa = sample(args.family, n, args.k, rng.next())
            if dfa is None:
                continue
            samples += 1
            if not has_pair_sink(dfa):
                continue
            cert = synchronize_aperiodic(dfa)
            synth.append(len(cert.word))
            if n <= 16:
                oracle.append(len(shortest_sync_word(dfa).word))
        fmt = lambda xs: f"{mean(xs):.2f}" if xs else "-"  # noqa: E731
        print(f"{n}\t{samples}\t{len(synth)}\t{fmt(oracle)}\t{fmt(synth)}\t"
              f"{max(synth, default='-')}\t{n * (n - 1) // 2}")
        sys.stdout.flush()


if __name__ == "__main__":
    main()
