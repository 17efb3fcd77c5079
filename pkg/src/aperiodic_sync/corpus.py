"""Seeded automaton families for tests and benchmarks.

All randomness comes from SplitMix64 so a ``GenSpec`` names one automaton
independently of platform or Python version.

Stepping order:

* ``random``: one draw per table entry, letter-major then state; entry is
  ``draw % n``.
* ``monotone``: one draw per letter; the draw modulo ``C(2n-1, n)`` is
  unranked (lexicographic order) into an ``n``-subset ``c_0 < ... < c_{n-1}``
  of ``[0, 2n-1)``, and the letter maps ``i -> c_i - i``.  This is the
  stars-and-bars bijection onto nondecreasing maps.
* ``aperiodic_rejection``: one stream; each try consumes the ``n*k`` draws of
  a ``random`` table.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .automaton import Dfa
from .errors import CapExceeded
from .monoid import DEFAULT_MONOID_CAP, is_aperiodic

MASK64 = (1 << 64) - 1
FAMILIES = ("cerny", "random", "monotone", "aperiodic_rejection")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next() % bound


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    k: int = 2
    seed: int = 0
    max_tries: int = 1000

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.max_tries < 1:
            raise ValueError("max_tries must be positive")


def cerny(n: int) -> Dfa:
    """``a`` rotates ``q -> q+1 mod n``; ``b`` sends 0 to 1 and fixes the rest."""
    if n < 2:
        raise ValueError("Cerny automata need n >= 2")
    a = [(q + 1) % n for q in range(n)]
    b = [1] + list(range(1, n))
    return Dfa.from_rows([a, b])


def _random_table(rng: SplitMix64, n: int, k: int) -> Dfa:
    return Dfa.from_rows([[rng.below(n) for _ in range(n)] for _ in range(k)])


def random_dfa(spec: GenSpec) -> Dfa:
    return _random_table(SplitMix64(spec.seed), spec.n, spec.k)


def unrank_combination(rank: int, size: int, m: int) -> list[int]:
    """The ``rank``-th ``m``-subset of ``range(size)`` in lexicographic order."""
    out = []
    x = 0
    for remaining in range(m, 0, -1):
        while True:
            c = comb(size - x - 1, remaining - 1)
            if rank < c:
                break
            rank -= c
            x += 1
        out.append(x)
        x += 1
    return out


def random_monotone_map(rng: SplitMix64, n: int) -> list[int]:
    subset = unrank_combination(rng.below(comb(2 * n - 1, n)), 2 * n - 1, n)
    return [c - i for i, c in enumerate(subset)]


def random_monotone_dfa(spec: GenSpec) -> Dfa:
    rng = SplitMix64(spec.seed)
    return Dfa.from_rows([random_monotone_map(rng, spec.n) for _ in range(spec.k)])


def random_aperiodic_dfa(spec: GenSpec, monoid_cap: int = DEFAULT_MONOID_CAP) -> Dfa | None:
    """Rejection-sample random tables until one is aperiodic.

    Samples whose semigroup outgrows ``monoid_cap`` count as rejected.
    """
    rng = SplitMix64(spec.seed)
    for _ in range(spec.max_tries):
        dfa = _random_table(rng, spec.n, spec.k)
        try:
            if is_aperiodic(dfa, monoid_cap, early_exit=True):
                return dfa
        except CapExceeded:
            continue
    return None


def generate(spec: GenSpec) -> Dfa | None:
    if spec.family == "cerny":
        return cerny(spec.n)
    if spec.family == "random":
        return random_dfa(spec)
    if spec.family == "monotone":
        return random_monotone_dfa(spec)
    return random_aperiodic_dfa(spec)
