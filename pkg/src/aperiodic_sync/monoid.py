"""Transition semigroup enumeration, aperiodicity and sinks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from operator import itemgetter

from .automaton import Dfa, Transformation, Word, compose
from .errors import CapExceeded
from .graphs import universal_sinks

DEFAULT_MONOID_CAP = 1_000_000


@dataclass(frozen=True)
class Monoid:
    """Elements induced by nonempty words, in breadth-first discovery order.

    ``witness[t]`` is the shortest (then lexicographically smallest) word
    inducing ``t``.  The identity is present only if some nonempty word
    induces it.
    """

    generators: tuple[Transformation, ...]
    elements: tuple[Transformation, ...]
    witness: dict

    def __len__(self):
        return len(self.elements)

    def __contains__(self, t):
        return t in self.witness


@dataclass(frozen=True)
class IndexPeriod:
    index: int
    period: int


@dataclass(frozen=True)
class Aperiodicity:
    aperiodic: bool
    monoid_size: int
    witness_word: Word | None = None
    witness: IndexPeriod | None = None

    def __bool__(self):
        return self.aperiodic


def _closure(dfa: Dfa, cap: int):
    """Yield ``(element, witness)`` in breadth-first order."""
    if cap < dfa.k:
        raise ValueError(f"cap {cap} is smaller than the alphabet size {dfa.k}")
    gens = dfa.delta
    # itemgetter(*t)(g) is g[t[0]], g[t[1]], ...: the map t then g
    if dfa.n == 1:
        steps = [lambda t, g=g: (g[t[0]],) for g in gens]
    else:
        steps = [lambda t, g=g: itemgetter(*t)(g) for g in gens]
    witness: dict = {}
    queue: deque = deque()
    for a, g in enumerate(gens):
        if g not in witness:
            witness[g] = (a,)
            queue.append(g)
            yield g, (a,)
    while queue:
        t = queue.popleft()
        w = witness[t]
        for a, step in enumerate(steps):
            u = step(t)
            if u in witness:
                continue
            if len(witness) >= cap:
                raise CapExceeded("monoid size", cap, len(witness) + 1)
            witness[u] = w + (a,)
            queue.append(u)
            yield u, witness[u]


def transition_monoid(dfa: Dfa, cap: int = DEFAULT_MONOID_CAP) -> Monoid:
    witness = dict(_closure(dfa, cap))
    return Monoid(tuple(dfa.delta), tuple(witness), witness)


def index_period(t: Transformation) -> IndexPeriod:
    seen = {}
    power, i = t, 1
    while power not in seen:
        seen[power] = i
        power = compose(power, t)
        i += 1
    first = seen[power]
    return IndexPeriod(first, i - first)


def is_aperiodic(
    dfa: Dfa, cap: int = DEFAULT_MONOID_CAP, *, early_exit: bool = False
) -> Aperiodicity:
    """Every element of the semigroup must have period 1.

    On failure the first element in breadth-first order with a nontrivial
    period is returned as witness, which is a shortest such word.  With
    ``early_exit`` enumeration stops at that witness, and ``monoid_size``
    only counts the elements seen so far.
    """
    failure = None
    size = 0
    for t, w in _closure(dfa, cap):
        size += 1
        if failure is None:
            ip = index_period(t)
            if ip.period > 1:
                failure = (w, ip)
                if early_exit:
                    break
    if failure is not None:
        return Aperiodicity(False, size, *failure)
    return Aperiodicity(True, size)


def sinks(dfa: Dfa) -> frozenset:
    """States reachable from every state."""
    return universal_sinks(dfa.n, dfa.delta)


def is_strongly_connected(dfa: Dfa) -> bool:
    return len(sinks(dfa)) == dfa.n
