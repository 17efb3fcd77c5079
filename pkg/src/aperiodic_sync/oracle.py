"""Exact shortest synchronizing words by search over subsets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automaton import Dfa, Word, is_synchronizing_word
from .errors import CapExceeded
from .pairgraph import DEFAULT_PAIR_CAP, has_pair_sink

DEFAULT_ORACLE_CAP = 16


@dataclass(frozen=True)
class OracleResult:
    word: Word | None
    explored: int
    capped: bool = False


def _image_table(dfa: Dfa) -> list[list[int]]:
    """Per letter, the image mask of every subset mask (built incrementally)."""
    size = 1 << dfa.n
    tables = []
    for row in dfa.delta:
        img = [0] * size
        for mask in range(1, size):
            low = mask & -mask
            img[mask] = img[mask ^ low] | 1 << row[low.bit_length() - 1]
        tables.append(img)
    return tables


def shortest_sync_word(dfa: Dfa, max_states: int = DEFAULT_ORACLE_CAP) -> OracleResult:
    """Breadth-first search from the full set down to a singleton.

    Letters are expanded in index order, so the word found is the
    lexicographically smallest among the shortest ones.
    """
    if dfa.n > max_states:
        raise CapExceeded("oracle state count", max_states, dfa.n)
    full = (1 << dfa.n) - 1
    if dfa.n == 1:
        return OracleResult((), 1)
    tables = _image_table(dfa)
    parent: dict = {full: None}
    queue = deque([full])
    while queue:
        mask = queue.popleft()
        for a, img in enumerate(tables):
            nxt = img[mask]
            if nxt in parent:
                continue
            parent[nxt] = (mask, a)
            if nxt & (nxt - 1) == 0:
                word = []
                while parent[nxt] is not None:
                    nxt, letter = parent[nxt]
                    word.append(letter)
                return OracleResult(tuple(reversed(word)), len(parent))
            queue.append(nxt)
    return OracleResult(None, len(parent))


def is_synchronizable(dfa: Dfa, pair_cap: int = DEFAULT_PAIR_CAP) -> bool:
    return has_pair_sink(dfa, pair_cap)


def verify_bound(dfa: Dfa, cert) -> bool:
    """Does the certificate's word synchronize within ``n(n-1)/2`` letters?"""
    return len(cert.word) <= dfa.n * (dfa.n - 1) // 2 and is_synchronizing_word(dfa, cert.word)
