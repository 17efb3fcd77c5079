"""Order and congruence induced by an almost minimal SCC, and quotients.

Relations are stored as one integer bitmask per state: bit ``q`` of
``rows[p]`` is set when ``p`` is related to ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import Dfa
from .errors import NotCongruenceError
from .pairgraph import AlmostMinimalScc


@dataclass(frozen=True)
class StateRelation:
    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "StateRelation":
        rows = [0] * n
        for p, q in pairs:
            rows[p] |= 1 << q
        return cls(n, tuple(rows))

    def __contains__(self, pair) -> bool:
        p, q = pair
        return bool(self.rows[p] >> q & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(p, q) for p in range(self.n) for q in range(self.n) if self.rows[p] >> q & 1]

    def converse(self) -> "StateRelation":
        return StateRelation.from_pairs(self.n, ((q, p) for p, q in self.pairs()))

    def is_reflexive(self) -> bool:
        return all(self.rows[p] >> p & 1 for p in range(self.n))

    def is_irreflexive(self) -> bool:
        return not any(self.rows[p] >> p & 1 for p in range(self.n))

    def is_transitive(self) -> bool:
        for p in range(self.n):
            for q in _bits(self.rows[p]):
                if self.rows[q] & ~self.rows[p]:
                    return False
        return True

    def is_symmetric(self) -> bool:
        return all((q, p) in self for p, q in self.pairs())

    def is_antisymmetric(self) -> bool:
        return all(p == q or (q, p) not in self for p, q in self.pairs())


@dataclass(frozen=True)
class Order:
    """Strict order from ``M`` and its reflexive closure."""

    strict: StateRelation
    quasi: StateRelation
    antisymmetric: bool


@dataclass(frozen=True)
class Partition:
    blocks: tuple[frozenset, ...]
    block_of: tuple[int, ...]

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        """Blocks numbered by their smallest state."""
        renum: dict = {}
        block_of = []
        for lab in labels:
            block_of.append(renum.setdefault(lab, len(renum)))
        blocks = [set() for _ in renum]
        for q, b in enumerate(block_of):
            blocks[b].add(q)
        return cls(tuple(frozenset(b) for b in blocks), tuple(block_of))

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls.from_labels(range(n))

    def __len__(self):
        return len(self.blocks)

    def block(self, q: int) -> frozenset:
        return self.blocks[self.block_of[q]]

    def as_relation(self) -> StateRelation:
        n = len(self.block_of)
        masks = [sum(1 << q for q in b) for b in self.blocks]
        return StateRelation(n, tuple(masks[self.block_of[q]] for q in range(n)))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def transitive_closure(rel: StateRelation) -> StateRelation:
    rows = list(rel.rows)
    # Warshall over bit rows
    for m in range(rel.n):
        bit = 1 << m
        row_m = rows[m]
        for p in range(rel.n):
            if rows[p] & bit:
                rows[p] |= row_m
    return StateRelation(rel.n, tuple(rows))


def order_from_scc(dfa: Dfa, scc: AlmostMinimalScc) -> Order:
    strict = transitive_closure(StateRelation.from_pairs(dfa.n, scc.pairs))
    quasi = StateRelation(dfa.n, tuple(r | 1 << p for p, r in enumerate(strict.rows)))
    return Order(strict, quasi, quasi.is_antisymmetric())


def congruence_from_scc(dfa: Dfa, scc: AlmostMinimalScc) -> Partition:
    parent = list(range(dfa.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p, q in scc.pairs:
        rp, rq = find(p), find(q)
        if rp != rq:
            parent[max(rp, rq)] = min(rp, rq)
    return Partition.from_labels(find(q) for q in range(dfa.n))


def check_stability(dfa: Dfa, rel: StateRelation) -> tuple[bool, tuple[int, int, int] | None]:
    """Is ``p ~ q`` preserved by every letter?  Returns the first failure."""
    for p, q in rel.pairs():
        for a, row in enumerate(dfa.delta):
            if (row[p], row[q]) not in rel:
                return False, (p, q, a)
    return True, None


def detect_t_cycle(dfa: Dfa, scc: AlmostMinimalScc) -> tuple[int, ...] | None:
    """A closed walk ``p1, ..., pm = p1`` along pairs of ``M``, if any.

    Depth-first search from the smallest state of the support, neighbours
    in increasing order; the first back edge found gives the cycle.
    """
    adj: dict = {}
    for p, q in sorted(scc.pairs):
        adj.setdefault(p, []).append(q)
    color = dict.fromkeys(scc.support, 0)  # 0 new, 1 on path, 2 done
    for root in sorted(scc.support):
        if color[root]:
            continue
        path = [root]
        color[root] = 1
        work = [iter(adj.get(root, ()))]
        while work:
            nxt = next(work[-1], None)
            if nxt is None:
                color[path.pop()] = 2
                work.pop()
                continue
            if color[nxt] == 1:
                start = path.index(nxt)
                return tuple(path[start:]) + (nxt,)
            if color[nxt] == 0:
                color[nxt] = 1
                path.append(nxt)
                work.append(iter(adj.get(nxt, ())))
    return None


def quotient(dfa: Dfa, part: Partition) -> tuple[Dfa, tuple[int, ...]]:
    """Automaton on the blocks of a congruence, plus the projection."""
    rows = []
    for a, row in enumerate(dfa.delta):
        qrow = [-1] * len(part)
        for q in range(dfa.n):
            b, target = part.block_of[q], part.block_of[row[q]]
            if qrow[b] == -1:
                qrow[b] = target
            elif qrow[b] != target:
                rep = min(part.blocks[b])
                raise NotCongruenceError(rep, q, a)
        rows.append(qrow)
    return Dfa.from_rows(rows), part.block_of
