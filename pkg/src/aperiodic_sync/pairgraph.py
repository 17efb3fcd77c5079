"""The direct square of the transition graph.

Vertex ``p*n + q`` stands for the ordered pair ``(p, q)``; letter ``a`` sends
it to ``(p.a, q.a)``.  The diagonal ``p == q`` is closed under every letter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import Dfa, Word
from .errors import CapExceeded
from .graphs import Condensation, shortest_word, strongly_connected_components, universal_sinks

DEFAULT_PAIR_CAP = 4_000_000


@dataclass(frozen=True)
class PairGraph:
    n: int
    succ: tuple[tuple[int, ...], ...]

    @property
    def num_vertices(self) -> int:
        return self.n * self.n

    def vertex(self, p: int, q: int) -> int:
        return p * self.n + q

    def pair(self, v: int) -> tuple[int, int]:
        return divmod(v, self.n)

    def is_diagonal(self, v: int) -> bool:
        p, q = divmod(v, self.n)
        return p == q


@dataclass(frozen=True)
class AlmostMinimalScc:
    pairs: frozenset  # of (p, q) tuples, p != q

    @property
    def support(self) -> frozenset:
        return frozenset(x for pair in self.pairs for x in pair)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


def build_pair_graph(dfa: Dfa, cap: int = DEFAULT_PAIR_CAP) -> PairGraph:
    n = dfa.n
    if n * n > cap:
        raise CapExceeded("pair graph vertices", cap, n * n)
    succ = []
    for row in dfa.delta:
        scaled = [row[p] * n for p in range(n)]
        succ.append(tuple(scaled[p] + row[q] for p in range(n) for q in range(n)))
    return PairGraph(n, tuple(succ))


def scc_condensation(graph: PairGraph) -> Condensation:
    return strongly_connected_components(graph.num_vertices, graph.succ)


def has_pair_sink(dfa: Dfa, cap: int = DEFAULT_PAIR_CAP) -> bool:
    graph = build_pair_graph(dfa, cap)
    return bool(universal_sinks(graph.num_vertices, graph.succ))


def merge_word(dfa: Dfa, p: int, q: int, graph: PairGraph | None = None) -> Word | None:
    """Shortest word sending ``p`` and ``q`` to the same state, if any."""
    graph = graph or build_pair_graph(dfa)
    return shortest_word(graph.succ, graph.vertex(p, q), graph.is_diagonal)


def find_almost_minimal_scc(
    dfa: Dfa, graph: PairGraph | None = None
) -> AlmostMinimalScc | None:
    """Off-diagonal SCC closed under every non-collapsing transition.

    Edges into the diagonal are dropped; an off-diagonal SCC qualifies when no
    remaining edge leaves it.  Among qualifying SCCs the one holding the
    smallest vertex id is returned.
    """
    graph = graph or build_pair_graph(dfa)
    n = graph.n
    if n < 2:
        return None
    off = [v for v in range(graph.num_vertices) if not graph.is_diagonal(v)]
    index = {v: i for i, v in enumerate(off)}
    # collapsing edges become self-loops, which never affect SCC structure
    sub = [
        [index[row[v]] if row[v] in index else i for i, v in enumerate(off)]
        for row in graph.succ
    ]
    cond = strongly_connected_components(len(off), sub)
    for c, members in enumerate(cond.members):
        if not cond.dag[c]:
            return AlmostMinimalScc(frozenset(graph.pair(off[i]) for i in members))
    return None
