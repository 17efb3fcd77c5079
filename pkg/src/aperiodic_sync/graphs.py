"""Graph routines over letter-labelled successor tables.

A graph on vertices ``0..N-1`` is given as a list of successor rows,
``succ[a][v]`` being the target of ``v`` along the edge labelled ``a``.  This
is the shape of both the transition graph and its direct square.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Sequence


@dataclass(frozen=True)
class Condensation:
    comp: tuple[int, ...]  # vertex -> component id
    members: tuple[tuple[int, ...], ...]  # component id -> sorted vertices
    dag: tuple[frozenset, ...]  # component id -> successor component ids

    def terminal(self) -> list[int]:
        return [c for c, out in enumerate(self.dag) if not out]

    def topological_order(self) -> list[int]:
        """Component ids with every edge going from earlier to later."""
        indeg = [0] * len(self.members)
        for out in self.dag:
            for d in out:
                indeg[d] += 1
        ready = [c for c, d in enumerate(indeg) if d == 0]
        order = []
        while ready:
            ready.sort(reverse=True)
            c = ready.pop()
            order.append(c)
            for d in self.dag[c]:
                indeg[d] -= 1
                if indeg[d] == 0:
                    ready.append(d)
        return order


def strongly_connected_components(
    num_vertices: int, succ: Sequence[Sequence[int]]
) -> Condensation:
    """Iterative Tarjan.  Component ids are ordered by smallest member."""
    index = [-1] * num_vertices
    low = [0] * num_vertices
    on_stack = [False] * num_vertices
    stack: list[int] = []
    raw: list[list[int]] = []
    label = [-1] * num_vertices
    counter = 0
    k = len(succ)
    for root in range(num_vertices):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]
        while work:
            v, i = work[-1]
            if i < k:
                work[-1] = (v, i + 1)
                w = succ[i][v]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                group = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    label[w] = len(raw)
                    group.append(w)
                    if w == v:
                        break
                raw.append(group)
    # renumber by smallest member for deterministic ids
    order = sorted(range(len(raw)), key=lambda c: min(raw[c]))
    renum = {old: new for new, old in enumerate(order)}
    comp = tuple(renum[label[v]] for v in range(num_vertices))
    members = tuple(tuple(sorted(raw[old])) for old in order)
    dag: list[set] = [set() for _ in members]
    for row in succ:
        for v, w in enumerate(row):
            cv, cw = comp[v], comp[w]
            if cv != cw:
                dag[cv].add(cw)
    return Condensation(comp, members, tuple(frozenset(d) for d in dag))


def universal_sinks(num_vertices: int, succ: Sequence[Sequence[int]]) -> frozenset:
    """Vertices reachable from every vertex."""
    cond = strongly_connected_components(num_vertices, succ)
    terminal = cond.terminal()
    if len(terminal) != 1:
        return frozenset()
    return frozenset(cond.members[terminal[0]])


def shortest_word(
    succ: Sequence[Sequence[int]],
    start: int,
    is_target: Callable[[int], bool],
) -> tuple[int, ...] | None:
    """Shortest label sequence from ``start`` to a target vertex.

    Breadth-first with letters tried in increasing order, so among the
    shortest words the lexicographically smallest one is returned.
    """
    if is_target(start):
        return ()
    parent = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for a, row in enumerate(succ):
            w = row[v]
            if w in parent:
                continue
            parent[w] = (v, a)
            if is_target(w):
                word = []
                while parent[w] is not None:
                    w, letter = parent[w]
                    word.append(letter)
                return tuple(reversed(word))
            queue.append(w)
    return None
