"""Synchronizing-word construction for aperiodic automata.

The strongly connected case recurses on quotients by the congruence of an
almost minimal SCC; each level contributes a word that collapses one class
while walking minimal elements of the class up to its maximal ones.  Automata
that are not strongly connected first push every state into the sink
component with greedy escape words.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .automaton import Dfa, Word, apply, apply_set, format_word, induced, is_synchronizing_word, parse_word
from .congruence import (
    StateRelation,
    congruence_from_scc,
    detect_t_cycle,
    order_from_scc,
    quotient,
)
from .errors import NotAperiodicError, NotSynchronizableError, SynthesisError
from .graphs import shortest_word, strongly_connected_components
from .monoid import sinks
from .pairgraph import DEFAULT_PAIR_CAP, build_pair_graph, find_almost_minimal_scc, merge_word

BOUND_KINDS = ("class", "strongly_connected", "general", "none")


def quadratic_bound(n: int) -> int:
    return n * (n - 1) // 2


def class_bound(n: int, r: int) -> int:
    # lengths are integers, so the floor of the rational bound is exact
    return (n - r + 1) * (n - 1) // 2


@dataclass(frozen=True)
class Stage:
    label: str
    word: Word
    tag: str


@dataclass(frozen=True)
class SyncCertificate:
    word: Word
    n: int
    bound: int | None
    bound_kind: str
    stages: tuple[Stage, ...]
    verified: bool
    bound_ok: bool | None
    untrimmed_length: int | None = None

    def __len__(self):
        return len(self.word)


@dataclass(frozen=True)
class Report:
    synchronizes: bool
    length: int
    bound: int | None
    bound_kind: str
    bound_ok: bool | None
    notes: tuple[str, ...] = field(default=())


def _mask(states) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


def _strict_rows(order: StateRelation) -> list[int]:
    return [row & ~(1 << p) for p, row in enumerate(order.rows)]


def _minimal(rows: list[int], states) -> set:
    m = _mask(states)
    return {x for x in states if not rows[x] & m}


def _maximal(rows: list[int], states) -> set:
    return {x for x in states if not any(rows[y] >> x & 1 for y in states)}


def synchronize_class(
    dfa: Dfa, order: StateRelation, R, *, audit: bool = False
) -> Word:
    """Word collapsing the class ``R`` to one state.

    ``order`` is the partial order on states (reflexive or strict, the
    diagonal is ignored).  Each round takes the smallest minimal element of
    the current image and appends a shortest word carrying it into the
    maximal elements of ``R``; the number of minimal elements must drop
    every round.  With ``audit`` the intermediate set-theoretic facts the
    construction relies on are asserted as well.
    """
    R = frozenset(R)
    if not R:
        raise ValueError("class must be nonempty")
    if len(R) == 1:
        return ()
    rows = _strict_rows(order)
    top, bottom = _maximal(rows, R), _minimal(rows, R)
    if len(top) < len(bottom):
        rows = _strict_rows(StateRelation(order.n, tuple(rows)).converse())
        top, bottom = bottom, top
    word: list[int] = []
    image = R
    mins = _minimal(rows, image)
    while len(image) > 1:
        if audit and mins & _maximal(rows, image):
            raise SynthesisError(f"minimal and maximal elements overlap in {sorted(image)}")
        q = min(mins)
        step = shortest_word(dfa.delta, q, top.__contains__)
        if not step:
            raise SynthesisError(f"no nonempty path from {q} to the maximal states")
        if audit and len(step) > dfa.n - 1:
            raise SynthesisError(f"step word of length {len(step)} exceeds n-1")
        image = apply_set(dfa, image, step)
        word.extend(step)
        if len(image) == 1:
            break
        new_mins = _minimal(rows, image)
        if audit and not new_mins <= apply_set(dfa, mins, step):
            raise SynthesisError("new minimal elements are not images of old ones")
        if len(new_mins) >= len(mins):
            raise SynthesisError(
                f"minimal elements did not decrease ({len(mins)} -> {len(new_mins)})"
            )
        mins = new_mins
    return tuple(word)


def _strongly_connected_word(
    dfa: Dfa, depth: int, audit: bool, pair_cap: int
) -> tuple[Word, list[Stage]]:
    n = dfa.n
    if n == 1:
        return (), []
    graph = build_pair_graph(dfa, pair_cap)
    scc = find_almost_minimal_scc(dfa, graph)
    if scc is None:
        raise NotSynchronizableError("no almost minimal SCC in the pair graph")
    cycle = detect_t_cycle(dfa, scc)
    if cycle is not None:
        raise NotAperiodicError(cycle)
    order = order_from_scc(dfa, scc)
    part = congruence_from_scc(dfa, scc)
    r = len(part)
    if r >= n:
        raise SynthesisError("congruence is trivial")
    qdfa, _ = quotient(dfa, part)
    u, stages = _strongly_connected_word(qdfa, depth + 1, audit, pair_cap)
    R = part.blocks[apply(qdfa, 0, u)]
    v = synchronize_class(dfa, order.strict, R, audit=audit)
    if audit:
        if len(v) > class_bound(n, r):
            raise SynthesisError(f"class word {len(v)} exceeds {class_bound(n, r)}")
        if len(u) + len(v) > quadratic_bound(n):
            raise SynthesisError(f"level word {len(u) + len(v)} exceeds {quadratic_bound(n)}")
    stages.append(Stage(f"class-sync[depth={depth},n={n},r={r}]", v, "class"))
    return u + v, stages


def synchronize_strongly_connected(
    dfa: Dfa, *, audit: bool = False, pair_cap: int = DEFAULT_PAIR_CAP
) -> SyncCertificate:
    """Certificate for a strongly connected automaton.

    Aperiodicity is not checked up front; a t-cycle met on the way raises
    :class:`NotAperiodicError`.
    """
    if len(sinks(dfa)) != dfa.n:
        raise ValueError("automaton is not strongly connected")
    word, stages = _strongly_connected_word(dfa, 0, audit, pair_cap)
    bound = quadratic_bound(dfa.n)
    return SyncCertificate(
        word=word,
        n=dfa.n,
        bound=bound,
        bound_kind="strongly_connected",
        stages=tuple(stages),
        verified=is_synchronizing_word(dfa, word),
        bound_ok=len(word) <= bound,
    )


def escape_word(dfa: Dfa, component, start=None) -> Word:
    """Word moving every state of ``start`` out of ``component``.

    ``component`` must be a non-terminal SCC of the transition graph;
    ``start`` defaults to the whole component.  Greedy: repeatedly pick the
    tracked state with the shortest way out and follow it.
    """
    comp = frozenset(component)
    cond = strongly_connected_components(dfa.n, dfa.delta)
    ids = {cond.comp[q] for q in comp}
    if len(ids) != 1 or len(cond.members[ids.pop()]) != len(comp):
        raise ValueError("component is not a strongly connected component")
    c = cond.comp[next(iter(comp))]
    if not cond.dag[c]:
        raise ValueError("component is terminal; nothing escapes it")
    image = set(comp if start is None else start)
    if not image <= comp:
        raise ValueError("start states must lie in the component")
    outside = lambda x: x not in comp  # noqa: E731
    word: list[int] = []
    while image & comp:
        best = None
        for q in sorted(image & comp):
            s = shortest_word(dfa.delta, q, outside)
            if best is None or len(s) < len(best):
                best = s
        image = set(apply_set(dfa, image, best))
        word.extend(best)
    return tuple(word)


def trim_word(dfa: Dfa, stages: list[Stage]) -> list[Stage]:
    """Greedily delete letters, left to right, while the word still synchronizes."""
    letters = [(i, a) for i, st in enumerate(stages) for a in st.word]
    i = 0
    while i < len(letters):
        candidate = letters[:i] + letters[i + 1:]
        if is_synchronizing_word(dfa, [a for _, a in candidate]):
            letters = candidate
        else:
            i += 1
    return [
        replace(st, word=tuple(a for j, a in letters if j == i))
        for i, st in enumerate(stages)
    ]


def synchronize_aperiodic(
    dfa: Dfa, *, audit: bool = False, pair_cap: int = DEFAULT_PAIR_CAP
) -> SyncCertificate:
    """Certificate for an aperiodic automaton that has a sink."""
    sink = sinks(dfa)
    if not sink:
        raise NotSynchronizableError("no sink: the automaton has no synchronizing word")
    if len(sink) == dfa.n:
        return synchronize_strongly_connected(dfa, audit=audit, pair_cap=pair_cap)
    cond = strongly_connected_components(dfa.n, dfa.delta)
    sink_id = cond.comp[min(sink)]
    image = frozenset(dfa.states)
    stages: list[Stage] = []
    left: set = set()
    for c in cond.topological_order():
        if c == sink_id:
            continue
        members = frozenset(cond.members[c])
        start = image & members
        left |= members
        if not start:
            continue
        s = escape_word(dfa, members, start)
        image = apply_set(dfa, image, s)
        if audit and image & left:
            raise SynthesisError(f"image re-entered an escaped component after stage {c}")
        stages.append(Stage(f"escape[scc={c},size={len(members)}]", s, "escape"))
    if not image <= sink:
        raise SynthesisError("escape words did not reach the sink component")
    sub, keep = induced(dfa, sink)
    inner = synchronize_strongly_connected(sub, audit=audit, pair_cap=pair_cap)
    stages.extend(replace(st, label="sink:" + st.label) for st in inner.stages)
    word = tuple(a for st in stages for a in st.word)
    bound = quadratic_bound(dfa.n)
    untrimmed = None
    if len(word) > bound:
        untrimmed = len(word)
        stages = trim_word(dfa, stages)
        word = tuple(a for st in stages for a in st.word)
    return SyncCertificate(
        word=word,
        n=dfa.n,
        bound=bound,
        bound_kind="general",
        stages=tuple(stages),
        verified=is_synchronizing_word(dfa, word),
        bound_ok=len(word) <= bound,
        untrimmed_length=untrimmed,
    )


def greedy_synchronize(dfa: Dfa, pair_cap: int = DEFAULT_PAIR_CAP) -> SyncCertificate:
    """Pair-merging fallback for automata outside the aperiodic construction.

    Repeatedly merges the pair of current states with the shortest merging
    word.  No length bound is claimed.
    """
    graph = build_pair_graph(dfa, pair_cap)
    current = set(dfa.states)
    stages: list[Stage] = []
    while len(current) > 1:
        best = None
        ordered = sorted(current)
        for i, p in enumerate(ordered):
            for q in ordered[i + 1:]:
                w = merge_word(dfa, p, q, graph)
                if w is None:
                    raise NotSynchronizableError(f"states {p} and {q} cannot be merged")
                if best is None or len(w) < len(best[0]):
                    best = (w, p, q)
        w, p, q = best
        stages.append(Stage(f"merge[{p},{q}]", w, "merge"))
        current = set(apply_set(dfa, current, w))
    word = tuple(a for st in stages for a in st.word)
    return SyncCertificate(
        word=word,
        n=dfa.n,
        bound=None,
        bound_kind="none",
        stages=tuple(stages),
        verified=is_synchronizing_word(dfa, word),
        bound_ok=None,
    )


def certify(dfa: Dfa, cert: SyncCertificate) -> Report:
    """Re-check a certificate from scratch.  Failures are fields, not errors."""
    notes = []
    syncs = is_synchronizing_word(dfa, cert.word)
    if syncs != cert.verified:
        notes.append("recorded verified flag disagrees with recomputation")
    if tuple(a for st in cert.stages for a in st.word) != tuple(cert.word):
        notes.append("stage words do not concatenate to the word")
    if cert.bound_kind == "none" or cert.bound is None:
        notes.append("no bound claimed; bound check skipped")
        bound_ok = None
    else:
        bound_ok = len(cert.word) <= cert.bound
        if cert.bound_ok is not None and cert.bound_ok != bound_ok:
            notes.append("recorded bound_ok disagrees with recomputation")
    return Report(syncs, len(cert.word), cert.bound, cert.bound_kind, bound_ok, tuple(notes))


# -- text form -------------------------------------------------------------

def _yes(flag) -> str:
    return "n/a" if flag is None else ("yes" if flag else "no")


def certificate_to_text(cert: SyncCertificate, k: int) -> str:
    """Key-value rendering, one field per line.

    Keys: ``word``, ``length``, ``n``, ``bound_kind``, ``bound`` (``-`` when
    none), ``bound_ok`` and ``verified`` (``yes``/``no``/``n/a``),
    ``untrimmed_length`` (``-`` unless trimming ran), ``stages`` (count), then
    one ``stage`` line per stage as ``label | word | tag``.
    """
    lines = [
        f"word: {format_word(cert.word, k)}",
        f"length: {len(cert.word)}",
        f"n: {cert.n}",
        f"bound_kind: {cert.bound_kind}",
        f"bound: {'-' if cert.bound is None else cert.bound}",
        f"bound_ok: {_yes(cert.bound_ok)}",
        f"verified: {_yes(cert.verified)}",
        f"untrimmed_length: {'-' if cert.untrimmed_length is None else cert.untrimmed_length}",
        f"stages: {len(cert.stages)}",
    ]
    lines += [f"stage: {st.label} | {format_word(st.word, k)} | {st.tag}" for st in cert.stages]
    return "\n".join(lines) + "\n"


def certificate_from_text(text: str, k: int) -> SyncCertificate:
    fields: dict = {}
    stages = []
    for line in text.splitlines():
        if not line.strip():
            continue
        key, _, value = line.partition(":")
        value = value.strip()
        if key == "stage":
            label, word, tag = (part.strip() for part in value.split("|"))
            stages.append(Stage(label, parse_word(word, k), tag))
        else:
            fields[key] = value

    def flag(v):
        return None if v == "n/a" else v == "yes"

    def opt_int(v):
        return None if v == "-" else int(v)

    return SyncCertificate(
        word=parse_word(fields.get("word", ""), k),
        n=int(fields["n"]),
        bound=opt_int(fields["bound"]),
        bound_kind=fields["bound_kind"],
        stages=tuple(stages),
        verified=bool(flag(fields["verified"])),
        bound_ok=flag(fields["bound_ok"]),
        untrimmed_length=opt_int(fields.get("untrimmed_length", "-")),
    )
