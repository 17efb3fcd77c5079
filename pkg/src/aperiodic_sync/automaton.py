"""Complete DFAs over dense integer states and letters.

States are ``0..n-1`` and letters ``0..k-1``.  ``delta[a][q]`` is the target of
state ``q`` under letter ``a``.  Words are tuples of letter indices and act on
states left to right, so ``apply(dfa, q, (a, b))`` reads ``a`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DfaFormatError

Word = tuple[int, ...]
Transformation = tuple[int, ...]
StateSet = frozenset


@dataclass(frozen=True)
class Dfa:
    n: int
    k: int
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("need at least one state and one letter")
        if len(self.delta) != self.k:
            raise ValueError(f"expected {self.k} rows, got {len(self.delta)}")
        for a, row in enumerate(self.delta):
            if len(row) != self.n:
                raise ValueError(f"row {a} has {len(row)} entries, expected {self.n}")
            for q in row:
                if not 0 <= q < self.n:
                    raise ValueError(f"entry {q} out of range [0,{self.n})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Dfa":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        return cls(len(rows[0]), len(rows), rows)

    @property
    def states(self) -> range:
        return range(self.n)

    def step(self, q: int, a: int) -> int:
        return self.delta[a][q]


def apply(dfa: Dfa, q: int, w: Iterable[int]) -> int:
    delta = dfa.delta
    for a in w:
        q = delta[a][q]
    return q


def apply_set(dfa: Dfa, states: Iterable[int], w: Iterable[int]) -> frozenset:
    cur = set(states)
    if not cur:
        raise ValueError("state set must be nonempty")
    delta = dfa.delta
    for a in w:
        row = delta[a]
        cur = {row[q] for q in cur}
    return frozenset(cur)


def is_synchronizing_word(dfa: Dfa, w: Iterable[int]) -> bool:
    return len(apply_set(dfa, dfa.states, w)) == 1


def identity(n: int) -> Transformation:
    return tuple(range(n))


def compose(s: Transformation, t: Transformation) -> Transformation:
    """``s`` then ``t``: the map ``q -> t[s[q]]``."""
    return tuple(t[x] for x in s)


def transformation_of_word(dfa: Dfa, w: Iterable[int]) -> Transformation:
    image = identity(dfa.n)
    for a in w:
        image = compose(image, dfa.delta[a])
    return image


def induced(dfa: Dfa, states: Iterable[int]) -> tuple[Dfa, list[int]]:
    """Restrict ``dfa`` to a closed set of states.

    Returns the sub-automaton (states renumbered in increasing order) and the
    list mapping new indices back to original states.
    """
    keep = sorted(states)
    index = {q: i for i, q in enumerate(keep)}
    try:
        rows = [[index[dfa.delta[a][q]] for q in keep] for a in range(dfa.k)]
    except KeyError as exc:
        raise ValueError(f"state set is not closed: {exc.args[0]} escapes") from None
    return Dfa.from_rows(rows), keep


def parse_dfa(text: str) -> Dfa:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    def line(i: int) -> list[str]:
        if i >= len(lines):
            raise DfaFormatError("unexpected end of file", i + 1)
        return lines[i].split()

    def header(i: int, key: str) -> int:
        parts = line(i)
        if len(parts) != 2 or parts[0] != key:
            raise DfaFormatError(f"expected '{key} <count>'", i + 1)
        try:
            value = int(parts[1])
        except ValueError:
            raise DfaFormatError(f"bad {key} count {parts[1]!r}", i + 1) from None
        if value < 1:
            raise DfaFormatError(f"{key} count must be positive", i + 1)
        return value

    if line(0) != ["dfa", "v1"]:
        raise DfaFormatError("expected header 'dfa v1'", 1)
    n = header(1, "states")
    k = header(2, "letters")
    if line(3) != ["table"]:
        raise DfaFormatError("expected 'table'", 4)
    rows = []
    for a in range(k):
        lineno = 5 + a
        parts = line(4 + a)
        if len(parts) != n:
            raise DfaFormatError(f"expected {n} entries, got {len(parts)}", lineno)
        row = []
        for tok in parts:
            try:
                q = int(tok)
            except ValueError:
                raise DfaFormatError(f"bad entry {tok!r}", lineno) from None
            if not 0 <= q < n:
                raise DfaFormatError(f"entry {q} out of range [0,{n})", lineno)
            row.append(q)
        rows.append(tuple(row))
    for extra in range(4 + k, len(lines)):
        if lines[extra].strip():
            raise DfaFormatError("trailing content after table", extra + 1)
    return Dfa(n, k, tuple(rows))


def serialize_dfa(dfa: Dfa) -> str:
    out = ["dfa v1", f"states {dfa.n}", f"letters {dfa.k}", "table"]
    out.extend(" ".join(map(str, row)) for row in dfa.delta)
    return "\n".join(out) + "\n"


def format_word(w: Sequence[int], k: int) -> str:
    if k <= 26:
        return "".join(chr(ord("a") + a) for a in w)
    return " ".join(f"l{a}" for a in w)


def parse_word(text: str, k: int) -> Word:
    text = text.strip()
    if not text:
        return ()
    if k <= 26:
        word = []
        for ch in text:
            a = ord(ch) - ord("a")
            if not 0 <= a < k:
                raise ValueError(f"letter {ch!r} not in alphabet of size {k}")
            word.append(a)
        return tuple(word)
    word = []
    for tok in text.split():
        if not tok.startswith("l") or not tok[1:].isdigit() or int(tok[1:]) >= k:
            raise ValueError(f"bad letter token {tok!r}")
        word.append(int(tok[1:]))
    return tuple(word)
