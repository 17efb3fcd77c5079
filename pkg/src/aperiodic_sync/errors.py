"""Exception types shared across the package."""

from __future__ import annotations


class DfaFormatError(ValueError):
    """Raised when an automaton file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(RuntimeError):
    """A resource cap was hit before a computation finished."""

    def __init__(self, what: str, cap: int, reached: int):
        self.what = what
        self.cap = cap
        self.reached = reached
        super().__init__(f"{what} exceeded cap {cap} (reached {reached})")


class NotCongruenceError(ValueError):
    """A partition is not stable under the letter action."""

    def __init__(self, p: int, q: int, letter: int):
        self.p, self.q, self.letter = p, q, letter
        super().__init__(
            f"states {p} and {q} share a block but letter {letter} separates them"
        )


class NotSynchronizableError(ValueError):
    pass


class NotAperiodicError(ValueError):
    """Carries the t-cycle that rules out aperiodicity."""

    def __init__(self, cycle: tuple[int, ...]):
        self.cycle = cycle
        super().__init__("t-cycle " + ",".join(map(str, cycle)) + " (automaton is not aperiodic)")


class SynthesisError(RuntimeError):
    """An internal invariant of the word construction failed."""
