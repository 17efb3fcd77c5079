"""Synchronizing words for aperiodic DFAs within n(n-1)/2 letters."""

from .automaton import (
    Dfa,
    apply,
    apply_set,
    is_synchronizing_word,
    parse_dfa,
    serialize_dfa,
    transformation_of_word,
)
from .errors import (
    CapExceeded,
    DfaFormatError,
    NotAperiodicError,
    NotCongruenceError,
    NotSynchronizableError,
    SynthesisError,
)
from .monoid import index_period, is_aperiodic, sinks, transition_monoid
from .oracle import is_synchronizable, shortest_sync_word, verify_bound
from .pairgraph import build_pair_graph, find_almost_minimal_scc, has_pair_sink, merge_word
from .synthesis import (
    SyncCertificate,
    certify,
    synchronize_aperiodic,
    synchronize_class,
    synchronize_strongly_connected,
)

__all__ = [
    "CapExceeded", "Dfa", "DfaFormatError", "NotAperiodicError", "NotCongruenceError",
    "NotSynchronizableError", "SyncCertificate", "SynthesisError", "apply", "apply_set",
    "build_pair_graph", "certify", "find_almost_minimal_scc", "has_pair_sink", "index_period",
    "is_aperiodic", "is_synchronizable", "is_synchronizing_word", "merge_word", "parse_dfa",
    "serialize_dfa", "shortest_sync_word", "sinks", "synchronize_aperiodic", "synchronize_class",
    "synchronize_strongly_connected", "transformation_of_word", "transition_monoid", "verify_bound",
]
