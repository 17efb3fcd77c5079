import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from aperiodic_sync.automaton import Dfa, apply
from aperiodic_sync.congruence import (
    Partition,
    StateRelation,
    check_stability,
    congruence_from_scc,
    detect_t_cycle,
    order_from_scc,
    quotient,
    transitive_closure,
)
from aperiodic_sync.errors import NotCongruenceError
from aperiodic_sync.monoid import is_aperiodic
from aperiodic_sync.pairgraph import AlmostMinimalScc, find_almost_minimal_scc
from conftest import dfas

A1_M = AlmostMinimalScc(frozenset({(0, 1), (1, 2)}))
SWAP_M = AlmostMinimalScc(frozenset({(0, 1), (1, 0)}))


def test_order_a1(a1):
    order = order_from_scc(a1, A1_M)
    assert set(order.strict.pairs()) == {(0, 1), (1, 2), (0, 2)}
    assert set(order.quasi.pairs()) == {(0, 1), (1, 2), (0, 2), (0, 0), (1, 1), (2, 2)}
    assert order.antisymmetric
    assert order.strict.is_irreflexive() and order.strict.is_transitive()
    assert order.quasi.is_reflexive() and order.quasi.is_transitive()


def test_order_swap_not_antisymmetric(swap):
    order = order_from_scc(swap, SWAP_M)
    assert (0, 1) in order.strict and (1, 0) in order.strict
    assert not order.antisymmetric


def test_order_single_pair():
    dfa = Dfa.from_rows([[0, 0, 0, 0]])
    order = order_from_scc(dfa, AlmostMinimalScc(frozenset({(2, 3)})))
    assert order.strict.pairs() == [(2, 3)]
    assert len(order.quasi.pairs()) == 5


def test_congruence_examples(a1):
    part = congruence_from_scc(a1, A1_M)
    assert part.blocks == (frozenset({0, 1, 2}),)
    dfa4 = Dfa.from_rows([[0, 0, 2, 3]])
    part = congruence_from_scc(dfa4, AlmostMinimalScc(frozenset({(0, 1)})))
    assert part.blocks == (frozenset({0, 1}), frozenset({2}), frozenset({3}))
    assert len(part) == 3


def test_stability_examples(a1):
    assert check_stability(a1, congruence_from_scc(a1, A1_M).as_relation()) == (True, None)
    assert check_stability(a1, order_from_scc(a1, A1_M).quasi) == (True, None)
    rel = StateRelation.from_pairs(3, [(0, 1)])
    # a sends (0,1) to (0,0), outside this non-reflexive relation, before b is tried
    assert check_stability(a1, rel) == (False, (0, 1, 0))
    assert (a1.delta[1][0], a1.delta[1][1]) == (1, 2) and (1, 2) not in rel
    reflexive = StateRelation.from_pairs(3, [(0, 1), (0, 0), (1, 1), (2, 2)])
    assert check_stability(a1, reflexive) == (False, (0, 1, 1))


def test_t_cycle_examples(a1, swap):
    assert detect_t_cycle(a1, A1_M) is None
    assert detect_t_cycle(swap, SWAP_M) == (0, 1, 0)
    assert detect_t_cycle(a1, AlmostMinimalScc(frozenset({(2, 0)}))) is None


def test_quotient_examples(a1):
    q, proj = quotient(a1, Partition.from_labels([0, 0, 0]))
    assert q.delta == ((0,), (0,))
    assert proj == (0, 0, 0)
    q, _ = quotient(a1, Partition.discrete(3))
    assert q == a1
    with pytest.raises(NotCongruenceError) as exc:
        quotient(a1, Partition.from_labels([0, 0, 1]))
    assert (exc.value.p, exc.value.q, exc.value.letter) == (0, 1, 1)


@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=12))
def test_transitive_closure_matches_brute(pairs):
    closed = set(transitive_closure(StateRelation.from_pairs(6, pairs)).pairs())
    expected = set(pairs)
    while True:
        extra = {(p, r) for p, q in expected for q2, r in expected if q == q2} - expected
        if not extra:
            break
        expected |= extra
    assert closed == expected


@settings(max_examples=200)
@given(dfas(max_n=5, max_k=3))
def test_order_and_congruence_are_stable(dfa):
    m = find_almost_minimal_scc(dfa)
    if m is None:
        return
    order = order_from_scc(dfa, m)
    part = congruence_from_scc(dfa, m)
    assert check_stability(dfa, order.quasi)[0]
    assert check_stability(dfa, part.as_relation())[0]
    for q in m.support:
        assert len(part.block(q)) >= 2
    for q in set(range(dfa.n)) - m.support:
        assert part.block(q) == {q}
    qdfa, proj = quotient(dfa, part)
    for a, row in enumerate(dfa.delta):
        for q in dfa.states:
            assert proj[row[q]] == qdfa.delta[a][proj[q]]


@settings(max_examples=200)
@given(dfas(max_n=5, max_k=3))
def test_t_cycle_iff_not_antisymmetric(dfa):
    m = find_almost_minimal_scc(dfa)
    if m is None:
        return
    cycle = detect_t_cycle(dfa, m)
    assert (cycle is None) == order_from_scc(dfa, m).antisymmetric
    if cycle is not None:
        assert cycle[0] == cycle[-1] and len(set(cycle)) >= 2
        assert all(pair in m.pairs for pair in zip(cycle, cycle[1:]))
        assert not is_aperiodic(dfa)


@settings(max_examples=150)
@given(dfas(max_n=5, max_k=2))
def test_collapse_outside_support(dfa):
    m = find_almost_minimal_scc(dfa)
    if m is None:
        return
    strict = order_from_scc(dfa, m).strict
    for w in brute.words_upto(dfa.k, 3):
        for r, q in strict.pairs():
            rs = apply(dfa, r, w)
            if rs not in m.support:
                assert rs == apply(dfa, q, w)


@settings(max_examples=100)
@given(dfas(max_n=4, max_k=2))
def test_quotient_of_aperiodic_is_aperiodic(dfa):
    m = find_almost_minimal_scc(dfa)
    if m is None or not is_aperiodic(dfa):
        return
    qdfa, _ = quotient(dfa, congruence_from_scc(dfa, m))
    assert is_aperiodic(qdfa)
