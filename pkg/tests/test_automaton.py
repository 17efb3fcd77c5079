import pytest
from hypothesis import given

import brute
from aperiodic_sync.automaton import (
    Dfa,
    apply,
    apply_set,
    compose,
    format_word,
    identity,
    induced,
    is_synchronizing_word,
    parse_dfa,
    parse_word,
    serialize_dfa,
    transformation_of_word,
)
from aperiodic_sync.errors import DfaFormatError
from conftest import dfa_and_word, dfas

A1_TEXT = "dfa v1\nstates 3\nletters 2\ntable\n0 0 1\n1 2 2\n"


def test_parse_a1(a1):
    assert parse_dfa(A1_TEXT) == a1
    assert a1.delta == ((0, 0, 1), (1, 2, 2))


def test_parse_one_state():
    dfa = parse_dfa("dfa v1\nstates 1\nletters 1\ntable\n0\n")
    assert (dfa.n, dfa.k, dfa.delta) == (1, 1, ((0,),))


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("dfa v1\nstates 2\nletters 1\ntable\n0 2\n", 5, "out of range"),
        ("dfa v2\nstates 2\nletters 1\ntable\n0 1\n", 1, "dfa v1"),
        ("dfa v1\nstates x\nletters 1\ntable\n0 1\n", 2, "bad states"),
        ("dfa v1\nstates 2\nletters 1\ntabel\n0 1\n", 4, "table"),
        ("dfa v1\nstates 2\nletters 2\ntable\n0 1\n", 6, "end of file"),
        ("dfa v1\nstates 2\nletters 1\ntable\n0 1 1\n", 5, "expected 2 entries"),
        ("dfa v1\nstates 2\nletters 1\ntable\n0 1\n1 1\n", 6, "trailing"),
    ],
)
def test_parse_errors_carry_line(text, line, fragment):
    with pytest.raises(DfaFormatError) as exc:
        parse_dfa(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_parse_tolerates_extra_whitespace(a1):
    assert parse_dfa("dfa  v1\nstates   3\nletters 2\ntable\n 0 0  1\n1 2 2") == a1


def test_serialize_round_trip(a1):
    assert serialize_dfa(a1) == A1_TEXT
    assert parse_dfa(serialize_dfa(a1)) == a1
    one = Dfa.from_rows([[0]])
    assert parse_dfa(serialize_dfa(one)) == one


def test_serialize_canonicalizes():
    messy = "dfa v1\nstates 3\nletters 2\ntable\n0   0 1\n  1 2 2  \n"
    assert serialize_dfa(parse_dfa(messy)) == A1_TEXT


@given(dfas())
def test_round_trip_property(dfa):
    text = serialize_dfa(dfa)
    assert parse_dfa(text) == dfa
    assert serialize_dfa(parse_dfa(text)) == text


def test_dfa_rejects_bad_tables():
    with pytest.raises(ValueError):
        Dfa(2, 1, ((0, 2),))
    with pytest.raises(ValueError):
        Dfa(2, 2, ((0, 1),))


def test_apply_examples(a1):
    assert apply(a1, 2, (0, 0)) == 0
    assert apply(a1, 0, (1,)) == 1
    assert apply(a1, 1, ()) == 1


def test_apply_set_examples(a1):
    assert apply_set(a1, {0, 1, 2}, (0, 0)) == {0}
    assert apply_set(a1, {0, 1, 2}, (0,)) == {0, 1}
    assert apply_set(a1, {2}, (1, 0, 1)) == {2}
    assert len(apply_set(a1, {1}, (0, 1, 1, 0))) == 1
    with pytest.raises(ValueError):
        apply_set(a1, set(), (0,))


def test_is_synchronizing_word_examples(a1):
    assert is_synchronizing_word(a1, (0, 0))
    assert not is_synchronizing_word(a1, (0,))
    assert is_synchronizing_word(Dfa.from_rows([[0]]), ())


def test_transformation_of_word_examples(a1):
    assert transformation_of_word(a1, (0,)) == (0, 0, 1)
    assert transformation_of_word(a1, (0, 1)) == (1, 1, 2)
    assert transformation_of_word(a1, ()) == (0, 1, 2)


@given(dfa_and_word(), dfa_and_word())
def test_action_is_homomorphism(x, y):
    dfa, u = x
    _, v = y
    v = tuple(a % dfa.k for a in v)
    for q in dfa.states:
        assert apply(dfa, q, u + v) == apply(dfa, apply(dfa, q, u), v)
        assert apply(dfa, q, u) == brute.run(dfa.delta, q, u)
    assert transformation_of_word(dfa, u + v) == compose(
        transformation_of_word(dfa, u), transformation_of_word(dfa, v)
    )


@given(dfa_and_word())
def test_image_never_grows(x):
    dfa, w = x
    for size in range(1, dfa.n + 1):
        P = set(range(size))
        assert len(apply_set(dfa, P, w)) <= len(P)


def test_identity_transformation():
    t = (2, 0, 1)
    assert compose(identity(3), t) == t == compose(t, identity(3))


def test_word_text_round_trip():
    assert format_word((0, 0, 1), 2) == "aab"
    assert parse_word("aab", 2) == (0, 0, 1)
    assert format_word((0, 27), 30) == "l0 l27"
    assert parse_word("l0 l27", 30) == (0, 27)
    assert parse_word("", 2) == ()
    with pytest.raises(ValueError):
        parse_word("c", 2)


def test_induced_sub_automaton():
    dfa = Dfa.from_rows([[1, 2, 2, 3], [0, 3, 3, 2]])
    sub, keep = induced(dfa, {2, 3})
    assert keep == [2, 3]
    assert sub.delta == ((0, 1), (1, 0))
    with pytest.raises(ValueError):
        induced(dfa, {0})
