import pytest
from hypothesis import given, strategies as st

from gol.errors import ParseError, WindowError
from gol.words import (Atom, Letter, LetterMap, ShiftAutomorphism, Window, Word, a, format_word,
                       free_reduce, is_freely_reduced, parse_word, substitute, x, y)


def test_parse_round_trip():
    w = parse_word("x[0,1] y[0,0]' x[0,1]^-1 y[2,-3]^3")
    assert w == Word([x(0, 1), y(0, 0, -1), x(0, 1, -1)] + [y(2, -3)] * 3)
    assert parse_word(str(w)) == w


def test_parse_shorthand_and_empty():
    assert parse_word("x[3]") == Word([x(0, 3)])
    assert parse_word("") == Word()
    assert parse_word("e") == Word()


def test_parse_error_offset():
    with pytest.raises(ParseError) as info:
        parse_word("x[0,1] ?")
    assert info.value.offset == 7


def test_window_rejects_outside_atom():
    with pytest.raises(WindowError):
        parse_word("x[0,9]", window=Window(1, 6))
    with pytest.raises(WindowError):
        parse_word("y[2,0]", window=Window(1, 6))


def test_atom_successor():
    assert Atom(1, 4).succ() == Atom(1, 5)
    assert Atom(1, 4).pred() == Atom(1, 3)
    assert x(0, 2).atom == Atom(0, 2)
    assert y(0, 2).channel == 1 and x(0, 2).channel == 0


def test_format_collapses_runs():
    assert format_word(Word([a(0, 1)] * 2)) == "a[0,1]^2"
    assert format_word(Word([x(0, 0, -1)])) == "x[0,0]'"
    assert format_word(Word()) == ""


def test_free_reduce():
    w = Word([x(0, 0), y(0, 0), y(0, 0, -1), x(0, 0, -1), x(0, 1)])
    assert free_reduce(w) == Word([x(0, 1)])
    assert is_freely_reduced(free_reduce(w))


def test_shift_composes_and_inverts():
    tau = ShiftAutomorphism.single(0, 2)
    sigma = ShiftAutomorphism({0: -1, 1: 3})
    w = parse_word("x[0,1] y[1,0]")
    assert tau.compose(sigma)(w) == tau(sigma(w))
    assert tau.inverse()(tau(w)) == w
    assert tau(w) == parse_word("x[0,3] y[1,0]")


def test_letter_map_keep_only():
    keep = LetterMap.keep_only(lambda l: l.symbol == "x")
    assert substitute(keep, parse_word("x[0,1] y[0,0] x[0,1]'")) == Word()


letters = st.sampled_from([x(0, 0), y(0, 0), x(0, 1), y(1, -1)])
words = st.lists(st.tuples(letters, st.sampled_from([1, -1])), max_size=12).map(
    lambda ls: Word(Letter(l.symbol, l.index, e) for l, e in ls))


@given(words)
def test_inverse_cancels(w):
    assert free_reduce(w + w.inverse()) == Word()


@given(words)
def test_format_parse_round_trip(w):
    assert parse_word(format_word(w)) == w


@given(words, words)
def test_free_reduce_is_a_homomorphism(u, v):
    assert free_reduce(free_reduce(u) + free_reduce(v)) == free_reduce(u + v)
