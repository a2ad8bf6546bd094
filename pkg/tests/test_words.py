import pytest
from hypothesis import given, strategies as st

from onebridge.words import FreeWord


def W(text, alphabet=("x", "y")):
    return FreeWord.parse(text, alphabet)


def test_reduction_basics():
    assert W("x x^-1").is_identity()
    assert W("x y y^-1 x") == W("x^2")
    assert W("x^3 x^-5") == W("x^-2")
    assert str(W("x^-1 y^2 x")) == "x^-1y^2x"
    assert str(FreeWord()) == "1"


def test_len_counts_letters():
    assert len(W("x^3 y^-2")) == 5
    assert len(FreeWord()) == 0
    assert bool(FreeWord()) is False
    assert bool(W("x")) is True


def test_parse_longest_match():
    w = FreeWord.parse("tl tm^-2 s", ("tl", "tm", "s"))
    assert w.syllables == (("tl", 1), ("tm", -2), ("s", 1))
    # "t" alone is not a generator of this alphabet
    with pytest.raises(ValueError):
        FreeWord.parse("t s", ("tl", "tm", "s"))


def test_parse_error_positions():
    with pytest.raises(ValueError) as err:
        W("x ^2")
    assert "position" in str(err.value)
    with pytest.raises(ValueError):
        W("x y z")


def test_multiplication_and_inverse():
    u = W("x y^2")
    v = W("y^-2 x")
    assert u * v == W("x^2")
    assert (u * u.inverse()).is_identity()
    assert u.inverse() == W("y^-2 x^-1")


def test_powers_and_conjugation():
    u = W("x y")
    assert u ** 3 == W("x y x y x y")
    assert u ** 0 == FreeWord()
    assert u ** -2 == (u.inverse()) ** 2
    assert W("x").conjugated_by(W("y")) == W("y^-1 x y")


def test_exponent_sum_and_generators():
    w = W("x y^2 x^-3 y")
    assert w.exponent_sum("x") == -2
    assert w.exponent_sum("y") == 3
    assert w.generators() == {"x", "y"}


def test_letters_iteration():
    assert list(W("x^2 y^-1").letters()) == [("x", 1), ("x", 1), ("y", -1)]


def test_substitute():
    w = W("x y x^-1")
    image = w.substitute({"x": W("y"), "y": W("x^2")})
    assert image == W("y x^2 y^-1")


def test_str_parse_round_trip():
    for text in ("x", "x^-1y^2x", "1", "y^5x^-3y"):
        assert str(W(text)) == text
        assert W(str(W(text))) == W(text)


syllable = st.tuples(st.sampled_from(["x", "y"]), st.integers(-4, 4))
words = st.lists(syllable, max_size=12).map(FreeWord)


@given(words, words, words)
def test_multiplication_is_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(words)
def test_inverse_cancels(w):
    assert (w * w.inverse()).is_identity()
    assert (w.inverse() * w).is_identity()


@given(words)
def test_parse_str_round_trip(w):
    assert FreeWord.parse(str(w), ("x", "y")) == w


@given(words, words)
def test_exponent_sum_is_additive(u, v):
    for g in ("x", "y"):
        assert (u * v).exponent_sum(g) == u.exponent_sum(g) + v.exponent_sum(g)


@given(words)
def test_reduction_is_canonical(w):
    # no adjacent syllables on the same generator, no zero exponents
    sylls = w.syllables
    assert all(e != 0 for _, e in sylls)
    assert all(a != b for (a, _), (b, _) in zip(sylls, sylls[1:]))
