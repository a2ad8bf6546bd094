from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from onebridge.exactalg import (
    AbelianGroupInvariants,
    IntMatrix,
    LaurentPoly,
    divides,
    evaluate,
    laurent_gcd,
    smith_normal_form,
)


def P(terms):
    return LaurentPoly(terms)


def test_poly_construction_and_display():
    assert str(P({0: 1, 1: -2, 2: 1})) == "1 - 2t + t^2"
    assert str(P({0: 1})) == "1"
    assert str(P({})) == "0"
    assert str(P({-1: 1, 1: 1})) == "t^-1 + t"
    assert str(P({1: 1})) == "t"
    assert str(P({2: -3})) == "-3t^2"


def test_poly_arithmetic():
    f = P({0: 1, 1: 1})
    g = P({0: 1, 1: -1})
    assert f * g == P({0: 1, 2: -1})
    assert f + g == P({0: 2})
    assert f - f == P({})
    assert f * 2 == P({0: 2, 1: 2})
    assert -f == P({0: -1, 1: -1})
    assert f.shifted(3) == P({3: 1, 4: 1})


def test_poly_reversed_variable():
    f = P({0: 1, 1: -2, 3: 5})
    assert f.reversed_variable() == P({0: -1, -1: -2, -3: 5}).shifted(0)
    # reversing twice is the identity
    assert f.reversed_variable().reversed_variable() == f


def test_canonical_representative():
    # canonical picks min exponent 0 and positive lowest coefficient
    f = P({3: -2, 5: 4})
    c = f.canonical()
    assert c == P({0: 2, 2: -4})
    assert c.min_exp() == 0
    assert c.coefficient(0) > 0
    assert P({}).canonical() == P({})


def test_evaluate_exact():
    f = P({0: 1, 1: -2, 2: 1, 3: -2, 4: 1})
    assert evaluate(f, -1) == 7
    assert evaluate(f, 1) == -1
    assert evaluate(P({-2: 4, 0: 1}), 2) == 2
    with pytest.raises(ValueError):
        evaluate(P({-1: 1}), 2)  # 1/2 is not an integer
    with pytest.raises(ValueError):
        evaluate(f, 0)


def test_laurent_gcd_fixtures():
    f = P({0: 1, 1: -1, 2: 1})
    g = P({0: 1, 1: 1})
    one = P({0: 1})
    assert laurent_gcd(f, one) == one
    assert laurent_gcd(f, P({})) == f.canonical()
    assert laurent_gcd(f * g, g) == g.canonical()
    # common content is part of the gcd
    assert laurent_gcd(f * 6, f * 4) == (f * 2).canonical()
    # units and shifts do not matter
    assert laurent_gcd(f.shifted(-3), (f * -1).shifted(5)) == f.canonical()


def test_laurent_gcd_coprime():
    f = P({0: 1, 1: 1})          # 1 + t
    g = P({0: -1, 1: 1})         # t - 1
    assert laurent_gcd(f, g) == P({0: 1})


def test_divides():
    f = P({0: 1, 1: -1, 2: 1})
    g = P({0: 1, 1: 1})
    assert divides(f, f * g)
    assert divides(g.shifted(-2), f * g)
    assert not divides(P({0: 1, 1: 1}), P({0: 1, 1: -1, 2: 1}))
    # integral quotient is required, not just rational
    assert not divides(P({0: 2}), P({0: 1, 1: 3}))


poly_strategy = st.dictionaries(st.integers(-4, 4), st.integers(-6, 6),
                                max_size=5).map(LaurentPoly)
nonzero_polys = poly_strategy.filter(lambda f: not f.is_zero())


@given(nonzero_polys, nonzero_polys)
def test_gcd_divides_both(f, g):
    d = laurent_gcd(f, g)
    assert divides(d, f)
    assert divides(d, g)


@given(nonzero_polys, nonzero_polys)
def test_gcd_is_symmetric(f, g):
    assert laurent_gcd(f, g) == laurent_gcd(g, f)


@given(nonzero_polys, nonzero_polys)
def test_gcd_absorbs_multiplication(f, g):
    assert laurent_gcd(f, f * g) == f.canonical()


@given(poly_strategy, poly_strategy, st.sampled_from([-2, -1, 1, 2, 3]))
def test_evaluate_is_multiplicative(f, g, at):
    try:
        lhs = evaluate(f * g, at)
        fa = evaluate(f, at)
        ga = evaluate(g, at)
    except ValueError:
        return  # non-integer value at this point; nothing to compare
    assert lhs == fa * ga


def test_int_matrix_basics():
    m = IntMatrix([[1, 2], [3, 4]])
    assert m.nrows == 2 and m.ncols == 2
    assert m.column(1) == (2, 4)
    assert m * IntMatrix.identity(2) == m
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        IntMatrix([[1.5]])


def test_smith_normal_form_fixtures():
    assert smith_normal_form(IntMatrix([[2, 0], [0, 3]])) == (1, 6)
    assert smith_normal_form(IntMatrix([[1, 0], [0, 0]])) == (1, 0)
    assert smith_normal_form(IntMatrix([[1, 0], [13, -27]])) == (1, 27)
    assert smith_normal_form(IntMatrix([[0, 0], [0, 0]])) == (0, 0)
    assert smith_normal_form(IntMatrix([[6, 4], [4, 6]])) == (2, 10)
    # non-square shapes
    assert smith_normal_form(IntMatrix([[2, 4, 6]])) == (2,)
    assert smith_normal_form(IntMatrix([[2], [4]])) == (2,)


small_matrices = st.integers(1, 3).flatmap(
    lambda n: st.integers(1, 3).flatmap(
        lambda m: st.lists(
            st.lists(st.integers(-9, 9), min_size=m, max_size=m),
            min_size=n, max_size=n).map(IntMatrix)))


@given(small_matrices)
def test_snf_divisor_chain(mat):
    diag = smith_normal_form(mat)
    assert len(diag) == min(mat.nrows, mat.ncols)
    assert all(d >= 0 for d in diag)
    nonzero = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    # zeros, if any, come after all nonzero entries
    if 0 in diag:
        assert all(d == 0 for d in diag[diag.index(0):])


def _unimodulars_2x2():
    return [IntMatrix(rows) for rows in (
        [[1, 0], [0, 1]], [[1, 1], [0, 1]], [[1, 0], [1, 1]],
        [[0, 1], [1, 0]], [[1, -2], [0, 1]], [[2, 1], [1, 1]],
    )]


@given(st.lists(st.lists(st.integers(-9, 9), min_size=2, max_size=2),
                min_size=2, max_size=2).map(IntMatrix),
       st.sampled_from(range(6)), st.sampled_from(range(6)))
def test_snf_unimodular_invariance(mat, i, j):
    u = _unimodulars_2x2()[i]
    v = _unimodulars_2x2()[j]
    assert smith_normal_form(u * mat * v) == smith_normal_form(mat)


def test_abelian_invariants():
    g = AbelianGroupInvariants(1, (2,))
    assert str(g) == "Z + Z_2"
    assert str(AbelianGroupInvariants(0, (27,))) == "Z_27"
    assert str(AbelianGroupInvariants(0, ())) == "0"
    assert str(AbelianGroupInvariants(2, ())) == "Z + Z"
    assert AbelianGroupInvariants(0, ()).is_trivial()
    assert not g.is_trivial()
    with pytest.raises(ValueError):
        AbelianGroupInvariants(0, (3, 2))  # not a divisor chain
    with pytest.raises(ValueError):
        AbelianGroupInvariants(0, (1,))


def test_from_diagonal():
    inv = AbelianGroupInvariants.from_diagonal((1, 27), 2)
    assert inv == AbelianGroupInvariants(0, (27,))
    inv = AbelianGroupInvariants.from_diagonal((1, 0), 2)
    assert inv == AbelianGroupInvariants(1, ())
    inv = AbelianGroupInvariants.from_diagonal((2, 10), 3)
    assert inv == AbelianGroupInvariants(1, (2, 10))
    assert AbelianGroupInvariants.from_diagonal((), 2) == \
        AbelianGroupInvariants(2, ())
