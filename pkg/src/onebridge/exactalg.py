"""Exact algebra: integer Laurent polynomials, Smith normal form, abelian
group invariants.

Everything here is exact.  Coefficients are Python integers, intermediate
rational work uses fractions.Fraction, and no floating point appears
anywhere.  The three pieces are independent of the knot theory and are
used by the invariant computations downstream:

  * LaurentPoly and laurent_gcd for Alexander polynomials,
  * smith_normal_form for first homology presented by integer matrices,
  * AbelianGroupInvariants as the common answer type for homology ops.
"""

from fractions import Fraction
from math import gcd
from dataclasses import dataclass

__all__ = [
    "LaurentPoly",
    "laurent_gcd",
    "divides",
    "evaluate",
    "IntMatrix",
    "smith_normal_form",
    "AbelianGroupInvariants",
]


class LaurentPoly:
    """An integer Laurent polynomial in one variable t.

    Stored as a dict mapping exponent (any integer, negatives allowed) to a
    nonzero integer coefficient.  The zero polynomial is the empty dict.

    >>> p = LaurentPoly({0: 1, 1: -2, 2: 1})
    >>> print(p * LaurentPoly({-1: 1}))
    t^-1 - 2 + t
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                if not isinstance(exp, int) or not isinstance(coeff, int):
                    raise TypeError("exponents and coefficients must be int")
                if coeff:
                    clean[exp] = coeff
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, coeff, exp):
        return cls({exp: coeff})

    def is_zero(self):
        return not self.terms

    def min_exp(self):
        return min(self.terms) if self.terms else None

    def max_exp(self):
        return max(self.terms) if self.terms else None

    def coefficient(self, exp):
        return self.terms.get(exp, 0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = e1 + e2
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shifted(self, k):
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def reversed_variable(self):
        """Substitute t -> t^-1."""
        return LaurentPoly({-e: c for e, c in self.terms.items()})

    # -- canonical form ------------------------------------------------------

    def canonical(self):
        """Normalize away the unit ambiguity of Z[t, t^-1].

        Units are +-t^k.  The canonical associate has minimum exponent 0 and
        a positive coefficient in its lowest degree term.  The zero
        polynomial is its own canonical form.
        """
        if not self.terms:
            return LaurentPoly()
        low = self.min_exp()
        shifted = {e - low: c for e, c in self.terms.items()}
        if shifted[0] < 0:
            shifted = {e: -c for e, c in shifted.items()}
        return LaurentPoly(shifted)

    # -- equality --------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- text form ----------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms):
            coeff = self.terms[exp]
            mag = abs(coeff)
            if exp == 0:
                body = str(mag)
            elif exp == 1:
                body = "t" if mag == 1 else "%dt" % mag
            else:
                body = "t^%d" % exp if mag == 1 else "%dt^%d" % (mag, exp)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "LaurentPoly(%r)" % (self.terms,)


def _to_int_list(poly):
    """Return (coeff list ascending from degree 0, shift) for nonzero poly."""
    low = poly.min_exp()
    high = poly.max_exp()
    coeffs = [poly.terms.get(e, 0) for e in range(low, high + 1)]
    return coeffs, low


def _content(coeffs):
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    return g


def _frac_divmod(num, den):
    """Polynomial division over Q: num, den lists of Fraction, den nonzero."""
    num = list(num)
    dn = len(den) - 1
    while den and den[-1] == 0:
        den.pop()
        dn -= 1
    lead = den[-1]
    quot = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        shift = len(num) - len(den)
        factor = num[-1] / lead
        quot[shift] = factor
        for i, d in enumerate(den):
            num[shift + i] -= factor * d
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def laurent_gcd(f, g):
    """Greatest common divisor in Z[t, t^-1], in canonical form.

    The unit group is {+-t^k}; the gcd is pinned down by canonical().
    Computed by splitting off integer contents (Gauss) and running the
    Euclidean algorithm on the primitive parts over Q[t] with exact
    Fraction arithmetic.

    >>> print(laurent_gcd(LaurentPoly({2: -1, 3: 1}), LaurentPoly({1: -1, 2: 1})))
    1 - t
    >>> print(laurent_gcd(LaurentPoly(), LaurentPoly()))
    0
    """
    if f.is_zero():
        return g.canonical()
    if g.is_zero():
        return f.canonical()
    fc, _ = _to_int_list(f)
    gc, _ = _to_int_list(g)
    content = gcd(_content(fc), _content(gc))
    a = [Fraction(c) for c in fc]
    b = [Fraction(c) for c in gc]
    while any(b):
        _, r = _frac_divmod(a, b)
        a, b = b, r
    # a is the gcd over Q[t]; rescale to a primitive integer polynomial
    den_lcm = 1
    for c in a:
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in a]
    prim = _content(ints)
    ints = [c // prim for c in ints]
    out = LaurentPoly({e: c * content for e, c in enumerate(ints)})
    return out.canonical()


def divides(d, f):
    """Exact divisibility test in Z[t, t^-1].

    True iff f = d * g for some integer Laurent polynomial g.  Zero divides
    only zero.

    >>> divides(LaurentPoly({0: 1, 1: -1}), LaurentPoly({0: 1, 2: -1}))
    True
    >>> divides(LaurentPoly.constant(2), LaurentPoly({0: 1, 1: -1}))
    False
    """
    if d.is_zero():
        return f.is_zero()
    if f.is_zero():
        return True
    fc, _ = _to_int_list(f)
    dc, _ = _to_int_list(d)
    quot, rem = _frac_divmod([Fraction(c) for c in fc],
                             [Fraction(c) for c in dc])
    if any(rem):
        return False
    return all(c.denominator == 1 for c in quot)


def evaluate(f, at):
    """Evaluate f at a nonzero integer, exactly.

    Negative exponents are handled with exact rational arithmetic; the
    result must come out an integer (it always does at +-1, which is the
    use that matters), otherwise ValueError is raised.

    >>> evaluate(LaurentPoly({0: 1, 1: -2, 2: 1, 3: -2, 4: 1}), -1)
    7
    >>> evaluate(LaurentPoly({-1: 1, 1: 1}), -1)
    -2
    """
    if not isinstance(at, int):
        raise TypeError("evaluation point must be an integer")
    if at == 0:
        raise ValueError("cannot evaluate a Laurent polynomial at 0")
    total = Fraction(0)
    for exp, coeff in f.terms.items():
        total += coeff * Fraction(at) ** exp
    if total.denominator != 1:
        raise ValueError("value %s is not an integer" % total)
    return int(total)


# ---------------------------------------------------------------------------
# integer matrices and Smith normal form
# ---------------------------------------------------------------------------


class IntMatrix:
    """A rectangular integer matrix, stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        frozen = tuple(tuple(r) for r in rows)
        if not frozen or not frozen[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(frozen[0])
        for r in frozen:
            if len(r) != width:
                raise ValueError("ragged rows")
            for x in r:
                if not isinstance(x, int):
                    raise TypeError("entries must be integers")
        object.__setattr__(self, "rows", frozen)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    def __mul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                row.append(sum(self.rows[i][k] * other.rows[k][j]
                               for k in range(self.ncols)))
            out.append(row)
        return IntMatrix(out)

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "IntMatrix(%r)" % (list(map(list, self.rows)),)

    def __str__(self):
        body = ["[" + " ".join(str(x) for x in r) + "]" for r in self.rows]
        return "\n".join(body)


def smith_normal_form(M):
    """Diagonal of the Smith normal form of M.

    Returns a tuple of min(nrows, ncols) non-negative integers d1, d2, ...
    with each d_i dividing d_{i+1} and zeros at the end.  Row and column
    operations only, all exact.

    >>> smith_normal_form(IntMatrix([[2, 0], [0, 3]]))
    (1, 6)
    >>> smith_normal_form(IntMatrix([[1, 0], [0, 0]]))
    (1, 0)
    >>> smith_normal_form(IntMatrix([[1, 0], [13, -27]]))
    (1, 27)
    """
    A = [list(r) for r in M.rows]
    nr, nc = len(A), len(A[0])
    size = min(nr, nc)
    diag = []
    top = 0
    while top < size:
        # find a nonzero entry of minimal absolute value in the submatrix
        pivot = None
        for i in range(top, nr):
            for j in range(top, nc):
                v = A[i][j]
                if v and (pivot is None or abs(v) < abs(pivot[2])):
                    pivot = (i, j, v)
        if pivot is None:
            break
        pi, pj, _ = pivot
        A[top], A[pi] = A[pi], A[top]
        for row in A:
            row[top], row[pj] = row[pj], row[top]
        while True:
            # clear the pivot column with row operations
            dirty = False
            for i in range(top + 1, nr):
                if A[i][top]:
                    q = A[i][top] // A[top][top]
                    for j in range(top, nc):
                        A[i][j] -= q * A[top][j]
                    if A[i][top]:
                        A[top], A[i] = A[i], A[top]
                        dirty = True
            if dirty:
                continue
            # clear the pivot row with column operations
            for j in range(top + 1, nc):
                if A[top][j]:
                    q = A[top][j] // A[top][top]
                    for i in range(top, nr):
                        A[i][j] -= q * A[i][top]
                    if A[top][j]:
                        for i in range(top, nr):
                            A[i][top], A[i][j] = A[i][j], A[i][top]
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            offender = None
            p = A[top][top]
            for i in range(top + 1, nr):
                for j in range(top + 1, nc):
                    if A[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(top, nc):
                A[top][j] += A[offender][j]
        diag.append(abs(A[top][top]))
        top += 1
    while len(diag) < size:
        diag.append(0)
    return tuple(diag)


# ---------------------------------------------------------------------------
# finitely generated abelian groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AbelianGroupInvariants:
    """Invariant factors of a finitely generated abelian group.

    free_rank copies of Z plus one finite cyclic factor per torsion entry;
    torsion entries are >= 2 and form a divisor chain.  The trivial group
    is AbelianGroupInvariants(0, ()).
    """

    free_rank: int
    torsion: tuple

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        prev = None
        for d in self.torsion:
            if not isinstance(d, int) or d < 2:
                raise ValueError("torsion entries must be integers >= 2")
            if prev is not None and d % prev:
                raise ValueError("torsion must form a divisor chain")
            prev = d

    @classmethod
    def from_diagonal(cls, diag, n_generators):
        """Invariants of Z^n_generators modulo relations with SNF diagonal diag.

        Entries equal to 1 contribute nothing, zeros leave free factors.
        """
        if len(diag) > n_generators:
            raise ValueError("more diagonal entries than generators")
        torsion = tuple(d for d in diag if d >= 2)
        rank = n_generators - sum(1 for d in diag if d != 0)
        return cls(rank, torsion)

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = ["Z"] * self.free_rank + ["Z_%d" % d for d in self.torsion]
        return " + ".join(parts) if parts else "0"
