"""Alexander polynomials via free differential calculus.

For a knot in the 3-sphere the exterior group has a two-generator
one-relator presentation, and the Alexander polynomial is the greatest
common divisor of the two abelianized free derivatives of the relator.
The free derivative lives in the integral group ring of the free group on
x and y; abelianization sends x to t and y to a power of t determined by
the winding data, after which everything happens in Z[t, t^-1].
"""

from .words import FreeWord
from .exactalg import LaurentPoly, laurent_gcd
from .knotgroup import S3, presentation, meridian_x_exponent
from .schubert import count_components_fast

__all__ = [
    "GroupRingElement",
    "fox_derivative",
    "abelianization_map",
    "abelianized",
    "fox_images",
    "alexander_poly",
]


class GroupRingElement:
    """A finite integer combination of free group elements.

    Stored as a dict from FreeWord to nonzero integer coefficient.
    Supports just enough arithmetic for free derivatives: addition,
    negation, and multiplication by a single group element on the left.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for word, coeff in terms.items():
                if coeff:
                    clean[word] = coeff
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def of(cls, word, coeff=1):
        return cls({word: coeff})

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def left_mul(self, word):
        """Multiply every term by the group element word on the left."""
        return GroupRingElement({word * w: c for w, c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "GroupRingElement(0)"
        bits = ["%+d*%s" % (c, w) for w, c in sorted(
            self.terms.items(), key=lambda item: str(item[0]))]
        return "GroupRingElement(%s)" % " ".join(bits)


def fox_derivative(w, gen):
    """Free derivative of the word w with respect to the generator gen.

    Characterized by d(g)/d(g) = 1, d(h)/d(g) = 0 for other generators,
    and the product rule d(uv) = d(u) + u d(v); consequently
    d(g^-1)/d(g) = -g^-1, and a power g^e contributes the geometric sum
    1 + g + ... + g^{e-1} (or minus the corresponding inverse powers).

    >>> x = FreeWord([("x", 1)])
    >>> fox_derivative(x * x, "x") == GroupRingElement({FreeWord(): 1, x: 1})
    True
    """
    result = {}
    prefix = FreeWord()
    for g, e in w.syllables:
        if g == gen:
            if e > 0:
                for i in range(e):
                    key = prefix * FreeWord([(gen, i)])
                    result[key] = result.get(key, 0) + 1
            else:
                for i in range(1, -e + 1):
                    key = prefix * FreeWord([(gen, -i)])
                    result[key] = result.get(key, 0) - 1
        prefix = prefix * FreeWord([(g, e)])
    return GroupRingElement(result)


def abelianization_map(f):
    """Exponents (on x, on y) of the map onto the infinite cyclic group.

    For a knot form f, the abelianization of the exterior group in the
    3-sphere is infinite cyclic generated by the meridian class t; x maps
    to t and y to t raised to minus the meridian x-exponent.
    """
    if count_components_fast(f) != 1:
        raise ValueError("not a knot: %d components"
                         % count_components_fast(f))
    return (1, -meridian_x_exponent(f))


def abelianized(elem, weights):
    """Image of a group ring element in Z[t, t^-1].

    weights = (a, b) sends a word w to t**(a*sum_x(w) + b*sum_y(w)).
    """
    a, b = weights
    terms = {}
    for w, c in elem.terms.items():
        e = a * w.exponent_sum("x") + b * w.exponent_sum("y")
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly(terms)


def fox_images(f):
    """The two abelianized free derivatives of the exterior relator in S^3.

    Returned exactly as computed (no unit normalization), so fixed inputs
    pin down every sign and shift convention in the pipeline.
    """
    weights = abelianization_map(f)
    relator = presentation(f, S3).relators[0]
    dx = abelianized(fox_derivative(relator, "x"), weights)
    dy = abelianized(fox_derivative(relator, "y"), weights)
    return dx, dy


def alexander_poly(f):
    """Alexander polynomial of a knot form in the 3-sphere, canonical form.

    Computed as the gcd of the two abelianized free derivatives of the
    single relator; canonicalized to minimum degree 0 and positive lowest
    coefficient.  Defined up to units, like every Alexander polynomial.

    >>> from onebridge.schubert import SchubertForm
    >>> print(alexander_poly(SchubertForm(0, 2, 0, 1)))
    1 - t + t^2
    """
    dx, dy = fox_images(f)
    return laurent_gcd(dx, dy)
