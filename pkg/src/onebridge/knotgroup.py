"""Knot group presentations and first homology for 1-bridge torus knots.

The exterior of a 1-bridge torus knot in a lens space has a two-generator
one-relator presentation read off from the strand trace: each strand label
k carries a conjugate x_k of a power of the meridian generator x, and the
single relator is built from two building blocks, the plain product
x_1 ... x_n and a block encoding the winding, composed according to the
ambient lens space coefficients.

All homology answers are produced twice on demand: once by closed-form
coefficient formulas and once by Smith normal form of the abelianized
relator, and the test suite keeps the two routes glued together.
"""

from dataclasses import dataclass
from math import gcd

from .words import FreeWord
from .exactalg import AbelianGroupInvariants
from .schubert import swap_st, trace_triples, count_components_fast

__all__ = [
    "LensSpace",
    "S3",
    "Presentation",
    "parse_lens",
    "relator_R01",
    "relator_R10",
    "relator_Rpq",
    "presentation",
    "ell",
    "meridian_x_exponent",
    "exponent_sums",
    "h1_exterior",
    "h1_exterior_snf",
    "kfold_cover_exists",
    "double_cover_exists_schubert",
]


@dataclass(frozen=True)
class LensSpace:
    """A lens space L(p, q) in canonical coefficients.

    Canonical means (1, 0), (0, 1), or p >= 2 with 1 <= q < p and
    gcd(p, q) = 1.  Use from_params to canonicalize arbitrary coprime
    coefficients; the constructor itself insists on canonical input.
    L(1, 0) is the 3-sphere.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if not (isinstance(p, int) and isinstance(q, int)):
            raise ValueError("lens coefficients must be integers")
        if (p, q) in ((1, 0), (0, 1)):
            return
        if p >= 2 and 1 <= q < p and gcd(p, q) == 1:
            return
        raise ValueError(
            "not canonical lens coefficients: (%d, %d); use from_params"
            % (p, q))

    @classmethod
    def from_params(cls, p, q):
        """Canonicalize coprime (p, q): reduce q mod p, fold L(1,*) to L(1,0)."""
        if not (isinstance(p, int) and isinstance(q, int)):
            raise ValueError("lens coefficients must be integers")
        if p < 0:
            raise ValueError("p must be non-negative, got %d" % p)
        if p == 0:
            if abs(q) != 1:
                raise ValueError("L(0, q) needs q = +-1, got q = %d" % q)
            return cls(0, 1)
        if p == 1:
            return cls(1, 0)
        qm = q % p
        if qm == 0 or gcd(p, qm) != 1:
            raise ValueError("coefficients (%d, %d) are not coprime" % (p, q))
        return cls(p, qm)

    def is_s3(self):
        return self.p == 1

    def __str__(self):
        return "L(%d,%d)" % (self.p, self.q)


S3 = LensSpace(1, 0)


def parse_lens(text):
    """Parse "p/q" into a canonical LensSpace.

    >>> print(parse_lens("4/1"))
    L(4,1)
    >>> print(parse_lens("1/1"))
    L(1,0)
    """
    parts = text.split("/")
    if len(parts) != 2:
        raise ValueError("expected lens coefficients as p/q, got %r" % text)
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError("lens coefficients must be integers: %r" % text)
    return LensSpace.from_params(p, q)


@dataclass(frozen=True)
class Presentation:
    """Generators and relators of a finitely presented group."""

    generators: tuple
    relators: tuple


def _positive_knot_form(f):
    """Swap to an eps=+1 form (a knot-preserving move) and check knottedness."""
    g = swap_st(f) if f.eps == -1 else f
    c = count_components_fast(g)
    if c != 1:
        raise ValueError("not a knot: %d components" % c)
    return g


def _xgen(i):
    return "x%d" % i


def relator_R01(f):
    """The block x_1 x_2 ... x_n in the strand-label alphabet.

    >>> from onebridge.schubert import SchubertForm
    >>> print(relator_R01(SchubertForm(0, 2, 0, 1)))
    x1x2x3
    """
    g = _positive_knot_form(f)
    return FreeWord([(_xgen(i), 1) for i in range(1, g.n + 1)])


def relator_R10(f):
    """The winding block: copies of the x_1..x_n product and a reversed tail.

    With the winding written as rho = m*n + rb (floor division, 0 <= rb < n),
    the word is m inverse copies of x_1...x_n for positive rho (or -m plain
    copies for negative rho) followed by x_n^-1 x_{n-1}^-1 ... x_{n-rb+1}^-1
    and a final y.  A zero winding gives the bare y.
    """
    g = _positive_knot_form(f)
    n = g.n
    m, rb = divmod(g.rho, n)
    parts = []
    block = [(_xgen(i), 1) for i in range(1, n + 1)]
    if m > 0:
        inv = [(gen, -e) for gen, e in reversed(block)]
        for _ in range(m):
            parts.extend(inv)
    elif m < 0:
        for _ in range(-m):
            parts.extend(block)
    for i in range(n, n - rb, -1):
        parts.append((_xgen(i), -1))
    parts.append(("y", 1))
    return FreeWord(parts)


def relator_Rpq(f, L):
    """The single relator word for the exterior in L(p, q), label alphabet.

    Built inductively: start from the winding block, then at stage
    i = 2..p append either the winding block alone or the x_1..x_n product
    followed by the winding block, according to the residue
    1 + (i-1)q mod p landing in 1..p-q or not.
    """
    if not isinstance(L, LensSpace):
        raise TypeError("L must be a LensSpace")
    if L.p == 0:
        return relator_R01(f)
    if L.p == 1:
        return relator_R10(f)
    p, q = L.p, L.q
    r10 = relator_R10(f)
    r01 = relator_R01(f)
    word = r10
    for i in range(2, p + 1):
        j = (1 + (i - 1) * q - 1) % p + 1
        if 1 <= j <= p - q:
            word = word * r10
        else:
            word = word * r01 * r10
    return word


def _label_data(f):
    """For each strand label, the conjugator and meridian power it carries.

    Returns (positive form, {label: (P, D)}) where the strand generator
    x_label rewrites to P^-1 x^D P; P is the product of the crossing words
    along the trace up to that strand and D the running sign product.
    """
    g = _positive_knot_form(f)
    data = {}
    prefix = FreeWord()
    direction = 1
    for step in trace_triples(g):
        prefix = prefix * step.letter
        direction *= step.sign
        data[step.label] = (prefix, direction)
    return g, data


def presentation(f, L):
    """Two-generator one-relator presentation of the knot exterior group.

    Generators x (meridian disk) and y (the other handle); the relator is
    the label-alphabet relator with every strand generator x_k replaced by
    its conjugated meridian power, freely reduced.
    """
    g, data = _label_data(f)
    raw = relator_Rpq(g, L)
    out = []
    for gen, exp in raw.syllables:
        if gen == "y":
            out.append(("y", exp))
            continue
        label = int(gen[1:])
        P, D = data[label]
        out.extend(P.inverse().syllables)
        out.append(("x", D * exp))
        out.extend(P.syllables)
    return Presentation(("x", "y"), (FreeWord(out),))


def ell(f):
    """Sum over strands of the running sign products along the trace.

    This is the x-exponent sum of the substituted x_1..x_n block, the
    integer that controls all the homology below.

    >>> from onebridge.schubert import SchubertForm
    >>> ell(SchubertForm(1, 3, 0, 2))
    -2
    """
    g, data = _label_data(f)
    return sum(D for _, D in data.values())


def exponent_sums(f, L):
    """(x, y) exponent sums of the substituted relator, without substituting.

    Each strand letter x_k^e contributes e*D(k) to the x sum and nothing
    to the y sum, so both sums come straight off the label-alphabet
    relator.
    """
    g, data = _label_data(f)
    raw = relator_Rpq(g, L)
    nx = 0
    ny = 0
    for gen, exp in raw.syllables:
        if gen == "y":
            ny += exp
        else:
            nx += exp * data[int(gen[1:])][1]
    return nx, ny


def meridian_x_exponent(f):
    """x-exponent sum of the substituted winding block.

    The image of y in the abelianization of the exterior group is
    determined by this number (y maps to t to the power minus this).
    """
    g, data = _label_data(f)
    raw = relator_R10(g)
    return sum(exp * data[int(gen[1:])][1]
               for gen, exp in raw.syllables if gen != "y")


def h1_exterior(f, L):
    """First homology of the knot exterior, by closed formula.

    Z + Z_{gcd(p, ell)} for p >= 1, and Z + Z_|ell| for p = 0 (with
    Z + Z when ell = 0).

    >>> from onebridge.schubert import SchubertForm
    >>> print(h1_exterior(SchubertForm(1, 3, 0, 2), LensSpace(4, 1)))
    Z + Z_2
    """
    lf = ell(f)
    if L.p >= 1:
        d = gcd(L.p, abs(lf))
        torsion = (d,) if d >= 2 else ()
        return AbelianGroupInvariants(1, torsion)
    a = abs(lf)
    if a == 0:
        return AbelianGroupInvariants(2, ())
    return AbelianGroupInvariants(1, (a,) if a >= 2 else ())


def h1_exterior_snf(f, L):
    """First homology of the exterior by Smith normal form.

    Abelianizes the one-relator presentation: two generators, one relation
    row of exponent sums.  Must agree with h1_exterior everywhere; the
    tests enforce it.
    """
    from .exactalg import IntMatrix, smith_normal_form
    nx, ny = exponent_sums(f, L)
    diag = smith_normal_form(IntMatrix([[nx, ny]]))
    return AbelianGroupInvariants.from_diagonal(diag, 2)


def kfold_cover_exists(f, L, k):
    """Whether the exterior group surjects onto Z/k (a k-fold cyclic cover).

    Equivalent to gcd(p, k) dividing q*ell + p*mu, where mu is the
    meridian x-exponent.  In the 3-sphere this always holds.
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError("k must be an integer >= 2, got %r" % (k,))
    lf = ell(f)
    mu = meridian_x_exponent(f)
    return (L.q * lf + L.p * mu) % gcd(L.p, k) == 0


def double_cover_exists_schubert(f, L):
    """Double cover existence read off the normal form parameters.

    True when p is odd or s + t is odd.  Agrees with kfold_cover_exists
    at k = 2 (the sweep in the tests checks the two routes against each
    other).
    """
    c = count_components_fast(f)
    if c != 1:
        raise ValueError("not a knot: %d components" % c)
    return L.p % 2 == 1 or (f.s + f.t) % 2 == 1
