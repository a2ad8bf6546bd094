"""Puncture-slide calculus on the twice-punctured torus and Conway forms.

A 1-bridge torus knot is the union of a trivial arc in each solid torus of
a genus one splitting, so it is determined by how the gluing moves the two
punctures that the arc leaves on the splitting surface.  The relevant
gluing maps form the subgroup of the mapping class group of the twice
punctured torus generated by two torus twists (named tl and tm here, for
twists along the two handle curves) and a half swap of the punctures
(named s).

Inside it sits the index-two subgroup of maps whose twist exponent sums
are both even, freely generated by s together with the two puncture
slides hl = tl s^-1 tl^-1 and hm = tm s tm^-1.  Rewriting a word in the
twists into the slide alphabet is a coset-table computation with four
cosets, and the Conway normal form of a knot is just a run-length
reading of the rewritten word.  Everything here is exact word algebra:
no figures, no matrices, only FreeWord.
"""

from dataclasses import dataclass

from .words import FreeWord

__all__ = [
    "TWIST_ALPHABET",
    "SLIDE_ALPHABET",
    "ConwayForm",
    "parse_conway",
    "format_conway",
    "in_H",
    "rewrite_to_H",
    "slide_word_as_twists",
    "conway_to_hword",
    "hword_to_conway",
    "conway_equal",
    "two_bridge_to_conway",
]

TWIST_ALPHABET = ("tl", "tm", "s")
SLIDE_ALPHABET = ("hl", "hm", "s")

_TL = FreeWord([("tl", 1)])
_TM = FreeWord([("tm", 1)])
_S = FreeWord([("s", 1)])
_HL = FreeWord([("hl", 1)])
_HM = FreeWord([("hm", 1)])

# Coset rewriting table.  Cosets of the even-exponent subgroup are labelled
# by the parities (tm exponent, tl exponent); the representative of coset
# (em, el) is tm^em tl^el.  _TABLE[(em, el), g] is the subgroup element
# contributed when the letter g is read at coset (em, el): representative *
# letter * (representative of the new coset)^-1, expressed in the slide
# alphabet.  Values were derived from the defining relations of the slide
# generators and are locked down by the identities in the test suite
# (twelve relator conjugates rewriting to the empty word, and the round
# trip through slide_word_as_twists).
_E = FreeWord()
_TABLE = {
    ((0, 0), "s"): _S,
    ((1, 0), "s"): _HM,
    ((0, 1), "s"): _HL.inverse(),
    ((1, 1), "s"): _HM.inverse() * _S.inverse() * _HL,
    ((0, 0), "tl"): _E,
    ((0, 0), "tm"): _E,
    ((1, 0), "tl"): _E,
    ((0, 1), "tl"): _HL.inverse() * _S,
    ((1, 0), "tm"): _HM.inverse() * _S.inverse(),
    ((0, 1), "tm"): (_HM.inverse() * _S.inverse() * _HL) ** -2,
    ((1, 1), "tl"): _HM.inverse() * _S.inverse() * _HL * _HM,
    ((1, 1), "tm"): _HM.inverse() * _S.inverse() * _HL ** 2,
}


def _coset_after(coset, gen):
    em, el = coset
    if gen == "tm":
        return (em ^ 1, el)
    if gen == "tl":
        return (em, el ^ 1)
    return coset


def in_H(w):
    """Whether a twist-alphabet word lies in the even-exponent subgroup."""
    return w.exponent_sum("tl") % 2 == 0 and w.exponent_sum("tm") % 2 == 0


def rewrite_to_H(w):
    """Rewrite a twist-alphabet word from the subgroup into slide letters.

    Standard coset rewriting: scan the word letter by letter, tracking the
    coset of the prefix read so far, and emit the table entry for each
    letter (inverted for inverse letters).  The result is the same group
    element written in the free generators s, hl, hm.

    >>> print(rewrite_to_H(FreeWord.parse("tl s^-1 tl^-1", TWIST_ALPHABET)))
    hl
    >>> print(rewrite_to_H(FreeWord.parse("tm s tm^-1", TWIST_ALPHABET)))
    hm
    """
    if not in_H(w):
        raise ValueError("word is not in the even-exponent subgroup: %s" % w)
    out = []
    coset = (0, 0)
    for gen, step in w.letters():
        if gen not in ("tl", "tm", "s"):
            raise ValueError("unknown twist letter %r" % gen)
        if step == 1:
            out.extend(_TABLE[coset, gen].syllables)
            coset = _coset_after(coset, gen)
        else:
            coset = _coset_after(coset, gen)  # parity flip is its own inverse
            out.extend(_TABLE[coset, gen].inverse().syllables)
    if coset != (0, 0):
        raise AssertionError("coset tracking did not return to the identity")
    return FreeWord(out)


_SLIDE_AS_TWISTS = {
    "s": _S,
    "hl": _TL * _S.inverse() * _TL.inverse(),
    "hm": _TM * _S * _TM.inverse(),
}


def slide_word_as_twists(w):
    """Expand a slide-alphabet word back into the twist alphabet.

    Inverse to rewrite_to_H on the subgroup (the tests check the round
    trip on random words).
    """
    return w.substitute(_SLIDE_AS_TWISTS)


# ---------------------------------------------------------------------------
# Conway normal forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConwayForm:
    """Slide-alphabet gluing data of a 1-bridge torus knot.

    a and b are equal-length tuples (length even, at least 2); the gluing
    word is the product over i = 1..m of s^-b_i followed by a slide to the
    power a_i, alternating hm for odd i and hl for even i, with an
    optional extra tl twist recorded by delta in {0, 1}.  delta rides
    along as metadata: it is not a slide letter and never folds into the
    word.
    """

    a: tuple
    b: tuple
    delta: int = 0

    def __post_init__(self):
        a = tuple(self.a)
        b = tuple(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b):
            raise ValueError("a and b must have equal length")
        if len(a) < 2 or len(a) % 2:
            raise ValueError("length must be even and at least 2")
        for v in a + b:
            if not isinstance(v, int):
                raise ValueError("entries must be integers")
        if self.delta not in (0, 1):
            raise ValueError("delta must be 0 or 1")

    @property
    def m(self):
        return len(self.a)

    def __str__(self):
        return format_conway(self)


def format_conway(c):
    """Canonical literal: blocks of four, highest index first.

    >>> print(format_conway(ConwayForm((1, -1, 1, 3), (0, 0, 0, 0))))
    C[(3,0,1,0),(-1,0,1,0)]
    """
    blocks = []
    for i in range(c.m, 0, -2):
        blocks.append("(%d,%d,%d,%d)"
                      % (c.a[i - 1], c.b[i - 1], c.a[i - 2], c.b[i - 2]))
    body = "C[" + ",".join(blocks) + "]"
    return body + (":1" if c.delta else "")


def parse_conway(text):
    """Parse a literal like "C[(3,0,1,0),(-1,0,1,0)]" or "...]:1".

    Whitespace-insensitive; errors carry positions.
    """
    pos = 0

    def skip_space():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1

    def expect(token):
        nonlocal pos
        skip_space()
        if not text.startswith(token, pos):
            raise ValueError("expected %r at position %d in %r"
                             % (token, pos, text))
        pos += len(token)

    def read_int():
        nonlocal pos
        skip_space()
        start = pos
        if pos < len(text) and text[pos] in "+-":
            pos += 1
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == start or not text[start:pos].lstrip("+-"):
            raise ValueError("expected integer at position %d in %r"
                             % (start, text))
        return int(text[start:pos])

    expect("C")
    expect("[")
    blocks = []
    while True:
        expect("(")
        vals = [read_int()]
        for _ in range(3):
            expect(",")
            vals.append(read_int())
        expect(")")
        blocks.append(vals)
        skip_space()
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        break
    expect("]")
    delta = 0
    skip_space()
    if pos < len(text) and text[pos] == ":":
        pos += 1
        skip_space()
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if text[start:pos] != "1":
            raise ValueError("expected delta flag 1 at position %d in %r"
                             % (start, text))
        delta = 1
    skip_space()
    if pos != len(text):
        raise ValueError("unexpected trailing input at position %d in %r"
                         % (pos, text))
    a = []
    b = []
    for vals in reversed(blocks):
        a_hi, b_hi, a_lo, b_lo = vals
        a.extend([a_lo, a_hi])
        b.extend([b_lo, b_hi])
    return ConwayForm(tuple(a), tuple(b), delta)


def conway_to_hword(c):
    """The slide-alphabet word of a Conway form (delta not included).

    >>> print(conway_to_hword(ConwayForm((1, -1, 1, 3), (0, 0, 0, 0))))
    hmhl^-1hmhl^3
    """
    parts = []
    for i in range(c.m):
        parts.append(("s", -c.b[i]))
        parts.append(("hm" if i % 2 == 0 else "hl", c.a[i]))
    return FreeWord(parts)


def hword_to_conway(w, delta=0):
    """Read a slide-alphabet word back into a minimal Conway form.

    Greedy scan: each hm wants an odd slot and each hl an even slot, with
    zero slots padded in when the parities do not line up; a run of s
    letters attaches to the slot of the following slide letter (or gets a
    slot of its own at the end of the word).  The result is padded to even
    length at least 2.  Composing with conway_to_hword gives back w, and
    the tests check that round trip on random words.
    """
    if delta not in (0, 1):
        raise ValueError("delta must be 0 or 1")
    a = []
    b = []
    pending_s = 0

    def emit(a_val, b_val):
        a.append(a_val)
        b.append(b_val)

    for gen, exp in w.syllables:
        if gen == "s":
            pending_s = exp
            continue
        if gen not in ("hm", "hl"):
            raise ValueError("unknown slide letter %r" % gen)
        want_odd = gen == "hm"
        # slot numbering is 1-based: slot len(a)+1 is next
        while (len(a) % 2 == 0) != want_odd:
            emit(0, 0)
        emit(exp, -pending_s)
        pending_s = 0
    if pending_s:
        emit(0, -pending_s)
    while len(a) < 2 or len(a) % 2:
        emit(0, 0)
    return ConwayForm(tuple(a), tuple(b), delta)


def conway_equal(c1, c2):
    """Whether two Conway forms name the same gluing.

    Same delta and the same slide-alphabet word; padding with zero slots
    never changes the answer.
    """
    return c1.delta == c2.delta and conway_to_hword(c1) == conway_to_hword(c2)


def two_bridge_to_conway(seq):
    """Conway form of the 2-bridge knot with even continued fraction data.

    seq is [2a_1, ..., 2a_m] with m even and every entry even.  The gluing
    word alternates tm twists (odd positions, halved) and s twists (even
    positions, as given), composed with a final swap and inverse tl twist;
    an odd tm count is fixed up by one extra inverse tm, which does not
    change the resulting knot.  The tl parity ends up odd, so these forms
    always carry delta = 1 (harmless in the 3-sphere, where every knot
    also has a delta = 0 form).

    >>> print(two_bridge_to_conway([2, 2]))
    C[(1,1,-1,0),(1,1,0,0)]:1
    """
    if not seq or len(seq) % 2:
        raise ValueError("need an even number of entries, got %d" % len(seq))
    half = []
    for v in seq:
        if not isinstance(v, int) or v % 2:
            raise ValueError("entries must be even integers, got %r" % (v,))
        half.append(v // 2)
    parts = []
    for i in range(0, len(half), 2):
        parts.append(("tm", half[i]))
        parts.append(("s", 2 * half[i + 1]))
    parts.append(("s", 1))
    parts.append(("tl", -1))
    word = FreeWord(parts)
    if word.exponent_sum("tm") % 2:
        word = word * _TM.inverse()
    delta = word.exponent_sum("tl") % 2
    g = _TL ** -delta * word
    hw = rewrite_to_H(g)
    return hword_to_conway(hw, delta)
