"""Freely reduced words in finitely generated free groups.

Generators are named by strings, and a word is stored as a tuple of
(generator, exponent) syllables with nonzero exponents and no two adjacent
syllables on the same generator.  Multiplication concatenates and freely
reduces, so a FreeWord always denotes an element of the free group rather
than an unreduced string of letters.

Everything downstream (knot group relators, Fox derivatives, the
puncture-slide calculus) is built on this class, so it stays deliberately
small: no normal closures, no automorphisms, just exact syllable algebra.
"""

__all__ = ["FreeWord", "IDENTITY"]


def _reduce(pairs):
    """Collapse a syllable sequence to freely reduced form."""
    stack = []
    for gen, exp in pairs:
        if not isinstance(exp, int):
            raise TypeError("exponent must be an integer, got %r" % (exp,))
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + exp
            stack.pop()
            if merged:
                stack.append([gen, merged])
        else:
            stack.append([gen, exp])
    return tuple((g, e) for g, e in stack)


class FreeWord:
    """An element of a free group, kept in freely reduced form.

    >>> w = FreeWord([("x", 1), ("y", -1)])
    >>> print(w * w.inverse())
    1
    >>> print(FreeWord([("x", 2), ("x", -1), ("y", 0)]))
    x
    >>> print(FreeWord([("y", 1), ("x", 1)]) ** -2)
    x^-1y^-1x^-1y^-1
    """

    __slots__ = ("syllables",)

    def __init__(self, syllables=()):
        object.__setattr__(self, "syllables", _reduce(syllables))

    # -- group operations -------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return FreeWord(self.syllables + other.syllables)

    def inverse(self):
        return FreeWord(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return IDENTITY
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    def conjugated_by(self, u):
        """Return u^-1 * self * u."""
        return u.inverse() * self * u

    # -- inspection --------------------------------------------------------

    def is_identity(self):
        return not self.syllables

    def __bool__(self):
        return bool(self.syllables)

    def __len__(self):
        """Letter length of the reduced word."""
        return sum(abs(e) for _, e in self.syllables)

    def letters(self):
        """Yield (generator, +1 or -1) for each letter, left to right."""
        for gen, exp in self.syllables:
            step = 1 if exp > 0 else -1
            for _ in range(abs(exp)):
                yield gen, step

    def exponent_sum(self, gen):
        return sum(e for g, e in self.syllables if g == gen)

    def generators(self):
        return {g for g, _ in self.syllables}

    # -- equality and hashing ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.syllables == other.syllables

    def __hash__(self):
        return hash(self.syllables)

    # -- text form -----------------------------------------------------------

    def __str__(self):
        if not self.syllables:
            return "1"
        parts = []
        for gen, exp in self.syllables:
            parts.append(gen if exp == 1 else "%s^%d" % (gen, exp))
        return "".join(parts)

    def __repr__(self):
        return "FreeWord(%r)" % (self.syllables,)

    def to_pairs(self):
        """Syllables as a list of [generator, exponent] lists (for JSON)."""
        return [[g, e] for g, e in self.syllables]

    # -- substitution ---------------------------------------------------------

    def substitute(self, mapping):
        """Replace generators by words.

        mapping sends generator names to FreeWords; unmapped generators are
        kept as single letters.  Returns the freely reduced result.
        """
        out = []
        for gen, exp in self.syllables:
            image = mapping.get(gen)
            if image is None:
                out.append((gen, exp))
            else:
                out.extend((image ** exp).syllables)
        return FreeWord(out)

    # -- parsing ----------------------------------------------------------------

    @classmethod
    def parse(cls, text, alphabet=("x", "y")):
        """Parse juxtaposition syntax like "x^-1y^2x" over a fixed alphabet.

        Longest generator name wins at each position, so multi-letter names
        such as "tm" are unambiguous as long as the alphabet is passed in.
        Whitespace is ignored.  Raises ValueError with a position on bad
        input.

        >>> FreeWord.parse("x^-1 y^2x") == FreeWord([("x", -1), ("y", 2), ("x", 1)])
        True
        """
        names = sorted(alphabet, key=len, reverse=True)
        sylls = []
        i = 0
        while i < len(text):
            if text[i].isspace():
                i += 1
                continue
            gen = None
            for name in names:
                if text.startswith(name, i):
                    gen = name
                    break
            if gen is None:
                raise ValueError(
                    "unknown generator at position %d in %r" % (i, text))
            i += len(gen)
            exp = 1
            if i < len(text) and text[i] == "^":
                i += 1
                j = i
                if j < len(text) and text[j] in "+-":
                    j += 1
                while j < len(text) and text[j].isdigit():
                    j += 1
                if j == i or not text[i:j].lstrip("+-"):
                    raise ValueError(
                        "expected integer exponent at position %d in %r"
                        % (i, text))
                exp = int(text[i:j])
                i = j
            sylls.append((gen, exp))
        return cls(sylls)


IDENTITY = FreeWord(())
