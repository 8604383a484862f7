"""Reduced words in free groups and their integral group rings.

A free group of rank n is presented on one of two generating alphabets:
``x1..xn`` or ``g1..gn``, related by ``g_i = x1 x2 ... x_i``.  Words are
stored in syllable (run-length) form, always freely reduced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import ParseError, WordError


class Kind(Enum):
    X = "x"
    G = "g"


@dataclass(frozen=True)
class Alphabet:
    """Generating alphabet of a free group: n letters of one kind."""

    rank: int
    kind: Kind

    def __post_init__(self):
        if self.rank < 1:
            raise WordError(f"alphabet rank must be >= 1, got {self.rank}")

    def check_index(self, i):
        if not 1 <= i <= self.rank:
            raise WordError(f"generator index {i} out of range 1..{self.rank}")


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word, stored as ((index, exponent), ...) syllables."""

    alphabet: Alphabet
    syllables: tuple

    @staticmethod
    def identity(alphabet):
        return FreeWord(alphabet, ())

    @staticmethod
    def generator(alphabet, i, exponent=1):
        alphabet.check_index(i)
        if exponent == 0:
            return FreeWord(alphabet, ())
        return FreeWord(alphabet, ((i, exponent),))

    @property
    def is_identity(self):
        return not self.syllables

    def __mul__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise WordError("cannot multiply words over different alphabets")
        return reduce_word(self.syllables + other.syllables, self.alphabet)

    def __invert__(self):
        return FreeWord(
            self.alphabet, tuple((i, -m) for i, m in reversed(self.syllables))
        )

    def __pow__(self, n):
        if n == 0:
            return FreeWord.identity(self.alphabet)
        base = self if n > 0 else ~self
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def length(self):
        return sum(abs(m) for _, m in self.syllables)

    def __str__(self):
        return format_word(self)


def reduce_word(syllables, alphabet):
    """Freely reduce a raw syllable sequence into a FreeWord.

    Adjacent syllables with the same index are merged; zero exponents drop
    out, which can cascade.  Idempotent on already-reduced input.
    """
    stack = []
    for i, m in syllables:
        alphabet.check_index(i)
        if not isinstance(m, int):
            raise WordError(f"exponent {m!r} is not an integer")
        if m == 0:
            continue
        if stack and stack[-1][0] == i:
            merged = stack[-1][1] + m
            stack.pop()
            if merged != 0:
                stack.append((i, merged))
        else:
            stack.append((i, m))
    return FreeWord(alphabet, tuple(stack))


def convert_alphabet(word, target_kind):
    """Rewrite a word over the other alphabet of the same rank.

    Uses g_i = x1...x_i, equivalently x1 = g1 and x_i = g_{i-1}^-1 g_i.
    The round trip is the identity.
    """
    alphabet = word.alphabet
    if alphabet.kind == target_kind:
        raise WordError("conversion requires a different target kind")
    target = Alphabet(alphabet.rank, target_kind)
    raw = []
    for i, m in word.syllables:
        if alphabet.kind == Kind.G:
            image = [(j, 1) for j in range(1, i + 1)]
        elif i == 1:
            image = [(1, 1)]
        else:
            image = [(i - 1, -1), (i, 1)]
        block = image if m > 0 else [(j, -e) for j, e in reversed(image)]
        for _ in range(abs(m)):
            raw.extend(block)
    return reduce_word(raw, target)


class GroupRing:
    """Finite Z-linear combinations of free-group words."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet, terms=None):
        self.alphabet = alphabet
        self.terms = {w: c for w, c in (terms or {}).items() if c != 0}

    @staticmethod
    def zero(alphabet):
        return GroupRing(alphabet)

    @staticmethod
    def from_word(word, coefficient=1):
        return GroupRing(word.alphabet, {word: coefficient})

    @staticmethod
    def from_int(alphabet, value):
        return GroupRing(alphabet, {FreeWord.identity(alphabet): value})

    @property
    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.alphabet != other.alphabet:
            raise WordError("group-ring elements over different alphabets")

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRing.from_int(self.alphabet, other)
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return GroupRing(self.alphabet, terms)

    __radd__ = __add__

    def __neg__(self):
        return GroupRing(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = GroupRing.from_int(self.alphabet, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRing(
                self.alphabet, {w: c * other for w, c in self.terms.items()}
            )
        if isinstance(other, FreeWord):
            other = GroupRing.from_word(other)
        self._check(other)
        terms = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u * v
                terms[w] = terms.get(w, 0) + a * b
        return GroupRing(self.alphabet, terms)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        if isinstance(other, FreeWord):
            return GroupRing.from_word(other) * self
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRing.from_int(self.alphabet, other)
        if not isinstance(other, GroupRing):
            return NotImplemented
        return self.alphabet == other.alphabet and self.terms == other.terms

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda t: t[0].syllables):
            parts.append(f"{c:+d}*{format_word(w)}")
        return " ".join(parts)


_SYLLABLE_RE = re.compile(r"([xg])(\d+)(?:\^(-?\d+))?$")


def format_word(word):
    if word.is_identity:
        return "e"
    letter = word.alphabet.kind.value
    parts = []
    for i, m in word.syllables:
        parts.append(f"{letter}{i}" if m == 1 else f"{letter}{i}^{m}")
    return " ".join(parts)


def parse_word(text, alphabet):
    """Parse the textual word syntax, e.g. ``x1 x2^-1`` or ``g2^3`` or ``e``."""
    stripped = text.strip()
    if stripped in ("", "e"):
        return FreeWord.identity(alphabet)
    raw = []
    pos = 0
    for token in stripped.split():
        pos = text.find(token, pos)
        if token == "e":
            pos += len(token)
            continue
        m = _SYLLABLE_RE.match(token)
        if m is None:
            raise ParseError(f"bad syllable {token!r}", pos)
        if m.group(1) != alphabet.kind.value:
            raise ParseError(
                f"letter {m.group(1)!r} does not match the {alphabet.kind.value}-alphabet",
                pos,
            )
        index = int(m.group(2))
        if not 1 <= index <= alphabet.rank:
            raise ParseError(f"index {index} out of range 1..{alphabet.rank}", pos)
        raw.append((index, int(m.group(3)) if m.group(3) else 1))
        pos += len(token)
    return reduce_word(raw, alphabet)
