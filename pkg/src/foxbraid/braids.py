"""Braid words, strand colorings, and the right braid action on free groups.

The action of the Artin generator s_i on the x-alphabet is

    x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i,   others fixed,

and on the g-alphabet (g_i = x1...x_i)

    g_i -> g_{i+1} g_i^-1 g_{i-1}   (g_0 read as the identity), others fixed.

Inverse generators use the precomputed inverse substitutions so that the
round trip is the identity on the nose.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ColoringError, ParseError, WordError
from .words import Alphabet, FreeWord, Kind, reduce_word


@dataclass(frozen=True)
class BraidWord:
    """Word in the Artin generators of the n-strand braid group."""

    strands: int
    letters: tuple  # ((generator index 1..n-1, nonzero exponent), ...)

    def __post_init__(self):
        if self.strands < 1:
            raise WordError("braid needs at least one strand")
        for i, m in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise WordError(
                    f"generator s{i} out of range for {self.strands} strands"
                )
            if m == 0:
                raise WordError("zero exponent in braid word")

    @staticmethod
    def identity(strands):
        return BraidWord(strands, ())

    @staticmethod
    def from_letters(strands, letters):
        # Merge adjacent runs of the same generator; no further rewriting.
        runs = []
        for i, m in letters:
            if m == 0:
                continue
            if runs and runs[-1][0] == i:
                merged = runs[-1][1] + m
                runs.pop()
                if merged != 0:
                    runs.append((i, merged))
            else:
                runs.append((i, m))
        return BraidWord(strands, tuple(runs))

    def __mul__(self, other):
        if self.strands != other.strands:
            raise WordError("strand count mismatch")
        return BraidWord.from_letters(self.strands, self.letters + other.letters)

    def __invert__(self):
        return BraidWord(
            self.strands, tuple((i, -m) for i, m in reversed(self.letters))
        )

    def __pow__(self, n):
        out = BraidWord.identity(self.strands)
        base = self if n >= 0 else ~self
        for _ in range(abs(n)):
            out = out * base
        return out

    def single_letters(self):
        """Yield (generator, +1/-1) with runs expanded."""
        for i, m in self.letters:
            step = 1 if m > 0 else -1
            for _ in range(abs(m)):
                yield i, step

    def __str__(self):
        if not self.letters:
            return "e"
        return " ".join(
            f"s{i}" if m == 1 else f"s{i}^{m}" for i, m in self.letters
        )


def permutation(braid):
    """Underlying permutation as a tuple p with strand j ending at p[j-1]."""
    perm = list(range(1, braid.strands + 1))
    for i, _ in braid.single_letters():
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def exponent_sum(braid):
    return sum(m for _, m in braid.letters)


def closure_component_count(braid):
    """Number of components of the closure = cycle count of the permutation."""
    perm = permutation(braid)
    seen = set()
    count = 0
    for start in range(1, braid.strands + 1):
        if start in seen:
            continue
        count += 1
        j = start
        while j not in seen:
            seen.add(j)
            j = perm[j - 1]
    return count


@dataclass(frozen=True)
class Coloring:
    """Surjective assignment of colors 1..palette_size to the n strands."""

    colors: tuple

    def __post_init__(self):
        if not self.colors:
            raise ColoringError("empty coloring")
        palette = set(self.colors)
        if palette != set(range(1, len(palette) + 1)):
            raise ColoringError(
                f"colors must be exactly 1..mu with every color used, got {self.colors}"
            )

    @property
    def strands(self):
        return len(self.colors)

    @property
    def palette_size(self):
        return max(self.colors)

    def __str__(self):
        return ",".join(str(c) for c in self.colors)


def is_colored(braid, coloring):
    """True iff the braid's permutation preserves the coloring."""
    if braid.strands != coloring.strands:
        raise ColoringError(
            f"braid has {braid.strands} strands, coloring has {coloring.strands}"
        )
    perm = permutation(braid)
    return all(
        coloring.colors[perm[j] - 1] == coloring.colors[j]
        for j in range(braid.strands)
    )


def _x_substitution(n, i, inverse):
    # Images of x_1..x_n under s_i (or its inverse) as raw syllable lists.
    images = {j: [(j, 1)] for j in range(1, n + 1)}
    if not inverse:
        images[i] = [(i, 1), (i + 1, 1), (i, -1)]
        images[i + 1] = [(i, 1)]
    else:
        images[i] = [(i + 1, 1)]
        images[i + 1] = [(i + 1, -1), (i, 1), (i + 1, 1)]
    return images


def _g_substitution(n, i, inverse):
    images = {j: [(j, 1)] for j in range(1, n + 1)}
    if not inverse:
        # g_i -> g_{i+1} g_i^-1 g_{i-1}
        images[i] = [(i + 1, 1), (i, -1)] + ([(i - 1, 1)] if i > 1 else [])
    else:
        # g_i -> g_{i-1} g_i^-1 g_{i+1}
        images[i] = ([(i - 1, 1)] if i > 1 else []) + [(i, -1), (i + 1, 1)]
    return images


def act(word, braid):
    """Right action of a braid on a free-group word, either alphabet."""
    alphabet = word.alphabet
    if alphabet.rank != braid.strands:
        raise WordError(
            f"word rank {alphabet.rank} does not match {braid.strands} strands"
        )
    substitution = _x_substitution if alphabet.kind == Kind.X else _g_substitution
    current = word
    for i, step in braid.single_letters():
        images = substitution(alphabet.rank, i, step < 0)
        raw = []
        for j, m in current.syllables:
            image = images[j]
            block = image if m > 0 else [(a, -e) for a, e in reversed(image)]
            for _ in range(abs(m)):
                raw.extend(block)
        current = reduce_word(raw, alphabet)
    return current


_BRAID_TOKEN_RE = re.compile(r"s(\d+)(?:\^(-?\d+))?$")


def parse_braid(text, strands):
    """Parse braid-word syntax, e.g. ``s1^3`` or ``s1 s2^-1 s1 s2^-1``."""
    stripped = text.strip()
    if stripped in ("", "e"):
        return BraidWord.identity(strands)
    letters = []
    pos = 0
    for token in stripped.split():
        pos = text.find(token, pos)
        m = _BRAID_TOKEN_RE.match(token)
        if m is None:
            raise ParseError(f"bad braid letter {token!r}", pos)
        index = int(m.group(1))
        if not 1 <= index <= strands - 1:
            raise ParseError(
                f"generator s{index} out of range for {strands} strands", pos
            )
        letters.append((index, int(m.group(2)) if m.group(2) else 1))
        pos += len(token)
    return BraidWord.from_letters(strands, letters)


def parse_coloring(text):
    """Parse coloring syntax like ``1,1,1`` or ``1,2``."""
    try:
        colors = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"bad coloring {text!r}", 0) from None
    return Coloring(colors)
