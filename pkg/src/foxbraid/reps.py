"""Representations of the braid-on-free-group semidirect product.

A Representation stores matrices over an exact ring for every Artin
generator and every free-group generator.  Validation checks the braid
relations and the semidirect relations x_j s_i = s_i (x_j . s_i); the
colored augmentation sends x_j to the color variable of its strand, and the
evaluation map Phi sends a group-ring element to a matrix over the Laurent
extension of the scalar ring by the color variables.
"""

from __future__ import annotations

import json

from .braids import BraidWord, act
from .errors import RepresentationError, WordError
from .literals import descriptor_from_json, parse_element
from .matrices import RingMatrix
from .rings import RingElement, ZZ, extend_with_variables
from .words import Alphabet, FreeWord, Kind, convert_alphabet


class Representation:
    """Images of s_1..s_{n-1} and x_1..x_n as invertible k x k matrices."""

    def __init__(self, strands, dimension, ring, sigma_images, x_images, label=None):
        sigma_images = tuple(sigma_images)
        x_images = tuple(x_images)
        if len(sigma_images) != strands - 1 or len(x_images) != strands:
            raise RepresentationError(
                f"need {strands - 1} sigma images and {strands} x images"
            )
        for m in sigma_images + x_images:
            if (m.rows, m.cols) != (dimension, dimension):
                raise RepresentationError("image has wrong dimension")
            if m.descriptor != ring:
                raise RepresentationError("image over the wrong ring")
            if not m.is_invertible:
                raise RepresentationError("image is not invertible")
        self.strands = strands
        self.dimension = dimension
        self.ring = ring
        self.sigma_images = sigma_images
        self.x_images = x_images
        self.label = label
        self._x_inverses = tuple(m.inverse() for m in x_images)
        self._sigma_inverses = tuple(m.inverse() for m in sigma_images)
        self._violations = None

    @staticmethod
    def trivial(strands, ring=ZZ):
        """One-dimensional trivial representation at any strand count."""
        one = RingMatrix.identity(ring, 1)
        return Representation(
            strands, 1, ring, [one] * (strands - 1), [one] * strands, label="trivial"
        )

    # -- evaluation

    def evaluate_braid(self, braid):
        if braid.strands != self.strands:
            raise WordError("braid strand count mismatch")
        out = RingMatrix.identity(self.ring, self.dimension)
        for i, step in braid.single_letters():
            factor = self.sigma_images[i - 1] if step > 0 else self._sigma_inverses[i - 1]
            out = out * factor
        return out

    def evaluate_word(self, word):
        """Multiplicative evaluation on a free-group word (either alphabet)."""
        if word.alphabet.rank != self.strands:
            raise WordError("word rank does not match strand count")
        if word.alphabet.kind == Kind.G:
            word = convert_alphabet(word, Kind.X)
        out = RingMatrix.identity(self.ring, self.dimension)
        for i, m in word.syllables:
            base = self.x_images[i - 1] if m > 0 else self._x_inverses[i - 1]
            for _ in range(abs(m)):
                out = out * base
        return out

    def evaluate(self, word_or_braid):
        if isinstance(word_or_braid, BraidWord):
            return self.evaluate_braid(word_or_braid)
        return self.evaluate_word(word_or_braid)

    def generator_images(self, kind):
        """Images of the n generators of the given alphabet kind."""
        if kind == Kind.X:
            return self.x_images
        out = []
        acc = RingMatrix.identity(self.ring, self.dimension)
        for m in self.x_images:
            acc = acc * m
            out.append(acc)
        return tuple(out)

    # -- validation

    def validate_semidirect(self):
        """List of violated defining relations (empty means valid)."""
        if self._violations is not None:
            return self._violations
        violations = []
        n = self.strands
        x_alpha = Alphabet(n, Kind.X)
        for i in range(1, n - 1):
            lhs = self.sigma_images[i - 1] * self.sigma_images[i] * self.sigma_images[i - 1]
            rhs = self.sigma_images[i] * self.sigma_images[i - 1] * self.sigma_images[i]
            if lhs != rhs:
                violations.append(f"braid relation s{i} s{i + 1} s{i} = s{i + 1} s{i} s{i + 1}")
        for i in range(1, n):
            for j in range(i + 2, n):
                if (
                    self.sigma_images[i - 1] * self.sigma_images[j - 1]
                    != self.sigma_images[j - 1] * self.sigma_images[i - 1]
                ):
                    violations.append(f"commutation s{i} s{j} = s{j} s{i}")
        for i in range(1, n):
            sigma = BraidWord(n, ((i, 1),))
            for j in range(1, n + 1):
                image = act(FreeWord.generator(x_alpha, j), sigma)
                lhs = self.x_images[j - 1] * self.sigma_images[i - 1]
                rhs = self.sigma_images[i - 1] * self.evaluate_word(image)
                if lhs != rhs:
                    violations.append(f"semidirect relation x{j} s{i} = s{i} (x{j}.s{i})")
        self._violations = violations
        return violations

    def ensure_valid(self):
        violations = self.validate_semidirect()
        if violations:
            raise RepresentationError(
                f"representation {self.label or ''} violates relations", violations
            )

    def factors_through_closure(self, braid):
        """True iff the free-group part descends to the closure's group."""
        if braid.strands != self.strands:
            raise WordError("braid strand count mismatch")
        x_alpha = Alphabet(self.strands, Kind.X)
        for i in range(1, self.strands + 1):
            xi = FreeWord.generator(x_alpha, i)
            if self.evaluate_word(xi) != self.evaluate_word(act(xi, braid)):
                return False
        return True


# ---------------------------------------------------------------------------
# abelianizations


class AbelianizationMap:
    """Each free-group generator maps to a monomial in the color variables."""

    def __init__(self, variables, images):
        self.variables = tuple(variables)
        self.images = dict(images)  # generator index -> exponent tuple
        for exp in self.images.values():
            if len(exp) != len(self.variables):
                raise WordError("exponent vector length mismatch")

    def word_exponents(self, word):
        total = [0] * len(self.variables)
        for i, m in word.syllables:
            image = self.images[i]
            for pos, e in enumerate(image):
                total[pos] += m * e
        return tuple(total)


def color_variables(palette_size):
    """Canonical variable names: t for one color, t1..tmu otherwise."""
    if palette_size == 1:
        return ("t",)
    return tuple(f"t{i}" for i in range(1, palette_size + 1))


class ColoredAugmentation:
    """The color homomorphism sending x_j to the variable of its color.

    On the g-alphabet (g_i = x1...x_i) the induced images are products of
    the first i color variables.
    """

    def __init__(self, coloring, variables=None):
        self.coloring = coloring
        self.variables = (
            tuple(variables) if variables is not None else color_variables(coloring.palette_size)
        )
        if len(self.variables) != coloring.palette_size:
            raise WordError("variable count must equal the palette size")

    def abelianization(self, kind):
        mu = len(self.variables)
        images = {}
        if kind == Kind.X:
            for i, color in enumerate(self.coloring.colors, start=1):
                exp = [0] * mu
                exp[color - 1] = 1
                images[i] = tuple(exp)
        else:
            acc = [0] * mu
            for i, color in enumerate(self.coloring.colors, start=1):
                acc[color - 1] += 1
                images[i] = tuple(acc)
        return AbelianizationMap(self.variables, images)


# ---------------------------------------------------------------------------
# the evaluation homomorphism Phi


def laurent_extension(rep, variables):
    """Scalar ring of the outputs: rep ring extended by the color variables."""
    return extend_with_variables(rep.ring, variables)


def evaluate_phi(rep, abmap, element, target=None):
    """Linear extension of w -> rho(w) * monomial(alpha(w)).

    ``element`` is a group-ring element over either alphabet; the result is
    a matrix over the Laurent extension of the representation's ring.
    """
    if target is None:
        target = laurent_extension(rep, abmap.variables)
    k = rep.dimension
    out = RingMatrix.zero(target, k, k)
    base_vars = len(target.variables) - len(abmap.variables)
    for word, coeff in sorted(
        element.terms.items(), key=lambda item: item[0].syllables
    ):
        rho = rep.evaluate_word(word).embed_into(target)
        exps = abmap.word_exponents(word)
        monomial = RingElement.monomial(target, (0,) * base_vars + exps)
        scalar = monomial * RingElement.from_int(target, coeff)
        out = out + rho.scale(scalar)
    return out


def phi_of_word(rep, abmap, word, target=None):
    from .words import GroupRing

    return evaluate_phi(rep, abmap, GroupRing.from_word(word), target)


# ---------------------------------------------------------------------------
# representation files


def representation_from_dict(data):
    ring = descriptor_from_json(data["ring"])
    n = data["n"]
    k = data["k"]

    def parse_matrix(rows):
        return RingMatrix.from_rows(
            ring, [[parse_element(entry, ring) for entry in row] for row in rows]
        )

    return Representation(
        n,
        k,
        ring,
        [parse_matrix(m) for m in data["sigma"]],
        [parse_matrix(m) for m in data["x"]],
        label=data.get("label"),
    )


def load_representation(path):
    with open(path) as fh:
        return representation_from_dict(json.load(fh))
