"""Alexander matrices, twisted Alexander invariants, and the mechanical
verification that the reduced Long-Moody determinant quotient computes them.

The invariant of a presentation <x_1..x_n | r_1..r_m> with respect to a
linear representation and an abelianization is

    gcd_I( det M_j^I ) / det Phi(x_j - 1)

where M is the block matrix Phi(dr_i/dx_j) with the j-th block column
removed, well-defined up to unit monomials.  For braid closures m = n-1 and
a single minor suffices; gcd over several minors is implemented for
univariate Laurent rings over a field only.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .braids import act, is_colored
from .errors import (
    ColoringError,
    FoxbraidError,
    HypothesisError,
    NotDivisibleError,
    RingError,
)
from .fox import fox_derivative
from .matrices import RingMatrix, assemble_blocks, block_diag
from .longmoody import lm_reduced
from .reps import evaluate_phi, laurent_extension
from .rings import (
    RingElement,
    equal_up_to_unit,
    extend_with_variables,
    unit_normal_form,
    univariate_gcd,
)
from .words import Alphabet, FreeWord, GroupRing, Kind


@dataclass(frozen=True)
class GroupPresentation:
    """Finite presentation: generators of one alphabet, relators = 1."""

    alphabet: Alphabet
    relators: tuple

    def __post_init__(self):
        for r in self.relators:
            if r.alphabet != self.alphabet:
                raise FoxbraidError("relator over the wrong alphabet")


def closure_presentation(braid, kind):
    """Presentation of the closure's group from the braid action.

    X-kind uses all n relators (x_i . b) x_i^-1; G-kind drops the last one
    because the top g-generator is fixed by every braid.
    """
    n = braid.strands
    alphabet = Alphabet(n, kind)
    count = n if kind == Kind.X else n - 1
    relators = []
    for i in range(1, count + 1):
        gen = FreeWord.generator(alphabet, i)
        relators.append(act(gen, braid) * ~gen)
    return GroupPresentation(alphabet, tuple(relators))


class WordImages:
    """Generator images over a ring, evaluated multiplicatively on words.

    Duck-types the slice of Representation that evaluate_phi needs, for the
    general (non-closure) entry point where only per-generator matrices are
    given.
    """

    def __init__(self, ring, dimension, images):
        self.ring = ring
        self.dimension = dimension
        self.images = tuple(images)
        self._inverses = tuple(m.inverse() for m in self.images)

    def evaluate_word(self, word):
        out = RingMatrix.identity(self.ring, self.dimension)
        for i, m in word.syllables:
            base = self.images[i - 1] if m > 0 else self._inverses[i - 1]
            for _ in range(abs(m)):
                out = out * base
        return out


def _phi_generator_minus_one(images, abmap, index, alphabet, target):
    gen = FreeWord.generator(alphabet, index)
    rho = images.evaluate_word(gen).embed_into(target)
    base_vars = len(target.variables) - len(abmap.variables)
    monomial = RingElement.monomial(
        target, (0,) * base_vars + abmap.images[index]
    )
    return rho.scale(monomial) - RingMatrix.identity(target, images.dimension)


def alexander_matrix(presentation, images, abmap):
    """Block matrix Phi(dr_i/dx_j) of shape mk x nk.

    Every relator must be killed by both the representation and the
    abelianization, otherwise Phi is ill-defined on the quotient group.
    """
    n = presentation.alphabet.rank
    target = extend_with_variables(images.ring, abmap.variables)
    identity = RingMatrix.identity(images.ring, images.dimension)
    for r in presentation.relators:
        if images.evaluate_word(r) != identity:
            raise FoxbraidError(f"relator {r} is not killed by the representation")
        if any(e != 0 for e in abmap.word_exponents(r)):
            raise FoxbraidError(f"relator {r} is not killed by the abelianization")
    grid = []
    for r in presentation.relators:
        grid.append(
            [
                evaluate_phi(images, abmap, fox_derivative(r, j), target)
                for j in range(1, n + 1)
            ]
        )
    return assemble_blocks(grid) if grid else RingMatrix.zero(target, 0, n * images.dimension)


@dataclass(frozen=True)
class InvariantValue:
    """Numerator/denominator pair, with the exact quotient when it exists."""

    numerator: RingElement
    denominator: RingElement
    simplified: object  # RingElement or None

    @staticmethod
    def build(numerator, denominator):
        if denominator.is_zero:
            raise RingError("invariant denominator is zero")
        try:
            simplified = numerator.exact_divide(denominator)
        except NotDivisibleError:
            simplified = None
        return InvariantValue(numerator, denominator, simplified)

    @staticmethod
    def zero(descriptor):
        zero = RingElement.zero(descriptor)
        return InvariantValue(zero, RingElement.one(descriptor), zero)

    @property
    def is_zero(self):
        return self.numerator.is_zero

    def equal_up_to_unit(self, other):
        """Cross-multiplied comparison, no divisibility required."""
        return equal_up_to_unit(
            self.numerator * other.denominator, other.numerator * self.denominator
        )

    def __str__(self):
        out = f"({self.numerator}) / ({self.denominator})"
        if self.simplified is not None:
            out += f" = {self.simplified}"
        return out


def _remove_block_column(matrix, j, k, n):
    cols = [c for c in range(n * k) if not (j - 1) * k <= c < j * k]
    return matrix.submatrix(range(matrix.rows), cols)


def _numerator_dets(matrix_j, k, n, m):
    size = (n - 1) * k
    if matrix_j.rows == size:
        return [matrix_j.determinant()]
    return [
        matrix_j.submatrix(rows, range(size)).determinant()
        for rows in combinations(range(matrix_j.rows), size)
    ]


def twisted_alexander(presentation, images, abmap, j=None):
    """Twisted Alexander invariant of a finite presentation.

    ``j`` picks the removed generator; by default the last generator is
    tried first, then the others, until one has a nonzero denominator.
    """
    n = presentation.alphabet.rank
    m = len(presentation.relators)
    k = images.dimension
    target = extend_with_variables(images.ring, abmap.variables)
    if m < n - 1:
        return InvariantValue.zero(target)
    matrix = alexander_matrix(presentation, images, abmap)

    def denominator_for(column):
        return _phi_generator_minus_one(
            images, abmap, column, presentation.alphabet, target
        ).determinant()

    candidates = [j] if j is not None else [n] + list(range(1, n))
    usable = []
    for column in candidates:
        den = denominator_for(column)
        if not den.is_zero:
            usable.append((column, den))
            break
    if not usable:
        alternatives = [
            c for c in range(1, n + 1) if not denominator_for(c).is_zero
        ]
        raise RingError(
            f"det Phi(generator {j} - 1) = 0; usable generators: {alternatives or 'none'}"
        )
    column, den = usable[0]
    minors = _numerator_dets(_remove_block_column(matrix, column, k, n), k, n, m)
    if len(minors) == 1:
        numerator = minors[0]
    else:
        nonzero = [d for d in minors if not d.is_zero]
        if not nonzero:
            numerator = RingElement.zero(target)
        else:
            numerator = univariate_gcd(nonzero)  # raises GcdUnsupportedError
    return InvariantValue.build(numerator, den)


def minor_consistency_check(presentation, images, abmap, i, j, row_selection=None):
    """Check det M_i^I det Phi(x_j - 1) = +- det M_j^I det Phi(x_i - 1)."""
    n = presentation.alphabet.rank
    k = images.dimension
    target = extend_with_variables(images.ring, abmap.variables)
    matrix = alexander_matrix(presentation, images, abmap)
    size = (n - 1) * k
    if row_selection is None:
        row_selection = range(size)
    mi = _remove_block_column(matrix, i, k, n).submatrix(row_selection, range(size))
    mj = _remove_block_column(matrix, j, k, n).submatrix(row_selection, range(size))
    alphabet = presentation.alphabet
    di = _phi_generator_minus_one(images, abmap, i, alphabet, target).determinant()
    dj = _phi_generator_minus_one(images, abmap, j, alphabet, target).determinant()
    if di.is_zero or dj.is_zero:
        raise RingError("both generator denominators must be nonzero")
    lhs = mi.determinant() * dj
    rhs = mj.determinant() * di
    return lhs == rhs or lhs == -rhs


# ---------------------------------------------------------------------------
# the Long-Moody route and its verification


def _check_hypotheses(rep, aug, braid):
    if not is_colored(braid, aug.coloring):
        raise ColoringError(f"braid {braid} does not preserve coloring {aug.coloring}")
    rep.ensure_valid()
    if not rep.factors_through_closure(braid):
        raise HypothesisError(
            "factors-through-closure",
            "the free-group representation does not descend to the closure group",
        )


def theorem48_rhs(rep, aug, braid):
    """Determinant quotient of the reduced construction.

    Numerator: det(reduced matrix - Diag(rho(b),...)).  Denominator:
    det(rho(x1...xn) t_{c1}...t_{cn} - I).
    """
    _check_hypotheses(rep, aug, braid)
    n = rep.strands
    target = laurent_extension(rep, aug.variables)
    reduced = lm_reduced(rep, aug, braid)
    rho_b = rep.evaluate_braid(braid).embed_into(target)
    numerator = (reduced - block_diag([rho_b] * (n - 1))).determinant()
    x_alpha = Alphabet(n, Kind.X)
    full_loop = FreeWord.identity(x_alpha)
    for i in range(1, n + 1):
        full_loop = full_loop * FreeWord.generator(x_alpha, i)
    rho_loop = rep.evaluate_word(full_loop).embed_into(target)
    base_vars = len(target.variables) - len(aug.variables)
    exps = [0] * len(aug.variables)
    for color in aug.coloring.colors:
        exps[color - 1] += 1
    monomial = RingElement.monomial(target, (0,) * base_vars + tuple(exps))
    denominator = (
        rho_loop.scale(monomial) - RingMatrix.identity(target, rep.dimension)
    ).determinant()
    if denominator.is_zero:
        raise HypothesisError("nonzero-denominator", "det(rho(x1...xn) t... - I) = 0")
    return InvariantValue.build(numerator, denominator)


def invariant_from_closure(rep, aug, braid, kind=Kind.G, j=None):
    """Twisted Alexander invariant of the braid closure, from its
    presentation (the defining determinant quotient)."""
    _check_hypotheses(rep, aug, braid)
    presentation = closure_presentation(braid, kind)
    images = WordImages(rep.ring, rep.dimension, rep.generator_images(kind))
    abmap = aug.abelianization(kind)
    return twisted_alexander(presentation, images, abmap, j=j)


@dataclass(frozen=True)
class VerificationReport:
    lhs: InvariantValue
    rhs: InvariantValue
    equal: bool
    lhs_cross_normal: RingElement
    rhs_cross_normal: RingElement


def verify_theorem48(rep, aug, braid):
    """Compare the closure-presentation invariant with the reduced
    Long-Moody determinant quotient, up to unit monomials."""
    lhs = invariant_from_closure(rep, aug, braid)
    rhs = theorem48_rhs(rep, aug, braid)
    lhs_cross = lhs.numerator * rhs.denominator
    rhs_cross = rhs.numerator * lhs.denominator
    equal = equal_up_to_unit(lhs_cross, rhs_cross)
    return VerificationReport(
        lhs,
        rhs,
        equal,
        unit_normal_form(lhs_cross) if not lhs_cross.is_zero else lhs_cross,
        unit_normal_form(rhs_cross) if not rhs_cross.is_zero else rhs_cross,
    )
