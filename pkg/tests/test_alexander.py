"""Closure presentations, Alexander matrices, and the determinant quotient."""

import random

import pytest

from conftest import random_braid, random_colored_braid
from foxbraid.alexander import (
    GroupPresentation,
    InvariantValue,
    alexander_matrix,
    closure_presentation,
    invariant_from_closure,
    minor_consistency_check,
    theorem48_rhs,
    twisted_alexander,
    verify_theorem48,
)
from foxbraid.braids import BraidWord, Coloring, parse_braid
from foxbraid.errors import FoxbraidError, HypothesisError
from foxbraid.literals import parse_element
from foxbraid.matrices import RingMatrix
from foxbraid.reps import ColoredAugmentation, Representation
from foxbraid.rings import equal_up_to_unit, laurent_ring
from foxbraid.words import Alphabet, Kind, parse_word


def test_closure_presentation_trefoil_g_kind():
    pres = closure_presentation(parse_braid("s1^3", 2), Kind.G)
    galph = Alphabet(2, Kind.G)
    assert pres.relators == (parse_word("g2^2 g1^-1 g2^-1 g1^-1", galph),)


def test_closure_presentation_identity_x_kind():
    pres = closure_presentation(BraidWord.identity(2), Kind.X)
    assert len(pres.relators) == 2
    assert all(r.is_identity for r in pres.relators)


def test_closure_presentation_fig8_g_kind():
    pres = closure_presentation(parse_braid("s1 s2^-1 s1 s2^-1", 3), Kind.G)
    assert len(pres.relators) == 2
    assert pres.alphabet.kind == Kind.G


def test_alexander_matrix_trefoil(trefoil_rep):
    aug = ColoredAugmentation(Coloring((1, 1)))
    braid = parse_braid("s1^3", 2)
    pres = closure_presentation(braid, Kind.G)
    abmap = aug.abelianization(Kind.G)
    matrix = alexander_matrix(pres, trefoil_rep, abmap)
    assert (matrix.rows, matrix.cols) == (2, 4)
    target = matrix.descriptor
    pe = lambda text: parse_element(text, target)
    left = matrix.submatrix([0, 1], [0, 1])
    expected_left = RingMatrix.from_rows(
        target,
        [
            [pe("-1 - s*t^3"), pe("s*t^3 - s^2*t^3")],
            [pe("-s*t^3"), pe("-1 + s*t^3")],
        ],
    )
    assert left == expected_left


def test_alexander_matrix_rejects_unkilled_relator(trefoil_rep):
    aug = ColoredAugmentation(Coloring((1, 1)))
    # sigma1 does not factor through the closure for this representation
    pres = closure_presentation(parse_braid("s1", 2), Kind.G)
    with pytest.raises(FoxbraidError):
        alexander_matrix(pres, trefoil_rep, aug.abelianization(Kind.G))


def test_hopf_invariant():
    rep = Representation.trivial(2)
    aug = ColoredAugmentation(Coloring((1, 2)))
    value = invariant_from_closure(rep, aug, parse_braid("s1^2", 2))
    ring = value.numerator.descriptor
    pe = lambda text: parse_element(text, ring)
    assert value.numerator == pe("-1 + t1*t2")
    assert value.denominator == pe("-1 + t1*t2")
    assert value.simplified == pe("1")


def test_trefoil_invariant_matches_displayed_values(trefoil_rep):
    aug = ColoredAugmentation(Coloring((1, 1)))
    value = theorem48_rhs(trefoil_rep, aug, parse_braid("s1^3", 2))
    ring = value.numerator.descriptor
    pe = lambda text: parse_element(text, ring)
    assert value.numerator == pe("1 - s^3*t^6")
    assert value.denominator == pe("1 + s*t^2 + s^2*t^4")
    assert value.simplified == pe("1 - s*t^2")


def test_trefoil_definition_side(trefoil_rep):
    aug = ColoredAugmentation(Coloring((1, 1)))
    value = invariant_from_closure(trefoil_rep, aug, parse_braid("s1^3", 2))
    ring = value.numerator.descriptor
    pe = lambda text: parse_element(text, ring)
    assert equal_up_to_unit(value.simplified, pe("1 - s*t^2"))


def test_verify_theorem_trivial_rep_trefoil():
    rep = Representation.trivial(2)
    aug = ColoredAugmentation(Coloring((1, 1)))
    report = verify_theorem48(rep, aug, parse_braid("s1^3", 2))
    assert report.equal
    ring = report.rhs.numerator.descriptor
    pe = lambda text: parse_element(text, ring)
    assert equal_up_to_unit(report.rhs.numerator, pe("1 + t^3"))
    assert equal_up_to_unit(report.rhs.denominator, pe("1 - t^2"))


def test_verify_theorem_hopf_trivial():
    rep = Representation.trivial(2)
    aug = ColoredAugmentation(Coloring((1, 2)))
    report = verify_theorem48(rep, aug, parse_braid("s1^2", 2))
    assert report.equal
    assert report.rhs.simplified is not None
    one = report.rhs.simplified.descriptor
    assert equal_up_to_unit(
        report.rhs.simplified, parse_element("1", one)
    )


def test_hypothesis_failure(trefoil_rep):
    aug = ColoredAugmentation(Coloring((1, 1)))
    with pytest.raises(HypothesisError):
        verify_theorem48(trefoil_rep, aug, parse_braid("s1", 2))


def test_zero_when_too_few_relators():
    rep = Representation.trivial(3)
    aug = ColoredAugmentation(Coloring((1, 1, 1)))
    alph = Alphabet(3, Kind.X)
    pres = GroupPresentation(alph, (parse_word("e", alph),))
    abmap = aug.abelianization(Kind.X)
    value = twisted_alexander(pres, rep, abmap)
    assert value.is_zero


def test_minor_consistency_examples(trefoil_rep, fig8_f7_rep):
    aug = ColoredAugmentation(Coloring((1, 1)))
    pres = closure_presentation(parse_braid("s1^3", 2), Kind.X)
    abmap = aug.abelianization(Kind.X)
    assert minor_consistency_check(pres, trefoil_rep, abmap, 1, 2)
    aug3 = ColoredAugmentation(Coloring((1, 1, 1)))
    pres3 = closure_presentation(parse_braid("s1 s2^-1 s1 s2^-1", 3), Kind.X)
    assert minor_consistency_check(
        pres3, fig8_f7_rep, aug3.abelianization(Kind.X), 1, 3
    )


def test_minor_consistency_random():
    rng = random.Random(81)
    rep = Representation.trivial(3)
    aug = ColoredAugmentation(Coloring((1, 1, 1)))
    abmap = aug.abelianization(Kind.X)
    for _ in range(20):
        braid = random_braid(rng, 3, 6)
        pres = closure_presentation(braid, Kind.X)
        for i in range(1, 4):
            for j in range(i + 1, 4):
                assert minor_consistency_check(pres, rep, abmap, i, j)


def test_column_choice_invariance(trefoil_rep):
    aug = ColoredAugmentation(Coloring((1, 1)))
    braid = parse_braid("s1^3", 2)
    pres = closure_presentation(braid, Kind.G)
    abmap = aug.abelianization(Kind.G)
    v1 = twisted_alexander(pres, trefoil_rep, abmap, j=1)
    v2 = twisted_alexander(pres, trefoil_rep, abmap, j=2)
    assert v1.equal_up_to_unit(v2)


def test_conjugation_invariance():
    rng = random.Random(82)
    rep = Representation.trivial(3)
    coloring = Coloring((1, 1, 1))
    aug = ColoredAugmentation(coloring)
    base = parse_braid("s1 s2^-1 s1 s2^-1", 3)
    for _ in range(10):
        a = random_braid(rng, 3, 6)
        conj = a * base * ~a
        v1 = invariant_from_closure(rep, aug, base)
        v2 = invariant_from_closure(rep, aug, conj)
        assert v1.equal_up_to_unit(v2)


def test_invariant_value_consistency(trefoil_rep):
    aug = ColoredAugmentation(Coloring((1, 1)))
    value = theorem48_rhs(trefoil_rep, aug, parse_braid("s1^3", 2))
    assert value.simplified * value.denominator == value.numerator
