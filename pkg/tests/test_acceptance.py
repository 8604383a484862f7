"""Acceptance suite: one test (and one printed pass line) per criterion.

Run with ``pytest tests/test_acceptance.py -v`` for the per-criterion
verdicts, or with ``-s`` to see the printed summary lines as well.
"""

import random
import subprocess
import sys
import time

from conftest import random_braid, random_word
from foxbraid.alexander import (
    closure_presentation,
    invariant_from_closure,
    minor_consistency_check,
    theorem48_rhs,
    verify_theorem48,
)
from foxbraid.braids import BraidWord, Coloring, act, parse_braid
from foxbraid.fox import check_fundamental_formula
from foxbraid.literals import parse_element
from foxbraid.longmoody import lm_reduced, lm_unreduced
from foxbraid.matrices import RingMatrix, determinant, determinant_cofactor
from foxbraid.presets import preset_case, run_preset
from foxbraid.reps import ColoredAugmentation, Representation
from foxbraid.rings import (
    RingElement,
    ZZ,
    equal_up_to_unit,
    laurent_ring,
)
from foxbraid.words import Alphabet, Kind


def report(line):
    print(line, flush=True)


def test_criterion_1_trefoil_exact(trefoil_rep):
    aug = ColoredAugmentation(Coloring((1, 1)))
    braid = parse_braid("s1^3", 2)
    matrix = lm_reduced(trefoil_rep, aug, braid)
    ring = matrix.descriptor
    pe = lambda text: parse_element(text, ring)
    expected = RingMatrix.from_rows(
        ring,
        [
            [pe("s*t^3"), pe("-s*t^3 + s^2*t^3")],
            [pe("s*t^3"), pe("-s*t^3")],
        ],
    )
    assert matrix == expected
    value = theorem48_rhs(trefoil_rep, aug, braid)
    assert value.numerator == pe("1 - s^3*t^6")
    assert value.denominator == pe("1 + s*t^2 + s^2*t^4")
    assert equal_up_to_unit(value.simplified, pe("1 - s*t^2"))
    assert verify_theorem48(trefoil_rep, aug, braid).equal
    report("criterion 1 (trefoil over Z[s]): PASS")


def test_criterion_2_fig8_f7(fig8_f7_rep):
    aug = ColoredAugmentation(Coloring((1, 1, 1)))
    braid = parse_braid("s1 s2^-1 s1 s2^-1", 3)
    report48 = verify_theorem48(fig8_f7_rep, aug, braid)
    value = report48.rhs
    ring = value.numerator.descriptor
    pe = lambda text: parse_element(text, ring)
    assert equal_up_to_unit(value.numerator, pe("(t+1)^4*(t+2)^2*(t+4)^2"))
    assert equal_up_to_unit(value.denominator, pe("(t+1)^2*(t+2)^2*(t+4)^2"))
    assert equal_up_to_unit(value.simplified, pe("(t+1)^2"))
    assert report48.equal
    report("criterion 2 (figure eight over F_7): PASS")


def test_criterion_3_fig8_cyclotomic(fig8_cyclo_rep, fig8_f7_rep):
    assert fig8_cyclo_rep.validate_semidirect() == []
    aug = ColoredAugmentation(Coloring((1, 1, 1)))
    braid = parse_braid("s1 s2^-1 s1 s2^-1", 3)
    report48 = verify_theorem48(fig8_cyclo_rep, aug, braid)
    value = report48.rhs
    ring = value.numerator.descriptor
    pe = lambda text: parse_element(text, ring)
    assert equal_up_to_unit(value.numerator, pe("(1+t)^4*(1-t+t^2)^2"))
    assert equal_up_to_unit(value.denominator, pe("(1+t)^2*(1-t+t^2)^2"))
    assert equal_up_to_unit(value.simplified, pe("(t+1)^2"))
    assert report48.equal
    # the two figure-eight models agree: both simplify to (t+1)^2
    f7_value = theorem48_rhs(fig8_f7_rep, aug, braid)
    f7_ring = f7_value.numerator.descriptor
    assert equal_up_to_unit(
        f7_value.simplified, parse_element("(t+1)^2", f7_ring)
    )
    report("criterion 3 (figure eight over Q(zeta_12)): PASS")


def test_criterion_4_torus_sweep():
    for q in (3, 5, 7):
        for r in range(1, q, 2):
            start = time.time()
            case = preset_case("torus2q", q=q, r=r)
            result = run_preset(case)
            elapsed = time.time() - start
            assert result.passed, f"torus2q q={q} r={r} failed"
            assert case.expected_simplified is not None  # exact_divide succeeded
            assert result.report.rhs.simplified is not None
            assert elapsed < 5.0, f"torus2q q={q} r={r} took {elapsed:.1f}s"
    report("criterion 4 (torus sweep q in {3,5,7}, all odd r): PASS")


def test_criterion_5_burau_recovery():
    for n in (2, 3, 4):
        rep = Representation.trivial(n)
        aug = ColoredAugmentation(Coloring((1,) * n))
        gens = [lm_unreduced(rep, aug, parse_braid(f"s{i}", n)) for i in range(1, n)]
        for i in range(len(gens) - 1):
            assert gens[i] * gens[i + 1] * gens[i] == gens[i + 1] * gens[i] * gens[i + 1]
        for i in range(len(gens)):
            for j in range(i + 2, len(gens)):
                assert gens[i] * gens[j] == gens[j] * gens[i]
    rep = Representation.trivial(2)
    aug = ColoredAugmentation(Coloring((1, 1)))
    braid = parse_braid("s1^3", 2)
    reduced = lm_reduced(rep, aug, braid)
    ring = reduced.descriptor
    pe = lambda text: parse_element(text, ring)
    t = pe("t")
    det = determinant(reduced - RingMatrix.identity(ring, reduced.rows))
    delta = ((t - pe("1")) * det).exact_divide(t ** 2 - pe("1"))
    assert equal_up_to_unit(delta, pe("t^2 - t + 1"))
    report("criterion 5 (classical Burau recovery): PASS")


def test_criterion_6_hopf_link():
    rep = Representation.trivial(2)
    aug = ColoredAugmentation(Coloring((1, 2)))
    value = invariant_from_closure(rep, aug, parse_braid("s1^2", 2))
    assert value.simplified is not None
    assert equal_up_to_unit(
        value.simplified, RingElement.one(value.simplified.descriptor)
    )
    assert verify_theorem48(rep, aug, parse_braid("s1^2", 2)).equal
    report("criterion 6 (Hopf link, two colors): PASS")


def test_criterion_7a_fox_fundamental_formula():
    rng = random.Random(101)
    for kind in (Kind.X, Kind.G):
        for _ in range(500):
            rank = rng.randint(1, 5)
            word = random_word(rng, Alphabet(rank, kind), 30)
            assert check_fundamental_formula(word)
    report("criterion 7a (fundamental formula, 1000 words): PASS")


def test_criterion_7b_braid_action():
    rng = random.Random(102)
    for trial in range(500):
        n = rng.randint(2, 5)
        alph_x = Alphabet(n, Kind.X)
        alph_g = Alphabet(n, Kind.G)
        b = random_braid(rng, n, 20)
        which = trial % 4
        if which == 0:  # homomorphism in the braid argument
            b2 = random_braid(rng, n, 10)
            word = random_word(rng, alph_x, 8)
            assert act(word, b * b2) == act(act(word, b), b2)
        elif which == 1:  # inverse round-trip
            word = random_word(rng, alph_x, 8)
            assert act(act(word, b), ~b) == word
        elif which == 2 and n >= 3:  # braid relations
            i = rng.randint(1, n - 2)
            s_i = parse_braid(f"s{i}", n)
            s_j = parse_braid(f"s{i + 1}", n)
            word = random_word(rng, alph_x, 8)
            assert act(word, s_i * s_j * s_i) == act(word, s_j * s_i * s_j)
        else:  # g_n is fixed
            from foxbraid.words import FreeWord

            g_n = FreeWord.generator(alph_g, n)
            assert act(g_n, b) == g_n
    report("criterion 7b (braid action, 500 braids): PASS")


def test_criterion_7c_lm_homomorphism(trefoil_rep):
    rng = random.Random(103)
    triv = Representation.trivial(4)
    aug4 = ColoredAugmentation(Coloring((1, 1, 1, 1)))
    aug2 = ColoredAugmentation(Coloring((1, 1)))
    for _ in range(100):
        b1 = random_braid(rng, 4, 8)
        b2 = random_braid(rng, 4, 8)
        assert lm_unreduced(triv, aug4, b1 * b2) == lm_unreduced(
            triv, aug4, b1
        ) * lm_unreduced(triv, aug4, b2)
        assert lm_reduced(triv, aug4, b1 * b2) == lm_reduced(
            triv, aug4, b1
        ) * lm_reduced(triv, aug4, b2)
    for _ in range(100):
        b1 = random_braid(rng, 2, 8)
        b2 = random_braid(rng, 2, 8)
        assert lm_unreduced(trefoil_rep, aug2, b1 * b2) == lm_unreduced(
            trefoil_rep, aug2, b1
        ) * lm_unreduced(trefoil_rep, aug2, b2)
        assert lm_reduced(trefoil_rep, aug2, b1 * b2) == lm_reduced(
            trefoil_rep, aug2, b1
        ) * lm_reduced(trefoil_rep, aug2, b2)
    report("criterion 7c (Long-Moody homomorphism, 200 pairs): PASS")


def test_criterion_7d_determinants():
    rng = random.Random(104)
    ring = laurent_ring(("t",), ZZ)

    def entry():
        total = RingElement.zero(ring)
        for _ in range(rng.randint(0, 2)):
            coeff = RingElement.from_int(ring, rng.randint(-3, 3))
            total = total + coeff * RingElement.monomial(ring, (rng.randint(-2, 2),))
        return total

    for _ in range(200):
        size = rng.randint(1, 5)
        m = RingMatrix.from_rows(
            ring, [[entry() for _ in range(size)] for _ in range(size)]
        )
        assert determinant(m) == determinant_cofactor(m)
    for _ in range(50):
        size = rng.randint(2, 4)
        a = RingMatrix.from_rows(
            ring, [[entry() for _ in range(size)] for _ in range(size)]
        )
        b = RingMatrix.from_rows(
            ring, [[entry() for _ in range(size)] for _ in range(size)]
        )
        assert determinant(a * b) == determinant(a) * determinant(b)
    report("criterion 7d (Bareiss vs cofactor, 200 matrices): PASS")


def test_criterion_7e_minor_consistency(trefoil_rep):
    rng = random.Random(105)
    triv = Representation.trivial(3)
    aug3 = ColoredAugmentation(Coloring((1, 1, 1)))
    ab3 = aug3.abelianization(Kind.X)
    for _ in range(80):
        braid = random_braid(rng, 3, 6)
        pres = closure_presentation(braid, Kind.X)
        i = rng.randint(1, 3)
        j = rng.choice([c for c in (1, 2, 3) if c != i])
        assert minor_consistency_check(pres, triv, ab3, i, j)
    aug2 = ColoredAugmentation(Coloring((1, 1)))
    ab2 = aug2.abelianization(Kind.X)
    for _ in range(20):
        braid = parse_braid("s1", 2) ** (3 * rng.choice([-2, -1, 1, 2]))
        pres = closure_presentation(braid, Kind.X)
        assert minor_consistency_check(pres, trefoil_rep, ab2, 1, 2)
    report("criterion 7e (minor consistency, 100 braids): PASS")


def test_criterion_7f_conjugation_invariance():
    rng = random.Random(106)
    rep = Representation.trivial(3)
    aug = ColoredAugmentation(Coloring((1, 1, 1)))
    for _ in range(50):
        a = random_braid(rng, 3, 6)
        b = random_braid(rng, 3, 6)
        v1 = invariant_from_closure(rep, aug, b)
        v2 = invariant_from_closure(rep, aug, a * b * ~a)
        assert v1.equal_up_to_unit(v2)
    report("criterion 7f (conjugation invariance, 50 pairs): PASS")


def test_criterion_8_determinism():
    commands = [
        ["preset", "trefoil_burau"],
        ["preset", "fig8_f7"],
        ["preset", "fig8_cyclotomic12"],
        ["preset", "torus2q", "--q", "3", "--r", "1"],
    ]
    for argv in commands:
        runs = []
        for _ in range(2):
            proc = subprocess.run(
                [sys.executable, "-m", "foxbraid.cli"] + argv,
                capture_output=True,
                check=True,
            )
            runs.append(proc.stdout)
        assert runs[0] == runs[1], f"non-deterministic output for {argv}"
    report("criterion 8 (byte-identical preset output): PASS")
