"""Shipped representations with their pinned expected invariants.

Three presets are loaded from JSON files in the package data (exercising
the representation file format); the torus-knot family is parameterized by
the braid power q and an odd root index r, and is built programmatically
over Q(zeta_{4q}): the half-integer powers of the eigenvalue and the square
root of -1 both live in that field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .alexander import theorem48_rhs, verify_theorem48
from .braids import BraidWord, Coloring, parse_braid
from .errors import FoxbraidError
from .literals import parse_element
from .matrices import RingMatrix
from .reps import ColoredAugmentation, Representation, representation_from_dict
from .rings import (
    CyclotomicField,
    RingElement,
    equal_up_to_unit,
    laurent_ring,
)

PRESET_NAMES = ("trefoil_burau", "fig8_f7", "fig8_cyclotomic12", "torus2q")


def _load_json_preset(name):
    data = resources.files("foxbraid.preset_data").joinpath(f"{name}.json").read_text()
    return representation_from_dict(json.loads(data))


def load_preset_representation(name, q=None, r=None):
    if name == "torus2q":
        return torus_representation(q, r)
    if name in PRESET_NAMES:
        return _load_json_preset(name)
    raise FoxbraidError(f"unknown preset {name!r}; choose from {PRESET_NAMES}")


def torus_representation(q, r):
    """SL2 representation for the (2,q)-torus braid, r-th odd root index."""
    if q is None or q < 3 or q % 2 == 0:
        raise FoxbraidError("torus2q needs odd q >= 3")
    if r is None or r % 2 == 0 or not 0 < r < q:
        raise FoxbraidError("torus2q needs odd r with 0 < r < q")
    ring = laurent_ring(("s",), CyclotomicField(4 * q))
    level = 4 * q

    def zeta(power):
        return RingElement.cyclotomic_generator(ring, power % level)

    def pe(text):
        return parse_element(text, ring)

    s = pe("s")
    one = RingElement.one(ring)
    zero = RingElement.zero(ring)
    # g1 = y^(m+1) x^-1, g2 = y in the two-bridge generators; entries from
    # the eigenvalue xi = zeta^(2r) and sqrt(-1) = zeta^q.
    g1 = RingMatrix.from_rows(
        ring,
        [
            [-zeta(q * r + r) * s, -zeta(q * r + r)],
            [zeta(-(q * r + r)) * (one + s * s), zeta(-(q * r + r)) * s],
        ],
    )
    g2 = RingMatrix.from_rows(ring, [[zeta(2 * r), zero], [zero, zeta(-2 * r)]])
    sigma = RingMatrix.from_rows(
        ring, [[zeta(q - r), zero], [zero, zeta(3 * q + r)]]
    )
    x1 = g1
    x2 = g1.inverse() * g2
    return Representation(2, 2, ring, [sigma], [x1, x2], label=f"torus2q(q={q},r={r})")


@dataclass(frozen=True)
class PresetCase:
    name: str
    representation: Representation
    braid: BraidWord
    coloring: Coloring
    expected_numerator: RingElement  # up to unit monomials
    expected_denominator: RingElement
    expected_simplified: object  # RingElement, or None when non-divisible


def preset_case(name, q=None, r=None):
    """Preset data plus pinned expected values for self-checking."""
    rep = load_preset_representation(name, q=q, r=r)
    if name == "trefoil_burau":
        braid = parse_braid("s1^3", 2)
        coloring = Coloring((1, 1))
        big = laurent_ring(("t",), rep.ring)
        pe = lambda text: parse_element(text, big)
        return PresetCase(
            name, rep, braid, coloring,
            pe("1 - s^3*t^6"),
            pe("1 + s*t^2 + s^2*t^4"),
            pe("1 - s*t^2"),
        )
    if name == "fig8_f7":
        braid = parse_braid("s1 s2^-1 s1 s2^-1", 3)
        coloring = Coloring((1, 1, 1))
        big = laurent_ring(("t",), rep.ring)
        pe = lambda text: parse_element(text, big)
        return PresetCase(
            name, rep, braid, coloring,
            pe("(t+1)^4*(t+2)^2*(t+4)^2"),
            pe("(t+1)^2*(t+2)^2*(t+4)^2"),
            pe("(t+1)^2"),
        )
    if name == "fig8_cyclotomic12":
        braid = parse_braid("s1 s2^-1 s1 s2^-1", 3)
        coloring = Coloring((1, 1, 1))
        big = laurent_ring(("t",), rep.ring)
        pe = lambda text: parse_element(text, big)
        return PresetCase(
            name, rep, braid, coloring,
            pe("(1+t)^4*(1-t+t^2)^2"),
            pe("(1+t)^2*(1-t+t^2)^2"),
            pe("(t+1)^2"),
        )
    # torus2q
    braid = BraidWord(2, ((1, q),))
    coloring = Coloring((1, 1))
    big = laurent_ring(("t",), rep.ring)
    pe = lambda text: parse_element(text, big)
    xi = RingElement.cyclotomic_generator(big, 2 * r)
    xi_inv = RingElement.cyclotomic_generator(big, -2 * r % (4 * q))
    t = parse_element("t", big)
    one = RingElement.one(big)
    numerator = one + t ** (2 * q)
    denominator = (one - xi * t * t) * (one - xi_inv * t * t)
    simplified = numerator.exact_divide(denominator)
    return PresetCase(name, rep, braid, coloring, numerator, denominator, simplified)


@dataclass(frozen=True)
class PresetResult:
    case: PresetCase
    report: object  # VerificationReport
    numerator_ok: bool
    denominator_ok: bool
    simplified_ok: bool
    theorem_ok: bool

    @property
    def passed(self):
        return (
            self.numerator_ok
            and self.denominator_ok
            and self.simplified_ok
            and self.theorem_ok
        )


def run_preset(case):
    """Run the full pipeline and compare against the pinned values."""
    aug = ColoredAugmentation(case.coloring)
    report = verify_theorem48(case.representation, aug, case.braid)
    rhs = report.rhs
    numerator_ok = equal_up_to_unit(rhs.numerator, case.expected_numerator)
    denominator_ok = equal_up_to_unit(rhs.denominator, case.expected_denominator)
    if case.expected_simplified is None:
        simplified_ok = rhs.simplified is None
    else:
        simplified_ok = rhs.simplified is not None and equal_up_to_unit(
            rhs.simplified, case.expected_simplified
        )
    return PresetResult(case, report, numerator_ok, denominator_ok, simplified_ok, report.equal)
