"""Exact computation of Long-Moody braid-group representations and twisted
Alexander invariants of braid closures."""

from .words import Alphabet, FreeWord, GroupRing, Kind, convert_alphabet, parse_word, reduce_word
from .fox import check_fundamental_formula, fox_derivative, fox_derivative_linear
from .braids import (
    BraidWord,
    Coloring,
    act,
    closure_component_count,
    exponent_sum,
    is_colored,
    parse_braid,
    parse_coloring,
    permutation,
)
from .rings import (
    CyclotomicField,
    IntegerRing,
    LaurentRing,
    PrimeField,
    QQ,
    RationalField,
    RingElement,
    ZZ,
    cyclotomic_polynomial,
    equal_up_to_unit,
    extend_with_variables,
    laurent_ring,
    unit_normal_form,
)
from .literals import parse_element
from .matrices import RingMatrix, block_diag, determinant, determinant_cofactor
from .reps import (
    AbelianizationMap,
    ColoredAugmentation,
    Representation,
    evaluate_phi,
    load_representation,
)
from .longmoody import lm_reduced, lm_unreduced, twisted_burau
from .alexander import (
    GroupPresentation,
    InvariantValue,
    WordImages,
    alexander_matrix,
    closure_presentation,
    invariant_from_closure,
    minor_consistency_check,
    theorem48_rhs,
    twisted_alexander,
    verify_theorem48,
)
from .presets import PRESET_NAMES, load_preset_representation, preset_case, run_preset

__version__ = "0.1.0"
