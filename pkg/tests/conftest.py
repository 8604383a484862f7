import random

import pytest

from foxbraid import (
    Alphabet,
    BraidWord,
    Coloring,
    Kind,
    Representation,
    laurent_ring,
    parse_element,
    permutation,
    reduce_word,
    ZZ,
)
from foxbraid.matrices import RingMatrix
from foxbraid.presets import load_preset_representation


def random_word(rng, alphabet, max_length):
    raw = [
        (rng.randint(1, alphabet.rank), rng.choice([1, -1]))
        for _ in range(rng.randint(0, max_length))
    ]
    return reduce_word(raw, alphabet)


def random_braid(rng, strands, max_length):
    letters = [
        (rng.randint(1, strands - 1), rng.choice([1, -1]))
        for _ in range(rng.randint(0, max_length))
    ]
    return BraidWord.from_letters(strands, letters)


def permutation_order(perm):
    order = 1
    seen = set()
    for start in perm:
        if start in seen:
            continue
        length = 0
        j = start
        while j not in seen:
            seen.add(j)
            j = perm[j - 1]
            length += 1
        lo, hi = order, length
        while hi:
            lo, hi = hi, lo % hi
        order = order * length // lo
    return order


def random_colored_braid(rng, coloring, max_length):
    # Raise a random braid to the order of its permutation; the result is
    # always a (c, c)-braid, for any coloring.
    braid = random_braid(rng, coloring.strands, max_length)
    return braid ** permutation_order(permutation(braid))


@pytest.fixture(scope="session")
def trefoil_rep():
    return load_preset_representation("trefoil_burau")


@pytest.fixture(scope="session")
def fig8_f7_rep():
    return load_preset_representation("fig8_f7")


@pytest.fixture(scope="session")
def fig8_cyclo_rep():
    return load_preset_representation("fig8_cyclotomic12")
