"""Fox free differential calculus on either alphabet.

The derivative with respect to the j-th generator is the Z-linear map on the
group ring determined by d(x_i)/d(x_j) = delta_ij and the product rule
d(uv) = du + u dv.  Generators of either kind are treated as free generators
in their own right; callers convert words first if they want the other basis.
"""

from .words import FreeWord, GroupRing


def _power_derivative(alphabet, i, m):
    # d(x_i^m)/d(x_i) in closed form: 1 + x_i + ... + x_i^(m-1) for m > 0,
    # -(x_i^-1 + ... + x_i^m) for m < 0.
    terms = {}
    if m > 0:
        for a in range(m):
            terms[FreeWord.generator(alphabet, i, a) if a else FreeWord.identity(alphabet)] = 1
    else:
        for a in range(m, 0):
            terms[FreeWord.generator(alphabet, i, a)] = -1
    return GroupRing(alphabet, terms)


def fox_derivative(word, j):
    """Fox derivative of a reduced word with respect to generator j."""
    alphabet = word.alphabet
    alphabet.check_index(j)
    result = GroupRing.zero(alphabet)
    prefix = FreeWord.identity(alphabet)
    for i, m in word.syllables:
        if i == j:
            result = result + GroupRing.from_word(prefix) * _power_derivative(alphabet, i, m)
        prefix = prefix * FreeWord.generator(alphabet, i, m)
    return result


def fox_derivative_linear(element, j):
    """Z-linear extension of the Fox derivative to group-ring elements."""
    alphabet = element.alphabet
    alphabet.check_index(j)
    result = GroupRing.zero(alphabet)
    for w, c in element.terms.items():
        result = result + fox_derivative(w, j) * c
    return result


def check_fundamental_formula(word):
    """Check that w - 1 equals the sum over j of (dw/dx_j)(x_j - 1)."""
    alphabet = word.alphabet
    total = GroupRing.zero(alphabet)
    for j in range(1, alphabet.rank + 1):
        xj = GroupRing.from_word(FreeWord.generator(alphabet, j))
        total = total + fox_derivative(word, j) * (xj - 1)
    return total == GroupRing.from_word(word) - 1
