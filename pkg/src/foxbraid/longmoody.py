"""Long-Moody construction matrices and the twisted Burau matrix.

The unreduced construction is the nk x nk block matrix

    Diag(rho(b), ..., rho(b)) . ( Phi( d(x_i . b) / d x_j ) )_{1<=i,j<=n}

over the x-alphabet; the reduced construction is the analogous
(n-1)k x (n-1)k block matrix over the g-alphabet (g_i = x1...x_i), whose
last generator is fixed by every braid.  The twisted Burau matrix is the
unreduced block matrix without the Diag(rho(b)) factor; it need not be a
homomorphism.
"""

from __future__ import annotations

from .braids import act, is_colored
from .errors import ColoringError
from .fox import fox_derivative
from .matrices import assemble_blocks
from .reps import evaluate_phi, laurent_extension
from .words import Alphabet, FreeWord, Kind


def _check_inputs(rep, aug, braid):
    if not is_colored(braid, aug.coloring):
        raise ColoringError(f"braid {braid} does not preserve coloring {aug.coloring}")
    rep.ensure_valid()


def _block_matrix(rep, aug, braid, kind, size, with_diag):
    target = laurent_extension(rep, aug.variables)
    alphabet = Alphabet(rep.strands, kind)
    abmap = aug.abelianization(kind)
    rho_b = rep.evaluate_braid(braid).embed_into(target) if with_diag else None
    grid = []
    for i in range(1, size + 1):
        moved = act(FreeWord.generator(alphabet, i), braid)
        row = []
        for j in range(1, size + 1):
            derivative = fox_derivative(moved, j)
            block = evaluate_phi(rep, abmap, derivative, target)
            if with_diag:
                block = rho_b * block
            row.append(block)
        grid.append(row)
    return assemble_blocks(grid)


def lm_unreduced(rep, aug, braid):
    """Unreduced construction: nk x nk matrix over the extended ring."""
    _check_inputs(rep, aug, braid)
    return _block_matrix(rep, aug, braid, Kind.X, rep.strands, with_diag=True)


def lm_reduced(rep, aug, braid):
    """Reduced construction: (n-1)k x (n-1)k matrix over the g-alphabet."""
    _check_inputs(rep, aug, braid)
    return _block_matrix(rep, aug, braid, Kind.G, rep.strands - 1, with_diag=True)


def twisted_burau(rep, aug, braid):
    """Fox-derivative block matrix without the Diag(rho(b)) factor."""
    _check_inputs(rep, aug, braid)
    return _block_matrix(rep, aug, braid, Kind.X, rep.strands, with_diag=False)
