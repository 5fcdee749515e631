"""Permutation statistics, shuffle enumeration and exact checks of the
linear and cyclic shuffle theorems."""

from .errors import (
    CycShuffleError,
    DisjointnessError,
    DomainError,
    IntegralityError,
    OrientationError,
    ResourceGuardError,
)
from .permcore import (
    CyclicPerm,
    LinearPerm,
    StatSummary,
    canonicalize,
    cyclic_descent_bottoms,
    cyclic_descent_number,
    cyclic_descent_set,
    cyclic_major_index,
    descent_number,
    descent_set,
    major_index,
    split,
    stat_summary,
)
from .qpoly import QPoly, eval_at_one, gauss_binomial
from .shuffle import ShuffleSet, cyclic_shuffles, cyclic_shuffles_oracle, linear_shuffles
from .theorems import (
    CyclicShufflePair,
    PsiImage,
    agrr_count,
    cyclic_shuffle_maj_gf,
    cyclic_stanley_rhs,
    psi_forward,
    psi_inverse,
    shuffle_maj_gf,
    stanley_rhs,
)

__version__ = "0.1.0"
