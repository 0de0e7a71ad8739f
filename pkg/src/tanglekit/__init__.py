"""tanglekit: algebraic tangles as expression trees.

Canonical forms, isotopy/equivalence/orbit decisions, symmetry groups,
crossing minimization and desk-scale classification tables.
"""

from .fraction import (
    Frac,
    INF,
    ZERO,
    TangleOverflowError,
    connectivity,
    continued_fraction,
    frac,
    frac_add,
    frac_neg,
    frac_of,
    frac_recip,
    frac_str,
    rational_decompose,
)
from .algebra import (
    ALL_TRANSFORMS,
    EQUIVALENCE_SUBGROUP,
    IDENTITY,
    Node,
    Transform,
    apply,
    compose,
    eta,
    integral,
    inverse,
    mu,
    nu,
    orbit16,
    product,
    rational,
    rho_x,
    rho_y,
    rho_z,
    tangle_sum,
    transform_name,
)
from .notation import (
    COMPACT,
    SPACED,
    NotationMode,
    TangleSyntaxError,
    emit,
    parse,
    parse_comma,
)
from .canonical import (
    CompositeInputError,
    Move,
    NonTerminationError,
    RING,
    canonicalize,
    equivalent,
    is_canonical,
    isotopic,
    same_orbit,
    try_move,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
