"""Canonical representation of prime algebraic tangles.

The tree-fix procedure runs in three parts:

1. one bottom-up pass that contracts rational subtrees into single
   fraction leaves (alpha_Q, at left-child or tree-top positions) and
   twists away left factors whose fraction has an integral reciprocal
   (alpha_Z, any position);
2. repeated top-down passes applying the first possible of beta_Q,
   beta_0, beta_minus, beta_1, restarting from the root after every
   applied move, until a pass applies nothing ("twists before flypes":
   beta_0 is anchored at the parent node and therefore always wins over
   beta_minus at the child);
3. one bottom-up pass pushing ring factors 2(2 -1) down onto the
   rightmost integral of their sibling (gamma).

After part 1 any product whose left child is the 0 leaf denotes a
composite tangle and is rejected.  The output satisfies
:func:`is_canonical`; whole-tangle rational inputs reduce to a single
fraction leaf.

Position matters: alpha_Q is *not* applied at right-child positions, so
rational subtangles hanging off a right edge keep their one-node
``(fraction-leaf, integral-leaf)`` form, which is what the canonical
tree definition requires (e.g. the ring stays 2(2 -1) instead of
collapsing to a bare fraction).
"""

from __future__ import annotations

from enum import Enum
from typing import Optional

from .algebra import Node, apply, mu, rho_x, rho_x_power, ALL_TRANSFORMS, EQUIVALENCE_SUBGROUP
from .fraction import (
    Frac,
    ZERO,
    frac_add,
    frac_floor,
    frac_recip,
    gt_one,
    is_inf,
)

_TOP, _LEFT, _RIGHT = 0, 1, 2

RING: Node = ((2, 1), ((2, 1), (-1, 1)))

_ONE = (1, 1)
_MINUS_ONE = (-1, 1)


class CompositeInputError(ValueError):
    """The tangle is composite (contains a 0* factor); not canonicalizable."""


class NonTerminationError(RuntimeError):
    """Rewrite budget exceeded; indicates an implementation bug."""


class Move(Enum):
    ALPHA_Z = "alpha_z"
    ALPHA_Q = "alpha_q"
    BETA_Q = "beta_q"
    BETA_0 = "beta_0"
    BETA_MINUS = "beta_minus"
    BETA_1 = "beta_1"
    GAMMA = "gamma"


def _bump(t: Node, q: int) -> Node:
    """Add q to the rightmost leaf (the rightmost integral position)."""
    if q == 0:
        return t
    if type(t[0]) is int:
        return frac_add(t, (q, 1))
    return (t[0], _bump(t[1], q))


def _rightmost_leaf(t: Node) -> Frac:
    while type(t[0]) is not int:
        t = t[1]
    return t


def _graft_rightmost(t: Node, sub: Node) -> Node:
    if type(t[0]) is int:
        return sub
    return (t[0], _graft_rightmost(t[1], sub))


def _twisted(t: Node, q: int) -> Node:
    """t rotated around x q times with its rightmost leaf raised by q."""
    return _bump(rho_x_power(t, q), q)


# --- part 1: rational contraction ------------------------------------------


def _expand_leaf(f: Frac) -> Node:
    """Non-integral leaf in right-child position -> one-node standard form."""
    if f[1] == 0:
        return (ZERO, ZERO)  # infinity = 00
    n = frac_floor(f)
    return (frac_recip(frac_add(f, (-n, 1))), (n, 1))


def _expand_right_leaves(t: Node, pos: int) -> Node:
    if type(t[0]) is int:
        if pos == _RIGHT and t[1] != 1:
            return _expand_leaf(t)
        return t
    return (_expand_right_leaves(t[0], _LEFT), _expand_right_leaves(t[1], _RIGHT))


def _fix(t: Node, pos: int) -> Node:
    """Bottom-up alpha pass; assumes nothing, normalizes everything."""
    if type(t[0]) is int:
        return t
    left = _fix(t[0], _LEFT)
    right = _fix(t[1], _RIGHT)
    return _fix_node(left, right, pos)


def _fix_node(left: Node, right: Node, pos: int) -> Node:
    """Repeat alpha moves at one node whose children are already fixed."""
    while True:
        if type(left[0]) is int:
            rec = frac_recip(left)
            if rec[1] == 1:
                # alpha_Z: left factor is q0 (fraction 1/q, q = rec[0], possibly
                # 0 for the infinity leaf): twist q into the sibling.
                q = rec[0]
                if q % 2:
                    return _fix(_bump(rho_x(right), q), pos)
                t2 = _bump(right, q)
                if type(t2[0]) is int:
                    return t2
                left, right = t2
                continue
            if pos != _RIGHT and type(right[0]) is int and right[1] == 1:
                # alpha_Q: contract the rational node (left leaf, integral leaf)
                return frac_add(right, rec)
        return (left, right)


def _check_prime(t: Node) -> None:
    if type(t[0]) is int:
        return
    if t[0] == ZERO:
        raise CompositeInputError("composite tangle: 0* factor")
    _check_prime(t[0])
    _check_prime(t[1])


# --- part 2: beta moves ----------------------------------------------------


def _beta_q(t: Node) -> Optional[Node]:
    left, right = t
    if type(left[0]) is not int:
        return None
    p, q = left
    if q == 0 or p > q or p == 0:
        # infinity and recip-integral leaves cannot survive part 1; a zero
        # left leaf means composite input and is caught elsewhere.
        return None
    c = frac_recip(left)
    n = frac_floor(c)
    rest = frac_add(c, (-n, 1))
    sibling = _twisted(right, n)
    if rest == ZERO:
        return sibling
    return (frac_recip(rest), sibling)


def _beta_0(t: Node) -> Optional[Node]:
    left, right = t
    if type(left[0]) is int or left[1] != ZERO:
        return None
    inner = left[0]
    n_leaf = _rightmost_leaf(inner)
    if n_leaf[1] != 1:
        raise NonTerminationError("non-integral rightmost leaf in beta_0")
    n = n_leaf[0]
    return _graft_rightmost(inner, _twisted(right, n))


def _beta_minus(t: Node, sibling: Node) -> Optional[Node]:
    left, right = t
    if type(right[0]) is not int or right[1] != 1 or right[0] >= 0:
        return None
    k = -right[0]
    new_left = ((mu(left), (k - 1, 1)), _ONE)
    return (new_left, _bump(rho_x(sibling), -1))


def _beta_1(t: Node, sibling: Node) -> Optional[Node]:
    left, right = t
    if right != _ONE or type(left[0]) is int:
        return None
    c_part, inner = left
    if type(inner[0]) is int:
        return None
    d_part, a_part = inner
    new_left = (mu(c_part), (mu(d_part), mu(_bump(a_part, 1))))
    return (new_left, _bump(rho_x(sibling), 1))


def _scan_beta(t: Node, pos: int, sibling: Optional[Node]):
    """First applicable beta move in pre-order; returns (kind, new_subtree).

    kind "self" replaces the visited node, "parent" replaces its parent
    (the flypes beta_minus / beta_1 rewrite the parent of the visited
    left child).
    """
    if type(t[0]) is int:
        return None
    new = _beta_q(t)
    if new is not None:
        return ("self", new)
    new = _beta_0(t)
    if new is not None:
        return ("self", new)
    if pos == _LEFT:
        new = _beta_minus(t, sibling)
        if new is not None:
            return ("parent", new)
        new = _beta_1(t, sibling)
        if new is not None:
            return ("parent", new)
    res = _scan_beta(t[0], _LEFT, t[1])
    if res is not None:
        kind, sub = res
        if kind == "parent":
            return ("self", sub)
        return ("self", (sub, t[1]))
    res = _scan_beta(t[1], _RIGHT, None)
    if res is not None:
        return ("self", (t[0], res[1]))
    return None


# --- part 3: ring placement -------------------------------------------------


def _graft_ring(t: Node) -> Node:
    if type(t[0]) is int:
        return (RING, t)
    return (t[0], _graft_ring(t[1]))


def _gamma_pass(t: Node) -> Node:
    if type(t[0]) is int:
        return t
    left = _gamma_pass(t[0])
    right = _gamma_pass(t[1])
    if left == RING and type(right[0]) is not int and right[0] != RING:
        return _graft_ring(right)
    return (left, right)


# --- driver -----------------------------------------------------------------


def _budget(t: Node) -> int:
    n = 1
    stack = [t]
    while stack:
        x = stack.pop()
        if type(x[0]) is not int:
            n += 1
            stack.append(x[0])
            stack.append(x[1])
    return 500 + 60 * n


def canonicalize(t: Node) -> Node:
    """Canonical tree of a prime algebraic tangle.

    Raises CompositeInputError for composite input and
    NonTerminationError if the rewrite budget is exceeded (a bug guard,
    never expected on valid input).
    """
    t = _expand_right_leaves(t, _TOP)
    t = _fix(t, _TOP)
    _check_prime(t)
    for _ in range(_budget(t)):
        res = _scan_beta(t, _TOP, None)
        if res is None:
            return _gamma_pass(t)
        t = _fix(res[1], _TOP)
        _check_prime(t)
    raise NonTerminationError("rewrite budget exceeded")


def is_canonical(t: Node) -> bool:
    """Check the canonical-tree restrictions.

    Whole-tangle rational leaves (any fraction, including 0, 1/0 and
    values <= 1) are canonical as the entire tangle; a product root whose
    children are both leaves is not (it would contract).
    """
    if type(t[0]) is int:
        return True
    if type(t[0][0]) is int and type(t[1][0]) is int:
        return False
    return _canonical_node(t, _TOP)


def _canonical_node(t: Node, pos: int) -> bool:
    if type(t[0]) is int:
        if pos == _LEFT:
            return gt_one(t)
        return t[1] == 1  # right leaves must be integral
    left, right = t
    if pos == _LEFT:
        left_is_leaf = type(left[0]) is int
        right_is_leaf = type(right[0]) is int
        if left_is_leaf and right_is_leaf:
            return False
        if right_is_leaf and (right[1] != 1 or right[0] <= 0):
            return False
        if right == _ONE and not left_is_leaf and type(left[1][0]) is not int:
            return False
    if type(left[0]) is int and left == ZERO:
        return False
    if left == RING and type(right[0]) is not int and right[0] != RING:
        return False
    return _canonical_node(left, _LEFT) and _canonical_node(right, _RIGHT)


# --- single-move interface (used by tests and tooling) ----------------------


def _node_at(t: Node, path: tuple[int, ...]):
    """(node, parent, sibling-of-left-child) context along a 0/1 path."""
    parent = None
    for step in path:
        if type(t[0]) is int:
            raise IndexError("path runs past a leaf")
        parent = t
        t = t[step]
    return t, parent


def _replace_at(t: Node, path: tuple[int, ...], sub: Node) -> Node:
    if not path:
        return sub
    if path[0] == 0:
        return (_replace_at(t[0], path[1:], sub), t[1])
    return (t[0], _replace_at(t[1], path[1:], sub))


def try_move(kind: Move, t: Node, path: tuple[int, ...] = ()) -> Optional[Node]:
    """Apply one raw table move at the node addressed by path, if possible.

    Returns the rewritten whole tree, or None when the move does not
    apply.  No normalization is performed afterwards; this is the bare
    rewrite the traversal algorithm composes.
    """
    node, parent = _node_at(t, path)
    if type(node[0]) is int:
        return None
    pos = _TOP if not path else (_LEFT if path[-1] == 0 else _RIGHT)
    if kind is Move.ALPHA_Z:
        left, right = node
        if type(left[0]) is int:
            rec = frac_recip(left)
            if rec[1] == 1:
                return _replace_at(t, path, _twisted(right, rec[0]))
        return None
    if kind is Move.ALPHA_Q:
        left, right = node
        if (
            pos != _RIGHT
            and type(left[0]) is int
            and type(right[0]) is int
            and right[1] == 1
        ):
            return _replace_at(t, path, frac_add(right, frac_recip(left)))
        return None
    if kind is Move.BETA_Q:
        new = _beta_q(node)
        return None if new is None else _replace_at(t, path, new)
    if kind is Move.BETA_0:
        new = _beta_0(node)
        return None if new is None else _replace_at(t, path, new)
    if kind in (Move.BETA_MINUS, Move.BETA_1):
        if pos != _LEFT or parent is None:
            return None
        fn = _beta_minus if kind is Move.BETA_MINUS else _beta_1
        new = fn(node, parent[1])
        return None if new is None else _replace_at(t, path[:-1], new)
    if kind is Move.GAMMA:
        left, right = node
        if left == RING and type(right[0]) is not int and right[0] != RING:
            return _replace_at(t, path, _graft_ring(right))
        return None
    raise ValueError(f"unknown move {kind}")


# --- equality decisions ------------------------------------------------------


def isotopic(a: Node, b: Node) -> bool:
    return canonicalize(a) == canonicalize(b)


def equivalent(a: Node, b: Node) -> bool:
    ca = canonicalize(a)
    return any(canonicalize(apply(h, b)) == ca for h in EQUIVALENCE_SUBGROUP)


def same_orbit(a: Node, b: Node) -> bool:
    ca = canonicalize(a)
    return any(canonicalize(apply(g, b)) == ca for g in ALL_TRANSFORMS)
