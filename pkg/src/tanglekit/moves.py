"""Isotopy-preserving rewrites on tangle trees.

Each move replaces a subtree by a different tree of the same tangle:

* twist:       A = 1 0 A_x 0 -1  =  -1 0 A_x 0 1
* flype:       A = neg(A 1) 1 -1  =  neg(A) 0 1 -1 1 0
               A = neg(A 0 1) 1 -1 0  =  neg(A) 1 -1 1
* ring move:   R A = (A 0)(R 0)   for the ring R = 2(-2 0) = 2(2 -1)
* elementary:  0 1 = 0 0   and   1 0 -1 = 0 = -1 0 1
* bracket:     (A 0 B) 0 C = A 0 (B 0 C)   (associativity of the sum)

These generate the equivalences the canonical form is quotiented by, so
re-canonicalizing after any sequence of them must reproduce the same
tree; the fraction and the connectivity are preserved at every step.
Sites are addressed by 0/1 paths from the root (0 = left child).
"""

from __future__ import annotations

from typing import Callable, Iterator

from .algebra import Node, mu, rho_x
from .canonical import RING
from .fraction import ZERO

_ONE = (1, 1)
_MINUS_ONE = (-1, 1)

RING_RAW: Node = ((2, 1), ((-2, 1), ZERO))


def subtree_at(t: Node, path: tuple[int, ...]) -> Node:
    for step in path:
        t = t[step]
    return t


def replace_at(t: Node, path: tuple[int, ...], sub: Node) -> Node:
    if not path:
        return sub
    if path[0] == 0:
        return (replace_at(t[0], path[1:], sub), t[1])
    return (t[0], replace_at(t[1], path[1:], sub))


def iter_paths(t: Node, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    yield prefix
    if type(t[0]) is not int:
        yield from iter_paths(t[0], prefix + (0,))
        yield from iter_paths(t[1], prefix + (1,))


# --- subtree-level rewrites -------------------------------------------------


def twist_pos(s: Node) -> Node:
    """S -> 1 0 S_x 0 -1."""
    return (((((_ONE, ZERO), rho_x(s)), ZERO), _MINUS_ONE))


def twist_neg(s: Node) -> Node:
    """S -> -1 0 S_x 0 1."""
    return (((((_MINUS_ONE, ZERO), rho_x(s)), ZERO), _ONE))


def flype_a(s: Node) -> Node:
    """S -> neg(S 1) 1 -1."""
    return ((mu((s, _ONE)), _ONE), _MINUS_ONE)


def flype_b(s: Node) -> Node:
    """S -> neg(S) 0 1 -1 1 0."""
    return ((((((mu(s), ZERO), _ONE), _MINUS_ONE), _ONE), ZERO))


def flype_c(s: Node) -> Node:
    """S -> neg(S 0 1) 1 -1 0."""
    return (((mu(((s, ZERO), _ONE)), _ONE), _MINUS_ONE), ZERO)


def flype_d(s: Node) -> Node:
    """S -> neg(S) 1 -1 1."""
    return (((mu(s), _ONE), _MINUS_ONE), _ONE)


_SUBTREE_MOVES: list[Callable[[Node], Node]] = [
    twist_pos,
    twist_neg,
    flype_a,
    flype_b,
    flype_c,
    flype_d,
]


def _is_ring(s: Node) -> bool:
    return s == RING or s == RING_RAW


def ring_move(s: Node) -> Node | None:
    """R A -> A 0 (R 0) and back; applies when one side is the ring."""
    if type(s[0]) is int:
        return None
    left, right = s
    if _is_ring(left):
        return ((right, ZERO), (left, ZERO))
    # reverse direction: A 0 (R 0) -> R A
    if (
        type(left[0]) is not int
        and left[1] == ZERO
        and type(right[0]) is not int
        and right[1] == ZERO
        and _is_ring(right[0])
    ):
        return (right[0], left[0])
    return None


def elementary_move(s: Node) -> Node | None:
    """0 1 <-> 0 0 contraction and 1 0 -1 / -1 0 1 -> 0 (kink removal)."""
    if type(s[0]) is int:
        return None
    if s == (ZERO, _ONE):
        return (ZERO, ZERO)
    if s == (ZERO, ZERO):
        return (ZERO, _ONE)
    if s == ((_ONE, ZERO), _MINUS_ONE) or s == ((_MINUS_ONE, ZERO), _ONE):
        return ZERO
    return None


def elementary_insert(s: Node) -> Node | None:
    """0 -> 1 0 -1 (inverse kink insertion at a zero leaf)."""
    if s == ZERO:
        return ((_ONE, ZERO), _MINUS_ONE)
    return None


def bracket_left(s: Node) -> Node | None:
    """A 0 (B 0 C) -> (A 0 B) 0 C."""
    if type(s[0]) is int:
        return None
    left, right = s
    if type(left[0]) is int or left[1] != ZERO or type(right[0]) is int:
        return None
    inner = right[0]
    if type(inner[0]) is int or inner[1] != ZERO:
        return None
    a = left[0]
    b = inner[0]
    c = right[1]
    return ((((a, ZERO), b), ZERO), c)


def bracket_right(s: Node) -> Node | None:
    """(A 0 B) 0 C -> A 0 (B 0 C)."""
    if type(s[0]) is int:
        return None
    outer_left, c = s
    if type(outer_left[0]) is int or outer_left[1] != ZERO:
        return None
    ab = outer_left[0]
    if type(ab[0]) is int or type(ab[0][0]) is int:
        return None
    a0, b = ab
    if a0[1] != ZERO:
        return None
    a = a0[0]
    return ((a, ZERO), ((b, ZERO), c))


def applicable_moves(t: Node) -> list[tuple[str, tuple[int, ...], Node]]:
    """All (name, path, rewritten-whole-tree) triples available on t."""
    out: list[tuple[str, tuple[int, ...], Node]] = []
    for path in iter_paths(t):
        s = subtree_at(t, path)
        for fn in _SUBTREE_MOVES:
            out.append((fn.__name__, path, replace_at(t, path, fn(s))))
        for fn in (ring_move, elementary_move, elementary_insert, bracket_left, bracket_right):
            new = fn(s)
            if new is not None:
                out.append((fn.__name__, path, replace_at(t, path, new)))
    return out
