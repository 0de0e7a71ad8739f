"""Crossing metric and minimal-crossing search.

The displayed crossing count of a tree sums, over its leaves, the
number of crossings of the leaf's standard form (the absolute values of
its continued-fraction terms); integral leaves contribute |n|.

Minimization searches flype variants of the canonical tree: rational
nodes are contracted (which absorbs negative rightmost integrals into
adjacent rational leaves and never increases the metric), then
crossing-lowering flypes between right leaves of opposite sign -
adjacent or separated by one 0 right-leaf (a generalized-twist merge) -
are branched on and the results explored recursively with memoization.
Because reflections and rotations preserve diagrams, the minimal count
is shared by the whole transform orbit, so the search runs from every
one of the 16 images and the best result is mapped back through the
inverse transform.
"""

from __future__ import annotations

from .algebra import (
    ALL_TRANSFORMS,
    IDENTITY,
    Node,
    apply,
    inverse,
    mu,
    rho_x,
    rho_x_power,
)
from .canonical import canonicalize, is_canonical
from .fraction import ZERO, frac_add, frac_recip, iter_leaves, rational_decompose

_ONE = (1, 1)


def crossing_count(t: Node) -> int:
    total = 0
    for leaf in iter_leaves(t):
        if leaf[1] == 1:
            total += abs(leaf[0])
        else:
            total += sum(abs(term) for term in rational_decompose(leaf))
    return total


def _bump(t: Node, q: int) -> Node:
    if q == 0:
        return t
    if type(t[0]) is int:
        return frac_add(t, (q, 1))
    return (t[0], _bump(t[1], q))


def _rightmost(t: Node):
    while type(t[0]) is not int:
        t = t[1]
    return t


def _contract(t: Node) -> Node:
    """Collapse every rational node; valid isotopy, metric never grows."""
    if type(t[0]) is int:
        return t
    left = _contract(t[0])
    right = _contract(t[1])
    while True:
        if type(left[0]) is int:
            rec = frac_recip(left)
            if rec[1] == 1:
                # left factor q0: twist q into the sibling
                merged = _bump(rho_x_power(right, rec[0]), rec[0])
                if type(merged[0]) is int:
                    return merged
                left, right = merged
                continue
            if type(right[0]) is int and right[1] == 1:
                return frac_add(right, rec)
        return (left, right)


def _chain(terms: list[int]) -> Node:
    tree: Node = (terms[0], 1)
    for term in terms[1:]:
        tree = (tree, (term, 1))
    return tree


def _expand(t: Node) -> Node:
    """Replace every non-integral leaf by its standard-form chain."""
    if type(t[0]) is int:
        if t[1] == 1:
            return t
        return _chain(rational_decompose(t))
    return (_expand(t[0]), _expand(t[1]))


def _flype_variants(t: Node) -> list[Node]:
    """One-step rewrites at qualifying flype/merge sites, anywhere in t."""
    out: list[Node] = []

    def visit(node: Node, rebuild) -> None:
        if type(node[0]) is int:
            return
        left, right = node
        if type(left[0]) is not int:
            a_leaf = left[1]
            if type(a_leaf[0]) is int and a_leaf[1] == 1 and a_leaf[0] != 0:
                a = a_leaf[0]
                b_leaf = _rightmost(right)
                if b_leaf[1] == 1 and a * b_leaf[0] < 0:
                    if a < 0:
                        new = (
                            ((mu(left[0]), (-a - 1, 1)), _ONE),
                            _bump(rho_x(right), -1),
                        )
                    else:
                        new = (
                            ((mu(left[0]), (-(a - 1), 1)), (-1, 1)),
                            _bump(rho_x(right), 1),
                        )
                    out.append(rebuild(new))
            if left[1] == ZERO:
                # A^a 0 B^b: merge the two rightmost integrals (generalized twist)
                inner = left[0]
                in_leaf = _rightmost(inner)
                if in_leaf[1] == 1:
                    a = in_leaf[0]
                    merged = _bump(rho_x_power(right, a), a)

                    def graft(x: Node) -> Node:
                        if type(x[0]) is int:
                            return merged
                        return (x[0], graft(x[1]))

                    out.append(rebuild(graft(inner)))
        visit(left, lambda s: rebuild((s, node[1])))
        visit(right, lambda s: rebuild((node[0], s)))

    visit(t, lambda s: s)
    return out


def _emit_key(t: Node) -> str:
    from .notation import emit

    return emit(t)


def _search(start: Node) -> tuple[int, Node]:
    """Best (metric, tree) reachable from one tree by flypes and merges."""
    start = _contract(start)
    best = crossing_count(start)
    witness = start
    seen = {start}
    frontier = [start]
    while frontier:
        state = frontier.pop()
        for raw in _flype_variants(_expand(state)):
            nxt = _contract(raw)
            if nxt in seen:
                continue
            seen.add(nxt)
            cost = crossing_count(nxt)
            if cost < best:
                best, witness = cost, nxt
            frontier.append(nxt)
    return best, witness


def minimize(t: Node) -> tuple[int, Node]:
    """(minimal crossing number, witnessing tree) for a prime tangle.

    The crossing number is a class invariant of the whole transform
    orbit, so all 16 images are searched; the witness is mapped back to
    a representation of the input tangle.
    """
    if not is_canonical(t):
        t = canonicalize(t)
    best: int | None = None
    witness: Node | None = None
    for g in ALL_TRANSFORMS:
        image = canonicalize(apply(g, t)) if g != IDENTITY else t
        cost, wit = _search(image)
        if best is not None and cost >= best:
            continue
        back = _contract(apply(inverse(g), wit)) if g != IDENTITY else wit
        cost_back = crossing_count(back)
        if cost_back < cost:
            cost = cost_back
        if best is None or cost < best:
            best, witness = cost, back
    assert best is not None and witness is not None
    return best, witness
