"""Tangle trees and the dihedral-times-mirror symmetry group acting on them.

A tangle tree is a nested tuple: a *leaf* is a normalized ``(p, q)``
fraction (see :mod:`tanglekit.fraction`) standing for the rational
tangle with that fraction, and an internal node is a ``(left, right)``
pair meaning the product left*right.  Tuples are immutable, hashable
and compare structurally at C speed, which the classification loop
depends on.

The transformation group of the Conway sphere is generated by the
mirror mu, the quarter-turn nu and the diagonal reflection eta, with
relations mu^2 = nu^4 = eta^2 = e, eta*nu*eta = nu^-1 and mu central
(a dihedral group of order 8 times Z2, 16 elements).  Elements are
kept in the normal word mu^m nu^k eta^e, encoded as an (m, k, e)
tuple, so composition needs no lookup table.
"""

from __future__ import annotations

from typing import Iterator, Union

from .fraction import Frac, frac, frac_neg

Node = Union[Frac, tuple]  # leaf: (p, q); product: (Node, Node)


def integral(n: int) -> Node:
    return frac(n)


def rational(p: int, q: int = 1) -> Node:
    return frac(p, q)


def product(a: Node, b: Node) -> Node:
    return (a, b)


def tangle_sum(a: Node, b: Node) -> Node:
    """A + B encoded multiplicatively as (A*0)*B."""
    return ((a, (0, 1)), b)


def node_count(t: Node) -> int:
    if type(t[0]) is int:
        return 1
    return 1 + node_count(t[0]) + node_count(t[1])


# --- reflections and rotations --------------------------------------------
#
# mu negates every leaf; eta appends a 0 factor.  Rotations recurse:
#   [AB]_x = A_y B_x        [AB]_y = (B_y 0)(A_x 0)
# and fix every leaf, because rational tangles are rotation-invariant.


def mu(t: Node) -> Node:
    if type(t[0]) is int:
        return frac_neg(t)
    return (mu(t[0]), mu(t[1]))


def eta(t: Node) -> Node:
    return (t, (0, 1))


def rho_x(t: Node) -> Node:
    if type(t[0]) is int:
        return t
    return (rho_y(t[0]), rho_x(t[1]))


def rho_y(t: Node) -> Node:
    if type(t[0]) is int:
        return t
    return ((rho_y(t[1]), (0, 1)), (rho_x(t[0]), (0, 1)))


def rho_z(t: Node) -> Node:
    return rho_x(rho_y(t))


def nu(t: Node) -> Node:
    # nu = mu . rho_x . eta, from rho_x = mu nu eta
    return mu(rho_x(eta(t)))


def rho_x_power(t: Node, n: int) -> Node:
    """Rotate around x n times; only the parity matters."""
    return rho_x(t) if n % 2 else t


# --- the 16-element transform group ----------------------------------------

Transform = tuple[int, int, int]  # (m, k, e): the word mu^m nu^k eta^e

IDENTITY: Transform = (0, 0, 0)

MU: Transform = (1, 0, 0)
NU: Transform = (0, 1, 0)
ETA: Transform = (0, 0, 1)

ALL_TRANSFORMS: tuple[Transform, ...] = tuple(
    (m, k, e) for m in (0, 1) for k in (0, 1, 2, 3) for e in (0, 1)
)

# ball self-homeomorphisms that need not fix the boundary points:
# the order-8 subgroup generated by nu and mu*eta, i.e. words with m == e
EQUIVALENCE_SUBGROUP: tuple[Transform, ...] = tuple(
    g for g in ALL_TRANSFORMS if g[0] == g[2]
)


def compose(g: Transform, h: Transform) -> Transform:
    """Word g h, renormalized with eta nu = nu^-1 eta and mu central."""
    m1, k1, e1 = g
    m2, k2, e2 = h
    k = (k1 - k2) % 4 if e1 else (k1 + k2) % 4
    return ((m1 + m2) % 2, k, (e1 + e2) % 2)


def inverse(g: Transform) -> Transform:
    m, k, e = g
    if e:
        return g  # mu^m nu^k eta is an involution
    return (m, (-k) % 4, 0)


def transform_name(g: Transform) -> str:
    m, k, e = g
    parts = []
    if m:
        parts.append("mu")
    if k:
        parts.append("nu" if k == 1 else f"nu{k}")
    if e:
        parts.append("eta")
    return ".".join(parts) if parts else "e"


_GENERATOR_MAPS = {"mu": mu, "nu": nu, "eta": eta}


def apply(g: Transform, t: Node) -> Node:
    """Act on a tree by the normal word, rightmost generator first."""
    m, k, e = g
    if e:
        t = eta(t)
    if k == 1:
        t = nu(t)
    elif k == 2:
        t = rho_z(t)
    elif k == 3:
        t = eta(rho_x(mu(t)))  # nu^-1 = eta . rho_x . mu
    if m:
        t = mu(t)
    return t


def orbit16(t: Node) -> list[tuple[Transform, Node]]:
    """All 16 raw (pre-canonicalization) images of a tree."""
    return [(g, apply(g, t)) for g in ALL_TRANSFORMS]


def iter_transforms() -> Iterator[Transform]:
    return iter(ALL_TRANSFORMS)
