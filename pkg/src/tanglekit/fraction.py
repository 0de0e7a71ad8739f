"""Exact arithmetic on the extended rational line Q ∪ {1/0}.

Fractions are plain ``(p, q)`` int tuples, normalized so that
``gcd(|p|, q) == 1``, ``q >= 0``, and the single point at infinity is
``(1, 0)``.  Zero is ``(0, 1)``; the sign lives in ``p``.  Tuples keep
comparisons and hashing in C, which matters once millions of tangle
trees are deduplicated.

Arithmetic is checked against a signed 64-bit range: values this large
cannot come from tangles in the supported crossing range, so exceeding
the bound raises ``OverflowError`` instead of silently continuing.

The module also evaluates the fraction invariant of a tangle tree, the
continued-fraction (Euclid) decomposition of a rational value, and the
boundary connectivity (V/H/X type plus closed-loop count) of a tree.
"""

from __future__ import annotations

from math import gcd
from typing import Iterator

Frac = tuple[int, int]

INF: Frac = (1, 0)
ZERO: Frac = (0, 1)
ONE: Frac = (1, 1)

_I64_MAX = 2**63 - 1


class TangleOverflowError(OverflowError):
    """Exact value left the signed 64-bit range."""


def _checked(p: int, q: int) -> Frac:
    if p > _I64_MAX or -p > _I64_MAX or q > _I64_MAX:
        raise TangleOverflowError(f"fraction {p}/{q} exceeds 64-bit range")
    return (p, q)


def frac(p: int, q: int = 1) -> Frac:
    """Build a normalized fraction; any q=0 input collapses to (1, 0)."""
    if q == 0:
        return INF
    if q < 0:
        p, q = -p, -q
    g = gcd(p, q)
    if g > 1:
        p //= g
        q //= g
    return _checked(p, q)


def frac_add(a: Frac, b: Frac) -> Frac:
    """a + b with the convention inf + x = inf (including inf + inf)."""
    if a[1] == 0 or b[1] == 0:
        return INF
    return frac(a[0] * b[1] + b[0] * a[1], a[1] * b[1])


def frac_neg(a: Frac) -> Frac:
    return (-a[0], a[1])


def frac_recip(a: Frac) -> Frac:
    """1/a; recip(0) = inf and recip(inf) = 0."""
    p, q = a
    if p == 0:
        return INF
    if p < 0:
        return (-q, -p)
    return (q, p)


def is_integral(a: Frac) -> bool:
    return a[1] == 1


def is_inf(a: Frac) -> bool:
    return a[1] == 0


def frac_floor(a: Frac) -> int:
    if a[1] == 0:
        raise ValueError("floor of infinity")
    return a[0] // a[1]


def gt_one(a: Frac) -> bool:
    """Strictly greater than 1 and finite."""
    return a[1] != 0 and a[0] > a[1]


def frac_str(a: Frac) -> str:
    """Serialize: integers bare, otherwise "p/q"; infinity is "1/0"."""
    p, q = a
    return str(p) if q == 1 else f"{p}/{q}"


def frac_parse(text: str) -> Frac:
    num, slash, den = text.partition("/")
    p = int(num)
    q = int(den) if slash else 1
    if abs(p) > _I64_MAX or abs(q) > _I64_MAX:
        raise TangleOverflowError(f"literal {text} exceeds 64-bit range")
    return frac(p, q)


# --- fraction of a tangle tree -------------------------------------------
#
# Trees are the tuple representation of tanglekit.algebra: a leaf is a
# (p, q) fraction, an internal product node is a (left, right) pair of
# trees.  Frac(LR) = Frac(R) + 1/Frac(L), leaves evaluate to themselves.


def is_leaf(t) -> bool:
    return type(t[0]) is int


def frac_of(t) -> Frac:
    if type(t[0]) is int:
        return t
    return frac_add(frac_of(t[1]), frac_recip(frac_of(t[0])))


# --- Euclid / continued-fraction decomposition ---------------------------


def rational_decompose(f: Frac) -> list[int]:
    """Standard-form factor list (innermost first) of a rational tangle.

    The list [k, l, ..., m, n] satisfies n + 1/(m + 1/(... + 1/k)) = f,
    all entries share one sign except a possibly-zero last entry, and the
    first entry is 1 (or -1) or 0 only in the degenerate tangles [1],
    [0], [0, 0].
    """
    p, q = f
    if q == 0:
        return [0, 0]
    if q == 1:
        return [p]
    if p < 0:
        return [-term for term in rational_decompose((-p, q))]
    n = p // q
    if n == 0:
        return rational_decompose((q, p)) + [0]
    return rational_decompose((q, p - n * q)) + [n]


def continued_fraction(terms: list[int]) -> Frac:
    """Evaluate a standard-form factor list back into a fraction."""
    value: Frac | None = None
    for term in terms:
        t = frac(term)
        value = t if value is None else frac_add(t, frac_recip(value))
    if value is None:
        raise ValueError("empty term list")
    return value


# --- boundary connectivity ------------------------------------------------

V, H, X = "V", "H", "X"

_ARCS = {
    V: (("NW", "SW"), ("NE", "SE")),
    H: (("NW", "NE"), ("SW", "SE")),
    X: (("NW", "SE"), ("SW", "NE")),
}


def _sum_connectivity(a: str, b: str) -> tuple[str, int]:
    """Join type-a and type-b boxes side by side by brute-force arc tracing."""
    adj: dict[str, list[str]] = {}

    def link(u: str, v: str) -> None:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    for u, v in _ARCS[a]:
        link("a" + u, "a" + v)
    for u, v in _ARCS[b]:
        link("b" + u, "b" + v)
    # identify a's east points with b's west points
    link("aNE", "bNW")
    link("aSE", "bSW")

    boundary = ["aNW", "aSW", "bNE", "bSE"]
    seen: set[str] = set()

    def trace(start: str) -> list[str]:
        path = [start]
        seen.add(start)
        cur = start
        while True:
            nxt = [w for w in adj[cur] if w not in seen]
            if not nxt:
                return path
            cur = nxt[0]
            seen.add(cur)
            path.append(cur)

    ends: dict[str, str] = {}
    for pt in boundary:
        if pt in seen:
            continue
        path = trace(pt)
        ends[pt] = path[-1]
    loops = 0
    for pt in list(adj):
        if pt not in seen:
            trace(pt)
            loops += 1
    # classify the pairing of the four outer points (relabel b's east as east)
    pair = ends["aNW"]
    if pair == "aSW":
        vhx = V
    elif pair == "bNE":
        vhx = H
    else:
        vhx = X
    return vhx, loops


_SUM_TABLE: dict[tuple[str, str], tuple[str, int]] = {
    (a, b): _sum_connectivity(a, b) for a in (V, H, X) for b in (V, H, X)
}

_ETA_SWAP = {V: H, H: V, X: X}


def leaf_vhx(f: Frac) -> str:
    """Parity rule: q even -> V, p even -> H, both odd -> X."""
    p, q = f
    if q % 2 == 0:
        return V
    if p % 2 == 0:
        return H
    return X


def connectivity(t) -> tuple[str, int]:
    """(VHX type, number of closed components) of a tangle tree."""
    if type(t[0]) is int:
        return leaf_vhx(t), 0
    lt, ll = connectivity(t[0])
    rt, rl = connectivity(t[1])
    vhx, extra = _SUM_TABLE[(_ETA_SWAP[lt], rt)]
    return vhx, ll + rl + extra


def iter_leaves(t) -> Iterator[Frac]:
    if type(t[0]) is int:
        yield t
    else:
        yield from iter_leaves(t[0])
        yield from iter_leaves(t[1])
