"""SVG diagrams of tangle trees by recursive box layout.

An integral tangle n is a horizontal row of |n| crossings (the NW-SE
strand is on top for negative n, below for positive).  A product A*B
draws A reflected across the NW-SE diagonal (the eta image) in the left
slot and B in the right slot, with two joining arcs - exactly the
A*B = eta(A)+B decomposition.  Rational leaves expand to their
standard-form chain first.

The geometry is built as explicit strand segments plus crossing
records, so the drawn strands can be traced: the two open arcs start at
the four boundary stubs and every remaining component is a closed loop
(emitted with class="closed").  Crossره counts in the picture equal the
displayed crossing number of the tree.
"""

from __future__ import annotations

from .algebra import Node
from .fraction import rational_decompose

Point = tuple[float, float]


class _Piece:
    """Geometry in a unit box [0,w]x[0,1]: ports, arcs, crossings."""

    __slots__ = ("w", "ports", "arcs", "crossings")

    def __init__(self, w: float):
        self.w = w
        self.ports: dict[str, Point] = {}
        self.arcs: list[list[Point]] = []
        # each crossing: (center, over_pts, under_pts) with 2-point strands
        self.crossings: list[tuple[Point, list[Point], list[Point]]] = []

    def transform(self, fn) -> "_Piece":
        out = _Piece(self.w)
        out.ports = {k: fn(p) for k, p in self.ports.items()}
        out.arcs = [[fn(p) for p in arc] for arc in self.arcs]
        out.crossings = [
            (fn(c), [fn(p) for p in o], [fn(p) for p in u])
            for c, o, u in self.crossings
        ]
        return out


def _chain_tree(terms: list[int]) -> Node:
    tree: Node = (terms[0], 1)
    for t in terms[1:]:
        tree = (tree, (t, 1))
    return tree


def _expand(t: Node) -> Node:
    if type(t[0]) is int:
        if t[1] == 1:
            return t
        return _chain_tree(rational_decompose(t))
    return (_expand(t[0]), _expand(t[1]))


def _weight(t: Node) -> int:
    if type(t[0]) is int:
        return max(1, abs(t[0]))
    return _weight(t[0]) + _weight(t[1])


def _integral_piece(n: int) -> _Piece:
    k = abs(n)
    w = float(max(1, k))
    piece = _Piece(w)
    piece.ports = {"NW": (0.0, 1.0), "SW": (0.0, 0.0), "NE": (w, 1.0), "SE": (w, 0.0)}
    if k == 0:
        piece.arcs.append([(0.0, 1.0), (w, 1.0)])
        piece.arcs.append([(0.0, 0.0), (w, 0.0)])
        return piece
    top = (0.0, 1.0)
    bot = (0.0, 0.0)
    for i in range(k):
        cx = i + 0.5
        c = (cx, 0.5)
        ul, ur = (cx - 0.35, 0.85), (cx + 0.35, 0.85)
        ll, lr = (cx - 0.35, 0.15), (cx + 0.35, 0.15)
        # rising strand ll->ur, falling strand ul->lr
        if n > 0:
            over, under = [ll, ur], [ul, lr]
        else:
            over, under = [ul, lr], [ll, ur]
        piece.crossings.append((c, over, under))
        piece.arcs.append([top, ul])
        piece.arcs.append([bot, ll])
        top, bot = ur, lr
    piece.arcs.append([top, (w, 1.0)])
    piece.arcs.append([bot, (w, 0.0)])
    return piece


def _eta_reflect(piece: _Piece) -> _Piece:
    """Reflect across the NW-SE diagonal of the piece's box."""
    w = piece.w

    def fn(p: Point) -> Point:
        x, y = p
        # map (x, y) in [0,w]x[0,1] -> ((1-y)*w, 1 - x/w)
        return ((1.0 - y) * w, 1.0 - x / w)

    out = piece.transform(fn)
    out.ports = {
        "NW": out.ports["NW"],
        "NE": out.ports["SW"],
        "SW": out.ports["NE"],
        "SE": out.ports["SE"],
    }
    return out


def _scale_into(piece: _Piece, x0: float, wid: float) -> _Piece:
    sx = wid / piece.w

    def fn(p: Point) -> Point:
        return (x0 + p[0] * sx, p[1])

    out = piece.transform(fn)
    out.w = wid
    return out


def _compose(t: Node) -> _Piece:
    if type(t[0]) is int:
        return _integral_piece(t[0])
    left = _eta_reflect(_compose(t[0]))
    right = _compose(t[1])
    wl, wr = _weight(t[0]), _weight(t[1])
    total = float(wl + wr) + 0.6
    piece = _Piece(total)
    lp = _scale_into(left, 0.0, float(wl))
    rp = _scale_into(right, wl + 0.6, float(wr))
    piece.arcs = lp.arcs + rp.arcs
    piece.crossings = lp.crossings + rp.crossings
    piece.arcs.append([lp.ports["NE"], rp.ports["NW"]])
    piece.arcs.append([lp.ports["SE"], rp.ports["SW"]])
    piece.ports = {
        "NW": lp.ports["NW"],
        "SW": lp.ports["SW"],
        "NE": rp.ports["NE"],
        "SE": rp.ports["SE"],
    }
    return piece


def _trace(piece: _Piece):
    """Split all strand geometry into open arcs and closed loops."""
    key = lambda p: (round(p[0], 6), round(p[1], 6))
    edges: list[tuple] = []
    for arc in piece.arcs:
        edges.append((key(arc[0]), key(arc[-1]), arc))
    for _, over, under in piece.crossings:
        edges.append((key(over[0]), key(over[-1]), over))
        edges.append((key(under[0]), key(under[-1]), under))
    adj: dict[tuple, list[int]] = {}
    for i, (a, b, _) in enumerate(edges):
        adj.setdefault(a, []).append(i)
        adj.setdefault(b, []).append(i)
    used = [False] * len(edges)

    def follow(start_pt):
        path = []
        pt = start_pt
        while True:
            nxt = [i for i in adj.get(pt, []) if not used[i]]
            if not nxt:
                return path, pt
            i = nxt[0]
            used[i] = True
            a, b, pts = edges[i]
            seg = pts if a == pt else list(reversed(pts))
            path.append(seg)
            pt = key(seg[-1])

    boundary = [key(piece.ports[p]) for p in ("NW", "NE", "SW", "SE")]
    open_strands = []
    for pt in boundary:
        segs, end = follow(pt)
        if segs:
            open_strands.append(segs)
    loops = []
    for i in range(len(edges)):
        if not used[i]:
            segs, _ = follow(edges[i][0])
            if segs:
                loops.append(segs)
    return open_strands, loops


def render_svg(t: Node) -> str:
    """SVG 1.1 document for a tangle tree."""
    t = _expand(t)
    piece = _compose(t)
    scale = 46.0
    pad = 30.0
    W = piece.w * scale + 2 * pad
    H = 1.0 * scale * 1.6 + 2 * pad

    def pt(p: Point) -> tuple[float, float]:
        return (pad + p[0] * scale, pad + (1.0 - p[1]) * scale * 1.6)

    def path_d(segs: list[list[Point]]) -> str:
        cmds = []
        for seg in segs:
            x0, y0 = pt(seg[0])
            cmds.append(f"M {x0:.1f} {y0:.1f}")
            for p in seg[1:]:
                x, y = pt(p)
                cmds.append(f"L {x:.1f} {y:.1f}")
        return " ".join(cmds)

    open_strands, loops = _trace(piece)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{W:.0f}" height="{H:.0f}" viewBox="0 0 {W:.0f} {H:.0f}">',
        '<g fill="none" stroke="black" stroke-width="2.4" stroke-linecap="round">',
    ]
    for segs in open_strands:
        parts.append(f'<path class="strand" d="{path_d(segs)}"/>')
    for segs in loops:
        parts.append(f'<path class="closed" stroke="#046" d="{path_d(segs)}"/>')
    for c, over, under in piece.crossings:
        # whiteout under the over strand, then redraw it on top
        parts.append(
            f'<path stroke="white" stroke-width="8" d="{path_d([over])}"/>'
        )
        parts.append(f'<path class="crossing" d="{path_d([over])}"/>')
    parts.append("</g>")
    labels = {"NW": (-12, -6), "NE": (8, -6), "SW": (-12, 14), "SE": (8, 14)}
    for name, (dx, dy) in labels.items():
        x, y = pt(piece.ports[name])
        parts.append(
            f'<circle class="endpoint" cx="{x:.1f}" cy="{y:.1f}" r="3" fill="black"/>'
        )
        parts.append(
            f'<text x="{x + dx:.1f}" y="{y + dy:.1f}" font-size="11" '
            f'font-family="sans-serif" fill="#555">{name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def svg_stats(svg: str) -> dict:
    """Counts used by tests: boundary stubs, crossings, closed loops."""
    return {
        "endpoints": svg.count('class="endpoint"'),
        "crossings": svg.count('class="crossing"'),
        "closed": svg.count('class="closed"'),
    }
