"""Parse and print tangle words.

Two surface modes share one grammar
``product := factor+ ; factor := integer | "(" product ")"``
with left-associated products:

* ``COMPACT`` - every digit is its own factor and ``-`` signs the single
  digit right after it, so ``"3(2(20))"`` is 3*(2*(2*0)).  This is the
  juxtaposed style tangle tables use; it cannot express factors >= 10.
* ``SPACED`` - factors are separated by whitespace, multi-digit integers
  and ``p/q`` rational leaves are allowed.  This is what ``emit``
  produces, so emitted text always round-trips.

``emit`` prints left chains flat (left associativity) and parenthesizes
internal right children: the tree 3*(2*(2*0)) prints as "3 (2 (2 0))".
"""

from __future__ import annotations

from enum import Enum

from .fraction import Frac, frac, frac_parse, frac_str, _I64_MAX, TangleOverflowError
from .algebra import Node


class NotationMode(Enum):
    COMPACT = "compact"
    SPACED = "spaced"


COMPACT = NotationMode.COMPACT
SPACED = NotationMode.SPACED


class TangleSyntaxError(ValueError):
    """Malformed tangle notation."""


def _tokenize_compact(text: str) -> list:
    tokens: list = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()":
            tokens.append(c)
            i += 1
        elif c == "-":
            if i + 1 >= len(text) or not text[i + 1].isdigit():
                raise TangleSyntaxError(f"dangling '-' at position {i}")
            tokens.append(frac(-int(text[i + 1])))
            i += 2
        elif c.isdigit():
            tokens.append(frac(int(c)))
            i += 1
        else:
            raise TangleSyntaxError(f"illegal character {c!r} at position {i}")
    return tokens


def _tokenize_spaced(text: str) -> list:
    tokens: list = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "()":
            tokens.append(c)
            i += 1
            continue
        if c == "-" or c.isdigit():
            j = i + 1 if c == "-" else i
            if j >= n or not text[j].isdigit():
                raise TangleSyntaxError(f"dangling '-' at position {i}")
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "/":
                j += 1
                if j >= n or not text[j].isdigit():
                    raise TangleSyntaxError(f"bad fraction literal at position {i}")
                while j < n and text[j].isdigit():
                    j += 1
            literal = text[i:j]
            num = literal.partition("/")[0]
            if abs(int(num)) > _I64_MAX:
                raise TangleOverflowError(f"integer {num} exceeds 64-bit range")
            tokens.append(frac_parse(literal))
            i = j
            continue
        raise TangleSyntaxError(f"illegal character {c!r} at position {i}")
    return tokens


def _parse_product(tokens: list, pos: int) -> tuple[Node, int]:
    factors: list[Node] = []
    while pos < len(tokens):
        tok = tokens[pos]
        if tok == "(":
            inner, pos = _parse_product(tokens, pos + 1)
            if pos >= len(tokens) or tokens[pos] != ")":
                raise TangleSyntaxError("unbalanced parentheses")
            pos += 1
            factors.append(inner)
        elif tok == ")":
            break
        else:
            factors.append(tok)
            pos += 1
    if not factors:
        raise TangleSyntaxError("empty group")
    tree = factors[0]
    for f in factors[1:]:
        tree = (tree, f)
    return tree, pos


def parse(text: str, mode: NotationMode = COMPACT) -> Node:
    """Parse a tangle word into a left-associated product tree."""
    if not text.strip():
        raise TangleSyntaxError("empty input")
    tokens = _tokenize_compact(text) if mode is COMPACT else _tokenize_spaced(text)
    tree, pos = _parse_product(tokens, 0)
    if pos != len(tokens):
        raise TangleSyntaxError("unbalanced parentheses")
    return tree


def parse_comma(text: str) -> Node:
    """Parse Conway comma notation (L1,...,LN,+++/---) into a tree.

    The list realizes L1*(L2*(...*(LN*n)...)) where n is the signed count
    of trailing +/- symbols, i.e. the sum L1 0 + ... + LN 0 + n.
    """
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise TangleSyntaxError("comma notation must be parenthesized")
    parts = [p.strip() for p in text[1:-1].split(",")]
    if not parts or any(not p for p in parts):
        raise TangleSyntaxError("empty element in comma notation")
    tail = 0
    last = parts[-1]
    if set(last) <= {"+"} or set(last) <= {"-"}:
        if len(parts) == 1:
            raise TangleSyntaxError("comma notation needs at least one tangle")
        tail = len(last) if last[0] == "+" else -len(last)
        parts = parts[:-1]
    elif "+" in last or "-" in last[1:]:
        raise TangleSyntaxError("mixed signs in comma-notation tail")
    tree: Node = frac(tail)
    for part in reversed(parts):
        tree = (parse(part, COMPACT), tree)
    return tree


def _emit_factor(t: Node) -> str:
    if type(t[0]) is int:
        return frac_str(t)
    return "(" + emit(t) + ")"


def emit(t: Node) -> str:
    """Deterministic SPACED-mode text; parse(emit(t), SPACED) == t."""
    if type(t[0]) is int:
        return frac_str(t)
    factors = []
    while type(t[0]) is not int:
        factors.append(_emit_factor(t[1]))
        t = t[0]
    factors.append(frac_str(t))
    return " ".join(reversed(factors))
