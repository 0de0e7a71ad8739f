"""Generation, orbit deduplication and symmetry naming.

Candidates are alternating multiplication-form words produced by an
exact integer-partition enumeration (positive factors, zeros only at
bracket ends, no consecutive opening brackets, no leading 1 followed by
more factors), plus non-alternating variants obtained by replacing each
zero of depth k with one of -1..-k.  Words ending in a top-level 0 are
eta-images of shorter candidates and are skipped; the 0 tangle itself
is kept.

Every candidate is canonicalized; its 16 transform images identify the
orbit, the stabilizer gives the symmetry group (named after the
subgroup's element set), and one representative per orbit is minimized
to place the orbit in its crossing-number row.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional

from .algebra import (
    ALL_TRANSFORMS,
    EQUIVALENCE_SUBGROUP,
    Node,
    apply,
    compose,
)
from .canonical import CompositeInputError, canonicalize
from .fraction import connectivity, frac_of, frac_str
from .minimize import minimize
from .notation import emit

# --- symmetry-group names ---------------------------------------------------


def _closure(gens: tuple) -> frozenset:
    elems = {(0, 0, 0), *gens}
    changed = True
    while changed:
        changed = False
        for a in list(elems):
            for b in list(elems):
                c = compose(a, b)
                if c not in elems:
                    elems.add(c)
                    changed = True
    return frozenset(elems)


_E = (0, 0, 0)
_MU = (1, 0, 0)
_NU2 = (0, 2, 0)
_ETA = (0, 0, 1)
_MU_NU = (1, 1, 0)
_ETA_NU = (0, 3, 1)  # eta nu = nu^-1 eta
_ETA_NU3 = (0, 1, 1)
_ETA_NU2 = (0, 2, 1)
_MU_NU2 = (1, 2, 0)
_MU_ETA_NU = (1, 3, 1)
_MU_ETA_NU3 = (1, 1, 1)

# name -> generating sets of the (conjugate) stabilizer subgroups sharing it
_NAME_GENERATORS: list[tuple[str, list[tuple]]] = [
    ("\U0001d7d9", [(_ETA, _MU_NU)]),
    ("ν̄", [(_MU_NU,)]),
    ("ηz", [(_ETA, _NU2)]),
    ("η", [(_ETA,), (_ETA_NU2,)]),
    ("\U0001d7d8", [(_MU, _NU2, _ETA_NU)]),
    ("μz", [(_MU, _NU2)]),
    ("μρ", [(_MU, _ETA_NU), (_MU, _ETA_NU3)]),
    ("x̄y", [(_ETA_NU, _NU2)]),
    ("z̄ρ", [(_MU_NU2, _ETA_NU3), (_MU_NU2, _ETA_NU)]),
    ("z̄", [(_MU_NU2,)]),
    ("ρ̄", [(_ETA_NU,), (_ETA_NU3,)]),
    ("μ", [(_MU,)]),
    ("zρ", [(_NU2, _MU_ETA_NU)]),
    ("z", [(_NU2,)]),
    ("ρ", [(_MU_ETA_NU,), (_MU_ETA_NU3,)]),
    ("e", [()]),
]

SYMMETRY_NAMES: dict[frozenset, str] = {}
for _name, _gen_sets in _NAME_GENERATORS:
    for _gens in _gen_sets:
        SYMMETRY_NAMES[_closure(_gens)] = _name

X_ONLY_NAMES = ("\U0001d7d9", "ν̄", "ηz", "η")
VH_ONLY_NAMES = (
    "\U0001d7d8",
    "μz",
    "μρ",
    "x̄y",
    "z̄ρ",
    "z̄",
    "ρ̄",
    "μ",
)
NON_MIRROR_NAMES = ("zρ", "z", "ρ", "e")
MIRROR_NAMES = X_ONLY_NAMES + VH_ONLY_NAMES


def symmetry_name(stab: Iterable[tuple]) -> str:
    return SYMMETRY_NAMES[frozenset(stab)]


def stabilizer(t: Node) -> frozenset:
    """Transforms whose image canonicalizes back to the input's form."""
    base = canonicalize(t)
    return frozenset(
        g for g in ALL_TRANSFORMS if canonicalize(apply(g, base)) == base
    )


# --- candidate generation ----------------------------------------------------


def _bracket_words(budget: int) -> Iterator[tuple]:
    """Factor tuples of a bracket: first factor >= 2, at least two factors."""
    for first in range(2, budget + 1):
        yield from _extend_bracket((first,), budget - first)


def _extend_bracket(prefix: tuple, rem: int) -> Iterator[tuple]:
    if rem == 0:
        if len(prefix) >= 2:
            yield prefix
        yield prefix + (0,)
        return
    for n in range(1, rem + 1):
        yield from _extend_bracket(prefix + (n,), rem - n)
    for bsum in range(2, rem + 1):
        for sub in _bracket_words(bsum):
            yield from _extend_bracket(prefix + (sub,), rem - bsum)


def _word_tree(word: tuple) -> Node:
    tree: Optional[Node] = None
    for f in word:
        factor: Node = _word_tree(f) if isinstance(f, tuple) else (f, 1)
        tree = factor if tree is None else (tree, factor)
    assert tree is not None
    return tree


def _word_zeros(word: tuple, depth: int = 1, path: tuple = ()) -> Iterator[tuple]:
    """(path, k) of every 0 factor.

    k is the nestedness: the count of closing brackets to the right of
    the 0, including the implicit bracket around the whole word, so a
    top-level trailing zero has k = 1 and the zero of "2(20)" has k = 2.
    """
    for i, f in enumerate(word):
        if isinstance(f, tuple):
            yield from _word_zeros(f, depth + 1, path + (i,))
        elif f == 0:
            yield path + (i,), depth


def _substitute(word: tuple, path: tuple, value: int) -> tuple:
    i = path[0]
    if len(path) == 1:
        return word[:i] + (value,) + word[i + 1 :]
    return word[:i] + (_substitute(word[i], path[1:], value),) + word[i + 1 :]


def _all_words(max_crossings: int) -> Iterator[tuple]:
    """Every alternating word, including those ending in a top-level 0."""
    if max_crossings >= 0:
        yield (0,)
    for total in range(1, max_crossings + 1):
        for first in range(1, total + 1):
            if first == 1 and total > 1:
                continue  # (1 n ...) is ambiguous with ((n+1) ...)
            yield from _extend_top((first,), total - first)


def _extend_top(prefix: tuple, rem: int) -> Iterator[tuple]:
    if rem == 0:
        yield prefix
        yield prefix + (0,)
        return
    for n in range(1, rem + 1):
        yield from _extend_top(prefix + (n,), rem - n)
    for bsum in range(2, rem + 1):
        for sub in _bracket_words(bsum):
            yield from _extend_top(prefix + (sub,), rem - bsum)


def gen_alternating(max_crossings: int) -> Iterator[tuple]:
    """Alternating candidate words (nested int tuples), each exactly once.

    Words ending in a top-level 0 are eta-images of shorter words; they
    are dropped here and serve only as templates for the sign variants.
    The 0 tangle itself is the special word (0,).
    """
    for word in _all_words(max_crossings):
        if word == (0,) or word[-1] != 0:
            yield word


def gen_nonalternating(words: Iterable[tuple]) -> Iterator[tuple]:
    """All zero -> negative replacement variants of the given templates.

    Each zero of nestedness k is replaced by one of -1..-k (or kept);
    the all-kept assignment is skipped, as are variants still ending in
    a top-level zero (eta-images of variants of the stripped word).
    """
    for word in words:
        if word == (0,):
            continue
        zeros = list(_word_zeros(word))
        if not zeros:
            continue
        trailing = word[-1] == 0
        choices = [range(0, k + 1) for _, k in zeros]
        for picks in itertools.product(*choices):
            if not any(picks):
                continue  # the all-zero assignment is the template itself
            if trailing and picks[-1] == 0:
                continue  # still ends with 0: covered by the stripped word
            variant = word
            for (path, _), k in zip(zeros, picks):
                if k:
                    variant = _substitute(variant, path, -k)
            yield variant


def candidates(max_crossings: int) -> Iterator[Node]:
    """All candidate trees (alternating plus sign variants)."""
    for word in _all_words(max_crossings):
        if word == (0,) or word[-1] != 0:
            yield _word_tree(word)
        for variant in gen_nonalternating([word]):
            yield _word_tree(variant)


# --- classification -----------------------------------------------------------


@dataclass(frozen=True)
class ClassRecord:
    canonical: str
    crossings: int
    closed_components: int
    vhx: str
    fraction: str
    symmetry: str
    isotopy_classes: int
    equivalence_classes: int

    def as_json_line(self) -> str:
        import json

        return json.dumps(
            {
                "canonical": self.canonical,
                "crossings": self.crossings,
                "closed_components": self.closed_components,
                "vhx": self.vhx,
                "fraction": self.fraction,
                "symmetry": self.symmetry,
                "isotopy_classes": self.isotopy_classes,
                "equivalence_classes": self.equivalence_classes,
            },
            ensure_ascii=False,
        )


_SORT_TRANS = str.maketrans({"-": "~"})  # '-' sorts after digits


def _rep_key(text: str) -> str:
    return text.translate(_SORT_TRANS)


def _orbit_data(c0: Node):
    """(record, image set) for the orbit of an already-canonical tree."""
    images = {g: canonicalize(apply(g, c0)) for g in ALL_TRANSFORMS}
    distinct = set(images.values())
    stab = frozenset(g for g in ALL_TRANSFORMS if images[g] == c0)
    assert len(distinct) * len(stab) == 16
    eq_classes = len(
        {
            frozenset(images[compose(h, g)] for h in EQUIVALENCE_SUBGROUP)
            for g in ALL_TRANSFORMS
        }
    )
    rep = min(distinct, key=lambda tree: _rep_key(emit(tree)))
    crossings, _ = minimize(c0)
    vhx, loops = connectivity(rep)
    record = ClassRecord(
        canonical=emit(rep),
        crossings=crossings,
        closed_components=loops,
        vhx=vhx,
        fraction=frac_str(frac_of(rep)),
        symmetry=symmetry_name(stab),
        isotopy_classes=len(distinct),
        equivalence_classes=eq_classes,
    )
    return record, distinct


def _canon_chunk(trees: list) -> list:
    out = []
    for t in trees:
        try:
            out.append(canonicalize(t))
        except CompositeInputError:
            continue
    return out


def _orbit_chunk(trees: list) -> list:
    return [_orbit_data(t) for t in trees]


def _chunks(it: Iterator, size: int) -> Iterator[list]:
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield block


def classify(max_crossings: int, jobs: int = 1) -> list[ClassRecord]:
    """One record per orbit of prime tangles with minimal crossings <= max.

    Deterministic output order: crossings, closed components, then
    representative text.  ``jobs`` only affects wall-clock time.
    """
    records: list[ClassRecord] = []
    seen: set = set()

    def consume(pairs) -> None:
        for record, distinct in pairs:
            if distinct & seen:
                continue
            seen.update(distinct)
            records.append(record)

    cand = candidates(max_crossings)
    if jobs <= 1:
        for t in cand:
            try:
                c0 = canonicalize(t)
            except CompositeInputError:
                continue
            if c0 in seen:
                continue
            consume([_orbit_data(c0)])
    else:
        with Pool(jobs) as pool:
            uniq: list = []
            seen_c0: set = set()
            for block in pool.imap(_canon_chunk, _chunks(cand, 4096)):
                for c0 in block:
                    if c0 not in seen_c0:
                        seen_c0.add(c0)
                        uniq.append(c0)
            # expand orbits in windows so already-claimed orbit mates are
            # filtered between dispatches (they dominate the unique list)
            idx = 0
            window = max(64, jobs) * 64
            while idx < len(uniq):
                batch = []
                while idx < len(uniq) and len(batch) < window:
                    c0 = uniq[idx]
                    idx += 1
                    if c0 not in seen:
                        batch.append(c0)
                if not batch:
                    continue
                size = max(1, len(batch) // (jobs * 4) + 1)
                for pairs in pool.imap(_orbit_chunk, _chunks(iter(batch), size)):
                    consume(pairs)
    records = [r for r in records if r.crossings <= max_crossings]
    records.sort(
        key=lambda r: (r.crossings, r.closed_components, _rep_key(r.canonical))
    )
    return records


# --- table summaries ----------------------------------------------------------


def orbit_table(records: list[ClassRecord], max_crossings: int):
    """Rows of the orbit-count table: per crossing number, counts by
    closed-component column plus Orbit/Equiv/Isotopy totals."""
    max_closed = max((r.closed_components for r in records), default=0)
    rows = []
    for c in range(0, max_crossings + 1):
        row = [r for r in records if r.crossings == c]
        by_closed = [
            sum(1 for r in row if r.closed_components == k)
            for k in range(0, max_closed + 1)
        ]
        rows.append(
            {
                "crossings": c,
                "by_closed": by_closed,
                "orbits": len(row),
                "equivalence": sum(r.equivalence_classes for r in row),
                "isotopy": sum(r.isotopy_classes for r in row),
            }
        )
    return rows


def symmetry_table(
    records: list[ClassRecord],
    max_crossings: int,
    names: tuple[str, ...],
    closed: Optional[int] = None,
):
    """Counts of orbits by (crossing number, symmetry name)."""
    rows = []
    for c in range(0, max_crossings + 1):
        row = [r for r in records if r.crossings == c]
        if closed is not None:
            row = [r for r in row if r.closed_components == closed]
        rows.append(
            {
                "crossings": c,
                "counts": {
                    name: sum(1 for r in row if r.symmetry == name)
                    for name in names
                },
            }
        )
    return rows
