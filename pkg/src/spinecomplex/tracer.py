"""Trace the frontier curves of the regular neighborhood of the skeleton.

Inside one piece the frontier runs along the fixed internal arcs between
prong tips; at a matched T-end it crosses to the identified tip of the
partner piece.  Alternating the two steps partitions all tips into closed
curves; each gluing crossing contributes one signed letter (positive when
crossing from the matching's left slot to its right slot), which reads off
the curve's homotopy class as a word in the oriented skeleton edges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .gluing import GluingSpec, Matching, SpineError, validate_or_raise
from .pieces import TipIndex, arc_partner, tips_of
from .words import (
    Word,
    invert_word,
    letter_sort_key,
    rotations,
    word_sort_key,
)

MAX_FLIP_ALPHABET = 20


class AlphabetTooLargeError(SpineError):
    pass


class GlobalTip(NamedTuple):
    piece: str
    t_end: int
    prong: int

    def __str__(self) -> str:
        return f"{self.piece}.{self.t_end}.{self.prong}"


class EdgeLetter(NamedTuple):
    edge: str
    exp: int


@dataclass(frozen=True)
class BoundaryCurve:
    """A frontier curve: cyclic tip sequence plus its word in oriented edges.

    ``index`` is 1-based, in the deterministic emission order; ``tips`` has
    twice the length of ``word`` (arc step, then crossing, repeated).
    """

    index: int
    tips: tuple[GlobalTip, ...]
    word: tuple[EdgeLetter, ...]


def _crossing_map(spec: GluingSpec) -> dict[GlobalTip, tuple[GlobalTip, Matching, int]]:
    """tip -> (identified tip, matching, exponent when crossing from tip)."""
    out: dict[GlobalTip, tuple[GlobalTip, Matching, int]] = {}
    for m in spec.matchings:
        for k in (1, 2, 3):
            left = GlobalTip(m.left.piece, m.left.t_end, k)
            right = GlobalTip(m.right.piece, m.right.t_end, m.perm[k - 1])
            out[left] = (right, m, +1)
            out[right] = (left, m, -1)
    return out


def trace_boundary(spec: GluingSpec) -> tuple[BoundaryCurve, ...]:
    """Partition all global tips into frontier curves, deterministically.

    Tips are ordered by (piece declaration index, t_end, prong); each curve
    starts at its least unvisited tip with the arc step first, and curves
    are emitted in order of their least tip.
    """
    validate_or_raise(spec)
    piece_order = {name: i for i, (name, _) in enumerate(spec.pieces)}
    kinds = spec.piece_kinds
    all_tips = [
        GlobalTip(name, t, k)
        for name, kind in spec.pieces
        for (t, k) in tips_of(kind)
    ]
    all_tips.sort(key=lambda tip: (piece_order[tip.piece], tip.t_end, tip.prong))
    crossings = _crossing_map(spec)

    visited: set[GlobalTip] = set()
    curves: list[BoundaryCurve] = []
    for start in all_tips:
        if start in visited:
            continue
        tips: list[GlobalTip] = []
        word: list[EdgeLetter] = []
        tip = start
        while True:
            tips.append(tip)
            visited.add(tip)
            partner = arc_partner(kinds[tip.piece], TipIndex(tip.t_end, tip.prong))
            tip = GlobalTip(tip.piece, partner.t_end, partner.prong)
            tips.append(tip)
            visited.add(tip)
            tip, matching, exp = crossings[tip]
            word.append(EdgeLetter(matching.name, exp))
            if tip == start:
                break
        curves.append(BoundaryCurve(len(curves) + 1, tuple(tips), tuple(word)))
    return tuple(curves)


def _flip_word(word: Word, flipped: frozenset[str]) -> Word:
    return tuple(
        (name, -exp if name in flipped else exp) for name, exp in word
    )


def _rotation_min(word: Word, with_inversion: bool = True) -> Word:
    candidates = [word, invert_word(word)] if with_inversion else [word]
    best: Word | None = None
    for w in candidates:
        for rot in rotations(w):
            if best is None or word_sort_key(rot) < word_sort_key(best):
                best = rot
    assert best is not None
    return best


def _check_alphabet(names: set[str]) -> tuple[str, ...]:
    if len(names) > MAX_FLIP_ALPHABET:
        raise AlphabetTooLargeError(
            f"{len(names)} edges exceed the orientation-flip search bound "
            f"of {MAX_FLIP_ALPHABET}"
        )
    return tuple(sorted(names))


def canonical_word(word: Sequence[tuple[str, int]]) -> Word:
    """Least form of a single word over rotations, inversion and edge flips."""
    word = tuple(word)
    names = _check_alphabet({name for name, _ in word})
    best: Word | None = None
    for bits in itertools.product((False, True), repeat=len(names)):
        flipped = frozenset(n for n, b in zip(names, bits) if b)
        cand = _rotation_min(_flip_word(word, flipped))
        if best is None or word_sort_key(cand) < word_sort_key(best):
            best = cand
    assert best is not None
    return best


def canonical_word_multiset(
    words: Sequence[Sequence[tuple[str, int]]],
) -> tuple[Word, ...]:
    """Canonical multiset of cyclic words under a single global flip choice.

    Every orientation flip applies to all words simultaneously; rotation and
    inversion remain per-word.  The result is the least sorted tuple.
    """
    words = [tuple(w) for w in words]
    names = _check_alphabet({name for w in words for name, _ in w})
    best: tuple[Word, ...] | None = None
    for bits in itertools.product((False, True), repeat=len(names)):
        flipped = frozenset(n for n, b in zip(names, bits) if b)
        cand = tuple(
            sorted(
                (_rotation_min(_flip_word(w, flipped)) for w in words),
                key=word_sort_key,
            )
        )
        key = tuple(word_sort_key(w) for w in cand)
        if best is None or key < tuple(word_sort_key(w) for w in best):
            best = cand
    if best is None:
        return ()
    return best


def words_equivalent(
    a: Sequence[Sequence[tuple[str, int]]],
    b: Sequence[Sequence[tuple[str, int]]],
) -> bool:
    """Whether two curve families have the same canonical word multiset."""
    return canonical_word_multiset(a) == canonical_word_multiset(b)
