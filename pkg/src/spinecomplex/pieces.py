"""Local building blocks: the vertex neighborhood and the bar piece.

Both pieces are neighborhoods of a piece of triple line.  The vertex
neighborhood is three 2-cells crossing at a quadruple point, with four
T-ends; the bar is a plain triple-line segment with two T-ends.  Every
T-end is a triod: three prong segments meeting at a center point, and a
piece is described entirely by which prong tips its free frontier arcs
join.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple


class PieceKind(Enum):
    VERTEX = "vertex"
    BAR = "bar"

    @property
    def t_end_count(self) -> int:
        return 4 if self is PieceKind.VERTEX else 2


class TipIndex(NamedTuple):
    t_end: int
    prong: int


PRONGS = (1, 2, 3)


def tips_of(kind: PieceKind) -> tuple[TipIndex, ...]:
    """All prong tips of a piece, in (t_end, prong) order."""
    return tuple(
        TipIndex(t, k) for t in range(1, kind.t_end_count + 1) for k in PRONGS
    )


def _arcs(pairs) -> frozenset[frozenset[TipIndex]]:
    return frozenset(frozenset((TipIndex(*a), TipIndex(*b))) for a, b in pairs)


# Frontier arcs of the vertex neighborhood.  T-ends 1..4 sit at the ends of
# the two crossing triple lines, in cyclic order 1,2,3,4 around the crossing;
# prongs 1 and 2 of each T-end lie in the central sheet, prong 3 in one of
# the two transverse sheets (T-ends 1,3 share one, 2,4 the other).
_VERTEX_ARCS = _arcs(
    [
        ((1, 2), (2, 2)),
        ((2, 1), (3, 1)),
        ((3, 2), (4, 2)),
        ((4, 1), (1, 1)),
        ((1, 3), (3, 3)),
        ((2, 3), (4, 3)),
    ]
)

# The bar's three strips join its two triods end to end; the two strips of
# the flat sheet cross over (prong 1 meets prong 2), the third runs straight.
_BAR_ARCS = _arcs(
    [
        ((1, 1), (2, 2)),
        ((1, 2), (2, 1)),
        ((1, 3), (2, 3)),
    ]
)

# End-to-end strip pairing of the bar: prong a of end 1 continues into
# prong _BAR_STRIP_PAIRING[a] of end 2.
_BAR_STRIP_PAIRING = {1: 2, 2: 1, 3: 3}


def internal_arcs(kind: PieceKind) -> frozenset[frozenset[TipIndex]]:
    """The fixed perfect matching of a piece's tips by its frontier arcs."""
    return _VERTEX_ARCS if kind is PieceKind.VERTEX else _BAR_ARCS


@lru_cache(maxsize=None)
def arc_partner_table(kind: PieceKind) -> dict[TipIndex, TipIndex]:
    table: dict[TipIndex, TipIndex] = {}
    for arc in internal_arcs(kind):
        a, b = sorted(arc)
        table[a] = b
        table[b] = a
    return table


def arc_partner(kind: PieceKind, tip: TipIndex) -> TipIndex:
    return arc_partner_table(kind)[tip]


@dataclass(frozen=True)
class PieceSymmetry:
    """A tip permutation preserving T-end blocks and the arc table.

    ``mapping[i]`` is the image of ``tips_of(kind)[i]``.  A symmetry is
    orientation reversing when its unique extension to the 3-dimensional
    thickening of the piece reverses orientation.
    """

    kind: PieceKind
    mapping: tuple[TipIndex, ...]
    orientation_reversing: bool

    def apply(self, tip: TipIndex) -> TipIndex:
        return self.mapping[_tip_pos(self.kind, tip)]

    def t_end_image(self, t_end: int) -> int:
        return self.apply(TipIndex(t_end, 1)).t_end

    def prong_image(self, t_end: int, prong: int) -> int:
        return self.apply(TipIndex(t_end, prong)).prong

    @property
    def is_identity(self) -> bool:
        return self.mapping == tips_of(self.kind)

    def compose(self, other: "PieceSymmetry") -> "PieceSymmetry":
        """self after other (apply ``other`` first)."""
        if self.kind is not other.kind:
            raise ValueError("cannot compose symmetries of different piece kinds")
        mapping = tuple(self.apply(tip) for tip in other.mapping)
        return PieceSymmetry(
            self.kind,
            mapping,
            self.orientation_reversing != other.orientation_reversing,
        )

    def inverse(self) -> "PieceSymmetry":
        tips = tips_of(self.kind)
        inv = [TipIndex(0, 0)] * len(tips)
        for src, img in zip(tips, self.mapping):
            inv[_tip_pos(self.kind, img)] = src
        return PieceSymmetry(self.kind, tuple(inv), self.orientation_reversing)


@lru_cache(maxsize=None)
def _tip_positions(kind: PieceKind) -> dict[TipIndex, int]:
    return {tip: i for i, tip in enumerate(tips_of(kind))}


def _tip_pos(kind: PieceKind, tip: TipIndex) -> int:
    return _tip_positions(kind)[tip]


def _perm_sign(images: tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if images[i] > images[j]:
                sign = -sign
    return sign


def _reverses_orientation(
    kind: PieceKind, t_end_images: tuple[int, ...], prong_maps
) -> bool:
    if kind is PieceKind.VERTEX:
        # The thickening is a ball; a symmetry acts on the tetrahedral link
        # graph of the quadruple point, so its sign is the S4 parity of the
        # induced T-end permutation.
        return _perm_sign(t_end_images) < 0
    # Bar: determinant splits into the dihedral action on the triod
    # cross-section times -1 when the two ends are exchanged.  Strips are
    # labelled by end-1 prongs.
    pairing = _BAR_STRIP_PAIRING
    end1_map = prong_maps[0]  # images of prongs 1,2,3 of T-end 1
    if t_end_images[0] == 1:
        strip_perm = end1_map
    else:
        strip_perm = tuple(pairing[p] for p in end1_map)
    cross_section_sign = _perm_sign(strip_perm)
    swapped = t_end_images[0] != 1
    det = cross_section_sign * (-1 if swapped else 1)
    return det < 0


@lru_cache(maxsize=None)
def piece_symmetries(kind: PieceKind) -> tuple[PieceSymmetry, ...]:
    """All arc-preserving tip permutations of a piece, by brute force.

    Candidates are every T-end permutation combined with every per-T-end
    prong bijection (4!*6^4 for the vertex piece, 2!*6^2 for the bar); the
    survivors form a group under composition.
    """
    n = kind.t_end_count
    arcs = internal_arcs(kind)
    tips = tips_of(kind)
    prong_perms = list(itertools.permutations(PRONGS))
    found: list[PieceSymmetry] = []
    for t_end_images in itertools.permutations(range(1, n + 1)):
        for prong_maps in itertools.product(prong_perms, repeat=n):
            mapping = tuple(
                TipIndex(t_end_images[t - 1], prong_maps[t - 1][k - 1])
                for (t, k) in tips
            )
            image = {src: img for src, img in zip(tips, mapping)}
            if all(
                frozenset(image[t] for t in arc) in arcs for arc in arcs
            ):
                found.append(
                    PieceSymmetry(
                        kind,
                        mapping,
                        _reverses_orientation(kind, t_end_images, prong_maps),
                    )
                )
    return tuple(found)
