"""Gluing specifications: pieces plus T-end matchings plus a disk policy.

A spec is valid when every T-end of every piece is consumed by exactly one
matching; the intrinsic 1-skeleton is then the graph with one node per
piece and one parity-labelled edge per matching.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from .pieces import PieceKind


class SpineError(Exception):
    """Base class for errors raised by this package."""


class InvalidSpecError(SpineError):
    def __init__(self, errors: list["SpecError"]):
        self.errors = errors
        summary = "; ".join(f"{e.code}({e.subject}): {e.message}" for e in errors)
        super().__init__(f"invalid gluing spec: {summary}")


class DisconnectedComplexError(SpineError):
    pass


class TEndSlot(NamedTuple):
    piece: str
    t_end: int

    def __str__(self) -> str:
        return f"{self.piece}.{self.t_end}"


Perm3 = tuple[int, int, int]


@dataclass(frozen=True)
class Matching:
    """Identification of two T-ends; left prong k glues to right prong perm[k-1]."""

    name: str
    left: TEndSlot
    right: TEndSlot
    perm: Perm3


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


def matching_parity(perm: Perm3) -> Parity:
    """Sign of the prong permutation: identity and 3-cycles are even."""
    inversions = sum(
        1
        for i in range(3)
        for j in range(i + 1, 3)
        if perm[i] > perm[j]
    )
    return Parity.EVEN if inversions % 2 == 0 else Parity.ODD


@dataclass(frozen=True)
class GluingSpec:
    """Declarative description of a closed standard complex.

    ``disks`` is ``None`` for a disk on every boundary curve, or an explicit
    tuple of 1-based curve indices (in the tracer's deterministic order).
    """

    pieces: tuple[tuple[str, PieceKind], ...]
    matchings: tuple[Matching, ...]
    disks: tuple[int, ...] | None = None

    @property
    def piece_kinds(self) -> dict[str, PieceKind]:
        return dict(self.pieces)

    def kind_of(self, piece: str) -> PieceKind:
        return self.piece_kinds[piece]


@dataclass(frozen=True)
class SpecError:
    code: str
    subject: str
    message: str


def _slots_of(spec: GluingSpec):
    for m in spec.matchings:
        yield m, "left", m.left
        yield m, "right", m.right


def validate(spec: GluingSpec) -> list[SpecError]:
    """Check every spec invariant; returns one record per violation."""
    errors: list[SpecError] = []
    kinds: dict[str, PieceKind] = {}
    for name, kind in spec.pieces:
        if name in kinds:
            errors.append(SpecError("DuplicateName", name, "piece declared twice"))
        kinds[name] = kind

    seen_matchings: set[str] = set()
    slot_users: dict[TEndSlot, list[str]] = {}
    for m in spec.matchings:
        if m.name in seen_matchings:
            errors.append(SpecError("DuplicateName", m.name, "matching declared twice"))
        seen_matchings.add(m.name)
        if sorted(m.perm) != [1, 2, 3]:
            errors.append(
                SpecError("InvalidPerm", m.name, f"prong map {m.perm} is not a bijection of 1..3")
            )
        if m.left == m.right:
            errors.append(
                SpecError("SelfMatchedTEnd", m.name, f"{m.left} is matched to itself")
            )
        for side, slot in (("left", m.left), ("right", m.right)):
            if slot.piece not in kinds:
                errors.append(
                    SpecError("UnknownPiece", m.name, f"{side} slot names unknown piece {slot.piece!r}")
                )
                continue
            if not 1 <= slot.t_end <= kinds[slot.piece].t_end_count:
                errors.append(
                    SpecError(
                        "InvalidTEnd",
                        m.name,
                        f"{slot} is out of range for a {kinds[slot.piece].value} piece",
                    )
                )
                continue
            slot_users.setdefault(slot, []).append(m.name)

    for slot, users in sorted(slot_users.items()):
        if len(users) > 1:
            errors.append(
                SpecError("DoublyMatchedTEnd", str(slot), f"matched by {', '.join(users)}")
            )
    for name, kind in spec.pieces:
        for t in range(1, kind.t_end_count + 1):
            slot = TEndSlot(name, t)
            if slot not in slot_users:
                errors.append(SpecError("UnmatchedTEnd", str(slot), "no matching uses this T-end"))

    if spec.disks is not None:
        for idx in spec.disks:
            if idx < 1:
                errors.append(
                    SpecError("InvalidDisk", str(idx), "curve indices are 1-based")
                )
    return errors


def validate_or_raise(spec: GluingSpec) -> None:
    errors = validate(spec)
    if errors:
        raise InvalidSpecError(errors)


@dataclass(frozen=True)
class SkeletonEdge:
    name: str
    left_piece: str
    right_piece: str
    parity: Parity


@dataclass(frozen=True)
class SkeletonGraph:
    nodes: tuple[str, ...]
    edges: tuple[SkeletonEdge, ...]
    degree: dict[str, int] = field(compare=False)
    component_of: dict[str, str] = field(compare=False)

    @property
    def connected(self) -> bool:
        return self.component_count <= 1

    @property
    def component_count(self) -> int:
        return len(set(self.component_of.values()))

    def parity_of(self, edge_name: str) -> Parity:
        for e in self.edges:
            if e.name == edge_name:
                return e.parity
        raise KeyError(edge_name)


def build_skeleton(spec: GluingSpec) -> SkeletonGraph:
    """Intrinsic 1-skeleton: one node per piece, one oriented edge per matching."""
    validate_or_raise(spec)
    nodes = tuple(name for name, _ in spec.pieces)
    degree = {name: 0 for name in nodes}
    parent = {name: name for name in nodes}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for m in spec.matchings:
        edges.append(
            SkeletonEdge(m.name, m.left.piece, m.right.piece, matching_parity(m.perm))
        )
        degree[m.left.piece] += 1
        degree[m.right.piece] += 1
        ra, rb = find(m.left.piece), find(m.right.piece)
        if ra != rb:
            parent[rb] = ra
    component_of = {name: find(name) for name in nodes}
    return SkeletonGraph(nodes, tuple(edges), degree, component_of)


def edge_parities(spec: GluingSpec) -> dict[str, Parity]:
    return {m.name: matching_parity(m.perm) for m in spec.matchings}
