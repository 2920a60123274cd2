"""Exhaustive enumeration of gluing specs and census tables.

Specs are generated as perfect pairings of all T-ends times all prong
permutations per pair, and classified up to combinatorial isomorphism:
piece relabeling within a kind, the per-piece symmetry groups, matching
reordering, and left/right swaps.  This refines homeomorphism of the glued
polyhedra, so census class counts are reported against expected values
rather than asserted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .gluing import GluingSpec, Matching, SpineError, TEndSlot, matching_parity, Parity
from .groups import (
    AbelianInvariants,
    abelianization,
    presentation_from_complex,
    tietze_simplify,
    todd_coxeter,
    DEFAULT_MAX_COSETS,
)
from .invariants import euler_characteristic, orientability_verdict
from .pieces import PieceKind, PieceSymmetry, TipIndex, piece_symmetries
from .tracer import canonical_word_multiset, trace_boundary

CANONICAL_PIECE_LIMIT = 3

_PERMS3: tuple[tuple[int, int, int], ...] = tuple(itertools.permutations((1, 2, 3)))


class CanonicalizationTooLargeError(SpineError):
    pass


def _pairings(slots: list[TEndSlot]) -> Iterator[list[tuple[TEndSlot, TEndSlot]]]:
    if not slots:
        yield []
        return
    first, rest = slots[0], slots[1:]
    for i, partner in enumerate(rest):
        for tail in _pairings(rest[:i] + rest[i + 1 :]):
            yield [(first, partner)] + tail


def enumerate_gluings(n_vertex_pieces: int) -> Iterator[GluingSpec]:
    """All closed gluings of n vertex pieces, with a disk on every curve.

    For n pieces there are (4n-1)!! pairings of the T-ends and 6 prong maps
    per pair; n=1 yields the classical 3 * 36 = 108 one-vertex specs.
    """
    if n_vertex_pieces < 1:
        raise ValueError("need at least one piece")
    pieces = tuple(
        (f"V{i}", PieceKind.VERTEX) for i in range(1, n_vertex_pieces + 1)
    )
    slots = [
        TEndSlot(name, t) for name, kind in pieces for t in range(1, kind.t_end_count + 1)
    ]
    for pairing in _pairings(slots):
        for perms in itertools.product(_PERMS3, repeat=len(pairing)):
            matchings = tuple(
                Matching(f"e{i + 1}", left, right, perm)
                for i, ((left, right), perm) in enumerate(zip(pairing, perms))
            )
            yield GluingSpec(pieces, matchings, None)


def _transported_matchings(
    spec: GluingSpec,
    new_index: dict[str, int],
    symmetry_by_piece: dict[str, PieceSymmetry],
) -> tuple[tuple[tuple[int, int], tuple[int, int], tuple[int, int, int]], ...]:
    rows = []
    for m in spec.matchings:
        sl, sr = symmetry_by_piece[m.left.piece], symmetry_by_piece[m.right.piece]
        left = (new_index[m.left.piece], sl.t_end_image(m.left.t_end))
        right = (new_index[m.right.piece], sr.t_end_image(m.right.t_end))
        # old left prong k is glued to old right prong perm[k-1]; transport
        # both sides through the symmetries' prong maps
        new_perm = [0, 0, 0]
        for k in (1, 2, 3):
            kl = sl.prong_image(m.left.t_end, k)
            kr = sr.prong_image(m.right.t_end, m.perm[k - 1])
            new_perm[kl - 1] = kr
        perm = tuple(new_perm)
        if right < left:
            inverse = [0, 0, 0]
            for k in (1, 2, 3):
                inverse[perm[k - 1] - 1] = k
            left, right, perm = right, left, tuple(inverse)
        rows.append((left, right, perm))
    rows.sort()
    return tuple(rows)


def _transport_disks(
    spec: GluingSpec,
    transported: GluingSpec,
    new_index: dict[str, int],
    symmetry_by_piece: dict[str, PieceSymmetry],
) -> tuple[int, ...] | None:
    """Map explicit disk curve indices through a symmetry action."""
    if spec.disks is None:
        return None
    source = trace_boundary(spec)
    target = trace_boundary(transported)
    tip_to_curve = {tip: c.index for c in target for tip in c.tips}
    new_names = {name: f"P{new_index[name] + 1}" for name, _ in spec.pieces}
    out = []
    for idx in spec.disks:
        tip = source[idx - 1].tips[0]
        image_tip = symmetry_by_piece[tip.piece].apply(TipIndex(tip.t_end, tip.prong))
        moved = (new_names[tip.piece], image_tip.t_end, image_tip.prong)
        out.append(tip_to_curve[moved])
    return tuple(sorted(out))


def _actions(spec: GluingSpec):
    by_kind: dict[PieceKind, list[str]] = {}
    for name, kind in spec.pieces:
        by_kind.setdefault(kind, []).append(name)
    kinds_sorted = sorted(by_kind, key=lambda k: k.value)
    names_in_order = [name for kind in kinds_sorted for name in by_kind[kind]]
    base_index = {name: i for i, name in enumerate(names_in_order)}

    relabelings = []
    for perms in itertools.product(
        *(itertools.permutations(by_kind[kind]) for kind in kinds_sorted)
    ):
        mapping: dict[str, int] = {}
        for kind, perm in zip(kinds_sorted, perms):
            for src, dst in zip(by_kind[kind], perm):
                mapping[src] = base_index[dst]
        relabelings.append(mapping)

    symmetry_choices = [piece_symmetries(kind) for _, kind in spec.pieces]
    piece_names = [name for name, _ in spec.pieces]
    for relabel in relabelings:
        for combo in itertools.product(*symmetry_choices):
            yield relabel, dict(zip(piece_names, combo))


def canonical_spec(spec: GluingSpec, reflections: bool = True) -> bytes:
    """Least encoding of a spec over its full combinatorial symmetry action.

    With ``reflections=False`` only orientation-preserving piece symmetries
    participate, giving the finer oriented classification.
    """
    if len(spec.pieces) > CANONICAL_PIECE_LIMIT:
        raise CanonicalizationTooLargeError(
            f"canonical form search supports at most {CANONICAL_PIECE_LIMIT} pieces"
        )
    kinds = tuple(sorted((kind.value for _, kind in spec.pieces)))
    best = None
    best_action = None
    for relabel, symmetry_by_piece in _actions(spec):
        if not reflections and any(
            s.orientation_reversing for s in symmetry_by_piece.values()
        ):
            continue
        rows = _transported_matchings(spec, relabel, symmetry_by_piece)
        if best is None or rows < best:
            best = rows
            best_action = (relabel, symmetry_by_piece)
    assert best is not None and best_action is not None

    if spec.disks is None:
        disks_part = "all"
    else:
        transported = _rebuild(spec, *best_action)
        disks_part = repr(_transport_disks(spec, transported, *best_action))
    return repr((kinds, best, disks_part)).encode()


def _rebuild(
    spec: GluingSpec,
    relabel: dict[str, int],
    symmetry_by_piece: dict[str, PieceSymmetry],
) -> GluingSpec:
    """The spec actually produced by one symmetry action (for transport)."""
    names = {name: f"P{relabel[name] + 1}" for name, _ in spec.pieces}
    pieces = tuple(
        sorted(
            ((names[name], kind) for name, kind in spec.pieces),
            key=lambda p: p[0],
        )
    )
    rows = []
    for m in spec.matchings:
        sl, sr = symmetry_by_piece[m.left.piece], symmetry_by_piece[m.right.piece]
        left = TEndSlot(names[m.left.piece], sl.t_end_image(m.left.t_end))
        right = TEndSlot(names[m.right.piece], sr.t_end_image(m.right.t_end))
        new_perm = [0, 0, 0]
        for k in (1, 2, 3):
            kl = sl.prong_image(m.left.t_end, k)
            kr = sr.prong_image(m.right.t_end, m.perm[k - 1])
            new_perm[kl - 1] = kr
        rows.append(Matching(m.name, left, right, tuple(new_perm)))
    return GluingSpec(pieces, tuple(rows), None)


@dataclass(frozen=True)
class CensusClass:
    code: bytes
    size: int
    representative: GluingSpec
    curve_count: int
    chi: int
    embeddable: bool
    witness: int | None
    parities: tuple[str, ...]
    h1: AbelianInvariants | None
    group_order: int | None
    group_limit: int | None


@dataclass(frozen=True)
class CensusResult:
    n_pieces: int
    reflections: bool
    raw_count: int
    classes: tuple[CensusClass, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def embeddable_class_count(self) -> int:
        return sum(1 for c in self.classes if c.embeddable)


def census(
    n_pieces: int,
    reflections: bool = True,
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CensusResult:
    """Group all n-piece gluings by canonical form and analyze one
    representative per class.  Classes appear in first-seen order."""
    reps: dict[bytes, GluingSpec] = {}
    sizes: dict[bytes, int] = {}
    raw = 0
    for spec in enumerate_gluings(n_pieces):
        raw += 1
        code = canonical_spec(spec, reflections=reflections)
        if code not in reps:
            reps[code] = spec
        sizes[code] = sizes.get(code, 0) + 1

    classes = []
    for code, spec in reps.items():
        curves = trace_boundary(spec)
        chi = euler_characteristic(spec, curves)
        verdict = orientability_verdict(spec, curves)
        parities = tuple(
            matching_parity(m.perm).value for m in spec.matchings
        )
        from .gluing import build_skeleton

        skeleton = build_skeleton(spec)
        if skeleton.connected:
            pres = presentation_from_complex(spec, curves)
            h1 = abelianization(pres)
            coset = todd_coxeter(tietze_simplify(pres), max_cosets=max_cosets)
            order, limit = coset.order, coset.limit
        else:
            h1, order, limit = None, None, None
        classes.append(
            CensusClass(
                code=code,
                size=sizes[code],
                representative=spec,
                curve_count=len(curves),
                chi=chi,
                embeddable=verdict.embeddable_orientable,
                witness=verdict.witness,
                parities=parities,
                h1=h1,
                group_order=order,
                group_limit=limit,
            )
        )
    return CensusResult(n_pieces, reflections, raw, tuple(classes))


def relabeled_word_multiset(words) -> tuple:
    """Canonical word multiset additionally minimized over edge renamings.

    Class members name their matchings in enumeration order, so comparing
    multisets across a class must quotient out the edge labels as well.
    """
    names = sorted({name for w in words for name, _ in w})
    fresh = [f"x{i + 1}" for i in range(len(names))]
    best = None
    for images in itertools.permutations(fresh):
        table = dict(zip(names, images))
        renamed = [
            tuple((table[name], exp) for name, exp in w) for w in words
        ]
        cand = canonical_word_multiset(renamed)
        if best is None or cand < best:
            best = cand
    return best if best is not None else ()


def class_invariants_consistent(result: CensusResult) -> list[str]:
    """Re-analyze every member of every class; returns descriptions of any
    intra-class disagreement (empty when the canonicalization is sound)."""
    by_code: dict[bytes, list[GluingSpec]] = {}
    for spec in enumerate_gluings(result.n_pieces):
        code = canonical_spec(spec, reflections=result.reflections)
        by_code.setdefault(code, []).append(spec)
    problems = []
    for cls in result.classes:
        keys = set()
        for spec in by_code[cls.code]:
            curves = trace_boundary(spec)
            pres = presentation_from_complex(spec, curves)
            key = (
                euler_characteristic(spec, curves),
                orientability_verdict(spec, curves).embeddable_orientable,
                tuple(sorted(matching_parity(m.perm).value for m in spec.matchings)),
                abelianization(pres),
                relabeled_word_multiset([c.word for c in curves]),
            )
            keys.add(key)
        if len(keys) > 1:
            problems.append(f"class {cls.code!r} mixes invariants: {sorted(map(str, keys))}")
    return problems
