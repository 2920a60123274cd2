"""Finite covering complexes from a closed coset table.

Pieces, matchings and disks of the base are replicated once per coset;
a matching lifts at coset c to join piece#c on its left side to
piece#(c . action(edge)) on its right, with the same prong map.  Because
generators are taken after spanning-tree collapse, relator words (disk
boundaries) act trivially, so every lifted disk closes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gluing import GluingSpec, Matching, TEndSlot, validate_or_raise
from .groups import (
    CosetResult,
    CosetTableNotClosedError,
    DEFAULT_MAX_COSETS,
    presentation_from_complex,
    todd_coxeter,
)
from .invariants import euler_characteristic, orientability_verdict
from .tracer import BoundaryCurve, GlobalTip, trace_boundary
from .words import Word, cyclic_canonical


def _coset_name(base: str, c: int) -> str:
    return f"{base}#{c + 1}"


def lift_curve_word(curve: BoundaryCurve, action: dict[str, tuple[int, ...]],
                    start_coset: int) -> tuple[Word, int]:
    """Word of the lift of a boundary curve starting at a given coset.

    Returns the lifted word (over coset-labelled edge names) and the coset
    reached after one traversal of the base curve (equal to the start coset
    exactly when the lift closes up).
    """
    inverse = {
        name: {img: i for i, img in enumerate(perm)} for name, perm in action.items()
    }
    c = start_coset
    lifted = []
    for name, exp in curve.word:
        if exp > 0:
            lifted.append((f"{name}#{c + 1}", 1))
            c = action[name][c]
        else:
            d = inverse[name][c]
            lifted.append((f"{name}#{d + 1}", -1))
            c = d
    return tuple(lifted), c


@dataclass(frozen=True)
class Cover:
    base: GluingSpec
    spec: GluingSpec
    index: int
    lifted_disk_words: tuple[Word, ...]
    universal: bool


def build_cover(base: GluingSpec, coset: CosetResult, universal: bool = False) -> Cover:
    """Covering complex from a closed coset table over the base's edges."""
    if not coset.finite or coset.action is None:
        raise CosetTableNotClosedError(
            f"coset table did not close (budget {coset.limit})"
        )
    validate_or_raise(base)
    index = coset.order
    assert index is not None
    action = {
        m.name: coset.action[i] for i, m in enumerate(base.matchings)
    }

    pieces = tuple(
        (_coset_name(name, c), kind)
        for name, kind in base.pieces
        for c in range(index)
    )
    matchings = []
    for m in base.matchings:
        for c in range(index):
            matchings.append(
                Matching(
                    _coset_name(m.name, c),
                    TEndSlot(_coset_name(m.left.piece, c), m.left.t_end),
                    TEndSlot(_coset_name(m.right.piece, action[m.name][c]), m.right.t_end),
                    m.perm,
                )
            )

    base_curves = trace_boundary(base)
    by_index = {c.index: c for c in base_curves}
    disk_indices = (
        tuple(c.index for c in base_curves) if base.disks is None else base.disks
    )
    lifted_words = []
    lifted_start_tips = []
    for idx in disk_indices:
        curve = by_index[idx]
        for c in range(index):
            word, end = lift_curve_word(curve, action, c)
            if end != c:
                raise CosetTableNotClosedError(
                    f"disk word on curve {idx} does not act trivially on cosets"
                )
            lifted_words.append(word)
            tip = curve.tips[0]
            lifted_start_tips.append(
                GlobalTip(_coset_name(tip.piece, c), tip.t_end, tip.prong)
            )

    cover_spec = GluingSpec(pieces, tuple(matchings), None)
    cover_curves = trace_boundary(cover_spec)
    tip_to_curve = {
        tip: curve.index for curve in cover_curves for tip in curve.tips
    }
    lifted_indices = sorted(tip_to_curve[tip] for tip in lifted_start_tips)
    if lifted_indices == [c.index for c in cover_curves]:
        disks = None
    else:
        disks = tuple(lifted_indices)
    cover_spec = GluingSpec(pieces, tuple(matchings), disks)
    return Cover(base, cover_spec, index, tuple(lifted_words), universal)


def build_universal_cover(
    base: GluingSpec, max_cosets: int = DEFAULT_MAX_COSETS
) -> Cover:
    """Cover associated to the trivial subgroup of the complex's group."""
    curves = trace_boundary(base)
    presentation = presentation_from_complex(base, curves)
    result = todd_coxeter(presentation, max_cosets=max_cosets)
    if not result.finite:
        raise CosetTableNotClosedError(
            f"coset enumeration hit the budget of {max_cosets}; "
            "the fundamental group may be infinite"
        )
    return build_cover(base, result, universal=True)


@dataclass(frozen=True)
class CoverReport:
    index: int
    pieces: int
    matchings: int
    disks: int
    curve_count: int
    chi: int
    embeddable_orientable: bool
    witness: int | None
    group_order: int | None
    coset_limit: int | None
    lift_trace_consistent: bool


def verify_cover(cover: Cover, max_cosets: int = DEFAULT_MAX_COSETS) -> CoverReport:
    """Re-analyze a cover and cross-check lifted disks against a fresh trace."""
    spec = cover.spec
    curves = trace_boundary(spec)
    chi = euler_characteristic(spec, curves)
    verdict = orientability_verdict(spec, curves)
    presentation = presentation_from_complex(spec, curves)
    from .groups import tietze_simplify

    result = todd_coxeter(tietze_simplify(presentation), max_cosets=max_cosets)

    disk_indices = (
        tuple(c.index for c in curves) if spec.disks is None else spec.disks
    )
    traced = sorted(
        cyclic_canonical(curves[i - 1].word) for i in disk_indices
    )
    lifted = sorted(cyclic_canonical(w) for w in cover.lifted_disk_words)
    consistent = traced == lifted

    if cover.universal and result.finite and result.order != 1:
        raise CosetTableNotClosedError(
            f"universal cover has group order {result.order}, expected 1"
        )
    return CoverReport(
        index=cover.index,
        pieces=len(spec.pieces),
        matchings=len(spec.matchings),
        disks=len(disk_indices),
        curve_count=len(curves),
        chi=chi,
        embeddable_orientable=verdict.embeddable_orientable,
        witness=verdict.witness,
        group_order=result.order,
        coset_limit=result.limit,
        lift_trace_consistent=consistent,
    )
