"""Euler characteristic, connectivity, and the orientable-embeddability
verdict of a glued complex."""

from __future__ import annotations

from dataclasses import dataclass

from .gluing import GluingSpec, Parity, SpineError, build_skeleton, edge_parities


def _disk_count(spec: GluingSpec, curves) -> int:
    if spec.disks is None:
        return len(curves)
    for idx in spec.disks:
        if not 1 <= idx <= len(curves):
            raise SpineError(
                f"disk index {idx} out of range: spec traces {len(curves)} curves"
            )
    return len(spec.disks)


def euler_characteristic(spec: GluingSpec, curves) -> int:
    """chi = #pieces - #matchings + #attached disks."""
    return len(spec.pieces) - len(spec.matchings) + _disk_count(spec, curves)


@dataclass(frozen=True)
class ComplexInvariants:
    chi: int
    components: int
    curve_count: int
    disk_count: int


def complex_invariants(spec: GluingSpec, curves) -> ComplexInvariants:
    skeleton = build_skeleton(spec)
    return ComplexInvariants(
        chi=euler_characteristic(spec, curves),
        components=skeleton.component_count,
        curve_count=len(curves),
        disk_count=_disk_count(spec, curves),
    )


@dataclass(frozen=True)
class EmbeddabilityVerdict:
    """Parity criterion for embeddability into an orientable 3-manifold.

    The complex embeds iff every frontier curve crosses even skeleton edges
    an even number of times; ``witness`` is the 1-based index of the first
    curve violating this, present exactly when not embeddable.
    """

    embeddable_orientable: bool
    witness: int | None = None


def even_letter_count(word, parities: dict[str, Parity]) -> int:
    return sum(1 for name, _ in word if parities[name] is Parity.EVEN)


def orientability_verdict(spec: GluingSpec, curves) -> EmbeddabilityVerdict:
    parities = edge_parities(spec)
    for curve in curves:
        if even_letter_count(curve.word, parities) % 2:
            return EmbeddabilityVerdict(False, curve.index)
    return EmbeddabilityVerdict(True, None)
