"""Full analysis pipeline and its JSON/text report.

The pipeline runs skeleton, trace, invariants, presentation, Tietze
simplification, abelianization and a bounded coset enumeration, and
assembles a schema-stable report.  Without the opt-in timings block the
JSON serialization is deterministic byte for byte.
"""

from __future__ import annotations

import json
import os
import time

from .gluing import GluingSpec, SpineError, build_skeleton, validate
from .groups import (
    DEFAULT_MAX_COSETS,
    abelianization,
    betti_numbers,
    presentation_from_complex,
    tietze_simplify,
    todd_coxeter,
)
from .invariants import (
    complex_invariants,
    even_letter_count,
    orientability_verdict,
)
from .gluing import edge_parities
from .textio import print_spec
from .tracer import canonical_word, canonical_word_multiset, trace_boundary
from .words import format_word

ENV_MAX_COSETS = "SPINE_MAX_COSETS"


class AnalysisError(SpineError):
    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"analysis failed at stage {stage!r}: {cause}")


def resolve_max_cosets(cli_value: int | None = None) -> int:
    if cli_value is not None:
        return cli_value
    env = os.environ.get(ENV_MAX_COSETS)
    if env:
        return int(env)
    return DEFAULT_MAX_COSETS


def analyze(
    spec: GluingSpec,
    name: str | None = None,
    max_cosets: int | None = None,
    with_timings: bool = False,
) -> dict:
    """Run the whole pipeline on a validated spec and collect the report."""
    budget = resolve_max_cosets(max_cosets)
    timings: dict[str, float] = {}

    def staged(stage: str, fn):
        start = time.monotonic()
        try:
            result = fn()
        except SpineError as exc:
            raise AnalysisError(stage, exc) from exc
        timings[stage] = time.monotonic() - start
        return result

    errors = validate(spec)
    if errors:
        raise AnalysisError(
            "validate",
            SpineError("; ".join(f"{e.code}({e.subject}): {e.message}" for e in errors)),
        )

    skeleton = staged("skeleton", lambda: build_skeleton(spec))
    curves = staged("trace", lambda: trace_boundary(spec))
    inv = staged("invariants", lambda: complex_invariants(spec, curves))
    verdict = staged("verdict", lambda: orientability_verdict(spec, curves))
    presentation = staged("presentation", lambda: presentation_from_complex(spec, curves))
    simplified = staged("simplify", lambda: tietze_simplify(presentation))
    abelian = staged("abelianize", lambda: abelianization(presentation))
    coset = staged("cosets", lambda: todd_coxeter(simplified, max_cosets=budget))
    betti = staged("betti", lambda: betti_numbers(spec, abelian, curves))
    canonical = staged(
        "canonicalize", lambda: canonical_word_multiset([c.word for c in curves])
    )

    parities = edge_parities(spec)
    report = {
        "spec": {
            "name": name,
            "text": print_spec(spec),
            "pieces": len(spec.pieces),
            "matchings": len(spec.matchings),
            "disk_policy": "all" if spec.disks is None else list(spec.disks),
        },
        "skeleton": {
            "nodes": [
                {"name": n, "kind": spec.kind_of(n).value, "degree": skeleton.degree[n]}
                for n in skeleton.nodes
            ],
            "edges": [
                {
                    "name": e.name,
                    "left": str(m.left),
                    "right": str(m.right),
                    "parity": e.parity.value,
                }
                for e, m in zip(skeleton.edges, spec.matchings)
            ],
            "connected": skeleton.connected,
            "components": skeleton.component_count,
        },
        "curves": [
            {
                "index": c.index,
                "tips": [str(t) for t in c.tips],
                "word": format_word(c.word),
                "canonical_word": format_word(canonical_word(c.word)),
                "length": len(c.word),
                "even_letters": even_letter_count(c.word, parities),
            }
            for c in curves
        ],
        "canonical_word_multiset": [format_word(w) for w in canonical],
        "chi": inv.chi,
        "curve_count": inv.curve_count,
        "disk_count": inv.disk_count,
        "betti": {"b0": betti.b0, "b1": betti.b1, "b2": betti.b2},
        "verdict": {
            "embeddable_orientable": verdict.embeddable_orientable,
            "witness": verdict.witness,
        },
        "presentation": {
            "generators": list(presentation.generators),
            "relators": [format_word(r) for r in presentation.relators],
        },
        "simplified_presentation": {
            "generators": list(simplified.generators),
            "relators": [format_word(r) for r in simplified.relators],
        },
        "abelian_invariants": {"rank": abelian.rank, "torsion": list(abelian.torsion)},
        "coset_enumeration": {
            "max_cosets": budget,
            "outcome": "finite" if coset.finite else "limit_exceeded",
            "order": coset.order,
            "limit": coset.limit,
        },
    }
    if with_timings:
        report["timings"] = {k: round(v, 6) for k, v in timings.items()}
    return report


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def render_text(report: dict) -> str:
    lines = []
    name = report["spec"]["name"]
    lines.append(f"spec: {name or '<file>'}")
    lines.append(
        f"pieces: {report['spec']['pieces']}   matchings: {report['spec']['matchings']}"
        f"   disks: {report['disk_count']}"
    )
    sk = report["skeleton"]
    lines.append(
        f"skeleton: connected={sk['connected']} components={sk['components']}"
    )
    for e in sk["edges"]:
        lines.append(f"  edge {e['name']}: {e['left']} ~ {e['right']}  [{e['parity']}]")
    lines.append(f"boundary curves: {report['curve_count']}")
    for c in report["curves"]:
        lines.append(
            f"  {c['index']}: {c['word']}   (length {c['length']}, even letters {c['even_letters']})"
        )
    lines.append(f"chi: {report['chi']}")
    b = report["betti"]
    lines.append(f"betti: b0={b['b0']} b1={b['b1']} b2={b['b2']}")
    v = report["verdict"]
    if v["embeddable_orientable"]:
        lines.append("verdict: embeddable in an orientable 3-manifold")
    else:
        lines.append(
            f"verdict: NOT embeddable (witness curve {v['witness']})"
        )
    ab = report["abelian_invariants"]
    lines.append(f"H1: rank {ab['rank']}, torsion {ab['torsion']}")
    ce = report["coset_enumeration"]
    if ce["outcome"] == "finite":
        lines.append(f"fundamental group order: {ce['order']}")
    else:
        lines.append(f"coset enumeration exceeded {ce['limit']} cosets")
    sp = report["simplified_presentation"]
    rel = ", ".join(sp["relators"]) or "-"
    gens = ", ".join(sp["generators"]) or "-"
    lines.append(f"simplified presentation: <{gens} | {rel}>")
    if "timings" in report:
        total = sum(report["timings"].values())
        lines.append(f"timings: {total:.3f}s total {report['timings']}")
    return "\n".join(lines) + "\n"
