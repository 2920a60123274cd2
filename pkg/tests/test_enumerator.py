import itertools
import random

import pytest

from spinecomplex.enumerator import (
    CanonicalizationTooLargeError,
    canonical_spec,
    census,
    class_invariants_consistent,
    enumerate_gluings,
    relabeled_word_multiset,
    _rebuild,
)
from spinecomplex.gluing import GluingSpec, Matching, TEndSlot, validate
from spinecomplex.pieces import PieceKind, piece_symmetries
from spinecomplex.tracer import trace_boundary


def test_one_vertex_enumeration_has_108_specs():
    specs = list(enumerate_gluings(1))
    assert len(specs) == 108
    # three pairings of four T-ends times 36 permutation choices
    pairings = {
        tuple(sorted((m.left.t_end, m.right.t_end) for m in s.matchings))
        for s in specs
    }
    assert len(pairings) == 3


def test_every_enumerated_spec_validates_with_two_loops():
    for spec in enumerate_gluings(1):
        assert validate(spec) == []
        assert len(spec.matchings) == 2
        assert len(spec.pieces) == 1
        assert spec.disks is None


def test_enumeration_is_duplicate_free():
    seen = set()
    for spec in enumerate_gluings(1):
        key = tuple(
            (m.left, m.right, m.perm) for m in spec.matchings
        )
        assert key not in seen
        seen.add(key)


def test_two_vertex_enumeration_count():
    # 7!! = 105 pairings of eight T-ends, 6^4 permutation choices
    count = sum(1 for _ in enumerate_gluings(2))
    assert count == 105 * 6**4 == 136080


def test_canonical_code_invariant_under_symmetry_transport():
    rng = random.Random(42)
    specs = list(enumerate_gluings(1))
    syms = piece_symmetries(PieceKind.VERTEX)
    for _ in range(40):
        spec = rng.choice(specs)
        sym = rng.choice(syms)
        moved = _rebuild(spec, {"V1": 0}, {"V1": sym})
        assert canonical_spec(spec) == canonical_spec(moved)


def test_canonical_code_invariant_under_matching_swap_and_reorder():
    spec = next(enumerate_gluings(1))
    a, b = spec.matchings
    reordered = GluingSpec(spec.pieces, (b, a), None)
    assert canonical_spec(spec) == canonical_spec(reordered)

    inverse = [0, 0, 0]
    for k in (1, 2, 3):
        inverse[a.perm[k - 1] - 1] = k
    swapped = GluingSpec(
        spec.pieces,
        (Matching(a.name, a.right, a.left, tuple(inverse)), b),
        None,
    )
    assert canonical_spec(spec) == canonical_spec(swapped)


def test_canonical_code_is_idempotent_and_deterministic():
    spec = next(enumerate_gluings(1))
    assert canonical_spec(spec) == canonical_spec(spec)


def test_canonical_code_respects_piece_relabeling():
    base = GluingSpec(
        (("A", PieceKind.VERTEX), ("B", PieceKind.VERTEX)),
        (
            Matching("m1", TEndSlot("A", 1), TEndSlot("B", 1), (1, 2, 3)),
            Matching("m2", TEndSlot("A", 2), TEndSlot("B", 2), (2, 1, 3)),
            Matching("m3", TEndSlot("A", 3), TEndSlot("B", 3), (1, 3, 2)),
            Matching("m4", TEndSlot("A", 4), TEndSlot("B", 4), (3, 2, 1)),
        ),
    )
    swapped = GluingSpec(
        base.pieces,
        tuple(
            Matching(m.name, TEndSlot("B" if m.left.piece == "A" else "A", m.left.t_end),
                     TEndSlot("B" if m.right.piece == "A" else "A", m.right.t_end), m.perm)
            for m in base.matchings
        ),
        None,
    )
    assert canonical_spec(base) == canonical_spec(swapped)


def test_canonical_size_limit():
    pieces = tuple((f"V{i}", PieceKind.VERTEX) for i in range(4))
    matchings = []
    n = 0
    for i in range(0, 4, 2):
        for t in (1, 2, 3, 4):
            n += 1
            matchings.append(
                Matching(f"m{n}", TEndSlot(f"V{i}", t), TEndSlot(f"V{i+1}", t), (1, 2, 3))
            )
    spec = GluingSpec(pieces, tuple(matchings), None)
    with pytest.raises(CanonicalizationTooLargeError):
        canonical_spec(spec)


def test_census_n1_counts_and_class_structure():
    result = census(1, reflections=True)
    assert result.raw_count == 108
    assert sum(c.size for c in result.classes) == 108
    # classes collect complete invariant rows
    for cls in result.classes:
        assert cls.chi == 1 - 2 + cls.curve_count
        assert cls.h1 is not None
        assert (cls.group_order is None) == (cls.group_limit is not None)


def test_census_reports_both_reflection_modes():
    with_reflections = census(1, reflections=True)
    without = census(1, reflections=False)
    # dropping reflections can only refine the classification
    assert without.class_count >= with_reflections.class_count
    assert without.raw_count == with_reflections.raw_count == 108


def test_census_class_invariants_are_constant():
    result = census(1, reflections=True)
    assert class_invariants_consistent(result) == []


def test_census_classes_contain_the_three_named_one_vertex_examples():
    from spinecomplex import builtin

    result = census(1, reflections=True)
    codes = {cls.code for cls in result.classes}
    for name in ("ball-5.1a", "s3-spine-5.1b", "rp2-two-disks-5.1c"):
        spec = builtin(name)
        normalized = GluingSpec(
            (("V1", PieceKind.VERTEX),),
            tuple(
                Matching(m.name, TEndSlot("V1", m.left.t_end), TEndSlot("V1", m.right.t_end), m.perm)
                for m in spec.matchings
            ),
            None,
        )
        assert canonical_spec(normalized) in codes


def test_relabeled_word_multiset_quotients_edge_names():
    a = [(("e1", 1), ("e2", -1)), (("e1", 1),)]
    b = [(("e2", 1), ("e1", -1)), (("e2", 1),)]
    assert relabeled_word_multiset(a) == relabeled_word_multiset(b)


def test_random_n2_specs_conserve_tips_and_lengths():
    rng = random.Random(7)
    pieces = (("V1", PieceKind.VERTEX), ("V2", PieceKind.VERTEX))
    slots = [TEndSlot(p, t) for p, _ in pieces for t in (1, 2, 3, 4)]
    perms = list(itertools.permutations((1, 2, 3)))
    for _ in range(250):
        pool = slots[:]
        rng.shuffle(pool)
        matchings = tuple(
            Matching(f"e{i+1}", *sorted((pool[2 * i], pool[2 * i + 1])), rng.choice(perms))
            for i in range(4)
        )
        spec = GluingSpec(pieces, matchings, None)
        assert validate(spec) == []
        curves = trace_boundary(spec)
        tips = [t for c in curves for t in c.tips]
        assert len(tips) == 24 and len(set(tips)) == 24
        assert sum(len(c.word) for c in curves) == 12
