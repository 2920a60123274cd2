import random

import pytest

from spinecomplex import builtin
from spinecomplex.gluing import DisconnectedComplexError, GluingSpec, Matching, TEndSlot
from spinecomplex.groups import (
    AbelianInvariants,
    Presentation,
    abelianization,
    betti_numbers,
    presentation_from_complex,
    smith_normal_form,
    spanning_tree,
    tietze_simplify,
    todd_coxeter,
)
from spinecomplex.pieces import PieceKind
from spinecomplex.tracer import trace_boundary
from spinecomplex.words import parse_word


def relator_set(p):
    return {r for r in p.relators}


def test_presentation_of_ball_51a():
    spec = builtin("ball-5.1a")
    curves = trace_boundary(spec)
    pres = presentation_from_complex(spec, curves)
    assert pres.generators == ("a", "b")
    assert spanning_tree(spec) == ()  # loops only
    assert len(pres.relators) == 2
    simplified = tietze_simplify(pres)
    assert simplified.generators == ()
    assert simplified.relators == ()


def test_presentation_of_example_54_collapses_to_z2():
    spec = builtin("example-5.4")
    curves = trace_boundary(spec)
    assert spanning_tree(spec) == ("a1",)
    pres = presentation_from_complex(spec, curves)
    assert len(pres.relators) == 5  # four disks plus the tree relator
    simplified = tietze_simplify(pres)
    assert len(simplified.generators) == 1
    assert abelianization(simplified) == AbelianInvariants(0, (2,))
    assert todd_coxeter(simplified).order == 2


def test_presentation_of_poincare_spine_shape():
    spec = builtin("poincare-5.3")
    curves = trace_boundary(spec)
    pres = presentation_from_complex(spec, curves)
    assert len(pres.generators) == 10
    assert len(pres.relators) == 6 + 4  # six disks, four tree edges
    assert len(spanning_tree(spec)) == 4


def test_presentation_errors_on_disconnected_spec():
    spec = GluingSpec(
        (("A", PieceKind.VERTEX), ("B", PieceKind.VERTEX)),
        (
            Matching("m1", TEndSlot("A", 1), TEndSlot("A", 2), (1, 2, 3)),
            Matching("m2", TEndSlot("A", 3), TEndSlot("A", 4), (1, 2, 3)),
            Matching("m3", TEndSlot("B", 1), TEndSlot("B", 2), (1, 2, 3)),
            Matching("m4", TEndSlot("B", 3), TEndSlot("B", 4), (1, 2, 3)),
        ),
    )
    with pytest.raises(DisconnectedComplexError):
        presentation_from_complex(spec, trace_boundary(spec))


def test_tietze_trivializes_the_spec_example():
    p = Presentation(("a", "b"), (parse_word("a"), parse_word("a b^-1 a b b")))
    s = tietze_simplify(p)
    assert s.generators == () and s.relators == ()
    assert todd_coxeter(s).order == 1


def test_tietze_keeps_relator_free_generator():
    p = Presentation(("g",), ())
    assert tietze_simplify(p) == p


def test_tietze_preserves_abelianization_on_seeded_presentations():
    rng = random.Random(20240511)
    names = ["a", "b", "c", "d"]
    for _ in range(500):
        n_gens = rng.randint(1, 4)
        gens = tuple(names[:n_gens])
        relators = []
        for _ in range(rng.randint(0, 4)):
            length = rng.randint(1, 6)
            relators.append(
                tuple(
                    (rng.choice(gens), rng.choice((1, -1))) for _ in range(length)
                )
            )
        p = Presentation(gens, tuple(relators))
        s = tietze_simplify(p)
        assert abelianization(p) == abelianization(s)


def test_smith_normal_form_known_cases():
    assert smith_normal_form([[3]]) == [3]
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]
    # 2x2 with determinant -6 and content 1
    assert smith_normal_form([[2, 1], [0, 3]]) == [1, 6]


def test_smith_normal_form_divisibility_and_permutation_invariance():
    rng = random.Random(987)
    for _ in range(200):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        d = smith_normal_form(m)
        for a, b in zip(d, d[1:]):
            assert b % a == 0
        rows_shuffled = m[:]
        rng.shuffle(rows_shuffled)
        transposed_cols = list(range(cols))
        rng.shuffle(transposed_cols)
        permuted = [[row[j] for j in transposed_cols] for row in rows_shuffled]
        assert smith_normal_form(permuted) == d


def test_smith_normal_form_avoids_coefficient_explosion():
    # this matrix made a naive alternating row/column elimination thrash
    # with enormous intermediate entries; it must solve instantly
    import time

    m = [
        [-8, -9, 3, 2, -5],
        [5, 8, -7, 7, -8],
        [9, -1, 2, 6, 8],
        [5, 1, 4, -1, -4],
        [8, 7, 8, 6, 7],
        [2, 6, 6, -8, -3],
    ]
    start = time.monotonic()
    assert smith_normal_form(m) == [1, 1, 1, 1, 1]
    assert time.monotonic() - start < 1.0


def test_smith_normal_form_survives_pivot_growth():
    # entries grow quickly under naive elimination; results stay exact
    m = [
        [2, 4, 4, 0],
        [-6, 6, 12, 6],
        [10, -4, -16, 8],
        [2, 2, 2, 2],
    ]
    d = smith_normal_form(m)
    for a, b in zip(d, d[1:]):
        assert b % a == 0
    product = 1
    for x in d:
        product *= x
    # |det| equals the product of the invariant factors for full rank
    import math

    det = round(
        sum(
            math.prod(m[i][p[i]] for i in range(4)) * sign
            for p, sign in _permutations_with_sign(4)
        )
    )
    assert abs(det) == product


def _permutations_with_sign(n):
    import itertools

    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        yield perm, (-1) ** inversions


def test_abelianization_of_published_presentations():
    spec = builtin("poincare-5.3")
    pres = presentation_from_complex(spec, trace_boundary(spec))
    assert abelianization(pres) == AbelianInvariants(0, ())

    spec = builtin("example-5.4")
    pres = presentation_from_complex(spec, trace_boundary(spec))
    assert abelianization(pres) == AbelianInvariants(0, (2,))

    assert abelianization(
        Presentation(("a",), (parse_word("a a a"),))
    ) == AbelianInvariants(0, (3,))


def test_todd_coxeter_known_orders():
    assert todd_coxeter(Presentation(("a",), (parse_word("a a a"),))).order == 3
    s3 = Presentation(
        ("a", "b"), (parse_word("a a"), parse_word("b b"), parse_word("a b a b a b"))
    )
    assert todd_coxeter(s3).order == 6
    assert todd_coxeter(Presentation((), ())).order == 1
    z35 = Presentation(
        ("a", "b"),
        (parse_word("a b a^-1 b^-1"), parse_word("a a a a a"), parse_word("b b b b b b b")),
    )
    assert todd_coxeter(z35).order == 35


def test_todd_coxeter_budget_exhaustion():
    free = Presentation(("g",), ())
    result = todd_coxeter(free, max_cosets=64)
    assert not result.finite
    assert result.order is None
    assert result.limit == 64


def test_todd_coxeter_rejects_bad_budget():
    with pytest.raises(ValueError):
        todd_coxeter(Presentation((), ()), max_cosets=0)


def test_todd_coxeter_on_published_complexes():
    for name, order in (
        ("poincare-5.3", 120),
        ("example-5.4", 2),
        ("bing-house-5.2", 1),
        ("lens31-3.3odd", 3),
        ("rp3-spine-remark2", 2),
        ("rp2-disk-3.3even", 1),
    ):
        spec = builtin(name)
        pres = presentation_from_complex(spec, trace_boundary(spec))
        assert todd_coxeter(pres).order == order, name
        assert todd_coxeter(tietze_simplify(pres)).order == order, name


def test_empty_presentation_after_simplify_enumerates_to_one():
    spec = builtin("bing-house-5.2")
    pres = presentation_from_complex(spec, trace_boundary(spec))
    simplified = tietze_simplify(pres)
    if not simplified.relators and not simplified.generators:
        assert todd_coxeter(simplified).order == 1


def test_torsion_divides_group_order_and_rank_zero_when_finite():
    for name in (
        "poincare-5.3",
        "example-5.4",
        "lens31-3.3odd",
        "ball-5.1a",
        "s3-spine-5.1b",
    ):
        spec = builtin(name)
        pres = presentation_from_complex(spec, trace_boundary(spec))
        ab = abelianization(pres)
        result = todd_coxeter(pres)
        assert result.finite
        assert ab.rank == 0
        for t in ab.torsion:
            assert result.order % t == 0


def test_betti_numbers_of_published_examples():
    for name, expected in (
        ("poincare-5.3", (1, 0, 0)),
        ("example-5.4", (1, 0, 1)),
        ("s3-spine-5.1b", (1, 0, 1)),
    ):
        spec = builtin(name)
        curves = trace_boundary(spec)
        ab = abelianization(presentation_from_complex(spec, curves))
        b = betti_numbers(spec, ab, curves)
        assert (b.b0, b.b1, b.b2) == expected


def test_coset_action_is_a_permutation_action():
    spec = builtin("example-5.4")
    pres = presentation_from_complex(spec, trace_boundary(spec))
    result = todd_coxeter(pres)
    assert result.action is not None
    for perm in result.action:
        assert sorted(perm) == list(range(result.order))
