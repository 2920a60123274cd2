import pytest

from spinecomplex import builtin
from spinecomplex.covers import (
    build_cover,
    build_universal_cover,
    lift_curve_word,
    verify_cover,
)
from spinecomplex.gluing import validate
from spinecomplex.groups import (
    CosetResult,
    CosetTableNotClosedError,
    presentation_from_complex,
    todd_coxeter,
)
from spinecomplex.invariants import euler_characteristic
from spinecomplex.tracer import trace_boundary


def test_universal_cover_of_example_54_counts():
    cover = build_universal_cover(builtin("example-5.4"))
    assert cover.index == 2
    assert len(cover.spec.pieces) == 4
    assert len(cover.spec.matchings) == 8
    assert len(cover.lifted_disk_words) == 8
    curves = trace_boundary(cover.spec)
    assert len(curves) == 8
    assert euler_characteristic(cover.spec, curves) == 4


def test_universal_cover_of_example_54_report():
    cover = build_universal_cover(builtin("example-5.4"))
    report = verify_cover(cover)
    assert report.pieces == 4
    assert report.matchings == 8
    assert report.disks == 8
    assert report.chi == 4
    assert report.group_order == 1
    assert report.embeddable_orientable
    assert report.lift_trace_consistent


def test_cover_chi_is_index_times_base_chi():
    for name in ("example-5.4", "lens31-3.3odd", "rp3-spine-remark2"):
        base = builtin(name)
        base_curves = trace_boundary(base)
        base_chi = euler_characteristic(base, base_curves)
        cover = build_universal_cover(base)
        curves = trace_boundary(cover.spec)
        assert euler_characteristic(cover.spec, curves) == cover.index * base_chi


def test_universal_cover_of_lens_spine():
    cover = build_universal_cover(builtin("lens31-3.3odd"))
    assert cover.index == 3
    assert len(cover.spec.pieces) == 3
    assert len(cover.spec.matchings) == 3
    report = verify_cover(cover)
    assert report.disks == 3
    assert report.chi == 3
    assert report.group_order == 1
    assert report.lift_trace_consistent


def test_index_one_cover_is_the_base_renamed():
    base = builtin("bing-house-5.2")
    cover = build_universal_cover(base)
    assert cover.index == 1
    assert [name for name, _ in cover.spec.pieces] == ["A#1", "B#1"]
    assert len(cover.spec.matchings) == len(base.matchings)
    assert [m.perm for m in cover.spec.matchings] == [m.perm for m in base.matchings]


def test_cover_spec_validates_and_parities_are_copied():
    from spinecomplex.gluing import edge_parities

    base = builtin("example-5.4")
    cover = build_universal_cover(base)
    assert validate(cover.spec) == []
    base_parities = edge_parities(base)
    for name, parity in edge_parities(cover.spec).items():
        root = name.rsplit("#", 1)[0]
        assert parity == base_parities[root]


def test_cover_is_connected_for_transitive_action():
    from spinecomplex.gluing import build_skeleton

    cover = build_universal_cover(builtin("example-5.4"))
    assert build_skeleton(cover.spec).connected


def test_build_cover_rejects_unclosed_table():
    base = builtin("example-5.4")
    unclosed = CosetResult(order=None, limit=10)
    with pytest.raises(CosetTableNotClosedError):
        build_cover(base, unclosed)


def test_build_universal_cover_rejects_budget_overflow():
    with pytest.raises(CosetTableNotClosedError):
        build_universal_cover(builtin("example-5.4"), max_cosets=1)


def test_lift_curve_word_closes_exactly_on_relators():
    base = builtin("example-5.4")
    curves = trace_boundary(base)
    pres = presentation_from_complex(base, curves)
    result = todd_coxeter(pres)
    action = {m.name: result.action[i] for i, m in enumerate(base.matchings)}
    for curve in curves:
        for c in range(result.order):
            _, end = lift_curve_word(curve, action, c)
            assert end == c


def test_lifted_words_match_fresh_trace_on_poincare():
    # order 120 is too large to lift wholesale; check a small spine instead
    cover = build_universal_cover(builtin("rp3-spine-remark2"))
    assert cover.index == 2
    report = verify_cover(cover)
    assert report.lift_trace_consistent
    assert report.group_order == 1
