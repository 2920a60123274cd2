"""Tracer output against the independent polygonal-complex oracle."""

from halfedge_oracle import oracle_trace

from spinecomplex import builtin, builtin_names
from spinecomplex.enumerator import enumerate_gluings
from spinecomplex.tracer import trace_boundary
from spinecomplex.words import cyclic_canonical


def canonical_family(words):
    return sorted(cyclic_canonical(w) for w in words)


def assert_agreement(spec, label):
    traced = canonical_family([c.word for c in trace_boundary(spec)])
    reference = canonical_family(oracle_trace(spec))
    assert traced == reference, label


def test_oracle_agrees_on_both_bar_variants():
    assert_agreement(builtin("rp2-disk-3.3even"), "3.3 even")
    assert_agreement(builtin("lens31-3.3odd"), "3.3 odd")


def test_oracle_agrees_on_every_builtin():
    for name in builtin_names():
        assert_agreement(builtin(name), name)


def test_oracle_agrees_on_all_108_one_vertex_specs():
    for i, spec in enumerate(enumerate_gluings(1)):
        assert_agreement(spec, f"one-vertex spec #{i}")
