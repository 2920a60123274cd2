"""Built-in corpus of worked gluing specifications.

Each document transcribes one classical construction; edge names follow
the 1-cell labels used in the corresponding hand computation, so traced
boundary words compare directly against the published relations.
"""

from __future__ import annotations

from .gluing import GluingSpec, SpineError
from .textio import parse_spec

_DOCS: dict[str, str] = {
    "ball-5.1a": """\
# one vertex neighborhood, both matchings odd; a standard spine of a 3-ball
piece V vertex
match a: V.1 ~ V.3 (2 1 3)
match b: V.2 ~ V.4 (1 3 2)
disks all
""",
    "s3-spine-5.1b": """\
# torus with meridian and parallel disks, a spine of the 3-sphere
piece V vertex
match a: V.1 ~ V.3 (2 1 3)
match b: V.2 ~ V.4 (2 1 3)
disks all
""",
    "rp2-two-disks-5.1c": """\
# projective plane with two disks; not embeddable in any 3-manifold
piece V vertex
match a: V.1 ~ V.3 (1 2 3)
match b: V.2 ~ V.4 (1 2 3)
disks all
""",
    "bing-house-5.2": """\
# Bing's house with two rooms
piece A vertex
piece B vertex
match a1: A.1 ~ B.4 (3 2 1)
match b1: A.2 ~ A.4 (2 1 3)
match a2: A.3 ~ B.2 (1 3 2)
# the published table closes c1 with A33, but A.3 is already consumed by
# a2; B33 is the only reading that leaves every T-end singly matched
match c1: B.1 ~ B.3 (2 1 3)
disks all
""",
    "poincare-5.3": """\
# classical spine of the Poincare homology sphere (group of order 120)
piece O vertex
piece P vertex
piece Q vertex
piece R vertex
piece S vertex
match a: O.1 ~ Q.3 (1 3 2)
match b: O.2 ~ S.1 (2 1 3)
match c: O.3 ~ R.3 (1 3 2)
match d: O.4 ~ P.4 (3 2 1)
match e: P.1 ~ Q.4 (1 3 2)
match f: P.2 ~ R.2 (2 1 3)
match g: P.3 ~ S.4 (1 3 2)
match h: Q.1 ~ R.1 (1 3 2)
match i: Q.2 ~ S.2 (1 3 2)
match k: R.4 ~ S.3 (3 2 1)
disks all
""",
    "example-5.4": """\
# Klein bottle with two disks: a1, a2 even, b1, b2 odd
piece A vertex
piece B vertex
# the published table closes a1 with A23, but A.2 is already consumed by
# a2; B23 is the only reading that leaves every T-end singly matched
match a1: A.4 ~ B.2 (1 2 3)
match a2: A.2 ~ B.4 (1 2 3)
match b1: A.1 ~ B.1 (2 1 3)
match b2: A.3 ~ B.3 (2 1 3)
disks all
""",
    "rp3-spine-remark2": """\
# torus-with-two-disks spine of real projective 3-space; all matchings odd
piece A vertex
piece B vertex
# same A23 -> B23 correction as example-5.4
match a1: A.4 ~ B.2 (2 1 3)
match a2: A.2 ~ B.4 (2 1 3)
match b1: A.1 ~ B.3 (2 1 3)
match b2: A.3 ~ B.1 (2 1 3)
disks all
""",
    "rp2-disk-3.3even": """\
# bar piece self-matched evenly: projective plane plus a disk
piece V bar
match a: V.1 ~ V.2 (1 2 3)
disks all
""",
    "lens31-3.3odd": """\
# bar piece self-matched oddly: the classical spine of the lens space L(3,1)
piece V bar
match a: V.1 ~ V.2 (1 3 2)
disks all
""",
}


class UnknownBuiltinError(SpineError):
    pass


def builtin_names() -> tuple[str, ...]:
    return tuple(_DOCS)


def builtin_text(name: str) -> str:
    try:
        return _DOCS[name]
    except KeyError:
        raise UnknownBuiltinError(
            f"unknown builtin {name!r}; known: {', '.join(_DOCS)}"
        ) from None


def builtin_description(name: str) -> str:
    first = builtin_text(name).splitlines()[0]
    return first.lstrip("# ").strip()


def builtin(name: str) -> GluingSpec:
    return parse_spec(builtin_text(name))
