"""Line-oriented text format for gluing specs.

    # comments run to end of line
    piece <NAME> vertex|bar
    match <ID>: <NAME>.<t> ~ <NAME>.<t> (p q r)
    disks all
    disks none
    disk <curve-index>

A match line glues prong k of the left T-end to prong number k of the
list (p q r) on the right.  Disk lines are optional; the default attaches
a disk along every boundary curve.  Curve indices are 1-based in the
tracer's deterministic order.

A ``#`` opens a comment only at the start of a line or after whitespace,
so names produced by the cover construction (``A#2``, ``e1#2``) survive a
round trip through this format.
"""

from __future__ import annotations

import re

from .gluing import GluingSpec, Matching, SpineError, TEndSlot
from .pieces import PieceKind


class SpecParseError(SpineError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


_NAME = r"[A-Za-z_][A-Za-z0-9_#-]*"
_PIECE_RE = re.compile(rf"^piece\s+({_NAME})\s+(vertex|bar)\s*$")
_MATCH_RE = re.compile(
    rf"^match\s+({_NAME})\s*:\s*({_NAME})\.(\d+)\s*~\s*({_NAME})\.(\d+)\s*"
    r"\(\s*(\d)\s+(\d)\s+(\d)\s*\)\s*$"
)
_DISKS_ALL_RE = re.compile(r"^disks\s+all\s*$")
_DISKS_NONE_RE = re.compile(r"^disks\s+none\s*$")
_DISK_RE = re.compile(r"^disk\s+(\d+)\s*$")


def _strip_comment(raw: str) -> str:
    # '#' opens a comment at line start or after whitespace; elsewhere it is
    # part of a name (cover pieces are called A#1, A#2, ...)
    for i, ch in enumerate(raw):
        if ch == "#" and (i == 0 or raw[i - 1].isspace()):
            return raw[:i]
    return raw


def parse_spec(text: str) -> GluingSpec:
    """Parse a spec document; raises SpecParseError with a location.

    Semantic problems (unknown pieces, unmatched T-ends, ...) are left to
    ``validate``; only the shape of each line is checked here.
    """
    pieces: list[tuple[str, PieceKind]] = []
    matchings: list[Matching] = []
    disks_all = False
    disks_none = False
    explicit: list[int] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if m := _PIECE_RE.match(line):
            pieces.append((m.group(1), PieceKind(m.group(2))))
        elif m := _MATCH_RE.match(line):
            perm = (int(m.group(6)), int(m.group(7)), int(m.group(8)))
            if sorted(perm) != [1, 2, 3]:
                raise SpecParseError(
                    f"prong list {perm} is not a permutation of 1 2 3",
                    lineno,
                    raw.index("(") + 1,
                )
            matchings.append(
                Matching(
                    m.group(1),
                    TEndSlot(m.group(2), int(m.group(3))),
                    TEndSlot(m.group(4), int(m.group(5))),
                    perm,
                )
            )
        elif _DISKS_ALL_RE.match(line):
            disks_all = True
        elif _DISKS_NONE_RE.match(line):
            disks_none = True
        elif m := _DISK_RE.match(line):
            explicit.append(int(m.group(1)))
        else:
            keyword = line.split()[0]
            column = len(raw) - len(raw.lstrip()) + 1
            if keyword in ("piece", "match", "disks", "disk"):
                raise SpecParseError(f"malformed {keyword} line: {line!r}", lineno, column)
            raise SpecParseError(f"unknown directive {keyword!r}", lineno, column)

    if sum((disks_all, disks_none, bool(explicit))) > 1:
        raise SpecParseError("conflicting disk policy lines", 1)
    if disks_none:
        disks: tuple[int, ...] | None = ()
    elif explicit:
        disks = tuple(explicit)
    else:
        disks = None
    return GluingSpec(tuple(pieces), tuple(matchings), disks)


def print_spec(spec: GluingSpec) -> str:
    """Render a spec in the text format; parse(print(s)) == s."""
    lines = []
    for name, kind in spec.pieces:
        lines.append(f"piece {name} {kind.value}")
    for m in spec.matchings:
        p, q, r = m.perm
        lines.append(f"match {m.name}: {m.left} ~ {m.right} ({p} {q} {r})")
    if spec.disks is None:
        lines.append("disks all")
    elif not spec.disks:
        lines.append("disks none")
    else:
        for idx in spec.disks:
            lines.append(f"disk {idx}")
    return "\n".join(lines) + "\n"
