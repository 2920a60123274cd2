"""Command line interface.

Exit codes: 0 on success, 1 on analysis errors, 2 on parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys

from .builtins import builtin, builtin_description, builtin_names
from .covers import build_universal_cover, verify_cover
from .enumerator import census
from .gluing import SpineError
from .report import analyze, render_text, resolve_max_cosets, to_json
from .textio import SpecParseError, parse_spec, print_spec


def _load_spec(args) -> tuple:
    if args.builtin:
        return builtin(args.builtin), args.builtin
    with open(args.file, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_spec(text), os.path.basename(args.file)


def _add_spec_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", nargs="?", help="spec file in the text format")
    parser.add_argument("--builtin", metavar="NAME", help="use a built-in spec")


def _cmd_analyze(args) -> int:
    spec, name = _load_spec(args)
    report = analyze(
        spec, name=name, max_cosets=args.max_cosets, with_timings=args.timings
    )
    if args.json:
        sys.stdout.write(to_json(report))
    else:
        sys.stdout.write(render_text(report))
    if args.figures:
        from .plots import figure_dir, save_analysis_figure

        out = os.path.join(figure_dir(args.figures), f"{name or 'spec'}.curves.png")
        save_analysis_figure(report, out)
        print(f"figure written: {out}", file=sys.stderr)
    return 0


def _census_rows(result):
    for i, c in enumerate(result.classes, start=1):
        yield {
            "class": i,
            "size": c.size,
            "curves": c.curve_count,
            "chi": c.chi,
            "embeddable": c.embeddable,
            "witness": "" if c.witness is None else c.witness,
            "parities": "+".join(sorted(c.parities)),
            "h1_rank": "" if c.h1 is None else c.h1.rank,
            "h1_torsion": "" if c.h1 is None else "x".join(map(str, c.h1.torsion)),
            "group_order": "" if c.group_order is None else c.group_order,
            "representative": print_spec(c.representative).replace("\n", "; ").rstrip("; "),
        }


def _cmd_census(args) -> int:
    reflections = args.reflections == "on"
    result = census(
        args.pieces,
        reflections=reflections,
        max_cosets=resolve_max_cosets(args.max_cosets),
    )
    fields = [
        "class", "size", "curves", "chi", "embeddable", "witness",
        "parities", "h1_rank", "h1_torsion", "group_order", "representative",
    ]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row in _census_rows(result):
        writer.writerow(row)
    table = buf.getvalue()

    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(table)
        print(f"census table written: {args.csv}", file=sys.stderr)
    else:
        sys.stdout.write(table)
    print(
        f"raw gluings: {result.raw_count}  classes: {result.class_count}  "
        f"embeddable classes: {result.embeddable_class_count}  "
        f"(reflections {'included' if reflections else 'excluded'})",
        file=sys.stderr,
    )
    print(
        "note: classes are combinatorial-isomorphism classes under piece "
        "symmetries, a refinement of homeomorphism",
        file=sys.stderr,
    )
    if args.figures:
        from .plots import figure_dir, save_census_figure

        out = os.path.join(
            figure_dir(args.figures), f"census-n{args.pieces}.png"
        )
        save_census_figure(result, out)
        print(f"figure written: {out}", file=sys.stderr)
    return 0


def _cmd_cover(args) -> int:
    spec, name = _load_spec(args)
    cover = build_universal_cover(spec, max_cosets=resolve_max_cosets(args.max_cosets))
    report = verify_cover(cover, max_cosets=resolve_max_cosets(args.max_cosets))
    payload = {
        "base": name,
        "index": report.index,
        "pieces": report.pieces,
        "matchings": report.matchings,
        "disks": report.disks,
        "curves": report.curve_count,
        "chi": report.chi,
        "embeddable_orientable": report.embeddable_orientable,
        "witness": report.witness,
        "group_order": report.group_order,
        "lift_trace_consistent": report.lift_trace_consistent,
    }
    if args.json:
        import json

        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        lines = [f"universal cover of {name}: index {report.index}"]
        lines.append(
            f"pieces: {report.pieces}  matchings: {report.matchings}  disks: {report.disks}"
        )
        lines.append(f"curves: {report.curve_count}  chi: {report.chi}")
        lines.append(
            "verdict: "
            + (
                "embeddable in an orientable 3-manifold"
                if report.embeddable_orientable
                else f"NOT embeddable (witness curve {report.witness})"
            )
        )
        lines.append(f"cover group order: {report.group_order}")
        lines.append(
            f"lifted disks match fresh trace: {report.lift_trace_consistent}"
        )
        sys.stdout.write("\n".join(lines) + "\n")
    if args.emit_spec:
        with open(args.emit_spec, "w", encoding="utf-8") as fh:
            fh.write(print_spec(cover.spec))
        print(f"cover spec written: {args.emit_spec}", file=sys.stderr)
    return 0


def _cmd_list_builtins(args) -> int:
    for name in builtin_names():
        spec = builtin(name)
        desc = builtin_description(name)
        print(f"{name}: {len(spec.pieces)} pieces, {len(spec.matchings)} matchings  - {desc}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spine",
        description="Standard 2-complexes from T-end gluings: boundary curves, "
        "embeddability, fundamental groups, covers and censuses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run the full pipeline on one spec")
    _add_spec_source(p)
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    p.add_argument("--text", action="store_true", help="emit the text report (default)")
    p.add_argument("--max-cosets", type=int, default=None)
    p.add_argument("--timings", action="store_true", help="include stage timings")
    p.add_argument("--figures", metavar="DIR", help="render figures into DIR")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("census", help="classify all gluings of N vertex pieces")
    p.add_argument("--pieces", type=int, required=True)
    p.add_argument("--reflections", choices=("on", "off"), default="on")
    p.add_argument("--max-cosets", type=int, default=None)
    p.add_argument("--csv", metavar="PATH", help="write the table to PATH")
    p.add_argument("--figures", metavar="DIR", help="render figures into DIR")
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser("cover", help="build and verify the universal cover")
    _add_spec_source(p)
    p.add_argument("--universal", action="store_true", required=True,
                   help="build the cover of the trivial subgroup")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-cosets", type=int, default=None)
    p.add_argument("--emit-spec", metavar="PATH", help="write the cover's spec to PATH")
    p.set_defaults(fn=_cmd_cover)

    p = sub.add_parser("list-builtins", help="list the built-in corpus")
    p.set_defaults(fn=_cmd_list_builtins)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "file", "-") is None and not getattr(args, "builtin", None):
        parser.error("a spec file or --builtin NAME is required")
    try:
        return args.fn(args)
    except SpecParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (SpineError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
