"""Command line front end: ``latglue <command> [options]``.

Exit status is 0 on success, 1 when a certificate fails (the offending
datum goes to stderr) and 2 for usage errors.  Exact scalars are printed
as ``p/q`` or ``p/q+r/s√3``; only SVG output contains floating digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from .exactnum import parse_scalar
from .glue import GlueError, format_glue, table_l4, table_l8
from .laminate import densities, export_gram_l12, format_gram, kissing_number, table3
from .lattice import EnumerationCapError
from .project import LemmaViolation, ProjectionError, lemma1_scan, minimal_split_census
from .windowq import (
    PackingViolation,
    TilingError,
    exact_density,
    extract_tiling,
    generate_patch,
    kissing_configuration,
    make_window,
    patch_from_records,
    patch_records,
    render_svg,
    verify_packing,
)

DEFAULT_BOUND = 8
FORMATS = ("text", "csv", "json")
CERTIFICATE_ERRORS = (
    GlueError,
    ProjectionError,
    LemmaViolation,
    PackingViolation,
    TilingError,
    EnumerationCapError,
    AssertionError,
)


class CertificateFailure(Exception):
    pass


class UsageError(Exception):
    pass


def _s(x) -> str:
    if isinstance(x, tuple) and len(x) == 4 and all(isinstance(v, Fraction) for v in x):
        return format_glue(x)
    return str(x)


def _emit(out, tables: list[tuple[str, list[str], list[list]]], fmt: str) -> None:
    """Write ``(title, header, rows)`` tables in the requested format."""
    if fmt == "json":
        doc = {title: [dict(zip(header, map(_s, row))) for row in rows] for title, header, rows in tables}
        out.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
        return
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        multi = len(tables) > 1
        for title, header, rows in tables:
            w.writerow((["table"] if multi else []) + header)
            for row in rows:
                w.writerow(([title] if multi else []) + [_s(v) for v in row])
        out.write(buf.getvalue())
        return
    for k, (title, header, rows) in enumerate(tables):
        if k:
            out.write("\n")
        cells = [header] + [[_s(v) for v in row] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        if title:
            out.write(title + "\n")
        for r in cells:
            out.write("  ".join(c.ljust(wd) for c, wd in zip(r, widths)).rstrip() + "\n")


def _centering(text: str | None):
    if text is None:
        return None
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("centering needs 4 comma-separated scalars")
    try:
        return tuple(parse_scalar(p) for p in parts)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"bad centering scalar: {e}") from None


def _threads(args) -> int:
    return args.threads if args.threads else (os.cpu_count() or 1)


# ----------------------------------------------------------------- commands


def cmd_tables(args, out) -> None:
    t1 = [[_s(r.h), r.orbit_size, r.depth, r.tau] for r in table_l8()]
    t2 = [[_s(r.h), r.orbit_size, r.depth, r.tau] for r in table_l4()]
    t3 = [[_s(r.h), r.orbit_size, r.min_norm, r.count, r.number] for r in table3(_threads(args))]
    t4 = [[_s(o.h), _s(o.rep), o.size, o.n_par, o.n_perp] for o in minimal_split_census()]
    _emit(
        out,
        [
            ("Table 1: glue orbits in L8", ["h", "orbit", "depth8", "tau8"], t1),
            ("Table 2: glue orbits in L4", ["h", "orbit", "depth4", "tau4"], t2),
            ("Table 3: short vectors of L12", ["h", "orbit", "norm", "count", "number"], t3),
            ("Table 4: split of minimal L4 parts", ["h", "x4", "orbit", "n_par", "n_perp"], t4),
        ],
        args.format,
    )


def cmd_kissing_l12(args, out) -> None:
    total, per = kissing_number(_threads(args))
    if total != 648:
        raise CertificateFailure(f"L12 kissing number {total}")
    if args.format == "text":
        out.write(f"{total}\n")
        return
    rows = [[_s(h), n] for h, n in sorted(per.items()) if n]
    _emit(out, [("kissing", ["h", "count"], rows)], args.format)


def cmd_lemma(args, out) -> None:
    rep = lemma1_scan(strict=True)
    _emit(out, [("", ["checked", "violations"], [[rep.checked, len(rep.violations)]])], args.format)


def cmd_patch(args, out) -> None:
    w = make_window(args.centering)
    patch = generate_patch(w, args.bound)
    text = json.dumps(patch_records(patch), ensure_ascii=False, separators=(",", ":")) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        out.write(f"{len(patch)} fibers written to {args.out}\n")
    else:
        out.write(text)


def _load_patch(args):
    with open(args.patch, encoding="utf-8") as fh:
        records = json.load(fh)
    try:
        return patch_from_records(records, make_window(args.centering))
    except (ValueError, KeyError, TypeError) as e:
        raise CertificateFailure(f"{args.patch}: {e}") from None


def cmd_verify(args, out) -> None:
    patch = _load_patch(args)
    rep = verify_packing(patch)
    if rep.min_dist_sq != 4 or not rep.witnesses:
        raise CertificateFailure(f"minimum squared distance {rep.min_dist_sq}, {len(rep.witnesses)} witnesses")
    contacts = sum(c for _, _, c in rep.witnesses)
    rows = [[len(patch), rep.pairs_checked, rep.min_dist_sq, len(rep.witnesses), contacts]]
    _emit(out, [("", ["fibers", "pairs", "min_dist_sq", "touching_pairs", "contacts"], rows)], args.format)


def cmd_kissing_q10(args, out) -> None:
    if not args.singular:
        raise UsageError("only the singular centering has a fixed kissing configuration; pass --singular")
    rep = kissing_configuration(make_window())
    groups: dict = {}
    for h, v4, n in rep.per_fiber:
        kind = "center" if not any(v4) else ("vertex" if n == 9 else "ring" if n == 24 else "other")
        c = groups.setdefault(kind, [0, 0, n])
        c[0] += 1
        c[1] += n
    rows = [[k, *groups[k]] for k in ("center", "vertex", "ring", "other") if k in groups]
    rows.append(["total", sum(r[1] for r in rows), rep.count, ""])
    _emit(out, [("", ["kind", "fibers", "spheres", "per_fiber"], rows)], args.format)


def cmd_cosines(args, out) -> None:
    rep = kissing_configuration(make_window())
    rows = [[c, n] for c, n in sorted(rep.cosines.items())]
    rows.append(["-1", rep.antipodal_pairs])
    _emit(out, [("", ["cosine", "pairs"], rows)], args.format)


def cmd_tiling(args, out) -> None:
    patch = _load_patch(args)
    t = extract_tiling(patch)
    if not t.complete_rings:
        raise CertificateFailure("no tile vertex carries a complete ring of 12")
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(patch, t))
    c = t.counts
    rows = [
        [len(t.vertices), len(t.edges), t.shortest, t.edge_sq, c["triangle"], c["square"], c["rhombus"], t.complete_rings]
    ]
    header = ["vertices", "edges", "shortest_sep", "edge_sq", "triangles", "squares", "rhombi", "complete_rings"]
    _emit(out, [("", header, rows)], args.format)


def cmd_gram(args, out) -> None:
    G = export_gram_l12()
    if args.format == "text":
        out.write(format_gram(G))
    else:
        _emit(out, [("gram", [f"b{j}" for j in range(len(G))], G)], args.format)


def cmd_densities(args, out) -> None:
    d8, d4, d12 = densities()
    d10 = exact_density(make_window())
    if args.format == "text":
        out.write(f"δ8={d8} δ4={d4} δ12={d12} δ10={d10}\n")
        return
    _emit(out, [("", ["delta8", "delta4", "delta12", "delta10"], [[d8, d4, d12, d10]])], args.format)


COMMANDS = {
    "tables": (cmd_tables, "recompute the glue, short-vector and split tables"),
    "kissing-l12": (cmd_kissing_l12, "kissing number of L12"),
    "lemma": (cmd_lemma, "exhaustive scan of the thin-vector lemma"),
    "patch": (cmd_patch, "generate a patch of the 10-d packing"),
    "verify": (cmd_verify, "certify minimum distance 2 on a patch file"),
    "kissing-q10": (cmd_kissing_q10, "378-sphere configuration at singular centering"),
    "tiling": (cmd_tiling, "extract the tiling of special centers from a patch file"),
    "gram": (cmd_gram, "integral Gram matrix of L12"),
    "densities": (cmd_densities, "exact center densities"),
    "cosines": (cmd_cosines, "cosine spectrum of the 378 kissing spheres"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=0, help="worker threads (default: all cores)")
    common.add_argument("--format", choices=FORMATS, default="text")
    p = argparse.ArgumentParser(prog="latglue", description="Glued lattices in 12 and 10 dimensions.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")
    parsers = {}
    for name, (_, help_) in COMMANDS.items():
        parsers[name] = sub.add_parser(name, help=help_, parents=[common])
    # alias kept for symmetry with kissing-l12
    parsers["kissing"] = sub.add_parser("kissing", help="same as kissing-q10", parents=[common])
    for name in ("kissing-q10", "kissing"):
        parsers[name].add_argument("--singular", action="store_true", help="zero centering")
    pp = parsers["patch"]
    pp.add_argument("--bound", type=int, default=DEFAULT_BOUND, help=f"L4 coordinate box (default {DEFAULT_BOUND})")
    pp.add_argument("--centering", type=_centering, default=None, help='"c1,c2,c3,c4" over Q(√3)')
    pp.add_argument("--out", help="output file (default: stdout)")
    for name in ("verify", "tiling"):
        parsers[name].add_argument("patch", help="patch.json written by `latglue patch`")
        parsers[name].add_argument("--centering", type=_centering, default=None, help="centering used for the patch")
    parsers["tiling"].add_argument("--svg", help="write an SVG picture of the tiling")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 0:
        print("latglue: --threads must be non-negative", file=sys.stderr)
        return 2
    if getattr(args, "bound", 1) < 1:
        print("latglue: --bound must be positive", file=sys.stderr)
        return 2
    cmd = "kissing-q10" if args.command == "kissing" else args.command
    try:
        COMMANDS[cmd][0](args, sys.stdout)
    except (CertificateFailure, *CERTIFICATE_ERRORS) as e:
        print(f"latglue {args.command}: certificate failed: {e}", file=sys.stderr)
        return 1
    except (UsageError, FileNotFoundError, json.JSONDecodeError) as e:
        print(f"latglue: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
