"""Command line front end.

Subcommands:

* ``cohomology``   twist cohomology tables for O(d) or OZ(e)
* ``hom``          graded Hom between two objects, with rule provenance
* ``verify-sod``   check an ordered collection from a config file or a
                   built-in instance
* ``paper-report`` the full reference report for a built-in instance

Exit codes: 0 success, 1 verification failure, 2 usage or config error,
3 engine refusal (a query outside the validity domains or a rank the
diagrams do not determine).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .cone import cone_cohomology_dim, make_space, section_cohomology_dim
from .linalg import EngineError
from .objects import as_object, hom_objects_detailed, kernel_bundle, SumObject
from .report import BUILTIN_INSTANCES, InstanceConfig, build_report, get_instance
from .rules import OX, OZ
from .tilting import check_sod

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3


class ConfigError(Exception):
    pass


# ---------------------------------------------------------------------------
# config files
# ---------------------------------------------------------------------------

_ATOM_RE = re.compile(r"^(O|OZ|ker)\((-?\d+)\)$")


def _parse_term(term, space, objects):
    term = term.strip()
    mult = 1
    if "*" in term:
        head, _, term = term.partition("*")
        try:
            mult = int(head.strip())
        except ValueError:
            raise ConfigError("bad multiplicity in %r" % term)
        if mult < 1:
            raise ConfigError("multiplicity must be positive in %r" % term)
        term = term.strip()
    m = _ATOM_RE.match(term)
    if m:
        kind, arg = m.group(1), int(m.group(2))
        if kind == "O":
            obj = as_object(OX(arg))
        elif kind == "OZ":
            obj = as_object(OZ(arg))
        else:
            try:
                obj = kernel_bundle(space, arg)
            except ValueError as exc:
                raise ConfigError(str(exc))
        return obj, mult
    if term in objects:
        return objects[term], mult
    raise ConfigError("unknown object term %r" % term)


def parse_object_expr(expr, space, objects):
    """An object expression: terms joined by '+', each 'k*base' or 'base'."""
    parts = []
    for term in expr.split("+"):
        obj, mult = _parse_term(term, space, objects)
        parts.append((obj, mult))
    if len(parts) == 1 and parts[0][1] == 1:
        return parts[0][0]
    return SumObject(tuple(parts))


def parse_config(text, name="config"):
    """Parse the plain hierarchical instance format.

    Keys: ``space: n,m`` and the indented blocks ``objects:`` and
    ``collections:`` with ``name = expression`` lines.
    """
    space = None
    objects = {}
    collections = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("space:"):
            val = stripped[len("space:"):].strip()
            try:
                n, m = (int(x) for x in val.split(","))
                space = make_space(n, m)
            except (ValueError, TypeError) as exc:
                raise ConfigError("line %d: bad space %r (%s)" % (lineno, val, exc))
            section = None
            continue
        if stripped == "objects:":
            section = "objects"
            continue
        if stripped == "collections:":
            section = "collections"
            continue
        if "=" not in stripped or section is None:
            raise ConfigError("line %d: cannot parse %r" % (lineno, stripped))
        if space is None:
            raise ConfigError("line %d: space must be declared first" % lineno)
        key, _, expr = stripped.partition("=")
        key = key.strip()
        if not key:
            raise ConfigError("line %d: empty name" % lineno)
        if section == "objects":
            if key in objects:
                raise ConfigError("line %d: duplicate object %r" % (lineno, key))
            objects[key] = parse_object_expr(expr, space, objects)
        else:
            if key in collections:
                raise ConfigError("line %d: duplicate collection %r" % (lineno, key))
            names = [t.strip() for t in expr.split(",") if t.strip()]
            for n_ in names:
                if n_ not in objects:
                    raise ConfigError(
                        "line %d: collection %r references unknown object %r"
                        % (lineno, key, n_)
                    )
            collections[key] = names
    if space is None:
        raise ConfigError("config declares no space")
    return InstanceConfig(name, space, objects, collections)


def load_config(path):
    try:
        with open(path) as fh:
            return parse_config(fh.read(), name=path)
    except OSError as exc:
        raise ConfigError("cannot read %s: %s" % (path, exc))


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render_table(headers, rows, fmt):
    if fmt == "markdown":
        out = ["| " + " | ".join(headers) + " |"]
        out.append("|" + "|".join(" --- " for _ in headers) + "|")
        for row in rows:
            out.append("| " + " | ".join(str(c) for c in row) + " |")
        return "\n".join(out)
    widths = [
        max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
        for i, h in enumerate(headers)
    ]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(row, widths)))
    return "\n".join(lines)


def emit_json(payload):
    return json.dumps(payload, indent=2, sort_keys=True)


def _regime_notes(space):
    if space.n > 3:
        return ["dimension %d is an untested regime for this engine" % space.n]
    return []


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _parse_space_flag(value):
    try:
        n, m = (int(x) for x in value.split(","))
        return make_space(n, m)
    except (ValueError, TypeError) as exc:
        raise ConfigError("bad --space %r: %s" % (value, exc))


def cmd_cohomology(args):
    space = _parse_space_flag(args.space)
    lo, hi = args.twist_min, args.twist_max
    if hi < lo:
        raise ConfigError("empty twist range %d..%d" % (lo, hi))
    if args.sheaf == "O":
        top = space.n
        dim_of = lambda d, i: cone_cohomology_dim(space, d, i)
    else:
        top = space.n - 1
        dim_of = lambda d, i: section_cohomology_dim(space, d, i)
    degrees = [args.i] if args.i is not None else list(range(top + 1))
    for i in degrees:
        if not 0 <= i <= top:
            raise ConfigError("cohomological degree %d outside [0, %d]" % (i, top))
    rows = []
    payload_rows = []
    for d in range(lo, hi + 1):
        dims = [dim_of(d, i) for i in degrees]
        rows.append(["%s(%d)" % (args.sheaf, d)] + dims)
        payload_rows.append({"twist": d, "h": dims})
    payload = {
        "command": "cohomology",
        "space": str(space),
        "sheaf": args.sheaf,
        "degrees": degrees,
        "rows": payload_rows,
        "notes": _regime_notes(space),
    }
    if args.format == "json":
        print(emit_json(payload))
    else:
        headers = ["twist"] + ["h^%d" % i for i in degrees]
        print(render_table(headers, rows, args.format))
        for note in payload["notes"]:
            print("note: %s" % note)
    return EXIT_OK


def _resolve_pair(args):
    if args.config:
        cfg = load_config(args.config)
    elif args.instance:
        try:
            cfg = get_instance(args.instance)
        except KeyError as exc:
            raise ConfigError(str(exc))
    elif args.space:
        cfg = InstanceConfig("inline", _parse_space_flag(args.space), {}, {})
    else:
        raise ConfigError("need --config, --instance or --space")
    objs = []
    for name in (args.A, args.B):
        if name in cfg.objects:
            objs.append(cfg.objects[name])
        else:
            objs.append(parse_object_expr(name, cfg.space, cfg.objects))
    return cfg, objs


def cmd_hom(args):
    cfg, (A, B) = _resolve_pair(args)
    comp = hom_objects_detailed(cfg.space, A, B)
    payload = {
        "command": "hom",
        "space": str(cfg.space),
        "source": args.A,
        "target": args.B,
        "dims": list(comp.dims),
        "provenance": list(comp.notes),
        "notes": _regime_notes(cfg.space),
    }
    if args.format == "json":
        print(emit_json(payload))
    else:
        print(
            "Hom*(%s, %s) on %s: %s"
            % (
                args.A,
                args.B,
                cfg.space,
                "  ".join("deg%d: %d" % (i, d) for i, d in enumerate(comp.dims)),
            )
        )
        for note in comp.notes:
            print("  via %s" % note)
        for note in payload["notes"]:
            print("note: %s" % note)
    return EXIT_OK


def _sod_payload(report):
    return {
        "command": "verify-sod",
        "space": str(report.space),
        "collection": list(report.names),
        "pass": report.ok,
        "first_violation": report.first_violation,
        "end_dims": list(report.blocks),
        "ranks": list(report.ranks),
        "pairwise": [
            {
                "source": report.names[i],
                "target": report.names[j],
                "dims": list(report.pairwise[i][j]),
            }
            for i in range(len(report.names))
            for j in range(len(report.names))
        ],
        "blocks": [
            None
            if bd is None
            else {
                "names": bd.names,
                "ranks": bd.ranks,
                "matrix": bd.matrix,
                "total": bd.total,
            }
            for bd in report.block_detail
        ],
        "generation": report.generation_note,
        "notes": list(report.notes),
    }


def cmd_verify_sod(args):
    if args.config:
        cfg = load_config(args.config)
    else:
        try:
            cfg = get_instance(args.instance)
        except KeyError as exc:
            raise ConfigError(str(exc))
    name = args.collection or (
        sorted(cfg.collections)[0] if cfg.collections else None
    )
    if name is None:
        raise ConfigError("no collections defined")
    try:
        collection = cfg.collection(name)
    except KeyError as exc:
        raise ConfigError(str(exc))
    report = check_sod(cfg.space, collection)
    payload = _sod_payload(report)
    if args.format == "json":
        print(emit_json(payload))
    else:
        print(report.summary())
        print("  generation: %s" % report.generation_note)
        rows = [
            [report.names[i], report.names[j], report.pairwise[i][j]]
            for i in range(len(report.names))
            for j in range(len(report.names))
        ]
        print(render_table(["source", "target", "Hom* dims"], rows, args.format))
        for bd in report.block_detail:
            if bd is not None:
                print(
                    "  block %s: matrix %s, total %d"
                    % ("+".join(bd.names), bd.matrix, bd.total)
                )
        for note in report.notes:
            print("note: %s" % note)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_paper_report(args):
    if args.instance not in BUILTIN_INSTANCES:
        print(
            "unknown instance %r (available: %s)"
            % (args.instance, ", ".join(sorted(BUILTIN_INSTANCES))),
            file=sys.stderr,
        )
        return EXIT_USAGE
    report = build_report(args.instance)
    if args.format == "json":
        print(emit_json(report.to_jsonable()))
    else:
        print("reference report for %s on %s" % (report.instance, report.space))
        section = None
        rows = []
        for r in report.rows:
            rows.append(
                [r.section, r.label, r.expected, r.computed, "PASS" if r.ok else "FAIL"]
            )
        print(
            render_table(
                ["section", "entry", "expected", "computed", "flag"],
                rows,
                args.format,
            )
        )
        vrows = [
            [label, expected, got, "PASS" if ok else "FAIL"]
            for label, expected, got, ok in report.verdicts
        ]
        print(render_table(["verdict", "expected", "got", "flag"], vrows, args.format))
        for note in report.notes:
            print("note: %s" % note)
        print("overall: %s" % ("PASS" if report.ok else "FAIL"))
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="conetilt",
        description="exact Hom/Ext dimensions and tilting checks on weighted "
        "projective cones P(1,...,1,m)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohomology", help="twist cohomology table")
    p.add_argument("--space", required=True, help="n,m for P(1^n, m)")
    p.add_argument("--sheaf", choices=["O", "OZ"], default="O")
    p.add_argument("--twist-min", type=int, required=True)
    p.add_argument("--twist-max", type=int, required=True)
    p.add_argument("--i", type=int, default=None, help="single cohomological degree")
    p.add_argument("--format", choices=["text", "json", "markdown"], default="text")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("hom", help="graded Hom between two objects")
    p.add_argument("A", help="object name or expression, e.g. O(3), OZ(1), ker(2)")
    p.add_argument("B")
    p.add_argument("--config", help="instance config file")
    p.add_argument("--instance", help="built-in instance name")
    p.add_argument("--space", help="n,m for inline expressions")
    p.add_argument("--format", choices=["text", "json", "markdown"], default="text")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("verify-sod", help="check an ordered collection")
    p.add_argument("collection", nargs="?", help="collection name (default: first)")
    p.add_argument("--config", help="instance config file")
    p.add_argument("--instance", help="built-in instance name")
    p.add_argument("--format", choices=["text", "json", "markdown"], default="text")
    p.set_defaults(func=cmd_verify_sod)

    p = sub.add_parser("paper-report", help="full reference report")
    p.add_argument("instance", help="built-in instance name (P1113 or P112)")
    p.add_argument("--format", choices=["text", "json", "markdown"], default="text")
    p.set_defaults(func=cmd_paper_report)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify-sod" and not (args.config or args.instance):
        print("verify-sod needs --config or --instance", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ConfigError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except EngineError as exc:
        print("engine refusal: %s" % exc, file=sys.stderr)
        return EXIT_REFUSED


if __name__ == "__main__":
    sys.exit(main())
