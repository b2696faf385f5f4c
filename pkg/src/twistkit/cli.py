"""Command line interface.

Exit codes: 0 when every check passes, 1 when some axiom fails, 2 on
usage or input errors.  Structures are given as YAML files or by corpus
fixture name (``twistkit fixtures`` lists them; ``broken/<name>`` names a
corrupted fixture).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import yaml

from . import corpus
from .bimodule import Bimodule, division_bimodule
from .checking import LEVELS, check_structure
from .enumeration import KINDS as ENUM_KINDS, enumerate_structures, random_structure
from .errors import WorkbenchError
from .fileio import dumps, kind_of, load, to_document
from .fractions import fractions_algebra
from .nagata import (check_counit, check_decomposition, check_triangles,
                     check_unit_map, check_unit_surjectivity, nagata_product,
                     restricted_nagata_product)
from .report import CheckReport
from .suite import run_all
from .twist import check_roundtrip, restricted_twist_product, twist_product, untwist

OK, FAILED, BAD_INPUT = 0, 1, 2


def resolve(target: str, validate: bool = True):
    """A file path or fixture name -> (kind, structure)."""
    if target.startswith("broken/"):
        name = target.split("/", 1)[1]
        for c in corpus.corruptions():
            if c.name == name:
                return kind_of(c.structure), c.structure
        raise WorkbenchError(f"no corrupted fixture named {name!r}")
    path = Path(target)
    if path.exists():
        return load(path, validate)
    fixtures = corpus.fixtures()
    if target in fixtures:
        return kind_of(fixtures[target]), fixtures[target]
    raise WorkbenchError(f"{target!r} is neither a file nor a fixture name")


def _emit(reports: list[tuple[str, CheckReport]], fmt: str) -> int:
    for subject, r in reports:
        if fmt == "json":
            d = r.to_dict()
            if subject:
                d["subject"] = subject
            print(json.dumps(d, ensure_ascii=False))
        else:
            print(f"{subject}: {r.line()}" if subject else r.line())
    return OK if all(r.passed for _, r in reports) else FAILED


def _write(structure, out: str | None) -> None:
    text = dumps(structure)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    kind, s = resolve(args.file, validate=False)
    return _emit([("", r) for r in check_structure(kind, s, args.level)], args.format)


def _as_bimodule(kind, s) -> Bimodule:
    if kind == "bimodule":
        return s
    if kind == "residuated-lattice":
        return division_bimodule(s)
    raise WorkbenchError(f"expected a bimodule or residuated lattice, got {kind}")


def _expect(kind, s, want):
    if kind != want:
        raise WorkbenchError(f"expected a {want}, got {kind}")
    return s


def cmd_construct(args) -> int:
    kind, s = resolve(args.file)
    what = args.construction
    if what == "nagata":
        out = nagata_product(_as_bimodule(kind, s))
    elif what == "restricted-nagata":
        out = restricted_nagata_product(_as_bimodule(kind, s))
    elif what == "twist":
        out = twist_product(_expect(kind, s, "twistable-pair"))
    elif what == "restricted-twist":
        out = restricted_twist_product(_expect(kind, s, "twistable-pair"))
    else:
        out = fractions_algebra(_expect(kind, s, "brouwerian")).bimonoid
    _write(out, args.output)
    return OK


def cmd_untwist(args) -> int:
    kind, s = resolve(args.file)
    n = _expect(kind, s, "nagata")
    _write(untwist(n), args.output)
    return OK


def cmd_verify(args) -> int:
    kind, s = resolve(args.file)
    if args.property == "roundtrip":
        t = _expect(kind, s, "twistable-pair")
        return _emit([("", check_roundtrip(t))], args.format)
    if args.property == "adjunction":
        m = _as_bimodule(kind, s)
        restricted = m.point is not None
        n = (restricted_nagata_product if restricted else nagata_product)(m, require_maps=True)
        reports = [check_unit_map(n), check_counit(m, restricted), check_triangles(m, restricted)]
        return _emit([("", r) for r in reports], args.format)
    n = s if kind == "nagata" else restricted_nagata_product(_as_bimodule(kind, s),
                                                             require_maps=True)
    reports = [check_unit_map(n), check_unit_surjectivity(n)]
    if n.oplus is not None:
        reports.append(check_decomposition(n))
    return _emit([("", r) for r in reports], args.format)


def cmd_enumerate(args) -> int:
    structures = list(enumerate_structures(args.kind, args.max_size, args.up_to_iso))
    counts: dict[int, int] = {}
    for s in structures:
        counts[s.size] = counts.get(s.size, 0) + 1
    if args.output:
        docs = [to_document(s) for s in structures]
        Path(args.output).write_text(yaml.safe_dump_all(docs, sort_keys=False), encoding="utf-8")
    if args.format == "json":
        print(json.dumps({"kind": args.kind, "up_to_iso": args.up_to_iso,
                          "counts": {str(k): v for k, v in sorted(counts.items())}}))
    else:
        for n in range(1, args.max_size + 1):
            print(f"{args.kind} size {n}: {counts.get(n, 0)}")
    return OK


def cmd_random(args) -> int:
    size = tuple(args.size) if args.kind == "bimodule" else args.size[0]
    _write(random_structure(args.kind, size, args.seed), args.output)
    return OK


def cmd_suite(args) -> int:
    results = run_all()
    for r in results:
        if args.format == "json":
            print(json.dumps({"criterion": r.number, "passed": r.passed, "title": r.title,
                              "checks": len(r.reports),
                              "failures": [dict(subject=s, **f.to_dict()) for s, f in r.failures()]},
                             ensure_ascii=False))
        else:
            print(r.line())
    return OK if all(r.passed for r in results) else FAILED


def cmd_fixtures(args) -> int:
    if args.write:
        root = Path(args.write)
        (root / "broken").mkdir(parents=True, exist_ok=True)
        for name, s in corpus.fixtures().items():
            (root / f"{name}.alg").write_text(dumps(s), encoding="utf-8")
        for c in corpus.corruptions():
            (root / "broken" / f"{c.name}.alg").write_text(dumps(c.structure), encoding="utf-8")
        return OK
    for name, s in corpus.fixtures().items():
        print(f"{name}\t{kind_of(s)}\t{corpus.declared_level(name)}")
    for c in corpus.corruptions():
        print(f"broken/{c.name}\t{c.family}\texpects {c.axiom}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twistkit", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check a structure at a level")
    p.add_argument("file")
    p.add_argument("--level", choices=sorted({l for ls in LEVELS.values() for l in ls}))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build a product or the algebra of fractions")
    p.add_argument("construction", choices=("nagata", "restricted-nagata", "twist",
                                            "restricted-twist", "fractions"))
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("untwist", help="recover the twistable pair of a twist product")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_untwist)

    p = sub.add_parser("verify", help="verify the adjunction, equivalence or round trip")
    p.add_argument("property", choices=("adjunction", "equivalence", "roundtrip"))
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="enumerate small structures")
    p.add_argument("kind", choices=ENUM_KINDS)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("-o", "--output", help="write every structure as a YAML stream")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("random", help="a random structure from a seed")
    p.add_argument("kind", choices=("poset", "posemigroup", "brouwerian", "bimodule"))
    p.add_argument("--size", type=int, nargs="+", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("suite", help="run the acceptance battery")
    p.add_argument("target", choices=("corpus",))
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("fixtures", help="list corpus fixture names")
    p.add_argument("--write", metavar="DIR", help="export every fixture as a structure file")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return BAD_INPUT if e.code else OK
    try:
        return args.func(args)
    except (WorkbenchError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
