"""Command-line front end.

    milnorkit compute  LINK.json --degree 4 [--format json|text]
    milnorkit compute  --braid "s1 s1" --strands 2
    milnorkit basing   LINK.json --cap 6 [--relative OTHER.json]
    milnorkit compare  A.json B.json --n 2
    milnorkit corpus   --dir DIR --degree 4 [--cache DIR] [--out DIR]

Exit codes: 0 ok, 1 corpus failures, 2 parse error, 3 invalid diagram,
4 degree overflow, 5 component mismatch, 6 comparison hypothesis unmet.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time
from pathlib import Path

from . import basing
from .config import DEFAULT_CAP, VERSION
from .diagram import LinkDiagram, parse_braid, parse_pd
from .errors import (
    ComponentMismatch,
    DegreeOverflow,
    HypothesisUnmet,
    InvalidDiagram,
    LengthOverflow,
    ParseError,
)
from .milnor import index_key, table

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_OVERFLOW = 4
EXIT_MISMATCH = 5
EXIT_HYPOTHESIS = 6

DEFAULT_DEGREE = 4


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _classify(exc: Exception) -> int:
    if isinstance(exc, InvalidDiagram):
        return EXIT_INVALID
    if isinstance(exc, (DegreeOverflow, LengthOverflow)):
        return EXIT_OVERFLOW
    if isinstance(exc, ComponentMismatch):
        return EXIT_MISMATCH
    if isinstance(exc, HypothesisUnmet):
        return EXIT_HYPOTHESIS
    return EXIT_PARSE


def _read_diagram(path: str) -> LinkDiagram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_pd(text)


def _input_diagram(args) -> LinkDiagram:
    if args.braid is not None:
        if args.input is not None:
            raise ParseError("give either a file or --braid, not both")
        if args.strands is None:
            raise ParseError("--braid needs --strands")
        try:
            return parse_braid(args.braid, args.strands)
        except IndexError as exc:
            raise ParseError(str(exc)) from None
    if args.input is None:
        raise ParseError("no input: give a PD JSON file or --braid")
    return _read_diagram(args.input)


# ---------------------------------------------------------------------------
# cache


def cache_key(d: LinkDiagram, degree: int) -> str:
    h = hashlib.sha256()
    h.update(d.canonical_bytes())
    h.update(f"\0degree={degree}\0version={VERSION}".encode())
    return h.hexdigest()


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cache_lookup(cache_dir: Path, key: str) -> str | None:
    path = cache_dir / f"{key}.json"
    try:
        entry = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError):
        return None
    if entry.get("key") != key or not isinstance(entry.get("value"), str):
        return None
    return entry["value"]


def cache_store(cache_dir: Path, key: str, value: str) -> None:
    path = cache_dir / f"{key}.json"
    if path.exists():  # entries are immutable
        return
    entry = {"key": key, "value": value, "timestamp": time.time()}
    _atomic_write(path, json.dumps(entry, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_compute(args) -> int:
    d = _input_diagram(args)
    t = table(d, args.degree)
    if args.format == "text":
        print(t.to_text())
    else:
        print(t.to_json())
    return EXIT_OK


def cmd_basing(args) -> int:
    d = _input_diagram(args)
    if args.relative:
        report = basing.relative_max_basing(d, _read_diagram(args.relative), args.cap)
    else:
        report = basing.max_basing_rel_unlink(d, args.cap)
    print(report.to_json())
    return EXIT_OK


def cmd_compare(args) -> int:
    a, b = _read_diagram(args.first), _read_diagram(args.second)
    try:
        equal = basing.mu_n_equal(a, b, args.n)
    except HypothesisUnmet as exc:
        key = index_key(exc.index, a.component_count) if exc.index else None
        print(json.dumps({"n": args.n, "equal": None, "hypothesis_unmet": key}, sort_keys=True))
        raise
    print(json.dumps({"n": args.n, "equal": equal}, sort_keys=True))
    return EXIT_OK


def run_corpus(directory: Path, degree: int, cache_dir: Path | None, out_dir: Path) -> dict:
    inputs = sorted(p for p in directory.iterdir() if p.suffix == ".json" and p.is_file())
    computed = cached = 0
    failures = []
    for path in inputs:
        try:
            d = _read_diagram(str(path))
            key = cache_key(d, degree)
            payload = cache_lookup(cache_dir, key) if cache_dir else None
            if payload is None:
                payload = table(d, degree).to_json()
                if cache_dir:
                    cache_store(cache_dir, key, payload)
                computed += 1
            else:
                cached += 1
            _atomic_write(out_dir / f"{path.stem}.table.json", payload + "\n")
        except Exception as exc:  # recorded per file, the run goes on
            failures.append({"file": path.name, "error": f"{type(exc).__name__}: {exc}"})
    return {"computed": computed, "cached": cached, "failures": failures, "total": len(inputs)}


def cmd_corpus(args) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        raise ParseError(f"{directory} is not a directory")
    out_dir = Path(args.out) if args.out else Path("milnorkit-results")
    cache_dir = Path(args.cache) if args.cache else None
    summary = run_corpus(directory, args.degree, cache_dir, out_dir)
    print(json.dumps(summary, sort_keys=True))
    return EXIT_FAILURES if summary["failures"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="milnorkit", description="Milnor invariants of links.")
    p.add_argument("--version", action="version", version=f"milnorkit {VERSION}")
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("input", nargs="?", help="PD JSON file")
        sp.add_argument("--braid", help='braid word such as "s1 s2^-1"')
        sp.add_argument("--strands", type=int)

    c = sub.add_parser("compute", help="print the mu / Delta / mu-bar table")
    add_input(c)
    c.add_argument("--degree", type=int, default=DEFAULT_DEGREE, help="longest multi-index")
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.set_defaults(func=cmd_compute)

    b = sub.add_parser("basing", help="maximal basing length")
    add_input(b)
    b.add_argument("--cap", type=int, default=DEFAULT_CAP)
    b.add_argument("--relative", metavar="OTHER", help="compare against another link")
    b.set_defaults(func=cmd_basing)

    q = sub.add_parser("compare", help="do the length n+1 invariants agree")
    q.add_argument("first")
    q.add_argument("second")
    q.add_argument("--n", type=int, default=2)
    q.set_defaults(func=cmd_compare)

    r = sub.add_parser("corpus", help="tables for every PD file in a directory")
    r.add_argument("--dir", required=True)
    r.add_argument("--degree", type=int, default=DEFAULT_DEGREE)
    r.add_argument("--cache")
    r.add_argument("--out")
    r.set_defaults(func=cmd_corpus)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InvalidDiagram, DegreeOverflow, LengthOverflow,
            ComponentMismatch, HypothesisUnmet, ValueError) as exc:
        code = _classify(exc)
        print(f"milnorkit: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
