"""Command-line front end.

Exit status: 0 when every requested check passes, 1 on an invariant
violation, 2 on a configuration or usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .errors import ConfigurationError
from .hermitian_catalog import _default_catalog, build_pair_from_key, load_catalog, parse_pair_label
from .octonion_e6 import DEFAULT_SEED
from .reports import (MODULES, TABLE1_COLUMNS, report_document, run_verify, table1_rows,
                      to_tsv, validate_catalog, verify_document)

EXIT_OK, EXIT_VIOLATION, EXIT_CONFIG = 0, 1, 2


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_bytes(text.encode("utf-8"))
    else:
        sys.stdout.write(text)


def _catalog(args) -> dict:
    return load_catalog(args.catalog) if args.catalog else _default_catalog()


def _int(text: str) -> int:
    return int(text, 0)


def cmd_table1(args) -> int:
    rows = table1_rows(_catalog(args))
    if args.format == "tsv":
        _emit(to_tsv(rows, TABLE1_COLUMNS), args.out)
    else:
        _emit(canonical_json({"schema_version": "1.0", "rows": rows}), args.out)
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_VIOLATION


def cmd_verify(args) -> int:
    data = _catalog(args)
    pairs = validate_catalog(data)
    modules = set(args.module) if args.module else set(MODULES)
    unknown = modules - set(MODULES)
    if unknown:
        raise ConfigurationError(f"unknown module(s) {sorted(unknown)}; choose from {MODULES}")
    include_global = args.pair is None
    if args.pair is not None:
        pairs = [parse_pair_label(args.pair, args.rank_params, data)]
    results = run_verify(pairs, data, modules, args.seed, include_global)
    doc = verify_document(results)
    if args.format == "tsv":
        rows = [{k: v for k, v in s.items() if k != "violations"} for s in doc["suites"]]
        _emit(to_tsv(rows, ("name", "scope", "passed", "violation_count", "seconds")), args.out)
    else:
        _emit(canonical_json(doc), args.out)
    return EXIT_OK if doc["passed"] else EXIT_VIOLATION


def cmd_report(args) -> int:
    if args.pair is None:
        raise ConfigurationError("report needs --pair")
    pair = parse_pair_label(args.pair, args.rank_params, _catalog(args))
    doc = report_document(pair, args.n, args.r, args.seed)
    if args.format == "tsv":
        flat = [{"section": k, "value": json.dumps(v, sort_keys=True)} for k, v in
                sorted(doc.items())]
        _emit(to_tsv(flat, ("section", "value")), args.out)
    else:
        _emit(canonical_json(doc), args.out)
    failed = [k for k, v in doc["verdict"].items() if v is False]
    return EXIT_VIOLATION if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--catalog", metavar="PATH", help="alternative catalog JSON file")
    common.add_argument("--seed", type=_int, default=DEFAULT_SEED,
                        help="seed for the randomized octonion suites")

    pair_opts = argparse.ArgumentParser(add_help=False)
    pair_opts.add_argument("--pair", help="e.g. E6, E7, SU(2,3), Sp(8,R), SO*(10), or a "
                                          "family key with --rank-params")
    pair_opts.add_argument("--rank-params", metavar="P,Q|N")

    parser = argparse.ArgumentParser(prog="hermitian-cascade",
                                     description="Exact combinatorics of Hermitian pairs.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table1", parents=[common], help="reproduce the table of orthogonal sequences")
    v = sub.add_parser("verify", parents=[common, pair_opts], help="run the property suites")
    v.add_argument("--module", action="append", choices=MODULES,
                   help="restrict to a module (repeatable)")
    r = sub.add_parser("report", parents=[common, pair_opts], help="full report for one pair")
    r.add_argument("--n", type=int, default=2, help="complex dimension of the ball quotient")
    r.add_argument("--r", type=int, help="restrict the submodule section to this r")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"table1": cmd_table1, "verify": cmd_verify, "report": cmd_report}[args.command]
    try:
        return handler(args)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
