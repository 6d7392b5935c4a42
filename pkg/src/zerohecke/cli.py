"""
Batch command-line front end.

Commands
--------
expand              print one demipotent in the pi-basis expansion style
nilpotence-table    per-diagram nilpotence degrees for a range of sizes
verify              run named check suites; exit 0 only if everything holds
export-idempotents  write one JSON record per diagram into a directory

Exit status: 0 all checks pass, 1 a mathematical check failed, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .algebra import to_json_dict
from .diagrams import (
    ORIENTATIONS,
    all_diagrams,
    check_diagram,
    demipotent,
    idempotent,
    nilpotence_degree,
)
from .render import (
    degree_rows,
    degree_summary,
    degree_table_text,
    element_csv_rows,
    element_text,
)
from .suites import SUITE_NAMES, run_suites

DEFAULT_MAX_SIZE = 8
WARN_SIZE = 7


class UsageError(Exception):
    pass


def _check_size(n: int, max_size: int) -> None:
    if not 2 <= n <= max_size:
        raise UsageError(f"--n must be between 2 and {max_size} (got {n})")
    if n > WARN_SIZE:
        print(
            f"warning: n={n} works on a monoid of size {_factorial(n)}; "
            "expect long runtimes and high memory use",
            file=sys.stderr,
        )


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text)
        return
    try:
        Path(out).write_text(text + ("\n" if not text.endswith("\n") else ""))
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from exc


def _csv_text(header: list, rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


# -- subcommands --------------------------------------------------------------


def _parse_diagram(raw: str) -> str:
    # 'p'/'m' spellings (as used in export filenames) avoid shell/argparse
    # trouble with values made of '-' characters
    translated = raw.replace("p", "+").replace("m", "-")
    try:
        return check_diagram(translated)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _cmd_expand(args) -> int:
    _check_size(args.n, args.max_size)
    diagram = _parse_diagram(args.diagram)
    if len(diagram) != args.n - 1:
        raise UsageError(
            f"diagram {diagram!r} has {len(diagram)} nodes; --n {args.n} needs {args.n - 1}"
        )
    x = demipotent(diagram, args.orientation)
    if args.format == "text":
        _emit(element_text(x), args.out)
    elif args.format == "json":
        _emit(
            json.dumps(
                {
                    "n": args.n,
                    "diagram": diagram,
                    "orientation": args.orientation,
                    "text": element_text(x),
                    "element": to_json_dict(x),
                },
                indent=2,
            ),
            args.out,
        )
    else:
        _emit(_csv_text(["word", "coeff"], element_csv_rows(x)), args.out)
    return 0


def _cmd_nilpotence_table(args) -> int:
    _check_size(args.max_n, args.max_size)
    rows = degree_rows(args.max_n, args.orientation)
    if args.format == "text":
        _emit(degree_table_text(rows), args.out)
    elif args.format == "json":
        payload = {
            "orientation": args.orientation,
            "rows": [
                {"n": r.n, "diagram": r.diagram, "degree": r.degree, "bound": r.bound}
                for r in rows
            ],
            "summaries": {
                str(n): {
                    "all": degree_summary(rows, n)[0],
                    "first_node_plus_half": degree_summary(rows, n)[1],
                }
                for n in range(2, args.max_n + 1)
            },
        }
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        _emit(
            _csv_text(
                ["n", "diagram", "degree", "bound"],
                [[r.n, r.diagram, r.degree, r.bound] for r in rows],
            ),
            args.out,
        )
    return 0


def _cmd_verify(args) -> int:
    _check_size(args.n, args.max_size)
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    results = run_suites(
        names, args.n, args.orientation, jobs=args.jobs, fail_fast=args.fail_fast
    )
    passed = all(r.passed for r in results)
    if args.format == "text":
        lines = []
        for r in results:
            lines.append(
                f"suite {r.name} (n={r.n}, {r.orientation}): "
                f"{'PASS' if r.passed else 'FAIL'} [{r.elapsed_seconds:.2f}s]"
            )
            lines.extend(f"  {d}" for d in r.details)
        lines.append(f"overall: {'PASS' if passed else 'FAIL'}")
        _emit("\n".join(lines), args.out)
    elif args.format == "json":
        _emit(
            json.dumps(
                {
                    "n": args.n,
                    "orientation": args.orientation,
                    "passed": passed,
                    "suites": [r.to_dict() for r in results],
                },
                indent=2,
            ),
            args.out,
        )
    elif len(results) == 1 and results[0].report_csv is not None:
        # a single orthogonality run exports the per-diagram table
        header, rows = results[0].report_csv
        _emit(_csv_text(header, rows), args.out)
    else:
        _emit(
            _csv_text(
                ["suite", "n", "orientation", "passed", "elapsed_seconds"],
                [
                    [r.name, r.n, r.orientation, int(r.passed), f"{r.elapsed_seconds:.3f}"]
                    for r in results
                ],
            ),
            args.out,
        )
    return 0 if passed else 1


def _diagram_filename(diagram: str) -> str:
    return diagram.replace("+", "p").replace("-", "m") + ".json"


def _cmd_export_idempotents(args) -> int:
    _check_size(args.n, args.max_size)
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise UsageError(f"cannot create {out_dir}: {exc}") from exc
    manifest = {"n": args.n, "orientation": args.orientation, "files": []}
    for diagram in all_diagrams(args.n):
        record = {
            "diagram": diagram,
            "degree": nilpotence_degree(diagram, args.orientation),
            "orientation": args.orientation,
            "element": to_json_dict(idempotent(diagram, args.orientation)),
        }
        name = _diagram_filename(diagram)
        try:
            (out_dir / name).write_text(json.dumps(record, indent=2) + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write {out_dir / name}: {exc}") from exc
        manifest["files"].append({"diagram": diagram, "file": name})
    (out_dir / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"wrote {len(manifest['files'])} records to {out_dir}")
    return 0


# -- parser ----------------------------------------------------------------------


def _add_common(sub, *, jobs: bool = False) -> None:
    sub.add_argument(
        "--orientation", choices=ORIENTATIONS, default="standard",
        help="which of the two demipotent families to use",
    )
    sub.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default text)",
    )
    sub.add_argument("--out", metavar="PATH", help="write output to a file")
    sub.add_argument(
        "--max-size", type=int, default=DEFAULT_MAX_SIZE,
        help=f"refuse sizes beyond this bound (default {DEFAULT_MAX_SIZE})",
    )
    if jobs:
        sub.add_argument(
            "--jobs", type=int, default=1,
            help="worker processes for the pairwise checks (default 1)",
        )
        sub.add_argument(
            "--fail-fast", action="store_true",
            help="stop at the first failed check",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerohecke",
        description="Exact demipotent/idempotent computations for the "
        "anti-sorting monoid algebra on n letters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print one demipotent expansion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--diagram", required=True,
        help="sign string such as '+-'; 'p'/'m' letters are accepted too "
        "(write --diagram mm or --diagram=-+- for minus-leading strings)",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("nilpotence-table", help="nilpotence degrees by size")
    p.add_argument("--max-n", type=int, default=7)
    _add_common(p)
    p.set_defaults(func=_cmd_nilpotence_table)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--suite", choices=("all",) + SUITE_NAMES, default="all",
        help="which suite to run (default all)",
    )
    _add_common(p, jobs=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "export-idempotents", help="write per-diagram idempotent JSON records"
    )
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_export_idempotents)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return 2
    if args.command == "export-idempotents" and not args.out:
        print("error: export-idempotents requires --out DIRECTORY", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
