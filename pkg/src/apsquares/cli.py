"""Command-line front end: solve a range of r, print rows, compare references.

Exit codes: 0 success, 1 usage or file errors, 2 reference mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .solver import Solution, solve_range, verify_solution

__all__ = ["RunConfig", "ReferenceTableError", "load_reference", "run", "main"]

_CSV_HEADER = "r,x_abs,y,n"


@dataclass(frozen=True)
class RunConfig:
    r_min: int
    r_max: int
    format: str = "table"
    include_composite: bool = False
    jobs: int = 1
    compare: str | None = None
    verify: bool = False


class ReferenceTableError(ValueError):
    """Raised when a reference CSV is unreadable, malformed, or fails re-verification."""


def load_reference(path: str | Path) -> list[Solution]:
    """Parse a reference CSV and re-verify every row against the equation."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ReferenceTableError(f"cannot read reference file {path}: {exc}") from exc
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != _CSV_HEADER:
        raise ReferenceTableError(f"reference file {path} must start with '{_CSV_HEADER}'")
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 4:
            raise ReferenceTableError(f"{path}:{i}: expected 4 fields, got {len(parts)}")
        try:
            r, x_abs, y, n = (int(p) for p in parts)
        except ValueError as exc:
            raise ReferenceTableError(f"{path}:{i}: non-integer field in '{line}'") from exc
        if not verify_solution(x_abs, y, r, n):
            raise ReferenceTableError(
                f"{path}:{i}: row ({r}, {x_abs}, {y}, {n}) fails verification"
            )
        rows.append(Solution(r, x_abs, y, n))
    return rows


def _format_csv(rows: list[Solution]) -> str:
    out = [_CSV_HEADER]
    out.extend(f"{s.r},{s.x_abs},{s.y},{s.n}" for s in rows)
    return "\n".join(out) + "\n"


def _format_json(rows: list[Solution]) -> str:
    payload = [{"r": s.r, "x_abs": s.x_abs, "y": s.y, "n": s.n} for s in rows]
    return json.dumps(payload, indent=2) + "\n"


def _format_table(rows: list[Solution]) -> str:
    headers = ("r", "x_abs", "y", "n")
    cells = [(str(s.r), str(s.x_abs), str(s.y), str(s.n)) for s in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) if cells else len(h)
              for i, h in enumerate(headers)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    lines.extend("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells)
    return "\n".join(lines) + "\n"


_FORMATTERS = {"csv": _format_csv, "json": _format_json, "table": _format_table}


def run(config: RunConfig, out=None, err=None) -> int:
    """Execute one solver run; returns the process exit status."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err

    reference = None
    if config.compare is not None:
        try:
            reference = load_reference(config.compare)
        except ReferenceTableError as exc:
            print(f"error: {exc}", file=err)
            return 1

    def progress(r: int, batch: list[Solution]) -> None:
        for s in batch:
            print(f"r={s.r}: x={s.x_abs} y={s.y} n={s.n}", file=err)
        if r % 500 == 0:
            print(f"... r={r} done", file=err)

    rows = solve_range(
        config.r_min,
        config.r_max,
        include_composite=config.include_composite,
        jobs=config.jobs,
        progress=progress,
    )

    if config.verify:
        for s in rows:
            if not verify_solution(s.x_abs, s.y, s.r, s.n):
                print(f"error: produced row {s} fails verification", file=err)
                return 1
        print(f"verified {len(rows)} rows", file=err)

    out.write(_FORMATTERS[config.format](rows))

    if reference is not None:
        in_range = [s for s in reference if config.r_min <= s.r <= config.r_max]
        produced, expected = set(rows), set(in_range)
        missing = sorted(expected - produced, key=lambda s: (s.r, s.n, s.y, s.x_abs))
        extra = sorted(produced - expected, key=lambda s: (s.r, s.n, s.y, s.x_abs))
        for s in missing:
            print(f"missing: r={s.r} x_abs={s.x_abs} y={s.y} n={s.n}", file=err)
        for s in extra:
            print(f"extra: r={s.r} x_abs={s.x_abs} y={s.y} n={s.n}", file=err)
        print(f"{len(produced & expected)} rows matched", file=err)
        if missing or extra:
            return 2
    return 0


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags by default; 2 is reserved for mismatches.
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="apsquares",
        description="Find primitive non-trivial solutions of "
        "(x-r)^2 + x^2 + (x+r)^2 = y^n over a range of r.",
    )
    parser.add_argument("--r-min", type=int, required=True, help="first r, >= 1")
    parser.add_argument("--r-max", type=int, required=True, help="last r, >= --r-min")
    parser.add_argument("--format", choices=sorted(_FORMATTERS), default="table")
    parser.add_argument(
        "--include-composite",
        action="store_true",
        help="also list composite-exponent aliases of rows whose y is a perfect power",
    )
    parser.add_argument("--jobs", type=int, default=1, help="worker processes")
    parser.add_argument("--compare", metavar="CSV", help="reference table to diff against")
    parser.add_argument(
        "--verify", action="store_true", help="re-check every produced row before printing"
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if ns.r_min < 1 or ns.r_min > ns.r_max:
        print("error: need 1 <= --r-min <= --r-max", file=sys.stderr)
        return 1
    if ns.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return 1
    config = RunConfig(
        r_min=ns.r_min,
        r_max=ns.r_max,
        format=ns.format,
        include_composite=ns.include_composite,
        jobs=ns.jobs,
        compare=ns.compare,
        verify=ns.verify,
    )
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
