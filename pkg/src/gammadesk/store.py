"""JSON Lines persistence for recurrence tables.

Line 1 is a header ``{"family", "generator_version", "base_rows"}``; every
further line is one record ``{"family", "n", "k", "value"}`` with the value as
a decimal string. Rows must be contiguous from n = 1.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile
from typing import IO, Iterable

from . import __version__
from .recurrences import BASE_ROWS, FAMILIES, a_support, b_support

if hasattr(sys, "set_int_max_str_digits"):
    # table entries run to thousands of digits
    sys.set_int_max_str_digits(0)


class CorruptTableError(ValueError):
    def __init__(self, path: str, line: int, reason: str):
        self.path, self.line, self.reason = path, line, reason
        super().__init__(f"{path}:{line}: {reason}")


def header(family: str) -> dict:
    base = {str(n): {str(k): str(v) for k, v in row.items()} for n, row in BASE_ROWS[family].items()}
    return {"family": family, "generator_version": __version__, "base_rows": base}


class TableWriter:
    """Streams rows to a JSONL file, replacing the target atomically on close."""

    def __init__(self, path: str, family: str):
        self.path = path
        self.family = family
        d = os.path.dirname(os.path.abspath(path))
        os.makedirs(d, exist_ok=True)
        fd, self._tmp = tempfile.mkstemp(dir=d, prefix=".table-", suffix=".jsonl")
        self._fh: IO[str] = os.fdopen(fd, "w", encoding="utf-8", newline="\n")
        self._fh.write(json.dumps(header(family)) + "\n")

    def write_row(self, n: int, row: dict) -> None:
        fam = self.family
        for k in sorted(row):
            self._fh.write(json.dumps({"family": fam, "n": n, "k": k, "value": str(row[k])}) + "\n")

    def close(self) -> None:
        self._fh.close()
        os.replace(self._tmp, self.path)

    def abort(self) -> None:
        self._fh.close()
        os.unlink(self._tmp)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, *_):
        if exc_type is None:
            self.close()
        else:
            self.abort()


def save_table(path: str, family: str, rows: Iterable[tuple[int, dict]]) -> None:
    with TableWriter(path, family) as w:
        for n, row in rows:
            w.write_row(n, row)


def load_table(path: str, family: str | None = None) -> tuple[str, dict]:
    """Read and validate a table file; returns (family, {n: {k: value}})."""
    rows: dict = {}
    fam = None
    seen = set()
    last = None

    def complete(n: int, lineno: int) -> None:
        support = a_support(n) if fam == "a" else b_support(n)
        if set(rows[n]) != set(support):
            raise CorruptTableError(path, lineno, f"row {n} is incomplete or has entries outside the support")

    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line:
                raise CorruptTableError(path, lineno, "empty line")
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as e:
                raise CorruptTableError(path, lineno, f"invalid JSON ({e.msg})") from None
            if not isinstance(rec, dict):
                raise CorruptTableError(path, lineno, "record is not an object")
            if lineno == 1:
                if set(rec) != {"family", "generator_version", "base_rows"}:
                    raise CorruptTableError(path, lineno, "missing header record")
                fam = rec["family"]
                if fam not in FAMILIES:
                    raise CorruptTableError(path, lineno, f"unknown family {fam!r}")
                if family is not None and fam != family:
                    raise CorruptTableError(path, lineno, f"family {fam!r} does not match requested {family!r}")
                continue
            if set(rec) != {"family", "n", "k", "value"}:
                raise CorruptTableError(path, lineno, "malformed record")
            if rec["family"] != fam:
                raise CorruptTableError(path, lineno, "family differs from header")
            n, k, value = rec["n"], rec["k"], rec["value"]
            if not (isinstance(n, int) and isinstance(k, int) and isinstance(value, str)):
                raise CorruptTableError(path, lineno, "n, k must be integers and value a decimal string")
            try:
                v = int(value, 10)
            except ValueError:
                raise CorruptTableError(path, lineno, f"value {value[:20]!r} is not an integer") from None
            if (n, k) in seen:
                raise CorruptTableError(path, lineno, f"duplicate entry ({n}, {k})")
            seen.add((n, k))
            if last is None:
                if n != 1:
                    raise CorruptTableError(path, lineno, "rows must start at n = 1")
            elif n < last:
                raise CorruptTableError(path, lineno, f"row {n} out of order")
            elif n > last:
                if n != last + 1:
                    raise CorruptTableError(path, lineno, f"row {n} is not contiguous")
                complete(last, lineno)
            last = n
            rows.setdefault(n, {})[k] = v
    if fam is None:
        raise CorruptTableError(path, 1, "empty file")
    if last is not None:
        complete(last, lineno)
    return fam, rows
