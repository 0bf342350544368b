"""CSV/JSON rendering.  Integers go out as decimal strings and rationals as
``p/q`` strings so nothing passes through a float."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Sequence

from cyclecensus.census import CensusTable
from cyclecensus.balance import ResidueReport

__all__ = [
    "fraction_str",
    "write_csv",
    "table_to_csv",
    "table_from_csv",
    "table_to_json",
    "balance_to_csv",
    "balance_to_json",
    "to_json",
]

TABLE_HEADER = ("n", "k", "count")
BALANCE_HEADER = ("n", "r", "count", "ratio", "max_deviation")


def fraction_str(x: Fraction | int) -> str:
    return str(Fraction(x))


def write_csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def table_to_csv(table: CensusTable) -> str:
    rows = (
        (n, k, str(c)) for n, row in enumerate(table.rows) for k, c in enumerate(row)
    )
    return write_csv(TABLE_HEADER, rows)


def table_from_csv(text: str, a: int) -> CensusTable:
    """Inverse of :func:`table_to_csv` (the family bound is not in the file)."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != TABLE_HEADER:
        raise ValueError(f"unexpected header {header}")
    rows: list[list[int]] = []
    for n_s, k_s, c_s in reader:
        n, k = int(n_s), int(k_s)
        while len(rows) <= n:
            rows.append([])
        if k != len(rows[n]):
            raise ValueError(f"cells out of order at n={n}, k={k}")
        rows[n].append(int(c_s))
    return CensusTable(a=a, n_max=len(rows) - 1, rows=tuple(tuple(r) for r in rows))


def table_to_json(table: CensusTable) -> str:
    return to_json(
        {
            "a": table.a,
            "n_max": table.n_max,
            "rows": [[str(c) for c in row] for row in table.rows],
        }
    )


def _balance_rows(reports: Iterable[ResidueReport]):
    for rep in reports:
        dev = fraction_str(rep.max_deviation)
        for r, (c, ratio) in enumerate(zip(rep.counts, rep.ratios)):
            yield rep.n, r, str(c), fraction_str(ratio), dev


def balance_to_csv(reports: Iterable[ResidueReport]) -> str:
    return write_csv(BALANCE_HEADER, _balance_rows(reports))


def balance_to_json(reports: Sequence[ResidueReport]) -> str:
    return to_json(
        {
            "rows": [dict(zip(BALANCE_HEADER, row)) for row in _balance_rows(reports)],
        }
    )
