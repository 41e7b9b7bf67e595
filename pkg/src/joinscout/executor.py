"""Materialize a join path as a concrete result table.

Foreign-key hops are exact inner equi-joins; the right side's copy of the
key columns is dropped since it duplicates values already present.  Fuzzy
hops match each left value to its single best right value by token-sort
similarity, keep matches at or above the row threshold, and append a
``_fuzzy_score_<hop>`` column recording the match strength.

Everything stays text, so a result round-trips through CSV unchanged.
Output row order is deterministic: accumulated rows keep their order and
multiple foreign-key matches expand in right-table row order.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO

from .catalog import Catalog, TableRef
from .errors import UnknownTableError
from .graph import EdgeKind, JoinPath
from .matching import MatchConfig
from .similarity import indel_ratio, sorted_token_form

__all__ = ["ResultTable", "execute_path", "write_csv"]

_MISSING = object()


@dataclass
class ResultTable:
    """Join output: origin-tagged columns and all-text rows."""

    columns: list[tuple[TableRef, str]]
    rows: list[tuple[str, ...]]
    fuzzy_score_columns: list[str] = field(default_factory=list)

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def header(self) -> list[str]:
        """Column names, qualified just enough to be unambiguous."""
        by_name = Counter(name for _, name in self.columns)
        by_table = Counter((ref.table, name) for ref, name in self.columns)
        out = []
        for ref, name in self.columns:
            if by_name[name] == 1:
                out.append(name)
            elif by_table[(ref.table, name)] == 1:
                out.append(f"{ref.table}.{name}")
            else:
                out.append(f"{ref.database}.{ref.table}.{name}")
        return out


def _best_fuzzy_match(
    left_form: str,
    right_values: list[str],
    right_forms: dict[str, str],
) -> tuple[float, str]:
    """Best (score, value) over right values.

    ``right_values`` must be sorted: on score ties the first hit wins, which
    is exactly the lexicographically smallest value.
    """
    best_score = -1.0
    best_value = ""
    for rv in right_values:
        rform = right_forms[rv]
        score = 1.0 if left_form == rform else indel_ratio(left_form, rform)
        if score > best_score:
            best_score = score
            best_value = rv
            if best_score == 1.0:
                break
    return best_score, best_value


def execute_path(
    path: JoinPath,
    catalog: Catalog,
    config: MatchConfig | None = None,
) -> ResultTable:
    """Run the joins along ``path`` and return the combined table.

    Raises :class:`UnknownTableError` if the path mentions tables the
    catalog does not have.
    """
    cfg = config or MatchConfig()
    if not path.tables:
        raise UnknownTableError("path has no tables")
    start_ref = path.tables[0]
    start = catalog.table(start_ref)
    columns: list[tuple[TableRef, str]] = [(start_ref, n) for n in start.column_names]
    acc_rows: list[tuple[str, ...]] = [tuple(r) for r in start.rows()]
    # Raw row of the most recently joined table, aligned with acc_rows.
    # Join columns are read from here, so it does not matter whether the
    # visible output dropped them.
    last_rows: list[tuple[str, ...]] = list(acc_rows)
    score_columns: list[str] = []

    for hop, edge in enumerate(path.edges, start=1):
        left_ref = path.tables[hop - 1]
        right_ref = path.tables[hop]
        pairs = edge.columns_from(left_ref)
        left_table = catalog.table(left_ref)
        right_table = catalog.table(right_ref)
        left_pos = [left_table.column_names.index(l) for l, _ in pairs]
        right_pos = [right_table.column_names.index(r) for _, r in pairs]
        right_rows = [tuple(r) for r in right_table.rows()]
        new_acc: list[tuple[str, ...]] = []
        new_last: list[tuple[str, ...]] = []

        if edge.kind is EdgeKind.FK:
            key_index: dict[tuple[str, ...], list[int]] = {}
            for ridx, rrow in enumerate(right_rows):
                key = tuple(rrow[p] for p in right_pos)
                if all(key):
                    key_index.setdefault(key, []).append(ridx)
            dropped = set(right_pos)
            keep = [i for i in range(len(right_table.column_names)) if i not in dropped]
            for arow, lrow in zip(acc_rows, last_rows):
                key = tuple(lrow[p] for p in left_pos)
                if not all(key):
                    continue
                for ridx in key_index.get(key, ()):
                    rrow = right_rows[ridx]
                    new_acc.append(arow + tuple(rrow[i] for i in keep))
                    new_last.append(rrow)
            columns.extend((right_ref, right_table.column_names[i]) for i in keep)
        else:
            rpos = right_pos[0]
            lpos = left_pos[0]
            first_row_of: dict[str, int] = {}
            for ridx, rrow in enumerate(right_rows):
                value = rrow[rpos]
                if value and value not in first_row_of:
                    first_row_of[value] = ridx
            right_values = sorted(first_row_of)
            right_forms = {v: sorted_token_form(v) for v in right_values}
            match_cache: dict[str, tuple[float, str] | None] = {}
            for arow, lrow in zip(acc_rows, last_rows):
                lval = lrow[lpos]
                if not lval or not right_values:
                    continue
                hit = match_cache.get(lval, _MISSING)
                if hit is _MISSING:
                    score, rval = _best_fuzzy_match(
                        sorted_token_form(lval), right_values, right_forms
                    )
                    hit = (score, rval) if score >= cfg.row_threshold else None
                    match_cache[lval] = hit
                if hit is None:
                    continue
                score, rval = hit
                rrow = right_rows[first_row_of[rval]]
                new_acc.append(arow + rrow + (f"{score:.3f}",))
                new_last.append(rrow)
            score_name = f"_fuzzy_score_{hop}"
            columns.extend((right_ref, n) for n in right_table.column_names)
            columns.append((right_ref, score_name))
            score_columns.append(score_name)

        acc_rows = new_acc
        last_rows = new_last

    return ResultTable(columns=columns, rows=acc_rows, fuzzy_score_columns=score_columns)


def write_csv(
    result: ResultTable,
    destination: str | Path | IO[str],
    limit: int | None = None,
) -> int:
    """Write the result as CSV; returns the number of data rows written.

    ``limit`` truncates the output for previews; header always included.
    """
    rows = result.rows if limit is None else result.rows[: max(limit, 0)]
    if hasattr(destination, "write"):
        _write_rows(destination, result.header(), rows)  # type: ignore[arg-type]
    else:
        with Path(destination).open("w", newline="", encoding="utf-8") as fh:
            _write_rows(fh, result.header(), rows)
    return len(rows)


def _write_rows(fh: IO[str], header: list[str], rows: list[tuple[str, ...]]) -> None:
    writer = csv.writer(fh)
    writer.writerow(header)
    writer.writerows(rows)
