"""Row-level validation of candidate column pairs.

Column names can agree by accident, so every candidate pair must also
survive a look at the data:

* ``value_score`` — for each left-side value, the best token-sort
  similarity against any right-side value, averaged over the left side.
  High when most left values have *some* plausible partner.
* ``fuzzy_jaccard`` — a soft intersection size from greedy one-to-one
  matching of value pairs at or above the row threshold, plugged into the
  Jaccard formula ``m / (|L| + |R| - m)``.  This is the edge strength the
  join graph consumes.

Columns are compared on distinct values only; large columns are first cut
down to a seeded deterministic sample of ``sample_cap`` values.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .catalog import Catalog
from .errors import EmptyColumnError
from .matching import ColumnMatch, MatchConfig
from .similarity import indel_ratio, sorted_token_form

__all__ = [
    "ValidationResult",
    "fuzzy_jaccard",
    "sample_distinct",
    "validate",
    "validate_many",
    "value_score",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ValidationResult:
    """A candidate pair that survived row-level validation."""

    match: ColumnMatch
    value_score: float
    overlap_s: float
    sampled_left: int
    sampled_right: int


def value_score(left_values: Sequence[str], right_values: Sequence[str]) -> float:
    """Mean over left values of the best token-sort similarity on the right.

    Empty strings are dropped first; raises :class:`EmptyColumnError` if
    either side has nothing left.
    """
    lefts = [v for v in left_values if v]
    rights = [v for v in right_values if v]
    if not lefts or not rights:
        raise EmptyColumnError("value_score needs non-empty values on both sides")

    right_forms = [sorted_token_form(v) for v in rights]
    exact = set(right_forms)
    cache: dict[str, float] = {}
    total = 0.0
    for value in lefts:
        form = sorted_token_form(value)
        best = cache.get(form)
        if best is None:
            if form in exact:
                best = 1.0
            else:
                best = 0.0
                flen = len(form)
                for rform in right_forms:
                    # 2*min/(sum) bounds the indel ratio; skip hopeless pairs.
                    denom = flen + len(rform)
                    if denom and 2.0 * min(flen, len(rform)) / denom <= best:
                        continue
                    score = indel_ratio(form, rform)
                    if score > best:
                        best = score
                        if best == 1.0:
                            break
            cache[form] = best
        total += best
    return total / len(lefts)


def fuzzy_jaccard(
    left_values: Iterable[str],
    right_values: Iterable[str],
    row_threshold: float,
) -> float:
    """Jaccard overlap where "equal" means token-sort similarity ≥ threshold.

    Every cross pair at or above the threshold is considered, best first,
    and greedily locked into a one-to-one matching; the matched count ``m``
    then plays the intersection in ``m / (|L| + |R| - m)``.  Tie-breaking
    uses the sorted value pair, which makes the result symmetric in its
    arguments.
    """
    lefts = sorted({v for v in left_values if v})
    rights = sorted({v for v in right_values if v})
    if not lefts or not rights:
        raise EmptyColumnError("fuzzy_jaccard needs non-empty values on both sides")

    left_forms = {v: sorted_token_form(v) for v in lefts}
    right_forms = {v: sorted_token_form(v) for v in rights}
    scored: list[tuple[float, str, str, str, str]] = []
    for lv in lefts:
        lform = left_forms[lv]
        for rv in rights:
            rform = right_forms[rv]
            sim = 1.0 if lform == rform else indel_ratio(lform, rform)
            if sim >= row_threshold:
                a, b = (lv, rv) if lv <= rv else (rv, lv)
                scored.append((-sim, a, b, lv, rv))
    scored.sort()

    used_left: set[str] = set()
    used_right: set[str] = set()
    matched = 0
    for _, _, _, lv, rv in scored:
        if lv in used_left or rv in used_right:
            continue
        used_left.add(lv)
        used_right.add(rv)
        matched += 1
    return matched / (len(lefts) + len(rights) - matched)


def sample_distinct(values: Iterable[str], cap: int, seed_key: str) -> list[str]:
    """Deterministic sample of distinct non-empty values, at most ``cap``.

    Values are deduplicated and sorted before sampling, so the result
    depends only on the value *set* and the seed key, never on row order.
    """
    distinct = sorted({v for v in values if v})
    if len(distinct) <= cap:
        return distinct
    rng = random.Random(seed_key)
    return sorted(rng.sample(distinct, cap))


def validate(
    match: ColumnMatch,
    catalog: Catalog,
    config: MatchConfig | None = None,
) -> ValidationResult | None:
    """Check a candidate column pair against the actual row values.

    Returns ``None`` when the pair is rejected: either side has no usable
    values, or the value score falls below ``row_threshold``.
    """
    cfg = config or MatchConfig()
    left_sample = sample_distinct(
        catalog.column(match.left).values, cfg.sample_cap, f"{cfg.seed}:{match.left}"
    )
    right_sample = sample_distinct(
        catalog.column(match.right).values, cfg.sample_cap, f"{cfg.seed}:{match.right}"
    )
    if not left_sample or not right_sample:
        log.debug("rejected %s ~ %s: empty side", match.left, match.right)
        return None
    score = value_score(left_sample, right_sample)
    if score < cfg.row_threshold:
        log.debug(
            "rejected %s ~ %s: value score %.3f < %.3f",
            match.left,
            match.right,
            score,
            cfg.row_threshold,
        )
        return None
    s = fuzzy_jaccard(left_sample, right_sample, cfg.row_threshold)
    return ValidationResult(
        match=match,
        value_score=score,
        overlap_s=s,
        sampled_left=len(left_sample),
        sampled_right=len(right_sample),
    )


_WORKER_CATALOG: Catalog | None = None
_WORKER_CONFIG: MatchConfig | None = None


def _init_worker(catalog: Catalog, config: MatchConfig) -> None:
    global _WORKER_CATALOG, _WORKER_CONFIG
    _WORKER_CATALOG = catalog
    _WORKER_CONFIG = config


def _validate_in_worker(match: ColumnMatch) -> ValidationResult | None:
    assert _WORKER_CATALOG is not None and _WORKER_CONFIG is not None
    return validate(match, _WORKER_CATALOG, _WORKER_CONFIG)


def validate_many(
    matches: Iterable[ColumnMatch],
    catalog: Catalog,
    config: MatchConfig | None = None,
    jobs: int = 1,
) -> list[ValidationResult]:
    """Validate candidates, optionally across processes.

    Candidates are processed in sorted pair order and results keep that
    order, so the output is identical for any ``jobs`` value.
    """
    cfg = config or MatchConfig()
    ordered = sorted(matches, key=lambda m: (m.left, m.right))
    if jobs <= 1:
        results = [validate(m, catalog, cfg) for m in ordered]
    else:
        with ProcessPoolExecutor(
            max_workers=jobs, initializer=_init_worker, initargs=(catalog, cfg)
        ) as pool:
            results = list(pool.map(_validate_in_worker, ordered))
    return [r for r in results if r is not None]
