"""String-similarity primitives for column-name and row-value matching.

Everything in this module is deterministic and self-contained: no model
downloads, no network, no global state beyond a default provider instance.
All similarity functions return floats in ``[0.0, 1.0]`` and are symmetric
in their two string arguments.

The semantic fallback is a hashed character-trigram embedding.  Before
hashing, tokens are passed through a small synonym lexicon so that domain
terms different sources tend to disagree on ("hospital" vs "clinic",
"medication" vs "drug") land on the same vector.  Callers who want a real
embedding model can pass anything satisfying :class:`SemanticProvider`.
"""

from __future__ import annotations

import re
import zlib
from difflib import SequenceMatcher
from typing import Protocol, runtime_checkable

import numpy as np

__all__ = [
    "DEFAULT_SYNONYMS",
    "SemanticProvider",
    "TrigramProvider",
    "gestalt_ratio",
    "indel_ratio",
    "lcs_length",
    "normalize",
    "semantic_sim",
    "sorted_token_form",
    "token_overlap",
    "token_set",
    "token_sort_ratio",
    "trigram_embed",
]

_NON_ALNUM_RUN = re.compile(r"[^0-9a-z]+")
_CAMEL_BOUNDARY = re.compile(r"(?<=[a-z0-9])(?=[A-Z])")

# Canonical forms for terms that independent data sources routinely name
# differently.  Kept deliberately tiny: the point is not coverage but that
# the built-in provider recognises obvious same-entity vocabulary without
# pulling in a model.
DEFAULT_SYNONYMS: dict[str, str] = {
    "hospital": "clinic",
    "infirmary": "clinic",
    "medication": "drug",
    "medicine": "drug",
    "patient": "person",
    "citizen": "person",
    "resident": "person",
    "physician": "doctor",
}


def normalize(text: str) -> str:
    """Lowercase, collapse non-alphanumeric runs to single spaces, trim."""
    return _NON_ALNUM_RUN.sub(" ", text.lower()).strip()


def gestalt_ratio(a: str, b: str) -> float:
    """Gestalt (Ratcliff/Obershelp) similarity of two strings, case-folded.

    This is ``2 * M / (len(a) + len(b))`` where M counts characters in
    recursively matched longest common blocks.  Two empty strings score 1.0.
    """
    a = a.lower()
    b = b.lower()
    if not a and not b:
        return 1.0
    return SequenceMatcher(None, a, b, autojunk=False).ratio()


def lcs_length(a: str, b: str) -> int:
    """Length of the longest common subsequence of ``a`` and ``b``.

    Bit-parallel formulation: the shorter string is encoded as per-character
    bitmasks and a running row of the DP table is kept in a single integer,
    which makes this fast enough to sit inside the row-validation hot loop.
    """
    if not a or not b:
        return 0
    if len(a) > len(b):
        a, b = b, a
    masks: dict[str, int] = {}
    bit = 1
    for ch in a:
        masks[ch] = masks.get(ch, 0) | bit
        bit <<= 1
    width_mask = bit - 1
    row = width_mask
    for ch in b:
        match = masks.get(ch, 0)
        carry = row & match
        row = ((row + carry) | (row & ~match)) & width_mask
    # Zero bits in the final row mark matched positions of the shorter string.
    return len(a) - row.bit_count()


def indel_ratio(a: str, b: str) -> float:
    """Similarity under insertions/deletions only: ``2 * LCS / (|a| + |b|)``."""
    total = len(a) + len(b)
    if total == 0:
        return 1.0
    return 2.0 * lcs_length(a, b) / total


def sorted_token_form(text: str) -> str:
    """Normalize, split on whitespace, sort tokens, re-join with spaces."""
    return " ".join(sorted(normalize(text).split()))


def token_sort_ratio(a: str, b: str) -> float:
    """Indel similarity of the sorted-token forms of ``a`` and ``b``.

    Word order does not matter: ``"John Smith"`` vs ``"Smith John"`` is 1.0.
    """
    return indel_ratio(sorted_token_form(a), sorted_token_form(b))


def token_set(text: str) -> frozenset[str]:
    """Tokens of ``text``, splitting on non-alphanumerics and camelCase."""
    return frozenset(normalize(_CAMEL_BOUNDARY.sub(" ", text)).split())


def token_overlap(a: str, b: str) -> float:
    """Overlap coefficient of the token sets: ``|A & B| / min(|A|, |B|)``.

    Either side empty (no tokens at all) scores 0.0.
    """
    ta = token_set(a)
    tb = token_set(b)
    if not ta or not tb:
        return 0.0
    return len(ta & tb) / min(len(ta), len(tb))


@runtime_checkable
class SemanticProvider(Protocol):
    """Anything that can embed a short string as a fixed-size real vector.

    Implementations must be deterministic for a given input and must return
    vectors of the same ``dimension`` for every call; zero vectors are
    allowed and are treated as "no semantic signal".
    """

    dimension: int

    def embed(self, text: str) -> np.ndarray:  # pragma: no cover - protocol
        ...


class TrigramProvider:
    """Hashed character-trigram embeddings with synonym canonicalization.

    The input is normalized, each token is mapped through the synonym
    lexicon, and the result is padded and sliced into character trigrams.
    Each trigram is hashed (CRC-32) into one of ``dimension`` buckets and
    the count vector is L2-normalized.  Deterministic across processes and
    platforms.
    """

    def __init__(
        self,
        dimension: int = 256,
        synonyms: dict[str, str] | None = None,
    ) -> None:
        if dimension <= 0:
            raise ValueError("dimension must be positive")
        self.dimension = dimension
        self.synonyms = DEFAULT_SYNONYMS if synonyms is None else dict(synonyms)

    def canonical_text(self, text: str) -> str:
        """Normalized text with each token replaced by its canonical form."""
        tokens = normalize(_CAMEL_BOUNDARY.sub(" ", text)).split()
        return " ".join(self.synonyms.get(tok, tok) for tok in tokens)

    def embed(self, text: str) -> np.ndarray:
        canon = self.canonical_text(text)
        vec = np.zeros(self.dimension, dtype=np.float64)
        if len(canon) < 3:
            # Too short to form a trigram on its own; padding would
            # manufacture signal out of nothing.
            return vec
        padded = f" {canon} "
        for i in range(len(padded) - 2):
            gram = padded[i : i + 3]
            bucket = zlib.crc32(gram.encode("utf-8")) % self.dimension
            vec[bucket] += 1.0
        norm = float(np.linalg.norm(vec))
        if norm > 0.0:
            vec /= norm
        return vec


_DEFAULT_PROVIDER = TrigramProvider()


def trigram_embed(text: str) -> np.ndarray:
    """Embed ``text`` with the default :class:`TrigramProvider`."""
    return _DEFAULT_PROVIDER.embed(text)


def semantic_sim(a: str, b: str, provider: SemanticProvider | None = None) -> float:
    """Cosine similarity of provider embeddings, clamped to ``[0, 1]``.

    If either embedding is the zero vector the score is 0.0.
    """
    prov = _DEFAULT_PROVIDER if provider is None else provider
    va = prov.embed(a)
    vb = prov.embed(b)
    na = float(np.linalg.norm(va))
    nb = float(np.linalg.norm(vb))
    if na == 0.0 or nb == 0.0:
        return 0.0
    cos = float(np.dot(va, vb) / (na * nb))
    return min(1.0, max(0.0, cos))
