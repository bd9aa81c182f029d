"""Term normalization and syntactic similarity.

Every name that enters a comparison goes through ``normalize`` first, so
"Reading ()", "reading()" and "  reading " all collapse to "reading".
"""

from __future__ import annotations

import re

_WS_RUN = re.compile(r"\s+")
_TRAILING_PARENS = re.compile(r"\s*\(\s*\)$")


def normalize(term: str) -> str:
    """Case-fold, trim, collapse whitespace, drop one trailing "()"."""
    t = term.strip().casefold()
    t = _WS_RUN.sub(" ", t)
    t = _TRAILING_PARENS.sub("", t)
    return t


def syntactic_similarity(t1: str, t2: str) -> int:
    """1 iff the two terms have the same normalized surface form."""
    return 1 if normalize(t1) == normalize(t2) else 0
