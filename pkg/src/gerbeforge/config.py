"""Size caps for the desk-scale computations, overridable via environment."""

from __future__ import annotations

import os

DEFAULT_MAX_ORDER = 96
DEFAULT_AUT_SEARCH_MAX = 24
DEFAULT_SNF_LONG_SIDE = 20000
DEFAULT_CENTER_DIM_CAP = 2500


def max_order() -> int:
    """Largest group order accepted by constructors (env GERBEFORGE_MAX_ORDER)."""
    raw = os.environ.get("GERBEFORGE_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    value = int(raw)
    if value <= 0:
        raise ValueError("GERBEFORGE_MAX_ORDER must be positive")
    return value


def aut_search_max() -> int:
    raw = os.environ.get("GERBEFORGE_AUT_MAX")
    return int(raw) if raw is not None else DEFAULT_AUT_SEARCH_MAX


def snf_long_side() -> int:
    raw = os.environ.get("GERBEFORGE_SNF_CAP")
    return int(raw) if raw is not None else DEFAULT_SNF_LONG_SIDE


def center_dim_cap() -> int:
    raw = os.environ.get("GERBEFORGE_CENTER_CAP")
    return int(raw) if raw is not None else DEFAULT_CENTER_DIM_CAP


class CapExceeded(Exception):
    """A configured size cap was exceeded; CLI maps this to exit code 3."""
