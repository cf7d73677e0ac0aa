"""Global size limits keeping exhaustive computations desk-scale.

``GK_MAX_MEMORY`` (an integer number of table cells) caps coset tables
and tree slices; the remaining limits are compile-time defaults.
"""

from __future__ import annotations

import os

from .errors import BoundExceededError

MAX_K = 6
MAX_WORD_LENGTH = 24
MAX_ELEMENTARY_ABELIAN_RANK = 10
MAX_DIHEDRAL_HALF_ORDER = 30
EPIMORPHISM_SEARCH_BOUND = 2_000_000
DEFAULT_MAX_TABLE_CELLS = 10_000_000

DEFAULT_MAX_RADIUS = 12
DEFAULT_H_BOUND = 6
DEFAULT_G_BOUND = 4


def max_table_cells() -> int:
    """Cell cap for coset tables and tree slices, from GK_MAX_MEMORY."""
    raw = os.environ.get("GK_MAX_MEMORY")
    if raw is None:
        return DEFAULT_MAX_TABLE_CELLS
    try:
        value = int(raw)
    except ValueError as exc:
        raise BoundExceededError(f"GK_MAX_MEMORY={raw!r} is not an integer") from exc
    if value <= 0:
        raise BoundExceededError(f"GK_MAX_MEMORY must be positive, got {value}")
    return value


def check_table_cells(cells: int) -> None:
    cap = max_table_cells()
    if cells > cap:
        raise BoundExceededError(f"table would need {cells} cells, cap is {cap}")
