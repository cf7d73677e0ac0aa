"""Small GF(2) linear algebra helpers on int-encoded bit vectors."""

from __future__ import annotations

from typing import Iterable, List


def gf2_reduce(vec: int, basis: List[int]) -> int:
    """Reduce vec against a basis kept in leading-bit echelon form."""
    for b in basis:
        if vec.bit_length() == b.bit_length():
            vec ^= b
    return vec


def gf2_extend_basis(vec: int, basis: List[int]) -> bool:
    """Add vec to the basis if independent; return True when added.

    The basis list stays sorted by decreasing leading bit so that
    gf2_reduce can run in one pass.
    """
    residue = gf2_reduce(vec, basis)
    if residue == 0:
        return False
    basis.append(residue)
    basis.sort(key=int.bit_length, reverse=True)
    return True


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of the given bit vectors over GF(2)."""
    basis: List[int] = []
    for row in rows:
        gf2_extend_basis(row, basis)
    return len(basis)


def gf2_in_span(vec: int, rows: Iterable[int]) -> bool:
    """Whether vec lies in the GF(2) span of rows."""
    basis: List[int] = []
    for row in rows:
        gf2_extend_basis(row, basis)
    return gf2_reduce(vec, basis) == 0


__all__ = ["gf2_reduce", "gf2_extend_basis", "gf2_rank", "gf2_in_span"]
