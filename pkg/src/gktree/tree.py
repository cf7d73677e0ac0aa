"""Cayley-tree slices keyed by reduced words, with coset colorings.

Vertices of the order-k tree correspond one-to-one with reduced words:
the root is the identity, and the children of a vertex are its
extensions by each generator other than its last letter.  Neighbor
labeling follows ascending generator index (any fixed convention gives
an isomorphic labeling).  A coloring assigns each vertex the id of its
right coset, so it is constant on cosets by construction of the table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .cosets import CosetTable
from .errors import ContextMismatchError
from .limits import check_table_cells
from .words import GroupContext, Word, format_word

# 12-color qualitative palette; coset ids cycle through it.
PALETTE = (
    "#8dd3c7",
    "#ffffb3",
    "#bebada",
    "#fb8072",
    "#80b1d3",
    "#fdb462",
    "#b3de69",
    "#fccde5",
    "#d9d9d9",
    "#bc80bd",
    "#ccebc5",
    "#ffed6f",
)


@dataclass(frozen=True)
class TreeVertex:
    word: Word
    parent: Optional[int]
    depth: int


@dataclass(eq=False)
class TreeSlice:
    """All vertices within a given distance of the root, BFS order."""

    ctx: GroupContext
    depth: int
    vertices: Tuple[TreeVertex, ...]


def slice_size(k: int, depth: int) -> int:
    """1 + (k+1) * sum_{j=1..depth} k^(j-1)."""
    return 1 + (k + 1) * sum(k ** (j - 1) for j in range(1, depth + 1))


def build_slice(ctx: GroupContext, depth: int) -> TreeSlice:
    """Vertices up to the given depth; children in ascending letter order."""
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    check_table_cells(slice_size(ctx.k, depth))
    vertices: List[TreeVertex] = [TreeVertex(Word(ctx, ()), None, 0)]
    level: List[int] = [0]
    for d in range(1, depth + 1):
        nxt: List[int] = []
        for parent_idx in level:
            parent = vertices[parent_idx]
            last = parent.word.letters[-1] if parent.word.letters else 0
            for g in ctx.generators():
                if g == last:
                    continue
                child = Word(ctx, parent.word.letters + (g,))
                nxt.append(len(vertices))
                vertices.append(TreeVertex(child, parent_idx, d))
        level = nxt
    return TreeSlice(ctx, depth, tuple(vertices))


@dataclass(eq=False)
class PeriodicColoring:
    """A tree slice colored by right-coset id; constant on cosets."""

    slice: TreeSlice
    table: CosetTable
    colors: Tuple[int, ...]


def color_slice(slice_: TreeSlice, table: CosetTable) -> PeriodicColoring:
    if slice_.ctx != table.ctx:
        raise ContextMismatchError("slice and coset table use different contexts")
    colors = tuple(table.coset_of(v.word) for v in slice_.vertices)
    return PeriodicColoring(slice_, table, colors)


def render_dot(coloring: PeriodicColoring) -> str:
    """Graphviz source: one filled node per vertex, edges to parents."""
    lines = ["graph tree {", "  node [style=filled fontname=Helvetica];"]
    for idx, vertex in enumerate(coloring.slice.vertices):
        coset = coloring.colors[idx]
        fill = PALETTE[coset % len(PALETTE)]
        label = format_word(vertex.word)
        lines.append(f'  n{idx} [label="{label}" fillcolor="{fill}"];')
    for idx, vertex in enumerate(coloring.slice.vertices):
        if vertex.parent is not None:
            lines.append(f"  n{vertex.parent} -- n{idx};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_json(coloring: PeriodicColoring) -> str:
    payload: Dict[str, object] = {
        "k": coloring.slice.ctx.k,
        "depth": coloring.slice.depth,
        "subgroup": coloring.table.oracle.spec(),
        "vertices": [
            {
                "word": format_word(v.word),
                "parent": v.parent,
                "coset": coloring.colors[idx],
            }
            for idx, v in enumerate(coloring.slice.vertices)
        ],
    }
    return json.dumps(payload)


def export(coloring: PeriodicColoring, fmt: str) -> bytes:
    """Byte-stable DOT or JSON rendering of a coloring."""
    if fmt == "dot":
        return render_dot(coloring).encode("utf-8")
    if fmt == "json":
        return render_json(coloring).encode("utf-8")
    raise ValueError(f"unknown export format {fmt!r}")


__all__ = [
    "PALETTE",
    "TreeVertex",
    "TreeSlice",
    "PeriodicColoring",
    "slice_size",
    "build_slice",
    "color_slice",
    "render_dot",
    "render_json",
    "export",
]
