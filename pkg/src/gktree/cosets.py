"""Right-coset enumeration, normality verdicts and quotient tables.

Cosets are enumerated breadth-first from the identity: each
representative is extended by each generator and merged with an
existing class exactly when the right-coset test x*y^-1 in H passes.
The table closes because every oracle family has finite index; the
radius bound guards against misuse.  The side convention (right cosets)
is recorded on the table; left cosets are a documented extension point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import ContextMismatchError, NonClosureError, QuotientUndefinedError
from .groups import FiniteGroup
from .limits import DEFAULT_G_BOUND, DEFAULT_H_BOUND, DEFAULT_MAX_RADIUS, check_table_cells
from .oracles import Normality, SubgroupOracle
from .words import (
    GroupContext,
    Word,
    conjugate,
    enumerate_words,
    format_word,
    generator,
    inverse,
    multiply,
)


@dataclass(eq=False)
class CosetTable:
    """Representatives plus the generator action on right cosets."""

    oracle: SubgroupOracle
    reps: Tuple[Word, ...]
    transitions: Tuple[Tuple[int, ...], ...]
    closure_radius: int
    side: str = "right"

    @property
    def ctx(self) -> GroupContext:
        return self.oracle.ctx

    @property
    def index(self) -> int:
        return len(self.reps)

    def coset_of(self, x: Word) -> int:
        """Coset id of a word, following transitions from the identity coset."""
        if x.ctx != self.ctx:
            raise ContextMismatchError("word belongs to a different context")
        c = 0
        for i in x.letters:
            c = self.transitions[c][i - 1]
        return c

    def to_json_dict(self) -> Dict[str, object]:
        return {
            "k": self.ctx.k,
            "subgroup": self.oracle.spec(),
            "side": self.side,
            "index": self.index,
            "closure_radius": self.closure_radius,
            "reps": [format_word(r) for r in self.reps],
            "transitions": [list(row) for row in self.transitions],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


@dataclass(eq=False)
class NormalityVerdict:
    """Outcome of a normality check.

    kind is "certified_normal" (kernel provenance), "not_normal" (with
    a witness pair) or "normal_up_to_bound" (no violation found below
    the stated bounds; not a proof).
    """

    kind: str
    witness_h: Optional[Word] = None
    witness_g: Optional[Word] = None
    h_bound: Optional[int] = None
    g_bound: Optional[int] = None

    def revalidate(self, oracle: SubgroupOracle) -> bool:
        """Re-check a not_normal witness directly against the oracle."""
        if self.kind != "not_normal":
            raise ValueError("only not_normal verdicts carry a witness")
        assert self.witness_h is not None and self.witness_g is not None
        return oracle.contains(self.witness_h) and not oracle.contains(
            conjugate(self.witness_h, self.witness_g)
        )

    def to_json_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {"kind": self.kind}
        if self.kind == "not_normal":
            assert self.witness_h is not None and self.witness_g is not None
            out["witness_h"] = format_word(self.witness_h)
            out["witness_g"] = format_word(self.witness_g)
        if self.kind == "normal_up_to_bound":
            out["h_bound"] = self.h_bound
            out["g_bound"] = self.g_bound
        return out


def enumerate_cosets(oracle: SubgroupOracle, max_radius: int = DEFAULT_MAX_RADIUS) -> CosetTable:
    """Close the right-coset table of the oracle's subgroup by BFS.

    Representatives appear in length-lex discovery order with reps[0]
    the identity; the merge test is membership of x*y^-1.  Fails with
    NonClosureError when a class beyond the radius bound would be
    needed.
    """
    if max_radius < 1:
        raise ValueError(f"max_radius must be >= 1, got {max_radius}")
    ctx = oracle.ctx
    gens = [generator(ctx, i) for i in ctx.generators()]
    reps: List[Word] = [Word(ctx, ())]
    rep_inverses: List[Word] = [Word(ctx, ())]
    transitions: List[List[Optional[int]]] = [[None] * ctx.generator_count]
    deferred: List[Tuple[int, int, Word]] = []

    def find_coset(x: Word) -> Optional[int]:
        for j, rinv in enumerate(rep_inverses):
            if oracle.contains(multiply(x, rinv)):
                return j
        return None

    c = 0
    while c < len(reps):
        for g_idx, g in enumerate(gens):
            if transitions[c][g_idx] is not None:
                continue
            x = multiply(reps[c], g)
            j = find_coset(x)
            if j is None:
                if len(x) > max_radius:
                    deferred.append((c, g_idx, x))
                    continue
                check_table_cells((len(reps) + 1) * ctx.generator_count)
                j = len(reps)
                reps.append(x)
                rep_inverses.append(inverse(x))
                transitions.append([None] * ctx.generator_count)
            transitions[c][g_idx] = j
            # the generator action is an involution on cosets
            back = transitions[j][g_idx]
            assert back is None or back == c
            transitions[j][g_idx] = c
        c += 1

    still_open = 0
    for c, g_idx, x in deferred:
        if transitions[c][g_idx] is not None:
            continue
        j = find_coset(x)
        if j is None:
            still_open += 1
            continue
        transitions[c][g_idx] = j
        back = transitions[j][g_idx]
        assert back is None or back == c
        transitions[j][g_idx] = c
    if still_open:
        raise NonClosureError(still_open, max_radius)

    closed_rows = tuple(tuple(int(t) for t in row) for row in transitions)  # type: ignore[arg-type]
    radius = max(len(r) for r in reps)
    return CosetTable(oracle, tuple(reps), closed_rows, radius)


def check_normality(
    oracle: SubgroupOracle,
    table: CosetTable,
    h_bound: int = DEFAULT_H_BOUND,
    g_bound: int = DEFAULT_G_BOUND,
) -> NormalityVerdict:
    """Certificate, witness, or bounded verdict for normality.

    Kernel-backed oracles are certified outright.  Otherwise members h
    up to h_bound and conjugators g up to g_bound are scanned in
    length-lex order, h outer; the first conjugate escaping the
    subgroup is returned as the witness.
    """
    if table.oracle is not oracle and table.oracle.spec() != oracle.spec():
        raise ValueError("table was not produced from this oracle")
    if oracle.normality is Normality.CERTIFIED_NORMAL:
        return NormalityVerdict("certified_normal")
    conjugators = enumerate_words(oracle.ctx, g_bound)
    for h in enumerate_words(oracle.ctx, h_bound):
        if not oracle.contains(h):
            continue
        for g in conjugators:
            if not oracle.contains(conjugate(h, g)):
                return NormalityVerdict("not_normal", witness_h=h, witness_g=g)
    return NormalityVerdict("normal_up_to_bound", h_bound=h_bound, g_bound=g_bound)


def quotient_group(table: CosetTable) -> FiniteGroup:
    """Factor group on the cosets of a certified-normal subgroup.

    Entry (i, j) is the coset of reps[i]*reps[j]; well-defined exactly
    because the subgroup is normal.  Construction re-runs the table
    validity checks, so a bogus certificate would surface here.
    """
    if table.oracle.normality is not Normality.CERTIFIED_NORMAL:
        raise QuotientUndefinedError(
            "quotient needs a certified-normal subgroup; "
            f"oracle normality is {table.oracle.normality.value}"
        )
    n = table.index
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(table.coset_of(multiply(table.reps[i], table.reps[j])))
        rows.append(row)
    labels = [format_word(r) for r in table.reps]
    gen_cosets = []
    for g_idx in range(table.ctx.generator_count):
        c = table.transitions[0][g_idx]
        if c not in gen_cosets:
            gen_cosets.append(c)
    return FiniteGroup(
        rows, 0, labels, name=f"quotient_{table.oracle.kind}", generators=gen_cosets
    )


__all__ = [
    "CosetTable",
    "NormalityVerdict",
    "enumerate_cosets",
    "check_normality",
    "quotient_group",
]
