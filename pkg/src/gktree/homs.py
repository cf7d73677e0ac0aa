"""Homomorphisms from the tree group into finite targets.

A homomorphism is determined by one target element per generator; the
element must square to the identity because every generator does.  Two
constructions cover the subgroup families:

* ``parity_hom``: into an elementary abelian 2-group, sending a_i to the
  product of c_j over the member sets A_j containing i.  The multi-case
  definition by membership pattern collapses to this single rule.
* ``two_gen_hom``: onto a group generated by two involutions b1, b2,
  sending block B1 to b1, block B2 to b2 and the rest to the identity.

Because targets are constructed directly on a minimal involution pair,
the rewriting step that would eliminate redundant target generators is
the identity map here; composed evaluation is plain homomorphic
evaluation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import BoundExceededError, ContextMismatchError
from .groups import FiniteGroup, elementary_abelian, generated_subgroup, two_involution_group
from .limits import EPIMORPHISM_SEARCH_BOUND, MAX_ELEMENTARY_ABELIAN_RANK
from .words import GroupContext, Word


def _index_set(ctx: GroupContext, items: Iterable[int], what: str) -> FrozenSet[int]:
    out = frozenset(items)
    for i in out:
        ctx.check_generator(i)
    return out


@dataclass(frozen=True, eq=False)
class BlockPartition:
    """An optional inert set a0 plus ordered non-empty blocks covering N_k."""

    ctx: GroupContext
    a0: FrozenSet[int]
    blocks: Tuple[FrozenSet[int], ...]

    def __post_init__(self) -> None:
        seen: set = set(self.a0)
        for i in self.a0:
            self.ctx.check_generator(i)
        for j, block in enumerate(self.blocks, start=1):
            if not block:
                raise ValueError(f"block #{j} is empty")
            for i in block:
                self.ctx.check_generator(i)
                if i in seen:
                    raise ValueError(f"index {i} appears in two parts")
                seen.add(i)
        if seen != set(self.ctx.generators()):
            missing = sorted(set(self.ctx.generators()) - seen)
            raise ValueError(f"partition misses generator indices {missing}")

    @classmethod
    def of(
        cls, ctx: GroupContext, a0: Iterable[int], *blocks: Iterable[int]
    ) -> "BlockPartition":
        return cls(ctx, frozenset(a0), tuple(frozenset(b) for b in blocks))

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True, eq=False)
class Homomorphism:
    """Generator-image assignment into a finite target group.

    ``kind`` records provenance ("parity", "two_gen" or "assignment");
    the matching parameter field is set for the first two and drives
    serialization and kernel-oracle construction.
    """

    ctx: GroupContext
    target: FiniteGroup
    images: Tuple[int, ...]
    kind: str = "assignment"
    sets: Optional[Tuple[FrozenSet[int], ...]] = None
    partition: Optional[BlockPartition] = None

    def __post_init__(self) -> None:
        if len(self.images) != self.ctx.generator_count:
            raise ValueError(
                f"{len(self.images)} images for {self.ctx.generator_count} generators"
            )
        e = self.target.identity
        for i, g in enumerate(self.images, start=1):
            if not 0 <= g < self.target.order:
                raise ValueError(f"image of a{i} out of range")
            if self.target.table[g][g] != e:
                raise ValueError(f"image of a{i} does not square to the identity")

    def image_of(self, i: int) -> int:
        self.ctx.check_generator(i)
        return self.images[i - 1]


def parity_hom(sets: Sequence[Iterable[int]], ctx: GroupContext) -> Homomorphism:
    """Homomorphism onto (a subgroup of) K_{2^n} from member sets A_1..A_n.

    a_i maps to the product of c_j over all j with i in A_j; an index in
    no set maps to the identity.
    """
    fsets = tuple(_index_set(ctx, s, f"set #{j + 1}") for j, s in enumerate(sets))
    if not fsets:
        raise ValueError("at least one set is required")
    for j, s in enumerate(fsets, start=1):
        if not s:
            raise ValueError(f"set #{j} is empty")
    n = len(fsets)
    if n > MAX_ELEMENTARY_ABELIAN_RANK:
        raise BoundExceededError(f"{n} sets exceed target rank bound")
    target = elementary_abelian(n)
    images = []
    for i in ctx.generators():
        mask = 0
        for j, s in enumerate(fsets):
            if i in s:
                mask ^= 1 << j
        images.append(mask)
    return Homomorphism(ctx, target, tuple(images), kind="parity", sets=fsets)


def two_gen_hom(
    partition: BlockPartition,
    target: FiniteGroup,
    b1: Optional[int] = None,
    b2: Optional[int] = None,
) -> Homomorphism:
    """Homomorphism onto a two-involution-generated target.

    Block 1 maps to b1, block 2 to b2, the inert set to the identity.
    The chosen pair defaults to the target's recorded generators and
    must be involutions generating the whole group.
    """
    if partition.n_blocks != 2:
        raise ValueError(f"exactly 2 blocks required, got {partition.n_blocks}")
    if b1 is None or b2 is None:
        if target.generators is None or len(target.generators) != 2:
            raise ValueError("target does not record a generator pair; pass b1, b2")
        b1, b2 = target.generators
    e = target.identity
    for name, b in (("b1", b1), ("b2", b2)):
        if target.table[b][b] != e:
            raise ValueError(f"{name} is not an involution")
    if len(generated_subgroup(target, {b1, b2})) != target.order:
        raise ValueError("chosen involutions do not generate the target")
    lookup = {}
    for i in partition.a0:
        lookup[i] = e
    for i in partition.blocks[0]:
        lookup[i] = b1
    for i in partition.blocks[1]:
        lookup[i] = b2
    images = tuple(lookup[i] for i in partition.ctx.generators())
    return Homomorphism(partition.ctx, target, images, kind="two_gen", partition=partition)


def evaluate(hom: Homomorphism, x: Word) -> int:
    """Left-to-right product of the generator images of x."""
    if x.ctx != hom.ctx:
        raise ContextMismatchError(
            f"word context k={x.ctx.k} differs from homomorphism context k={hom.ctx.k}"
        )
    acc = hom.target.identity
    table = hom.target.table
    images = hom.images
    for i in x.letters:
        acc = table[acc][images[i - 1]]
    return acc


def image_subgroup(hom: Homomorphism) -> frozenset:
    """Image of the whole group: closure of the generator images."""
    return generated_subgroup(hom.target, set(hom.images) | {hom.target.identity})


def epimorphism_search(
    ctx: GroupContext,
    target: FiniteGroup,
    search_bound: int = EPIMORPHISM_SEARCH_BOUND,
) -> List[Homomorphism]:
    """All surjective homomorphisms onto the target, lexicographic order.

    Candidate images are the involutions-or-identity of the target; an
    assignment qualifies when its images generate everything.  An empty
    result certifies that no epimorphism exists.
    """
    slots = ctx.generator_count
    if target.order**slots > search_bound:
        raise BoundExceededError(
            f"search space {target.order}^{slots} exceeds bound {search_bound}"
        )
    e = target.identity
    candidates = [g for g in target.elements() if target.table[g][g] == e]
    out = []
    for images in itertools.product(candidates, repeat=slots):
        if len(generated_subgroup(target, set(images) | {e})) == target.order:
            out.append(Homomorphism(ctx, target, images, kind="assignment"))
    return out


def hom_to_spec(hom: Homomorphism) -> Dict[str, object]:
    """JSON descriptor {kind, sets/blocks, target reference, k}."""
    if hom.kind == "parity":
        assert hom.sets is not None
        return {
            "kind": "parity",
            "k": hom.ctx.k,
            "sets": [sorted(s) for s in hom.sets],
            "target": {"kind": "elementary_abelian", "n": len(hom.sets)},
        }
    if hom.kind == "two_gen":
        assert hom.partition is not None
        p = hom.partition
        return {
            "kind": "two_gen",
            "k": hom.ctx.k,
            "blocks": {
                "b0": sorted(p.a0),
                "b1": sorted(p.blocks[0]),
                "b2": sorted(p.blocks[1]),
            },
            "target": {"kind": "two_involution", "n": hom.target.order // 2},
        }
    raise ValueError(f"homomorphism of kind {hom.kind!r} has no descriptor form")


def hom_from_spec(data: Dict[str, object]) -> Homomorphism:
    ctx = GroupContext(int(data["k"]))  # type: ignore[arg-type]
    kind = data.get("kind")
    if kind == "parity":
        return parity_hom(list(data["sets"]), ctx)  # type: ignore[arg-type]
    if kind == "two_gen":
        blocks = data["blocks"]  # type: ignore[index]
        partition = BlockPartition.of(
            ctx, blocks["b0"], blocks["b1"], blocks["b2"]  # type: ignore[index]
        )
        n = int(data["target"]["n"])  # type: ignore[index, arg-type]
        return two_gen_hom(partition, two_involution_group(n))
    raise ValueError(f"unknown homomorphism kind {kind!r}")


__all__ = [
    "BlockPartition",
    "Homomorphism",
    "parity_hom",
    "two_gen_hom",
    "evaluate",
    "image_subgroup",
    "epimorphism_search",
    "hom_to_spec",
    "hom_from_spec",
]
