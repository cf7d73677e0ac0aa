"""Finite multiplication-table groups used as homomorphism targets.

Groups are stored as explicit tables over elements 0..order-1 so that
kernel evaluation is a table lookup.  Construction validates the table:
identity and inverses always, full associativity for orders up to 64
(the structural constructors below are models of genuine groups, so the
cubic check is skipped for larger tables).
"""

from __future__ import annotations

import json
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import BoundExceededError
from .limits import MAX_DIHEDRAL_HALF_ORDER, MAX_ELEMENTARY_ABELIAN_RANK

ASSOCIATIVITY_CHECK_MAX_ORDER = 64


class GroupClassTag(Enum):
    ELEMENTARY_ABELIAN_2 = "elementary_abelian_2"
    TWO_INVOLUTION_DIHEDRAL = "two_involution_dihedral"
    OTHER = "other"


class FiniteGroup:
    """Finite group given by a multiplication table on 0..order-1."""

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        identity: int = 0,
        labels: Optional[Sequence[str]] = None,
        name: str = "",
        generators: Optional[Sequence[int]] = None,
    ) -> None:
        self.table: Tuple[Tuple[int, ...], ...] = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.identity = identity
        self.name = name or f"group{self.order}"
        if labels is None:
            labels = [str(i) for i in range(self.order)]
        self.labels: Tuple[str, ...] = tuple(labels)
        self.generators: Optional[Tuple[int, ...]] = (
            tuple(generators) if generators is not None else None
        )
        self._validate()
        self.inverse_table: Tuple[int, ...] = self._build_inverses()
        self._is_commutative: Optional[bool] = None

    def _validate(self) -> None:
        n = self.order
        if n == 0:
            raise ValueError("group table is empty")
        if len(self.labels) != n:
            raise ValueError(f"{len(self.labels)} labels for order {n}")
        if not 0 <= self.identity < n:
            raise ValueError(f"identity index {self.identity} out of range")
        for i, row in enumerate(self.table):
            if len(row) != n:
                raise ValueError(f"table row {i} has length {len(row)}, expected {n}")
            if sorted(row) != list(range(n)):
                raise ValueError(f"table row {i} is not a permutation")
        for j in range(n):
            col = [self.table[i][j] for i in range(n)]
            if sorted(col) != list(range(n)):
                raise ValueError(f"table column {j} is not a permutation")
        e = self.identity
        for a in range(n):
            if self.table[e][a] != a or self.table[a][e] != a:
                raise ValueError(f"element {self.identity} is not a two-sided identity")
        if n <= ASSOCIATIVITY_CHECK_MAX_ORDER:
            t = self.table
            for a in range(n):
                for b in range(n):
                    ab = t[a][b]
                    row_b = t[b]
                    row_ab = t[ab]
                    for c in range(n):
                        if row_ab[c] != t[a][row_b[c]]:
                            raise ValueError(
                                f"table is not associative at ({a},{b},{c})"
                            )

    def _build_inverses(self) -> Tuple[int, ...]:
        inv = [0] * self.order
        for a in range(self.order):
            row = self.table[a]
            inv[a] = row.index(self.identity)
        return tuple(inv)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse_table[a]

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        return self.labels[a]

    def order_of(self, a: int) -> int:
        n = 1
        x = a
        while x != self.identity:
            x = self.table[x][a]
            n += 1
        return n

    @property
    def is_commutative(self) -> bool:
        if self._is_commutative is None:
            t = self.table
            self._is_commutative = all(
                t[a][b] == t[b][a] for a in range(self.order) for b in range(a)
            )
        return self._is_commutative

    def involutions(self) -> List[int]:
        """Non-identity elements of order two."""
        return [a for a in self.elements() if a != self.identity and self.table[a][a] == self.identity]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    def to_json_dict(self) -> Dict[str, object]:
        """Descriptor {order, identity, table (row-major), labels}."""
        flat: List[int] = []
        for row in self.table:
            flat.extend(row)
        return {
            "order": self.order,
            "identity": self.identity,
            "table": flat,
            "labels": list(self.labels),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: Dict[str, object]) -> "FiniteGroup":
        order = int(data["order"])  # type: ignore[arg-type]
        flat = list(data["table"])  # type: ignore[arg-type]
        if len(flat) != order * order:
            raise ValueError(f"row-major table has {len(flat)} entries for order {order}")
        rows = [flat[i * order : (i + 1) * order] for i in range(order)]
        labels = data.get("labels")
        return cls(rows, int(data["identity"]), labels, name=str(data.get("name", "")))  # type: ignore[arg-type]


def elementary_abelian(n: int) -> FiniteGroup:
    """Order 2^n commutative group in which every element squares to e.

    Modelled on bit vectors under XOR; generator c_j is the bitmask
    1 << (j-1).
    """
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    if n > MAX_ELEMENTARY_ABELIAN_RANK:
        raise BoundExceededError(
            f"rank {n} exceeds supported maximum {MAX_ELEMENTARY_ABELIAN_RANK}"
        )
    size = 1 << n
    table = [[a ^ b for b in range(size)] for a in range(size)]
    labels = []
    for a in range(size):
        if a == 0:
            labels.append("e")
        else:
            labels.append("".join(f"c{j + 1}" for j in range(n) if a >> j & 1))
    gens = tuple(1 << j for j in range(n))
    return FiniteGroup(table, 0, labels, name=f"K{size}", generators=gens)


def two_involution_group(n: int) -> FiniteGroup:
    """Order 2n group generated by involutions b1, b2 with b1*b2 of order n.

    Realized as the dihedral group: elements are pairs (rotation, flip)
    encoded as 2*rotation + flip, with b1 the plain flip and b2 the flip
    following one rotation backwards, so that b1*b2 is the unit rotation.
    """
    if n < 2:
        raise ValueError(f"half-order must be >= 2, got {n}")
    if n > MAX_DIHEDRAL_HALF_ORDER:
        raise BoundExceededError(
            f"half-order {n} exceeds supported maximum {MAX_DIHEDRAL_HALF_ORDER}"
        )

    def code(r: int, f: int) -> int:
        return 2 * (r % n) + f

    size = 2 * n
    table = [[0] * size for _ in range(size)]
    for r1 in range(n):
        for f1 in range(2):
            for r2 in range(n):
                for f2 in range(2):
                    r = (r1 - r2) % n if f1 else (r1 + r2) % n
                    table[code(r1, f1)][code(r2, f2)] = code(r, (f1 + f2) % 2)
    b1 = code(0, 1)
    b2 = code(n - 1, 1)
    labels = _bfs_labels(table, 0, [(b1, "b1"), (b2, "b2")])
    return FiniteGroup(table, 0, labels, name=f"I{size}", generators=(b1, b2))


def _bfs_labels(
    table: Sequence[Sequence[int]], identity: int, gens: Sequence[Tuple[int, str]]
) -> List[str]:
    """Shortest-product labels over the given generators, BFS order."""
    labels: Dict[int, str] = {identity: "e"}
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g, gname in gens:
                b = table[a][g]
                if b not in labels:
                    prefix = "" if a == identity else labels[a]
                    labels[b] = prefix + gname
                    nxt.append(b)
        frontier = nxt
    if len(labels) != len(table):
        raise ValueError("generators do not reach every element")
    return [labels[a] for a in range(len(table))]


def cyclic_group(n: int) -> FiniteGroup:
    """Cyclic group of order n (test fixture for non-involution targets)."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["e"] + [f"g{i}" for i in range(1, n)]
    gens = (1 % n,) if n > 1 else (0,)
    return FiniteGroup(table, 0, labels, name=f"C{n}", generators=gens)


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Direct product with element (a, b) encoded as a*|g2| + b."""
    n1, n2 = g1.order, g2.order
    size = n1 * n2
    table = [[0] * size for _ in range(size)]
    for a1 in range(n1):
        for b1 in range(n2):
            x = a1 * n2 + b1
            for a2 in range(n1):
                for b2 in range(n2):
                    table[x][a2 * n2 + b2] = g1.table[a1][a2] * n2 + g2.table[b1][b2]
    labels = [
        f"({g1.labels[a]},{g2.labels[b]})" for a in range(n1) for b in range(n2)
    ]
    e = g1.identity * n2 + g2.identity
    return FiniteGroup(table, e, labels, name=f"{g1.name}x{g2.name}")


def _partitions(n: int) -> List[List[int]]:
    if n == 0:
        return [[]]
    out = []
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or rest[0] <= first:
                out.append([first] + rest)
    return out


def all_abelian_groups(max_order: int) -> List[FiniteGroup]:
    """Fixture set: every abelian group of order <= max_order, up to iso.

    Built as direct products of cyclic groups of prime-power order
    (primary decomposition), ordered by group order.
    """
    out: List[FiniteGroup] = []
    for order in range(1, max_order + 1):
        factor_sets: List[List[int]] = [[]]
        m = order
        p = 2
        while m > 1:
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                factor_sets = [
                    fs + [p**part_i for part_i in part]
                    for fs in factor_sets
                    for part in _partitions(e)
                ]
            p += 1
        for factors in factor_sets:
            if not factors:
                group = cyclic_group(1)
            else:
                group = cyclic_group(factors[0])
                for f in factors[1:]:
                    group = direct_product(group, cyclic_group(f))
            out.append(group)
    return out


def generated_subgroup(group: FiniteGroup, seed: Iterable[int]) -> frozenset:
    """Smallest subset containing the seed and identity, closed under the table.

    Inverses come for free from closure in a finite group.  The result
    size must divide the group order (asserted Lagrange check).
    """
    seed_set: Set[int] = set(seed)
    if not seed_set:
        raise ValueError("seed set must be non-empty")
    for a in seed_set:
        if not 0 <= a < group.order:
            raise ValueError(f"element {a} out of range for order {group.order}")
    closed: Set[int] = {group.identity} | seed_set
    frontier = list(closed)
    while frontier:
        nxt = []
        for a in frontier:
            for g in seed_set:
                b = group.table[a][g]
                if b not in closed:
                    closed.add(b)
                    nxt.append(b)
        frontier = nxt
    assert group.order % len(closed) == 0, "closure violates Lagrange"
    return frozenset(closed)


def is_elementary_abelian_2(group: FiniteGroup) -> bool:
    if not group.is_commutative:
        return False
    return all(
        group.table[a][a] == group.identity for a in group.elements()
    )


def is_two_involution_generated(group: FiniteGroup) -> bool:
    """Whether some pair of involutions generates the whole group."""
    invs = group.involutions()
    for i, a in enumerate(invs):
        for b in invs[i:]:
            if len(generated_subgroup(group, {a, b})) == group.order:
                return True
    return False


def classify(group: FiniteGroup) -> GroupClassTag:
    """Class tag used by the characterization checks.

    The Klein four-group satisfies both predicates; the elementary
    abelian tag takes precedence there.
    """
    if is_elementary_abelian_2(group):
        return GroupClassTag.ELEMENTARY_ABELIAN_2
    if is_two_involution_generated(group):
        return GroupClassTag.TWO_INVOLUTION_DIHEDRAL
    return GroupClassTag.OTHER


__all__ = [
    "GroupClassTag",
    "FiniteGroup",
    "elementary_abelian",
    "two_involution_group",
    "cyclic_group",
    "direct_product",
    "all_abelian_groups",
    "generated_subgroup",
    "is_elementary_abelian_2",
    "is_two_involution_generated",
    "classify",
]
