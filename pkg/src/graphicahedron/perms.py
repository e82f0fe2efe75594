"""Permutation arithmetic and Young-subgroup coset machinery.

Permutations are plain tuples in one-line notation: ``a[x]`` is the image of
point ``x``, with points ``0..p-1``.  All arithmetic is 0-based; user-facing
layers (parsers, reports, DOT output) convert to 1-based labels at the
boundary.

A *vertex partition* splits the points into blocks; the permutations that
preserve every block setwise form a Young subgroup (a direct product of
symmetric groups, one per block).  A right coset ``H·a`` of such a subgroup
is never materialized here: it is identified by its lexicographically least
member, which ``canonical_rep`` computes in O(p), so coset equality is plain
tuple equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def identity(p: int) -> Perm:
    """The identity permutation on ``p`` points."""
    return tuple(range(p))


def is_permutation(word: Sequence[int]) -> bool:
    """
    >>> is_permutation((1, 0, 2))
    True
    >>> is_permutation((0, 0, 2))
    False
    """
    return sorted(word) == list(range(len(word)))


def compose(a: Perm, b: Perm) -> Perm:
    """Compose two permutations, applying ``b`` first: ``compose(a, b)(x) == a(b(x))``.

    >>> compose((1, 0, 2), (0, 2, 1))
    (1, 2, 0)
    """
    if len(a) != len(b):
        raise ValueError(f"size mismatch: cannot compose permutations on {len(a)} and {len(b)} points")
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for x, v in enumerate(a):
        inv[v] = x
    return tuple(inv)


def conjugate(a: Perm, k: Perm) -> Perm:
    """Return ``k·a·k⁻¹``, i.e. ``a`` with its points relabeled through ``k``."""
    if len(a) != len(k):
        raise ValueError(f"size mismatch: cannot conjugate on {len(a)} by {len(k)} points")
    out = [0] * len(a)
    for x, ax in enumerate(a):
        out[k[x]] = k[ax]
    return tuple(out)


def transposition(p: int, i: int, j: int) -> Perm:
    """The transposition swapping points ``i`` and ``j`` in S_p."""
    if not (0 <= i < p and 0 <= j < p):
        raise ValueError(f"points {i}, {j} out of range for p={p}")
    if i == j:
        raise ValueError(f"loop edge: transposition needs two distinct points, got {i} twice")
    word = list(range(p))
    word[i], word[j] = j, i
    return tuple(word)


def transposition_of_edge(p: int, edge: tuple[int, int]) -> Perm:
    """The transposition attached to a graph edge ``{i, j}`` (0-based endpoints)."""
    i, j = edge
    return transposition(p, i, j)


def all_perms(p: int) -> Iterator[Perm]:
    """All permutations of ``p`` points in lexicographic order."""
    import itertools

    return itertools.permutations(range(p))


def lex_rank(a: Perm) -> int:
    """Rank of ``a`` among all permutations of its size, in lexicographic order.

    >>> lex_rank((0, 1, 2)), lex_rank((2, 1, 0))
    (0, 5)
    """
    rank = 0
    n = len(a)
    seen = 0
    for pos, v in enumerate(a):
        smaller = v - (seen & ((1 << v) - 1)).bit_count()
        rank += smaller * math.factorial(n - 1 - pos)
        seen |= 1 << v
    return rank


@dataclass(frozen=True)
class VertexPartition:
    """A partition of ``0..p-1`` into blocks, with blocks ordered by smallest member.

    The ordering convention makes equality structural: two partitions with the
    same blocks always compare equal, and ``block_of[v]`` gives the index of
    the block containing ``v``.
    """

    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "VertexPartition":
        ordered = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        flat = sorted(v for b in ordered for v in b)
        if flat != list(range(len(flat))):
            raise ValueError("blocks do not partition 0..p-1")
        block_of = [0] * len(flat)
        for idx, b in enumerate(ordered):
            for v in b:
                block_of[v] = idx
        return cls(ordered, tuple(block_of))

    @classmethod
    def singletons(cls, p: int) -> "VertexPartition":
        return cls.from_blocks([v] for v in range(p))

    @property
    def p(self) -> int:
        return len(self.block_of)


def coset_size(part: VertexPartition) -> int:
    """Order of the Young subgroup preserving every block of ``part``."""
    return math.prod(math.factorial(len(b)) for b in part.blocks)


def canonical_rep(part: VertexPartition, a: Perm) -> Perm:
    """Lexicographically least member of the right coset ``H·a`` of the Young
    subgroup ``H`` of ``part``.

    The coset consists exactly of the permutations sending each point ``y``
    into the block of ``a(y)``, so a greedy sweep that assigns the smallest
    unused member of that block is both a coset member and lex-least.
    """
    if len(a) != part.p:
        raise ValueError(f"size mismatch: permutation on {len(a)} points, partition of {part.p}")
    next_in_block = [0] * len(part.blocks)
    out = []
    for y in range(part.p):
        b = part.block_of[a[y]]
        out.append(part.blocks[b][next_in_block[b]])
        next_in_block[b] += 1
    return tuple(out)


def same_coset(part: VertexPartition, a: Perm, b: Perm) -> bool:
    """Whether ``a`` and ``b`` span the same right coset of the Young subgroup."""
    if len(a) != len(b):
        raise ValueError(f"size mismatch: {len(a)} vs {len(b)}")
    block_of = part.block_of
    return all(block_of[a[y]] == block_of[b[y]] for y in range(len(a)))


def refines(fine: VertexPartition, coarse: VertexPartition) -> bool:
    """Whether every block of ``fine`` is contained in a block of ``coarse``."""
    return all(
        len({coarse.block_of[v] for v in block}) == 1 for block in fine.blocks
    )


def coset_le(part_a: VertexPartition, a: Perm, part_b: VertexPartition, b: Perm) -> bool:
    """Containment of right cosets: the coset of (part_a, a) inside that of (part_b, b).

    Containment holds exactly when the Young subgroups nest (partition
    refinement) and ``a`` lies in the larger coset.
    """
    return refines(part_a, part_b) and same_coset(part_b, a, b)


def coset_reps(part: VertexPartition) -> Iterator[Perm]:
    """Canonical representatives of all right cosets of the Young subgroup.

    Cosets correspond to the ways of labelling positions with block ids so
    that each block id is used once per member; the representatives come out
    in lexicographic order of those label sequences.  There are
    ``p! / coset_size(part)`` of them.
    """
    p = part.p
    blocks = part.blocks
    counts = [len(b) for b in blocks]
    seq: list[int] = []

    def emit() -> Perm:
        next_in_block = [0] * len(blocks)
        out = []
        for b in seq:
            out.append(blocks[b][next_in_block[b]])
            next_in_block[b] += 1
        return tuple(out)

    def rec() -> Iterator[Perm]:
        if len(seq) == p:
            yield emit()
            return
        for b in range(len(blocks)):
            if counts[b]:
                counts[b] -= 1
                seq.append(b)
                yield from rec()
                seq.pop()
                counts[b] += 1

    return rec()


@dataclass(frozen=True)
class CosetKey:
    """Value identity for a right coset of a Young subgroup.

    Two (partition, permutation) pairs produce equal keys exactly when they
    span the same coset.
    """

    partition: VertexPartition
    rep: Perm

    @classmethod
    def of(cls, partition: VertexPartition, a: Perm) -> "CosetKey":
        return cls(partition, canonical_rep(partition, a))
