"""The graphicahedron: a rank-q abstract polytope built from a connected graph.

A face is a pair (K, c): a subset K of edge indices together with the
lexicographically least member c of a right coset of the Young subgroup
fixed by the connected components of the spanning subgraph K.  Rank is |K|,
so the empty set contributes the p! vertices and the full edge set the
single greatest face.  A face of rank i below a face of rank j >= i is one
whose edge set is contained in the other's and whose coset lies inside the
other's coset.

Flags (maximal chains) admit a two-parameter description: an ordering of
all q edge indices, whose prefixes give the nested edge sets of the chain,
plus the base permutation of the chain's vertex.  There are exactly p!q!
of them.

The verifiers in this module re-check the defining polytope axioms from the
stored poset: the diamond condition (exactly two faces strictly between any
two incident faces two ranks apart) and strong flag-connectedness (every
section of rank at least two has a connected flag graph).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .cayley import CayleyGraph
from .errors import CapacityError, DisconnectedGraphError
from .graphs import SimpleGraph, components, is_connected
from .perms import (
    Perm,
    VertexPartition,
    all_perms,
    canonical_rep,
    compose,
    coset_le,
    coset_reps,
    coset_size,
    lex_rank,
    same_coset,
    transposition_of_edge,
)
from .posets import RankedPoset

DEFAULT_MAX_PERMS = 5040  # 7!


@dataclass(frozen=True)
class Face:
    """A proper face: edge subset plus canonical coset representative."""

    edges: frozenset[int]
    rep: Perm

    @property
    def rank(self) -> int:
        return len(self.edges)


def face_sort_key(face: Face):
    return (len(face.edges), tuple(sorted(face.edges)), face.rep)


def face_id(face: Face) -> str:
    """Stable 1-based identifier, e.g. ``K{1,3}:a(2,1,3)``."""
    edges = ",".join(str(e + 1) for e in sorted(face.edges))
    images = ",".join(str(v + 1) for v in face.rep)
    return f"K{{{edges}}}:a({images})"


@dataclass(frozen=True)
class Flag:
    """A maximal chain, recorded as an edge ordering plus the vertex permutation.

    The rank-i face of the flag is (first i edges of ``order``, ``base``).
    """

    order: tuple[int, ...]
    base: Perm


class Graphicahedron:
    """The face poset, stored rank by rank with faces deduplicated by coset key."""

    def __init__(self, graph: SimpleGraph, faces_by_rank: dict[int, Iterable[Face]]):
        self.graph = graph
        self.faces_by_rank = {
            r: tuple(sorted(faces, key=face_sort_key)) for r, faces in faces_by_rank.items()
        }
        self._partitions: dict[frozenset[int], VertexPartition] = {}
        self._covers: tuple[dict[Face, tuple[Face, ...]], dict[Face, tuple[Face, ...]]] | None = None

    @property
    def rank(self) -> int:
        return self.graph.q

    def faces(self, rank: int) -> tuple[Face, ...]:
        return self.faces_by_rank.get(rank, ())

    def all_faces(self) -> Iterator[Face]:
        for r in sorted(self.faces_by_rank):
            yield from self.faces_by_rank[r]

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces(r)) for r in range(self.rank + 1))

    @property
    def greatest_face(self) -> Face:
        (top,) = self.faces(self.rank)
        return top

    def partition_of(self, edges: frozenset[int]) -> VertexPartition:
        part = self._partitions.get(edges)
        if part is None:
            part = components(self.graph, edges)
            self._partitions[edges] = part
        return part

    def face(self, edges: Iterable[int], a: Perm) -> Face:
        """The face with the given edge set containing the permutation ``a``."""
        key = frozenset(edges)
        return Face(key, canonical_rep(self.partition_of(key), a))

    def vertex(self, a: Perm) -> Face:
        return Face(frozenset(), a)

    def is_incident(self, below: Face, above: Face) -> bool:
        """The partial order: edge sets nest and the small coset lies in the large one."""
        return below.edges <= above.edges and same_coset(
            self.partition_of(above.edges), below.rep, above.rep
        )

    def covers(self) -> tuple[dict[Face, tuple[Face, ...]], dict[Face, tuple[Face, ...]]]:
        """(up, down) cover lists between consecutive ranks, computed once."""
        if self._covers is None:
            up: dict[Face, list[Face]] = {f: [] for f in self.all_faces()}
            down: dict[Face, list[Face]] = {f: [] for f in self.all_faces()}
            for r in range(self.rank):
                for g in self.faces(r + 1):
                    part = self.partition_of(g.edges)
                    for f in self.faces(r):
                        if f.edges <= g.edges and same_coset(part, f.rep, g.rep):
                            up[f].append(g)
                            down[g].append(f)
            self._covers = (
                {f: tuple(v) for f, v in up.items()},
                {f: tuple(v) for f, v in down.items()},
            )
        return self._covers


def build(graph: SimpleGraph, max_perms: int = DEFAULT_MAX_PERMS) -> Graphicahedron:
    """Enumerate all faces of the graphicahedron of a connected graph.

    For each edge subset K the faces with first component K are exactly the
    cosets of its Young subgroup, so they are generated directly from the
    component partition rather than by deduplicating all p! pairs.
    """
    n = math.factorial(graph.p)
    if n > max_perms:
        raise CapacityError(f"{graph.p}! = {n} permutations exceeds the cap of {max_perms}")
    if not is_connected(graph):
        raise DisconnectedGraphError(
            "the graphicahedron is only defined for connected graphs"
        )
    faces_by_rank: dict[int, list[Face]] = {r: [] for r in range(graph.q + 1)}
    for size in range(graph.q + 1):
        for combo in itertools.combinations(range(graph.q), size):
            key = frozenset(combo)
            part = components(graph, combo)
            faces_by_rank[size].extend(Face(key, rep) for rep in coset_reps(part))
    return Graphicahedron(graph, faces_by_rank)


def face_count(graph: SimpleGraph, rank: int) -> int:
    """Closed-form face count at a rank: sum over K of p! / |Young subgroup of K|."""
    if not (0 <= rank <= graph.q):
        raise ValueError(f"rank {rank} out of range 0..{graph.q}")
    n = math.factorial(graph.p)
    return sum(
        n // coset_size(components(graph, combo))
        for combo in itertools.combinations(range(graph.q), rank)
    )


def drop_face(polytope: Graphicahedron, face: Face) -> Graphicahedron:
    """A defective copy with one face removed; used as a negative control
    when exercising the axiom verifiers."""
    faces_by_rank = {
        r: tuple(f for f in faces if f != face)
        for r, faces in polytope.faces_by_rank.items()
    }
    return Graphicahedron(polytope.graph, faces_by_rank)


# ---------------------------------------------------------------------------
# Flags


def flag_count(polytope: Graphicahedron) -> int:
    return math.factorial(polytope.graph.p) * math.factorial(polytope.graph.q)


def flags(polytope: Graphicahedron) -> Iterator[Flag]:
    """All flags, lexicographically by base permutation then by edge ordering."""
    q = polytope.graph.q
    for base in all_perms(polytope.graph.p):
        for order in itertools.permutations(range(q)):
            yield Flag(order, base)


def adjacent_flag(polytope: Graphicahedron, flag: Flag, j: int) -> Flag:
    """The unique flag differing from ``flag`` exactly in its rank-j face.

    Changing the vertex (j = 0) multiplies the base by the transposition of
    the chain's first edge; changing a middle face swaps two consecutive
    edges of the ordering.  Both moves are involutions.
    """
    q = polytope.graph.q
    if not (0 <= j <= q - 1):
        raise ValueError(f"adjacency rank {j} out of range 0..{q - 1}")
    if j == 0:
        tau = transposition_of_edge(polytope.graph.p, polytope.graph.edges[flag.order[0]])
        return Flag(flag.order, compose(tau, flag.base))
    order = list(flag.order)
    order[j - 1], order[j] = order[j], order[j - 1]
    return Flag(tuple(order), flag.base)


def flag_tables(polytope: Graphicahedron, max_flags: int | None = None) -> tuple[int, list[list[int]]]:
    """Indexed flags plus one neighbor table per adjacency rank.

    Flags are indexed as ``perm_rank * q! + ordering_rank``, matching the
    iteration order of :func:`flags`.  ``tables[j][i]`` is the index of the
    flag j-adjacent to flag ``i``.
    """
    graph = polytope.graph
    p, q = graph.p, graph.q
    n = flag_count(polytope)
    if max_flags is not None and n > max_flags:
        raise CapacityError(f"{n} flags exceed the cap of {max_flags}")
    perms = tuple(all_perms(p))
    perm_index = {a: i for i, a in enumerate(perms)}
    orders = tuple(itertools.permutations(range(q)))
    order_index = {o: i for i, o in enumerate(orders)}
    nfact = len(orders)

    # Left multiplication by each edge transposition, as a permutation of perm ranks.
    tau_map = [
        [perm_index[compose(transposition_of_edge(p, e), a)] for a in perms]
        for e in graph.edges
    ]
    swap_map = [
        [order_index[o[: j - 1] + (o[j], o[j - 1]) + o[j + 1:]] for o in orders]
        for j in range(1, q)
    ]

    tables: list[list[int]] = []
    for j in range(q):
        table = [0] * n
        for ai in range(len(perms)):
            base = ai * nfact
            if j == 0:
                for oi, o in enumerate(orders):
                    table[base + oi] = tau_map[o[0]][ai] * nfact + oi
            else:
                swaps = swap_map[j - 1]
                for oi in range(nfact):
                    table[base + oi] = base + swaps[oi]
        tables.append(table)
    return n, tables


# ---------------------------------------------------------------------------
# Axiom verifiers


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    checked: int
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.passed


def verify_diamond(polytope: Graphicahedron) -> VerifyReport:
    """Count, for every incident pair two ranks apart, the faces strictly between.

    The least face is treated as below every vertex, so rank-1 faces must
    have exactly two vertices below them; at the other end every rank-(q-2)
    face must lie below exactly two facets.
    """
    q = polytope.rank
    _, down = polytope.covers()
    checked = 0
    for i in range(q):
        for high in polytope.faces(i + 1):
            mids = down[high]
            lows: tuple = polytope.faces(i - 1) if i > 0 else (None,)
            for low in lows:
                if low is not None and not polytope.is_incident(low, high):
                    continue
                checked += 1
                count = (
                    len(mids)
                    if low is None
                    else sum(1 for m in mids if polytope.is_incident(low, m))
                )
                if count != 2:
                    low_id = face_id(low) if low is not None else "least face"
                    return VerifyReport(
                        False,
                        checked,
                        f"{count} faces between {low_id} and {face_id(high)}, expected 2",
                    )
    return VerifyReport(True, checked)


def _section_chains(
    polytope: Graphicahedron, bottom: Face | None, top: Face
) -> tuple[list[tuple], dict]:
    """Maximal chains of the section [bottom, top] and memoized interval data."""
    up, down = polytope.covers()
    in_interval: dict[Face, bool] = {}

    def member(f: Face) -> bool:
        res = in_interval.get(f)
        if res is None:
            res = polytope.is_incident(f, top) and (
                bottom is None or polytope.is_incident(bottom, f)
            )
            in_interval[f] = res
        return res

    chains: list[tuple] = []
    stack: list[Face] = []

    def walk(current: Face | None) -> None:
        succs = polytope.faces(0) if current is None else up[current]
        for g in succs:
            if g == top:
                chains.append(tuple([bottom] + stack + [top]))
            elif g.rank < top.rank and member(g):
                stack.append(g)
                walk(g)
                stack.pop()

    if bottom == top:
        chains.append((top,))
    else:
        walk(bottom)
    return chains, {"up": up, "down": down, "member": member}


def _section_connected(polytope: Graphicahedron, bottom: Face | None, top: Face) -> tuple[bool, int]:
    """Connectivity of the flag graph of one section; returns (ok, chain count)."""
    chains, ctx = _section_chains(polytope, bottom, top)
    if len(chains) <= 1:
        return True, len(chains)
    up, down = ctx["up"], ctx["down"]
    index = {c: i for i, c in enumerate(chains)}
    length = len(chains[0])  # bottom .. top inclusive
    mids_between: dict[tuple, list] = {}

    def neighbors(chain: tuple) -> Iterator[int]:
        for s in range(1, length - 1):
            lo, mid, hi = chain[s - 1], chain[s], chain[s + 1]
            mids = mids_between.get((lo, hi))
            if mids is None:
                if lo is None:
                    mids = list(down[hi])
                else:
                    hi_down = set(down[hi])
                    mids = [m for m in up[lo] if m in hi_down]
                mids_between[(lo, hi)] = mids
            for other in mids:
                if other != mid:
                    yield index[chain[:s] + (other,) + chain[s + 1:]]

    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for ci in frontier:
            for ni in neighbors(chains[ci]):
                if ni not in seen:
                    seen.add(ni)
                    nxt.append(ni)
        frontier = nxt
    return len(seen) == len(chains), len(chains)


def verify_strong_flag_connectedness(
    polytope: Graphicahedron,
    max_flags: int = 50000,
    drop_color: int | None = None,
) -> VerifyReport:
    """Connectivity of the full flag graph, plus of every section's flag graph.

    Sections of rank below two are connected for trivial reasons, so only
    pairs of incident faces at rank distance three or more are walked (with
    the implicit least face and the greatest face included as endpoints).
    ``drop_color`` deletes one adjacency color from the full flag graph and
    exists purely as a negative-control hook for tests.
    """
    q = polytope.rank
    n, tables = flag_tables(polytope, max_flags=max_flags)
    colors = [j for j in range(q) if j != drop_color]
    seen = bytearray(n)
    seen[0] = 1
    frontier = [0]
    reached = 1
    while frontier:
        nxt = []
        for i in frontier:
            for j in colors:
                k = tables[j][i]
                if not seen[k]:
                    seen[k] = 1
                    reached += 1
                    nxt.append(k)
        frontier = nxt
    if reached != n:
        return VerifyReport(False, 1, f"flag graph has {n} flags but only {reached} reachable")

    checked = 1
    sections: list[tuple[Face | None, Face]] = []
    for top_rank in range(2, q + 1):
        sections.extend((None, top) for top in polytope.faces(top_rank))
    for low_rank in range(0, q - 2):
        for low in polytope.faces(low_rank):
            for top_rank in range(low_rank + 3, q + 1):
                for top in polytope.faces(top_rank):
                    if polytope.is_incident(low, top):
                        sections.append((low, top))

    for bottom, top in sections:
        ok, _ = _section_connected(polytope, bottom, top)
        checked += 1
        if not ok:
            bottom_id = face_id(bottom) if bottom is not None else "least face"
            return VerifyReport(
                False, checked, f"section [{bottom_id}, {face_id(top)}] has a disconnected flag graph"
            )
    return VerifyReport(True, checked)


def vertex_figure_is_simplex(polytope: Graphicahedron, v: Face) -> bool:
    """Whether the faces above a vertex form the Boolean lattice on q atoms.

    Checks binomial counts per rank, that distinct faces above carry
    distinct edge sets, and that incidence between them is exactly edge-set
    containment.
    """
    if v.rank != 0:
        raise ValueError("vertex figures are computed at rank-0 faces")
    q = polytope.rank
    above: list[Face] = []
    for r in range(q + 1):
        at_rank = [f for f in polytope.faces(r) if polytope.is_incident(v, f)]
        if len(at_rank) != math.comb(q, r):
            return False
        above.extend(at_rank)
    if len({f.edges for f in above}) != len(above):
        return False
    return all(
        polytope.is_incident(f, g) == (f.edges <= g.edges)
        for f in above
        for g in above
        if f.rank <= g.rank
    )


# ---------------------------------------------------------------------------
# Skeleta and derived posets


@dataclass(frozen=True)
class Skeleton:
    """Proper faces of rank at most k, with the induced incidence."""

    graph: SimpleGraph
    k: int
    faces_by_rank: tuple[tuple[Face, ...], ...]

    def vertex_edges(self) -> tuple[tuple[int, int, int], ...]:
        """For k >= 1: edges as (lex rank, lex rank, color), one per rank-1 face."""
        out = []
        for f in self.faces_by_rank[1] if self.k >= 1 else ():
            (e,) = f.edges
            tau = transposition_of_edge(self.graph.p, self.graph.edges[e])
            u = lex_rank(f.rep)
            v = lex_rank(compose(tau, f.rep))
            out.append((min(u, v), max(u, v), e))
        return tuple(sorted(out))


def skeleton(polytope: Graphicahedron, k: int) -> Skeleton:
    if not (0 <= k <= polytope.rank - 1):
        raise ValueError(f"skeleton rank {k} out of range 0..{polytope.rank - 1}")
    return Skeleton(
        polytope.graph, k, tuple(polytope.faces(r) for r in range(k + 1))
    )


def one_skeleton_equals_cayley(polytope: Graphicahedron, cayley: CayleyGraph) -> bool:
    """Whether mapping each vertex face to its permutation carries the
    1-skeleton onto the Cayley graph, color for color."""
    graph = polytope.graph
    if graph.p != cayley.p or graph.q != cayley.n_colors:
        return False
    if len(polytope.faces(0)) != cayley.n_vertices:
        return False
    if len(polytope.faces(1)) != cayley.edge_count():
        return False
    for f in polytope.faces(1):
        (e,) = f.edges
        tau = transposition_of_edge(graph.p, graph.edges[e])
        u = cayley.index.get(f.rep)
        v = cayley.index.get(compose(tau, f.rep))
        if u is None or v is None or cayley.neighbor[e][u] != v:
            return False
    return True


def interval_below(polytope: Graphicahedron, top: Face) -> RankedPoset:
    """The interval from the least face up to ``top``, as a standalone poset."""
    levels = [
        [f for f in polytope.faces(r) if polytope.is_incident(f, top)]
        for r in range(top.rank + 1)
    ]
    up: dict[Face, tuple[Face, ...]] = {}
    for r in range(top.rank + 1):
        above = levels[r + 1] if r + 1 <= top.rank else ()
        for f in levels[r]:
            up[f] = tuple(g for g in above if polytope.is_incident(f, g))
    return RankedPoset(levels, up)


def full_poset(polytope: Graphicahedron) -> RankedPoset:
    return interval_below(polytope, polytope.greatest_face)


def tree_order_equals_coset_inclusion(
    graph: SimpleGraph, max_perms: int = DEFAULT_MAX_PERMS
) -> tuple[bool, tuple[Face, Face] | None]:
    """Whether coset containment already implies the face order.

    Face order always implies coset containment.  The converse holds for
    trees, whose Young subgroups nest only when the edge sets do; cycles
    break it because different edge sets can generate the same subgroup.
    Returns the first counterexample pair otherwise.
    """
    polytope = build(graph, max_perms=max_perms)
    parts = {f.edges: polytope.partition_of(f.edges) for f in polytope.all_faces()}
    faces = list(polytope.all_faces())
    for f in faces:
        for g in faces:
            cosets_nest = coset_le(parts[f.edges], f.rep, parts[g.edges], g.rep)
            if cosets_nest != polytope.is_incident(f, g):
                return False, (f, g)
    return True, None
