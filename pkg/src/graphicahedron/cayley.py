"""The Cayley color graph of a graph: S_p generated by one transposition per edge.

Vertices are all p! permutations, indexed by lexicographic rank for O(1)
lookup.  Two permutations are adjacent when one is the other multiplied on
the left by the transposition of some graph edge; that edge's index is the
color of the Cayley edge, so each color class is a perfect matching.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator

from .errors import CapacityError
from .graphs import SimpleGraph
from .perms import Perm, all_perms, compose, transposition_of_edge

DEFAULT_MAX_PERMS = 40320  # 8!

# Edge colors for DOT output, reused cyclically past the palette size.
PALETTE = (
    "#e41a1c",
    "#377eb8",
    "#4daf4a",
    "#984ea3",
    "#ff7f00",
    "#a65628",
    "#f781bf",
    "#999999",
)


class CayleyGraph:
    """Built Cayley color graph; immutable after construction."""

    def __init__(self, graph: SimpleGraph, perms: tuple[Perm, ...], neighbor: tuple[tuple[int, ...], ...]):
        self.graph = graph
        self.p = graph.p
        self.perms = perms
        self.index = {a: i for i, a in enumerate(perms)}
        self.neighbor = neighbor  # neighbor[color][vertex] -> vertex

    @property
    def n_vertices(self) -> int:
        return len(self.perms)

    @property
    def n_colors(self) -> int:
        return len(self.neighbor)

    def edge_count(self) -> int:
        return self.n_vertices * self.n_colors // 2

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Undirected colored edges as (smaller vertex, larger vertex, color)."""
        for color, nbr in enumerate(self.neighbor):
            for u, v in enumerate(nbr):
                if u < v:
                    yield (u, v, color)


def build_cayley(graph: SimpleGraph, max_perms: int = DEFAULT_MAX_PERMS) -> CayleyGraph:
    """Materialize the Cayley graph with one neighbor table per edge color."""
    n = math.factorial(graph.p)
    if n > max_perms:
        raise CapacityError(f"{graph.p}! = {n} permutations exceeds the cap of {max_perms}")
    perms = tuple(all_perms(graph.p))
    index = {a: i for i, a in enumerate(perms)}
    taus = [transposition_of_edge(graph.p, e) for e in graph.edges]
    neighbor = tuple(
        tuple(index[compose(tau, a)] for a in perms) for tau in taus
    )
    return CayleyGraph(graph, perms, neighbor)


def component_of(graph: SimpleGraph, edge_subset: Iterable[int], a: Perm) -> tuple[Perm, ...]:
    """Connected component of ``a`` in the Cayley graph restricted to the given colors.

    This is exactly the right coset of the subgroup generated by the chosen
    edge transpositions, returned sorted.
    """
    if len(a) != graph.p:
        raise ValueError(f"size mismatch: permutation on {len(a)} points, graph has {graph.p}")
    taus = [transposition_of_edge(graph.p, graph.edges[e]) for e in edge_subset]
    seen = {a}
    frontier = [a]
    while frontier:
        nxt = []
        for b in frontier:
            for tau in taus:
                c = compose(tau, b)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return tuple(sorted(seen))


def _node_label(a: Perm) -> str:
    return ",".join(str(v + 1) for v in a)


def export_dot(cayley: CayleyGraph) -> str:
    """Render the colored graph in DOT format.

    Nodes are named ``v<lex rank>`` and labeled with the 1-based image
    sequence; each edge carries the palette color of its generator.
    """
    lines = ["graph cayley {", "  node [shape=circle];"]
    for i, a in enumerate(cayley.perms):
        lines.append(f'  v{i} [label="{_node_label(a)}"];')
    for u, v, color in sorted(cayley.edges()):
        hexcolor = PALETTE[color % len(PALETTE)]
        lines.append(f'  v{u} -- v{v} [color="{hexcolor}", generator={color + 1}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
