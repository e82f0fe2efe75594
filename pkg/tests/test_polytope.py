import itertools
import math

import pytest
from oracles import brute_coset

from graphicahedron import (
    DisconnectedGraphError,
    Face,
    Flag,
    adjacent_flag,
    build,
    build_cayley,
    face_count,
    flag_count,
    flags,
    identity,
    make_graph,
    one_skeleton_equals_cayley,
    posets_isomorphic,
    preset_graph,
    product_poset,
    skeleton,
    transposition_of_edge,
    tree_order_equals_coset_inclusion,
    verify_diamond,
    verify_strong_flag_connectedness,
    vertex_figure_is_simplex,
)
from graphicahedron.errors import CapacityError
from graphicahedron.polytope import (
    drop_face,
    face_id,
    flag_tables,
    full_poset,
    interval_below,
)

SMALL_PRESETS = [
    ("path", 1),
    ("path", 2),
    ("path", 3),
    ("path", 4),
    ("cycle", 3),
    ("cycle", 4),
    ("star", 3),
    ("star", 4),
    ("paw", None),
    ("fork", None),
]


def hedron(name, n=None):
    return build(preset_graph(name, n))


# ---------------------------------------------------------------------------
# Construction


def test_single_edge_is_a_segment():
    P = hedron("path", 1)
    assert P.f_vector() == (2, 1)


def test_two_edges_give_a_hexagon():
    P = hedron("path", 2)
    assert P.f_vector() == (6, 6, 1)


def test_triangle_f_vector():
    assert hedron("cycle", 3).f_vector() == (6, 9, 3, 1)


def test_build_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError):
        build(make_graph(4, [(0, 1), (2, 3)]))


def test_build_capacity():
    with pytest.raises(CapacityError):
        build(preset_graph("path", 7), max_perms=5040 - 1)


def test_faces_are_self_canonical_and_deduplicated():
    for name, n in [("cycle", 3), ("paw", None), ("star", 3)]:
        P = hedron(name, n)
        for f in P.all_faces():
            assert P.face(f.edges, f.rep) == f
            assert f.rank == len(f.edges)
        for r in range(P.rank + 1):
            faces = P.faces(r)
            assert len(set(faces)) == len(faces)


def test_vertices_and_top():
    P = hedron("cycle", 3)
    assert len(P.faces(0)) == math.factorial(3)
    top = P.greatest_face
    assert top.rank == 3 and top.edges == frozenset(range(3))
    assert all(P.is_incident(f, top) for f in P.all_faces())


def test_face_count_formula_matches_enumeration():
    for name, n in SMALL_PRESETS + [("path", 5), ("cycle", 6)]:
        P = hedron(name, n)
        for r in range(P.rank + 1):
            assert face_count(P.graph, r) == len(P.faces(r))
    assert face_count(preset_graph("cycle", 3), 1) == 9
    assert face_count(preset_graph("cycle", 3), 0) == 6
    assert face_count(preset_graph("cycle", 3), 3) == 1


def test_face_count_against_coset_dedup():
    # independent route: canonicalize all p! pairs per K and count distinct reps
    for name, n in [("cycle", 3), ("path", 3), ("paw", None)]:
        g = preset_graph(name, n)
        P = build(g)
        for size in range(g.q + 1):
            total = 0
            for combo in itertools.combinations(range(g.q), size):
                part = P.partition_of(frozenset(combo))
                total += len({
                    tuple(min(brute_coset(part, a)))
                    for a in itertools.permutations(range(g.p))
                })
            assert total == len(P.faces(size))


# ---------------------------------------------------------------------------
# Incidence


def test_incidence_reflexive_and_examples():
    P = hedron("cycle", 3)
    for f in P.all_faces():
        assert P.is_incident(f, f)
    alpha = (1, 2, 0)
    v = P.vertex(alpha)
    e = P.face([0], alpha)
    assert P.is_incident(v, e)


def test_incidence_example_decided_by_coset_listing():
    # vertex (empty, id) against the edge of color 1 through (1 3)
    P = hedron("cycle", 3)
    g = P.graph
    a13 = transposition_of_edge(3, (0, 2))
    edge_face = P.face([0], a13)
    coset = brute_coset(P.partition_of(frozenset([0])), a13)
    assert (identity(3) in coset) == P.is_incident(P.vertex(identity(3)), edge_face)
    assert not P.is_incident(P.vertex(identity(3)), edge_face)
    # the two vertices genuinely below that edge are its coset members
    below = [v for v in P.faces(0) if P.is_incident(v, edge_face)]
    assert {v.rep for v in below} == coset


def test_incidence_is_a_partial_order():
    for name, n in [("path", 2), ("cycle", 3), ("paw", None)]:
        P = hedron(name, n)
        faces = list(P.all_faces())
        le = {(f, g) for f in faces for g in faces if P.is_incident(f, g)}
        for f in faces:
            assert (f, f) in le
        for f, g in le:
            if f != g:
                assert (g, f) not in le
        succ = {}
        for f, g in le:
            succ.setdefault(f, []).append(g)
        for f, g in le:
            for h in succ.get(g, ()):
                assert (f, h) in le


# ---------------------------------------------------------------------------
# Flags


def test_flag_counts():
    assert flag_count(hedron("path", 2)) == 12
    assert flag_count(hedron("cycle", 3)) == 36
    assert flag_count(hedron("paw")) == 576


def test_flags_enumeration_is_deterministic_and_complete():
    P = hedron("cycle", 3)
    all_flags = list(flags(P))
    assert len(all_flags) == 36
    assert len(set(all_flags)) == 36
    assert all_flags == list(flags(P))


def test_adjacent_flag_examples():
    P = hedron("path", 2)
    phi = Flag((0, 1), identity(3))
    tau0 = transposition_of_edge(3, P.graph.edges[0])
    assert adjacent_flag(P, phi, 0) == Flag((0, 1), tau0)
    assert adjacent_flag(P, phi, 1) == Flag((1, 0), identity(3))
    with pytest.raises(ValueError):
        adjacent_flag(P, phi, 2)


def test_adjacent_flag_is_a_fixed_point_free_involution():
    for name, n in SMALL_PRESETS:
        P = hedron(name, n)
        if flag_count(P) > 10**4:
            continue
        for phi in flags(P):
            for j in range(P.rank):
                psi = adjacent_flag(P, phi, j)
                assert psi != phi
                assert adjacent_flag(P, psi, j) == phi


def test_distant_adjacencies_commute():
    for name, n in SMALL_PRESETS:
        P = hedron(name, n)
        if flag_count(P) > 10**4:
            continue
        pairs = [
            (j, k)
            for j in range(P.rank)
            for k in range(j + 2, P.rank)
        ]
        for phi in flags(P):
            for j, k in pairs:
                a = adjacent_flag(P, adjacent_flag(P, phi, j), k)
                b = adjacent_flag(P, adjacent_flag(P, phi, k), j)
                assert a == b


def test_flag_tables_match_adjacent_flag():
    P = hedron("cycle", 3)
    n, tables = flag_tables(P)
    assert n == 36
    indexed = list(flags(P))
    index = {f: i for i, f in enumerate(indexed)}
    for i, phi in enumerate(indexed):
        for j in range(P.rank):
            assert tables[j][i] == index[adjacent_flag(P, phi, j)]


def test_flag_tables_capacity():
    with pytest.raises(CapacityError):
        flag_tables(hedron("paw"), max_flags=100)


# ---------------------------------------------------------------------------
# Axioms


def test_diamond_passes_on_presets():
    for name, n in [("path", 2), ("cycle", 3), ("paw", None)]:
        report = verify_diamond(hedron(name, n))
        assert report.passed, report.failure


def test_diamond_fails_with_witness_on_corrupted_poset():
    P = hedron("path", 2)
    corrupted = drop_face(P, P.faces(1)[0])
    report = verify_diamond(corrupted)
    assert not report.passed
    assert report.failure is not None and "expected 2" in report.failure


def test_strong_flag_connectedness_passes():
    for name, n in [("path", 2), ("cycle", 3), ("paw", None)]:
        report = verify_strong_flag_connectedness(hedron(name, n))
        assert report.passed, report.failure


def test_strong_flag_connectedness_negative_control():
    # deleting one adjacency color disconnects the flag graph
    P = hedron("paw")
    report = verify_strong_flag_connectedness(P, drop_color=2)
    assert not report.passed
    assert "reachable" in report.failure


def test_vertex_figures_are_boolean():
    for name, n in [("path", 2), ("paw", None)]:
        P = hedron(name, n)
        results = [vertex_figure_is_simplex(P, v) for v in P.faces(0)]
        assert all(results)
        assert len(set(results)) == 1  # uniform across the vertex-transitive orbit


def test_vertex_figure_rejects_non_vertex():
    P = hedron("path", 2)
    with pytest.raises(ValueError):
        vertex_figure_is_simplex(P, P.greatest_face)


def test_vertex_figure_detects_missing_face():
    P = hedron("paw")
    v = P.faces(0)[0]
    above = [f for f in P.faces(2) if P.is_incident(v, f)]
    corrupted = drop_face(P, above[0])
    assert not vertex_figure_is_simplex(corrupted, v)


# ---------------------------------------------------------------------------
# Skeleta


def test_skeleton_of_hexagon_is_a_six_cycle():
    P = hedron("path", 2)
    skel = skeleton(P, 1)
    assert len(skel.faces_by_rank[0]) == 6
    edges = skel.vertex_edges()
    assert len(edges) == 6
    degree = {}
    for u, v, _ in edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    assert set(degree.values()) == {2}
    # single cycle: connected
    adj = {}
    for u, v, _ in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen, frontier = {0}, [0]
    while frontier:
        frontier = [w for u in frontier for w in adj[u] if w not in seen and not seen.add(w)]
    assert len(seen) == 6


def test_skeleton_rank_zero_is_isolated_vertices():
    P = hedron("cycle", 3)
    skel = skeleton(P, 0)
    assert len(skel.faces_by_rank[0]) == 6
    assert skel.vertex_edges() == ()


def test_skeleton_c3_counts():
    skel = skeleton(hedron("cycle", 3), 1)
    assert len(skel.faces_by_rank[0]) == 6
    assert len(skel.vertex_edges()) == 9


def test_skeleton_range_check():
    with pytest.raises(ValueError):
        skeleton(hedron("path", 2), 2)


def test_one_skeleton_equals_cayley():
    for name, n in SMALL_PRESETS:
        g = preset_graph(name, n)
        assert one_skeleton_equals_cayley(build(g), build_cayley(g))


def test_one_skeleton_mismatched_inputs():
    P = hedron("path", 2)
    assert not one_skeleton_equals_cayley(P, build_cayley(preset_graph("cycle", 3)))
    # same p and q but different edge sets
    assert not one_skeleton_equals_cayley(
        hedron("path", 3), build_cayley(preset_graph("star", 3))
    )


def test_skeleton_edges_equal_cayley_edges():
    g = preset_graph("cycle", 3)
    skel_edges = set(skeleton(build(g), 1).vertex_edges())
    cayley_edges = set(build_cayley(g).edges())
    assert skel_edges == cayley_edges


# ---------------------------------------------------------------------------
# Order versus coset inclusion, and facet products


def test_tree_order_equals_coset_inclusion_for_trees():
    holds, witness = tree_order_equals_coset_inclusion(preset_graph("path", 3))
    assert holds and witness is None
    holds, witness = tree_order_equals_coset_inclusion(preset_graph("star", 3))
    assert holds and witness is None


def test_cycle_breaks_coset_inclusion_equivalence():
    holds, witness = tree_order_equals_coset_inclusion(preset_graph("cycle", 3))
    assert not holds
    f, g = witness
    # the witness really is a containment of cosets without face incidence
    P = build(preset_graph("cycle", 3))
    assert not P.is_incident(f, g)
    assert brute_coset(P.partition_of(f.edges), f.rep) <= brute_coset(P.partition_of(g.edges), g.rep)
    assert not (f.edges <= g.edges)


def test_prism_facets_are_products_of_component_polytopes():
    # a facet over a disconnected edge set is the product of the
    # graphicahedra of its nontrivial components
    fork = preset_graph("fork")
    P = build(fork)
    prism_K = frozenset([0, 2, 3])  # segment {1,2} plus path 4-3-5
    facets = [f for f in P.faces(3) if f.edges == prism_K]
    assert len(facets) == 10
    segment = full_poset(build(preset_graph("path", 1)))
    hexagon = full_poset(build(preset_graph("path", 2)))
    expected = product_poset(segment, hexagon)
    for facet in facets[:2]:
        assert posets_isomorphic(interval_below(P, facet), expected)


def test_face_id_format():
    f = Face(frozenset([0, 2]), (1, 0, 2, 3))
    assert face_id(f) == "K{1,3}:a(2,1,3,4)"


def test_trivial_graph_gives_the_point_polytope():
    P = build(make_graph(1, []))
    assert P.f_vector() == (1,)
    assert flag_count(P) == 1
    assert list(flags(P)) == [Flag((), (0,))]
    assert verify_diamond(P).passed
    assert verify_strong_flag_connectedness(P).passed
    assert vertex_figure_is_simplex(P, P.greatest_face)


def test_single_edge_polytope_axioms():
    P = hedron("path", 1)
    assert verify_diamond(P).passed
    assert verify_strong_flag_connectedness(P).passed
    assert all(vertex_figure_is_simplex(P, v) for v in P.faces(0))
