from __future__ import annotations

import pytest

from berge_lab.constructions import make_block, make_block_tree, make_ht
from berge_lab.hypercore import (
    BergeWitness,
    MultiHypergraph,
    block_groups,
    hyperblocks,
    incidence_graph,
    is_block,
    is_block_tree,
    lower_rank,
    max_multiplicity,
)

from conftest import random_hypergraph


def H1(n, *edges):
    return MultiHypergraph.from_one_based(n, edges)


class TestBasics:
    def test_lower_rank(self):
        assert lower_rank(make_block(5, 4)) == 5
        assert lower_rank(H1(3, [1, 2], [1, 2, 3])) == 2
        with pytest.raises(ValueError, match="no edges"):
            lower_rank(MultiHypergraph(3, []))

    def test_max_multiplicity(self):
        assert max_multiplicity(H1(4, [1, 2, 3], [1, 2, 3], [2, 3, 4])) == 2
        assert max_multiplicity(H1(4, [1, 2], [2, 3])) == 1
        assert max_multiplicity(make_ht(5, 6, 2)) == 2
        assert max_multiplicity(MultiHypergraph(2, [])) == 0

    def test_edge_order_is_kept_and_multiset_counted(self):
        H = H1(4, [3, 1], [1, 3], [2, 4])
        assert H.one_based_edges() == [[1, 3], [1, 3], [2, 4]]
        assert H.multiplicities()[frozenset({0, 2})] == 2

    @pytest.mark.parametrize("edges", [[[]], [[0, 5]]])
    def test_rejects_bad_edges(self, edges):
        with pytest.raises(ValueError):
            MultiHypergraph(3, edges)


class TestIncidence:
    def test_single_edge_is_star(self):
        G = incidence_graph(H1(3, [1, 2, 3]))
        assert (G.m, G.n, G.num_edges) == (3, 1, 3)
        assert G.degree(G.y(0)) == 3

    def test_block_incidence_counts(self):
        G = incidence_graph(make_block(5, 4))
        assert (G.m, G.n, G.num_edges) == (6, 3, 15)

    def test_double_edge_is_c4(self):
        G = incidence_graph(H1(2, [1, 2], [1, 2]))
        assert G.num_edges == 4 and all(G.degree(v) == 2 for v in range(4))

    def test_round_trip(self, rng):
        for _ in range(50):
            H = random_hypergraph(rng, rng.randint(2, 8), rng.randint(0, 6))
            G = incidence_graph(H)
            back = [sorted(v for v in G.neighbors(G.y(j))) for j in range(G.n)]
            assert back == [sorted(e) for e in H.edges]


class TestHyperblocks:
    def test_two_block_tree(self):
        dec = hyperblocks(make_block_tree(5, 4, 2))
        assert len(dec) == 2
        assert len(dec.cut_vertices) == 1 and dec.cut_vertices[0][0] == "X"

    def test_single_block(self):
        dec = hyperblocks(make_block(5, 4))
        assert len(dec) == 1 and dec.cut_vertices == ()

    def test_disconnected_is_flagged(self):
        dec = hyperblocks(H1(4, [1, 2], [3, 4]))
        assert not dec.connected and dec.num_components == 2

    def test_edges_partitioned(self, rng):
        for _ in range(60):
            H = random_hypergraph(rng, rng.randint(2, 8), rng.randint(1, 6))
            dec = hyperblocks(H)
            # an edge slot can sit in several blocks only when it is a cut vertex
            cut_edges = {i for side, i in dec.cut_vertices if side == "Y"}
            seen = {}
            for hb in dec.blocks:
                for j in hb.edge_ids:
                    seen[j] = seen.get(j, 0) + 1
            for j in range(H.num_edges):
                assert seen.get(j, 0) >= 1
                assert seen[j] == 1 or j in cut_edges


class TestBlocks:
    def test_canonical_block(self):
        assert is_block(make_block(5, 4), 5, 4)
        assert is_block(make_block(6, 4), 6, 4)
        assert is_block(make_block(5, 4, full_edges=1), 5, 4)

    def test_wrong_vertex_count(self):
        H = MultiHypergraph(7, [list(range(7)) for _ in range(3)])
        assert not is_block(H, 5, 4)

    def test_shrunk_edge(self):
        B = make_block(5, 4)
        edges = [list(e) for e in B.edges]
        edges[0] = edges[0][:4]
        assert not is_block(MultiHypergraph(6, edges), 5, 4)

    def test_parameter_error(self):
        with pytest.raises(ValueError, match="r >= k\\+1"):
            is_block(make_block(5, 4), 4, 4)

    @pytest.mark.parametrize("shape", ["path", "star", [0, 0, 1]])
    def test_block_tree(self, shape):
        b = 3 if isinstance(shape, str) else 4
        H = make_block_tree(5, 4, b, shape)
        assert is_block_tree(H, 5, 4)
        assert is_block_tree(H, 5, 4, strict=False)
        assert 5 * H.num_edges == 3 * (H.n - 1)

    def test_glued_on_edge_slot_is_not_block_tree(self):
        # two blocks sharing one hyperedge: that edge is a Y-side cut vertex
        B = make_block(5, 4)
        edges = [sorted(e) for e in B.edges]
        shared = edges[2]
        other = [[v + 6 for v in e] for e in edges[:2]]
        # the shared edge also touches the second copy's vertices
        H = MultiHypergraph(12, edges[:2] + [shared + [6, 7]] + other)
        assert not is_block_tree(H, 5, 4)

    def test_repeated_edge_block(self):
        # {A, A, B}: tight for the bound, a Y-side cut vertex in G(H)
        A = [0, 1, 2, 3, 4]
        B = [1, 2, 3, 4, 5]
        H = MultiHypergraph(6, [A, A, B])
        assert not is_block_tree(H, 5, 4)
        assert is_block_tree(H, 5, 4, strict=False)
        assert is_block(H, 5, 4, require_2_connected=False)
        assert block_groups(H) == [[0, 1, 2]]


class TestWitness:
    def test_validate_and_drop(self):
        H = H1(3, [1, 2], [2, 3], [1, 3])
        w = BergeWitness("cycle", (0, 1, 2), (0, 1, 2))
        w.validate(H)
        p = w.drop_last_edge()
        assert p.kind == "path" and p.length == 2
        p.validate(H)

    def test_repeated_base_vertex(self):
        H = H1(3, [1, 2], [1, 2])
        with pytest.raises(ValueError):
            BergeWitness("cycle", (0, 0), (0, 1)).validate(H)

    def test_edge_must_contain_pair(self):
        H = H1(3, [1, 2], [2, 3])
        with pytest.raises(ValueError):
            BergeWitness("path", (0, 2), (0,)).validate(H)
