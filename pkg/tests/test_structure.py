from __future__ import annotations

import itertools

import pytest

from berge_lab.bigraph import BipartiteGraph, is_2_connected
from berge_lab.circumference import circumference, has_cycle_at_least
from berge_lab.structure import (
    HypothesisError,
    check_lemma_c1,
    check_saturated_crossing_formation,
    crossing_chain,
    crossing_pairs,
    decorate,
    disintegrate,
    disintegrate_trace,
    dispath_check,
    is_crossing_formation,
    lemma_cycle_bound,
    long_cycle_from_path,
    mixed_disintegrate,
    path_cover,
    separation_check,
    verify_path_cover,
)

from conftest import random_2_connected, random_bipartite, random_path


def scf_example(with_first_twin: bool = True) -> tuple[BipartiteGraph, list[int]]:
    """Two complete wings around one crossing pair (4, 6) on a 9-node path.

    X = v2, v4, v6, v8; Y = v1, v3, v5, v7, v9 plus the twins y' (of v1)
    and y'' (of v9).
    """
    X = {2: 0, 4: 1, 6: 2, 8: 3}
    Y = {1: 0, 3: 1, 5: 2, 7: 3, 9: 4, "a": 5, "b": 6}
    E = []
    for y in (1, 3, "a"):
        E += [(X[2], Y[y]), (X[4], Y[y]), (X[6], Y[y])]
    for y in (7, 9, "b"):
        E += [(X[4], Y[y]), (X[6], Y[y]), (X[8], Y[y])]
    E += [(X[4], Y[5]), (X[6], Y[5])]
    if not with_first_twin:
        E = [e for e in E if e[1] != Y["a"]]
    G = BipartiteGraph.from_edges(4, 7, E)
    P = [4, 0, 5, 1, 6, 2, 7, 3, 8]
    return G, P


def definitional_pairs(G, P):
    x, y = P[0], P[-1]
    marked = lambda v: G.has_edge(x, v) or G.has_edge(y, v)  # noqa: E731
    out = []
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            if G.has_edge(y, P[i]) and G.has_edge(x, P[j]) and not any(marked(P[t]) for t in range(i + 1, j)):
                out.append((i + 1, j + 1))
    return out


class TestCrossing:
    def test_five_node_example(self):
        G = BipartiteGraph.path(5)  # v1..v5 = x0 y0 x1 y1 x2 -> globals 0 3 1 4 2
        P = [0, 3, 1, 4, 2]
        G = G.add_edges([(0, 4), (2, 3)])
        assert crossing_pairs(G, P) == [(2, 4)]
        d = decorate(G, P)
        assert d.n_first == (2, 4) and d.n_last == (2, 4)
        assert d.shift_plus({3, 4}) == {1, 2}
        assert d.shift_minus({0, 3}) == {0}
        assert d.segment(4, 2) == (4, 1, 3)

    def test_single_edge(self):
        # the ends are adjacent, so v_1 in N(v_2) and v_2 in N(v_1) cross
        G = BipartiteGraph.complete(1, 1)
        assert crossing_pairs(G, [0, 1]) == [(1, 2)]

    def test_invalid_path(self):
        G = BipartiteGraph.path(4)
        with pytest.raises(ValueError):
            crossing_pairs(G, [0, 1])

    def test_against_definition(self, rng):
        for _ in range(300):
            G = random_bipartite(rng, rng.randint(2, 6), rng.randint(2, 6), 0.5)
            P = random_path(rng, G)
            if P is None:
                continue
            assert crossing_pairs(G, P) == definitional_pairs(G, P)

    def test_chains(self):
        assert crossing_chain([(2, 4), (4, 8), (8, 10)]) == [2, 4, 8, 10]
        assert crossing_chain([(2, 4), (6, 9)]) is None
        assert crossing_chain([]) is None

    def test_no_pairs_is_not_a_formation(self):
        G = BipartiteGraph.path(4)  # x0 y0 x1 y1
        P = [0, 2, 1, 3]
        assert crossing_pairs(G, P) == []
        assert not is_crossing_formation(G, P)


class TestSCF:
    def test_example_passes(self):
        G, P = scf_example()
        rep = check_saturated_crossing_formation(G, P)
        assert crossing_pairs(G, P) == [(4, 6)]
        assert rep.ok, rep.to_dict()
        assert separation_check(G, P)
        assert dispath_check(G, P, 4)

    def test_without_twin_fails_part4(self):
        G, P = scf_example(with_first_twin=False)
        rep = check_saturated_crossing_formation(G, P)
        assert rep.parts[4] is False
        assert rep.first_violation[0] == 4

    def test_wide_gap_fails_part3(self):
        # ends in X; N(v1) = N(v13) = {v2, v6, v12}; chain 2 < 6 < 12
        P_len = 13
        base = BipartiteGraph.path(P_len)
        order = []
        for i in range(P_len):
            order.append(i // 2 if i % 2 == 0 else base.m + i // 2)
        v = {i + 1: order[i] for i in range(P_len)}
        G = base.add_edges([(v[1], v[6]), (v[1], v[12]), (v[13], v[2]), (v[13], v[6])])
        assert crossing_pairs(G, order) == [(2, 6), (6, 12)]
        rep = check_saturated_crossing_formation(G, order)
        assert rep.parts[1] is True and rep.parts[3] is False

    def test_separation_precondition(self):
        G = BipartiteGraph.cycle(6)
        with pytest.raises(HypothesisError):
            separation_check(G, [0, 3, 1, 4, 2, 5])

    def test_report_dict(self):
        G, P = scf_example()
        d = check_saturated_crossing_formation(G, P).to_dict()
        assert d["ok"] is True and set(d["parts"]) == {"1", "2", "3", "4", "5"}


class TestLongCycle:
    def _check(self, G, P):
        w = long_cycle_from_path(G, P)
        w.validate(G)
        d = decorate(G, P)
        assert w.length >= lemma_cycle_bound(G, P)
        need = {d.node(i) for i in d.n_first} | {d.node(i) for i in d.n_last}
        assert need <= set(w.nodes)
        return w

    def test_k23(self):
        G = BipartiteGraph.complete(2, 3)
        P = [2, 0, 3, 1, 4]
        w = self._check(G, P)
        assert w.length >= 4

    def test_c6(self):
        G = BipartiteGraph.cycle(6)
        P = [0, 3, 1, 4, 2, 5]
        assert self._check(G, P).length == 6

    def test_random(self, rng):
        for _ in range(200):
            G = random_2_connected(rng)
            P = random_path(rng, G)
            self._check(G, P)

    def test_requires_2_connected(self):
        G = BipartiteGraph.path(4)
        with pytest.raises(HypothesisError):
            long_cycle_from_path(G, [0, 2, 1, 3])


class TestDisintegrate:
    def test_examples(self):
        K = BipartiteGraph.complete(3, 3)
        assert disintegrate(K, 2) == K
        assert disintegrate(K, 3).num_nodes == 0
        assert disintegrate(BipartiteGraph.path(4), 1).num_nodes == 0
        K34 = BipartiteGraph.complete(3, 4)
        assert mixed_disintegrate(K34, 3, 2) == K34
        star = BipartiteGraph.complete(1, 5)
        assert mixed_disintegrate(star, 0, 1).num_nodes == 0

    def test_mixed_matches_plain(self, rng):
        for _ in range(50):
            G = random_bipartite(rng, 5, 5, 0.5)
            a = rng.randint(0, 3)
            assert mixed_disintegrate(G, a, a) == disintegrate(G, a)

    def test_star_sets(self):
        K = BipartiteGraph.complete(3, 3)
        # dropping one X-node leaves K_{2,3}: Y-degrees 2
        core = disintegrate(K, 1, x_star=[0, 1], y_star=None)
        assert (core.m, core.n) == (2, 3)
        assert disintegrate(K, 2, x_star=[0, 1]).num_nodes == 0

    def test_order_independent_and_idempotent(self, rng):
        for _ in range(100):
            G = random_bipartite(rng, rng.randint(1, 7), rng.randint(1, 7), 0.45)
            alpha = rng.randint(0, 3)
            keep, _ = disintegrate_trace(G, alpha, alpha)
            for _i in range(3):
                order = list(range(G.num_nodes))
                rng.shuffle(order)
                assert disintegrate_trace(G, alpha, alpha, order=order)[0] == keep
            core = G.induced(keep)
            assert disintegrate(core, alpha) == core
            assert core.num_nodes == 0 or min(core.degree(v) for v in range(core.num_nodes)) >= alpha + 1


class TestPathCover:
    def test_k22(self):
        assert path_cover(BipartiteGraph.complete(2, 2)).complete

    def test_p5(self):
        G = BipartiteGraph.path(5)
        cover = path_cover(G)
        assert not cover.complete and len(cover.paths) == 1
        assert verify_path_cover(G, G.x_nodes, G.y_nodes, cover)

    def test_two_p3(self):
        # a-b-a' twice; each b must have degree >= 2
        G = BipartiteGraph.from_edges(4, 2, [(0, 0), (1, 0), (2, 1), (3, 1)])
        cover = path_cover(G)
        assert len(cover.paths) == 2
        assert verify_path_cover(G, G.x_nodes, G.y_nodes, cover)

    def test_hypotheses(self):
        with pytest.raises(HypothesisError, match="degree"):
            path_cover(BipartiteGraph.from_edges(2, 2, [(0, 0), (1, 0), (0, 1)]))
        with pytest.raises(HypothesisError, match="isolated"):
            path_cover(BipartiteGraph.from_edges(3, 2, [(0, 0), (1, 0), (0, 1), (1, 1)]))

    def test_exhaustive_g2(self):
        # all bipartite H with |B| = 2 and |A| <= 4
        for a in range(2, 5):
            for bits in range(1 << (2 * a)):
                edges = [(i % a, i // a) for i in range(2 * a) if bits >> i & 1]
                G = BipartiteGraph.from_edges(a, 2, edges)
                if any(G.degree(v) == 0 for v in range(G.num_nodes)):
                    continue
                if any(G.degree(G.y(j)) < 2 for j in range(2)):
                    continue
                cover = path_cover(G)
                assert verify_path_cover(G, G.x_nodes, G.y_nodes, cover)


class TestNeighbourhoodRestriction:
    def test_scan_k4(self):
        A, B = [0, 1, 2], [4, 5]
        checked = 0
        for bits in range(1 << 10):
            free = [(x, y) for x in range(4) for y in range(4) if not (x < 3 and y < 2)]
            edges = [(x, y) for x in range(3) for y in range(2)]
            edges += [free[i] for i in range(10) if bits >> i & 1]
            G = BipartiteGraph.from_edges(4, 4, edges)
            if not is_2_connected(G) or has_cycle_at_least(G, 8) is not None:
                continue
            assert check_lemma_c1(G, A, B, 4)
            checked += 1
        assert checked > 0

    def test_hypothesis_errors(self):
        G = BipartiteGraph.complete(4, 4)
        with pytest.raises(HypothesisError, match="c\\(G\\)"):
            check_lemma_c1(G, [0, 1, 2], [4, 5], 4)
        P = BipartiteGraph.from_edges(4, 4, [(x, y) for x in range(3) for y in range(2)] + [(3, 2), (3, 3)])
        with pytest.raises(HypothesisError, match="2-connected"):
            check_lemma_c1(P, [0, 1, 2], [4, 5], 4)
