from __future__ import annotations

import pytest

from berge_lab.circumference import berge_circumference, longest_berge_path
from berge_lab.constructions import (
    lift_for_paths,
    make_block,
    make_block_tree,
    make_ht,
    make_star,
    make_t1_family,
)
from berge_lab.hypercore import MultiHypergraph, is_block, is_block_tree, lower_rank


def test_make_block():
    B = make_block(5, 4)
    assert B.one_based_edges() == [[2, 3, 4, 5, 6], [1, 3, 4, 5, 6], [1, 2, 4, 5, 6]]
    B6 = make_block(6, 4)
    assert B6.n == 7 and all(len(e) == 6 for e in B6.edges)
    with pytest.raises(ValueError):
        make_block(4, 4)


@pytest.mark.parametrize("b, shape, n, e", [(2, "path", 11, 6), (1, "path", 6, 3), (3, "star", 16, 9)])
def test_make_block_tree(b, shape, n, e):
    H = make_block_tree(5, 4, b, shape)
    assert (H.n, H.num_edges) == (n, e)
    assert is_block_tree(H, 5, 4)
    assert berge_circumference(H) <= 3


def test_block_tree_one_is_block():
    assert make_block_tree(5, 4, 1).edges == make_block(5, 4).edges


def test_bad_seed_list():
    with pytest.raises(ValueError):
        make_block_tree(5, 4, 3, [0, 2])


def test_make_star():
    S = make_star(7, 4)
    assert S.one_based_edges() == [[1, 5, 6, 7], [2, 5, 6, 7], [3, 5, 6, 7], [4, 5, 6, 7]]
    assert berge_circumference(S) == 3
    with pytest.raises(ValueError):
        make_star(5, 5)


def test_make_ht():
    H = make_ht(5, 6, 2)
    assert (H.n, H.num_edges) == (10, 4)
    assert berge_circumference(H) <= 4
    assert 4 * (H.n - 2) == H.num_edges * (2 * 6 - 4)
    with pytest.raises(ValueError):
        make_ht(4, 6, 2)


def test_make_t1_family():
    F = make_t1_family(5, 4, 1, 1)
    assert (F.m_star, F.G.n) == (6, 10)
    F = make_t1_family(5, 4, 0, 1)
    assert (F.G.m, F.G.n, F.G.num_edges) == (3, 6, 18)
    with pytest.raises(ValueError):
        make_t1_family(5, 4, 0, 0)


def test_t1_family_counts():
    for s in range(4):
        for t in range(4):
            if s + t:
                F = make_t1_family(6, 4, s, t)
                assert F.m_star == (s + t) * 3
                assert F.G.n == s * 5 + t * 6 + 1


def test_lift():
    H = MultiHypergraph(2, [[0, 1]])
    L = lift_for_paths(H)
    assert L.n == 3 and L.one_based_edges() == [[1, 2, 3]]
    B = make_block(5, 4)
    assert lower_rank(lift_for_paths(B)) == 6
    assert lift_for_paths(B).num_edges == 3


def test_block_with_full_edges():
    B = make_block(5, 4, full_edges=2)
    assert sorted(len(e) for e in B.edges) == [5, 6, 6]
    assert is_block(B, 5, 4)
    assert longest_berge_path(B) >= 2
