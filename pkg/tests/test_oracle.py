import random

import pytest

from allgeo import (Graph, SizeCapExceeded, brute_force_all_paths,
                    brute_force_distance, brute_force_geodesics,
                    floyd_warshall)
from allgeo.distances import UNREACHABLE
from conftest import random_test_graph, vertex_names


def test_k3_pair(k3):
    out = brute_force_all_paths(k3, 1, 2)
    assert [p.vertices for p in out] == [(1, 2), (1, 3, 2)]


def test_p3_pair(p3):
    assert [p.vertices for p in brute_force_all_paths(p3, 1, 3)] == [(1, 2, 3)]


def test_g2_e_to_a(g2):
    out = brute_force_all_paths(g2, 5, 1)
    assert [vertex_names(p) for p in out] == ["eda", "edba"]


def test_p3_geodesics(p3):
    assert len(brute_force_geodesics(p3)) == 6


def test_g2_geodesics(g2):
    assert len(brute_force_geodesics(g2)) == 23


def test_cap():
    g = Graph(13, False, False, [(i, i + 1, 1) for i in range(1, 13)])
    with pytest.raises(SizeCapExceeded):
        brute_force_all_paths(g, 1, 13)
    with pytest.raises(SizeCapExceeded):
        brute_force_geodesics(g)
    assert brute_force_all_paths(g, 1, 13, cap=13)[0].length == 12


def test_output_sorted():
    rng = random.Random(111)
    g = random_test_graph(rng, 7, 14, directed=False)
    out = [p.vertices for p in brute_force_all_paths(g, 1, 7)]
    assert out == sorted(out)


def test_oracle_distance_matches_fw():
    rng = random.Random(121)
    for _ in range(10):
        g = random_test_graph(rng, 7, 12, rng.random() < 0.5, rng.choice([1, 3]))
        d = floyd_warshall(g)
        for s in range(1, 8):
            for t in range(1, 8):
                want = d.rows[s][t] if d.rows[s][t] != UNREACHABLE else UNREACHABLE
                assert brute_force_distance(g, s, t) == want
