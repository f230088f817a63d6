import pathlib
import random

import pytest

from allgeo import Graph, parse_graph

DATA = pathlib.Path(__file__).parent / "data"

# Toy digraph on {a..f} -> {1..6} used throughout; its geodesic levels are
# known exactly.
A, B, C, D, E, F = 1, 2, 3, 4, 5, 6


@pytest.fixture(scope="session")
def g2() -> Graph:
    return parse_graph((DATA / "g2.txt").read_text())


@pytest.fixture(scope="session")
def p3() -> Graph:
    return parse_graph("3 2 undirected unweighted\n1 2\n2 3")


@pytest.fixture(scope="session")
def k3() -> Graph:
    return parse_graph("3 3 undirected unweighted\n1 2\n1 3\n2 3")


@pytest.fixture(scope="session")
def c5() -> Graph:
    edges = "\n".join(f"{i} {i % 5 + 1}" for i in range(1, 6))
    return parse_graph(f"5 5 undirected unweighted\n{edges}")


def random_test_graph(rng: random.Random, n: int, m: int, directed: bool,
                      wmax: int = 1) -> Graph:
    """Small random instance for cross-checks (separate from bench generator)."""
    cap = n * (n - 1) if directed else n * (n - 1) // 2
    m = min(m, cap)
    pairs = set()
    while len(pairs) < m:
        u, v = rng.randint(1, n), rng.randint(1, n)
        if u == v:
            continue
        if not directed and u > v:
            u, v = v, u
        pairs.add((u, v))
    weighted = wmax > 1
    arcs = [(u, v, rng.randint(1, wmax) if weighted else 1)
            for u, v in sorted(pairs)]
    return Graph(n, directed, weighted, arcs)


def vertex_names(path) -> str:
    """Render a path over {1..6} as letters, e.g. (4,2,1) -> 'dba'."""
    return "".join("?abcdef"[v] for v in path)
