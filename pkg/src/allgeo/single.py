"""Extract one geodesic by greedy descent on the distance matrix.

From the current vertex u, step to any out-neighbor x with
w(u,x) + D(x,t) = D(u,t); the remaining distance strictly decreases, so
the walk reaches t and its total weight is exactly D(s,t). Ties go to the
smallest vertex id so output is deterministic.
"""

from __future__ import annotations

from .distances import DistanceMatrix, UNREACHABLE, UnreachableError
from .graph import Graph, Path


def one_geodesic(g: Graph, D: DistanceMatrix, s: int, t: int) -> Path:
    """One minimum-weight s-t path; raises UnreachableError if none exists."""
    total = D.dist(s, t)
    if total == UNREACHABLE:
        raise UnreachableError(f"no path from {s} to {t}")
    rows = D.rows
    verts = [s]
    u = s
    remaining = total
    while u != t:
        for x, w in g.neighbors(u):
            if w + rows[x][t] == remaining:
                verts.append(x)
                u = x
                remaining -= w
                break
        else:
            raise ValueError(
                f"distance matrix inconsistent with graph at vertex {u}")
    return Path(tuple(verts), total)
