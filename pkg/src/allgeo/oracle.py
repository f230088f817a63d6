"""Brute-force reference implementations for small graphs.

Deliberately shares no traversal code with the production modules: paths are
found by plain recursion with no stack machinery and no distance-matrix
pruning, then sorted. Slow on purpose; capped by vertex count.
"""

from __future__ import annotations

from .distances import UNREACHABLE
from .graph import Graph, Path

DEFAULT_CAP = 12


class SizeCapExceeded(ValueError):
    pass


def _require_small(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise SizeCapExceeded(f"oracle limited to n <= {cap}, got n = {g.n}")


def brute_force_all_paths(g: Graph, s: int, t: int,
                          cap: int = DEFAULT_CAP) -> list[Path]:
    """Every simple s-t path, by exhaustive recursion, sorted."""
    _require_small(g, cap)
    if s == t:
        raise ValueError("source and sink must differ")
    found: list[Path] = []

    def extend(verts: list[int], weight):
        u = verts[-1]
        if u == t:
            found.append(Path(tuple(verts), weight))
            return
        for x, w in g.neighbors(u):
            if x not in verts:
                verts.append(x)
                extend(verts, weight + w)
                verts.pop()

    extend([s], 0)
    found.sort(key=lambda p: p.vertices)
    return found


def brute_force_geodesics(g: Graph, cap: int = DEFAULT_CAP) -> list[Path]:
    """Every geodesic of g: per ordered pair, the minimum-weight simple paths."""
    _require_small(g, cap)
    out: list[Path] = []
    for s in range(1, g.n + 1):
        for t in range(1, g.n + 1):
            if s == t:
                continue
            paths = brute_force_all_paths(g, s, t, cap)
            if not paths:
                continue
            best = min(p.weight for p in paths)
            out.extend(p for p in paths if p.weight == best)
    return out


def brute_force_distance(g: Graph, s: int, t: int, cap: int = DEFAULT_CAP):
    """Minimum simple-path weight from s to t (0 for s = t)."""
    if s == t:
        return 0
    paths = brute_force_all_paths(g, s, t, cap)
    if not paths:
        return UNREACHABLE
    return min(p.weight for p in paths)
