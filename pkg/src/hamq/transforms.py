"""Degree-sum closure and the Kelmans transformation.

``closure(G, k)`` repeatedly joins nonadjacent pairs whose degree sum is at
least k until none remain.  The resulting edge set is independent of scan
order (a classical fact, asserted by randomized test rather than re-proved
here); this implementation scans pairs lexicographically and restarts after
every addition, and returns the addition order as a replayable trace.

``kelmans(G, u, v)`` moves every neighbor of v outside the closed
neighborhood of u over to u.  The operation is purely combinatorial here;
its spectral monotonicity (q never decreases) is checked by the
verification suites.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameters
from .graph import Edge, Graph, add_edges, iter_bits


@dataclass(frozen=True)
class ClosureTrace:
    """Replayable record of a closure run: edges in the order added.

    At the moment each edge (u, v) was added, d(u) + d(v) >= k held in the
    graph built so far.
    """

    k: int
    added: tuple[Edge, ...]


def closure(g: Graph, k: int) -> tuple[Graph, ClosureTrace]:
    """The k-closure: no nonadjacent pair of the result has degree sum >= k."""
    if k < 1:
        raise BadParameters(f"closure parameter must be >= 1, got {k}")
    cur = g
    added: list[Edge] = []
    n = g.n
    changed = True
    while changed:
        changed = False
        deg = cur.degrees()
        for u in range(n):
            row = cur.row(u)
            for v in range(u + 1, n):
                if not (row >> v & 1) and deg[u] + deg[v] >= k:
                    cur = add_edges(cur, [(u, v)])
                    added.append((u, v))
                    changed = True
                    break
            if changed:
                break
    return cur, ClosureTrace(k=k, added=tuple(added))


def kelmans(g: Graph, u: int, v: int) -> Graph:
    """Move the neighbors of v outside N[u] over to u.

    Exactly the edges {vx : x in N(v) \\ N[u]} are deleted and {ux} added;
    adjacency between u and v, and the degree of every other vertex, are
    unchanged.
    """
    if u == v:
        raise BadParameters("kelmans needs two distinct vertices")
    moved = g.row(v) & ~(g.row(u) | (1 << u))
    if not moved:
        return g
    rows = list(g._rows)
    for x in iter_bits(moved):
        rows[v] ^= 1 << x
        rows[x] ^= 1 << v
        rows[u] |= 1 << x
        rows[x] |= 1 << u
    return Graph._from_rows(g.n, rows)
