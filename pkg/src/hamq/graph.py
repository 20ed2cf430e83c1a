"""Immutable simple graphs on dense integer vertices with bit-set adjacency.

A :class:`Graph` is a value: every edit returns a new instance, so graphs can
be shared freely across threads and reused as dictionary keys.  Vertices are
``0..n-1``.  Adjacency is stored as one Python integer bit mask per vertex,
which makes neighborhood intersections, connectivity sweeps and popcount-based
degree queries cheap even without numpy.

Constructors document their vertex-order contract so that partitions built on
top of them (see :mod:`hamq.families`) are reproducible:

* ``join(G, H)`` keeps G's vertices first (``0..n_G-1``), then H's.
* ``disjoint_union(G, H)`` and ``copies(k, G)`` lay blocks out left to right.

Serialization supports the standard graph6 byte layout (bit-exact) and a
plain edge-list text format (first line ``"n m"``, then ``m`` lines ``"u v"``).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import BadParameters, NotAnEdge, ParseError, SizeLimit

Edge = tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def normalize_edge(u: int, v: int) -> Edge:
    """Return the pair as ``(min, max)``; loops are rejected."""
    if u == v:
        raise BadParameters(f"loop at vertex {u} is not a simple edge")
    return (u, v) if u < v else (v, u)


def edge_set(pairs: Iterable[Sequence[int]]) -> frozenset[Edge]:
    """Normalize an iterable of vertex pairs into a canonical edge set."""
    return frozenset(normalize_edge(u, v) for u, v in pairs)


class Graph:
    """Undirected simple graph; immutable value semantics.

    Invariants (established at construction): no loops, symmetric adjacency,
    cached degrees equal to row popcounts, ``2m == sum(degrees)``.
    """

    __slots__ = ("n", "_rows", "_deg", "_m")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 1:
            raise BadParameters(f"graph order must be >= 1, got {n}")
        rows = [0] * n
        m = 0
        for u, v in edges:
            u, v = normalize_edge(u, v)
            if not (0 <= u and v < n):
                raise BadParameters(f"edge ({u},{v}) out of range for n={n}")
            if rows[u] >> v & 1:
                raise BadParameters(f"duplicate edge ({u},{v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            m += 1
        self.n = n
        self._rows = tuple(rows)
        self._deg = tuple(r.bit_count() for r in rows)
        self._m = m

    @classmethod
    def _from_rows(cls, n: int, rows: Sequence[int]) -> "Graph":
        """Internal fast path; caller guarantees symmetry and no loops."""
        g = object.__new__(cls)
        g.n = n
        g._rows = tuple(rows)
        g._deg = tuple(r.bit_count() for r in rows)
        g._m = sum(g._deg) // 2
        return g

    # -- basic queries ------------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def degree(self, v: int) -> int:
        return self._deg[v]

    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def row(self, v: int) -> int:
        """Adjacency bit mask of ``v``."""
        return self._rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._rows[v]))

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically."""
        out = []
        for u in range(self.n):
            r = self._rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    out.append((u, v))
                r >>= 1
                v += 1
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


# -- constructors -----------------------------------------------------------


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, edges)


def complete(n: int) -> Graph:
    """The complete graph K_n."""
    if n < 1:
        raise BadParameters(f"graph order must be >= 1, got {n}")
    full = (1 << n) - 1
    return Graph._from_rows(n, [full ^ (1 << v) for v in range(n)])


def cycle(n: int) -> Graph:
    """The cycle C_n (n >= 3)."""
    if n < 3:
        raise BadParameters(f"cycle needs order >= 3, got {n}")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    """The path P_n."""
    if n < 1:
        raise BadParameters(f"graph order must be >= 1, got {n}")
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def join(g: Graph, h: Graph) -> Graph:
    """Join of two graphs: all cross edges added.

    Vertex order: g's vertices come first (0..g.n-1), then h's.
    """
    ng, nh = g.n, h.n
    g_ones = (1 << ng) - 1
    h_ones = ((1 << nh) - 1) << ng
    rows = [g.row(v) | h_ones for v in range(ng)]
    rows += [(h.row(v) << ng) | g_ones for v in range(nh)]
    return Graph._from_rows(ng + nh, rows)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; g's block first, then h's."""
    rows = list(g._rows) + [h.row(v) << g.n for v in range(h.n)]
    return Graph._from_rows(g.n + h.n, rows)


def copies(k: int, g: Graph) -> Graph:
    """k vertex-disjoint copies of g, laid out block by block."""
    if k < 1:
        raise BadParameters(f"need k >= 1 copies, got {k}")
    rows = []
    for i in range(k):
        shift = i * g.n
        rows += [g.row(v) << shift for v in range(g.n)]
    return Graph._from_rows(k * g.n, rows)


def delete_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    """Remove the given edges; raises NotAnEdge if a pair is absent."""
    rows = list(g._rows)
    for pair in edge_set(edges):
        u, v = pair
        if not (0 <= u and v < g.n):
            raise NotAnEdge(f"({u},{v}) out of range for n={g.n}")
        if not rows[u] >> v & 1:
            raise NotAnEdge(f"({u},{v}) is not an edge")
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
    return Graph._from_rows(g.n, rows)


def add_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    """Add the given edges; raises BadParameters if a pair is already present."""
    rows = list(g._rows)
    for pair in edge_set(edges):
        u, v = pair
        if not (0 <= u and v < g.n):
            raise BadParameters(f"({u},{v}) out of range for n={g.n}")
        if rows[u] >> v & 1:
            raise BadParameters(f"({u},{v}) is already an edge")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._from_rows(g.n, rows)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a vertex permutation: vertex v of g becomes perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise BadParameters("perm is not a permutation of the vertex set")
    rows = [0] * g.n
    for v in range(g.n):
        r = 0
        for u in iter_bits(g.row(v)):
            r |= 1 << perm[u]
        rows[perm[v]] = r
    return Graph._from_rows(g.n, rows)


# -- structural queries -----------------------------------------------------


def min_degree(g: Graph) -> int:
    return min(g._deg)


def _reach_mask(rows: Sequence[int], start: int, allowed: int) -> int:
    """Bit mask of vertices reachable from start inside ``allowed``."""
    reached = (1 << start) & allowed
    frontier = reached
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & allowed & ~reached
        reached |= frontier
    return reached


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return _reach_mask(g._rows, 0, full) == full


def is_2_connected(g: Graph) -> bool:
    """Connected with no articulation vertex; graphs of order < 3 are not
    2-connected under this convention."""
    n = g.n
    if n < 3:
        return False
    if not is_connected(g):
        return False
    full = (1 << n) - 1
    for v in range(n):
        allowed = full ^ (1 << v)
        start = 0 if v != 0 else 1
        if _reach_mask(g._rows, start, allowed) != allowed:
            return False
    return True


CLIQUE_SIZE_GATE = 64


def clique_number(g: Graph) -> int:
    """Exact clique number by branch and bound (gated at n <= 64)."""
    n = g.n
    if n > CLIQUE_SIZE_GATE:
        raise SizeLimit(f"exact clique search is gated at n <= {CLIQUE_SIZE_GATE}")
    rows = g._rows
    # degeneracy order: repeatedly peel a minimum-degree vertex
    remaining = (1 << n) - 1
    deg = list(g._deg)
    order = []
    for _ in range(n):
        v = min(iter_bits(remaining), key=lambda w: deg[w])
        order.append(v)
        remaining ^= 1 << v
        for u in iter_bits(rows[v] & remaining):
            deg[u] -= 1
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        if size + cand.bit_count() <= best:
            return
        # pivot on a candidate covering the most of cand
        pivot = max(iter_bits(cand), key=lambda w: (rows[w] & cand).bit_count())
        ext = cand & ~rows[pivot]
        while ext:
            b = ext & -ext
            v = b.bit_length() - 1
            expand(size + 1, cand & rows[v])
            cand ^= b
            ext ^= b
            if size + cand.bit_count() <= best:
                return

    suffix = 0
    for v in reversed(order):
        expand(1, rows[v] & suffix)
        suffix |= 1 << v
    return best


# -- graph6 and edge-list serialization --------------------------------------

_G6_HEADER = ">>graph6<<"


def emit_graph6(g: Graph) -> str:
    """Encode in graph6 (no header), bit-exact per the standard byte layout."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    elif n <= 68719476735:
        head = "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    else:
        raise BadParameters(f"graph6 cannot encode n={n}")
    rows = g._rows
    out = []
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = rows[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return head + "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record; raises ParseError with a byte offset."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ParseError("empty graph6 record", 0)

    def val(i: int) -> int:
        c = ord(s[i])
        if not 63 <= c <= 126:
            raise ParseError(f"invalid graph6 byte {c!r}", i)
        return c - 63

    if s[0] != "~":
        n = val(0)
        idx = 1
    elif len(s) >= 2 and s[1] != "~":
        if len(s) < 4:
            raise ParseError("truncated graph6 order field", len(s))
        n = (val(1) << 12) | (val(2) << 6) | val(3)
        idx = 4
    else:
        if len(s) < 8:
            raise ParseError("truncated graph6 order field", len(s))
        n = 0
        for i in range(2, 8):
            n = (n << 6) | val(i)
        idx = 8
    if n < 1:
        raise ParseError(f"unsupported graph6 order {n}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - idx != nbytes:
        raise ParseError(
            f"graph6 body has {len(s) - idx} bytes, expected {nbytes}", idx
        )
    rows = [0] * n
    bit = 0
    for k in range(nbytes):
        group = val(idx + k)
        for t in range(5, -1, -1):
            if bit >= nbits:
                if group >> t & 1:
                    raise ParseError("nonzero padding bits", idx + k)
                continue
            if group >> t & 1:
                # bit index -> (i, j) with column-major upper triangle
                b = bit
                j = 1
                while b >= j:
                    b -= j
                    j += 1
                i = b
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph._from_rows(n, rows)


def parse_edgelist(text: str) -> Graph:
    """Parse the edge-list format: first line ``n m``, then m lines ``u v``."""
    lines = text.splitlines(keepends=True)
    stripped = [(ln.strip(), off) for ln, off in _with_offsets(lines)]
    rows = [(ln, off) for ln, off in stripped if ln]
    if not rows:
        raise ParseError("empty edge list", 0)
    header, hoff = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be 'n m'", hoff)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header must contain two integers", hoff) from None
    if n < 1 or m < 0:
        raise ParseError(f"invalid header n={n} m={m}", hoff)
    if len(rows) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(rows) - 1}", hoff)
    edges = []
    seen = set()
    for ln, off in rows[1:]:
        ps = ln.split()
        if len(ps) != 2:
            raise ParseError("edge line must be 'u v'", off)
        try:
            u, v = int(ps[0]), int(ps[1])
        except ValueError:
            raise ParseError("edge line must contain two integers", off) from None
        if u == v:
            raise ParseError(f"loop at vertex {u}", off)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u},{v}) out of range", off)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"duplicate edge ({u},{v})", off)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def _with_offsets(lines: list[str]) -> Iterator[tuple[str, int]]:
    offset = 0
    for ln in lines:
        yield ln, offset
        offset += len(ln.encode("utf-8"))


def emit_edgelist(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(out) + "\n"
