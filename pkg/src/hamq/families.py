"""Extremal families: construction, enumeration, recognition, thresholds.

Two host families drive the whole certification story.  For ``n >= 5`` and
``2 <= k <= n/2``:

* ``S(n, k)``: a clique on ``n - k + 1`` vertices with ``k - 1`` extra
  independent vertices each joined to the same k-subset of the clique.
* ``T(n, k)``: a clique on ``n - k + 1`` and a clique on ``k + 1`` glued
  along two shared vertices.

Both graphs are built with a fixed vertex layout so partitions are
reproducible: Y (the high-degree hub set, degree n-1) occupies the lowest
indices, then Z (degree n-k), then X (degree k) at the tail.  ``Y u Z`` is
always the index prefix ``0..n-k`` and induces a clique; its edge set is the
eligible deletion set E0.  A *family member* deletes a subset E' of E0:

* class 1 members allow ``|E'|`` up to ``floor(k(k-1)/4)`` (S) or
  ``floor((k-1)/2)`` (T);
* class 2 members have exactly one more deletion than the class-1 maximum.

``membership`` recognizes a relabeled member and returns the partition
witness; ``spanning_subgraph_of`` searches for a host embedding (every edge
of G mapped onto a host edge).  ``appendix_check`` evaluates, in exact
rational arithmetic, the closed-form inequality (split on k mod 4) that
bounds the class-2 spectral radius strictly below 2n - 2k once n clears the
order threshold ``n_min(k) = k^4 + 5k^3 + 2k^2 + 8k + 12``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from .errors import BadParameters, BudgetExceeded, NotInE0
from .graph import (
    Edge,
    Graph,
    complete,
    copies,
    delete_edges,
    disjoint_union,
    edge_set,
    iter_bits,
    join,
)
from .rng import SplitMix64

CLASSES = ("S1", "T1", "S2", "T2")
DEFAULT_ENUM_BUDGET = 1_000_000
DEFAULT_EMBED_BUDGET = 200_000


# -- handles ------------------------------------------------------------------


@dataclass(frozen=True)
class FamilyHandle:
    """A constructed family member: host minus the ``deleted`` edges.

    X, Y, Z are the canonical partition (see module docstring); ``deleted``
    is a subset of the edges with both endpoints in Y u Z.
    """

    kind: str  # "S" | "T"
    n: int
    k: int
    graph: Graph
    X: tuple[int, ...]
    Y: tuple[int, ...]
    Z: tuple[int, ...]
    deleted: frozenset[Edge]

    @property
    def e0_size(self) -> int:
        return comb(self.n - self.k + 1, 2)

    def e0_contains(self, pair: Edge) -> bool:
        u, v = pair
        return 0 <= u < v <= self.n - self.k

    def e0_edges(self) -> frozenset[Edge]:
        """Materialized E0 (all pairs inside Y u Z); intended for small n."""
        p = self.n - self.k + 1
        return frozenset((u, v) for u in range(p) for v in range(u + 1, p))

    def sidecar(self) -> dict:
        """JSON-ready description of the member."""
        return {
            "kind": self.kind,
            "n": self.n,
            "k": self.k,
            "X": list(self.X),
            "Y": list(self.Y),
            "Z": list(self.Z),
            "deleted": sorted(list(e) for e in self.deleted),
        }


@dataclass(frozen=True)
class MembershipWitness:
    """Relabeling witness: where X/Y/Z sit in the input graph's own labels."""

    kind: str
    k: int
    X: tuple[int, ...]
    Y: tuple[int, ...]
    Z: tuple[int, ...]
    deleted: frozenset[Edge]


@dataclass(frozen=True)
class EmbeddingWitness:
    """Host embedding: a labeling under which every edge of G is a host edge."""

    kind: str
    k: int
    X: tuple[int, ...]
    Y: tuple[int, ...]
    Z: tuple[int, ...]


def _check_family_params(n: int, k: int) -> None:
    if n < 5 or k < 2 or 2 * k > n:
        raise BadParameters(f"family needs n >= 5 and 2 <= k <= n/2, got n={n} k={k}")


def build_S(n: int, k: int) -> FamilyHandle:
    """Host member of the S family with no deletions.

    Layout: Y = 0..k-1 (degree n-1), Z = k..n-k (degree n-k),
    X = n-k+1..n-1 (degree k, independent, all joined to Y).
    """
    _check_family_params(n, k)
    g = join(complete(k), disjoint_union(complete(n - 2 * k + 1), copies(k - 1, complete(1))))
    return FamilyHandle(
        kind="S",
        n=n,
        k=k,
        graph=g,
        X=tuple(range(n - k + 1, n)),
        Y=tuple(range(k)),
        Z=tuple(range(k, n - k + 1)),
        deleted=frozenset(),
    )


def build_T(n: int, k: int) -> FamilyHandle:
    """Host member of the T family with no deletions.

    Layout: Y = {0, 1} (degree n-1), Z = 2..n-k (degree n-k),
    X = n-k+1..n-1 (degree k, a clique, all joined to Y).
    """
    _check_family_params(n, k)
    g = join(complete(2), disjoint_union(complete(n - k - 1), complete(k - 1)))
    return FamilyHandle(
        kind="T",
        n=n,
        k=k,
        graph=g,
        X=tuple(range(n - k + 1, n)),
        Y=(0, 1),
        Z=tuple(range(2, n - k + 1)),
        deleted=frozenset(),
    )


def family_member(base: FamilyHandle, edges: Iterable[Edge]) -> FamilyHandle:
    """Delete a subset of E0 from a pristine host handle."""
    if base.deleted:
        raise BadParameters("family_member needs a pristine host handle")
    deleted = edge_set(edges)
    for pair in deleted:
        if not base.e0_contains(pair):
            raise NotInE0(f"{pair} has an endpoint outside Y u Z")
    return FamilyHandle(
        kind=base.kind,
        n=base.n,
        k=base.k,
        graph=delete_edges(base.graph, deleted),
        X=base.X,
        Y=base.Y,
        Z=base.Z,
        deleted=deleted,
    )


def class_bound(clazz: str, k: int) -> int:
    """Deletion budget of a class: maximum |E'| for class 1, exact for class 2."""
    if clazz not in CLASSES:
        raise BadParameters(f"unknown class {clazz!r}")
    if k < 2:
        raise BadParameters(f"class bound needs k >= 2, got {k}")
    base = k * (k - 1) // 4 if clazz[0] == "S" else (k - 1) // 2
    return base if clazz[1] == "1" else base + 1


def refined_partition(handle: FamilyHandle) -> dict[str, tuple[int, ...]]:
    """Split Y and Z by whether a deleted edge touches the vertex.

    Y1/Z1 keep their host degree (n-1 and n-k); Y2/Z2 lost at least one edge.
    """
    touched = set()
    for u, v in handle.deleted:
        touched.add(u)
        touched.add(v)
    return {
        "Y1": tuple(y for y in handle.Y if y not in touched),
        "Y2": tuple(y for y in handle.Y if y in touched),
        "Z1": tuple(z for z in handle.Z if z not in touched),
        "Z2": tuple(z for z in handle.Z if z in touched),
    }


# -- enumeration --------------------------------------------------------------


def _prefix_pair_unrank(p: int, index: int) -> Edge:
    """index-th pair (u, v), u < v < p, in lexicographic order."""
    u = 0
    while index >= p - 1 - u:
        index -= p - 1 - u
        u += 1
    return (u, u + 1 + index)


def enumerate_class(
    clazz: str,
    n: int,
    k: int,
    mode: str = "exhaustive",
    seed: int = 0,
    count: int | None = None,
    budget: int = DEFAULT_ENUM_BUDGET,
) -> Iterator[FamilyHandle]:
    """Stream members of a class.

    Exhaustive mode yields every admissible E' exactly once, ordered by size
    then lexicographically by sorted edge tuple; it refuses upfront (raising
    BudgetExceeded) if the total member count exceeds ``budget``.  Sample
    mode is deterministic in ``seed`` and yields ``count`` members; class-1
    samples draw |E'| uniformly from 0..bound, class-2 samples always use
    the exact class size.
    """
    _check_family_params(n, k)
    bound = class_bound(clazz, k)
    base = build_S(n, k) if clazz[0] == "S" else build_T(n, k)
    e0 = base.e0_size
    p = n - k + 1
    sizes = list(range(bound + 1)) if clazz[1] == "1" else [bound]
    if mode == "exhaustive":
        total = sum(comb(e0, s) for s in sizes)
        if total > budget:
            raise BudgetExceeded(
                f"exhaustive enumeration of {clazz}(n={n},k={k}) has {total} members,"
                f" budget is {budget}"
            )
        for s in sizes:
            for idxs in combinations(range(e0), s):
                yield family_member(base, [_prefix_pair_unrank(p, i) for i in idxs])
    elif mode == "sample":
        if count is None:
            raise BadParameters("sample mode needs a count")
        rng = SplitMix64(seed)
        for _ in range(count):
            s = sizes[rng.next_below(len(sizes))] if len(sizes) > 1 else sizes[0]
            idxs = rng.sample_distinct(s, e0)
            yield family_member(base, [_prefix_pair_unrank(p, i) for i in idxs])
    else:
        raise BadParameters(f"unknown mode {mode!r}")


# -- recognition --------------------------------------------------------------


def _class_size_ok(clazz: str, k: int, size: int) -> bool:
    bound = class_bound(clazz, k)
    return size <= bound if clazz[1] == "1" else size == bound


def membership(g: Graph, clazz: str, k: int) -> MembershipWitness | None:
    """Recognize a (possibly relabeled) class member; None means absent.

    Candidate X vertices must have degree exactly k (deletions never touch
    X).  For S the members of X share one open neighborhood of size k; for T
    they share one closed neighborhood of size k+1.  Grouping degree-k
    vertices by that neighborhood makes the search linear; the remaining
    structure (Y u Z clique minus E', no X-Z edges) is verified directly.
    """
    if clazz not in CLASSES:
        raise BadParameters(f"unknown class {clazz!r}")
    n = g.n
    if n < 5 or k < 2 or 2 * k > n:
        return None
    kind = clazz[0]
    cands = [v for v in range(n) if g.degree(v) == k]
    if len(cands) < k - 1:
        return None
    buckets: dict[int, list[int]] = {}
    for v in cands:
        key = g.row(v) if kind == "S" else g.row(v) | (1 << v)
        buckets.setdefault(key, []).append(v)
    want_pop = k if kind == "S" else k + 1
    for key in sorted(buckets):
        members = buckets[key]
        if len(members) < k - 1 or key.bit_count() != want_pop:
            continue
        x_set = tuple(sorted(members)[: k - 1])
        x_bits = 0
        for x in x_set:
            x_bits |= 1 << x
        if kind == "S":
            if key & x_bits:  # X must be independent
                continue
            y_set = tuple(iter_bits(key))
        else:
            y_set = tuple(iter_bits(key & ~x_bits))
            if len(y_set) != 2:
                continue
        yz = sorted(set(range(n)) - set(x_set))
        z_set = tuple(v for v in yz if v not in y_set)
        missing = []
        ok = True
        for i, u in enumerate(yz):
            for v in yz[i + 1:]:
                if not g.has_edge(u, v):
                    missing.append((u, v))
        if not _class_size_ok(clazz, k, len(missing)):
            continue
        return MembershipWitness(
            kind=kind,
            k=k,
            X=x_set,
            Y=y_set,
            Z=z_set,
            deleted=frozenset(missing),
        )
    return None


def spanning_subgraph_of(
    g: Graph, kind: str, k: int, budget: int = DEFAULT_EMBED_BUDGET
) -> EmbeddingWitness | None:
    """A labeling under which every edge of g is an edge of the host, or None.

    The only constraints a host imposes are at the X slots: X vertices may
    touch nothing outside Y (for S, X is also independent; for T, X may be
    internally adjacent and |Y| = 2).  The search walks ascending candidate
    vertices of degree <= k, pruning on the running neighborhood union, and
    raises BudgetExceeded past ``budget`` explored nodes.
    """
    if kind not in ("S", "T"):
        raise BadParameters(f"unknown family kind {kind!r}")
    n = g.n
    if n < 5 or k < 2 or 2 * k > n:
        return None
    y_size = k if kind == "S" else 2
    cands = [v for v in range(n) if g.degree(v) <= k]
    if len(cands) < k - 1:
        return None
    nodes = 0

    def finish(x_list: list[int], union: int) -> EmbeddingWitness | None:
        x_bits = 0
        for x in x_list:
            x_bits |= 1 << x
        outside = union & ~x_bits
        if outside.bit_count() > y_size:
            return None
        y_list = list(iter_bits(outside))
        for v in range(n):  # pad Y with the smallest free vertices
            if len(y_list) == y_size:
                break
            if not (x_bits >> v & 1) and not (outside >> v & 1):
                y_list.append(v)
        y_list.sort()
        y_bits = 0
        for y in y_list:
            y_bits |= 1 << y
        # final validation: no X-Z edges, and for S no X-X edges
        for x in x_list:
            if g.row(x) & ~(y_bits | x_bits):
                return None
            if kind == "S" and g.row(x) & x_bits:
                return None
        z_list = [v for v in range(n) if not (x_bits | y_bits) >> v & 1]
        return EmbeddingWitness(
            kind=kind, k=k, X=tuple(x_list), Y=tuple(y_list), Z=tuple(z_list)
        )

    def dfs(start: int, x_list: list[int], union: int) -> EmbeddingWitness | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"embedding search exceeded {budget} nodes")
        if len(x_list) == k - 1:
            return finish(x_list, union)
        slots_left = (k - 1) - len(x_list)
        for i in range(start, len(cands)):
            v = cands[i]
            if kind == "S":
                if union >> v & 1:  # adjacent to a chosen X vertex
                    continue
                new_union = union | g.row(v)
                # X stays independent, so the union never meets X and must
                # fit inside the k-slot Y in the end
                if new_union.bit_count() <= k:
                    x_list.append(v)
                    res = dfs(i + 1, x_list, new_union)
                    if res is not None:
                        return res
                    x_list.pop()
            else:
                new_union = union | g.row(v)
                x_bits = 1 << v
                for x in x_list:
                    x_bits |= 1 << x
                outside = (new_union & ~x_bits).bit_count()
                # future X picks can absorb at most the remaining slots
                if outside <= 2 + (slots_left - 1):
                    x_list.append(v)
                    res = dfs(i + 1, x_list, new_union)
                    if res is not None:
                        return res
                    x_list.pop()
        return None

    return dfs(0, [], 0)


# -- thresholds and the exact rational inequality ------------------------------


@dataclass(frozen=True)
class Thresholds:
    """All order/edge/spectral thresholds attached to one k."""

    k: int
    n_min: int
    order_edge_thm: int

    def spectral(self, n: int) -> int:
        return 2 * n - 2 * self.k

    def edge(self, n: int) -> int:
        return comb(n - self.k, 2) + self.k * (self.k + 1)


def thresholds(k: int) -> Thresholds:
    if k < 2:
        raise BadParameters(f"thresholds need k >= 2, got {k}")
    n_min = k**4 + 5 * k**3 + 2 * k**2 + 8 * k + 12
    return Thresholds(k=k, n_min=n_min, order_edge_thm=11 * k)


@dataclass(frozen=True)
class AppendixReport:
    """Exact rational evaluation of the class-2 bounding inequality.

    ``holds`` is ``a1 + a2 + a3 - a4 < bound`` computed in rationals;
    ``margin`` is ``bound - (a1 + a2 + a3 - a4)``.  The branch on k mod 4
    selects the deletion count and whether the primed term family (bound 2)
    or the unprimed one (bound 4) applies.
    """

    k: int
    n: int
    branch: int  # k mod 4
    deleted_count: int
    primed: bool
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    bound: int
    holds: bool
    margin: Fraction
    hypothesis_met: bool


def appendix_check(k: int, n: int) -> AppendixReport:
    """Evaluate the branch-appropriate closed-form inequality exactly.

    Computes even when n is below the order threshold; ``hypothesis_met``
    flags whether the threshold hypothesis holds.
    """
    if k < 2:
        raise BadParameters(f"appendix check needs k >= 2, got {k}")
    if n <= 2 * k:
        raise BadParameters(f"appendix check needs n > 2k, got n={n}, k={k}")
    branch = k % 4
    s = k // 4
    if branch == 0:
        e1 = s * (4 * s - 1) + 1
    elif branch == 1:
        e1 = s * (4 * s + 1) + 1
    elif branch == 2:
        e1 = 4 * s * s + 3 * s + 1
    else:
        e1 = 4 * s * s + 5 * s + 2
    primed = branch in (2, 3)
    a1 = Fraction(2 * k**3 - 2 * k**2, 2 * n - 3 * k - 1)
    a2 = Fraction(k**4 - k**3, 4 * n**2 - (12 * k + 4) * n + 9 * k**2 + 6 * k + 1)
    if not primed:
        a3 = Fraction(k**4 + 5 * k**3 + 4 * k**2 + 18 * k + 24, n - 2 * k)
        a4 = Fraction(
            k**6 + 11 * k**5 + 40 * k**4 + 72 * k**3 + 156 * k**2 + 252 * k + 144,
            4 * n**2 - 16 * k * n + 16 * k**2,
        )
        bound = 4
    else:
        a3 = Fraction(k**4 + 5 * k**3 + 2 * k**2 + 6 * k + 12, n - 2 * k)
        a4 = Fraction(
            k**6 + 11 * k**5 + 38 * k**4 + 48 * k**3 + 60 * k**2 + 108 * k + 72,
            4 * n**2 - 16 * k * n + 16 * k**2,
        )
        bound = 2
    total = a1 + a2 + a3 - a4
    return AppendixReport(
        k=k,
        n=n,
        branch=branch,
        deleted_count=e1,
        primed=primed,
        a1=a1,
        a2=a2,
        a3=a3,
        a4=a4,
        bound=bound,
        holds=total < bound,
        margin=bound - total,
        hypothesis_met=n >= thresholds(k).n_min,
    )


def indicator_rayleigh_value(handle: FamilyHandle) -> Fraction:
    """Closed-form value of the indicator Rayleigh quotient on Y u Z.

    For any member, host or deleted, this equals
    ``(2n - 2k) + (c_k - 4|E'|) / (n - k + 1)`` where ``c_k`` is ``k(k-1)``
    for S members and ``2(k-1)`` for T members; used as the independent
    oracle against the generic exact quotient.
    """
    n, k = handle.n, handle.k
    c_k = k * (k - 1) if handle.kind == "S" else 2 * (k - 1)
    return Fraction(2 * n - 2 * k) + Fraction(c_k - 4 * len(handle.deleted), n - k + 1)


def indicator_vector(handle: FamilyHandle) -> list[int]:
    """0/1 vector supported on Y u Z."""
    vec = [0] * handle.n
    for v in handle.Y + handle.Z:
        vec[v] = 1
    return vec
