"""Closure operator and the Kelmans transformation."""

import pytest

from hamq.errors import BadParameters
from hamq.graph import Graph, add_edges, complete, cycle, delete_edges, is_connected, path_graph
from hamq.rng import SplitMix64, gnp, random_connected_gnp
from hamq.spectral import perron_pair
from hamq.transforms import closure, kelmans


def test_closure_examples():
    g, tr = closure(cycle(4), 5)
    assert g == cycle(4) and tr.added == ()
    g, tr = closure(delete_edges(complete(5), [(0, 1)]), 6)
    assert g == complete(5) and tr.added == ((0, 1),)
    g, tr = closure(cycle(5), 6)
    assert g == cycle(5) and tr.added == ()


def test_closure_trace_replays():
    rng = SplitMix64(53)
    for _ in range(40):
        n = 4 + rng.next_below(8)
        g = gnp(n, 0.3 + 0.4 * rng.next_float(), rng)
        k = n + 1
        cl, tr = closure(g, k)
        assert tr.k == k
        replay = g
        for u, v in tr.added:
            # the degree-sum condition held at the moment of addition
            assert replay.degree(u) + replay.degree(v) >= k
            replay = add_edges(replay, [(u, v)])
        assert replay == cl


def test_closure_fixpoint_and_idempotence():
    rng = SplitMix64(59)
    for _ in range(40):
        n = 4 + rng.next_below(9)
        g = gnp(n, 0.4, rng)
        k = n + 1
        cl, _ = closure(g, k)
        deg = cl.degrees()
        for u in range(n):
            for v in range(u + 1, n):
                if not cl.has_edge(u, v):
                    assert deg[u] + deg[v] <= k - 1
        again, tr = closure(cl, k)
        assert again == cl and tr.added == ()


def test_closure_order_independence():
    # independent route: naive closure under shuffled scan orders
    rng = SplitMix64(61)
    for _ in range(60):
        n = 4 + rng.next_below(9)  # 4..12
        g = gnp(n, 0.2 + 0.6 * rng.next_float(), rng)
        k = n + 1
        ref, _ = closure(g, k)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for _ in range(10):
            order = [pairs[i] for i in rng.permutation(len(pairs))]
            cur = g
            changed = True
            while changed:
                changed = False
                deg = cur.degrees()
                for u, v in order:
                    if not cur.has_edge(u, v) and deg[u] + deg[v] >= k:
                        cur = add_edges(cur, [(u, v)])
                        changed = True
                        break
            assert cur == ref


def test_kelmans_examples():
    p3 = path_graph(3)
    assert kelmans(p3, 0, 2) == p3  # nothing to move
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    moved = kelmans(c4, 0, 1)
    assert sorted(moved.edges()) == [(0, 1), (0, 2), (0, 3), (2, 3)]
    g = complete(5)
    assert kelmans(g, 1, 3) == g  # neighborhoods nested
    with pytest.raises(BadParameters):
        kelmans(c4, 2, 2)


def test_kelmans_structure_preservation():
    rng = SplitMix64(67)
    for _ in range(60):
        n = 4 + rng.next_below(10)
        g = gnp(n, 0.3 + 0.5 * rng.next_float(), rng)
        u, v = rng.next_below(n), rng.next_below(n)
        if u == v:
            continue
        gs = kelmans(g, u, v)
        assert gs.has_edge(u, v) == g.has_edge(u, v)
        for x in range(n):
            if x not in (u, v):
                assert gs.degree(x) == g.degree(x)
        assert gs.m == g.m


def test_kelmans_never_decreases_radius():
    rng = SplitMix64(71)
    done = 0
    while done < 60:
        n = 4 + rng.next_below(12)
        g = random_connected_gnp(n, 0.3 + 0.4 * rng.next_float(), rng)
        u, v = rng.next_below(n), rng.next_below(n)
        if u == v:
            continue
        gs = kelmans(g, u, v)
        if not is_connected(gs):
            continue
        done += 1
        a, b = perron_pair(g), perron_pair(gs)
        assert b.q_hat >= a.q_hat - 1e-8
        assert a.lo <= b.hi + 1e-8
