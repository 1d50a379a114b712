"""Per-edge triangle-closing counts split by a degeneracy orientation.

For a temporal edge e on static pair {x, y}, let s be the endpoint with the
smaller peeling rank. A common neighbor w of x and y closes a triangle with
e = (x, y, t) when there are edges (x, w, t2) and (y, w, t3) with
t <= t2 <= t3 <= t + delta. The counting is split into

  out_count[e]  closing neighbors w with rank(w) > rank(s), handled by
                chained sorted scans over the lists incident to s;
  in_count[e]   closing neighbors with rank(w) < rank(s), handled by turning
                each w's evidence into intervals and stabbing a per-pair
                segment tree with e's timestamp.

Both passes walk the same enumeration of static triangles (a, b, c) with
rank(a) < rank(b) < rank(c), found by intersecting oriented adjacency lists.
The low vertex a is the out-side witness for pairs {a,b} and {a,c}, and the
in-side witness for pair {b,c}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .graph import DegeneracyOrdering, StaticGraph, TemporalGraph, build_static, degeneracy_order
from .scans import find_bounding_entry, find_exceeding_entry_bs, find_exceeding_entry_ls
from .segtree import IntervalSegmentTree


@dataclass
class CountTable:
    """Per-edge closing-neighbor tallies for one delta."""

    in_count: list[int]
    out_count: list[int]
    delta: int

    def totals(self) -> list[int]:
        return [a + b for a, b in zip(self.in_count, self.out_count)]


@dataclass
class IntervalSet:
    """Intervals whose stabbing by t certifies a triangle with `owner`.

    owner is the low-rank common neighbor; target_pair the directed pair
    whose edges the intervals certify.
    """

    owner: int
    target_pair: tuple[int, int]
    intervals: list[tuple[int, int]]


def oriented_triangles(
    static: StaticGraph, ordering: DegeneracyOrdering
) -> Iterator[tuple[int, int, list[int]]]:
    """Yield (a, b, cs): for the oriented edge (a, b), every c in
    out_adj[a] & out_adj[b]. Each static triangle appears exactly once,
    with rank(a) < rank(b) < rank(c) for every yielded c."""
    out_adj = ordering.out_adj
    for a in range(static.n):
        na = out_adj[a]
        if len(na) < 2:
            continue
        for b in na:
            nb = out_adj[b]
            if not nb:
                continue
            common = _intersect_sorted(na, nb)
            if common:
                yield a, b, common


def _intersect_sorted(xs: list[int], ys: list[int]) -> list[int]:
    out = []
    i = j = 0
    nx, ny = len(xs), len(ys)
    while i < nx and j < ny:
        x = xs[i]
        y = ys[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return out


def out_case1(
    eids1: Sequence[int],
    ts1: Sequence[int],
    ts2: Sequence[int],
    ts3: Sequence[int],
    delta: int,
    out_count: list[int],
) -> None:
    """Credit edges of L1 = E_{u,v} for w, where L2 = E_{u,w}, L3 = E_{v,w}.

    Scans forward for the first L2 entry at or after each L1 timestamp, then
    the first L3 entry at or after that; the chain closes a triangle iff its
    last timestamp is within delta of the first.
    """
    if not eids1 or not ts2 or not ts3:
        return
    l12 = find_exceeding_entry_ls(ts1, ts2)
    l23 = find_exceeding_entry_bs(ts2, ts3)
    n2 = len(ts2)
    n3 = len(ts3)
    for i, eid in enumerate(eids1):
        # ts1[i] <= ts2[j] <= ts3[k] holds by construction of the scans, so
        # the chain reduces to the window check once both links resolve.
        j = l12[i]
        if j < n2:
            k = l23[j]
            if k < n3 and ts3[k] <= ts1[i] + delta:
                out_count[eid] += 1


def out_case2(
    eids1: Sequence[int],
    ts1: Sequence[int],
    ts2: Sequence[int],
    ts3: Sequence[int],
    delta: int,
    out_count: list[int],
) -> None:
    """Credit edges of L1 = E_{v,u} for w, where L2 = E_{v,w}, L3 = E_{u,w}.

    Here L3 is not incident to the endpoint driving the scan order, so the
    chain pairs the first L2 entry at or after t with the last L3 entry at
    most t + delta.
    """
    if not eids1 or not ts2 or not ts3:
        return
    l13 = find_bounding_entry(ts1, ts3, delta)
    l12 = find_exceeding_entry_bs(ts1, ts2)
    n2 = len(ts2)
    n3 = len(ts3)
    for i, eid in enumerate(eids1):
        # ts1[i] <= ts2[j] and ts3[k] <= ts1[i] + delta hold by construction,
        # leaving only the middle ordering to check.
        j = l12[i]
        k = l13[i]
        if j < n2 and k < n3 and ts2[j] <= ts3[k]:
            out_count[eid] += 1


def out_pass(
    g: TemporalGraph,
    static: StaticGraph,
    ordering: DegeneracyOrdering,
    delta: int,
    triangles: Iterator[tuple[int, int, list[int]]] | None = None,
) -> list[int]:
    """out_count[e] for every edge: closing neighbors on the source's out side."""
    out_count = [0] * g.m
    pair = g.pair
    if triangles is None:
        triangles = oriented_triangles(static, ordering)
    for a, b, common in triangles:
        e_ab = pair(a, b)
        e_ba = pair(b, a)
        for c in common:
            e_ac = pair(a, c)
            e_ca = pair(c, a)
            e_bc = pair(b, c)
            e_cb = pair(c, b)
            # pair {a, b}, witness c
            out_case1(e_ab[0], e_ab[1], e_ac[1], e_bc[1], delta, out_count)
            out_case2(e_ba[0], e_ba[1], e_bc[1], e_ac[1], delta, out_count)
            # pair {a, c}, witness b
            out_case1(e_ac[0], e_ac[1], e_ab[1], e_cb[1], delta, out_count)
            out_case2(e_ca[0], e_ca[1], e_cb[1], e_ab[1], delta, out_count)
    return out_count


def build_interval_set(
    ts2: Sequence[int],
    ts3: Sequence[int],
    delta: int,
    owner: int,
    target_pair: tuple[int, int],
) -> IntervalSet:
    """Intervals certifying, for pair (x, y) = target_pair, which timestamps t
    close a triangle with `owner` via L2 = E_{x,owner}, L3 = E_{y,owner}.

    Each L2 entry f with a partner in L3 inside its window contributes
    [t(partner) - delta, t(f)]: exactly the t with t <= t(f) <= t(partner)
    <= t + delta.
    """
    intervals: list[tuple[int, int]] = []
    if ts2 and ts3:
        l23 = find_exceeding_entry_ls(ts2, ts3)
        n3 = len(ts3)
        for i, tf in enumerate(ts2):
            j = l23[i]
            if j < n3 and ts3[j] <= tf + delta:
                intervals.append((ts3[j] - delta, tf))
    return IntervalSet(owner, target_pair, intervals)


def in_pass(
    g: TemporalGraph,
    static: StaticGraph,
    ordering: DegeneracyOrdering,
    delta: int,
    triangles: Iterator[tuple[int, int, list[int]]] | None = None,
) -> list[int]:
    """in_count[e] for every edge: closing neighbors on the source's in side.

    Contributions are grouped by directed target pair so each segment tree is
    built, filled with every low-rank witness's intervals, queried with the
    pair's edge timestamps, and discarded before the next pair.
    """
    in_count = [0] * g.m
    if triangles is None:
        triangles = oriented_triangles(static, ordering)

    xs: list[int] = []
    ys: list[int] = []
    was: list[int] = []
    for a, b, common in triangles:
        for c in common:
            xs.append(b)
            ys.append(c)
            was.append(a)
            xs.append(c)
            ys.append(b)
            was.append(a)
    if not xs:
        return in_count

    x_arr = np.asarray(xs, dtype=np.int64)
    y_arr = np.asarray(ys, dtype=np.int64)
    w_arr = np.asarray(was, dtype=np.int64)
    key = x_arr * g.n + y_arr
    order = np.lexsort((w_arr, key))
    key = key[order]
    w_arr = w_arr[order]
    starts = np.concatenate(([0], np.flatnonzero(np.diff(key)) + 1, [len(key)]))

    pair = g.pair
    n = g.n
    for gi in range(len(starts) - 1):
        i = int(starts[gi])
        group_key = int(key[i])
        x, y = divmod(group_key, n)
        eids, ts = pair(x, y)
        if not eids:
            continue
        tree = IntervalSegmentTree(_distinct_sorted(ts))
        for a in w_arr[i : int(starts[gi + 1])].tolist():
            iset = build_interval_set(pair(x, a)[1], pair(y, a)[1], delta, a, (x, y))
            if iset.intervals:
                tree.insert_list(iset.intervals, a)
        for eid, t in zip(eids, ts):
            in_count[eid] += tree.lookup(t)
    return in_count


def _distinct_sorted(sorted_ts: Sequence[int]) -> list[int]:
    out: list[int] = []
    prev = None
    for t in sorted_ts:
        if t != prev:
            out.append(t)
            prev = t
    return out


def compute_counts(
    g: TemporalGraph,
    delta: int,
    static: StaticGraph | None = None,
    ordering: DegeneracyOrdering | None = None,
    threads: int = 1,
) -> CountTable:
    """Run both passes and return the per-edge count table.

    `threads` is accepted for interface stability; execution is
    single-threaded, so results are identical for every value.
    """
    if delta < 0:
        raise ValueError("delta must be >= 0")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    if static is None:
        static = build_static(g)
    if ordering is None:
        ordering = degeneracy_order(static)
    triangles = list(oriented_triangles(static, ordering))
    out_count = out_pass(g, static, ordering, delta, iter(triangles))
    in_count = in_pass(g, static, ordering, delta, iter(triangles))
    return CountTable(in_count=in_count, out_count=out_count, delta=delta)
