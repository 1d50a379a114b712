"""Stabbing-count segment tree over a fixed timestamp set.

One tree serves one directed vertex pair. It is built from the sorted
distinct timestamps T = {t_1 < ... < t_r} of that pair's temporal edges and
has 2r - 1 leaves: a point leaf (t_i, t_i] for every timestamp, interleaved
with gap leaves (t_i, t_{i+1}] for the spans between consecutive timestamps.
A point leaf represents exactly {t_i}; internally every leaf is just an index
and nodes hold closed leaf-index ranges, so all range arithmetic is integer.

Clients insert closed intervals [lo, hi] in batches labeled by a vertex.
``lookup(t)`` then returns the number of distinct vertex labels that inserted
at least one interval containing t, where containment is evaluated after
snapping each interval to its largest sub-interval with both endpoints in T
(intervals containing no timestamp of T are dropped).

Counting distinct labels rather than intervals is the whole trick. A naive
"increment the counter of every canonical node" over-counts when one label's
batch has two intervals covering the same t. Insertion therefore runs three
passes over the batch:

  phase 1  mark the canonical nodes of every interval GREY, pruning the
           walk at any node that is already grey (its subtree is covered
           by an earlier interval of this batch);
  phase 2  re-walk every interval and whiten any grey node that has a grey
           strict ancestor, leaving exactly the topmost grey nodes, which
           form an antichain;
  phase 3  re-walk once more and, at each surviving grey node, whiten it
           and bump its counter, recording the inserting vertex.

Phase 3 skips the counter bump (but still whitens) when the node's counter
was last bumped by the same vertex, so re-inserting a batch under the same
label is idempotent: counts for one label merge instead of accumulating.
After ``insert_list`` returns, no node is grey.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Iterable, Sequence


class IntervalSegmentTree:
    """Segment tree over the distinct sorted timestamps of one edge list."""

    __slots__ = (
        "ts",
        "_lo",
        "_hi",
        "_left",
        "_right",
        "_counter",
        "_grey",
        "_vertex",
        "visits",
    )

    def __init__(self, timestamps: Sequence[int]):
        ts = list(timestamps)
        for a, b in zip(ts, ts[1:]):
            if a >= b:
                raise ValueError("timestamps must be strictly increasing")
        self.ts = ts
        self._lo: list[int] = []
        self._hi: list[int] = []
        self._left: list[int] = []
        self._right: list[int] = []
        # visits counts node touches across all operations; tests use it to
        # check the O(log r) per-interval bound.
        self.visits = 0
        if ts:
            self._build(0, 2 * len(ts) - 2)
        self._counter = [0] * len(self._lo)
        self._grey = [False] * len(self._lo)
        self._vertex = [-1] * len(self._lo)

    def _build(self, a: int, b: int) -> int:
        i = len(self._lo)
        self._lo.append(a)
        self._hi.append(b)
        self._left.append(-1)
        self._right.append(-1)
        if a < b:
            mid = (a + b) // 2
            self._left[i] = self._build(a, mid)
            self._right[i] = self._build(mid + 1, b)
        return i

    # -- structure accessors -------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self._lo)

    def leaf_segments(self) -> list[tuple[int, int]]:
        """Leaf segments in order, as (left, right] bound pairs.

        Even positions are point leaves (t, t], odd positions gap leaves
        (t_i, t_{i+1}].
        """
        ts = self.ts
        segs: list[tuple[int, int]] = []
        for j in range(2 * len(ts) - 1 if ts else 0):
            if j % 2 == 0:
                segs.append((ts[j // 2], ts[j // 2]))
            else:
                segs.append((ts[(j - 1) // 2], ts[(j + 1) // 2]))
        return segs

    # -- snapping -------------------------------------------------------------

    def snap_interval(self, lo: int, hi: int) -> tuple[int, int] | None:
        """Largest [t_i, t_j] inside [lo, hi] with both endpoints in T.

        Returns None when no timestamp of T lies in the interval.
        """
        r = self._snap_ranks(lo, hi)
        if r is None:
            return None
        return self.ts[r[0]], self.ts[r[1]]

    def _snap_ranks(self, lo: int, hi: int) -> tuple[int, int] | None:
        ts = self.ts
        i = bisect_left(ts, lo)
        j = bisect_right(ts, hi) - 1
        if i > j or i >= len(ts) or j < 0:
            return None
        return i, j

    # -- insertion ------------------------------------------------------------

    def insert_list(self, intervals: Iterable[tuple[int, int]], vertex: int) -> None:
        """Insert one batch of closed intervals under a single vertex label.

        Intervals are snapped to T first; unsnappable ones are skipped. The
        three passes each walk the batch in the given order, so the final
        counters do not depend on the order of intervals within the batch.
        """
        if not self.ts:
            return
        ranges: list[tuple[int, int]] = []
        for lo, hi in intervals:
            r = self._snap_ranks(lo, hi)
            if r is not None:
                ranges.append((2 * r[0], 2 * r[1]))
        if not ranges:
            return
        for a, b in ranges:
            self._phase1(0, a, b)
        for a, b in ranges:
            self._phase2(0, a, b, False)
        for a, b in ranges:
            self._phase3(0, a, b, vertex, False)

    def _phase1(self, x: int, a: int, b: int) -> None:
        # Mark canonical nodes grey; prune below nodes already grey.
        self.visits += 1
        if self._grey[x]:
            return
        if a <= self._lo[x] and self._hi[x] <= b:
            self._grey[x] = True
            return
        l = self._left[x]
        r = self._right[x]
        if a <= self._hi[l] and self._lo[l] <= b:
            self._phase1(l, a, b)
        if a <= self._hi[r] and self._lo[r] <= b:
            self._phase1(r, a, b)

    def _phase2(self, x: int, a: int, b: int, found: bool) -> None:
        # Whiten grey nodes that have a grey strict ancestor; `found` says
        # whether one was seen on the way down.
        self.visits += 1
        if a <= self._lo[x] and self._hi[x] <= b:
            if found and self._grey[x]:
                self._grey[x] = False
            return
        deeper = found or self._grey[x]
        l = self._left[x]
        r = self._right[x]
        if a <= self._hi[l] and self._lo[l] <= b:
            self._phase2(l, a, b, deeper)
        if a <= self._hi[r] and self._lo[r] <= b:
            self._phase2(r, a, b, deeper)

    def _phase3(self, x: int, a: int, b: int, w: int, suppress: bool) -> None:
        # Count surviving grey nodes, whitening them. `suppress` is set below
        # a node already counted for w, which keeps re-insertion under the
        # same label from double counting while still clearing grey marks.
        self.visits += 1
        if a <= self._lo[x] and self._hi[x] <= b:
            if self._grey[x]:
                self._grey[x] = False
                if not suppress and (self._counter[x] == 0 or self._vertex[x] != w):
                    self._counter[x] += 1
                    self._vertex[x] = w
            return
        if self._grey[x]:
            # A grey node passed through is the canonical node of a later
            # interval of this batch; its subtree is covered by it.
            return
        deeper = suppress or (self._counter[x] > 0 and self._vertex[x] == w)
        l = self._left[x]
        r = self._right[x]
        if a <= self._hi[l] and self._lo[l] <= b:
            self._phase3(l, a, b, w, deeper)
        if a <= self._hi[r] and self._lo[r] <= b:
            self._phase3(r, a, b, w, deeper)

    # -- lookup ---------------------------------------------------------------

    def lookup(self, t: int) -> int:
        """Sum of counters on the root-to-leaf path of segments containing t."""
        ts = self.ts
        if not ts:
            return 0
        p = bisect_left(ts, t)
        if p < len(ts) and ts[p] == t:
            leaf = 2 * p
        elif 0 < p < len(ts):
            leaf = 2 * p - 1
        else:
            return 0
        x = 0
        total = 0
        while True:
            self.visits += 1
            total += self._counter[x]
            l = self._left[x]
            if l == -1:
                return total
            x = l if leaf <= self._hi[l] else self._right[x]

    def any_grey(self) -> bool:
        """True if any node is marked grey (only ever mid-insertion)."""
        return any(self._grey)
