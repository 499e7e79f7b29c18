"""Exact minimum identifying-code and dominating-set search plus greedy
heuristics.

The exact solvers run branch and bound over include/exclude decisions on
vertices in descending-degree order, seeded with the greedy solution as
incumbent. Budgets count node expansions; an exhausted budget returns the
incumbent flagged non-optimal instead of failing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .bounds import ceil_log2, idcode_lower_bound
from .codes import is_identifying_code, mask_to_set
from .graphs import Graph, find_twins

DEFAULT_BUDGET = 10_000_000


class NotTwinFreeError(ValueError):
    """Twin vertices admit no identifying code."""

    def __init__(self, pair: tuple[int, int]) -> None:
        super().__init__(
            f"vertices {pair[0]} and {pair[1]} are twins; no identifying code exists"
        )
        self.pair = pair


@dataclass(frozen=True)
class SearchResult:
    code: frozenset[int]
    optimal: bool  # False: node budget ran out, code is the best incumbent
    nodes: int

    @property
    def size(self) -> int:
        return len(self.code)


class _BudgetHit(Exception):
    pass


class _Done(Exception):
    pass


def _branch_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def exact_min_idcode(g: Graph, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Minimum-cardinality identifying code by branch and bound.

    Prunes on infeasibility (some pair can no longer be separated, some
    vertex no longer dominated), on the ceil-log2 count of extra picks any
    unresolved signature class still needs, and stops early when the
    incumbent meets the global lower bound.
    """
    if g.n < 1:
        raise ValueError("exact_min_idcode needs n >= 1")
    twins = find_twins(g)
    if twins:
        raise NotTwinFreeError(twins[0])
    n = g.n
    masks = g.closed_masks
    order = _branch_order(g)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << order[i])

    incumbent = greedy_idcode(g)
    best_size = len(incumbent)
    best_mask = 0
    for v in incumbent:
        best_mask |= 1 << v
    lb = idcode_lower_bound(n)
    nodes = 0

    def walk(i: int, chosen: int) -> None:
        nonlocal nodes, best_size, best_mask
        nodes += 1
        if nodes > budget:
            raise _BudgetHit
        size = chosen.bit_count()
        if size >= best_size:
            return
        undom = 0
        groups: dict[int, list[int]] = {}
        for v in range(n):
            sig = masks[v] & chosen
            if not sig:
                undom |= 1 << v
            groups.setdefault(sig, []).append(v)
        max_cls = max(len(m) for m in groups.values())
        if max_cls == 1 and not undom:
            best_size, best_mask = size, chosen
            if best_size <= lb:
                raise _Done
            return
        avail = suffix[i]
        if undom & ~_dominable(masks, undom, chosen | avail):
            return
        extra = ceil_log2(max_cls)
        for members in groups.values():
            if len(members) == 1:
                continue
            for a in range(len(members)):
                for b in range(a + 1, len(members)):
                    if not (masks[members[a]] ^ masks[members[b]]) & avail:
                        return
        if undom and extra == 0:
            extra = 1
        if size + extra >= best_size:
            return
        w = order[i]
        walk(i + 1, chosen | (1 << w))
        walk(i + 1, chosen)

    optimal = True
    if best_size > lb:
        try:
            walk(0, 0)
        except _BudgetHit:
            optimal = False
        except _Done:
            pass
    return SearchResult(mask_to_set(best_mask), optimal, nodes)


def _dominable(masks, undom: int, pool: int) -> int:
    """Subset of undom whose closed neighborhood still meets pool."""
    out = 0
    m = undom
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if masks[v] & pool:
            out |= low
        m ^= low
    return out


def exact_min_dominating(g: Graph, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Minimum dominating set by branch and bound (always exists)."""
    if g.n < 1:
        raise ValueError("exact_min_dominating needs n >= 1")
    n = g.n
    masks = g.closed_masks
    order = _branch_order(g)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << order[i])

    incumbent = greedy_dominating(g)
    best_size = len(incumbent)
    best_mask = 0
    for v in incumbent:
        best_mask |= 1 << v
    max_deg = max(g.degree(v) for v in range(n))
    lb = math.ceil(n / (max_deg + 1))
    nodes = 0

    def walk(i: int, chosen: int) -> None:
        nonlocal nodes, best_size, best_mask
        nodes += 1
        if nodes > budget:
            raise _BudgetHit
        size = chosen.bit_count()
        if size >= best_size:
            return
        undom = 0
        for v in range(n):
            if not masks[v] & chosen:
                undom |= 1 << v
        if not undom:
            best_size, best_mask = size, chosen
            if best_size <= lb:
                raise _Done
            return
        avail = suffix[i]
        pool = chosen | avail
        if undom & ~_dominable(masks, undom, pool):
            return
        best_cover = 0
        a = avail
        while a:
            low = a & -a
            w = low.bit_length() - 1
            cov = (masks[w] & undom).bit_count()
            if cov > best_cover:
                best_cover = cov
            a ^= low
        if best_cover == 0:
            return
        extra = -(-undom.bit_count() // best_cover)
        if size + extra >= best_size:
            return
        w = order[i]
        walk(i + 1, chosen | (1 << w))
        walk(i + 1, chosen)

    optimal = True
    if best_size > lb:
        try:
            walk(0, 0)
        except _BudgetHit:
            optimal = False
        except _Done:
            pass
    return SearchResult(mask_to_set(best_mask), optimal, nodes)


def greedy_dominating(g: Graph) -> frozenset[int]:
    """Max-coverage greedy dominating set: repeatedly pick the vertex
    dominating the most currently-undominated vertices, ties to the lowest
    index."""
    if g.n < 1:
        raise ValueError("greedy_dominating needs n >= 1")
    picks = _kernels.greedy_cover(g.packed_closed, g.n)
    return frozenset(int(v) for v in picks)


def greedy_idcode(g: Graph) -> frozenset[int]:
    """Greedy identifying code: each step picks the vertex with the largest
    (newly dominated vertices + newly separated pairs), ties to the lowest
    index. Output is verified before returning."""
    if g.n < 1:
        raise ValueError("greedy_idcode needs n >= 1")
    twins = find_twins(g)
    if twins:
        raise NotTwinFreeError(twins[0])
    n = g.n
    masks = g.closed_masks
    packed = g.packed_closed
    us, vs = np.triu_indices(n, k=1)
    xors = packed[us] ^ packed[vs]
    undom = (1 << n) - 1
    code: list[int] = []
    while undom or len(us):
        if len(us):
            gain = _kernels.separator_counts(xors, n)
        else:
            gain = np.zeros(n, dtype=np.int64)
        if undom:
            gain = gain + np.fromiter(
                ((masks[w] & undom).bit_count() for w in range(n)),
                dtype=np.int64,
                count=n,
            )
        w = int(np.argmax(gain))  # argmax takes the first maximum
        assert gain[w] > 0, "twin-free graph must always offer progress"
        code.append(w)
        undom &= ~masks[w]
        if len(us):
            keep = (xors[:, w >> 6] & np.uint64(1 << (w & 63))) == 0
            us, vs, xors = us[keep], vs[keep], xors[keep]
    verdict = is_identifying_code(g, code, "full")
    assert verdict.ok, f"greedy produced an invalid code: {verdict}"
    return frozenset(code)
