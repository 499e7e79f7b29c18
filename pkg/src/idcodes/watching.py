"""Watching systems: watchers sit on a host vertex and watch a zone inside
the host's closed neighborhood; every vertex must be watched by a
non-empty, unique set of watchers.

Two constructions are provided: one watcher per vertex of an identifying
code of a spanning subgraph, and the binary-labelling scheme that turns a
dominating set into at most ceil(log2(max_degree+2)) watchers per member.
Both are re-verified before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .bounds import ceil_log2
from .codes import (
    InvalidCodeError,
    UndominatedVertex,
    UnseparatedPair,
    Verdict,
    is_dominating,
    is_identifying_code,
)
from .graphs import Graph, degree_stats
from .solvers import exact_min_dominating, greedy_dominating

# largest graph on which watch_bounds defaults to the exact dominating set
EXACT_GAMMA_LIMIT = 24


class ZoneOutOfNeighborhoodError(ValueError):
    def __init__(self, index: int, message: str) -> None:
        super().__init__(f"watcher {index}: {message}")
        self.index = index


class NotDominatingError(ValueError):
    """The binary-labelling construction needs a dominating set."""


@dataclass(frozen=True)
class Watcher:
    host: int
    zone: frozenset[int]


@dataclass(frozen=True)
class WatchingSystem:
    watchers: tuple[Watcher, ...]

    def size(self) -> int:
        return len(self.watchers)


@dataclass(frozen=True)
class WatchBounds:
    lower: int
    upper: int
    gamma: int
    gamma_exact: bool


def verify_watching(g: Graph, system: WatchingSystem) -> Verdict:
    """ok iff every vertex lies in a non-empty and pairwise-distinct set of
    zones. Zones must sit inside their host's closed neighborhood; that is
    a structural error, not a failing verdict."""
    for idx, w in enumerate(system.watchers):
        if not 0 <= w.host < g.n:
            raise ZoneOutOfNeighborhoodError(idx, f"host {w.host} out of range")
        if not w.zone:
            raise ZoneOutOfNeighborhoodError(idx, "zone is empty")
        stray = w.zone - g.closed_neighborhood(w.host)
        if stray:
            raise ZoneOutOfNeighborhoodError(
                idx, f"zone members {sorted(stray)} outside N[{w.host}]"
            )
    membership: list[frozenset[int]] = []
    for v in range(g.n):
        membership.append(
            frozenset(i for i, w in enumerate(system.watchers) if v in w.zone)
        )
    for v in range(g.n):
        if not membership[v]:
            return Verdict(False, UndominatedVertex(v))
    seen: dict[frozenset[int], int] = {}
    best: Optional[tuple[int, int]] = None
    for v in range(g.n):
        if membership[v] in seen:
            pair = (seen[membership[v]], v)
            if best is None or pair < best:
                best = pair
        else:
            seen[membership[v]] = v
    if best is not None:
        return Verdict(False, UnseparatedPair(*best))
    return Verdict(True)


def watching_from_subgraph_code(
    g: Graph, h: Graph, c: Iterable[int]
) -> WatchingSystem:
    """One watcher per code vertex, hosted there, zone = its closed
    neighborhood in the spanning subgraph h. Since N_h[v] is contained in
    N_g[v], the system is legal for g and has size exactly |c|."""
    if h.n != g.n or not set(h.edges()) <= set(g.edges()):
        raise ValueError("h must be a spanning subgraph of g")
    code = sorted(set(c))
    verdict = is_identifying_code(h, code, "full")
    if not verdict.ok:
        raise InvalidCodeError(
            f"code is not identifying on the subgraph: {verdict.witness}"
        )
    watchers = tuple(
        Watcher(host=v, zone=h.closed_neighborhood(v)) for v in code
    )
    system = WatchingSystem(watchers)
    check = verify_watching(g, system)
    assert check.ok, f"subgraph-code system failed verification: {check}"
    return system


def watching_binary(g: Graph, d: Iterable[int]) -> WatchingSystem:
    """Binary-labelling construction: each dominating vertex v labels its
    closed neighborhood 1..|N[v]| (ascending vertex order) and hosts one
    watcher per label bit, the zone being the members with that bit set.
    Empty zones are dropped, so the size is at most |d| * ceil(log2(D+2))
    with D the maximum degree."""
    dom = sorted(set(d))
    verdict = is_dominating(g, dom)
    if not verdict.ok:
        raise NotDominatingError(f"not a dominating set: {verdict.witness}")
    _, dmax = degree_stats(g)
    levels = ceil_log2(dmax + 2)
    watchers = []
    for v in dom:
        hood = sorted(g.closed_neighborhood(v))
        for bit in range(levels):
            zone = frozenset(
                u for label, u in enumerate(hood, start=1) if label >> bit & 1
            )
            if zone:
                watchers.append(Watcher(host=v, zone=zone))
    system = WatchingSystem(tuple(watchers))
    check = verify_watching(g, system)
    assert check.ok, f"binary labelling failed verification: {check}"
    return system


def watch_bounds(g: Graph, exact: Optional[bool] = None) -> WatchBounds:
    """Lower bound ceil(log2(n+1)) and upper bound
    gamma * ceil(log2(max_degree+2)) on the minimum watcher count.

    gamma is the exact domination number when exact=True (default for
    n <= EXACT_GAMMA_LIMIT), else the greedy size; gamma_exact reports
    which one the upper bound uses.
    """
    if g.n < 1:
        raise ValueError("watch_bounds needs n >= 1")
    if exact is None:
        exact = g.n <= EXACT_GAMMA_LIMIT
    if exact:
        res = exact_min_dominating(g)
        gamma, gamma_exact = res.size, res.optimal
    else:
        gamma, gamma_exact = len(greedy_dominating(g)), False
    _, dmax = degree_stats(g)
    return WatchBounds(
        lower=ceil_log2(g.n + 1),
        upper=gamma * ceil_log2(dmax + 2),
        gamma=gamma,
        gamma_exact=gamma_exact,
    )
