"""Fixed corpus of small labeled graphs shared across tests.

Contents: every tree on 2..7 vertices (networkx's nonisomorphic
enumeration, one labeling each), classic families up to 7 vertices, and a
seeded G(n,p) sweep. Every graph has at least one edge, so the classical
identifying-code bounds apply whenever the graph is twin-free; empty
random draws are redrawn with a deterministic seed offset.
"""

from functools import lru_cache

import networkx as nx

from idcodes import (
    Graph,
    complete,
    complete_bipartite,
    connected_cliques,
    cycle,
    disjoint_cliques,
    gnp,
    path,
    star,
)

GNP_SIZES = (4, 5, 6, 7)
GNP_PROBS = (0.25, 0.5, 0.75)
GNP_SEEDS = 40


def trees_up_to_7():
    out = []
    for n in range(2, 8):
        for i, t in enumerate(nx.nonisomorphic_trees(n)):
            edges = sorted(tuple(sorted(e)) for e in t.edges())
            out.append((f"tree{n}_{i}", Graph(n, edges)))
    return out


def classic_families():
    out = []
    for n in range(2, 8):
        out.append((f"path{n}", path(n)))
        out.append((f"complete{n}", complete(n)))
    for n in range(3, 8):
        out.append((f"cycle{n}", cycle(n)))
    for s in range(1, 7):
        out.append((f"star{s}", star(s)))
    for r in range(1, 4):
        for s in range(r, 8 - r):
            out.append((f"bipartite{r}_{s}", complete_bipartite(r, s)))
    out.append(("cliques1x2", disjoint_cliques(1, 2)))
    out.append(("cliques1x3", disjoint_cliques(1, 3)))
    out.append(("cliques2x2", disjoint_cliques(2, 2)))
    out.append(("chain2x2", connected_cliques(2, 2)))
    return out


def gnp_sweep():
    out = []
    for n in GNP_SIZES:
        for p in GNP_PROBS:
            for i in range(GNP_SEEDS):
                seed = i
                g = gnp(n, p, seed)
                while g.m == 0:
                    seed += 1000
                    g = gnp(n, p, seed)
                out.append((f"gnp{n}_{int(p * 100)}_{i}", g))
    return out


@lru_cache(maxsize=1)
def small_corpus():
    """All (name, graph) pairs; at least 500 of them, n <= 7 throughout."""
    return tuple(trees_up_to_7() + classic_families() + gnp_sweep())
