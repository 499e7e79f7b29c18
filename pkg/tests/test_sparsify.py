import math

import numpy as np
import pytest

from idcodes import (
    DegenerateGraphError,
    Graph,
    InfeasibleProbabilityError,
    RetriesExhaustedError,
    SparsifyParams,
    Violation,
    bounded_f,
    check_events,
    complete,
    cycle,
    disjoint_cliques,
    is_identifying_code,
    pair_collision_frequency,
    pick_code,
    sample_subgraph,
    sparsify,
    star,
)
from idcodes.sparsify import sparsify_theorem1, sparsify_uniform

from oracles import (
    adjacency,
    oracle_collision_probability,
    oracle_undominated,
    oracle_unseparated,
)


def test_params_validation():
    SparsifyParams()
    for bad in (
        dict(c=0.0),
        dict(c=-1.0),
        dict(max_retries=0),
        dict(seed=-1),
        dict(variant="nope"),
    ):
        with pytest.raises(ValueError):
            SparsifyParams(**bad)


def test_degenerate_graphs_rejected():
    lonely = Graph(3, [(0, 1)])
    with pytest.raises(DegenerateGraphError):
        pick_code(lonely, SparsifyParams())
    with pytest.raises(DegenerateGraphError):
        sparsify(lonely, SparsifyParams())


def test_pick_code_clamps_to_everything():
    g = disjoint_cliques(3, 2)
    assert pick_code(g, SparsifyParams(c=66.0, seed=5)) == set(range(8))


def test_pick_code_infeasible_without_clamp():
    g = disjoint_cliques(15, 32)
    with pytest.raises(InfeasibleProbabilityError):
        pick_code(g, SparsifyParams(c=66.0, clamp=False))
    pick_code(g, SparsifyParams(c=2.0, clamp=False))


def test_pick_code_mean_matches_binomial():
    # delta = Delta = 15, n = 160: p = 2*ln(15)/15, np = 57.8
    g = disjoint_cliques(15, 10)
    p = 2 * math.log(15) / 15
    sizes = [len(pick_code(g, SparsifyParams(c=2.0, seed=s))) for s in range(200)]
    mean = sum(sizes) / len(sizes)
    assert abs(mean - 160 * p) <= 0.15 * 160 * p
    assert pick_code(g, SparsifyParams(c=2.0, seed=3)) == pick_code(
        g, SparsifyParams(c=2.0, seed=3)
    )


def test_bounded_f_definition():
    g = disjoint_cliques(7, 2)
    code = [0, 1, 2, 3, 8]
    f = bounded_f(g, code, 0.7)
    cap = 0.7 * math.log(7)
    adj = adjacency(g.n, g.edges())
    for u in range(g.n):
        dcu = len(adj[u] & set(code))
        assert f[u] == pytest.approx(min(cap, dcu))
    assert bounded_f(g, [], 2.0).tolist() == [0.0] * g.n


def test_bounded_f_ratio_monotone():
    g = disjoint_cliques(7, 4)
    code = list(range(0, 32, 3))
    f = bounded_f(g, code, 0.9)
    adj = adjacency(g.n, g.edges())
    ratios = {}
    for u in range(g.n):
        dcu = len(adj[u] & set(code))
        if dcu:
            ratios.setdefault(dcu, f[u] / dcu)
    items = sorted(ratios.items())
    for (d1, r1), (d2, r2) in zip(items, items[1:]):
        assert d1 < d2 and r1 >= r2 - 1e-12


def test_sample_subgraph_empty_code_keeps_everything():
    g = cycle(5)
    h, deleted = sample_subgraph(g, [], bounded_f(g, [], 2.0), seed=1)
    assert h == g and deleted == frozenset()


def test_sample_subgraph_structure_and_determinism():
    g = disjoint_cliques(7, 4)
    code = sorted(pick_code(g, SparsifyParams(c=2.0, seed=0)))
    f = bounded_f(g, code, 2.0)
    h1, f1 = sample_subgraph(g, code, f, seed=9)
    h2, f2 = sample_subgraph(g, code, f, seed=9)
    assert h1 == h2 and f1 == f2
    assert h1.n == g.n
    assert set(h1.edges()) | f1 == set(g.edges())
    cs = set(code)
    for u, v in f1:
        assert u in cs or v in cs, "non-incident edges must survive"


def test_sample_subgraph_rejects_unbounded_f():
    g = cycle(4)
    code = [0, 2]
    f = bounded_f(g, code, 2.0)
    with pytest.raises(ValueError):
        sample_subgraph(g, code, f + 1.0, seed=0)
    with pytest.raises(ValueError):
        sample_subgraph(g, code, f[:2], seed=0)


def test_sample_subgraph_deletion_rates():
    # code = {1..10}; vertex 0 sits outside with code degree 10 and code
    # vertex 1 has code degree 5, so with cap c*ln(11) = 4 the edge (0,1)
    # is deleted with probability (4/10 + 4/5)/4 = 0.3. Code vertex 7 has
    # no code neighbor, so its term is 0 and p(0,7) = 0.1. The code-free
    # edge (0,11) must never be deleted.
    edges = [(0, w) for w in range(1, 12)] + [(1, w) for w in range(2, 7)]
    g = Graph(12, edges)
    code = list(range(1, 11))
    c = 4 / math.log(11)
    f = bounded_f(g, code, c)
    assert f[0] == pytest.approx(4.0) and f[1] == pytest.approx(4.0)
    trials = 4000
    hits_01 = hits_07 = 0
    for s in range(trials):
        _, deleted = sample_subgraph(g, code, f, seed=s)
        hits_01 += (0, 1) in deleted
        hits_07 += (0, 7) in deleted
        assert (0, 11) not in deleted
    assert abs(hits_01 / trials - 0.3) < 4 * math.sqrt(0.3 * 0.7 / trials)
    assert abs(hits_07 / trials - 0.1) < 4 * math.sqrt(0.1 * 0.9 / trials)


def test_sample_subgraph_halfcap_rate():
    # triangle with full code: f = d_C, so every edge sits at the 1/2 cap
    g = complete(3)
    code = [0, 1, 2]
    f = bounded_f(g, code, 3.0)
    assert f.tolist() == [2.0, 2.0, 2.0]
    dels = sum(len(sample_subgraph(g, code, f, seed=s)[1]) for s in range(2000))
    rate = dels / (2000 * 3)
    assert abs(rate - 0.5) < 0.03


def test_check_events_clean_case():
    g = cycle(6)
    assert check_events(g, g, range(6), 10.0) == []


def test_check_events_twins_give_b_violations():
    g = Graph(2, [(0, 1)])
    out = check_events(g, g, [0], 1.0)
    assert Violation("B", 0, 1) in out


def test_check_events_a_violation_on_starved_center():
    # code {0} on a star: the center has no code neighbor, so its code
    # degree 0 deviates from d*p by d*p >= d*p/2 on every pair it joins
    g = star(4)
    out = check_events(g, g, [0], 0.5)
    a_pairs = [(v.u, v.v) for v in out if v.kind == "A"]
    assert a_pairs == [(0, 1), (0, 2), (0, 3), (0, 4)]


def test_check_events_rejects_non_subgraph():
    with pytest.raises(ValueError):
        check_events(path_graph_4(), cycle(4), [0], 1.0)


def path_graph_4():
    return Graph(4, [(0, 1), (1, 2), (2, 3)])


def test_sparsify_h15_seed7_contract():
    g = disjoint_cliques(15, 32)
    res = sparsify_theorem1(g, SparsifyParams(c=2.0, seed=7, max_retries=1000))
    assert len(res.deleted_edges) > 0
    assert res.retries_used <= 1000
    assert res.final_code == res.code | res.dominating
    h = g.delete_edges(res.deleted_edges)
    assert is_identifying_code(h, sorted(res.final_code), "full").ok
    cs = res.code
    for u, v in res.deleted_edges:
        assert u in cs or v in cs
    assert res.stats.deleted_edges == len(res.deleted_edges)
    assert res.stats.code_size == len(res.final_code)
    assert res.stats.n_ln_dmax == pytest.approx(512 * math.log(15))
    assert res.stats.n_ln_dmax_over_dmin == pytest.approx(512 * math.log(15) / 15)
    assert len(res.trials) == res.retries_used + 1
    assert [t.trial for t in res.trials] == list(range(len(res.trials)))


def test_sparsify_result_passes_independent_oracle():
    g = disjoint_cliques(7, 4)
    res = sparsify(g, SparsifyParams(c=2.0, seed=1))
    h = g.delete_edges(res.deleted_edges)
    code = sorted(res.final_code)
    assert not oracle_undominated(h.n, h.edges(), code)
    assert not oracle_unseparated(h.n, h.edges(), code)


def test_sparsify_complete_graph():
    g = complete(64)
    res = sparsify(g, SparsifyParams(c=2.0, seed=0))
    assert len(res.final_code) < 64
    h = g.delete_edges(res.deleted_edges)
    assert is_identifying_code(h, sorted(res.final_code)).ok


def test_sparsify_determinism():
    g = disjoint_cliques(7, 8)
    a = sparsify(g, SparsifyParams(c=2.0, seed=5))
    b = sparsify(g, SparsifyParams(c=2.0, seed=5))
    assert a == b
    c = sparsify(g, SparsifyParams(c=2.0, seed=6))
    assert a.deleted_edges != c.deleted_edges or a.code != c.code


def test_sparsify_retries_exhausted():
    g = complete(64)
    with pytest.raises(RetriesExhaustedError) as err:
        sparsify(g, SparsifyParams(c=2.0, seed=0, max_retries=1))
    last = err.value.last_trial
    assert last.trial == 1
    assert last.b_violations > 0


def test_sparsify_infeasible_without_clamp():
    g = disjoint_cliques(15, 32)
    with pytest.raises(InfeasibleProbabilityError):
        sparsify(g, SparsifyParams(c=66.0, clamp=False))


def test_sparsify_uniform_contract_and_deletion_mean():
    g = disjoint_cliques(15, 32)
    fs, quarters = [], []
    for s in range(200):
        res = sparsify_uniform(g, SparsifyParams(c=2.0, seed=s))
        h = g.delete_edges(res.deleted_edges)
        assert res.final_code == res.code | res.dominating
        fs.append(len(res.deleted_edges))
        cs = res.code
        incident = sum(1 for u, v in g.edges() if u in cs or v in cs)
        quarters.append(incident / 4)
    mean_f = sum(fs) / len(fs)
    mean_q = sum(quarters) / len(quarters)
    assert abs(mean_f - mean_q) <= 0.15 * mean_q
    res = sparsify_uniform(g, SparsifyParams(c=2.0, seed=0))
    assert res == sparsify_uniform(g, SparsifyParams(c=2.0, seed=0))


def test_sparsify_uniform_clamped_code_is_everything():
    g = disjoint_cliques(3, 2)
    res = sparsify_uniform(g, SparsifyParams(c=66.0, seed=2))
    assert res.code == set(range(8))


def test_pair_collision_frequency_validation():
    g = cycle(6)
    with pytest.raises(ValueError):
        pair_collision_frequency(g, [2], 2.0, 0, 1)  # adjacent
    with pytest.raises(ValueError):
        pair_collision_frequency(g, [2], 2.0, 0, 3)  # distance 3
    with pytest.raises(ValueError):
        pair_collision_frequency(g, [2], 2.0, 0, 2, trials=0)


def test_pair_collision_frequency_code_endpoint_is_zero():
    g = cycle(6)
    assert pair_collision_frequency(g, [1, 3], 2.0, 1, 3) == 0.0


def _terms(g, code, c):
    adj = adjacency(g.n, g.edges())
    cap = c * math.log(max(len(adj[v]) for v in range(g.n)))
    term = {}
    for v in range(g.n):
        dcv = len(adj[v] & set(code))
        term[v] = min(cap, dcv) / dcv if dcv else 0.0
    return term


@pytest.mark.parametrize(
    "code,pair",
    [
        ([2, 5], (1, 3)),
        ([0, 2, 4], (1, 3)),
        ([2], (1, 3)),
    ],
)
def test_pair_collision_frequency_matches_exact_oracle(code, pair):
    g = cycle(6)
    u, v = pair
    exact = oracle_collision_probability(
        g.n, g.edges(), code, _terms(g, code, 2.0), u, v
    )
    freq = pair_collision_frequency(g, code, 2.0, u, v, trials=10_000, seed=0)
    se = math.sqrt(max(exact * (1 - exact), 1e-9) / 10_000)
    assert abs(freq - exact) <= 4 * se + 1e-9
    again = pair_collision_frequency(g, code, 2.0, u, v, trials=10_000, seed=0)
    assert freq == again


def test_pair_collision_frequency_nontrivial_band():
    # common neighbor only: survive-survive plus drop-drop = 0.625
    g = cycle(6)
    freq = pair_collision_frequency(g, [2, 5], 2.0, 1, 3, trials=10_000, seed=1)
    assert 0.58 <= freq <= 0.67
