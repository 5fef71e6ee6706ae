import random

import pytest

from sohyper import _graph_py, graph


def random_case(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 40)
    succ = [[rng.randrange(n) for _ in range(rng.randint(0, 3))] for _ in range(n)]
    return n, succ, *graph.csr(n, succ)


def naive_reach(n, succ, sources):
    seen, stack = set(sources), list(sources)
    while stack:
        v = stack.pop()
        for w in succ[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def same_partition(a, b):
    pairs = lambda ids: {(i, j) for i in range(len(ids)) for j in range(len(ids)) if ids[i] == ids[j]}
    return pairs(list(a)) == pairs(list(b))


@pytest.mark.parametrize("seed", range(60))
def test_scc_matches_mutual_reachability(seed):
    n, succ, indptr, indices = random_case(seed)
    ids = list(_graph_py.scc(n, indptr, indices))
    reach = [naive_reach(n, succ, [v]) for v in range(n)]
    for u in range(n):
        for v in range(n):
            assert (ids[u] == ids[v]) == (v in reach[u] and u in reach[v])


@pytest.mark.skipif(not graph.COMPILED, reason="extension not built")
@pytest.mark.parametrize("seed", range(60))
def test_compiled_agrees_with_pure(seed):
    from sohyper import _graph

    n, succ, indptr, indices = random_case(seed)
    assert same_partition(_graph.scc(n, indptr, indices), _graph_py.scc(n, indptr, indices))
    src = [0]
    assert bytes(_graph.reachable(n, indptr, indices, src)) == bytes(_graph_py.reachable(n, indptr, indices, src))
    targets = bytes(1 if v == n - 1 else 0 for v in range(n))
    allowed = bytes([1]) * n
    t1, _ = _graph.bfs_path(n, indptr, indices, src, targets, allowed)
    t2, _ = _graph_py.bfs_path(n, indptr, indices, src, targets, allowed)
    assert t1 == t2


def test_reachable_matches_naive():
    for seed in range(30):
        n, succ, indptr, indices = random_case(seed)
        mask = graph.reachable(n, indptr, indices, [0])
        assert {v for v in range(n) if mask[v]} == naive_reach(n, succ, [0])
