"""Emptiness checks that return lasso witnesses; inclusion is built on top."""

from __future__ import annotations

from .. import graph
from .complement import complement_builder
from .nba import NBA, ArityError, LassoWord
from .ops import Product, as_implicit, explore, product_mode


def _path(parent, v):
    out = []
    while v >= 0:
        out.append(v)
        v = parent[v]
    return out[::-1]


def is_empty(a: NBA) -> LassoWord | None:
    """None when L(a) is empty, otherwise an accepting lasso of ``a``.

    The witness is deterministic: breadth-first search over states in index
    order, with the lexicographically least letter on every edge.
    """
    n = a.num_states
    if n == 0 or not a.initial:
        return None
    good = a.good_states
    targets = bytes(1 if q in good and q in a.accepting else 0 for q in range(n))
    if not any(targets):
        return None
    indptr, indices = a.csr
    everywhere = bytes([1]) * n
    hit, parent = graph.bfs_path(n, indptr, indices, sorted(a.initial), targets, everywhere)
    if hit < 0:
        return None
    stem = _path(parent, hit)
    comp = a.scc_ids
    inside = bytes(1 if comp[q] == comp[hit] else 0 for q in range(n))
    starts = [d for d, _ in a.edges[hit] if inside[d]]
    goal = bytes(1 if q == hit else 0 for q in range(n))
    back, parent2 = graph.bfs_path(n, indptr, indices, starts, goal, inside)
    assert back == hit
    loop = [hit] + _path(parent2, hit)
    guard = {(q, d): g for q, es in enumerate(a.edges) for d, g in es}
    alpha = a.alphabet

    def letters(states):
        return tuple(alpha.pick(guard[(s, t)], a.arity) for s, t in zip(states, states[1:]))

    return LassoWord(letters(stem), letters(loop))


def accepts(a: NBA, w: LassoWord) -> bool:
    """Exact membership of the ultimately periodic word ``w``."""
    if w.arity != a.arity:
        raise ArityError(f"word arity {w.arity} vs automaton arity {a.arity}")
    L = len(w)
    alpha = a.alphabet
    minterms = [alpha.minterm(w.letter(i)) for i in range(L)]
    false = alpha.false
    index: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []
    succ: list[list[int]] = []
    for q in sorted(a.initial):
        index[(q, 0)] = len(order)
        order.append((q, 0))
    i = 0
    while i < len(order):
        q, pos = order[i]
        nxt = w.next_pos(pos)
        out = []
        for d, g in a.edges[q]:
            if (g & minterms[pos]) != false:
                key = (d, nxt)
                j = index.get(key)
                if j is None:
                    j = index[key] = len(order)
                    order.append(key)
                out.append(j)
        succ.append(out)
        i += 1
    m = len(order)
    indptr, indices = graph.csr(m, succ)
    comp = graph.scc(m, indptr, indices)
    size: dict[int, int] = {}
    for v in range(m):
        size[comp[v]] = size.get(comp[v], 0) + 1
    for v, (q, _) in enumerate(order):
        if q in a.accepting and (size[comp[v]] > 1 or v in succ[v]):
            return True
    return False


def language_included(a: NBA, b: NBA) -> LassoWord | None:
    """None when L(a) is a subset of L(b), otherwise a word in L(a) minus L(b)."""
    if a.arity != b.arity:
        raise ArityError(f"arity mismatch: {a.arity} vs {b.arity}")
    if a.num_states == 0:
        return None
    comp = complement_builder(b)
    prod = explore(Product(as_implicit(a), comp, product_mode(a, comp)))
    return is_empty(prod)
