"""Pure-Python graph kernels (fallback for the compiled ``_graph`` module).

Graphs are in CSR form: successors of node v are
``indices[indptr[v]:indptr[v + 1]]``.  All arrays are ``array('i')``.
"""

from array import array


def scc(n, indptr, indices):
    """Tarjan's algorithm, iterative.  Component ids are in reverse topological order."""
    index = array("i", [-1]) * n
    low = array("i", [0]) * n
    comp = array("i", [-1]) * n
    onstack = bytearray(n)
    stack = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, indptr[root])]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack[root] = 1
        while work:
            v, pos = work[-1]
            end = indptr[v + 1]
            if pos < end:
                w = indices[pos]
                work[-1] = (v, pos + 1)
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack[w] = 1
                    work.append((w, indptr[w]))
                elif onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    onstack[w] = 0
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp


def reachable(n, indptr, indices, sources):
    """Mask of nodes reachable from ``sources`` (sources included)."""
    seen = bytearray(n)
    todo = []
    for s in sources:
        if not seen[s]:
            seen[s] = 1
            todo.append(s)
    while todo:
        v = todo.pop()
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if not seen[w]:
                seen[w] = 1
                todo.append(w)
    return seen


def bfs_path(n, indptr, indices, sources, targets, allowed):
    """Breadth-first search from ``sources`` for a node in ``targets``.

    Only nodes with ``allowed[v]`` are entered.  Returns (target, parent)
    where parent[v] is the BFS predecessor (-2 for a source, -1 unvisited);
    target is -1 when no target is reachable.  A source may itself be the
    target, so callers looking for cycles start from a node's successors.
    """
    parent = array("i", [-1]) * n
    queue = []
    for s in sources:
        if allowed[s] and parent[s] == -1:
            parent[s] = -2
            queue.append(s)
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        if targets[v]:
            return v, parent
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if allowed[w] and parent[w] == -1:
                parent[w] = v
                queue.append(w)
    return -1, parent
