# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled graph kernels; same API and results as ``_graph_py``."""

from array import array
from cpython cimport array as carray


def scc(int n, const int[:] indptr, const int[:] indices):
    cdef carray.array comp_arr = array("i", [-1]) * n
    cdef carray.array index_arr = array("i", [-1]) * n
    cdef carray.array low_arr = array("i", [0]) * n
    cdef carray.array stack_arr = array("i", [0]) * n
    cdef carray.array wv_arr = array("i", [0]) * n
    cdef carray.array wp_arr = array("i", [0]) * n
    cdef int[:] comp = comp_arr
    cdef int[:] index = index_arr
    cdef int[:] low = low_arr
    cdef int[:] stack = stack_arr
    cdef int[:] work_v = wv_arr
    cdef int[:] work_p = wp_arr
    cdef bytearray onstack_b = bytearray(n)
    cdef unsigned char[:] onstack = onstack_b
    cdef int sp = 0, wp = 0, counter = 0, ncomp = 0
    cdef int root, v, pos, w, u
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = counter
        low[root] = counter
        counter += 1
        stack[sp] = root
        sp += 1
        onstack[root] = 1
        work_v[wp] = root
        work_p[wp] = indptr[root]
        wp += 1
        while wp > 0:
            v = work_v[wp - 1]
            pos = work_p[wp - 1]
            if pos < indptr[v + 1]:
                w = indices[pos]
                work_p[wp - 1] = pos + 1
                if index[w] == -1:
                    index[w] = counter
                    low[w] = counter
                    counter += 1
                    stack[sp] = w
                    sp += 1
                    onstack[w] = 1
                    work_v[wp] = w
                    work_p[wp] = indptr[w]
                    wp += 1
                elif onstack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            wp -= 1
            if wp > 0:
                u = work_v[wp - 1]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == index[v]:
                while True:
                    sp -= 1
                    w = stack[sp]
                    onstack[w] = 0
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp_arr


def reachable(int n, const int[:] indptr, const int[:] indices, sources):
    cdef bytearray seen_b = bytearray(n)
    cdef unsigned char[:] seen = seen_b
    cdef carray.array todo_arr = array("i", [0]) * (n if n > 0 else 1)
    cdef int[:] todo = todo_arr
    cdef int top = 0, v, w, k
    for s in sources:
        v = s
        if not seen[v]:
            seen[v] = 1
            todo[top] = v
            top += 1
    while top > 0:
        top -= 1
        v = todo[top]
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if not seen[w]:
                seen[w] = 1
                todo[top] = w
                top += 1
    return seen_b


def bfs_path(int n, const int[:] indptr, const int[:] indices, sources, targets, allowed):
    cdef carray.array parent_arr = array("i", [-1]) * n
    cdef int[:] parent = parent_arr
    cdef carray.array queue_arr = array("i", [0]) * (n if n > 0 else 1)
    cdef int[:] queue = queue_arr
    cdef const unsigned char[:] tgt = targets
    cdef const unsigned char[:] ok = allowed
    cdef int head = 0, tail = 0, v, w, k
    for s in sources:
        v = s
        if ok[v] and parent[v] == -1:
            parent[v] = -2
            queue[tail] = v
            tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        if tgt[v]:
            return v, parent_arr
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if ok[w] and parent[w] == -1:
                parent[w] = v
                queue[tail] = w
                tail += 1
    return -1, parent_arr
