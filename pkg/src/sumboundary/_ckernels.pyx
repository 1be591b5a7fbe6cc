# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``_pykernels`` exactly."""
from cpython.array cimport array, clone


def all_pairs_bfs(int n, const int[:] ptr, const int[:] idx):
    cdef array out = clone(array('i'), n * n, False)
    cdef int[:] d = out
    cdef array qbuf = clone(array('i'), n if n > 0 else 1, False)
    cdef int[:] queue = qbuf
    cdef int src, base, head, tail, u, du, k, w
    for k in range(n * n):
        d[k] = -1
    for src in range(n):
        base = src * n
        d[base + src] = 0
        queue[0] = src
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = d[base + u] + 1
            for k in range(ptr[u], ptr[u + 1]):
                w = idx[k]
                if d[base + w] < 0:
                    d[base + w] = du
                    queue[tail] = w
                    tail += 1
    return out.tolist()


def boundary_scan(int n, const int[:] dist, const int[:] ptr, const int[:] idx):
    cdef int v, u, k, row, duv
    cdef bint ok
    flags = [False] * n
    for v in range(n):
        for u in range(n):
            row = u * n
            duv = dist[row + v]
            ok = True
            for k in range(ptr[v], ptr[v + 1]):
                if dist[row + idx[k]] > duv:
                    ok = False
                    break
            if ok:
                flags[v] = True
                break
    return flags


def triangle_violation(int n, const int[:] dist):
    cdef int u, v, w, ru, duv
    for u in range(n):
        ru = u * n
        for v in range(n):
            duv = dist[ru + v]
            for w in range(n):
                if duv > dist[ru + w] + dist[w * n + v]:
                    return (u, v, w)
    return None
