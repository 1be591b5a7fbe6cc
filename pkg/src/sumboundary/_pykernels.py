"""Pure-Python kernels. Same signatures and results as the compiled ``_ckernels``.

Graphs arrive in CSR form: ``ptr`` has n+1 offsets into ``idx``.
Distance matrices are flat row-major sequences of n*n ints; -1 marks
"unreachable" inside the kernels only.
"""
from collections import deque


def all_pairs_bfs(n, ptr, idx):
    """Flat n*n list of BFS hop counts, -1 where unreachable."""
    out = [-1] * (n * n)
    for src in range(n):
        base = src * n
        out[base + src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = out[base + u] + 1
            for k in range(ptr[u], ptr[u + 1]):
                w = idx[k]
                if out[base + w] < 0:
                    out[base + w] = du
                    queue.append(w)
    return out


def boundary_scan(n, dist, ptr, idx):
    """Flags v when some u has no neighbour of v strictly farther from u than v."""
    flags = [False] * n
    for v in range(n):
        nbrs = [idx[k] for k in range(ptr[v], ptr[v + 1])]
        for u in range(n):
            row = u * n
            duv = dist[row + v]
            for w in nbrs:
                if dist[row + w] > duv:
                    break
            else:
                flags[v] = True
                break
    return flags


def triangle_violation(n, dist):
    """First (u, v, w) in lexicographic order with d(u,v) > d(u,w) + d(w,v), else None."""
    for u in range(n):
        ru = u * n
        for v in range(n):
            duv = dist[ru + v]
            for w in range(n):
                if duv > dist[ru + w] + dist[w * n + v]:
                    return (u, v, w)
    return None
