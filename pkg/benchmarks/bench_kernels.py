"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--sizes 32 64 128] [--repeat 5]
"""
import argparse
import timeit
from array import array

from sumboundary import _pykernels, kernels
from sumboundary.generators import random_strong
from sumboundary.graph import _csr, neighbor_lists
from sumboundary.metric import sum_metric_matrix


def cases(n, seed):
    g = random_strong(n, min(1.0, 4.0 / n), seed).to_graph()
    out_ptr, out_idx = _csr(g.out_adj)
    flat = sum_metric_matrix(g).flat()
    nb_ptr, nb_idx = _csr(neighbor_lists(g))
    return {
        "all_pairs_bfs": (n, out_ptr, out_idx),
        "boundary_scan": (n, flat, nb_ptr, nb_idx),
        "triangle_violation": (n, flat),
    }


def best_of(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[32, 64, 128])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    compiled = kernels.BACKENDS.get("cython")
    if compiled is None:
        print("compiled extension not built; timing the Python fallback only")
    print(f"{'kernel':<20} {'n':>5} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for n in args.sizes:
        for name, call_args in cases(n, args.seed).items():
            py = best_of(getattr(_pykernels, name), call_args, args.repeat)
            line = f"{name:<20} {n:>5} {py * 1e3:>10.2f}"
            if compiled is not None:
                typed = [array("i", a) if isinstance(a, list) else a for a in call_args]
                cy = best_of(getattr(compiled, name), typed, args.repeat)
                line += f" {cy * 1e3:>10.2f} {py / cy:>7.1f}x"
            print(line)


if __name__ == "__main__":
    main()
