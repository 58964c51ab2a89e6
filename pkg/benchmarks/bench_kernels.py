"""Compare the compiled and pure-Python grafting kernels.

Usage: python benchmarks/bench_kernels.py [max_total_size] [repeats]
"""
import sys
import time

from prelie_hopf import _pykernels
from prelie_hopf.trees import enumerate_trees

try:
    from prelie_hopf import _ckernels
except ImportError:
    _ckernels = None


def workload(max_total: int):
    trees = [t for n in range(1, max_total) for t in enumerate_trees(n, ("a", "b"))]
    return [(x, y) for x in trees for y in trees if x.size + y.size <= max_total]


def run(kernel, pairs) -> float:
    start = time.perf_counter()
    for x, y in pairs:
        kernel.all_grafts(x, y)
    return time.perf_counter() - start


def main() -> None:
    max_total = int(sys.argv[1]) if len(sys.argv) > 1 else 9
    repeats = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    pairs = workload(max_total)
    print(f"{len(pairs)} tree pairs, total size <= {max_total}, two colors")
    py = min(run(_pykernels, pairs) for _ in range(repeats))
    print(f"python: {py:.3f}s")
    if _ckernels is None:
        print("cython: not built")
        return
    for x, y in pairs:
        assert _ckernels.all_grafts(x, y) == _pykernels.all_grafts(x, y)
    cy = min(run(_ckernels, pairs) for _ in range(repeats))
    print(f"cython: {cy:.3f}s  speedup {py / cy:.2f}x")


if __name__ == "__main__":
    main()
