"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--sizes 8 12 16] [--repeat 3]

Times the subset-lattice kernels on random flag tables and the full operator
cache build on random generalized topologies.
"""
import argparse
import random
import time
from array import array

from gtlab import _pykernels, build_cache
from gtlab.enumerate import union_closure
from gtlab.sets import GroundSet
from gtlab.space import validate_gt

try:
    from gtlab import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def random_space(n, rng):
    gens = [rng.getrandbits(n) for _ in range(2 * n)]
    return validate_gt(GroundSet.of_size(n), union_closure(gens))


def cache_build(T, backend):
    from gtlab import semi

    saved = semi.kernels
    semi.kernels = backend
    try:
        build_cache(T)
    finally:
        semi.kernels = saved


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 16])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; only the fallback is available")
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    rng = random.Random(args.seed)

    print(f"{'task':<24}{'n':>4}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for n in args.sizes:
        flags = bytearray(rng.random() < 0.3 for _ in range(1 << n))
        members = array("I", [m for m in range(1 << n) if flags[m]][:64])
        T = random_space(n, rng)
        tasks = {
            "join_below": lambda k: k.join_below(flags, n),
            "meet_above": lambda k: k.meet_above(flags, n),
            "adherence_closure": lambda k: k.adherence_closure(members, n),
            "build_cache": lambda k: cache_build(T, k),
        }
        for task, fn in tasks.items():
            times = [best_of(lambda: fn(k), args.repeat) for _, k in backends]
            speed = f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 else ""
            print(f"{task:<24}{n:>4}" + "".join(f"{t:>11.4f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
