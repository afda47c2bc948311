"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import timeit

from qgauss import _pure
from qgauss.birkhoff import chain_product, random_poset

try:
    from qgauss import _speedups
except ImportError:
    _speedups = None


def cases():
    masks = _pure.combinations_masks(20, 10)
    grid = chain_product(8, 8)
    rng = random.Random(0)
    sparse = random_poset(rng, 24, 0.08)
    return [
        ("combinations_masks(22, 11)", lambda m: m.combinations_masks(22, 11)),
        ("inversion_counts(22, 11)", lambda m: m.inversion_counts(22, 11)),
        ("word_stats(184756 words)", lambda m: m.word_stats(masks, 20)),
        ("lower_ideals(C8 x C8)", lambda m: m.lower_ideals(grid.order, grid.lower_covers, 10**6)),
        ("lower_ideals(random 24)", lambda m: m.lower_ideals(sparse.order, sparse.lower_covers, 10**7)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    impls = [("pure", _pure)] + ([("compiled", _speedups)] if _speedups else [])
    print(f"{'kernel':32s}" + "".join(f"{name:>12s}" for name, _ in impls) + "     speedup")
    for label, fn in cases():
        times = []
        for _, mod in impls:
            fn(mod)  # warm-up and correctness
            times.append(min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)))
        speed = f"{times[0] / times[1]:10.1f}x" if len(times) == 2 else ""
        print(f"{label:32s}" + "".join(f"{t:11.3f}s" for t in times) + speed)
    if _speedups is None:
        print("compiled kernels not built; only the fallback was timed")


if __name__ == "__main__":
    main()
