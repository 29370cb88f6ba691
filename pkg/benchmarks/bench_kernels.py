"""Compare the compiled and pure-Python Farey kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import math
import random
import sys
import timeit

from pantsfarey import _pykernels

try:
    from pantsfarey import _ckernels
except ImportError:
    _ckernels = None


def _pairs(n, box, seed=0):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        p, q, r, s = rng.randint(-box, box), rng.randint(1, box), rng.randint(-box, box), rng.randint(1, box)
        if (p * s - q * r) != 0 and math.gcd(p, q) == 1 and math.gcd(r, s) == 1:
            out.append((p, q, r, s))
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--pairs", type=int, default=300)
    args = ap.parse_args(argv)

    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["compiled"] = _ckernels
    else:
        print("compiled extension not built; timing the pure kernels only", file=sys.stderr)

    pairs = _pairs(args.pairs, 12)
    cases = {
        "bounded_distance box=48": lambda k: [k.bounded_distance(p, q, r, s, 48) for p, q, r, s in pairs],
        "bounded_distance box=200": lambda k: [k.bounded_distance(p, q, r, s, 200) for p, q, r, s in pairs[:50]],
        "neighbors 1/0 box=10^5": lambda k: k.neighbors(1, 0, 100_000),
        "neighbors 355/113 box=10^5": lambda k: k.neighbors(355, 113, 100_000),
    }
    print(f"{'case':<30}" + "".join(f"{b:>14}" for b in backends) + "   speedup")
    for name, fn in cases.items():
        times = {}
        for bname, mod in backends.items():
            times[bname] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        row = f"{name:<30}" + "".join(f"{times[b]:>13.4f}s" for b in backends)
        if "compiled" in times:
            row += f"   {times['python'] / times['compiled']:.1f}x"
        print(row)


if __name__ == "__main__":
    main()
