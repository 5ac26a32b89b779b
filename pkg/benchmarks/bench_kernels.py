"""Time the compiled and pure-Python word kernels on identical random input.

    python benchmarks/bench_kernels.py [--vertices 20] [--length 200] [--words 500]
"""

import argparse
import random
import timeit

from raagcurves import _backend


def make_case(n: int, density: float, length: int, words: int, seed: int):
    rng = random.Random(seed)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    batch = [[rng.randrange(2 * n) for _ in range(length)] for _ in range(words)]
    return adj, batch


def bench(k, adj, batch, repeat: int) -> dict:
    reduced = [k.reduce_codes(w, adj, False) for w in batch]
    jobs = {
        "reduce": lambda: [k.reduce_codes(w, adj, False) for w in batch],
        "normal_form": lambda: [k.normal_form_codes(w, adj) for w in reduced],
        "find_cancellation": lambda: [k.find_cancellation(w, adj, False) for w in batch],
        "can_append": lambda: [k.can_append(w, 0, adj, False) for w in reduced],
    }
    return {name: min(timeit.repeat(fn, number=1, repeat=repeat)) for name, fn in jobs.items()}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--vertices", type=int, default=20)
    ap.add_argument("--density", type=float, default=0.5)
    ap.add_argument("--length", type=int, default=200)
    ap.add_argument("--words", type=int, default=500)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    adj, batch = make_case(args.vertices, args.density, args.length, args.words, args.seed)
    backends = {"python": _backend.python_kernels}
    if _backend.compiled_kernels is not None:
        backends["compiled"] = _backend.compiled_kernels
    results = {name: bench(k, adj, batch, args.repeat) for name, k in backends.items()}

    print(f"{args.words} words of length {args.length} on {args.vertices} vertices (edge density {args.density})")
    header = f"{'kernel':<18}" + "".join(f"{b:>12}" for b in results) + ("     speedup" if len(results) > 1 else "")
    print(header)
    for op in results["python"]:
        row = f"{op:<18}" + "".join(f"{results[b][op] * 1e3:>10.2f}ms" for b in results)
        if "compiled" in results:
            row += f"{results['python'][op] / results['compiled'][op]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
