#!/usr/bin/env python3
"""Time the compiled bit kernel against the pure-Python fallback.

Both backends get the same prepared tables and the same input, so the
ratio is attributable to the kernel loop alone.
"""
import argparse
import time

from streamdeg import _bitkernel_py
from streamdeg.blockops import AddZeros, MergeWeights, MulBlock, compile_pipeline
from streamdeg.constructions import BASE_PAIR
from streamdeg.fst import Fst
from streamdeg.streams import stream_prefix
from streamdeg.weights import WeightTuple

try:
    from streamdeg import _bitkernel
except ImportError:
    _bitkernel = None


def machines():
    merge = compile_pipeline([MergeWeights(WeightTuple([[1, 2, 0], [1, 3]]))])
    stack = compile_pipeline(
        [
            AddZeros(frozenset({0}), 2, 2),
            MulBlock(frozenset({1}), 2, 2),
            MergeWeights(WeightTuple([[1, 1, 1]])),
        ]
    )
    return [
        ("identity", Fst.identity()),
        ("pair merge", merge),
        ("3-op stack", stack),
    ]


def bench(mod, t, data, repeat):
    outs = tuple(o.encode("ascii") for o in t.out)
    handle = mod.prepare(t.delta, outs)
    best = float("inf")
    for _ in range(repeat):
        tick = time.perf_counter()
        mod.run(handle, data, 0, -1)
        best = min(best, time.perf_counter() - tick)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bits", type=int, default=1_000_000,
                    help="input length in bits (default 1000000)")
    ap.add_argument("--repeat", type=int, default=5,
                    help="timed runs per machine, best is kept (default 5)")
    args = ap.parse_args()

    data = stream_prefix(BASE_PAIR, args.bits).encode("ascii")
    print(f"input: {len(data)} bits, best of {args.repeat}")
    if _bitkernel is None:
        print("compiled kernel not built; timing the fallback only")
    header = f"{'machine':<12} {'states':>6} {'python':>10}"
    if _bitkernel is not None:
        header += f" {'compiled':>10} {'speedup':>8}"
    print(header)
    for name, t in machines():
        py = bench(_bitkernel_py, t, data, args.repeat)
        row = f"{name:<12} {t.n_states:>6} {py * 1e3:>8.1f}ms"
        if _bitkernel is not None:
            cc = bench(_bitkernel, t, data, args.repeat)
            row += f" {cc * 1e3:>8.1f}ms {py / cc:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
