#!/usr/bin/env python3
"""Benchmark the compiled word kernels against the pure-Python fallback.

Times the raw kernels (reduction, substitution) and two end-to-end
workloads (endomorphism evaluation, greedy decomposition) under each
available backend.

    python3 benchmarks/bench_kernels.py [--words 200] [--length 12] [--seed 0]
"""

from __future__ import annotations

import argparse
import random
import time

from orbitbraids import kernels
from orbitbraids.braids import BraidWord
from orbitbraids.recognition import decompose
from orbitbraids.rep import rho_word
from orbitbraids.words import GroupParams


def random_words(rng, params, count, max_len):
    alphabet = [1, -1]
    for k in range(params.n - 1):
        alphabet.extend((k + 2, -(k + 2)))
    return [
        BraidWord(params, rng.choices(alphabet, k=rng.randint(1, max_len)))
        for _ in range(count)
    ]


def time_call(fn, *args):
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def run_backend(name, args):
    kernels.use_backend(name)
    rng = random.Random(args.seed)
    params = GroupParams(3, 3)
    words = random_words(rng, params, args.words, args.length)

    letters = [c for c in range(-9, 10) if c]
    raw = [
        tuple(rng.choice(letters) for _ in range(2000)) for _ in range(50)
    ]
    t_reduce = time_call(lambda: [kernels.reduce_letters(w) for w in raw])

    t_rho = time_call(lambda: [rho_word(w) for w in words])

    endos = [rho_word(w) for w in words[: args.words // 4]]
    t_dec = time_call(lambda: [decompose(e) for e in endos])

    return t_reduce, t_rho, t_dec


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--words", type=int, default=200)
    parser.add_argument("--length", type=int, default=12)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    original = kernels.backend_name()
    rows = {}
    try:
        for name in kernels.available_backends():
            rows[name] = run_backend(name, args)
    finally:
        kernels.use_backend(original)

    print(f"{'backend':<10} {'reduce':>10} {'rho_word':>10} {'decompose':>10}")
    for name, (t1, t2, t3) in rows.items():
        print(f"{name:<10} {t1:>9.3f}s {t2:>9.3f}s {t3:>9.3f}s")
    if len(rows) == 2:
        py = rows["python"]
        cy = rows["compiled"]
        speedups = ", ".join(f"{a / b:.1f}x" for a, b in zip(py, cy))
        print(f"compiled speedup: {speedups}")
    else:
        print("only one backend available; build the extension to compare")


if __name__ == "__main__":
    main()
