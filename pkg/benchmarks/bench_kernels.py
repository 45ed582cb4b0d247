#!/usr/bin/env python3
"""Compare the pure-Python and compiled kernels on the two hot paths: the
identity-reachability closure that powers the emptiness decider, and reduced
word concatenation. Synthetic instances mirror what the decision pipeline
produces (single-letter edges from split coset-product machines).

Run: python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from matdecide import _kernel_py

try:
    from matdecide import _ck
except ImportError:
    _ck = None


def pipeline_like_instance(rng: random.Random, n_units: int):
    """Edge chains that look like split Schreier-rewrite labels: per unit, a
    short chain of letters into a hub, the mirrored inverse chain out of it,
    and sparse epsilon links between hubs."""
    edges = []
    hubs = []
    next_state = 0

    def fresh():
        nonlocal next_state
        next_state += 1
        return next_state - 1

    entry = fresh()
    for _ in range(n_units):
        word = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(1, 6))]
        cur = entry
        for x in word:
            nxt = fresh()
            edges.append((cur, x, nxt))
            cur = nxt
        hub = cur
        hubs.append(hub)
        for x in reversed(word):
            nxt = fresh()
            edges.append((cur, -x, nxt))
            cur = nxt
        edges.append((cur, 0, entry))
        if len(hubs) > 1 and rng.random() < 0.5:
            edges.append((hub, 0, rng.choice(hubs)))
    accepting = [rng.choice(hubs) for _ in range(max(1, n_units // 8))]
    return next_state, edges, entry, accepting


def bench_dyck(label: str, n_units: int, repeats: int) -> None:
    rng = random.Random(42)
    instances = [pipeline_like_instance(rng, n_units) for _ in range(repeats)]

    def run(mod):
        t0 = time.perf_counter()
        answers = [
            mod.dyck_nonempty(n, edges, init, acc) for n, edges, init, acc in instances
        ]
        return time.perf_counter() - t0, answers

    pure_t, pure_ans = run(_kernel_py)
    if _ck is None:
        print(f"{label:<28} pure {pure_t * 1000:8.1f} ms   compiled      n/a")
        return
    comp_t, comp_ans = run(_ck)
    assert pure_ans == comp_ans
    states = instances[0][0]
    print(
        f"{label:<28} pure {pure_t * 1000:8.1f} ms   compiled {comp_t * 1000:8.1f} ms"
        f"   speedup {pure_t / comp_t:5.1f}x   (~{states} states x{repeats})"
    )


def bench_concat(label: str, word_len: int, repeats: int) -> None:
    # register words in the simulators stay short (the default cap is 64
    # letters), so short-word throughput is what matters
    rng = random.Random(7)

    def reduced(k):
        out = []
        while len(out) < k:
            x = rng.choice([1, -1, 2, -2])
            if out and out[-1] == -x:
                continue
            out.append(x)
        return tuple(out)

    pairs = [(reduced(word_len), reduced(word_len)) for _ in range(repeats)]

    def run(mod):
        t0 = time.perf_counter()
        for u, v in pairs:
            mod.concat_reduce_letters(u, v)
        return time.perf_counter() - t0

    pure_t = run(_kernel_py)
    if _ck is None:
        print(f"{label:<28} pure {pure_t * 1000:8.1f} ms   compiled      n/a")
        return
    comp_t = run(_ck)
    print(
        f"{label:<28} pure {pure_t * 1000:8.1f} ms   compiled {comp_t * 1000:8.1f} ms"
        f"   speedup {pure_t / comp_t:5.1f}x"
    )


def main() -> None:
    if _ck is None:
        print("compiled kernels not built; showing pure-Python timings only\n")
    bench_dyck("closure, small machines", 12, 60)
    bench_dyck("closure, medium machines", 30, 5)
    bench_dyck("closure, large machines", 60, 1)
    bench_concat("concat, 16-letter words", 16, 200_000)
    bench_concat("concat, 64-letter words", 64, 100_000)


if __name__ == "__main__":
    main()
