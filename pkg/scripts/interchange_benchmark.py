#!/usr/bin/env python3
"""Benchmark the equivalence search on random interchange instances.

Usage: python scripts/interchange_benchmark.py [cases] [seed]
"""

import random
import sys
import time

from opwords.search import Proved, equivalent
from opwords.words import compose_words, whisker

sys.path.insert(0, "tests")
from conftest import random_word  # noqa: E402


def main():
    cases = int(sys.argv[1]) if len(sys.argv) > 1 else 50
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 4
    rng = random.Random(seed)
    times, proved = [], 0
    for _ in range(cases):
        w = random_word(rng, max_len=2)
        w2 = random_word(rng, max_len=2)
        lhs = compose_words(whisker(0, w, w2.src), whisker(w.tgt, w2, 0))
        rhs = compose_words(whisker(w.src, w2, 0), whisker(0, w, w2.tgt))
        t0 = time.monotonic()
        res = equivalent(lhs, rhs)
        times.append(time.monotonic() - t0)
        if isinstance(res, Proved):
            proved += 1
    times.sort()
    print(f"proved {proved}/{cases}")
    print(f"median {times[len(times) // 2]:.2f}s  "
          f"p90 {times[int(len(times) * 0.9)]:.2f}s  max {times[-1]:.2f}s")


if __name__ == "__main__":
    main()
