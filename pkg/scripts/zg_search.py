#!/usr/bin/env python3
"""Autonomous search experiment: derive the two right-hand group axioms
from the three left axioms, without the built-in certificates.

Usage: python scripts/zg_search.py [max_steps]
"""

import sys
import time

from opwords.present import builtin_group, builtin_group_Z
from opwords.search import Proved, SearchBudget, Unknown, equivalent


def main():
    max_steps = int(sys.argv[1]) if len(sys.argv) > 1 else 1_000_000
    z = builtin_group_Z()
    y = builtin_group().relations
    for label, (lhs, rhs) in (("right-neutrality", y[2]),
                              ("right-inverse", y[4])):
        t0 = time.monotonic()
        res = equivalent(lhs, rhs, SearchBudget(max_steps=max_steps, seed=0),
                         ctx=z.context())
        dt = time.monotonic() - t0
        if isinstance(res, Proved):
            print(f"{label}: PROVED in {len(res.certificate.steps)} steps "
                  f"({dt:.1f}s)")
        elif isinstance(res, Unknown):
            print(f"{label}: unknown after {res.visited} visited words "
                  f"({dt:.1f}s); the built-in certificate still replays")
        else:
            print(f"{label}: unexpected refutation!?")
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
