#!/usr/bin/env python3
"""Replay every built-in lemma certificate and dump them as text files.

Usage: python scripts/replay_lemmas.py [outdir]
"""

import sys
import time
from pathlib import Path

from opwords.certificate import encode
from opwords.fixtures import lemma_fixtures


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else None
    t0 = time.monotonic()
    for fixture in lemma_fixtures():
        fixture.certificate.replay(fixture.context)
        fixture.certificate.reversed().replay(fixture.context)
        print(f"{fixture.name:20s} {len(fixture.certificate.steps):3d} steps   "
              f"{fixture.statement}")
        if outdir:
            outdir.mkdir(parents=True, exist_ok=True)
            (outdir / f"{fixture.name}.cert").write_text(
                encode(fixture.certificate))
    print(f"all certificates replayed in {time.monotonic() - t0:.1f}s")


if __name__ == "__main__":
    main()
