"""Random hypergraphs: compare certified bounds 2^t with the exact Schmidt rank.

    python3 scripts/soundness_sweep.py --instances 2000 --max-n 10
"""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from hypercert.certificate import search_and_verify, verify_certificate
from hypercert.generators import random_cut, random_hypergraph
from hypercert.oracle import schmidt_rank


@dataclass(frozen=True)
class SweepConfig:
    instances: int = 1000
    max_n: int = 10
    max_edges: int = 14
    min_degree: int = 2
    max_degree: int = 4
    restarts: int = 4
    seed: int = 0


def run(cfg: SweepConfig) -> int:
    rng = random.Random(cfg.seed)
    emitted = violations = tight = 0
    gaps: Counter[tuple[int, int]] = Counter()
    start = time.perf_counter()
    for k in range(cfg.instances):
        n = rng.randint(2, cfg.max_n)
        g = random_hypergraph(rng, n, rng.randint(1, cfg.max_edges), cfg.min_degree, cfg.max_degree)
        cut = random_cut(rng, n)
        r_max = min(len(cut.a_vertices), len(cut.b_vertices))
        cert = search_and_verify(g, cut, r_max, cfg.restarts, seed=k)
        if cert is None:
            continue
        emitted += 1
        assert verify_certificate(g, cut, cert)
        sr = schmidt_rank(g, cut)
        gaps[(cert.bound, sr)] += 1
        if cert.bound > sr:
            violations += 1
            print(f"VIOLATION #{k}: bound {cert.bound} > SR {sr}")
        tight += cert.bound == sr
    elapsed = time.perf_counter() - start

    print(f"instances: {cfg.instances}, certificates: {emitted}, violations: {violations}, time: {elapsed:.1f} s")
    if emitted:
        print(f"tight (bound == SR): {tight} ({100 * tight / emitted:.0f}%)")
    print("bound  SR  count")
    for (bound, sr), count in sorted(gaps.items()):
        print(f"{bound:5d} {sr:3d} {count:6d}")
    return 1 if violations else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SweepConfig()
    p.add_argument("--instances", type=int, default=defaults.instances)
    p.add_argument("--max-n", type=int, default=defaults.max_n)
    p.add_argument("--max-edges", type=int, default=defaults.max_edges)
    p.add_argument("--restarts", type=int, default=defaults.restarts)
    p.add_argument("--seed", type=int, default=defaults.seed)
    a = p.parse_args()
    return run(SweepConfig(a.instances, a.max_n, a.max_edges, restarts=a.restarts, seed=a.seed))


if __name__ == "__main__":
    raise SystemExit(main())
