"""Graph states vs hypergraph states: how often 2^rank_f2(Gamma) matches SR.

For graph states the two agree on every cut.  With higher-degree edges the
bilinear slice alone can over- or under-estimate; this tallies both.

    python3 scripts/graph_state_sweep.py --instances 300 --max-n 8
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from hypercert.anf import cut_decompose
from hypercert.f2 import bilinear_slice, rank_f2
from hypercert.generators import all_bipartitions, random_graph, random_hypergraph
from hypercert.oracle import schmidt_rank


@dataclass(frozen=True)
class SliceSweepConfig:
    instances: int = 300
    max_n: int = 8
    seed: int = 0


def _tally(g, counts: Counter) -> None:
    for cut in all_bipartitions(g.n):
        _, _, f_ab = cut_decompose(g.phase_polynomial(), cut)
        predicted = 2 ** rank_f2(bilinear_slice(f_ab, cut))
        sr = schmidt_rank(g, cut)
        counts["equal" if predicted == sr else "slice high" if predicted > sr else "slice low"] += 1


def run(cfg: SliceSweepConfig) -> int:
    rng = random.Random(cfg.seed)
    graphs: Counter[str] = Counter()
    hyper: Counter[str] = Counter()
    for _ in range(cfg.instances):
        n = rng.randint(2, cfg.max_n)
        _tally(random_graph(rng, n, rng.random()), graphs)
        _tally(random_hypergraph(rng, n, rng.randint(1, 10), 2, 4), hyper)
    for label, counts in (("graph states", graphs), ("hypergraph states", hyper)):
        total = sum(counts.values())
        parts = ", ".join(f"{k}: {v}" for k, v in sorted(counts.items()))
        print(f"{label:18s} {total:6d} cuts  ({parts})")
    return 0 if set(graphs) <= {"equal"} else 1


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--instances", type=int, default=SliceSweepConfig.instances)
    p.add_argument("--max-n", type=int, default=SliceSweepConfig.max_n)
    p.add_argument("--seed", type=int, default=SliceSweepConfig.seed)
    a = p.parse_args()
    return run(SliceSweepConfig(a.instances, a.max_n, a.seed))


if __name__ == "__main__":
    raise SystemExit(main())
