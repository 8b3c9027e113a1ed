"""Linear resolutions and N_{2,p} over every labeled graph on n vertices.

For each graph the oracle's table is compared with the chordality of the
complement and with n2p_max.  Prints a histogram of p values.
"""

from __future__ import annotations

import argparse
import json
import math
import time
from collections import Counter
from dataclasses import dataclass

from bettisplit.betti import n2p_max
from bettisplit.corpus import labeled_graphs
from bettisplit.graph import complement, is_chordal
from bettisplit.ideal import edge_ideal
from bettisplit.oracle import QQ, betti_oracle, calibrate


@dataclass
class SweepConfig:
    n: int = 6


def oracle_p(t) -> float:
    bad = [i for i, j in t.nonzero() if j > i + 2]
    return min(bad) if bad else math.inf


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6)
    cfg = SweepConfig(**vars(ap.parse_args()))
    calibrate(QQ)
    start = time.perf_counter()
    hist, disagreements, total = Counter(), [], 0
    for G in labeled_graphs(cfg.n, min_edges=1):
        total += 1
        t = betti_oracle(edge_ideal(G))
        p = oracle_p(t)
        if t.has_linear_resolution(2) != is_chordal(complement(G)) or n2p_max(G) != p:
            disagreements.append(G.edges())
        hist["linear" if p == math.inf else p] += 1
    print(json.dumps({"n": cfg.n, "graphs": total, "disagreements": disagreements[:10],
                      "p_histogram": {str(k): v for k, v in sorted(hist.items(), key=str)},
                      "seconds": round(time.perf_counter() - start, 1)}))


if __name__ == "__main__":
    main()
