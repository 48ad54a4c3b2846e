"""Compare the enumerated interval choice number with the chromatic number.

    python scripts/interval_vs_chromatic.py [--max-n 5] [--strategy auto]

Walks every labeled graph up to ``--max-n`` vertices and reports, per
order, how many graphs were checked, how many disagreed and the time.
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from choosa.choosability import is_k_gamma_mu_choosable
from choosa.graph import enumerate_graphs
from choosa.solvers import chromatic_number


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 5
    strategy: str = "auto"


def interval_choice(graph, strategy: str) -> int:
    k = 1
    while not is_k_gamma_mu_choosable(graph, k, strategy=strategy, force=True).answer:
        k += 1
    return k


def sweep(cfg: SweepConfig) -> int:
    disagreements = 0
    print(f"{'n':>2} {'graphs':>7} {'bad':>4} {'secs':>8}  chi histogram")
    for n in range(1, cfg.max_n + 1):
        start = time.perf_counter()
        hist: Counter[int] = Counter()
        bad = total = 0
        for g in enumerate_graphs(n):
            chi = chromatic_number(g)[0]
            hist[chi] += 1
            bad += interval_choice(g, cfg.strategy) != chi
            total += 1
        disagreements += bad
        shown = " ".join(f"{k}:{hist[k]}" for k in sorted(hist))
        print(f"{n:>2} {total:>7} {bad:>4} {time.perf_counter() - start:>8.2f}  {shown}")
    return disagreements


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--strategy", choices=("auto", "compressed", "memo", "exhaustive"), default="auto")
    args = parser.parse_args()
    bad = sweep(SweepConfig(args.max_n, args.strategy))
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
