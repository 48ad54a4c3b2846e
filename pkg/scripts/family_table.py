"""Tabulate chromatic number, interval choice number and choice number by family.

    python scripts/family_table.py [--seed 0] [--skip-choice]

Choice numbers of dense or larger graphs are slow; ``--skip-choice``
leaves that column out.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from choosa.choosability import choice_number, gamma_mu_choice_number
from choosa.graph import (
    Graph,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_maximal_outerplanar,
    gen_random_tree,
)
from choosa.solvers import chromatic_number


@dataclass(frozen=True)
class TableConfig:
    seed: int = 0
    tree_sizes: tuple[int, ...] = (4, 6, 7)
    cycle_sizes: tuple[int, ...] = (4, 5, 6, 7)
    outerplanar_sizes: tuple[int, ...] = (5, 6)
    with_choice: bool = True


def family_rows(cfg: TableConfig) -> list[tuple[str, Graph]]:
    rows = [(f"tree T{n}", gen_random_tree(n, cfg.seed + n)) for n in cfg.tree_sizes]
    rows += [(f"cycle C{n}", gen_cycle(n)) for n in cfg.cycle_sizes]
    rows += [("bipartite K2,2", gen_complete_bipartite(2, 2)), ("bipartite K2,4", gen_complete_bipartite(2, 4))]
    rows += [(f"outerplanar n={n}", gen_maximal_outerplanar(n, cfg.seed + n)) for n in cfg.outerplanar_sizes]
    rows.append(("planar K4", gen_complete(4)))
    return rows


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--skip-choice", action="store_true")
    args = parser.parse_args()
    cfg = TableConfig(seed=args.seed, with_choice=not args.skip_choice)

    print(f"{'graph':<20} {'n':>3} {'m':>3} {'chi':>4} {'gm':>4} {'ch':>4} {'secs':>7}")
    for name, g in family_rows(cfg):
        start = time.perf_counter()
        chi = chromatic_number(g)[0]
        gm = gamma_mu_choice_number(g, force=True)
        ch = choice_number(g, force=True) if cfg.with_choice else "-"
        print(f"{name:<20} {g.n:>3} {g.m:>3} {chi:>4} {gm:>4} {ch!s:>4} {time.perf_counter() - start:>7.2f}")


if __name__ == "__main__":
    main()
