"""Compare choosability over the palette {1..n} with the full canonical space.

    python scripts/palette_comparison.py [--max-n 4] [--max-k 2]

Restricting every list to colors 1..n could in principle miss a bad
assignment that needs more colors.  This reports every graph where the
two verdicts differ.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from choosa.choosability import is_k_choosable
from choosa.graph import enumerate_graphs, write_dimacs


@dataclass(frozen=True)
class PaletteConfig:
    max_n: int = 4
    max_k: int = 2


def compare(cfg: PaletteConfig) -> list[tuple[int, int, str]]:
    differences = []
    for n in range(1, cfg.max_n + 1):
        for k in range(1, cfg.max_k + 1):
            checked = 0
            for g in enumerate_graphs(n):
                palette = is_k_choosable(g, k, paper_palette=True, force=True)
                canonical = is_k_choosable(g, k, force=True)
                checked += 1
                if palette.answer != canonical.answer:
                    differences.append((n, k, write_dimacs(g)))
            print(f"n={n} k={k}: {checked} graphs compared")
    return differences


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--max-k", type=int, default=2)
    args = parser.parse_args()
    diffs = compare(PaletteConfig(args.max_n, args.max_k))
    for n, k, text in diffs:
        print(f"# differs at n={n} k={k}\n{text}")
    print(f"{len(diffs)} disagreement(s)")


if __name__ == "__main__":
    main()
