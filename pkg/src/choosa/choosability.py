"""k-choosability and k-(gamma, mu)-choosability with counterexample witnesses.

Two strategies decide the same question over the same ordered space of
list assignments:

``"exhaustive"``
    Walk the assignment stream and run :func:`exists_list_coloring` on each
    assignment, stopping at the first uncolorable one.

``"memo"`` (default)
    Assign lists vertex by vertex and carry, instead of the lists
    themselves, the set of colorings of the already-listed vertices
    restricted to those that still have unlisted neighbours.  Whether a
    completion can fail, and how many completions there are, depend only
    on that set plus the enumeration context, so both are memoized.  The
    first failing assignment is then recovered by a lexicographic descent.

Both report the same verdict, witness and ``checked_count``.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Hashable, Iterator

import numpy as np

from .graph import Graph, degeneracy_ordering
from .lists import (
    GENERAL,
    INTERVAL,
    ListAssignment,
    canonical_children,
    canonical_list_assignments,
    compressed_class_count,
    compressed_gamma_vectors,
    count_interval_assignments,
    default_offset_bound,
    enumerate_interval_assignments,
    format_lists,
    interval_rank,
    palette_assignments,
)
from .solvers import chromatic_number, exists_list_coloring, first_list_coloring

DEFAULT_CAP = 10**8
COMPRESSED_LIMIT = 3_000_000
PAPER_PALETTE = "paper-palette"


def default_cap() -> int:
    value = os.environ.get("CHOOSA_CAP")
    return int(value) if value else DEFAULT_CAP


class EnumerationCapExceeded(RuntimeError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"enumeration of {size} list assignments exceeds the cap of {cap}")


@dataclass(frozen=True)
class ChoosabilityVerdict:
    answer: bool
    k: int
    mode: str
    checked_count: int
    witness: ListAssignment | None = None

    def report(self) -> str:
        lines = [
            f"answer: {'YES' if self.answer else 'NO'}",
            f"mode: {self.mode}",
            f"k: {self.k}",
            f"checked_count: {self.checked_count}",
        ]
        if self.witness is not None:
            lines.append("witness:")
            lines.append(format_lists(self.witness).rstrip("\n"))
        return "\n".join(lines) + "\n"


# Search spaces.  A space yields, for a vertex position and a hashable
# context, the ordered candidate lists for that vertex and the context
# after choosing each.


@dataclass(frozen=True)
class _Space:
    root: Hashable
    children: Callable[[int, Hashable], list[tuple[tuple[int, ...], Hashable]]]
    accepts: Callable[[Hashable], bool]
    kind: str


def _interval_space(k: int, bound: int) -> _Space:
    options = [tuple(range(g, g + k)) for g in range(bound + 1)]

    def children(i: int, zero_seen: bool):
        return [(colors, zero_seen or colors[0] == 0) for colors in options]

    return _Space(False, children, bool, INTERVAL)


def _canonical_space(k: int, budget: int) -> _Space:
    cached = lru_cache(maxsize=None)(lambda blocks: canonical_children(blocks, k, budget))
    return _Space((), lambda i, blocks: cached(blocks), lambda _: True, GENERAL)


def _palette_space(n: int, k: int) -> _Space:
    options = [(c, None) for c in combinations(range(1, n + 1), k)]
    return _Space(None, lambda i, _: options, lambda _: True, GENERAL)


class _FrontierSearch:
    """Memoized forall-exists search over one graph and one search space."""

    def __init__(self, graph: Graph, space: _Space):
        self.graph = graph
        self.space = space
        n = graph.n
        last = [max((u for u in graph.adjacency[v]), default=-1) for v in range(n)]
        # frontier[i]: listed vertices (< i) with a neighbour >= i
        self.frontier = [tuple(u for u in range(i) if last[u] >= i) for i in range(n + 1)]
        self.steps = []
        for i in range(n):
            front = self.frontier[i]
            back = tuple(front.index(u) for u in sorted(graph.adjacency[i]) if u < i)
            ext = front + (i,)
            keep = tuple(ext.index(u) for u in self.frontier[i + 1])
            self.steps.append((back, keep))
        self._fails: dict = {}
        self._count: dict = {}

    def count(self, i: int, ctx: Hashable) -> int:
        key = (i, ctx)
        hit = self._count.get(key)
        if hit is None:
            if i == self.graph.n:
                hit = int(self.space.accepts(ctx))
            else:
                hit = sum(self.count(i + 1, nxt) for _, nxt in self.space.children(i, ctx))
            self._count[key] = hit
        return hit

    def advance(self, i: int, phi: frozenset, colors: tuple[int, ...]) -> frozenset:
        back, keep = self.steps[i]
        out = set()
        for partial in phi:
            blocked = {partial[p] for p in back}
            for c in colors:
                if c not in blocked:
                    ext = partial + (c,)
                    out.add(tuple(ext[p] for p in keep))
        return frozenset(out)

    def fails(self, i: int, ctx: Hashable, phi: frozenset) -> bool:
        """Whether some completion from this state admits no list coloring."""
        if not phi:
            return self.count(i, ctx) > 0
        if i == self.graph.n:
            return False
        key = (i, ctx, phi)
        hit = self._fails.get(key)
        if hit is None:
            hit = any(
                self.fails(i + 1, nxt, self.advance(i, phi, colors))
                for colors, nxt in self.space.children(i, ctx)
            )
            self._fails[key] = hit
        return hit

    def first_failure(self) -> tuple[bool, int, ListAssignment | None]:
        """(answer, checked_count, witness) in enumeration order."""
        ctx, phi = self.space.root, frozenset({()})
        if not self.fails(0, ctx, phi):
            return True, self.count(0, ctx), None
        checked, chosen = 0, []
        for i in range(self.graph.n):
            for colors, nxt in self.space.children(i, ctx):
                nphi = self.advance(i, phi, colors)
                if self.fails(i + 1, nxt, nphi):
                    chosen.append(colors)
                    ctx, phi = nxt, nphi
                    break
                checked += self.count(i + 1, nxt)
        return False, checked + 1, ListAssignment(tuple(chosen), self.space.kind)


def _decide(
    graph: Graph,
    k: int,
    space: _Space,
    stream: Callable[[], Iterator[ListAssignment]],
    mode: str,
    size: int,
    cap: int | None,
    force: bool,
    strategy: str,
) -> ChoosabilityVerdict:
    cap = default_cap() if cap is None else cap
    if size > cap and not force:
        raise EnumerationCapExceeded(size, cap)
    if strategy == "memo":
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 10 * graph.n + 1000))
        try:
            answer, checked, witness = _FrontierSearch(graph, space).first_failure()
        finally:
            sys.setrecursionlimit(limit)
        return ChoosabilityVerdict(answer, k, mode, checked, witness)
    if strategy != "exhaustive":
        raise ValueError(f"unknown strategy {strategy!r}")
    checked = 0
    for lists in stream():
        checked += 1
        if exists_list_coloring(graph, lists) is None:
            return ChoosabilityVerdict(False, k, mode, checked, lists)
    return ChoosabilityVerdict(True, k, mode, checked, None)


def canonical_assignment_count(n: int, k: int, color_budget: int | None = None) -> int:
    budget = n * k if color_budget is None else color_budget

    @lru_cache(maxsize=None)
    def count(i: int, blocks: tuple[int, ...]) -> int:
        if i == n:
            return 1
        return sum(count(i + 1, nxt) for _, nxt in canonical_children(blocks, k, budget))

    return count(0, ())


def is_k_choosable(
    graph: Graph,
    k: int,
    color_budget: int | None = None,
    *,
    paper_palette: bool = False,
    cap: int | None = None,
    force: bool = False,
    strategy: str = "memo",
) -> ChoosabilityVerdict:
    """Does every assignment of k-element lists admit a proper list coloring?

    Lists range over colors ``1..color_budget`` (default ``n * k``), one
    assignment per color-renaming class.  With ``paper_palette`` every
    n-tuple of k-subsets of ``{1..n}`` is tried instead, without
    deduplication.  A "no" carries the first failing assignment.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = graph.n
    if paper_palette:
        if k > n:
            # no k-subset of {1..n}: the quantifier ranges over nothing
            return ChoosabilityVerdict(True, k, PAPER_PALETTE, 0, None)
        size = comb(n, k) ** n
        return _decide(
            graph, k, _palette_space(n, k), lambda: palette_assignments(n, k),
            PAPER_PALETTE, size, cap, force, strategy,
        )
    budget = n * k if color_budget is None else color_budget
    if budget < k:
        raise ValueError("color budget must be at least k")
    size = canonical_assignment_count(n, k, budget)
    return _decide(
        graph, k, _canonical_space(k, budget),
        lambda: canonical_list_assignments(n, k, budget),
        GENERAL, size, cap, force, strategy,
    )


def is_k_gamma_mu_choosable(
    graph: Graph,
    k: int,
    offset_bound: int | None = None,
    *,
    cap: int | None = None,
    force: bool = False,
    strategy: str = "auto",
) -> ChoosabilityVerdict:
    """Does every assignment of size-k interval lists admit a list coloring?

    Besides ``"memo"`` and ``"exhaustive"``, ``strategy`` accepts
    ``"compressed"``: only the lexicographically least member of each
    class of :func:`~choosa.lists.compressed_gamma_vectors` is solved,
    which is exact because membership in a class fixes colorability.
    ``"auto"`` uses it when there are at most ``COMPRESSED_LIMIT`` classes.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = graph.n
    bound = default_offset_bound(n, k) if offset_bound is None else offset_bound
    size = count_interval_assignments(n, k, bound)
    if strategy == "auto":
        strategy = "compressed" if compressed_class_count(n, k) <= COMPRESSED_LIMIT else "memo"
    if strategy == "compressed":
        cap = default_cap() if cap is None else cap
        if size > cap and not force:
            raise EnumerationCapExceeded(size, cap)
        reps = compressed_gamma_vectors(n, k, bound)
        edges = graph.sorted_edges()
        if edges and len(reps):
            u, v = np.array(edges).T
            # colorability depends only on the lower-bound differences along edges
            diffs = np.clip(reps[:, v] - reps[:, u], -k, k) + k
            if (2 * k + 1) ** len(edges) < 2**62:
                keys = diffs @ (2 * k + 1) ** np.arange(len(edges), dtype=np.int64)
                _, first = np.unique(keys, return_index=True)
            else:
                _, first = np.unique(diffs, axis=0, return_index=True)
            adjacency = graph.adjacency
            for i in np.sort(first):
                gammas = reps[i].tolist()
                rows = [range(g, g + k) for g in gammas]
                if first_list_coloring(adjacency, rows) is None:
                    lists = ListAssignment(tuple(tuple(r) for r in rows), INTERVAL)
                    return ChoosabilityVerdict(
                        False, k, INTERVAL, interval_rank(gammas, bound) + 1, lists
                    )
        return ChoosabilityVerdict(True, k, INTERVAL, size, None)
    return _decide(
        graph, k, _interval_space(k, bound),
        lambda: enumerate_interval_assignments(n, k, bound),
        INTERVAL, size, cap, force, strategy,
    )


def choice_number(graph: Graph, k_max: int | None = None, **kwargs) -> int | None:
    """Least k for which ``graph`` is k-choosable, searching up to ``k_max``.

    ``k_max`` defaults to degeneracy + 1, which always suffices.  Returns
    ``None`` if no k up to ``k_max`` works.
    """
    if graph.n == 0:
        return 0
    if k_max is None:
        k_max = degeneracy_ordering(graph).degeneracy + 1
    for k in range(1, k_max + 1):
        if is_k_choosable(graph, k, **kwargs).answer:
            return k
    return None


def gamma_mu_choice_number(graph: Graph, fast: bool = False, **kwargs) -> int:
    """Least k for which every size-k interval assignment is colorable.

    ``fast`` returns the chromatic number instead: a proper k-coloring
    turns into a coloring from any size-k intervals by residues mod k, and
    identical intervals need k colors, so the two always coincide.
    """
    if graph.n == 0:
        return 0
    if fast:
        return chromatic_number(graph)[0]
    upper = degeneracy_ordering(graph).degeneracy + 1
    for k in range(1, upper + 1):
        if is_k_gamma_mu_choosable(graph, k, **kwargs).answer:
            return k
    raise AssertionError("degeneracy + 1 interval colors always suffice")
