"""Color lists, colorings, and the enumerations that choosability ranges over."""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .graph import Graph

Coloring = tuple[int, ...]

INTERVAL = "interval"
GENERAL = "general"


class ListFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True, order=True)
class IntervalList:
    """The consecutive colors ``gamma, gamma + 1, ..., mu``."""

    gamma: int
    mu: int

    def __post_init__(self) -> None:
        if self.gamma > self.mu:
            raise ValueError(f"empty interval [{self.gamma}, {self.mu}]")

    @classmethod
    def of_size(cls, gamma: int, k: int) -> IntervalList:
        return cls(gamma, gamma + k - 1)

    @property
    def size(self) -> int:
        return self.mu - self.gamma + 1

    def __contains__(self, x: int) -> bool:
        return self.gamma <= x <= self.mu

    def colors(self) -> tuple[int, ...]:
        return tuple(range(self.gamma, self.mu + 1))

    def truncate(self, k: int) -> IntervalList:
        if k > self.size:
            raise ValueError(f"cannot truncate a size-{self.size} interval to {k}")
        return IntervalList(self.gamma, self.gamma + k - 1)


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex allowed colors, each stored as a sorted tuple.

    ``kind`` is ``"interval"`` when every list is a run of consecutive
    integers, ``"general"`` otherwise.  General colors are non-negative;
    intervals may start anywhere on the integers.
    """

    lists: tuple[tuple[int, ...], ...]
    kind: str = GENERAL

    def __post_init__(self) -> None:
        if self.kind not in (INTERVAL, GENERAL):
            raise ValueError(f"unknown list kind {self.kind!r}")
        normalized = []
        for v, colors in enumerate(self.lists):
            colors = tuple(sorted(set(colors)))
            if not colors:
                raise ValueError(f"vertex {v} has an empty list")
            if self.kind == INTERVAL:
                if colors[-1] - colors[0] + 1 != len(colors):
                    raise ValueError(f"list of vertex {v} is not consecutive: {colors}")
            elif colors[0] < 0:
                raise ValueError(f"vertex {v} has a negative color")
            normalized.append(colors)
        object.__setattr__(self, "lists", tuple(normalized))

    @classmethod
    def general(cls, sets: Iterable[Iterable[int]]) -> ListAssignment:
        return cls(tuple(tuple(s) for s in sets), GENERAL)

    @classmethod
    def from_intervals(cls, intervals: Iterable[IntervalList | tuple[int, int]]) -> ListAssignment:
        lists = []
        for iv in intervals:
            gamma, mu = (iv.gamma, iv.mu) if isinstance(iv, IntervalList) else iv
            lists.append(tuple(range(gamma, IntervalList(gamma, mu).mu + 1)))
        return cls(tuple(lists), INTERVAL)

    @classmethod
    def uniform(cls, n: int, colors: Iterable[int]) -> ListAssignment:
        colors = tuple(colors)
        consecutive = bool(colors) and max(colors) - min(colors) + 1 == len(set(colors))
        return cls((colors,) * n, INTERVAL if consecutive else GENERAL)

    @property
    def n(self) -> int:
        return len(self.lists)

    @property
    def intervals(self) -> tuple[IntervalList, ...]:
        if self.kind != INTERVAL:
            raise ValueError("general list assignment has no interval form")
        return tuple(IntervalList(c[0], c[-1]) for c in self.lists)

    @property
    def min_size(self) -> int:
        return min((len(c) for c in self.lists), default=0)

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.lists[v]

    def __len__(self) -> int:
        return len(self.lists)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.lists)

    def truncate(self, k: int) -> ListAssignment:
        """Keep the ``k`` smallest colors of every list."""
        if any(len(c) < k for c in self.lists):
            raise ValueError(f"some list has fewer than {k} colors")
        return ListAssignment(tuple(c[:k] for c in self.lists), self.kind)

    def relabel(self, mapping: dict[int, int] | Sequence[int]) -> ListAssignment:
        lists = tuple(tuple(mapping[c] for c in colors) for colors in self.lists)
        return ListAssignment(lists, GENERAL)


# Checks


def is_proper(graph: Graph, coloring: Sequence[int]) -> bool:
    if len(coloring) != graph.n:
        raise ValueError(f"coloring covers {len(coloring)} vertices, graph has {graph.n}")
    return all(coloring[u] != coloring[v] for u, v in graph.edges)


def respects_lists(coloring: Sequence[int], lists: ListAssignment) -> bool:
    if len(coloring) != lists.n:
        raise ValueError(f"coloring covers {len(coloring)} vertices, lists cover {lists.n}")
    return all(c in allowed for c, allowed in zip(coloring, lists.lists))


# Enumeration: interval lists


def default_offset_bound(n: int, k: int) -> int:
    return k * max(n - 1, 0)


def interval_gamma_vectors(n: int, bound: int) -> Iterator[tuple[int, ...]]:
    """Lower bounds in ``0..bound`` with minimum 0, in lexicographic order."""
    for gammas in itertools.product(range(bound + 1), repeat=n):
        if n == 0 or min(gammas) == 0:
            yield gammas


def enumerate_interval_assignments(
    n: int, k: int, offset_bound: int | None = None
) -> Iterator[ListAssignment]:
    """Normalized size-``k`` interval assignments ``v -> [g_v, g_v + k - 1]``.

    Shifting every interval by the same amount relabels colors, so only
    vectors with ``min g_v == 0`` are produced.
    """
    if k < 1:
        raise ValueError("list size must be positive")
    bound = default_offset_bound(n, k) if offset_bound is None else offset_bound
    if bound < 0:
        raise ValueError("offset bound must be non-negative")
    for gammas in interval_gamma_vectors(n, bound):
        yield ListAssignment(tuple(tuple(range(g, g + k)) for g in gammas), INTERVAL)


def count_interval_assignments(n: int, k: int, offset_bound: int | None = None) -> int:
    bound = default_offset_bound(n, k) if offset_bound is None else offset_bound
    if n == 0:
        return 1
    return (bound + 1) ** n - bound**n


@lru_cache(maxsize=8)
def compressed_gamma_vectors(n: int, k: int, bound: int) -> np.ndarray:
    """Normalized lower-bound vectors whose distinct values are at most k apart.

    Two size-k intervals can only share colors when their lower bounds
    differ by less than k, so widening any gap of k or more between
    consecutive distinct values never changes which list colorings exist.
    Every normalized vector therefore behaves like the vector obtained by
    shrinking such gaps to exactly k, which is also the lexicographically
    least vector behaving that way.

    Returns a read-only ``(count, n)`` array of those vectors in lex order.
    """
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    parts = []
    for r in range(1, n + 1):
        # vertex -> level index, onto r levels
        maps = np.indices((r,) * n).reshape(n, -1).T
        onto = np.ones(len(maps), dtype=bool)
        for j in range(r):
            onto &= (maps == j).any(axis=1)
        maps = maps[onto]
        gaps = np.array(list(itertools.product(range(1, k + 1), repeat=r - 1)), dtype=np.int64)
        levels = np.zeros((len(gaps), r), dtype=np.int64)
        levels[:, 1:] = np.cumsum(gaps.reshape(len(gaps), r - 1), axis=1)
        levels = levels[levels[:, -1] <= bound]
        parts.append(levels[:, maps].reshape(-1, n))
    vectors = np.concatenate(parts)
    vectors = vectors[np.lexsort(vectors.T[::-1])]
    vectors.flags.writeable = False
    return vectors


def compress_gammas(gammas: Sequence[int], k: int) -> tuple[int, ...]:
    """Shift to minimum 0 and shrink every gap of k or more between levels to k."""
    levels = sorted(set(gammas))
    new, last = {}, None
    for g in levels:
        new[g] = 0 if last is None else new[last] + min(g - last, k)
        last = g
    return tuple(new[g] for g in gammas)


def compressed_class_count(n: int, k: int) -> int:
    """Number of vectors :func:`compressed_gamma_vectors` yields at the default bound."""
    # ordered partitions of the vertices into r levels, r - 1 gaps in 1..k
    @lru_cache(maxsize=None)
    def stirling(m: int, r: int) -> int:
        if m == r:
            return 1
        if r == 0 or r > m:
            return 0
        return r * stirling(m - 1, r) + stirling(m - 1, r - 1)

    if n == 0:
        return 1
    return sum(stirling(n, r) * factorial(r) * k ** (r - 1) for r in range(1, n + 1))


def interval_rank(gammas: Sequence[int], bound: int) -> int:
    """Position of ``gammas`` in the normalized lexicographic enumeration."""
    n, rank, has_zero = len(gammas), 0, False
    for i, g in enumerate(gammas):
        rest = n - i - 1
        for x in range(g):
            if has_zero or x == 0:
                rank += (bound + 1) ** rest
            else:
                rank += (bound + 1) ** rest - bound**rest
        has_zero = has_zero or g == 0
    return rank


# Enumeration: general lists up to color renaming
#
# A labeling is canonical when the vertex-ordered tuple of sorted lists is
# lexicographically least among all color renamings.  Reading the vertices
# in order and splitting each block of interchangeable labels into
# "in the current list" followed by "not in it" yields that least renaming
# directly, so canonical assignments are generated by choosing, per block,
# how many of its leading labels the next list takes.


def canonical_children(
    blocks: tuple[int, ...], k: int, budget: int
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Canonical next lists given the current label blocks, in lex order.

    ``blocks`` are the sizes of consecutive label ranges starting at 1.
    Returns ``(list, refined_blocks)`` pairs.
    """
    used = sum(blocks)
    starts = [1 + sum(blocks[:j]) for j in range(len(blocks))]
    out = []

    def rec(j: int, rem: int, taken: list[int], refined: list[int]) -> None:
        if j == len(blocks):
            if used + rem > budget:
                return
            colors = taken + list(range(used + 1, used + rem + 1))
            new_blocks = refined + ([rem] if rem else [])
            out.append((tuple(colors), tuple(new_blocks)))
            return
        size = blocks[j]
        for c in range(min(size, rem) + 1):
            parts = [p for p in (c, size - c) if p]
            rec(j + 1, rem - c, taken + list(range(starts[j], starts[j] + c)), refined + parts)

    rec(0, k, [], [])
    out.sort()
    return tuple(out)


def canonical_list_assignments(
    n: int, k: int, color_budget: int | None = None
) -> Iterator[ListAssignment]:
    """Size-``k`` lists over colors ``1..color_budget``, one per renaming class."""
    if k < 1:
        raise ValueError("list size must be positive")
    budget = n * k if color_budget is None else color_budget
    if budget < k and n > 0:
        raise ValueError("color budget must be at least the list size")

    def rec(i: int, blocks: tuple[int, ...], prefix: tuple[tuple[int, ...], ...]):
        if i == n:
            yield ListAssignment(prefix, GENERAL)
            return
        for colors, refined in canonical_children(blocks, k, budget):
            yield from rec(i + 1, refined, prefix + (colors,))

    yield from rec(0, (), ())


def canonicalize(lists: ListAssignment) -> ListAssignment:
    """Least color renaming of ``lists`` onto ``1, 2, ...``."""
    blocks: list[list[int]] = []
    for colors in lists.lists:
        chosen = set(colors)
        refined = []
        for block in blocks:
            inside = [c for c in block if c in chosen]
            outside = [c for c in block if c not in chosen]
            refined.extend(b for b in (inside, outside) if b)
        seen = {c for block in blocks for c in block}
        fresh = sorted(c for c in colors if c not in seen)
        if fresh:
            refined.append(fresh)
        blocks = refined
    label = {}
    for block in blocks:
        for c in block:
            label[c] = len(label) + 1
    # colors within a block are interchangeable, so any order inside it is fine
    return ListAssignment(tuple(tuple(sorted(label[c] for c in colors)) for colors in lists.lists))


def palette_assignments(n: int, k: int) -> Iterator[ListAssignment]:
    """Every n-tuple (with repetition) of k-subsets of ``{1..n}``."""
    subsets = list(itertools.combinations(range(1, n + 1), k))
    for choice in itertools.product(subsets, repeat=n):
        yield ListAssignment(choice, GENERAL)


# Text format


def format_lists(lists: ListAssignment) -> str:
    lines = [f"lists {lists.kind}"]
    if lists.kind == INTERVAL:
        lines.extend(f"{v} {iv.gamma} {iv.mu}" for v, iv in enumerate(lists.intervals))
    else:
        lines.extend(f"{v} : " + " ".join(map(str, c)) for v, c in enumerate(lists.lists))
    return "\n".join(lines) + "\n"


def parse_lists(text: str, n: int | None = None) -> ListAssignment:
    """Read the list-assignment text format.

    ``lists interval`` is followed by ``<v> <gamma> <mu>`` lines,
    ``lists general`` by ``<v> : <c1> <c2> ...`` lines.  Lines starting
    with ``#`` are comments.  If ``n`` is given every vertex must appear.
    """
    kind = None
    entries: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if kind is None:
            if len(tokens) != 2 or tokens[0] != "lists" or tokens[1] not in (INTERVAL, GENERAL):
                raise ListFormatError("expected header 'lists interval' or 'lists general'", lineno)
            kind = tokens[1]
            continue
        try:
            v = int(tokens[0])
            if kind == INTERVAL:
                if len(tokens) != 3:
                    raise ListFormatError("expected '<v> <gamma> <mu>'", lineno)
                gamma, mu = int(tokens[1]), int(tokens[2])
                if gamma > mu:
                    raise ListFormatError(f"gamma {gamma} exceeds mu {mu}", lineno)
                colors = tuple(range(gamma, mu + 1))
            else:
                if len(tokens) < 3 or tokens[1] != ":":
                    raise ListFormatError("expected '<v> : <c1> <c2> ...'", lineno)
                colors = tuple(int(t) for t in tokens[2:])
                if min(colors) < 0:
                    raise ListFormatError("colors must be non-negative", lineno)
        except ValueError as exc:
            if isinstance(exc, ListFormatError):
                raise
            raise ListFormatError(f"malformed integer in {line!r}", lineno) from None
        if v < 0 or (n is not None and v >= n):
            raise ListFormatError(f"vertex {v} out of range", lineno)
        if v in entries:
            raise ListFormatError(f"vertex {v} listed twice", lineno)
        entries[v] = colors
    if kind is None:
        raise ListFormatError("missing 'lists' header")
    size = n if n is not None else (max(entries) + 1 if entries else 0)
    missing = [v for v in range(size) if v not in entries]
    if missing:
        raise ListFormatError(f"no list for vertex {missing[0]}")
    return ListAssignment(tuple(entries[v] for v in range(size)), kind)
