"""Constructive colorings: residues mod k, distinct representatives, K_{n,n}."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, gen_complete_bipartite
from .lists import (
    INTERVAL,
    Coloring,
    IntervalList,
    ListAssignment,
    is_proper,
    respects_lists,
)


class ConstructionError(RuntimeError):
    """An invariant the construction relies on did not hold."""


@dataclass(frozen=True)
class ResidueClasses:
    """The k classes of integers modulo ``modulus``."""

    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be positive")

    def class_of(self, x: int) -> int:
        return x % self.modulus

    def contains(self, r: int, x: int) -> bool:
        return x % self.modulus == r

    def representative(self, interval: IntervalList, r: int) -> int:
        """The element of ``interval`` in class ``r``; unique when its size is the modulus."""
        if interval.size < self.modulus:
            raise ValueError(f"interval of size {interval.size} misses some residue mod {self.modulus}")
        return interval.gamma + (r - interval.gamma) % self.modulus


@dataclass(frozen=True)
class SetFamily:
    sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        sets = tuple(frozenset(s) for s in self.sets)
        if any(not s for s in sets):
            raise ValueError("every set in the family must be nonempty")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]]) -> SetFamily:
        return cls(tuple(frozenset(s) for s in sets))

    def __len__(self) -> int:
        return len(self.sets)


def _verified(graph: Graph, f: Coloring, lists: ListAssignment) -> Coloring:
    if not is_proper(graph, f):
        raise ConstructionError(f"constructed coloring {f} is not proper")
    if not respects_lists(f, lists):
        raise ConstructionError(f"constructed coloring {f} leaves some list")
    return f


def residue_coloring(
    graph: Graph, base: Sequence[int], lists: ListAssignment, k: int | None = None
) -> Coloring:
    """Turn a proper k-coloring into a coloring from interval lists.

    Vertex ``v`` gets the element of the first ``k`` colors of its
    interval that is congruent to ``base[v]`` mod ``k``.  Adjacent vertices
    have different base colors, hence different residues, hence different
    final colors.  ``k`` defaults to ``max(base) + 1``.
    """
    base = tuple(base)
    if len(base) != graph.n:
        raise ValueError("base coloring does not cover the graph")
    if lists.n != graph.n:
        raise ValueError("lists do not cover the graph")
    if k is None:
        k = max(base, default=-1) + 1 or 1
    if any(not 0 <= c < k for c in base):
        raise ValueError(f"base coloring must use colors 0..{k - 1}")
    if not is_proper(graph, base):
        raise ValueError("base coloring is not proper")
    if lists.kind != INTERVAL:
        raise ValueError("residue coloring needs interval lists")
    if lists.min_size < k:
        raise ValueError(f"every interval needs at least {k} colors")
    classes = ResidueClasses(k)
    f = tuple(
        classes.representative(iv.truncate(k), c) for iv, c in zip(lists.intervals, base)
    )
    return _verified(graph, f, lists)


# Distinct representatives


def _max_matching(family: SetFamily) -> dict[int, int]:
    """Augmenting-path matching from set indices to elements."""
    owner: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for x in sorted(family.sets[i]):
            if x in seen:
                continue
            seen.add(x)
            if x not in owner or augment(owner[x], seen):
                owner[x] = i
                return True
        return False

    for i in range(len(family)):
        augment(i, set())
    return {i: x for x, i in owner.items()}


def find_sdr(family: SetFamily) -> tuple[int, ...] | None:
    """Distinct ``x_i in S_i`` for every set, or ``None`` if none exist."""
    matched = _max_matching(family)
    if len(matched) < len(family):
        return None
    return tuple(matched[i] for i in range(len(family)))


def hall_violator(family: SetFamily) -> frozenset[int] | None:
    """Indices ``I`` (0-based) whose union has fewer than ``|I|`` elements.

    Taken from an unmatched set of a maximum matching: the sets reachable
    from it by alternating paths cover only elements matched back into
    the same collection.  ``None`` exactly when an SDR exists.
    """
    matched = _max_matching(family)
    free = [i for i in range(len(family)) if i not in matched]
    if not free:
        return None
    owner = {x: i for i, x in matched.items()}
    reached, stack = {free[0]}, [free[0]]
    while stack:
        i = stack.pop()
        for x in family.sets[i]:
            j = owner.get(x)
            if j is None:
                raise ConstructionError("maximum matching admits an augmenting path")
            if j not in reached:
                reached.add(j)
                stack.append(j)
    return frozenset(reached)


# K_{n,n} with size-2 intervals.  Vertices 0..n-1 are v_1..v_n, n..2n-1 are w_1..w_n.


def _as_interval(iv: IntervalList | tuple[int, int]) -> IntervalList:
    return iv if isinstance(iv, IntervalList) else IntervalList(*iv)


def _require_pairs(lists: Sequence[IntervalList]) -> None:
    for iv in lists:
        if iv.size != 2:
            raise ValueError(f"expected size-2 intervals, got [{iv.gamma}, {iv.mu}]")


def knn_lemma1_coloring(n: int, shared_lists: Sequence[IntervalList | tuple[int, int]]) -> Coloring:
    """Color K_{n,n} when ``v_i`` and ``w_i`` share list ``i`` and lists are distinct.

    Lists are visited by increasing lower bound.  The first gives ``v`` its
    lower color and ``w`` the upper one; whenever a list starts right after
    the previous one, ``v`` switches to the opposite end so it avoids the
    color the previous ``w`` took (and vice versa); after a gap the pattern
    restarts with ``v`` low.
    """
    lists = [_as_interval(iv) for iv in shared_lists]
    if len(lists) != n or n < 1:
        raise ValueError(f"expected {n} lists")
    _require_pairs(lists)
    if len(set(lists)) != n:
        raise ValueError("shared lists must be pairwise distinct")
    colors = [0] * (2 * n)
    prev_gamma, prev_low = None, False
    for i in sorted(range(n), key=lambda i: lists[i].gamma):
        g = lists[i].gamma
        v_low = not prev_low if prev_gamma == g - 1 else True
        colors[i], colors[n + i] = (g, g + 1) if v_low else (g + 1, g)
        prev_gamma, prev_low = g, v_low
    graph = gen_complete_bipartite(n, n)
    return _verified(graph, tuple(colors), ListAssignment.from_intervals(lists + lists))


def knn_lemma2_coloring(
    n: int,
    lists_v: Sequence[IntervalList | tuple[int, int]],
    lists_w: Sequence[IntervalList | tuple[int, int]],
) -> Coloring:
    """Color K_{n,n} when no list on one side appears on the other.

    The distinct lists form a family of distinct size-2 intervals, any two
    of which meet in at most one color, so a system of distinct
    representatives exists; each vertex takes its list's representative.
    """
    lv = [_as_interval(iv) for iv in lists_v]
    lw = [_as_interval(iv) for iv in lists_w]
    if len(lv) != n or len(lw) != n or n < 1:
        raise ValueError(f"expected {n} lists per side")
    _require_pairs(lv + lw)
    if set(lv) & set(lw):
        raise ValueError("no list may appear on both sides")
    distinct = list(dict.fromkeys(lv + lw))
    family = SetFamily.of(iv.colors() for iv in distinct)
    for a in range(len(family)):
        for b in range(a + 1, len(family)):
            if len(family.sets[a] & family.sets[b]) > 1:
                raise ConstructionError("distinct size-2 intervals share two colors")
    sdr = find_sdr(family)
    if sdr is None:
        raise ConstructionError("no distinct representatives for distinct size-2 intervals")
    rep = dict(zip(distinct, sdr))
    f = tuple(rep[iv] for iv in lv + lw)
    return _verified(gen_complete_bipartite(n, n), f, ListAssignment.from_intervals(lv + lw))


def knn_route(n: int, lists: ListAssignment) -> str:
    """Which construction applies: ``"lemma1"``, ``"lemma2"`` or ``"residue"``.

    The shared-list route is matched up to reordering the W side.
    """
    if lists.kind != INTERVAL or lists.n != 2 * n:
        raise ValueError(f"expected interval lists on the {2 * n} vertices of K_{{{n},{n}}}")
    ivs = lists.intervals
    _require_pairs(ivs)
    lv, lw = ivs[:n], ivs[n:]
    if len(set(lv)) == n and sorted(lv) == sorted(lw):
        return "lemma1"
    if not set(lv) & set(lw):
        return "lemma2"
    return "residue"


def knn_interval2_coloring(n: int, lists: ListAssignment) -> Coloring:
    """A list coloring of K_{n,n} from any size-2 interval lists."""
    route = knn_route(n, lists)
    ivs = lists.intervals
    lv, lw = ivs[:n], ivs[n:]
    if route == "lemma1":
        f = knn_lemma1_coloring(n, lv)
        # f pairs v_i with w_i; move each w color to the W vertex holding that list
        where = {iv: n + j for j, iv in enumerate(lw)}
        colors = list(f[:n]) + [0] * n
        for i, iv in enumerate(lv):
            colors[where[iv]] = f[n + i]
        f = tuple(colors)
    elif route == "lemma2":
        f = knn_lemma2_coloring(n, lv, lw)
    else:
        f = residue_coloring(gen_complete_bipartite(n, n), (0,) * n + (1,) * n, lists, k=2)
    return _verified(gen_complete_bipartite(n, n), f, lists)
