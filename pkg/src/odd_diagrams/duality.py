"""Self-duality of Bruhat intervals: top-heaviness, anti-automorphism
search, and the boundary bipartite-graph criterion."""

from collections import Counter
from dataclasses import dataclass

from .intervals import BruhatInterval, _cached_interval, hasse_edges, rank_vector
from .perms import Perm, identity, length

__all__ = [
    "BipartiteGraph",
    "top_heavy_check",
    "is_self_dual",
    "boundary_bipartite_graphs",
    "bipartite_criterion",
    "non_self_dual_census",
]


@dataclass(frozen=True)
class BipartiteGraph:
    """Covers between two consecutive rank levels; edges are index pairs."""

    left: tuple[Perm, ...]
    right: tuple[Perm, ...]
    edges: frozenset[tuple[int, int]]


def top_heavy_check(w: Perm) -> bool:
    """Rank sizes of [e, w] satisfy #P_k <= #P_(l(w)-k) for k <= l(w)/2."""
    ranks = rank_vector(_cached_interval(identity(len(w)), w))
    top = len(ranks) - 1
    return all(ranks[k] <= ranks[top - k] for k in range(top // 2 + 1))


def _levels_and_adjacency(interval: BruhatInterval):
    """Element indices grouped by rank, plus up/down cover adjacency."""
    base = length(interval.bottom)
    index = {w: i for i, w in enumerate(interval.elements)}
    levels: list[list[int]] = [[] for _ in range(interval.rank + 1)]
    for i, w in enumerate(interval.elements):
        levels[length(w) - base].append(i)
    up: list[set[int]] = [set() for _ in interval.elements]
    down: list[set[int]] = [set() for _ in interval.elements]
    for x, y in hasse_edges(interval):
        xi, yi = index[x], index[y]
        up[xi].add(yi)
        down[yi].add(xi)
    return levels, up, down


def is_self_dual(interval: BruhatInterval) -> bool:
    """Does the interval poset admit an order-reversing self-bijection?

    Rank-vector palindromicity is a necessary pre-filter; the search then
    backtracks rank by rank for a bijection sending covers to reversed
    covers, pruning on (down-degree, up-degree) signatures.
    """
    if len(interval) == 1:
        return True
    ranks = rank_vector(interval)
    if ranks != tuple(reversed(ranks)):
        return False
    levels, up, down = _levels_and_adjacency(interval)
    top = len(levels) - 1
    order = [i for level in levels for i in level]
    rank_of = {}
    for r, level in enumerate(levels):
        for i in level:
            rank_of[i] = r

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        x = order[pos]
        r = rank_of[x]
        for target in levels[top - r]:
            if target in used:
                continue
            if len(up[x]) != len(down[target]) or len(down[x]) != len(up[target]):
                continue
            # down-neighbors of x are already mapped (ranks are processed
            # bottom-up) and must land among the up-neighbors of the target
            if any(target not in down[mapping[y]] for y in down[x]):
                continue
            mapping[x] = target
            used.add(target)
            if extend(pos + 1):
                return True
            del mapping[x]
            used.remove(target)
        return False

    return extend(0)


def boundary_bipartite_graphs(
    interval: BruhatInterval,
) -> tuple[BipartiteGraph, BipartiteGraph]:
    """Cover graphs between ranks 1-2 above the bottom and ranks 1-2 below
    the top; defined only for intervals of rank >= 2."""
    if interval.rank < 2:
        raise ValueError("boundary graphs need an interval of rank >= 2")
    levels, up, down = _levels_and_adjacency(interval)
    top = len(levels) - 1
    elems = interval.elements

    def graph(left_level: list[int], right_level: list[int], neighbors) -> BipartiteGraph:
        rpos = {i: p for p, i in enumerate(right_level)}
        edges = frozenset(
            (p, rpos[j]) for p, i in enumerate(left_level) for j in neighbors[i] if j in rpos
        )
        return BipartiteGraph(
            tuple(elems[i] for i in left_level),
            tuple(elems[i] for i in right_level),
            edges,
        )

    bottom_graph = graph(levels[1], levels[2], up)
    top_graph = graph(levels[top - 1], levels[top - 2], down)
    return bottom_graph, top_graph


def _bipartite_isomorphic(g1: BipartiteGraph, g2: BipartiteGraph) -> bool:
    """Part-preserving isomorphism test by backtracking over the left part.

    For a fixed left bijection, a right bijection exists iff the multisets
    of right-vertex neighborhoods (as subsets of the left part) agree.
    """
    if len(g1.left) != len(g2.left) or len(g1.right) != len(g2.right):
        return False
    if len(g1.edges) != len(g2.edges):
        return False
    k = len(g1.left)
    deg1 = [0] * k
    deg2 = [0] * k
    nbhd1: list[set[int]] = [set() for _ in g1.right]
    nbhd2: list[set[int]] = [set() for _ in g2.right]
    for a, b in g1.edges:
        deg1[a] += 1
        nbhd1[b].add(a)
    for a, b in g2.edges:
        deg2[a] += 1
        nbhd2[b].add(a)
    if sorted(deg1) != sorted(deg2):
        return False
    if Counter(len(s) for s in nbhd1) != Counter(len(s) for s in nbhd2):
        return False
    target_nbhds = Counter(frozenset(s) for s in nbhd2)

    sigma = [-1] * k
    used = [False] * k

    def extend(a: int) -> bool:
        if a == k:
            mapped = Counter(frozenset(sigma[x] for x in s) for s in nbhd1)
            return mapped == target_nbhds
        for t in range(k):
            if used[t] or deg1[a] != deg2[t]:
                continue
            sigma[a] = t
            used[t] = True
            if extend(a + 1):
                return True
            used[t] = False
        sigma[a] = -1
        return False

    return extend(0)


def bipartite_criterion(interval: BruhatInterval) -> bool:
    """True iff the two boundary graphs are isomorphic as bipartite graphs
    (parts not exchanged); vacuously true for intervals of rank <= 1."""
    if interval.rank < 2:
        return True
    bottom_graph, top_graph = boundary_bipartite_graphs(interval)
    return _bipartite_isomorphic(bottom_graph, top_graph)


def non_self_dual_census(n: int, allow_large: bool = False, jobs: int = 1) -> int:
    """Number of odd diagram classes of S_n that are not self-dual."""
    from .classes import classes_of_sn

    if n < 1 or (n > 10 and not allow_large):
        raise ValueError("census supports 1 <= n <= 10 (pass allow_large beyond)")
    classes = classes_of_sn(n, allow_large=allow_large)
    intervals = [
        BruhatInterval(c.min_elem, c.max_elem, c.members)
        for c in classes
        if len(c.members) > 1
    ]
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(is_self_dual, intervals, chunksize=64)
    else:
        results = [is_self_dual(i) for i in intervals]
    return sum(1 for ok in results if not ok)
