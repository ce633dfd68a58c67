"""Bruhat intervals [u, v]: elements, rank vectors, Hasse diagrams, DOT export."""

from dataclasses import dataclass
from functools import lru_cache

from .perms import Perm, bruhat_leq, format_perm, length, upward_covers

__all__ = ["BruhatInterval", "interval_elements", "rank_vector", "hasse_edges", "to_dot"]


@dataclass(frozen=True)
class BruhatInterval:
    """An interval [bottom, top] with its sorted member list."""

    bottom: Perm
    top: Perm
    elements: tuple[Perm, ...]

    @property
    def n(self) -> int:
        return len(self.bottom)

    @property
    def rank(self) -> int:
        return length(self.top) - length(self.bottom)

    def __len__(self) -> int:
        return len(self.elements)


def interval_elements(u: Perm, v: Perm) -> BruhatInterval:
    """Materialize [u, v] by BFS upward from u through covering relations.

    Every z in [u, v] is reachable from u by a saturated chain inside the
    interval, so cost is proportional to interval size, not to n!.
    """
    if not bruhat_leq(u, v):
        raise ValueError(f"{format_perm(u)} is not below {format_perm(v)}")
    seen = {u}
    frontier = [u]
    while frontier:
        new_frontier = []
        for w in frontier:
            for z in upward_covers(w):
                if z not in seen and bruhat_leq(z, v):
                    seen.add(z)
                    new_frontier.append(z)
        frontier = new_frontier
    return BruhatInterval(u, v, tuple(sorted(seen)))


@lru_cache(maxsize=65536)
def _cached_interval(u: Perm, v: Perm) -> BruhatInterval:
    return interval_elements(u, v)


def rank_vector(interval: BruhatInterval) -> tuple[int, ...]:
    """counts[r] = number of members at length(bottom) + r."""
    base = length(interval.bottom)
    counts = [0] * (interval.rank + 1)
    for w in interval.elements:
        counts[length(w) - base] += 1
    return tuple(counts)


def hasse_edges(interval: BruhatInterval) -> list[tuple[Perm, Perm]]:
    """All covering pairs (x, y) with both endpoints in the interval."""
    members = set(interval.elements)
    edges = []
    for x in interval.elements:
        for y in upward_covers(x):
            if y in members:
                edges.append((x, y))
    edges.sort()
    return edges


def to_dot(interval: BruhatInterval) -> str:
    """Hasse diagram in DOT, one rank group per length level."""
    base = length(interval.bottom)
    levels: dict[int, list[Perm]] = {}
    for w in interval.elements:
        levels.setdefault(length(w) - base, []).append(w)
    lines = ["graph bruhat_interval {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for r in sorted(levels):
        names = " ".join(f'"{format_perm(w)}"' for w in sorted(levels[r]))
        lines.append(f"  {{ rank=same; {names} }}")
    for x, y in hasse_edges(interval):
        lines.append(f'  "{format_perm(x)}" -- "{format_perm(y)}";')
    lines.append("}")
    return "\n".join(lines)
