"""Uniform partition of an odd diagram class and the Poincare factorization.

Given the extremes u < v of an odd diagram class, the positions between
a = u^-1(k) and b = v^-1(k) (k the first differing value) carrying values
in [u(a), u(b)] split the interval into equal-sized blocks indexed by the
position of k.  Iterating the split on the last block's minimum factors
the Poincare polynomial into terms 1 + t + ... + t^(m-1).
"""

from dataclasses import dataclass

from .diagrams import first_difference, odd_diagram
from .intervals import BruhatInterval, interval_elements
from .perms import Perm, format_perm, inverse, right_transpose
from .polynomials import IntPolynomial, expand_factors

__all__ = [
    "PartitionStep",
    "BlockDecomposition",
    "FactorizationResult",
    "anchors",
    "block_index",
    "decompose",
    "phi",
    "factorize",
]


@dataclass(frozen=True)
class PartitionStep:
    """The split data for one extreme pair (u, v)."""

    k: int
    a: int
    b: int
    anchors: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.anchors)


@dataclass(frozen=True)
class BlockDecomposition:
    step: PartitionStep
    blocks: tuple[BruhatInterval, ...]
    u_chain: tuple[Perm, ...]
    v_chain: tuple[Perm, ...]


@dataclass(frozen=True)
class FactorizationResult:
    """Factor term counts in recursion order and their expanded product."""

    factor_lengths: tuple[int, ...]
    product: IntPolynomial


def _require_class_extremes(u: Perm, v: Perm) -> None:
    if odd_diagram(u) != odd_diagram(v):
        raise ValueError(
            f"{format_perm(u)} and {format_perm(v)} have different odd diagrams"
        )


def anchors(u: Perm, v: Perm) -> PartitionStep:
    """Anchor positions between u^-1(k) and v^-1(k).

    Requires u != v with equal odd diagrams, u the class minimum and v the
    maximum.  The anchor values u(a_1) < ... < u(a_m) are increasing and all
    anchors share one parity; both facts are asserted.
    """
    _require_class_extremes(u, v)
    k = first_difference(u, v)
    a = inverse(u)[k - 1]
    b = inverse(v)[k - 1]
    if not (a < b and u[a - 1] < u[b - 1]):
        raise AssertionError(
            f"extremes out of order for [{format_perm(u)}, {format_perm(v)}]: "
            f"a={a}, b={b}; is u really the class minimum?"
        )
    lo, hi = u[a - 1], u[b - 1]
    positions = tuple(i for i in range(a, b + 1) if lo <= u[i - 1] <= hi)
    values = [u[i - 1] for i in positions]
    if values != sorted(values):
        raise AssertionError(f"anchored subsequence not increasing at {format_perm(u)}")
    if any((i - a) % 2 != 0 for i in positions):
        raise AssertionError(f"anchors of mixed parity at {format_perm(u)}")
    return PartitionStep(k, a, b, positions)


def block_index(w: Perm, step: PartitionStep) -> int:
    """1-based block number of an interval member: which anchor holds k."""
    c = inverse(w)[step.k - 1]
    try:
        return step.anchors.index(c) + 1
    except ValueError:
        raise AssertionError(
            f"{format_perm(w)} holds {step.k} at non-anchor position {c}"
        ) from None


def phi(w: Perm, step: PartitionStep, i: int) -> Perm:
    """The bijection block i -> block i+1: swap the anchor pair positions."""
    if not 1 <= i < step.m:
        raise ValueError(f"block index {i} out of range 1..{step.m - 1}")
    if block_index(w, step) != i:
        raise ValueError(f"{format_perm(w)} is not in block {i}")
    return right_transpose(w, (step.anchors[i - 1], step.anchors[i]))


def _chains(u: Perm, v: Perm, step: PartitionStep) -> tuple[tuple[Perm, ...], tuple[Perm, ...]]:
    u_chain = [u]
    for i in range(step.m - 1):
        pair = (step.anchors[i], step.anchors[i + 1])
        u_chain.append(right_transpose(u_chain[-1], pair))
    v_chain = [v]
    for i in range(step.m - 2, -1, -1):
        pair = (step.anchors[i], step.anchors[i + 1])
        v_chain.append(right_transpose(v_chain[-1], pair))
    v_chain.reverse()
    return tuple(u_chain), tuple(v_chain)


def decompose(u: Perm, v: Perm) -> BlockDecomposition:
    """Split [u, v] into its anchor-indexed blocks and verify each block is
    the Bruhat interval between its chain elements."""
    step = anchors(u, v)
    parent = interval_elements(u, v)
    groups: list[list[Perm]] = [[] for _ in range(step.m)]
    for w in parent.elements:
        groups[block_index(w, step) - 1].append(w)
    u_chain, v_chain = _chains(u, v, step)
    blocks = []
    for i in range(step.m):
        block = interval_elements(u_chain[i], v_chain[i])
        if block.elements != tuple(groups[i]):
            raise AssertionError(
                f"block {i + 1} of [{format_perm(u)}, {format_perm(v)}] is not "
                f"the interval [{format_perm(u_chain[i])}, {format_perm(v_chain[i])}]"
            )
        blocks.append(block)
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:
        raise AssertionError(
            f"non-uniform partition of [{format_perm(u)}, {format_perm(v)}]: "
            f"{[len(b) for b in blocks]}"
        )
    return BlockDecomposition(step, tuple(blocks), u_chain, v_chain)


def factorize(u: Perm, v: Perm) -> FactorizationResult:
    """Repeatedly split [current, v] at its anchors, recording the block
    count m of each step, until the pair collapses to a point."""
    _require_class_extremes(u, v)
    factors = []
    current = u
    last_k = 0
    while current != v:
        step = anchors(current, v)
        if step.k <= last_k:
            raise AssertionError("first difference failed to increase")
        last_k = step.k
        factors.append(step.m)
        for i in range(step.m - 1):
            current = right_transpose(current, (step.anchors[i], step.anchors[i + 1]))
    return FactorizationResult(tuple(factors), expand_factors(factors))
