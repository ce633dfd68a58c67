"""Odd diagram classes of S_n: enumeration, extremes, JSON reports."""

import json
from dataclasses import dataclass

from .diagrams import Diagram, odd_diagram, odd_diagram_key
from .intervals import interval_elements, rank_vector
from .perms import Perm, all_perms, bruhat_leq, format_perm, length

__all__ = [
    "OddDiagramClass",
    "classes_of_sn",
    "class_extremes",
    "class_of",
    "class_report",
]

# n = 10 already means 3.6M permutations; anything larger needs an
# explicit opt-in.
GUARDED_MAX_N = 10


@dataclass(frozen=True)
class OddDiagramClass:
    """All permutations sharing one odd diagram, with its Bruhat extremes."""

    diagram: Diagram
    members: tuple[Perm, ...]
    min_elem: Perm
    max_elem: Perm

    @property
    def n(self) -> int:
        return len(self.min_elem)

    def __len__(self) -> int:
        return len(self.members)


def _build_class(members: list[Perm]) -> OddDiagramClass:
    members.sort()
    lo = min(members, key=length)
    hi = max(members, key=length)
    # cheap insurance on the interval theorem: length extremes must also be
    # Bruhat extremes
    for w in members:
        if not (bruhat_leq(lo, w) and bruhat_leq(w, hi)):
            raise AssertionError(
                f"class of {format_perm(lo)} is not a Bruhat interval"
            )
    return OddDiagramClass(odd_diagram(lo), tuple(members), lo, hi)


def classes_of_sn(n: int, allow_large: bool = False) -> list[OddDiagramClass]:
    """Partition S_n into odd diagram classes, sorted by minimum element."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > GUARDED_MAX_N and not allow_large:
        raise ValueError(f"n = {n} > {GUARDED_MAX_N}; pass allow_large to override")
    groups: dict[int, list[Perm]] = {}
    for w in all_perms(n):
        groups.setdefault(odd_diagram_key(w), []).append(w)
    classes = [_build_class(members) for members in groups.values()]
    classes.sort(key=lambda c: c.min_elem)
    return classes


def class_of(w: Perm) -> OddDiagramClass:
    """The odd diagram class containing w, found by scanning S_n."""
    target = odd_diagram_key(w)
    members = [x for x in all_perms(len(w)) if odd_diagram_key(x) == target]
    return _build_class(members)


def class_extremes(cls: OddDiagramClass) -> tuple[Perm, Perm]:
    """Bruhat minimum and maximum; re-verifies the interval property."""
    interval = interval_elements(cls.min_elem, cls.max_elem)
    if interval.elements != cls.members:
        raise AssertionError(
            f"members of class {format_perm(cls.min_elem)} do not form "
            f"the interval [{format_perm(cls.min_elem)}, {format_perm(cls.max_elem)}]"
        )
    return cls.min_elem, cls.max_elem


def class_report(cls: OddDiagramClass) -> dict:
    """Per-class JSON record; heavier fields are filled in by the CLI."""
    from .partition import factorize
    from .polynomials import kl_polynomial, one

    interval = interval_elements(cls.min_elem, cls.max_elem)
    ranks = rank_vector(interval)
    result = factorize(cls.min_elem, cls.max_elem)
    return {
        "diagram": [list(box) for box in cls.diagram],
        "size": len(cls.members),
        "min": format_perm(cls.min_elem),
        "max": format_perm(cls.max_elem),
        "rank_vector": list(ranks),
        "poincare_coeffs": list(ranks),
        "factor_lengths": list(result.factor_lengths),
        "kl_is_one": kl_polynomial(cls.min_elem, cls.max_elem) == one(),
    }


def report_for_n(n: int, allow_large: bool = False, with_duality: bool = True) -> dict:
    """Full JSON report for S_n, schema version 1."""
    from .duality import is_self_dual
    from .intervals import BruhatInterval

    records = []
    for cls in classes_of_sn(n, allow_large=allow_large):
        record = class_report(cls)
        if with_duality:
            interval = BruhatInterval(cls.min_elem, cls.max_elem, cls.members)
            record["self_dual"] = is_self_dual(interval)
        records.append(record)
    return {"schema": 1, "n": n, "classes": records}


def dump_report(report: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(report, fh, indent=1)
        fh.write("\n")
