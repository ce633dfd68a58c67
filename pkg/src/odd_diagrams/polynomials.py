"""Exact integer polynomials; Poincare, R- and Kazhdan-Lusztig polynomials."""

from __future__ import annotations

from typing import Callable, Iterable

from .intervals import _cached_interval, rank_vector
from .perms import (
    Perm,
    bruhat_leq,
    descent_set,
    inverse,
    left_transpose,
    length,
    right_transpose,
)

__all__ = [
    "IntPolynomial",
    "zero",
    "one",
    "poincare",
    "is_palindromic",
    "expand_factors",
    "r_polynomial",
    "r_polynomial_choosing",
    "kl_polynomial",
    "carrell_condition",
]


class IntPolynomial:
    """Univariate polynomial with exact integer coefficients, index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == (IntPolynomial([other])).coeffs
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPolynomial(out)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for k, c in enumerate(other.coeffs):
            out[k] -= c
        return IntPolynomial(out)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def scaled(self, c: int) -> IntPolynomial:
        return IntPolynomial(c * a for a in self.coeffs)

    def shifted(self, k: int) -> IntPolynomial:
        """Multiply by the variable to the k-th power."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def reversed_to(self, d: int) -> IntPolynomial:
        """q^d * p(1/q) as an ordinary polynomial; requires d >= degree."""
        if d < self.degree:
            raise ValueError(f"cannot reverse degree-{self.degree} polynomial to {d}")
        out = [0] * (d + 1)
        for k, c in enumerate(self.coeffs):
            out[d - k] = c
        return IntPolynomial(out)

    def pretty(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                head = "" if abs(c) == 1 else str(abs(c))
                if c < 0:
                    head = "-" + head
                power = var if k == 1 else f"{var}^{k}"
                terms.append(f"{head}{power}")
        return "+".join(terms).replace("+-", "-")

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def zero() -> IntPolynomial:
    return IntPolynomial()


def one() -> IntPolynomial:
    return IntPolynomial([1])


_Q = IntPolynomial([0, 1])
_Q_MINUS_1 = IntPolynomial([-1, 1])


def poincare(u: Perm, v: Perm) -> IntPolynomial:
    """Rank generating function of [u, v], normalized to constant term 1."""
    return IntPolynomial(rank_vector(_cached_interval(u, v)))


def is_palindromic(f: IntPolynomial) -> bool:
    if not f:
        raise ValueError("palindromicity is undefined for the zero polynomial")
    return f.coeffs == tuple(reversed(f.coeffs))


def expand_factors(lengths: Iterable[int]) -> IntPolynomial:
    """Product of 1 + t + ... + t^(len-1) over the given lengths."""
    out = one()
    for m in lengths:
        if m < 1:
            raise ValueError(f"factor length must be >= 1, got {m}")
        out = out * IntPolynomial([1] * m)
    return out


def _default_descent(u: Perm) -> int:
    return min(descent_set(u))


def r_polynomial_choosing(
    x: Perm, y: Perm, choose_descent: Callable[[Perm], int]
) -> IntPolynomial:
    """R-polynomial by the descent recursion, without memoization.

    choose_descent picks which right descent of y drives the recursion;
    the result is independent of the choice (property-tested).
    """
    if x == y:
        return one()
    if not bruhat_leq(x, y):
        return zero()
    i = choose_descent(y)
    s = (i, i + 1)
    ys = right_transpose(y, s)
    xs = right_transpose(x, s)
    if i in descent_set(x):
        return r_polynomial_choosing(xs, ys, choose_descent)
    return _Q * r_polynomial_choosing(xs, ys, choose_descent) + _Q_MINUS_1 * r_polynomial_choosing(x, ys, choose_descent)


_R_MEMO: dict[tuple[Perm, Perm], IntPolynomial] = {}


def r_polynomial(x: Perm, y: Perm) -> IntPolynomial:
    """Memoized R-polynomial; recursion on the smallest descent of y."""
    if len(x) != len(y):
        raise ValueError("degree mismatch")
    if x == y:
        return one()
    if not bruhat_leq(x, y):
        return zero()
    key = (x, y)
    cached = _R_MEMO.get(key)
    if cached is not None:
        return cached
    i = _default_descent(y)
    s = (i, i + 1)
    ys = right_transpose(y, s)
    xs = right_transpose(x, s)
    if i in descent_set(x):
        result = r_polynomial(xs, ys)
    else:
        result = _Q * r_polynomial(xs, ys) + _Q_MINUS_1 * r_polynomial(x, ys)
    _R_MEMO[key] = result
    return result


_KL_MEMO: dict[tuple[Perm, Perm], IntPolynomial] = {}


def kl_polynomial(x: Perm, y: Perm) -> IntPolynomial:
    """Kazhdan-Lusztig polynomial via the degree-bounded inversion relation.

    For fixed y, descending induction on length(x): the sum
    sum_{x < z <= y} R_{x,z} P_{z,y} equals q^d P_{x,y}(1/q) - P_{x,y}
    with d = length(y) - length(x), and the degree bound
    deg P <= floor((d-1)/2) pins down every coefficient of P from the
    upper half of the sum.
    """
    if len(x) != len(y):
        raise ValueError("degree mismatch")
    if x == y:
        return one()
    if not bruhat_leq(x, y):
        return zero()
    key = (x, y)
    cached = _KL_MEMO.get(key)
    if cached is not None:
        return cached
    d = length(y) - length(x)
    total = zero()
    for z in _cached_interval(x, y).elements:
        if z == x:
            continue
        total = total + r_polynomial(x, z) * kl_polynomial(z, y)
    p = IntPolynomial(total.coeff(d - k) for k in range((d - 1) // 2 + 1))
    if p.reversed_to(d) - p != total:
        raise AssertionError(
            "inversion relation violated; KL computation is inconsistent"
        )
    _KL_MEMO[key] = p
    return p


def carrell_condition(x: Perm, y: Perm) -> bool:
    """Reflection-count test: for every w in [x, y], the number of
    transpositions t with w < t w <= y equals length(y) - length(w)."""
    if not bruhat_leq(x, y):
        raise ValueError("x is not below y")
    n = len(x)
    target_interval = _cached_interval(x, y)
    for w in target_interval.elements:
        win = inverse(w)
        count = 0
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                # w < (i j) w iff value i sits before value j
                if win[i - 1] < win[j - 1]:
                    tw = left_transpose(w, (i, j))
                    if bruhat_leq(tw, y):
                        count += 1
        if count != length(y) - length(w):
            return False
    return True
