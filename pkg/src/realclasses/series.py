"""Truncated power series in ``u`` with exact integer coefficients.

Generating functions for real-class counts are built as finite products
``prod_{i=1}^{N}``; every factor with ``i > N`` starts at ``u^i`` or higher
and so leaves coefficients up to ``u^N`` untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import ConsistencyError, GuardError

SERIES_GUARD = 200
DEFAULT_ORDER = 24


@dataclass(frozen=True)
class IntSeries:
    """``c_0 + c_1 u + ... + c_N u^N`` modulo ``u^{N+1}``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise TypeError("coefficients must be integers")

    @classmethod
    def from_terms(cls, N: int, terms: dict[int, int] | Iterable[tuple[int, int]]) -> IntSeries:
        """Series with ``c_e = coeff`` for each ``(e, coeff)``; terms past ``N`` drop."""
        c = [0] * (N + 1)
        items = terms.items() if isinstance(terms, dict) else terms
        for e, v in items:
            if e <= N:
                c[e] += v
        return cls(tuple(c))

    @classmethod
    def one(cls, N: int) -> IntSeries:
        return cls.from_terms(N, {0: 1})

    @classmethod
    def binomial(cls, N: int, a: int, e: int, b: int = 1) -> IntSeries:
        """``a + b u^e``."""
        return cls.from_terms(N, [(0, a), (e, b)])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def _check(self, other: IntSeries):
        if not isinstance(other, IntSeries):
            raise TypeError("expected IntSeries")
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: IntSeries) -> IntSeries:
        self._check(other)
        return IntSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: IntSeries) -> IntSeries:
        self._check(other)
        return IntSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> IntSeries:
        return IntSeries(tuple(-a for a in self.coeffs))

    def scale(self, k: int) -> IntSeries:
        return IntSeries(tuple(k * a for a in self.coeffs))

    def __mul__(self, other: IntSeries) -> IntSeries:
        self._check(other)
        N = self.order
        a, b = self.coeffs, other.coeffs
        out = [0] * (N + 1)
        for i, x in enumerate(a):
            if x:
                for j in range(N + 1 - i):
                    y = b[j]
                    if y:
                        out[i + j] += x * y
        return IntSeries(tuple(out))

    def __pow__(self, e: int) -> IntSeries:
        if e < 0:
            return self.inverse() ** (-e)
        out = IntSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> IntSeries:
        """Newton iteration ``g <- g (2 - a g)``, doubling precision each step."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError(f"series with constant term {c0} is not a unit over Z")
        N = self.order
        g = [c0]
        prec = 1
        while prec < N + 1:
            prec = min(2 * prec, N + 1)
            a = IntSeries(tuple(self.coeffs[:prec]))
            gs = IntSeries(tuple(g) + (0,) * (prec - len(g)))
            two = IntSeries.one(prec - 1).scale(2)
            g = list((gs * (two - a * gs)).coeffs)
        return IntSeries(tuple(g))

    def __truediv__(self, other: IntSeries) -> IntSeries:
        self._check(other)
        if other.coeffs[0] != 1:
            raise ValueError("divisor must have constant term 1")
        return self * other.inverse()

    def halve(self) -> IntSeries:
        if any(c % 2 for c in self.coeffs):
            raise ConsistencyError("odd coefficient before halving")
        return IntSeries(tuple(c // 2 for c in self.coeffs))

    def truncate(self, N: int) -> IntSeries:
        if N > self.order:
            raise ValueError("cannot extend a truncated series")
        return IntSeries(self.coeffs[: N + 1])

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)


def series_arith(a: IntSeries, b: IntSeries, op: str) -> IntSeries:
    ops: dict[str, Callable] = {
        "add": IntSeries.__add__,
        "sub": IntSeries.__sub__,
        "mul": IntSeries.__mul__,
        "div": IntSeries.__truediv__,
    }
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return ops[op](a, b)


def _guard(N: int):
    if N < 0:
        raise ValueError("order must be nonnegative")
    if N > SERIES_GUARD:
        raise GuardError(f"order {N} exceeds series guard {SERIES_GUARD}")


def e_of(q: int) -> int:
    return 2 if q % 2 else 1


def product(N: int, factor: Callable[[int], IntSeries], start: int = 1) -> IntSeries:
    """``prod_{i=start}^{N} factor(i)``."""
    out = IntSeries.one(N)
    for i in range(start, N + 1):
        out = out * factor(i)
    return out


def geometric(N: int, q: int, e: int) -> IntSeries:
    """``1 / (1 - q u^e)``."""
    return IntSeries.from_terms(N, ((e * k, q**k) for k in range(N // e + 1)))


def gen_real_classes(q: int, N: int) -> IntSeries:
    """``prod (1 + u^i)^e / (1 - q u^{2i})``: real classes of GL(n, q) and U(n, q)."""
    _guard(N)
    e = e_of(q)
    return product(N, lambda i: IntSeries.binomial(N, 1, i) ** e / IntSeries.binomial(N, 1, 2 * i, -q))


def gen_even_types(q: int, N: int) -> IntSeries:
    """``prod (1 + u^{2i}) / (1 - q u^{2i})``.

    For odd ``q`` this counts real classes over types with every multiplicity
    even; for even ``q`` that sum is ``prod 1 / (1 - q u^{2i})`` instead.
    """
    _guard(N)
    return product(N, lambda i: IntSeries.binomial(N, 1, 2 * i) / IntSeries.binomial(N, 1, 2 * i, -q))


def gen_theorem(q: int, N: int) -> IntSeries:
    """Half-sum of the real-class product and ``prod (1 + u^{ei}) / (1 - q u^{2i})``."""
    _guard(N)
    e = e_of(q)
    second = product(
        N, lambda i: IntSeries.binomial(N, 1, e * i) / IntSeries.binomial(N, 1, 2 * i, -q)
    )
    return (gen_real_classes(q, N) + second).halve()
