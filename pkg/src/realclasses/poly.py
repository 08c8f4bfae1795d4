"""Monic polynomials with nonzero constant term and their dualities.

All operators act on the coefficient codes of :mod:`realclasses.ff`.  A
polynomial of degree ``d`` is stored as ``(a_0, ..., a_{d-1})``; the leading
coefficient 1 is implicit and degree 0 is the constant polynomial 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import GuardError, guard
from .ff import Field, FieldElement, NormOneGroup, base_order, is_square_in

ENUM_GUARD = 10**7


@dataclass(frozen=True)
class MonicPoly:
    field: Field
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[0] == 0:
            raise ValueError("constant term must be nonzero")

    @classmethod
    def make(cls, field: Field, coeffs: Iterable) -> MonicPoly:
        """Build from ``a_0, ..., a_{d-1}`` given as codes or FieldElements."""
        return cls(field, tuple(field(c).code for c in coeffs))

    @classmethod
    def one(cls, field: Field) -> MonicPoly:
        return cls(field, ())

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def full(self) -> list[int]:
        """All coefficients ``a_0, ..., a_d`` including the leading 1."""
        return list(self.coeffs) + [1]

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 1

    def coefficients(self) -> list[FieldElement]:
        return [FieldElement(self.field, a) for a in self.full()]

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for a in reversed(self.full()):
            acc = F.add(F.mul(acc, x), a)
        return acc

    def __mul__(self, other: MonicPoly) -> MonicPoly:
        _same_field(self, other)
        return MonicPoly(self.field, tuple(polymul(self.field, self.full(), other.full())[:-1]))

    def __pow__(self, e: int) -> MonicPoly:
        out = MonicPoly.one(self.field)
        for _ in range(e):
            out = out * self
        return out

    def sort_key(self):
        key = self.field.key
        return (self.degree, tuple(key(a) for a in self.coeffs))

    def __str__(self):
        return poly_str(self.field, self.full())


def _same_field(f: MonicPoly, g: MonicPoly):
    if f.field != g.field:
        raise ValueError("polynomials over different fields")


def poly_str(F: Field, full: list[int], var: str = "t") -> str:
    terms = []
    for i in range(len(full) - 1, -1, -1):
        a = full[i]
        if a == 0:
            continue
        c = repr(FieldElement(F, a))
        if F.k > 1 and " + " in c:
            c = f"({c})"
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            terms.append(c)
        elif a == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


def polymul(F: Field, a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def polydivmod(F: Field, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder of ``a`` by the monic ``b`` (full coefficient lists)."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [0], a
    quot = [0] * (len(a) - db)
    for s in range(len(a) - 1 - db, -1, -1):
        c = a[s + db]
        if c:
            quot[s] = c
            for i, bi in enumerate(b):
                a[s + i] = F.sub(a[s + i], F.mul(c, bi))
    rem = a[:db] or [0]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return quot, rem


# -- dualities -----------------------------------------------------------


def reciprocal(f: MonicPoly) -> MonicPoly:
    """``f*(t) = f(0)^-1 t^d f(1/t)``; roots are inverted."""
    F = f.field
    full = f.full()
    d = f.degree
    inv0 = F.inv(f.constant)
    return MonicPoly(F, tuple(F.mul(full[d - j], inv0) for j in range(d)))


def tilde_conjugate(f: MonicPoly, q: int) -> MonicPoly:
    """``f~(t) = f(0)^-q t^d f^[q](1/t)``; roots ``a`` go to ``a^-q``."""
    F = f.field
    if F.order != q * q:
        raise ValueError(f"{F!r} is not the quadratic extension of F_{q}")
    return MonicPoly(F, tuple(F.pow(c, q) for c in reciprocal(f).coeffs))


def zeta_reciprocal(f: MonicPoly, zeta) -> MonicPoly:
    """``f^(t) = f(0)^-1 t^d f(zeta/t)``; roots ``a`` go to ``zeta/a``."""
    F = f.field
    z = F(zeta).code
    if z == 0:
        raise ValueError("zeta must be nonzero")
    full = f.full()
    d = f.degree
    inv0 = F.inv(f.constant)
    return MonicPoly(F, tuple(F.mul(F.mul(full[d - m], F.pow(z, d - m)), inv0) for m in range(d)))


def eta_act(eta, f: MonicPoly) -> MonicPoly:
    """Scalar action ``eta.f(t) = eta^d f(t/eta)``; roots are multiplied by eta."""
    F = f.field
    e = F(eta).code
    if e == 0:
        raise ValueError("eta must be nonzero")
    d = f.degree
    return MonicPoly(F, tuple(F.mul(a, F.pow(e, d - j)) for j, a in enumerate(f.coeffs)))


def in_power_ring(f: MonicPoly, m: int) -> bool:
    """Whether ``f`` lies in ``F[t^m]``."""
    return all(a == 0 for j, a in enumerate(f.full()) if j % m)


@dataclass(frozen=True)
class PolyClassification:
    self_reciprocal: bool
    self_conjugate: Optional[bool] = None
    zeta_self_reciprocal: Optional[bool] = None


def classify(f: MonicPoly, q: Optional[int] = None, zeta=None) -> PolyClassification:
    """Literal comparison of ``f`` with its reciprocal, conjugate and zeta-reciprocal.

    ``self_conjugate`` is only computed when ``f`` lives over F_{q^2}; it is
    ``None`` otherwise, as is ``zeta_self_reciprocal`` when no zeta is given.
    """
    conj = None
    if q is not None and f.field.order == q * q:
        conj = tilde_conjugate(f, q) == f
    zsr = None if zeta is None else zeta_reciprocal(f, zeta) == f
    return PolyClassification(reciprocal(f) == f, conj, zsr)


# -- closed-form counts --------------------------------------------------


def count_self_reciprocal(q: int, d: int) -> int:
    """Number of self-reciprocal monic polynomials of degree ``d`` over F_q."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return 1
    if q % 2:
        if d % 2:
            return 2 * q ** ((d - 1) // 2)
        return (q + 1) * q ** (d // 2 - 1)
    if d % 2:
        return q ** ((d - 1) // 2)
    return q ** (d // 2)


def count_self_reciprocal_compact(q: int, d: int) -> int:
    if d == 0:
        return 1
    e = 2 if q % 2 else 1
    return q ** (d // 2) + (e - 1) * q ** ((d - 1) // 2)


def count_zeta_self_reciprocal(q: int, d: int, ambient: str = "general_linear") -> int:
    """zeta-self-reciprocal count for a non-square zeta; same for both ambients."""
    if q % 2 == 0:
        raise ValueError("no non-square exists for even q")
    if ambient not in ("general_linear", "unitary"):
        raise ValueError(f"unknown ambient {ambient!r}")
    return count_self_reciprocal(q, d) if d % 2 == 0 else 0


# -- enumeration ---------------------------------------------------------

FILTERS = ("all", "self_reciprocal", "self_conjugate", "zeta_self_reciprocal")


def enumerate_polys(field: Field, d: int, *filters: str, zeta=None) -> list[MonicPoly]:
    """All monic degree-``d`` polynomials with nonzero constant term passing every filter.

    Order is lexicographic on ``(a_0, ..., a_{d-1})`` under the field's
    element ordering.  ``self_conjugate`` needs ``field`` of order ``q^2``.
    """
    F = field
    filters = tuple(f for f in filters if f != "all")
    for name in filters:
        if name not in FILTERS:
            raise ValueError(f"unknown filter {name!r}")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    limit = guard(ENUM_GUARD)
    n_cand = (F.order - 1) * F.order ** max(d - 1, 0) if d else 1
    if n_cand > limit:
        raise GuardError(f"{n_cand} candidates over {F!r} in degree {d} exceed guard {limit}")
    if d == 0:
        return [MonicPoly.one(F)]
    q = base_order(F) if "self_conjugate" in filters else None
    z = None
    if "zeta_self_reciprocal" in filters:
        if zeta is None:
            raise ValueError("zeta_self_reciprocal filter needs zeta")
        z = F(zeta).code

    checks = []
    const_ok = []
    for name in filters:
        if name == "self_reciprocal":
            checks.append(lambda f: reciprocal(f) == f)
            const_ok.append(lambda a: F.inv(a) == a)
        elif name == "self_conjugate":
            checks.append(lambda f: tilde_conjugate(f, q) == f)
            const_ok.append(lambda a: F.pow(a, -q) == a)
        else:
            checks.append(lambda f: zeta_reciprocal(f, z) == f)
            const_ok.append(lambda a: F.mul(F.pow(z, d), F.inv(a)) == a)

    out = []
    for a0 in F.nonzero:
        # the transformed constant term depends on a_0 alone
        if not all(ok(a0) for ok in const_ok):
            continue
        for rest in itertools.product(F.ordered, repeat=d - 1):
            f = MonicPoly(F, (a0,) + rest)
            if all(c(f) for c in checks):
                out.append(f)
    return out


def non_squares(ambient) -> list[int]:
    """Codes of the non-squares of F^x or of C_{q+1}, in canonical order."""
    if isinstance(ambient, NormOneGroup):
        F = ambient.ambient
        members = sorted(ambient.elements, key=F.key)
    else:
        F = ambient
        members = list(F.nonzero)
    return [a for a in members if not is_square_in(FieldElement(F, a), ambient)]


def canonical_zeta(ambient) -> int:
    """Smallest non-square of the ambient group (needs odd q)."""
    ns = non_squares(ambient)
    if not ns:
        raise ValueError("ambient group has no non-squares (q even)")
    return ns[0]


def monic_irreducibles(field: Field, max_degree: int) -> list[MonicPoly]:
    """Monic irreducibles with nonzero constant term, degree 1..max_degree.

    Sieve: a degree-``d`` polynomial is reducible iff it is a product of monic
    factors of degrees ``a`` and ``d - a`` with ``1 <= a <= d/2``.
    """
    F = field
    out = []
    for d in range(1, max_degree + 1):
        reducible = set()
        for a in range(1, d // 2 + 1):
            for f in _monic_all(F, a):
                for g in _monic_all(F, d - a):
                    reducible.add(tuple(polymul(F, f, g)))
        for cand in _monic_all(F, d):
            if cand[0] != 0 and tuple(cand) not in reducible:
                out.append(MonicPoly(F, tuple(cand[:-1])))
    return out


def _monic_all(F: Field, d: int):
    for rest in itertools.product(F.ordered, repeat=d):
        yield list(rest) + [1]
