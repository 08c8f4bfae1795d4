"""Exact arithmetic in finite fields F_{p^k}.

Elements are stored as integer codes ``sum(c_i * p**i)`` of their reduced
coefficient vector ``(c_0, ..., c_{k-1})`` in the basis ``1, x, ..., x^{k-1}``
of ``F_p[x] / (modulus)``.  The canonical element ordering used everywhere
downstream is lexicographic on that coefficient vector (``c_0`` compared
first), exposed through :meth:`Field.key` and :attr:`Field.ordered`.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field as dc_field

from .errors import GuardError

FIELD_GUARD = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``, or raise ``ValueError``."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    k = 0
    m = q
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, k


def two_part(n: int) -> int:
    """Largest power of 2 dividing ``n``."""
    if n < 1:
        raise ValueError(f"two_part needs n >= 1, got {n}")
    return n & -n


# Polynomials over F_p as coefficient lists, lowest degree first.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_polymod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of ``a`` divided by the monic polynomial ``m`` over F_p."""
    a = _trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _is_irreducible_fp(m: tuple[int, ...], p: int) -> bool:
    k = len(m) - 1
    if k == 1:
        return True
    if m[0] == 0:
        return False
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _fp_polymod(list(m), list(low) + [1], p):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    # product varies c_0 slowest: lexicographic with low degree compared first
    for low in itertools.product(range(p), repeat=k):
        m = low + (1,)
        if _is_irreducible_fp(m, p):
            return m
    raise AssertionError(f"no irreducible of degree {k} over F_{p}")


@dataclass(frozen=True, eq=False)
class Field:
    """The field F_p[x]/(modulus) of order ``p**k``."""

    p: int
    k: int
    modulus: tuple[int, ...]
    order: int = dc_field(init=False)

    def __post_init__(self):
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _is_irreducible_fp(self.modulus, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over F_{self.p}")
        object.__setattr__(self, "order", self.p**self.k)

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.order})"

    # -- encoding -------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            coeffs = _fp_polymod([c % self.p for c in coeffs], list(self.modulus), self.p)
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c % self.p
        return code

    def key(self, a: int) -> tuple[int, ...]:
        """Sort key realising the canonical element ordering."""
        return self.coeffs(a)

    @functools.cached_property
    def ordered(self) -> tuple[int, ...]:
        return tuple(sorted(range(self.order), key=self.key))

    @functools.cached_property
    def nonzero(self) -> tuple[int, ...]:
        return tuple(a for a in self.ordered if a)

    def __call__(self, value) -> FieldElement:
        """Build an element from a code, a coefficient sequence or an element."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if self.k == 1:
                return FieldElement(self, value % self.p)
            if not 0 <= value < self.order:
                raise ValueError(f"code {value} out of range for {self!r}")
            return FieldElement(self, value)
        return FieldElement(self, self.encode(value))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, a) for a in self.ordered]

    # -- raw arithmetic on codes ---------------------------------------

    @functools.cached_property
    def _exp_log(self) -> tuple[list[int], list[int]]:
        q = self.order
        if q == 2:
            return [1], [0, 0]
        mod = list(self.modulus)
        for g in self.nonzero:
            gc = list(self.coeffs(g))
            exp = [1]
            cur = [1]
            for _ in range(q - 2):
                cur = _fp_polymod(_fp_polymul(cur, gc, self.p), mod, self.p)
                code = self.encode(cur)
                if code == 1:
                    break
                exp.append(code)
            if len(exp) == q - 1:
                log = [0] * q
                for i, e in enumerate(exp):
                    log[e] = i
                return exp, log
        raise AssertionError("no primitive element found")

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % p
        r, m = 0, 1
        while a or b:
            r += ((a % p + b % p) % p) * m
            a //= p
            b //= p
            m *= p
        return r

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.k == 1:
            return -a % p
        r, m = 0, 1
        while a:
            r += (-(a % p) % p) * m
            a //= p
            m *= p
        return r

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        exp, log = self._exp_log
        return exp[(log[a] + log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.k == 1:
            return pow(a, -1, self.p)
        exp, log = self._exp_log
        return exp[-log[a] % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        if self.k == 1:
            return pow(a, e % (self.p - 1), self.p)
        exp, log = self._exp_log
        return exp[log[a] * e % (self.order - 1)]

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.order - 1
        d = n
        for r in _prime_factors(n):
            while d % r == 0 and self.pow(a, d // r) == 1:
                d //= r
        return d

    @functools.cached_property
    def tables(self):
        """Dense ``(add, mul, neg, inv)`` numpy tables indexed by code."""
        import numpy as np

        q = self.order
        if q > 4096:
            raise GuardError(f"dense tables need order <= 4096, got {q}")
        add = np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        mul = np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        neg = np.array([self.neg(a) for a in range(q)], dtype=np.int64)
        inv = np.array([0] + [self.inv(a) for a in range(1, q)], dtype=np.int64)
        return add, mul, neg, inv


def _fp_polymul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> Field:
    """Field of order ``p**k`` with the lexicographically smallest modulus."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if p**k > FIELD_GUARD:
        raise GuardError(f"field order {p}^{k} exceeds guard {FIELD_GUARD}")
    return Field(p, k, _smallest_irreducible(p, k))


def field_of_order(q: int) -> Field:
    return make_field(*prime_power(q))


@dataclass(frozen=True, eq=False)
class FieldElement:
    field: Field
    code: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.field(other).code
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field(other).code
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __lt__(self, other: FieldElement):
        return self.field.key(self.code) < self.field.key(self._other(other))

    def __bool__(self):
        return self.code != 0

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.code, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.code, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.code, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.code, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.code))

    def order(self) -> int:
        return self.field.mult_order(self.code)

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.code}"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(f"{c}{mono}" if c != 1 or i == 0 else mono)
        return " + ".join(terms) if terms else "0"


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    if a.field != b.field:
        raise ValueError("elements of different fields")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def subfield_order_ok(field: Field, q: int) -> bool:
    try:
        p, j = prime_power(q)
    except ValueError:
        return False
    return p == field.p and field.k % j == 0


def frobenius(x: FieldElement, q: int) -> FieldElement:
    """The ``q``-power map; ``q`` must be the order of a subfield."""
    if not subfield_order_ok(x.field, q):
        raise ValueError(f"{q} is not the order of a subfield of {x.field!r}")
    return x**q


def base_order(field: Field) -> int:
    """``q`` such that ``field`` has order ``q**2``."""
    if field.k % 2:
        raise ValueError(f"{field!r} is not a quadratic extension")
    return field.p ** (field.k // 2)


def fixed_field(field: Field, q: int) -> tuple[int, ...]:
    """Codes of the subfield F_q, realised as fixed points of ``x -> x**q``."""
    if not subfield_order_ok(field, q):
        raise ValueError(f"{q} is not the order of a subfield of {field!r}")
    return tuple(a for a in field.ordered if field.pow(a, q) == a)


def embedding(small: Field, big: Field) -> dict[int, int]:
    """Map codes of ``small`` into ``big`` via the smallest root of its modulus."""
    if not subfield_order_ok(big, small.order):
        raise ValueError(f"{small!r} does not embed in {big!r}")
    root = None
    for cand in big.ordered:
        acc = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, cand), big.encode([c]))
        if acc == 0:
            root = cand
            break
    assert root is not None
    out = {}
    for a in range(small.order):
        acc = 0
        for c in reversed(small.coeffs(a)):
            acc = big.add(big.mul(acc, root), big.encode([c]))
        out[a] = acc
    return out


@dataclass(frozen=True)
class NormOneGroup:
    """The order ``q + 1`` subgroup ``{x : x**(q+1) == 1}`` of F_{q^2}^x."""

    ambient: Field
    q: int
    elements: tuple[int, ...]
    generator: int

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x) -> bool:
        code = x.code if isinstance(x, FieldElement) else x
        return code != 0 and self.ambient.pow(code, self.q + 1) == 1

    def members(self) -> list[FieldElement]:
        return [FieldElement(self.ambient, a) for a in self.elements]


@functools.lru_cache(maxsize=None)
def norm_one_subgroup(q: int) -> NormOneGroup:
    p, k = prime_power(q)
    F = make_field(p, 2 * k)
    elems = tuple(a for a in F.nonzero if F.pow(a, q + 1) == 1)
    assert len(elems) == q + 1
    gen = next(a for a in elems if F.mult_order(a) == q + 1)
    return NormOneGroup(F, q, elems, gen)


def is_square_in(x: FieldElement, ambient) -> bool:
    """Whether ``x`` is a square in F^x (``ambient`` a Field) or in a NormOneGroup."""
    F = x.field
    if isinstance(ambient, NormOneGroup):
        if F != ambient.ambient or x not in ambient:
            raise ValueError(f"{x!r} is not in C_{ambient.q + 1}")
        n = ambient.q + 1
    elif isinstance(ambient, Field):
        if F != ambient or x.code == 0:
            raise ValueError(f"{x!r} is not in the multiplicative group of {ambient!r}")
        n = ambient.order - 1
    else:
        raise TypeError("ambient must be a Field or NormOneGroup")
    # cyclic group of order n: squares are exactly the solutions of y^(n/2) = 1
    if n % 2:
        return True
    return F.pow(x.code, n // 2) == 1
