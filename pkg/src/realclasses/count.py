"""Closed-form real-class counts per class type, and Z-orbit profiles.

Per-type counts (type = partition with ``m_i = deg f_i``):

* real classes of GL(n, q) (equivalently U(n, q)): ``prod r_{q, m_i}``
* real classes of GL(n, q) inside SL(n, q): two-case form for odd q, with
  :func:`sl_type_count_raw` evaluating the three-case form as a check
* real classes of PGL(n, q) (equivalently PGU(n, q))
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import ConsistencyError, GuardError
from .ff import Field, NormOneGroup
from .partition import Partition, iter_partitions
from .poly import MonicPoly, eta_act, reciprocal, zeta_reciprocal

TOTALS_GUARD = 60


@functools.lru_cache(maxsize=None)
def r(q: int, d: int) -> int:
    from .poly import count_self_reciprocal

    return count_self_reciprocal(q, d)


def _half(x: int) -> int:
    if x % 2:
        raise ConsistencyError(f"halving odd count {x}")
    return x // 2


def real_type_count(q: int, nu: Partition) -> int:
    out = 1
    for m in nu.multiplicities.values():
        out *= r(q, m)
    return out


def sl_type_count(q: int, nu: Partition) -> int:
    """Real classes of type ``nu`` in GL(n, q) that lie in SL(n, q)."""
    full = real_type_count(q, nu)
    if q % 2 == 0:
        return full
    mult = nu.multiplicities
    if any(i % 2 and m % 2 for i, m in mult.items()):
        return _half(full)
    twisted = 1
    for i, m in mult.items():
        if i % 2:
            # (q-1)/(q+1) * r_{q,m} for even m
            twisted *= (q - 1) * q ** (m // 2 - 1)
        else:
            twisted *= r(q, m)
    return _half(full + twisted)


def sl_type_count_raw(q: int, nu: Partition) -> int:
    """Three-case form with the case guards read as disjoint conditions.

    case 1: ``m_i = 0`` for every odd ``i``;
    case 2: ``i * m_i`` odd for some ``i``;
    case 3: otherwise, ``h_nu(q) prod_{i odd} q^{m_i/2 - 1} prod_{i even} r_{q, m_i}``
    with ``h_nu(q) = ((q+1)^rho + (q-1)^rho) / 2`` and ``rho`` the number of
    odd ``i`` with ``m_i > 0``.
    """
    if q % 2 == 0:
        raise ValueError("three-case form is stated for odd q only")
    mult = nu.multiplicities
    full = real_type_count(q, nu)
    odd = {i: m for i, m in mult.items() if i % 2}
    if not odd:
        return full
    if any(m % 2 for m in odd.values()):
        return _half(full)
    rho = len(odd)
    h = _half((q + 1) ** rho + (q - 1) ** rho)
    out = h
    for i, m in mult.items():
        out *= q ** (m // 2 - 1) if i % 2 else r(q, m)
    return out


def pgl_type_count(q: int, nu: Partition) -> int:
    """Real classes of type ``nu`` in PGL(n, q); also the PGU(n, q) count."""
    full = real_type_count(q, nu)
    if q % 2 and any(m % 2 for m in nu.multiplicities.values()):
        return _half(full)
    return full


@dataclass(frozen=True)
class CountReport:
    q: int
    n: int
    gl_real: int
    in_sl: int
    pgl_real: int
    pgu_real: int
    u_real: int
    in_su: int
    per_type: dict[Partition, tuple[int, int, int]] = field(compare=False)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "gl_real": self.gl_real,
            "in_sl": self.in_sl,
            "pgl_real": self.pgl_real,
            "pgu_real": self.pgu_real,
            "u_real": self.u_real,
            "in_su": self.in_su,
            "per_type": [
                {"partition": list(nu.parts), "real_type": a, "sl_type": b, "pgl_type": c}
                for nu, (a, b, c) in self.per_type.items()
            ],
        }


def totals(q: int, n: int) -> CountReport:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > TOTALS_GUARD:
        raise GuardError(f"n = {n} exceeds totals guard {TOTALS_GUARD}")
    per_type = {}
    gl = sl = pgl = 0
    for nu in iter_partitions(n):
        row = (real_type_count(q, nu), sl_type_count(q, nu), pgl_type_count(q, nu))
        per_type[nu] = row
        gl += row[0]
        sl += row[1]
        pgl += row[2]
    if pgl != sl:
        raise ConsistencyError(f"PGL real count {pgl} != real-in-SL count {sl} for q={q}, n={n}")
    # unitary side coincides type by type: same polynomial sequences
    return CountReport(q, n, gl, sl, pgl, pgl, gl, sl, per_type)


# -- class types and Z-orbits -------------------------------------------


@dataclass(frozen=True)
class ClassType:
    """Polynomial sequence ``(f_1, f_2, ...)`` with trailing ones dropped."""

    seq: tuple[MonicPoly, ...]

    def __post_init__(self):
        seq = list(self.seq)
        while seq and seq[-1].degree == 0:
            seq.pop()
        if len({f.field for f in seq}) > 1:
            raise ValueError("mixed fields in class type")
        object.__setattr__(self, "seq", tuple(seq))

    @property
    def n(self) -> int:
        return sum(i * f.degree for i, f in enumerate(self.seq, start=1))

    @property
    def type(self) -> Partition:
        return Partition.from_multiplicities(
            {i: f.degree for i, f in enumerate(self.seq, start=1) if f.degree}
        )

    def charpoly(self, field: Field) -> MonicPoly:
        out = MonicPoly.one(field)
        for i, f in enumerate(self.seq, start=1):
            out = out * f**i
        return out

    def is_real(self) -> bool:
        return all(reciprocal(f) == f for f in self.seq)

    def is_zeta_real(self, zeta: int) -> bool:
        return all(zeta_reciprocal(f, zeta) == f for f in self.seq)

    def act(self, eta: int) -> ClassType:
        return ClassType(tuple(eta_act(eta, f) for f in self.seq))

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.seq) + ")"


@dataclass(frozen=True)
class OrbitProfile:
    orbit_size: int
    real_members: int
    zeta_real_members: int


def scalar_group(Z) -> tuple[int, ...]:
    """Codes of Z: a NormOneGroup, or the nonzero elements of a Field."""
    if isinstance(Z, NormOneGroup):
        return Z.elements
    if isinstance(Z, Field):
        return Z.nonzero
    raise TypeError("Z must be a Field or NormOneGroup")


def orbit(seq: ClassType, Z) -> list[ClassType]:
    seen = {}
    for eta in scalar_group(Z):
        member = seq.act(eta)
        seen.setdefault(member, None)
    return list(seen)


def orbit_profile(seq: ClassType | Sequence[MonicPoly], zeta, Z) -> OrbitProfile:
    """Full Z-orbit of a class type, counting real and zeta-real members."""
    if not isinstance(seq, ClassType):
        seq = ClassType(tuple(seq))
    ambient = Z.ambient if isinstance(Z, NormOneGroup) else Z
    if any(f.field != ambient for f in seq.seq):
        raise ValueError("class type lives over a different field than Z")
    z = ambient(zeta).code
    members = orbit(seq, Z)
    real = sum(1 for m in members if m.is_real())
    zreal = sum(1 for m in members if m.is_zeta_real(z))
    return OrbitProfile(len(members), real, zreal)
