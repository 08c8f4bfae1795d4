"""Brute-force census of GL(n, q) and U(n, q): classes, realness, quotients.

Nothing here consults the closed-form counts.  Matrices hold field codes;
batched products go through dense add/mul tables so a whole group can be
conjugated by one element in a handful of numpy gathers.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .count import ClassType
from .errors import ConsistencyError, GuardError, guard
from .ff import Field, field_of_order, norm_one_subgroup, prime_power
from .poly import (
    MonicPoly,
    canonical_zeta,
    monic_irreducibles,
    polydivmod,
    polymul,
    reciprocal,
    tilde_conjugate,
)

CENSUS_GUARD = 2 * 10**6
KINDS = ("general_linear", "unitary")


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    n: int
    q: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        prime_power(self.q)

    @property
    def field(self) -> Field:
        """Matrix entries live here: F_q for GL, F_{q^2} for U."""
        return field_of_order(self.q if self.kind == "general_linear" else self.q**2)

    @property
    def order(self) -> int:
        q, n = self.q, self.n
        out = 1
        if self.kind == "general_linear":
            for i in range(n):
                out *= q**n - q**i
        else:
            out = q ** (n * (n - 1) // 2)
            for i in range(1, n + 1):
                out *= q**i - (-1) ** i
        return out

    @property
    def center(self):
        """Scalars: F_q^x (as a Field) for GL, C_{q+1} for U."""
        if self.kind == "general_linear":
            return self.field
        return norm_one_subgroup(self.q)

    @property
    def center_codes(self) -> tuple[int, ...]:
        Z = self.center
        return Z.nonzero if isinstance(Z, Field) else Z.elements

    def label(self) -> str:
        return f"{'GL' if self.kind == 'general_linear' else 'U'}({self.n},{self.q})"


@dataclass(frozen=True)
class GroupElement:
    matrix: tuple[int, ...]  # row-major field codes
    canonical_key: int

    def rows(self, n: int) -> list[list[int]]:
        return [list(self.matrix[i * n:(i + 1) * n]) for i in range(n)]


@dataclass(frozen=True)
class CensusClass:
    representative: GroupElement
    size: int
    class_type: ClassType
    index: int
    is_real: Optional[bool] = None
    det_one: Optional[bool] = None


@dataclass(frozen=True)
class CensusReport:
    spec: GroupSpec
    num_classes: int
    real_classes: int
    real_in_det_one: int
    projective_real: int

    def to_dict(self) -> dict:
        return {
            "kind": self.spec.kind,
            "n": self.spec.n,
            "q": self.spec.q,
            "order": self.spec.order,
            "num_classes": self.num_classes,
            "real_classes": self.real_classes,
            "real_in_det_one": self.real_in_det_one,
            "projective_real": self.projective_real,
        }


# -- scalar matrix helpers (pure python, used per representative) -------


def mat_mul(F: Field, A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = F.add(acc, F.mul(A[i][k], B[k][j]))
            row.append(acc)
        out.append(row)
    return out


def rank(F: Field, A: list[list[int]]) -> int:
    M = [list(r) for r in A]
    n_rows = len(M)
    n_cols = len(M[0]) if M else 0
    rk = 0
    for c in range(n_cols):
        piv = next((r for r in range(rk, n_rows) if M[r][c]), None)
        if piv is None:
            continue
        M[rk], M[piv] = M[piv], M[rk]
        inv = F.inv(M[rk][c])
        M[rk] = [F.mul(inv, x) for x in M[rk]]
        for r in range(n_rows):
            if r != rk and M[r][c]:
                f = M[r][c]
                M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[rk])]
        rk += 1
    return rk


def det(F: Field, A: list[list[int]]) -> int:
    M = [list(r) for r in A]
    n = len(M)
    out = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            out = F.neg(out)
        out = F.mul(out, M[c][c])
        inv = F.inv(M[c][c])
        for r in range(c + 1, n):
            if M[r][c]:
                f = F.mul(M[r][c], inv)
                M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[c])]
    return out


def charpoly(F: Field, A: list[list[int]]) -> MonicPoly:
    """``det(tI - A)`` by permutation expansion over F[t] (small n only)."""
    n = len(A)
    total = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = [1]
        for i, j in enumerate(perm):
            entry = [F.neg(A[i][j]), 1] if i == j else [F.neg(A[i][j])]
            term = polymul(F, term, entry)
        if inversions % 2:
            term = [F.neg(c) for c in term]
        for e, c in enumerate(term):
            total[e] = F.add(total[e], c)
    assert total[n] == 1
    return MonicPoly(F, tuple(total[:n]))


def poly_at_matrix(F: Field, full: list[int], A: list[list[int]]) -> list[list[int]]:
    n = len(A)
    acc = [[0] * n for _ in range(n)]
    for c in reversed(full):
        acc = mat_mul(F, acc, A)
        for i in range(n):
            acc[i][i] = F.add(acc[i][i], c)
    return acc


def frobenius_matrix(F: Field, A: list[list[int]], q: int) -> list[list[int]]:
    """``F((a_ij)) = (a_ij^q)``."""
    return [[F.pow(x, q) for x in row] for row in A]


def twisted_frobenius(F: Field, A: list[list[int]], q: int) -> list[list[int]]:
    """``(a_ji^q)^{-1}``; its fixed points in GL(n, q^2) form U(n, q)."""
    n = len(A)
    T = [[F.pow(A[j][i], q) for j in range(n)] for i in range(n)]
    return _inverse(F, T)


def _inverse(F: Field, A: list[list[int]]) -> list[list[int]]:
    n = len(A)
    M = [list(A[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        inv = F.inv(M[c][c])
        M[c] = [F.mul(inv, x) for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


# -- enumeration --------------------------------------------------------


def _check_guard(spec: GroupSpec):
    limit = guard(CENSUS_GUARD)
    if spec.order > limit:
        raise GuardError(f"|{spec.label()}| = {spec.order} exceeds census guard {limit}")


def _columns_gl(F: Field, n: int):
    vectors = list(itertools.product(F.ordered, repeat=n))

    def extend(cols, span):
        if len(cols) == n:
            yield cols
            return
        for v in vectors:
            if v in span:
                continue
            new_span = {tuple(F.add(s[k], F.mul(c, v[k])) for k in range(n)) for s in span for c in F.ordered}
            yield from extend(cols + [v], new_span)

    yield from extend([], {(0,) * n})


def _columns_unitary(F: Field, n: int, q: int):
    def herm(v, w):
        acc = 0
        for a, b in zip(v, w):
            acc = F.add(acc, F.mul(F.pow(a, q), b))
        return acc

    units = [v for v in itertools.product(F.ordered, repeat=n) if herm(v, v) == 1]

    def extend(cols):
        if len(cols) == n:
            yield cols
            return
        for v in units:
            if all(herm(c, v) == 0 for c in cols):
                yield from extend(cols + [v])

    yield from extend([])


def _key_weights(spec: GroupSpec) -> np.ndarray:
    Q = spec.field.order
    n2 = spec.n * spec.n
    if Q**n2 >= 2**62:
        raise GuardError(f"{spec.label()} matrices do not fit a 64-bit key")
    return np.array([Q ** (n2 - 1 - i) for i in range(n2)], dtype=np.int64)


def enumerate_group(spec: GroupSpec) -> list[GroupElement]:
    """All elements of GL(n, q) or U(n, q), sorted by canonical key."""
    return [GroupElement(tuple(int(x) for x in row), int(k)) for row, k in zip(_data(spec).flat, _data(spec).keys)]


class _GroupData:
    """Enumerated group plus its class partition, computed once per spec."""

    def __init__(self, spec: GroupSpec):
        _check_guard(spec)
        self.spec = spec
        F = self.F = spec.field
        n = spec.n
        self.add, self.mul, _, _ = F.tables
        self.weights = _key_weights(spec) if n else np.zeros(0, dtype=np.int64)
        if n == 0:
            mats = np.zeros((1, 0, 0), dtype=np.int64)
        else:
            if spec.kind == "general_linear":
                cols = _columns_gl(F, n)
            else:
                cols = _columns_unitary(F, n, spec.q)
            # column lists -> row-major matrices
            mats = np.array([np.array(c, dtype=np.int64).T for c in cols], dtype=np.int64)
        if len(mats) != spec.order:
            raise ConsistencyError(f"enumerated {len(mats)} elements of {spec.label()}, expected {spec.order}")
        keys = self.keys_of(mats)
        order = np.argsort(keys, kind="stable")
        self.mats = mats[order]
        self.keys = keys[order]
        self.flat = self.mats.reshape(len(self.mats), n * n)
        if spec.kind == "unitary" and n:
            self._verify_unitary()
        self.inv = self._inverses()
        self.class_of, self.class_members = self._classes()

    def keys_of(self, mats: np.ndarray) -> np.ndarray:
        if self.spec.n == 0:
            return np.zeros(len(mats), dtype=np.int64)
        return mats.reshape(len(mats), -1) @ self.weights

    def index_of(self, keys: np.ndarray) -> np.ndarray:
        pos = np.searchsorted(self.keys, keys)
        pos = np.minimum(pos, len(self.keys) - 1)
        if not np.array_equal(self.keys[pos], keys):
            raise ConsistencyError("product left the group")
        return pos

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        n = self.spec.n
        shape = np.broadcast_shapes(A.shape, B.shape)
        C = np.empty(shape, dtype=np.int64)
        add, mul = self.add, self.mul
        for i in range(n):
            for j in range(n):
                acc = mul[A[..., i, 0], B[..., 0, j]]
                for k in range(1, n):
                    acc = add[acc, mul[A[..., i, k], B[..., k, j]]]
                C[..., i, j] = acc
        return C

    def _verify_unitary(self):
        q = self.spec.q
        F = self.F
        powq = np.array([F.pow(a, q) for a in range(F.order)], dtype=np.int64)
        conj_t = np.swapaxes(powq[self.mats], 1, 2)
        prod = self.matmul(conj_t, self.mats)
        eye = np.eye(self.spec.n, dtype=np.int64)
        if not (prod == eye).all():
            raise ConsistencyError("non-unitary matrix produced")

    def _inverses(self) -> np.ndarray:
        """Inverse indices via powers: ``g^{k+1} = 1`` implies ``g^{-1} = g^k``."""
        N = len(self.mats)
        if self.spec.n == 0:
            return np.zeros(1, dtype=np.int64)
        eye = np.eye(self.spec.n, dtype=np.int64)
        ident = int(self.keys_of(eye[None])[0])
        inv = np.full(N, -1, dtype=np.int64)
        power = self.mats.copy()
        prev_keys = np.full(N, ident, dtype=np.int64)
        pending = np.arange(N)
        while len(pending):
            pk = self.keys_of(power)
            done = pk == ident
            inv[pending[done]] = self.index_of(prev_keys[done])
            keep = ~done
            pending = pending[keep]
            prev_keys = pk[keep]
            power = self.matmul(power[keep], self.mats[pending])
        return inv

    def _classes(self):
        N = len(self.mats)
        class_of = np.full(N, -1, dtype=np.int64)
        members = []
        if self.spec.n == 0:
            class_of[0] = 0
            return class_of, [np.array([0])]
        inv_mats = self.mats[self.inv]
        for idx in range(N):
            if class_of[idx] >= 0:
                continue
            x = self.mats[idx]
            conj = self.matmul(self.matmul(self.mats, x), inv_mats)
            orbit = np.unique(self.index_of(self.keys_of(conj)))
            if (class_of[orbit] >= 0).any():
                raise ConsistencyError("conjugation orbits overlap")
            class_of[orbit] = len(members)
            members.append(orbit)
        return class_of, members

    def scalar_times(self, eta: int, idx: int) -> int:
        m = self.mul[eta, self.mats[idx]]
        return int(self.index_of(self.keys_of(m[None]))[0])

    def element(self, idx: int) -> GroupElement:
        return GroupElement(tuple(int(x) for x in self.flat[idx]), int(self.keys[idx]))


@functools.lru_cache(maxsize=32)
def _data(spec: GroupSpec) -> _GroupData:
    return _GroupData(spec)


# -- classes and invariants ----------------------------------------------


@functools.lru_cache(maxsize=None)
def _irreducibles(F: Field, n: int) -> list[MonicPoly]:
    return monic_irreducibles(F, n)


def class_type_of(g: GroupElement, spec: GroupSpec) -> ClassType:
    """Polynomial sequence of ``g`` from elementary divisors.

    For each irreducible ``p`` dividing the characteristic polynomial, the
    kernel dimensions of ``p(g)^k`` give the conjugate of the Jordan block
    partition ``mu_p``; then ``f_i = prod_p p^{m_i(mu_p)}``.
    """
    F = spec.field
    n = spec.n
    if n == 0:
        return ClassType(())
    A = g.rows(n)
    chi = charpoly(F, A)
    rest = chi.full()
    f: dict[int, MonicPoly] = {}
    for p in _irreducibles(F, n):
        if len(rest) == 1:
            break
        e = 0
        while len(rest) - 1 >= p.degree:
            quot, rem = polydivmod(F, rest, p.full())
            if rem != [0]:
                break
            rest = quot
            e += 1
        if not e:
            continue
        P = poly_at_matrix(F, p.full(), A)
        Pk = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        dims = [0]
        for _ in range(e):
            Pk = mat_mul(F, Pk, P)
            dims.append(n - rank(F, Pk))
        if dims[-1] != e * p.degree:
            raise ConsistencyError("generalised eigenspace dimension mismatch")
        conj = [(dims[k] - dims[k - 1]) // p.degree for k in range(1, e + 1)] + [0]
        for i in range(1, e + 1):
            m_i = conj[i - 1] - conj[i]
            if m_i:
                f[i] = f.get(i, MonicPoly.one(F)) * p**m_i
    if len(rest) != 1:
        raise ConsistencyError(f"characteristic polynomial {chi} not fully factored")
    top = max(f, default=0)
    ct = ClassType(tuple(f.get(i, MonicPoly.one(F)) for i in range(1, top + 1)))
    if ct.charpoly(F) != chi or ct.n != n:
        raise ConsistencyError(f"class type {ct} does not reproduce {chi}")
    return ct


def conjugacy_classes(spec: GroupSpec) -> list[CensusClass]:
    """Classes ordered by smallest member key; each representative is that member."""
    data = _data(spec)
    out = []
    for c, members in enumerate(data.class_members):
        rep = data.element(int(members[0]))
        out.append(CensusClass(rep, len(members), class_type_of(rep, spec), c))
    return out


def real_flags(classes: list[CensusClass], spec: GroupSpec) -> list[CensusClass]:
    """Annotate realness (inverse in the class) and determinant one."""
    data = _data(spec)
    F = spec.field
    out = []
    for cl in classes:
        idx = int(data.class_members[cl.index][0])
        real = bool(data.class_of[data.inv[idx]] == cl.index)
        d_one = spec.n == 0 or det(F, cl.representative.rows(spec.n)) == 1
        out.append(replace(cl, is_real=real, det_one=d_one))
    return out


def _class_orbits(spec: GroupSpec) -> list[list[int]]:
    """Partition of class indices into orbits under multiplication by scalars."""
    data = _data(spec)
    nclass = len(data.class_members)
    seen = [-1] * nclass
    orbits = []
    for c in range(nclass):
        if seen[c] >= 0:
            continue
        idx = int(data.class_members[c][0])
        orb = sorted({int(data.class_of[data.scalar_times(eta, idx)]) for eta in spec.center_codes})
        for d in orb:
            seen[d] = len(orbits)
        orbits.append(orb)
    return orbits


def projective_classes(spec: GroupSpec) -> list[tuple[list[int], bool]]:
    """Classes of G/Z as scalar orbits of G-classes, each with its realness.

    ``xZ`` is real iff ``x^{-1}`` is conjugate to ``eta x`` for some scalar
    ``eta``, i.e. iff the class of ``x^{-1}`` lies in the orbit of ``x``.
    """
    data = _data(spec)
    out = []
    for orb in _class_orbits(spec):
        idx = int(data.class_members[orb[0]][0])
        out.append((orb, int(data.class_of[data.inv[idx]]) in orb))
    return out


def projective_real_count(spec: GroupSpec) -> int:
    return sum(1 for _, real in projective_classes(spec) if real)


def zeta_real_classes(spec: GroupSpec, zeta: Optional[int] = None) -> set[int]:
    """Indices of classes with ``g`` conjugate to ``zeta g^{-1}`` (odd q)."""
    data = _data(spec)
    if zeta is None:
        zeta = canonical_zeta(spec.center)
    out = set()
    for c, members in enumerate(data.class_members):
        idx = int(members[0])
        if int(data.class_of[data.scalar_times(zeta, int(data.inv[idx]))]) == c:
            out.add(c)
    return out


def real_lift_failures(spec: GroupSpec) -> list[list[int]]:
    """Real classes of G/Z with no real or zeta-real lift (expected empty)."""
    data = _data(spec)
    real = {c for c in range(len(data.class_members)) if data.class_of[data.inv[int(data.class_members[c][0])]] == c}
    zreal = zeta_real_classes(spec) if spec.q % 2 else set()
    return [orb for orb, is_real in projective_classes(spec) if is_real and not (set(orb) & (real | zreal))]


def realness_exceptions(spec: GroupSpec) -> list[CensusClass]:
    """Classes where realness disagrees with 'every f_i self-reciprocal'."""
    return [
        cl
        for cl in real_flags(conjugacy_classes(spec), spec)
        if cl.is_real != all(reciprocal(f) == f for f in cl.class_type.seq)
    ]


def census_report(spec: GroupSpec) -> CensusReport:
    classes = real_flags(conjugacy_classes(spec), spec)
    F = spec.field
    n = spec.n
    if sum(cl.size for cl in classes) != spec.order:
        raise ConsistencyError("class sizes do not sum to the group order")
    minus_one_n = F.pow(F.neg(1), n)
    for cl in classes:
        seq = cl.class_type.seq
        if spec.kind == "unitary" and any(tilde_conjugate(f, spec.q) != f for f in seq):
            raise ConsistencyError(f"unitary class type {cl.class_type} is not self-conjugate")
        if not cl.is_real:
            continue
        if not all(reciprocal(f) == f for f in seq):
            raise ConsistencyError(f"real class with non-self-reciprocal type {cl.class_type}")
        if cl.det_one:
            acc = 1
            for i, f in enumerate(seq, start=1):
                acc = F.mul(acc, F.pow(f.constant, i))
            if acc != minus_one_n:
                raise ConsistencyError(f"det-one real class {cl.class_type} has wrong constant term")
    return CensusReport(
        spec,
        num_classes=len(classes),
        real_classes=sum(1 for cl in classes if cl.is_real),
        real_in_det_one=sum(1 for cl in classes if cl.is_real and cl.det_one),
        projective_real=projective_real_count(spec),
    )
