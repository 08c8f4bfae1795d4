"""Cross-layer checks: closed forms vs enumeration vs series vs census."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import census as cen
from .count import pgl_type_count, real_type_count, sl_type_count, sl_type_count_raw
from .ff import embedding, field_of_order, norm_one_subgroup, two_part
from .partition import iter_partitions
from .poly import (
    MonicPoly,
    canonical_zeta,
    count_self_reciprocal,
    count_self_reciprocal_compact,
    enumerate_polys,
    eta_act,
    in_power_ring,
    non_squares,
    tilde_conjugate,
)
from .series import (
    IntSeries,
    e_of,
    gen_even_types,
    gen_real_classes,
    gen_theorem,
    product,
)

DEFAULT_QS = (2, 3, 4, 5, 7, 8, 9)
DEFAULT_MAX_N = 15
DEFAULT_ORDER = 24
DEFAULT_CENSUS = (
    ("general_linear", 2, 2),
    ("general_linear", 2, 3),
    ("general_linear", 2, 4),
    ("general_linear", 2, 5),
    ("general_linear", 3, 2),
    ("general_linear", 3, 3),
    ("unitary", 1, 3),
    ("unitary", 2, 2),
    ("unitary", 2, 3),
    ("unitary", 3, 2),
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_dict(self) -> dict:
        # timings stay out of serialized reports so identical runs give identical bytes
        return {"check": self.name, "passed": self.passed, "detail": self.detail}


def _run(name: str, fn: Callable[[], list[str]]) -> Check:
    """Run ``fn`` returning a list of failure descriptions."""
    t0 = time.perf_counter()
    failures = fn()
    dt = time.perf_counter() - t0
    detail = "; ".join(failures[:3]) + (f" (+{len(failures) - 3} more)" if len(failures) > 3 else "")
    return Check(name, not failures, detail, dt)


# -- partition-sum oracles ---------------------------------------------


def partition_sums(q: int, N: int, count: Callable, keep: Callable = lambda nu: True) -> list[int]:
    return [sum(count(q, nu) for nu in iter_partitions(n) if keep(nu)) for n in range(N + 1)]


def all_even(nu) -> bool:
    return all(m % 2 == 0 for m in nu.multiplicities.values())


def odd_parts_even(nu) -> bool:
    return all(m % 2 == 0 for i, m in nu.multiplicities.items() if i % 2)


def _diff(label: str, got: Iterable[int], want: Iterable[int]) -> list[str]:
    return [f"{label} u^{n}: {a} != {b}" for n, (a, b) in enumerate(zip(got, want)) if a != b]


# -- polynomial layer --------------------------------------------------


def self_reciprocal_failures(q: int, max_d: int) -> list[str]:
    F = field_of_order(q)
    out = []
    for d in range(max_d + 1):
        got = len(enumerate_polys(F, d, "self_reciprocal"))
        if got != count_self_reciprocal(q, d):
            out.append(f"r_{{{q},{d}}}: enumerated {got}, formula {count_self_reciprocal(q, d)}")
        if count_self_reciprocal(q, d) != count_self_reciprocal_compact(q, d):
            out.append(f"compact form disagrees at q={q}, d={d}")
    return out


def zeta_unitary_failures(q: int, degrees: Iterable[int]) -> list[str]:
    """Every non-square zeta in C_{q+1}: zeta-self-reciprocal count in U_q[t]."""
    C = norm_one_subgroup(q)
    F = C.ambient
    out = []
    for z in non_squares(C):
        for d in degrees:
            polys = enumerate_polys(F, d, "self_conjugate", "zeta_self_reciprocal", zeta=z)
            want = count_self_reciprocal(q, d) if d % 2 == 0 else 0
            if len(polys) != want:
                out.append(f"q={q} zeta={z} d={d}: {len(polys)} != {want}")
            for f in polys:
                out.extend(_coefficient_condition_failures(f, q, z))
    return out


def _coefficient_condition_failures(f: MonicPoly, q: int, z: int) -> list[str]:
    F = f.field
    d = f.degree
    a = f.full()
    out = []
    if F.mul(a[0], a[0]) != F.pow(z, d):
        out.append(f"{f}: a_0^2 != zeta^d")
    for i in range(1, d):
        if a[i] != F.mul(F.mul(a[0], a[d - i]), F.pow(z, -i)):
            out.append(f"{f}: a_{i} != a_0 a_{d - i} zeta^-{i}")
        if a[d - i] != F.mul(F.pow(a[i], q), a[0]):
            out.append(f"{f}: a_{d - i} != a_{i}^q a_0")
    return out


def set_equality_failures(q: int, max_d: int) -> list[str]:
    """Self-reciprocal members of U_q[t] are exactly those of M_q[t]."""
    small = field_of_order(q)
    big = field_of_order(q * q)
    emb = embedding(small, big)
    out = []
    for d in range(max_d + 1):
        inside = {f.coeffs for f in enumerate_polys(big, d, "self_conjugate", "self_reciprocal")}
        base = {tuple(emb[c] for c in f.coeffs) for f in enumerate_polys(small, d, "self_reciprocal")}
        if inside != base:
            out.append(f"q={q} d={d}: {len(inside)} unitary vs {len(base)} linear")
    return out


# -- Z-orbits of single polynomials --------------------------------------


def orbit_pattern_failures(q: int, max_d: int) -> list[str]:
    """Odd q: (|[f]_T|, |[f]_S|) trichotomy; even q: at most one T member per orbit."""
    C = norm_one_subgroup(q)
    F = C.ambient
    b = two_part(q + 1)
    out = []
    zetas = [canonical_zeta(C)] if q % 2 else [None]
    for z in zetas:
        for d in range(1, max_d + 1):
            T = set(enumerate_polys(F, d, "self_conjugate", "self_reciprocal"))
            S = set(enumerate_polys(F, d, "self_conjugate", "zeta_self_reciprocal", zeta=z)) if z else set()
            for f in sorted(T | S, key=MonicPoly.sort_key):
                orb = {eta_act(eta, f) for eta in C.elements}
                if any(tilde_conjugate(g, q) != g for g in orb):
                    out.append(f"orbit of {f} leaves U_q[t]")
                pair = (len(orb & T), len(orb & S))
                if z is None:
                    if pair[0] != 1:
                        out.append(f"q={q} {f}: |[f]_T| = {pair[0]}")
                    continue
                if d % 2:
                    want = (2, 0)
                elif in_power_ring(f, b):
                    want = (1, 1)
                else:
                    want = (2, 0) if f in T else (0, 2)
                if pair != want:
                    out.append(f"q={q} {f}: got {pair}, expected {want}")
    return out


# -- formula and series layers ------------------------------------------


def three_case_failures(q: int, max_n: int) -> list[str]:
    out = []
    for n in range(max_n + 1):
        for nu in iter_partitions(n):
            a, b = sl_type_count_raw(q, nu), sl_type_count(q, nu)
            if a != b:
                out.append(f"q={q} {nu}: three-case {a} != two-case {b}")
    return out


def theorem_formula_failures(q: int, max_n: int) -> list[str]:
    pgl = partition_sums(q, max_n, pgl_type_count)
    sl = partition_sums(q, max_n, sl_type_count)
    gen = gen_theorem(q, max_n).coeffs
    return _diff(f"q={q} pgl vs sl", pgl, sl) + _diff(f"q={q} sl vs series", sl, gen)


def real_series_failures(q: int, N: int) -> list[str]:
    return _diff(f"q={q} real", gen_real_classes(q, N).coeffs, partition_sums(q, N, real_type_count))


def even_series_failures(q: int, N: int) -> list[str]:
    """All-even-multiplicity sums against their product form.

    For odd q that product is :func:`gen_even_types`; for even q,
    ``r_{q,2k} = q^k`` and the product is ``prod 1 / (1 - q u^{2i})`` instead.
    """
    sums = partition_sums(q, N, real_type_count, all_even)
    if q % 2:
        return _diff(f"q={q} even", gen_even_types(q, N).coeffs, sums)
    one = IntSeries.one(N)
    prod = product(N, lambda i: one / IntSeries.binomial(N, 1, 2 * i, -q))
    return _diff(f"q={q} even", prod.coeffs, sums)


def _geo_over(N: int, q: int, e: int, numer: IntSeries) -> IntSeries:
    return numer / IntSeries.binomial(N, 1, e, -q)


def series_identity_checks(q: int, N: int) -> Iterator[tuple[str, IntSeries, IntSeries]]:
    """Named ``(lhs, rhs)`` pairs from the odd-q generating-function derivation."""
    B = lambda e, c=1: IntSeries.binomial(N, 1, e, c)  # noqa: E731

    # odd-index factor with and without the (q-1)/(q+1) weight
    for i in range(1, (N + 2) // 4 + 1):
        e = 4 * i - 2
        lhs = IntSeries.from_terms(N, ((e * k, count_self_reciprocal(q, 2 * k)) for k in range(N // e + 1)))
        yield f"odd-index factor i={i}", lhs, _geo_over(N, q, e, B(e))
        weighted = IntSeries.from_terms(
            N, [(0, 1)] + [(e * k, q**k - q ** (k - 1)) for k in range(1, N // e + 1)]
        )
        yield f"weighted odd-index factor i={i}", weighted, _geo_over(N, q, e, B(e, -1))

    yield (
        "(1+u^2i)^2 (1-u^(4i-2)) collapse",
        product(N, lambda i: B(2 * i) ** 2 * B(4 * i - 2, -1)),
        product(N, lambda i: B(2 * i)),
    )
    firstpart = product(
        N,
        lambda i: IntSeries.from_terms(N, ((2 * i * k, count_self_reciprocal(q, k)) for k in range(N // (2 * i) + 1))),
    )
    yield "u -> u^2 substitution", firstpart, product(N, lambda i: B(2 * i) ** 2 / B(4 * i, -q))
    yield (
        "denominator merge",
        product(N, lambda i: B(2 * i) ** 2 / B(4 * i, -q) * B(4 * i - 2) / B(4 * i - 2, -q)),
        product(N, lambda i: B(2 * i) ** 2 * B(4 * i - 2) / B(2 * i, -q)),
    )
    yield "all-even generating function", gen_even_types(q, N), product(N, lambda i: B(2 * i) / B(2 * i, -q))

    real = gen_real_classes(q, N)
    even = gen_even_types(q, N)
    yield "pgl generating function", IntSeries(tuple(partition_sums(q, N, pgl_type_count))), (real + even).halve()

    sl_even = IntSeries(tuple(partition_sums(q, N, sl_type_count, odd_parts_even)))
    sl_odd = IntSeries(tuple(partition_sums(q, N, sl_type_count, lambda nu: not odd_parts_even(nu))))
    mixed = product(N, lambda i: B(2 * i) ** 2 * B(4 * i - 2) / B(2 * i, -q))
    yield "sl, odd parts with even multiplicity", sl_even, (mixed + even).halve()
    yield "sl, some odd part with odd multiplicity", sl_odd, (real - mixed).halve()
    yield "sl generating function", sl_even + sl_odd, gen_theorem(q, N)
    yield "second product is the all-even series", product(N, lambda i: B(e_of(q) * i) / B(2 * i, -q)), even


def series_identity_failures(q: int, N: int) -> list[str]:
    out = []
    for name, lhs, rhs in series_identity_checks(q, N):
        out.extend(_diff(f"q={q} {name}", lhs.coeffs, rhs.coeffs))
    return out


def truncation_failures(q: int, N: int) -> list[str]:
    out = []
    for gen in (gen_real_classes, gen_even_types, gen_theorem):
        out.extend(_diff(f"q={q} {gen.__name__} 2N", gen(q, 2 * N).coeffs[: N + 1], gen(q, N).coeffs))
    return out


# -- census layer --------------------------------------------------------


def census_failures(spec: cen.GroupSpec) -> list[str]:
    rep = cen.census_report(spec)
    n = spec.n
    real = gen_real_classes(spec.q, n)[n]
    common = gen_theorem(spec.q, n)[n]
    out = []
    lab = spec.label()
    if rep.real_classes != real:
        out.append(f"{lab} real {rep.real_classes} != {real}")
    if rep.real_in_det_one != common:
        out.append(f"{lab} real in det one {rep.real_in_det_one} != {common}")
    if rep.projective_real != common:
        out.append(f"{lab} projective real {rep.projective_real} != {common}")
    out.extend(f"{lab} realness criterion fails for {c.class_type}" for c in cen.realness_exceptions(spec))
    out.extend(f"{lab} real quotient class {o} has no real or zeta-real lift" for o in cen.real_lift_failures(spec))
    types = [c.class_type for c in cen.conjugacy_classes(spec)]
    if len(set(types)) != len(types):
        out.append(f"{lab} two classes share a class type")
    return out


def linear_unitary_failures(grid) -> list[str]:
    specs = {(k, n, q) for k, n, q in grid}
    out = []
    for k, n, q in sorted(specs):
        if k == "general_linear" and ("unitary", n, q) in specs:
            a = cen.census_report(cen.GroupSpec(k, n, q)).real_classes
            b = cen.census_report(cen.GroupSpec("unitary", n, q)).real_classes
            if a != b:
                out.append(f"GL({n},{q}) {a} real classes vs U({n},{q}) {b}")
    return out


def run_suite(
    qs=DEFAULT_QS, max_n: int = DEFAULT_MAX_N, order: int = DEFAULT_ORDER, census_grid=DEFAULT_CENSUS
) -> list[Check]:
    checks = []
    for q in qs:
        max_d = 3 if q >= 8 else 5
        checks.append(_run(f"self-reciprocal count q={q} d<={max_d}", lambda: self_reciprocal_failures(q, max_d)))
    for q in qs:
        if q in (2, 3):
            checks.append(_run(f"unitary/linear self-reciprocal sets q={q}", lambda: set_equality_failures(q, 4)))
    for q in qs:
        if q in (3, 5):
            checks.append(_run(f"zeta-self-reciprocal in U_q[t] q={q}", lambda: zeta_unitary_failures(q, range(1, 5))))
    for q in qs:
        if q in (2, 3, 4):
            checks.append(_run(f"Z-orbit pattern q={q}", lambda: orbit_pattern_failures(q, 4)))
    for q in qs:
        checks.append(_run(f"real-class series q={q} N={order}", lambda: real_series_failures(q, order)))
        checks.append(_run(f"all-even series q={q} N={order}", lambda: even_series_failures(q, order)))
        checks.append(_run(f"pgl = sl = theorem q={q} n<={max_n}", lambda: theorem_formula_failures(q, max_n)))
        checks.append(_run(f"truncation stability q={q} N={order}", lambda: truncation_failures(q, order)))
        if q % 2:
            checks.append(_run(f"three-case vs two-case sl q={q} n<={min(max_n, 12)}", lambda: three_case_failures(q, min(max_n, 12))))
            checks.append(_run(f"series identities q={q} N={order}", lambda: series_identity_failures(q, order)))
    for kind, n, q in census_grid:
        spec = cen.GroupSpec(kind, n, q)
        checks.append(_run(f"census {spec.label()}", lambda: census_failures(spec)))
    if census_grid:
        checks.append(_run("GL/U real-class counts agree", lambda: linear_unitary_failures(census_grid)))
    return checks
