import itertools

import pytest
from hypothesis import given, strategies as st

from realclasses.errors import GuardError
from realclasses.ff import embedding, field_of_order, make_field, norm_one_subgroup
from realclasses.poly import (
    MonicPoly,
    canonical_zeta,
    classify,
    count_self_reciprocal,
    count_self_reciprocal_compact,
    count_zeta_self_reciprocal,
    enumerate_polys,
    eta_act,
    monic_irreducibles,
    non_squares,
    polydivmod,
    polymul,
    reciprocal,
    tilde_conjugate,
    zeta_reciprocal,
)

F3 = make_field(3)
F9 = make_field(3, 2)


def poly(F, *coeffs):
    return MonicPoly.make(F, coeffs)


def roots_in(F, f):
    return [x for x in range(F.order) if f(x) == 0]


def from_roots(F, roots):
    full = [1]
    for r in roots:
        full = polymul(F, full, [F.neg(r), 1])
    return MonicPoly(F, tuple(full[:-1]))


def polys_over(F, d):
    for cs in itertools.product(F.nonzero, *[F.ordered] * (d - 1)) if d else [()]:
        yield MonicPoly(F, tuple(cs))


# -- reciprocal ---------------------------------------------------------


def test_reciprocal_example_by_hand():
    f = poly(F3, 2, 1)  # t^2 + t + 2
    assert reciprocal(f) == poly(F3, 2, 2)
    assert str(reciprocal(f)) == "t^2 + 2*t + 2"


def test_reciprocal_example_by_root_inversion():
    emb = embedding(F3, F9)
    back = {v: k for k, v in emb.items()}
    f = MonicPoly(F9, tuple(emb[c] for c in (2, 1)))
    rts = roots_in(F9, f)
    assert len(rts) == 2
    g = from_roots(F9, [F9.inv(r) for r in rts])
    assert tuple(back[c] for c in g.coeffs) == (2, 2)


def test_reciprocal_palindrome_and_errors():
    f = poly(F3, 1, 0)
    assert reciprocal(f) == f
    with pytest.raises(ValueError):
        poly(F3, 0, 1)


@pytest.mark.parametrize("q", [3, 4, 5, 9])
def test_reciprocal_involution_and_roots(q):
    F = field_of_order(q)
    for d in range(4):
        for f in polys_over(F, d):
            g = reciprocal(f)
            assert reciprocal(g) == f
            assert sorted(roots_in(F, g)) == sorted(F.inv(r) for r in roots_in(F, f))


# -- tilde conjugate ----------------------------------------------------


def test_tilde_fixes_self_reciprocal_base_polys():
    emb = embedding(F3, F9)
    for f in enumerate_polys(F3, 3, "self_reciprocal"):
        g = MonicPoly(F9, tuple(emb[c] for c in f.coeffs))
        assert tilde_conjugate(g, 3) == g


def test_tilde_degree_one():
    for a0 in F9.nonzero:
        f = MonicPoly(F9, (a0,))
        assert tilde_conjugate(f, 3).coeffs == (F9.pow(a0, -3),)


def test_tilde_is_an_involution_exhaustive():
    for d in range(4):
        for f in polys_over(F9, d):
            assert tilde_conjugate(tilde_conjugate(f, 3), 3) == f


def test_tilde_roots():
    for f in polys_over(F9, 2):
        want = sorted(F9.inv(F9.pow(r, 3)) for r in roots_in(F9, f))
        assert sorted(roots_in(F9, tilde_conjugate(f, 3))) == want


def test_tilde_needs_quadratic_extension():
    with pytest.raises(ValueError):
        tilde_conjugate(poly(F3, 1), 3)


# -- zeta reciprocal ----------------------------------------------------


def test_zeta_one_is_reciprocal():
    for f in polys_over(F9, 3):
        assert zeta_reciprocal(f, 1) == reciprocal(f)


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_no_zeta_fixed_points_in_degree_one(q):
    F = field_of_order(q)
    for z in non_squares(F):
        assert all(zeta_reciprocal(f, z) != f for f in polys_over(F, 1))


def test_zeta_two_over_f3_degree_two():
    cands = list(polys_over(F3, 2))
    assert len(cands) == 6
    fixed = [f for f in cands if zeta_reciprocal(f, 2) == f]
    assert len(fixed) == 4 == count_self_reciprocal(3, 2)


def test_zeta_reciprocal_roots():
    z = canonical_zeta(norm_one_subgroup(3))
    for f in polys_over(F9, 2):
        want = sorted(F9.div(z, r) for r in roots_in(F9, f))
        assert sorted(roots_in(F9, zeta_reciprocal(f, z))) == want


# -- eta action ---------------------------------------------------------


def test_eta_identity_and_degree_one():
    for f in polys_over(F9, 2):
        assert eta_act(1, f) == f
    for eta in F9.nonzero:
        for a0 in F9.nonzero:
            assert eta_act(eta, MonicPoly(F9, (a0,))).coeffs == (F9.mul(eta, a0),)
    with pytest.raises(ValueError):
        eta_act(0, poly(F9, 1))


def test_eta_group_action_axiom():
    C = norm_one_subgroup(3)
    for d in range(3):
        for f in polys_over(F9, d):
            for e1 in C.elements:
                for e2 in C.elements:
                    assert eta_act(F9.mul(e1, e2), f) == eta_act(e1, eta_act(e2, f))


def test_eta_multiplies_roots():
    for f in polys_over(F9, 2):
        for eta in F9.nonzero:
            want = sorted(F9.mul(eta, r) for r in roots_in(F9, f))
            assert sorted(roots_in(F9, eta_act(eta, f))) == want


# -- classify -----------------------------------------------------------


def test_classify_examples():
    assert classify(poly(F3, 1, 0)).self_reciprocal
    C = norm_one_subgroup(3)
    conj = [f for f in polys_over(F9, 1) if classify(f, 3).self_conjugate]
    assert len(list(polys_over(F9, 1))) == 8
    assert len(conj) == 4
    assert {f.coeffs[0] for f in conj} == set(C.elements)
    z = canonical_zeta(C)
    for d in (1, 3):
        conj_d = [f for f in polys_over(F9, d) if tilde_conjugate(f, 3) == f]
        assert conj_d and not any(classify(f, 3, z).zeta_self_reciprocal for f in conj_d)


def test_classify_degree_zero():
    c = classify(MonicPoly.one(F9), 3, canonical_zeta(norm_one_subgroup(3)))
    assert c.self_reciprocal and c.self_conjugate and c.zeta_self_reciprocal


def test_self_conjugate_and_reciprocal_means_base_coefficients():
    base = set(embedding(F3, F9).values())
    for d in range(4):
        for f in polys_over(F9, d):
            c = classify(f, 3)
            if c.self_conjugate and c.self_reciprocal:
                assert set(f.coeffs) <= base


# -- counts -------------------------------------------------------------


def test_count_examples():
    assert count_self_reciprocal(3, 3) == 6
    assert count_self_reciprocal(2, 4) == 4
    assert count_self_reciprocal(5, 0) == 1
    assert count_zeta_self_reciprocal(3, 2, "general_linear") == 4
    assert count_zeta_self_reciprocal(3, 2, "unitary") == 4
    assert count_zeta_self_reciprocal(3, 3, "unitary") == 0
    assert count_zeta_self_reciprocal(5, 4, "unitary") == 30 == (5 + 1) * 5
    with pytest.raises(ValueError):
        count_zeta_self_reciprocal(4, 2)


@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]), st.integers(0, 40))
def test_compact_form_agrees(q, d):
    assert count_self_reciprocal(q, d) == count_self_reciprocal_compact(q, d)


def _grid():
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]:
        for d in range(6):
            if q in (2, 3, 4, 5) or q**d <= 10**5:
                yield q, d


@pytest.mark.parametrize("q,d", list(_grid()))
def test_count_matches_enumeration(q, d):
    F = field_of_order(q)
    found = enumerate_polys(F, d, "self_reciprocal")
    assert len(found) == count_self_reciprocal(q, d)
    assert all(f.constant in (1, F.neg(1)) for f in found)


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_zeta_count_is_independent_of_zeta(q, d):
    want = count_self_reciprocal(q, d) if d % 2 == 0 else 0
    F = field_of_order(q)
    for z in non_squares(F):
        got = enumerate_polys(F, d, "zeta_self_reciprocal", zeta=z)
        assert len(got) == want == count_zeta_self_reciprocal(q, d, "general_linear")
    C = norm_one_subgroup(q)
    for z in non_squares(C):
        got = enumerate_polys(C.ambient, d, "self_conjugate", "zeta_self_reciprocal", zeta=z)
        assert len(got) == want == count_zeta_self_reciprocal(q, d, "unitary")
        for f in got:
            check_coefficient_conditions(f, q, z)


def check_coefficient_conditions(f, q, z):
    F = f.field
    a = f.full()
    d = f.degree
    assert d % 2 == 0
    assert F.mul(a[0], a[0]) == F.pow(z, d)
    for i in range(1, d):
        assert a[d - i] == F.mul(F.pow(a[i], q), a[0])
        assert a[i] == F.mul(F.mul(a[0], a[d - i]), F.pow(z, -i))


@pytest.mark.parametrize("q", [2, 3])
def test_unitary_and_linear_self_reciprocal_sets_coincide(q):
    small, big = field_of_order(q), field_of_order(q * q)
    emb = embedding(small, big)
    for d in range(5):
        inside = {f.coeffs for f in enumerate_polys(big, d, "self_conjugate", "self_reciprocal")}
        base = {tuple(emb[c] for c in f.coeffs) for f in enumerate_polys(small, d, "self_reciprocal")}
        assert inside == base


# -- enumeration --------------------------------------------------------


def test_enumeration_examples():
    got = enumerate_polys(F3, 2, "self_reciprocal")
    assert [str(f) for f in got] == ["t^2 + 1", "t^2 + t + 1", "t^2 + 2*t + 1", "t^2 + 2"]
    assert [str(f) for f in enumerate_polys(make_field(2, 2), 1, "self_reciprocal")] == ["t + 1"]
    emb = embedding(F3, F9)
    both = enumerate_polys(F9, 2, "self_conjugate", "self_reciprocal")
    assert {f.coeffs for f in both} == {tuple(emb[c] for c in f.coeffs) for f in got}


def test_enumeration_order_and_size():
    F = make_field(2, 2)
    allp = enumerate_polys(F, 2)
    assert len(allp) == 3 * 4
    keys = [tuple(F.key(c) for c in f.coeffs) for f in allp]
    assert keys == sorted(keys)
    assert enumerate_polys(F, 0) == [MonicPoly.one(F)]


def test_enumeration_errors(monkeypatch):
    with pytest.raises(ValueError):
        enumerate_polys(F3, 2, "palindromic")
    with pytest.raises(ValueError):
        enumerate_polys(F3, 2, "zeta_self_reciprocal")
    with pytest.raises(ValueError):
        enumerate_polys(F3, 2, "self_conjugate")
    with pytest.raises(GuardError):
        enumerate_polys(field_of_order(31), 6)
    monkeypatch.setenv("REALCLASS_GUARD", str(10**9))
    from realclasses.errors import guard

    assert guard(10**7) == 10**9


# -- helpers ------------------------------------------------------------


def necklace(q, d):
    mu = {1: 1, 2: -1, 3: -1, 4: 0, 5: -1, 6: 1}
    return sum(mu[d // k] * q**k for k in range(1, d + 1) if d % k == 0) // d


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_irreducible_counts(q):
    F = field_of_order(q)
    irr = monic_irreducibles(F, 4 if q < 5 else 3)
    for d in range(1, 4 if q < 5 else 3 + 1):
        want = necklace(q, d) - (1 if d == 1 else 0)  # t itself is excluded
        assert sum(1 for f in irr if f.degree == d) == want


@given(st.lists(st.integers(0, 8), min_size=1, max_size=6), st.lists(st.integers(0, 8), min_size=0, max_size=3))
def test_polydivmod_roundtrip(a, b):
    F = F9
    b = b + [1]
    g, r = polydivmod(F, a, b)
    back = polymul(F, g, b)
    rr = r + [0] * (len(back) - len(r))
    total = [F.add(x, y) for x, y in zip(back + [0] * (len(a) - len(back)), rr + [0] * (len(a) - len(rr)))]
    want = a + [0] * (len(total) - len(a))
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    while len(want) > 1 and want[-1] == 0:
        want.pop()
    assert total == want
    assert len(r) < len(b) or r == [0]
