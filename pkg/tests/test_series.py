import pytest
from hypothesis import given, strategies as st

from realclasses.count import pgl_type_count, real_type_count, sl_type_count
from realclasses.errors import ConsistencyError, GuardError
from realclasses.partition import iter_partitions
from realclasses.poly import count_self_reciprocal
from realclasses.series import (
    IntSeries,
    gen_even_types,
    gen_real_classes,
    gen_theorem,
    geometric,
    product,
    series_arith,
)
from realclasses.verify import all_even, partition_sums, series_identity_checks


def S(*c):
    return IntSeries(tuple(c))


def B(N, e, c=1):
    return IntSeries.binomial(N, 1, e, c)


def test_arith_examples():
    assert series_arith(S(1, 1, 0), S(1, -1, 0), "mul") == S(1, 0, -1)
    assert series_arith(IntSeries.one(4), B(4, 2, -3), "div") == S(1, 0, 3, 0, 9)
    a = product(10, lambda i: B(10, i) if i <= 3 else IntSeries.one(10))
    assert a * (IntSeries.one(10) / a) == IntSeries.one(10)
    assert series_arith(S(1, 2), S(3, 4), "sub") == S(-2, -2)
    assert series_arith(S(1, 2), S(3, 4), "add") == S(4, 6)


def test_arith_errors():
    with pytest.raises(ValueError):
        S(1, 2) + S(1, 2, 3)
    with pytest.raises(ValueError):
        S(1, 2) / S(2, 1)
    with pytest.raises(ValueError):
        series_arith(S(1), S(1), "pow")
    with pytest.raises(ConsistencyError):
        S(1, 3).halve()
    with pytest.raises(GuardError):
        gen_real_classes(3, 201)
    with pytest.raises(ValueError):
        S()


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=12), st.data())
def test_inverse_roundtrip(tail, data):
    a = IntSeries((1,) + tuple(tail))
    inv = a.inverse()
    assert a * inv == IntSeries.one(a.order)
    e = data.draw(st.integers(-3, 3))
    assert (a**e) * (a ** (-e)) == IntSeries.one(a.order)


@given(
    st.lists(st.integers(-9, 9), min_size=6, max_size=6),
    st.lists(st.integers(-9, 9), min_size=6, max_size=6),
    st.lists(st.integers(-9, 9), min_size=6, max_size=6),
)
def test_ring_axioms(a, b, c):
    a, b, c = IntSeries(tuple(a)), IntSeries(tuple(b)), IntSeries(tuple(c))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


def test_geometric_helper():
    assert geometric(6, 3, 2) == IntSeries.one(6) / B(6, 2, -3)


def test_real_series_examples():
    assert gen_real_classes(3, 2).coeffs == (1, 2, 6)
    assert gen_real_classes(2, 1).coeffs == (1, 1)
    assert list(gen_real_classes(3, 20).coeffs) == partition_sums(3, 20, real_type_count)


def test_even_series_examples():
    assert gen_even_types(3, 2).coeffs == (1, 0, 4)
    for q in (2, 3, 4, 5, 7, 9):
        assert gen_even_types(q, 5)[1] == 0
    assert list(gen_even_types(5, 12).coeffs) == partition_sums(5, 12, real_type_count, all_even)


def test_theorem_series_examples():
    assert gen_theorem(3, 2).coeffs == (1, 1, 5)
    for q in (2, 4, 8, 16):
        assert gen_theorem(q, 20) == gen_real_classes(q, 20)
    want_pgl = partition_sums(3, 30, pgl_type_count)
    want_sl = partition_sums(3, 30, sl_type_count)
    assert list(gen_theorem(3, 30).coeffs) == want_pgl == want_sl


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9])
def test_real_series_is_partition_sum(q):
    assert list(gen_real_classes(q, 30).coeffs) == partition_sums(q, 30, real_type_count)


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_even_series_is_all_even_partition_sum(q):
    assert list(gen_even_types(q, 30).coeffs) == partition_sums(q, 30, real_type_count, all_even)


@pytest.mark.parametrize("q", [2, 4, 8])
def test_all_even_sum_for_even_q(q):
    # r_{q,2k} = q^k here, so each part contributes 1 / (1 - q u^{2i})
    N = 24
    want = product(N, lambda i: IntSeries.one(N) / B(N, 2 * i, -q))
    assert list(want.coeffs) == partition_sums(q, N, real_type_count, all_even)
    assert want != gen_even_types(q, N)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_derivation_identities(q):
    for name, lhs, rhs in series_identity_checks(q, 24):
        assert lhs == rhs, name


@pytest.mark.parametrize("q", [3, 5, 7])
def test_odd_index_factors_by_hand(q):
    N = 24
    for i in range(1, 7):
        e = 4 * i - 2
        lhs = IntSeries.from_terms(N, ((e * k, count_self_reciprocal(q, 2 * k)) for k in range(N // e + 1)))
        assert lhs == B(N, e) / B(N, e, -q)
        weighted = IntSeries.from_terms(
            N, [(0, 1)] + [(e * k, (q - 1) * count_self_reciprocal(q, 2 * k) // (q + 1)) for k in range(1, N // e + 1)]
        )
        assert weighted == B(N, e, -1) / B(N, e, -q)


def test_collapse_identity():
    for N in (8, 16, 24, 40):
        lhs = product(N, lambda i: B(N, 2 * i) ** 2 * B(N, 4 * i - 2, -1))
        rhs = product(N, lambda i: B(N, 2 * i))
        assert lhs.truncate(N // 2) == rhs.truncate(N // 2)
        assert lhs == rhs


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_truncation_soundness(q):
    for gen in (gen_real_classes, gen_even_types, gen_theorem):
        assert gen(q, 48).truncate(24) == gen(q, 24)


def test_big_coefficients_are_exact():
    c = gen_real_classes(9, 40)[40]
    assert c > 2**64
    assert c == sum(real_type_count(9, nu) for nu in iter_partitions(40))


def test_theorem_coefficients_nonnegative():
    for q in (2, 3, 4, 5, 7, 8, 9):
        assert all(c >= 0 for c in gen_theorem(q, 40).coeffs)


def test_str_is_comma_joined():
    assert str(gen_theorem(3, 2)) == "1,1,5"
