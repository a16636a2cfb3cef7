import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import partition_numbers
from qcong.products import pochhammer_simple
from qcong.series import (
    ExponentRangeError,
    NonUnitError,
    OrderMismatchError,
    SeriesError,
    TruncatedSeries,
    add,
    coeff,
    invert,
    make_monomial,
    mul,
    one,
    power,
    reduce_mod,
    substitute_power,
    zero,
)

S = TruncatedSeries.from_list

ORDER = 12
small_ints = st.integers(-20, 20)
series = st.lists(small_ints, min_size=ORDER + 1, max_size=ORDER + 1).map(S)
unit_series = st.tuples(st.sampled_from([1, -1]), st.lists(small_ints, min_size=ORDER, max_size=ORDER)).map(
    lambda t: S([t[0]] + t[1])
)


def test_make_monomial():
    assert make_monomial(1, 0, 5) == S([1, 0, 0, 0, 0, 0])
    assert make_monomial(2, 1, 3) == S([0, 2, 0, 0])
    assert make_monomial(-1, 2, 2) == S([0, 0, -1])
    with pytest.raises(ExponentRangeError):
        make_monomial(1, 4, 3)


def test_coefficient_count_invariant():
    with pytest.raises(SeriesError):
        TruncatedSeries(3, (1, 2))


def test_add():
    assert add(S([1, 1]), S([1, -1])) == S([2, 0])
    s = S([3, 1, 4])
    assert add(s, zero(2)) == s
    assert S([0, 1, 1]) + S([0, 1, -1]) == S([0, 2, 0])


def test_order_mismatch_rejected():
    with pytest.raises(OrderMismatchError):
        add(S([1, 2]), S([1, 2, 3]))
    with pytest.raises(OrderMismatchError):
        mul(S([1, 2]), S([1, 2, 3]))


def test_mul():
    assert mul(S([1, 1, 0]), S([1, -1, 0])) == S([1, 0, -1])
    s = S([5, -3, 2])
    assert mul(s, one(2)) == s
    # (1+q+q^2)^2 = 1 + 2q + 3q^2 + ... by hand convolution
    assert mul(S([1, 1, 1]), S([1, 1, 1])) == S([1, 2, 3])


def test_invert():
    assert invert(S([1, -1, 0, 0, 0])) == S([1, 1, 1, 1, 1])
    assert invert(one(6)) == one(6)
    assert list(invert(pochhammer_simple(1, 9)).coeffs) == partition_numbers(9)
    assert list(invert(pochhammer_simple(1, 9)).coeffs) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_invert_needs_unit_constant():
    with pytest.raises(NonUnitError):
        invert(S([2, 1]))
    with pytest.raises(NonUnitError):
        invert(S([0, 1]))


def test_power():
    assert power(S([1, 1, 0]), 2) == S([1, 2, 1])
    assert power(S([7, 3, 1]), 0) == one(2)
    assert power(S([1, -1, 0, 0]), -1) == S([1, 1, 1, 1])
    with pytest.raises(NonUnitError):
        power(S([2, 1]), -1)


def test_substitute_power():
    assert substitute_power(S([1, 1, 0, 0, 0]), 3) == S([1, 0, 0, 1, 0])
    s = S([1, 2, 3, 4])
    assert substitute_power(s, 1) == s
    assert substitute_power(S([1, 2, 3, 0, 0]), 2) == S([1, 0, 2, 0, 3])
    with pytest.raises(SeriesError):
        substitute_power(s, 0)


def test_coeff():
    assert coeff(S([1, 2]), 1) == 2
    assert coeff(one(5), 5) == 0
    with pytest.raises(ExponentRangeError):
        coeff(one(5), 6)


def test_reduce_mod():
    assert reduce_mod(S([0, 4, 5]), 4) == S([0, 0, 1])
    assert reduce_mod(S([1, 2, 4, 8, 14]), 2)[4] == 0
    assert reduce_mod(S([0, -1]), 3) == S([0, 2])
    with pytest.raises(SeriesError):
        reduce_mod(S([1]), 1)


def test_exact_at_large_order():
    inv = invert(S([1, -1], order=5000))
    assert inv.coeffs == (1,) * 5001


def test_no_overflow_in_partition_numbers():
    p = invert(pochhammer_simple(1, 500))
    assert p[500] == partition_numbers(500)[500]
    assert p[500] > 2**64


@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(unit_series)
def test_invert_two_sided(a):
    assert mul(a, invert(a)) == one(ORDER)
    assert mul(invert(a), a) == one(ORDER)


@given(unit_series, st.integers(-4, 4), st.integers(-4, 4))
def test_power_additive(a, e1, e2):
    assert power(a, e1 + e2) == mul(power(a, e1), power(a, e2))


@given(series, st.integers(1, 4), st.integers(1, 4))
def test_substitution_composes(a, j, k):
    assert substitute_power(substitute_power(a, j), k) == substitute_power(a, j * k)


@given(series, unit_series)
def test_division_is_mul_by_invert(a, b):
    assert a / b == mul(a, invert(b))
