import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetaroot.series import (
    QSeries,
    TQSeries,
    XQSeries,
    pochhammer,
    pochhammer_infinite,
    series_from_dict,
)

ORDER = 12
ints = st.integers(min_value=-(10**30), max_value=10**30)


def qseries(order=ORDER, unit=False):
    coeffs = st.lists(ints, min_size=order + 1, max_size=order + 1)
    if unit:
        coeffs = coeffs.map(lambda cs: [1] + cs[1:])
    return coeffs.map(lambda cs: QSeries(cs, order))


def tqseries(order=6, unit=False):
    row = st.lists(st.integers(-50, 50), min_size=0, max_size=4)
    rows = st.lists(row, min_size=order + 1, max_size=order + 1)
    if unit:
        rows = rows.map(lambda rs: [[1]] + rs[1:])
    return rows.map(lambda rs: TQSeries(rs, order))


@given(qseries(), qseries(), qseries())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == a.zero()
    assert a * a.one() == a


@given(tqseries(), tqseries(), tqseries())
def test_ring_axioms_bivariate(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(qseries(unit=True))
def test_reciprocal_is_two_sided(a):
    inv = a.reciprocal()
    assert a * inv == a.one()
    assert inv * a == a.one()


@given(tqseries(unit=True))
def test_bivariate_reciprocal(a):
    assert a * a.reciprocal() == a.one()


@given(qseries(), qseries(), st.integers(0, ORDER))
def test_truncation_commutes_with_operations(a, b, m):
    t = lambda s: s.truncate(m)
    assert t(a + b) == t(a) + t(b)
    assert t(a * b) == t(a) * t(b)
    assert t(a - b) == t(a) - t(b)


@given(qseries(unit=True), st.integers(0, ORDER))
def test_truncation_commutes_with_reciprocal(a, m):
    assert a.reciprocal().truncate(m) == a.truncate(m).reciprocal()


@given(st.integers(0, 8), st.integers(1, 3))
def test_pochhammer_inverse(n, k):
    p = pochhammer(QSeries.monomial(k, ORDER), n)
    assert p * p.reciprocal() == p.one()


def test_pochhammer_values():
    # (q;q)_2 = 1 - q - q^2 + q^3
    assert pochhammer(QSeries.monomial(1, 5), 2) == QSeries([1, -1, -1, 1], 5)
    assert pochhammer(QSeries.monomial(1, 5), 0) == QSeries.one_series(5)
    # Euler: (q;q)_inf = 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + ...
    euler = pochhammer_infinite(QSeries.monomial(1, 15))
    expected = [0] * 16
    for k, s in ((0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)):
        expected[k] = s
    assert euler == QSeries(expected, 15)


def test_divergent_infinite_product():
    with pytest.raises(ValueError, match="divergent infinite product"):
        pochhammer_infinite(QSeries.one_series(4))


def test_non_invertible():
    with pytest.raises(ValueError, match="non-invertible series"):
        QSeries([0, 1], 4).reciprocal()
    with pytest.raises(ValueError, match="non-invertible series"):
        TQSeries([[0, 1]], 4).reciprocal()


def test_mixed_orders_take_minimum():
    s = QSeries([1, 1, 1], 2) + QSeries([1, 1, 1, 1, 1], 4)
    assert s.order == 2
    assert (QSeries([1], 3) * QSeries([1], 1)).order == 1


def test_truncate_cannot_raise_precision():
    with pytest.raises(ValueError):
        QSeries([1], 2).truncate(3)
    assert QSeries([1], 2).extend(5) == QSeries([1], 5)


def test_shift_and_geometric_division():
    s = QSeries([1, 2], 4)
    assert s.shift(2) == QSeries([0, 0, 1, 2], 6)
    assert QSeries.one_series(6).div_one_minus_qpow(2) == QSeries([1, 0, 1, 0, 1, 0, 1], 6)


def test_immutable():
    s = QSeries([1, 2], 3)
    with pytest.raises(AttributeError):
        s.order = 5


def test_rendering():
    assert str(QSeries([1, 1, 2], 2)) == "1 + q + 2*q^2 + O(q^3)"
    t = TQSeries([[0, 1], [0, 1], [0, 2], [0, 3, 1]], 3)
    assert str(t) == "t + tq + 2tq^2 + (t^2+3t)q^3 + O(q^4)"


@given(qseries())
def test_json_round_trip(a):
    data = json.loads(json.dumps(a.to_dict()))
    assert QSeries.from_dict(data) == a
    assert series_from_dict(data) == a


@given(tqseries())
def test_bivariate_json_round_trip(a):
    data = json.loads(json.dumps(a.to_dict()))
    assert TQSeries.from_dict(data) == a
    assert series_from_dict(data) == a


def test_json_schema_uses_decimal_strings():
    big = 10**40 + 7
    data = QSeries([big], 0).to_dict()
    assert data == {"var": "q", "order": 0, "coeffs": [str(big)]}


def test_tqseries_evaluation_at_one():
    t = TQSeries([[0, 1], [0, 1, 2]], 1)
    assert t.at(1) == QSeries([1, 3], 1)
    assert t.coefficient(1, 2) == 2
    assert t.mul_t().coefficient(1, 3) == 2


def test_xqseries_reciprocal_and_truncation():
    one_minus_x = XQSeries.one_series(5, 5) - XQSeries.x_series(5, 5)
    geometric = one_minus_x.reciprocal()
    assert all(geometric[m, 0] == 1 for m in range(6))
    assert one_minus_x * geometric == one_minus_x.one()
    assert geometric.truncate((2, 3)).order == (2, 3)


@settings(max_examples=25)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=5, max_size=5), min_size=5, max_size=5))
def test_xqseries_commutative(rows):
    a = XQSeries(rows, 4, 4)
    b = XQSeries.one_series(4, 4) + XQSeries.q_series(4, 4) * XQSeries.x_series(4, 4)
    assert a * b == b * a
