import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetaroot import _kernels, theta
from thetaroot.series import QSeries, TQSeries

PUBLISHED = (1, 1, 2, 4, 9, 21, 52, 133, 351, 948)
# beyond the published prefix; frozen after all three solvers and the
# brute-force tree counts (both species) agreed
XI_10_TO_14 = (2610, 7298, 20672, 59192, 171059)


@pytest.mark.parametrize("method", ["theta", "fix1", "fix2"])
def test_published_prefix(method):
    assert tuple(theta.xi0(9, method).coeffs) == PUBLISHED


def test_methods_agree_at_moderate_order():
    a = theta.xi_via_theta(60)
    assert a == theta.xi_fix1(60) == theta.xi_fix2(60)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 40))
def test_root_property(n):
    xi = theta.xi_via_theta(n)
    assert theta.theta0_at(-xi).is_zero()
    assert xi.order == n


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 40), st.integers(0, 40))
def test_truncation_consistency(n, m):
    lo, hi = sorted((n, m))
    assert theta.xi_via_theta(hi).truncate(lo) == theta.xi_via_theta(lo)
    assert theta.xi_fix2(hi).truncate(lo) == theta.xi_fix2(lo)


def test_coefficients_positive_and_monotone(xi200):
    cs = xi200.coeffs
    assert all(c > 0 for c in cs)
    assert all(b >= a for a, b in zip(cs, cs[1:]))


def test_composition_closure():
    n = 40
    xi = theta.xi_via_theta(n)
    F, Ft = theta.F_eval, theta.Ftilde_eval
    assert F(xi, n) == xi
    assert Ft(xi, n) == xi
    assert F(Ft(xi, n), n) == xi
    assert Ft(F(xi, n), n) == xi


def test_enrichment_series_at_zero():
    # rise-0 stacks are partitions; every nonempty constrained diagram has width >= 1
    zero = QSeries.zero_series(10)
    partitions = QSeries([1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42], 10)
    assert theta.F_eval(zero, 10) == partitions
    assert theta.Ftilde_eval(zero, 10) == QSeries.one_series(10)


def test_eval_refuses_short_argument():
    with pytest.raises(ValueError):
        theta.F_eval(QSeries([1], 3), 5)


def test_refinements_at_t_equal_one():
    n = 14
    xi = theta.xi_via_theta(n)
    assert theta.A_refined(n).at(1) == xi
    assert theta.Atilde_refined(n).at(1) == xi
    assert tuple(xi.coeffs[10:]) == XI_10_TO_14


def test_refinement_coefficients_nonnegative():
    for series in (theta.A_refined(10), theta.Atilde_refined(10)):
        assert all(c >= 0 for p in series.coeffs for c in p)


def test_single_vertex_trees():
    # a lone vertex carries a size-0 decoration: a rise-0 stack, or nothing
    a = theta.A_refined(8)
    assert [a.coefficient(k, 1) for k in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    at = theta.Atilde_refined(8)
    assert all(at.coefficient(k, 1) == 0 for k in range(1, 9))


@pytest.mark.parametrize("word", ["0", "1", "01", "10", "0110", "1101"])
def test_sigma_infinite_at_one_is_xi(word):
    assert theta.A_sigma_infinite(word, 9).at(1) == theta.xi_via_theta(9)


@pytest.mark.parametrize("word", ["0", "1", "10", "011"])
def test_finite_word_equals_infinite_below_height(word):
    n = len(word) - 1
    extended = theta.extend_sigma(word, n + 1)
    assert theta.A_sigma(extended, n) == theta.A_sigma_infinite(word, n)


def test_sigma_word_parsing():
    assert theta.parse_sigma("1,1,0") == (1, 1, 0)
    assert theta.parse_sigma([0, 1]) == (0, 1)
    assert theta.extend_sigma("10", 4) == (1, 0, 0, 0)
    with pytest.raises(ValueError):
        theta.parse_sigma("012")
    with pytest.raises(ValueError, match="empty sigma word"):
        theta.A_sigma("", 3)


def test_sigma_zero_is_stack_refinement():
    assert theta.A_sigma_infinite("0", 7) == theta.A_refined(7)
    assert theta.A_sigma_infinite("1", 7) == theta.Atilde_refined(7)


def test_sokal_iteration_settles():
    order = 15
    xi = theta.xi_via_theta(order)
    assert theta.sokal_iteration(0, order) == QSeries.one_series(order)
    assert theta.sokal_iteration(order + 1, order) == xi


@pytest.mark.parametrize("orders", [(0, 0), (1, 1), (3, 7), (8, 16), (10, 24)])
def test_identities(orders):
    assert theta.verify_identity_first(*orders)
    assert theta.verify_identity_second(*orders)


def test_identity_detects_wrong_lhs():
    lhs = theta.theta0(6, 10)
    bad = lhs.with_coefficient(2, 1, lhs[2, 1] + 1)
    assert not theta.verify_identity_first(6, 10, bad)
    assert not theta.verify_identity_second(6, 10, bad)


def test_unknown_method():
    with pytest.raises(ValueError):
        theta.xi0(5, "newton")


def test_results_do_not_depend_on_kernel(monkeypatch):
    expected = theta.xi_fix1(40), theta.A_refined(12)
    for kernel in ("schoolbook", "kronecker"):
        monkeypatch.setenv(_kernels.KERNEL_ENV, kernel)
        assert (theta.xi_fix1(40), theta.A_refined(12)) == expected


def test_tq_series_type():
    assert isinstance(theta.A_refined(3), TQSeries)
