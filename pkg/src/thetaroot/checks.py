"""The cross-check suite behind ``thetaroot verify``.

Every check computes two independently obtained values and compares them
exactly.  ``fault`` names one check whose first value gets a single
coefficient perturbed, which must make that check fail; the CLI tests use
it to confirm the suite is actually sensitive.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Callable

import mpmath

from . import asymptotics, polyomino, theta, trees
from .series import QSeries, TQSeries, XQSeries, pochhammer_infinite


def _perturb(value):
    if isinstance(value, QSeries):
        cs = list(value.coeffs)
        cs[-1] += 1
        return QSeries(cs, value.order)
    if isinstance(value, TQSeries):
        cs = [list(p) for p in value.coeffs]
        cs[-1] = (cs[-1] or [0])
        cs[-1][0] += 1
        return TQSeries(cs, value.order)
    if isinstance(value, XQSeries):
        return value.with_coefficient(0, 0, value[0, 0] + 1)
    if isinstance(value, Counter):
        out = Counter(value)
        out[max(out) if out else (0,)] += 1
        return out
    if isinstance(value, (list, tuple)):
        return type(value)([value[0] + 1, *value[1:]]) if value else type(value)([1])
    if isinstance(value, bool):
        return not value
    if isinstance(value, int):
        return value + 1
    raise TypeError(f"cannot perturb {type(value).__name__}")


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[int, bool], bool]


def _same(left, right, fault: bool) -> bool:
    return (_perturb(left) if fault else left) == right


def _xi_published(order, fault):
    got = [tuple(theta.xi0(9, m).coeffs) for m in ("theta", "fix1", "fix2")]
    return all(_same(g, theta.PUBLISHED_XI0, fault) for g in got)


def _xi_cross_method(order, fault):
    a = theta.xi_via_theta(order)
    return _same(a, theta.xi_fix1(order), fault) and a == theta.xi_fix2(order)


def _xi_root(order, fault):
    xi = theta.xi_via_theta(order)
    return _same(theta.theta0_at(-xi), xi.zero(), fault)


def _identity(verify, fault):
    for x_order, q_order in ((8, 16), (10, 24)):
        lhs = theta.theta0(x_order, q_order)
        if not verify(x_order, q_order, _perturb(lhs) if fault else lhs):
            return False
    return True


def _identity_first(order, fault):
    return _identity(theta.verify_identity_first, fault)


def _identity_second(order, fault):
    return _identity(theta.verify_identity_second, fault)


def _ferrers_two_forms(order, fault):
    by_columns, by_durfee = polyomino.ferrers_gf_two_forms(6, 6, 12)
    return _same(by_columns, by_durfee, fault)


def _stack_closed_vs_functional(order, fault):
    n = 10
    return _same(polyomino.stack_gf_closed(n, n, n, n), polyomino.stack_gf_functional(n, n, n, n), fault)


def _stack_closed_vs_enumeration(order, fault):
    n = 10
    return _same(polyomino.stack_gf_closed(n, n, n, n), polyomino.enumerate_stacks(n), fault)


def _ferrers_closed_vs_enumeration(order, fault):
    n = 10
    return _same(
        polyomino.ferrers_gf_constrained(n, n, n), polyomino.enumerate_ferrers(n, True), fault
    ) and polyomino.ferrers_gf_two_forms(n, n, n)[1] == polyomino.enumerate_ferrers(n, False)


def _partition_numbers(order, fault):
    n = 10
    counts = polyomino.area_marginal(polyomino.enumerate_ferrers(n, False), n)
    counts[0] = 1  # the empty partition
    euler = pochhammer_infinite(QSeries.monomial(1, n)).reciprocal()
    return _same(counts, list(euler.coeffs), fault)


def _refinements_at_one(order, fault):
    n = min(order, 12)
    xi = theta.xi_via_theta(n)
    return _same(theta.A_refined(n).at(1), xi, fault) and theta.Atilde_refined(n).at(1) == xi


def _tree_oracle(order, fault):
    n = 7
    ok = True
    for letter, series in ((theta.STACK, theta.A_refined(n)), (theta.FERRERS, theta.Atilde_refined(n))):
        table = trees.enumerate_trees(letter, n)
        expected = Counter(
            {(k, d): c for k, p in enumerate(series.coeffs) for d, c in enumerate(p) if c}
        )
        ok = ok and _same(table, expected, fault)
    return ok


def _sigma_models(order, fault):
    xi = theta.xi_via_theta(7)
    ok = True
    for word in itertools.product((0, 1), repeat=3):
        ok = ok and theta.A_sigma_infinite(word, 3).at(1).coeffs == (1, 1, 2, 4)
        ok = ok and trees.count_by_area(word, 7) == xi
    # height <= 7 already holds every tree of area <= 7
    for word in itertools.product((0, 1), repeat=8):
        ok = ok and _same(theta.A_sigma(word, 7).at(1), xi, fault)
    return ok


def _composition_closure(order, fault):
    xi = theta.xi_via_theta(order)
    F, Ft = theta.F_eval, theta.Ftilde_eval
    return (
        _same(F(Ft(xi, order), order), xi, fault)
        and Ft(F(xi, order), order) == xi
        and F(F(xi, order), order) == xi
        and Ft(Ft(xi, order), order) == xi
    )


def _monotone(order, fault):
    cs = list(theta.xi_via_theta(order).coeffs)
    if fault:
        cs[1] += 5
    return all(b >= a for a, b in zip(cs, cs[1:])) and all(c > 0 for c in cs)


def _sokal(order, fault):
    n_order = 20
    ok = True
    zero = QSeries.zero_series(n_order)
    for n in range(11):
        from_one = theta.sokal_iteration(n, n_order)
        from_zero = zero
        for _ in range(n + 1):
            from_zero = theta.Ftilde_eval(from_zero, n_order)
        ok = ok and _same(from_one, from_zero, fault and n == 10)
    return ok and theta.sokal_iteration(n_order + 1, n_order) == theta.xi_via_theta(n_order)


def _injection(order, fault):
    seen = set()
    for area in range(7):
        for tree in trees.generate_trees(trees.STACK, area):
            image = trees.injection_step(tree)
            if image.area != area + 1:
                return False
            seen.add(trees.canonical_encoding(image))
    total = sum(1 for area in range(7) for _ in trees.generate_trees(trees.STACK, area))
    return _same(len(seen), total, fault)


def _growth_rate(order, fault):
    if order < 150:
        return True
    est = asymptotics.estimate_mu(theta.xi_via_theta(order), (order // 3, order))
    mu = est.mu + (1 if fault else 0)
    return abs(mu - mpmath.mpf(asymptotics.MU_REFERENCE)) < mpmath.mpf("1e-3")


CHECKS: tuple[Check, ...] = (
    Check("xi-published-coefficients", _xi_published),
    Check("xi-cross-method", _xi_cross_method),
    Check("xi-is-theta-root", _xi_root),
    Check("identity-first", _identity_first),
    Check("identity-second", _identity_second),
    Check("ferrers-two-forms", _ferrers_two_forms),
    Check("stack-closed-vs-functional", _stack_closed_vs_functional),
    Check("stack-closed-vs-enumeration", _stack_closed_vs_enumeration),
    Check("ferrers-closed-vs-enumeration", _ferrers_closed_vs_enumeration),
    Check("partition-numbers", _partition_numbers),
    Check("refinements-at-t-1", _refinements_at_one),
    Check("tree-oracle", _tree_oracle),
    Check("sigma-models", _sigma_models),
    Check("composition-closure", _composition_closure),
    Check("monotone-coefficients", _monotone),
    Check("sokal-iteration", _sokal),
    Check("injection", _injection),
    Check("growth-rate", _growth_rate),
)


def run_checks(order: int = 30, fault: str | None = None) -> list[tuple[str, bool]]:
    """Run every check in index order; ``fault`` perturbs the named one."""
    names = {c.name for c in CHECKS}
    if fault is not None and fault not in names:
        raise ValueError(f"unknown check {fault!r}")
    return [(c.name, bool(c.run(order, c.name == fault))) for c in CHECKS]
