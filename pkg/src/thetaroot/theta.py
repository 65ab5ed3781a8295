"""The leading root of the partial theta function and its tree refinements.

``Theta0(x, q) = sum_n x**n q**(n(n-1)/2)`` has a unique formal root
``x = -xi0(q)`` with ``xi0(0) = 1``.  Three independent routes compute
``xi0``:

* :func:`xi_via_theta` solves ``Theta0(-xi, q) = 0`` one coefficient at a time.
* :func:`xi_fix1` iterates the stack-polyomino fixed point ``xi = F(xi)``.
* :func:`xi_fix2` iterates the Durfee/Ferrers fixed point ``xi = Ftilde(xi)``.

``F(a, q)`` and ``Ftilde(a, q)`` are evaluated for any series ``a`` supporting
the shared series surface, so the same code produces the univariate root and
the vertex-count refinements ``A(t, q)``, ``Atilde(t, q)`` and ``A_sigma``.
"""

from __future__ import annotations

from math import isqrt
from typing import Callable, Sequence

from .series import QSeries, TQSeries, XQSeries, pochhammer, pochhammer_infinite

#: Coefficients of xi0 for q^0..q^9 as printed with the partial theta root.
PUBLISHED_XI0 = (1, 1, 2, 4, 9, 21, 52, 133, 351, 948)

STACK = 0
FERRERS = 1


class ConvergenceError(RuntimeError):
    pass


def _one(a, order):
    return a.truncate(order).one()


# ---------------------------------------------------------------------------
# the two enriching generating functions


def _stack_sum(a, order: int):
    """``1 + sum_{n>=1} q^n / ((q;q)_n (aq;q)_{n-1})`` truncated at ``order``.

    The n-th term is ``q**n * U_n`` with ``U_n = U_{n-1} / ((1-q^n)(1-a q^(n-1)))``
    kept at order ``order - n``.  The geometric factors ``1/(1 - a q^m)`` are
    assembled from a shared table of powers of ``a``.
    """
    a = a.truncate(order)
    total = _one(a, order)
    if order == 0:
        return total

    # a**j is only ever read below q^(order-1-j)
    powers = [None]
    while order - 2 - len(powers) >= 0:
        j = len(powers)
        base = a.truncate(order - 2 - j)
        powers.append(base if j == 1 else powers[-1].truncate(order - 2 - j) * base)

    def geometric(m: int, prec: int):
        # 1 / (1 - a q^m) = sum_j a^j q^(mj)
        acc = _one(a, prec)
        j = 1
        while m * j <= prec:
            acc = acc + powers[j].truncate(prec - m * j).shift(m * j)
            j += 1
        return acc

    u = _one(a, order - 1).div_one_minus_qpow(1)
    total = total + u.shift(1)
    for n in range(2, order + 1):
        prec = order - n
        u = u.truncate(prec).div_one_minus_qpow(n) * geometric(n - 1, prec)
        total = total + u.shift(n)
    return total


def _durfee_sum(a, order: int):
    """``1 + sum_{n>=1} a^n q^(n^2) / ((q;q)_n (aq;q)_{n-1})`` truncated at ``order``."""
    a = a.truncate(order)
    total = _one(a, order)
    if order == 0:
        return total
    v = a.truncate(order - 1).div_one_minus_qpow(1)
    total = total + v.shift(1)
    for n in range(2, isqrt(order) + 1):
        prec = order - n * n
        v = v.truncate(prec).div_one_minus_qpow(n) * a.truncate(prec)
        if prec >= n - 1:
            v = v * (_one(a, prec) - a.truncate(prec - n + 1).shift(n - 1)).reciprocal()
        total = total + v.shift(n * n)
    return total


def F_eval(a, order: int):
    """Stack polyominoes plus the empty one, counted by rise (``a``) and area (``q``).

    ``a`` may be a :class:`TQSeries` or a :class:`QSeries`; the result has the
    same type.
    """
    if a.order < order:
        raise ValueError("argument series is shorter than the requested order")
    return _stack_sum(a, order)


def Ftilde_eval(a, order: int):
    """Ferrers diagrams with ``m_n = n`` for some ``n``, plus the empty one, by width and area."""
    if a.order < order:
        raise ValueError("argument series is shorter than the requested order")
    return _durfee_sum(a, order)


_ENRICHMENT = {STACK: F_eval, FERRERS: Ftilde_eval}


# ---------------------------------------------------------------------------
# fixed points


def _fixed_point(phi: Callable, start, order: int, gain: int = 1):
    """Iterate ``x <- phi(x)`` from ``start`` until two iterates agree at ``order``.

    ``phi(x)`` modulo ``q**(k+gain)`` must depend on ``x`` modulo ``q**k`` only.
    Then the k-th iterate truncated at ``k*gain`` is already exact, so early
    iterates are computed at that reduced precision and the work is spent
    where it matters.  The iterates themselves are the plain ones, truncated.
    At most ``order + 2`` iterations are run.
    """
    x = start.truncate(0)
    for _ in range(order + 2):
        if x.order < order:
            target = min(order, x.order + gain)
            x = phi(x.extend(target), target)
            continue
        y = phi(x, order)
        if y == x:
            return x
        x = y
    raise ConvergenceError(f"fixed-point iteration did not settle within {order + 2} steps")


def xi_fix1(order: int) -> QSeries:
    """``xi0`` as the fixed point of ``xi = 1 + sum q^n/((q;q)_n (xi q;q)_{n-1})``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return _fixed_point(_stack_sum, QSeries.one_series(0), order, gain=3)


def xi_fix2(order: int) -> QSeries:
    """``xi0`` as the fixed point of ``xi = 1 + sum q^(n^2) xi^n/((q;q)_n (xi q;q)_{n-1})``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return _fixed_point(_durfee_sum, QSeries.one_series(0), order, gain=1)


def xi_via_theta(order: int) -> QSeries:
    """Solve ``Theta0(-xi, q) = 0`` coefficient by coefficient.

    With ``T_n = n(n-1)/2`` the q^k coefficient reads
    ``[k == 0] - xi_k + sum_{n>=2} (-1)^n [q^(k-T_n)] xi^n = 0`` and the sum only
    involves ``xi_0 .. xi_{k-1}``, so each step is one integer sum.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    nmax = 1
    while (nmax + 1) * nmax // 2 <= order:
        nmax += 1
    tri = [n * (n - 1) // 2 for n in range(nmax + 1)]
    xi = [0] * (order + 1)
    # pw[n][m] = [q^m] xi^n, grown one index per step
    pw: list[list[int]] = [[] for _ in range(nmax + 1)]
    for k in range(order + 1):
        s = 1 if k == 0 else 0
        for n in range(2, nmax + 1):
            m = k - tri[n]
            if m < 0:
                break
            s += pw[n][m] if n % 2 == 0 else -pw[n][m]
        xi[k] = s
        pw[1].append(s)
        for n in range(2, nmax + 1):
            if k > order - tri[n]:
                break
            prev = pw[n - 1]
            pw[n].append(sum(xi[j] * prev[k - j] for j in range(k + 1)))
    return QSeries(xi, order)


def xi0(order: int, method: str = "theta") -> QSeries:
    try:
        solver = {"theta": xi_via_theta, "fix1": xi_fix1, "fix2": xi_fix2}[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return solver(order)


def theta0_at(s: QSeries) -> QSeries:
    """``Theta0(s, q)`` for a univariate series ``s``."""
    order = s.order
    total = s.one()
    power = s.one()
    n = 1
    while n * (n - 1) // 2 <= order:
        power = power * s
        total = total + power.truncate(order - n * (n - 1) // 2).shift(n * (n - 1) // 2)
        n += 1
    return total


# ---------------------------------------------------------------------------
# refinements by vertex count


def A_refined(order: int) -> TQSeries:
    """Stack-enriched plane trees by area (``q``) and vertices (``t``)."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return _fixed_point(
        lambda a, k: _stack_sum(a, k).mul_t(), TQSeries.t_series(0), order, gain=3
    )


def Atilde_refined(order: int) -> TQSeries:
    """Ferrers-enriched plane trees by area (``q``) and vertices (``t``)."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return _fixed_point(
        lambda a, k: _durfee_sum(a, k).mul_t(), TQSeries.t_series(0), order, gain=1
    )


def parse_sigma(word) -> tuple[int, ...]:
    """Normalise a sigma word given as ``"110"``, ``"1,1,0"`` or a sequence of 0/1."""
    if isinstance(word, str):
        letters = [c for c in word if c not in ", "]
    else:
        letters = list(word)
    try:
        out = tuple(int(c) for c in letters)
    except (TypeError, ValueError):
        raise ValueError(f"sigma letters must be 0 or 1, got {word!r}") from None
    if any(c not in (STACK, FERRERS) for c in out):
        raise ValueError(f"sigma letters must be 0 or 1, got {word!r}")
    return out


def extend_sigma(word: Sequence[int], length: int) -> tuple[int, ...]:
    """Extend a non-empty word to ``length`` letters by repeating its last letter."""
    word = parse_sigma(word)
    if not word:
        raise ValueError("empty sigma word")
    return word[:length] + (word[-1],) * max(0, length - len(word))


def A_sigma(sigma, order: int) -> TQSeries:
    """``t F^(s0)(t F^(s1)( ... t F^(sN)(0)))``: trees of height <= N, level i enriched by s_i."""
    sigma = parse_sigma(sigma)
    if not sigma:
        raise ValueError("empty sigma word")
    value = TQSeries.zero_series(order)
    for letter in reversed(sigma):
        value = _ENRICHMENT[letter](value, order).mul_t()
    return value


def A_sigma_infinite(sigma, order: int) -> TQSeries:
    """A_sigma for the infinite word obtained by repeating the last letter.

    Every non-leaf decoration has positive area, so trees of area <= order have
    height <= order and a word of length ``order + 1`` is already exact.
    """
    return A_sigma(extend_sigma(sigma, order + 1), order)


def sokal_iteration(n: int, order: int) -> QSeries:
    """``(Ftilde)^n`` applied to the constant series 1, with ``t = 1``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x = QSeries.one_series(order)
    for _ in range(n):
        x = Ftilde_eval(x, order)
    return x


# ---------------------------------------------------------------------------
# formal identities behind the two fixed-point equations


def theta0(x_order: int, q_order: int) -> XQSeries:
    """``Theta0(x, q)`` on the ``(x_order, q_order)`` grid."""
    if x_order < 0 or q_order < 0:
        raise ValueError("orders must be non-negative")
    rows = [[0] * (q_order + 1) for _ in range(x_order + 1)]
    for n in range(x_order + 1):
        k = n * (n - 1) // 2
        if k <= q_order:
            rows[n][k] = 1
    return XQSeries(rows, x_order, q_order)


def identity_first_rhs(x_order: int, q_order: int) -> XQSeries:
    """``(q;q)_oo (-x;q)_oo sum_{n>=0} q^n / ((q;q)_n (-x;q)_n)``."""
    one = XQSeries.one_series(x_order, q_order)
    q = XQSeries.q_series(x_order, q_order)
    x = XQSeries.x_series(x_order, q_order)
    order = (x_order, q_order)
    total = one
    term = one  # q^n / ((q;q)_n (-x;q)_n)
    for n in range(1, q_order + 1):
        denom = (one - q.shift(n - 1).truncate(order)) * (one + x.shift(n - 1).truncate(order))
        term = (term * q) * denom.reciprocal()
        total = total + term
    return pochhammer_infinite(q) * pochhammer_infinite(-x) * total


def identity_second_rhs(x_order: int, q_order: int) -> XQSeries:
    """``(-x;q)_oo sum_{n>=0} q^(n^2) (-x)^n / ((q;q)_n (-x;q)_n)``."""
    one = XQSeries.one_series(x_order, q_order)
    q = XQSeries.q_series(x_order, q_order)
    x = XQSeries.x_series(x_order, q_order)
    order = (x_order, q_order)
    total = one
    neg_x_pow = one
    for n in range(1, min(isqrt(q_order), x_order) + 1):
        neg_x_pow = neg_x_pow * (-x)
        num = XQSeries.one_series(x_order, q_order - n * n).shift(n * n) * neg_x_pow
        den = pochhammer(q, n, order) * pochhammer(-x, n, order)
        total = total + num * den.reciprocal()
    return pochhammer_infinite(-x) * total


def verify_identity_first(x_order: int, q_order: int, lhs: XQSeries | None = None) -> bool:
    lhs = theta0(x_order, q_order) if lhs is None else lhs
    return lhs == identity_first_rhs(x_order, q_order)


def verify_identity_second(x_order: int, q_order: int, lhs: XQSeries | None = None) -> bool:
    lhs = theta0(x_order, q_order) if lhs is None else lhs
    return lhs == identity_second_rhs(x_order, q_order)
