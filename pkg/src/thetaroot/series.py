"""Truncated formal power series with exact integer coefficients.

Three concrete rings share one small duck-typed surface (``+``, ``-``, ``*``,
``shift``, ``truncate``, ``reciprocal``, ``one``/``zero``), so the q-series
algorithms elsewhere in the package run unchanged over any of them:

* :class:`QSeries` -- univariate in ``q``.
* :class:`TQSeries` -- in ``q`` with coefficients in ``Z[t]`` (:class:`TPoly`).
* :class:`XQSeries` -- dense bivariate in ``x`` and ``q``.

Binary operations return the smaller of the operand orders.  Values are
immutable.
"""

from __future__ import annotations

import operator
from typing import Any, Iterable, Sequence

from . import _kernels


def _newton_inverse(a):
    """Inverse of a series whose leading constant is +1 or -1.

    Newton's step ``b <- b + b(1 - ab)`` doubles the number of correct
    coefficients.  Univariate-order series double their working precision
    with it; the bivariate grid simply iterates until the residual vanishes.
    """
    order = a.order
    if isinstance(order, int):
        b = a.truncate(0).one() * a.constant_term()
        prec = 0
        while prec < order:
            prec = min(order, 2 * prec + 1)
            ap, bp = a.truncate(prec), b.extend(prec)
            b = bp + bp * (ap.one() - ap * bp)
        return b
    b = a.one() * a.constant_term()
    while True:
        residual = a.one() - a * b
        if residual.is_zero():
            return b
        b = b + b * residual


# ---------------------------------------------------------------------------
# univariate


class QSeries:
    """Power series in ``q`` known exactly modulo ``q**(order+1)``."""

    __slots__ = ("order", "coeffs")

    var = "q"

    def __init__(self, coeffs: Iterable[int] = (), order: int | None = None):
        cs = [int(c) for c in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise ValueError("order must be non-negative")
        del cs[order + 1 :]
        cs.extend([0] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple, order: int) -> QSeries:
        # trusted internal path: coeffs is a tuple of ints of length order + 1
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero_series(cls, order: int) -> QSeries:
        return cls((), order)

    @classmethod
    def one_series(cls, order: int) -> QSeries:
        return cls((1,), order)

    @classmethod
    def monomial(cls, k: int, order: int, c: int = 1) -> QSeries:
        cs = [0] * (order + 1)
        if k <= order:
            cs[k] = c
        return cls(cs, order)

    def one(self) -> QSeries:
        return QSeries.one_series(self.order)

    def zero(self) -> QSeries:
        return QSeries.zero_series(self.order)

    # -- container protocol -------------------------------------------------
    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"QSeries({list(self.coeffs)!r}, order={self.order})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"{body} + O(q^{self.order + 1})"

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> QSeries | None:
        if isinstance(other, QSeries):
            return other
        if isinstance(other, int):
            return QSeries((other,), self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries._raw(tuple(map(operator.add, self.coeffs[: n + 1], other.coeffs)), n)

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries._raw(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries([other * c for c in self.coeffs], self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries._raw(tuple(_kernels.convolve(self.coeffs, other.coeffs, n + 1)), n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QSeries:
        if k < 0:
            return self.reciprocal() ** (-k)
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- structural -----------------------------------------------------------
    def constant_term(self) -> int:
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        return next((k for k, c in enumerate(self.coeffs) if c), None)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot raise precision from {self.order} to {order}")
        return QSeries._raw(self.coeffs[: order + 1], order)

    def extend(self, order: int) -> QSeries:
        """Zero-extend to ``order``; only for callers that never read the new slots."""
        return QSeries(self.coeffs, max(order, self.order))

    def shift(self, k: int) -> QSeries:
        """Exact product with ``q**k``; the order grows by ``k``."""
        return QSeries._raw((0,) * k + self.coeffs, self.order + k)

    def div_one_minus_qpow(self, n: int) -> QSeries:
        """Divide by ``1 - q**n`` (n >= 1) with the sparse recurrence."""
        cs = list(self.coeffs)
        for k in range(n, len(cs)):
            cs[k] += cs[k - n]
        return QSeries._raw(tuple(cs), self.order)

    def reciprocal(self) -> QSeries:
        if self.coeffs[0] not in (1, -1):
            raise ValueError("non-invertible series")
        return _newton_inverse(self)

    # -- serialisation --------------------------------------------------------
    def to_dict(self) -> dict[str, Any]:
        return {"var": "q", "order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> QSeries:
        return cls((int(c) for c in data["coeffs"]), int(data["order"]))


# ---------------------------------------------------------------------------
# polynomials in t and series over them


class TPoly(tuple):
    """Integer polynomial in ``t``; entry ``d`` is the coefficient of ``t**d``.

    Trailing zeros are always trimmed, so the zero polynomial is ``()``.
    """

    def __new__(cls, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        return super().__new__(cls, cs)

    def __call__(self, t: int = 1):
        value = 0
        for c in reversed(self):
            value = value * t + c
        return value

    def __getitem__(self, d):
        if isinstance(d, int) and d >= len(self):
            return 0
        return super().__getitem__(d)

    def degree(self) -> int:
        return len(self) - 1

    def __add__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        n = max(len(self), len(other))
        return TPoly(
            (self[i] if i < len(self) else 0) + (other[i] if i < len(other) else 0) for i in range(n)
        )

    def __neg__(self) -> TPoly:
        return TPoly(-c for c in self)

    def __sub__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        return self + TPoly(-c for c in other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TPoly(other * c for c in self)
        if not isinstance(other, tuple):
            return NotImplemented
        if not self or not other:
            return TPoly()
        return TPoly(_kernels.convolve(self, other, len(self) + len(other) - 1))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"TPoly({list(self)!r})"

    def __str__(self) -> str:
        terms = []
        for d in range(len(self) - 1, -1, -1):
            c = self[d]
            if not c:
                continue
            mono = "" if d == 0 else ("t" if d == 1 else f"t^{d}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{mono}")
        return "+".join(terms).replace("+-", "-") or "0"


class TQSeries:
    """Power series in ``q`` whose coefficients are :class:`TPoly` values."""

    __slots__ = ("order", "coeffs")

    var = "q"

    def __init__(self, coeffs: Iterable[Iterable[int]] = (), order: int | None = None):
        cs = [p if isinstance(p, TPoly) else TPoly(p) for p in coeffs]
        if order is None:
            order = max(len(cs) - 1, 0)
        if order < 0:
            raise ValueError("order must be non-negative")
        del cs[order + 1 :]
        cs.extend([TPoly()] * (order + 1 - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TQSeries is immutable")

    @classmethod
    def zero_series(cls, order: int) -> TQSeries:
        return cls((), order)

    @classmethod
    def one_series(cls, order: int) -> TQSeries:
        return cls(((1,),), order)

    @classmethod
    def t_series(cls, order: int) -> TQSeries:
        """The series ``t`` itself."""
        return cls(((0, 1),), order)

    @classmethod
    def from_qseries(cls, s: QSeries) -> TQSeries:
        return cls(((c,) for c in s.coeffs), s.order)

    def one(self) -> TQSeries:
        return TQSeries.one_series(self.order)

    def zero(self) -> TQSeries:
        return TQSeries.zero_series(self.order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, TQSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TQSeries({[list(p) for p in self.coeffs]!r}, order={self.order})"

    def __str__(self) -> str:
        terms = []
        for k, p in enumerate(self.coeffs):
            if not p:
                continue
            inner = str(p)
            if len([c for c in p if c]) > 1 and k:
                inner = f"({inner})"
            terms.append(inner if k == 0 else f"{inner}q" + (f"^{k}" if k > 1 else ""))
        return " + ".join(terms) + f" + O(q^{self.order + 1})" if terms else f"0 + O(q^{self.order + 1})"

    def coefficient(self, k: int, d: int) -> int:
        """Coefficient of ``t**d q**k``."""
        return self.coeffs[k][d]

    def _coerce(self, other) -> TQSeries | None:
        if isinstance(other, TQSeries):
            return other
        if isinstance(other, QSeries):
            return TQSeries.from_qseries(other)
        if isinstance(other, int):
            return TQSeries(((other,),), self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        return TQSeries([x + y for x, y in zip(self.coeffs[: n + 1], other.coeffs)], n)

    __radd__ = __add__

    def __neg__(self) -> TQSeries:
        return TQSeries([-p for p in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return TQSeries([p * other for p in self.coeffs], self.order)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        rows = _kernels.convolve2d(self.coeffs, other.coeffs, n + 1)
        return TQSeries(rows, n)

    __rmul__ = __mul__

    def constant_term(self) -> int:
        p = self.coeffs[0]
        if len(p) != 1:
            raise ValueError("non-invertible series")
        return p[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> TQSeries:
        if order > self.order:
            raise ValueError(f"cannot raise precision from {self.order} to {order}")
        return TQSeries(self.coeffs[: order + 1], order)

    def extend(self, order: int) -> TQSeries:
        """Zero-extend to ``order``; only for callers that never read the new slots."""
        return TQSeries(self.coeffs, max(order, self.order))

    def shift(self, k: int) -> TQSeries:
        return TQSeries((TPoly(),) * k + self.coeffs, self.order + k)

    def mul_t(self) -> TQSeries:
        """Multiply by ``t``."""
        return TQSeries([TPoly((0,) + p) if p else p for p in self.coeffs], self.order)

    def div_one_minus_qpow(self, n: int) -> TQSeries:
        cs = list(self.coeffs)
        for k in range(n, len(cs)):
            cs[k] = cs[k] + cs[k - n]
        return TQSeries(cs, self.order)

    def reciprocal(self) -> TQSeries:
        if self.coeffs[0] not in ((1,), (-1,)):
            raise ValueError("non-invertible series")
        return _newton_inverse(self)

    def at(self, t: int = 1) -> QSeries:
        """Substitute an integer for ``t``."""
        return QSeries((p(t) for p in self.coeffs), self.order)

    def max_degree(self) -> int:
        return max((p.degree() for p in self.coeffs), default=-1)

    def to_dict(self) -> dict[str, Any]:
        return {
            "var": "q",
            "order": self.order,
            "coeffs": [[str(c) for c in p] for p in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> TQSeries:
        return cls(([int(c) for c in p] for p in data["coeffs"]), int(data["order"]))


# ---------------------------------------------------------------------------
# bivariate x, q


class XQSeries:
    """Dense series in ``x`` and ``q``; ``coeffs[m][k]`` is ``[x^m q^k]``."""

    __slots__ = ("x_order", "q_order", "coeffs")

    var = "q"

    def __init__(self, coeffs: Sequence[Sequence[int]], x_order: int, q_order: int):
        if x_order < 0 or q_order < 0:
            raise ValueError("orders must be non-negative")
        rows = []
        for m in range(x_order + 1):
            row = [int(c) for c in coeffs[m][: q_order + 1]] if m < len(coeffs) else []
            row.extend([0] * (q_order + 1 - len(row)))
            rows.append(tuple(row))
        object.__setattr__(self, "x_order", x_order)
        object.__setattr__(self, "q_order", q_order)
        object.__setattr__(self, "coeffs", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("XQSeries is immutable")

    @property
    def order(self) -> tuple[int, int]:
        return (self.x_order, self.q_order)

    @classmethod
    def zero_series(cls, x_order: int, q_order: int) -> XQSeries:
        return cls((), x_order, q_order)

    @classmethod
    def one_series(cls, x_order: int, q_order: int) -> XQSeries:
        return cls(((1,),), x_order, q_order)

    @classmethod
    def x_series(cls, x_order: int, q_order: int) -> XQSeries:
        return cls(((), (1,)), x_order, q_order)

    @classmethod
    def q_series(cls, x_order: int, q_order: int) -> XQSeries:
        return cls(((0, 1),), x_order, q_order)

    def one(self) -> XQSeries:
        return XQSeries.one_series(self.x_order, self.q_order)

    def zero(self) -> XQSeries:
        return XQSeries.zero_series(self.x_order, self.q_order)

    def __getitem__(self, mk: tuple[int, int]) -> int:
        m, k = mk
        return self.coeffs[m][k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, XQSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"XQSeries({[list(r) for r in self.coeffs]!r}, x_order={self.x_order}, q_order={self.q_order})"

    def with_coefficient(self, m: int, k: int, value: int) -> XQSeries:
        rows = [list(r) for r in self.coeffs]
        rows[m][k] = value
        return XQSeries(rows, self.x_order, self.q_order)

    def _coerce(self, other) -> XQSeries | None:
        if isinstance(other, XQSeries):
            return other
        if isinstance(other, int):
            return XQSeries(((other,),), self.x_order, self.q_order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        xo, qo = min(self.x_order, other.x_order), min(self.q_order, other.q_order)
        rows = [[u + v for u, v in zip(ra, rb)] for ra, rb in zip(self.coeffs, other.coeffs)]
        return XQSeries(rows, xo, qo)

    __radd__ = __add__

    def __neg__(self) -> XQSeries:
        return XQSeries([[-c for c in r] for r in self.coeffs], self.x_order, self.q_order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return XQSeries([[other * c for c in r] for r in self.coeffs], self.x_order, self.q_order)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        xo, qo = min(self.x_order, other.x_order), min(self.q_order, other.q_order)
        a = [r[: qo + 1] for r in self.coeffs]
        b = [r[: qo + 1] for r in other.coeffs]
        return XQSeries(_kernels.convolve2d(a, b, xo + 1), xo, qo)

    __rmul__ = __mul__

    def constant_term(self) -> int:
        return self.coeffs[0][0]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.coeffs)

    def truncate(self, order: tuple[int, int]) -> XQSeries:
        xo, qo = order
        if xo > self.x_order or qo > self.q_order:
            raise ValueError("cannot raise precision")
        return XQSeries(self.coeffs, xo, qo)

    def shift(self, k: int) -> XQSeries:
        """Product with ``q**k``; the q-order grows by ``k``."""
        return XQSeries([(0,) * k + r for r in self.coeffs], self.x_order, self.q_order + k)

    def reciprocal(self) -> XQSeries:
        if self.coeffs[0][0] not in (1, -1):
            raise ValueError("non-invertible series")
        return _newton_inverse(self)

    def to_dict(self) -> dict[str, Any]:
        return {
            "vars": ["x", "q"],
            "order": [self.x_order, self.q_order],
            "coeffs": [[str(c) for c in r] for r in self.coeffs],
        }


# ---------------------------------------------------------------------------
# module-level operations


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def reciprocal(a):
    return a.reciprocal()


def pochhammer(t0, n: int, order=None):
    """``(t0; q)_n``, the product of ``1 - t0*q**i`` for ``0 <= i < n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    order = t0.order if order is None else order
    t0 = t0.truncate(order)
    result = t0.one()
    for i in range(n):
        result = result - (result * t0).shift(i).truncate(order)
    return result


def pochhammer_infinite(t0, order=None):
    """``(t0; q)_oo``; ``t0`` needs zero constant term so the product is finite."""
    if t0.constant_term() != 0:
        raise ValueError("divergent infinite product")
    order = t0.order if order is None else order
    t0 = t0.truncate(order)
    result = t0.one()
    i = 0
    while True:
        factor = t0.shift(i).truncate(order)
        if factor.is_zero():
            return result
        result = result - result * factor
        i += 1


def series_from_dict(data: dict[str, Any]):
    """Rebuild a :class:`QSeries` or :class:`TQSeries` from its JSON form."""
    coeffs = data.get("coeffs", [])
    if coeffs and isinstance(coeffs[0], list):
        return TQSeries.from_dict(data)
    return QSeries.from_dict(data)
