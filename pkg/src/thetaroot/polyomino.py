"""Stack polyominoes and Ferrers diagrams: exhaustive enumeration and closed forms.

The enumerators are brute force and share no code with the series module;
they are the ground truth the generating functions are checked against.
The closed forms are expanded with a small sparse multivariate polynomial
routine kept local to this module for the same reason.

Tables are :class:`collections.Counter` objects keyed by
``(area, width, height, rise)`` for stacks and ``(area, width, height)`` for
Ferrers diagrams.
"""

from __future__ import annotations

import csv
import io
from collections import Counter, defaultdict
from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Mapping


@dataclass(frozen=True)
class StackPolyomino:
    """Unimodal column heights ``h1 <= ... <= hj < h(j+1) >= ... >= hm``."""

    heights: tuple[int, ...]

    def __post_init__(self):
        hs = tuple(int(h) for h in self.heights)
        object.__setattr__(self, "heights", hs)
        if not hs or min(hs) < 1:
            raise ValueError(f"stack heights must be a non-empty sequence of positive integers: {hs}")
        if not self.rise_candidates():
            raise ValueError(f"stack heights are not unimodal: {hs}")

    @property
    def width(self) -> int:
        return len(self.heights)

    @property
    def height(self) -> int:
        return max(self.heights)

    @property
    def area(self) -> int:
        return sum(self.heights)

    @property
    def rise(self) -> int:
        """Number of columns strictly before the first column of maximal height."""
        return self.heights.index(self.height)

    def rise_candidates(self) -> set[int]:
        """Every ``j`` for which the defining chain of inequalities holds."""
        hs = self.heights
        found = set()
        for j in range(len(hs)):
            left = all(hs[i] <= hs[i + 1] for i in range(j - 1)) and (j == 0 or hs[j - 1] < hs[j])
            right = all(hs[i] >= hs[i + 1] for i in range(j, len(hs) - 1))
            if left and right:
                found.add(j)
        return found

    def key(self) -> tuple[int, int, int, int]:
        return (self.area, self.width, self.height, self.rise)


@dataclass(frozen=True)
class FerrersDiagram:
    """Weakly decreasing row lengths ``m1 >= m2 >= ... >= mh >= 1``, bottom row first."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rs = tuple(int(m) for m in self.rows)
        object.__setattr__(self, "rows", rs)
        if not rs or rs[-1] < 1 or any(rs[i] < rs[i + 1] for i in range(len(rs) - 1)):
            raise ValueError(f"rows must be a weakly decreasing sequence of positive integers: {rs}")

    @property
    def width(self) -> int:
        return self.rows[0]

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def area(self) -> int:
        return sum(self.rows)

    @property
    def durfee(self) -> int:
        """Side of the Durfee square, ``max{i : m_i >= i}``."""
        return max(i for i, m in enumerate(self.rows, 1) if m >= i)

    @property
    def durfee_condition(self) -> bool:
        """True when the n-th largest row has length exactly n for some n."""
        return any(m == i for i, m in enumerate(self.rows, 1))

    def key(self) -> tuple[int, int, int]:
        return (self.area, self.width, self.height)


# ---------------------------------------------------------------------------
# exhaustive generation


def iter_stacks(max_area: int) -> Iterator[StackPolyomino]:
    """Every stack polyomino of area at most ``max_area``.

    Columns are appended left to right by a two-state machine: while
    ascending, any height is allowed and a drop switches to descending;
    while descending, heights may not increase.  A unimodal sequence fixes
    its state path, so nothing is produced twice.
    """

    def grow(prefix: list[int], ascending: bool, budget: int):
        yield StackPolyomino(tuple(prefix))
        last = prefix[-1]
        top = budget if ascending else min(budget, last)
        for h in range(1, top + 1):
            prefix.append(h)
            yield from grow(prefix, ascending and h >= last, budget - h)
            prefix.pop()

    for h in range(1, max_area + 1):
        yield from grow([h], True, max_area - h)


def iter_ferrers(max_area: int, durfee_condition: bool = False) -> Iterator[FerrersDiagram]:
    """Every Ferrers diagram (partition) of area at most ``max_area``."""

    def grow(prefix: list[int], budget: int):
        diagram = FerrersDiagram(tuple(prefix))
        if not durfee_condition or diagram.durfee_condition:
            yield diagram
        for m in range(1, min(prefix[-1], budget) + 1):
            prefix.append(m)
            yield from grow(prefix, budget - m)
            prefix.pop()

    for m in range(1, max_area + 1):
        yield from grow([m], max_area - m)


def enumerate_stacks(max_area: int) -> Counter:
    if max_area < 0:
        raise ValueError("max_area must be non-negative")
    return Counter(s.key() for s in iter_stacks(max_area))


def enumerate_ferrers(max_area: int, durfee_condition: bool = False) -> Counter:
    if max_area < 0:
        raise ValueError("max_area must be non-negative")
    return Counter(f.key() for f in iter_ferrers(max_area, durfee_condition))


# ---------------------------------------------------------------------------
# closed forms via sparse polynomials; exponent tuples end with the area


Poly = dict


def _mul(p: Poly, r: Poly, caps: tuple[int, ...]) -> Poly:
    out: dict = defaultdict(int)
    for e1, c1 in p.items():
        for e2, c2 in r.items():
            e = tuple(u + v for u, v in zip(e1, e2))
            if all(v <= c for v, c in zip(e, caps)):
                out[e] += c1 * c2
    return {e: c for e, c in out.items() if c}


def _add(p: Poly, r: Poly) -> Poly:
    out = dict(p)
    for e, c in r.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def _geometric(step: tuple[int, ...], caps: tuple[int, ...]) -> Poly:
    """``1 / (1 - m)`` for the monomial with exponent ``step``."""
    out = {}
    e = tuple(0 for _ in step)
    while all(v <= c for v, c in zip(e, caps)):
        out[e] = 1
        e = tuple(u + v for u, v in zip(e, step))
        if not any(step):
            break
    return out


def _table(p: Poly, order: tuple[int, ...]) -> Counter:
    """Re-key exponents so the area comes first, as in the enumeration tables."""
    return Counter({tuple(e[i] for i in order): c for e, c in p.items()})


def _stack_caps(x_order, y_order, a_order, q_order):
    # width, height and rise never exceed the area
    return (min(x_order, q_order), min(y_order, q_order), min(a_order, q_order), q_order)


def stack_gf_closed(x_order: int, y_order: int, a_order: int, q_order: int) -> Counter:
    """Expand ``sum_{n>=1} x (yq)^n / ((xq;q)_n (axq;q)_{n-1})``."""
    caps = _stack_caps(x_order, y_order, a_order, q_order)
    total: Poly = {}
    for n in range(1, min(caps[1], q_order) + 1):
        term = {(1, n, 0, n): 1}
        for k in range(1, n + 1):
            term = _mul(term, _geometric((1, 0, 0, k), caps), caps)
        for k in range(1, n):
            term = _mul(term, _geometric((1, 0, 1, k), caps), caps)
        total = _add(total, term)
    return _table(total, (3, 0, 1, 2))


def stack_gf_functional(
    x_order: int, y_order: int, a_order: int, q_order: int, iterations: int | None = None
) -> Counter:
    """Iterate ``G(x) = xyq/(1-xq) + y G(xq) / ((1-xq)(1-axq))`` from ``G = 0``.

    Each pass adds one height layer.  With ``iterations=None`` the loop runs
    until ``G`` stops changing at the truncation.
    """
    caps = _stack_caps(x_order, y_order, a_order, q_order)
    base = _mul({(1, 1, 0, 1): 1}, _geometric((1, 0, 0, 1), caps), caps)
    factor = _mul(
        _mul({(0, 1, 0, 0): 1}, _geometric((1, 0, 0, 1), caps), caps),
        _geometric((1, 0, 1, 1), caps),
        caps,
    )
    g: Poly = {}
    done = 0
    while iterations is None or done < iterations:
        # x -> xq raises the area exponent by the width exponent
        shifted = {(w, h, r, q + w): c for (w, h, r, q), c in g.items() if q + w <= caps[3]}
        nxt = _add(base, _mul(factor, shifted, caps))
        done += 1
        if nxt == g:
            break
        g = nxt
    return _table(g, (3, 0, 1, 2))


def ferrers_gf_two_forms(x_order: int, y_order: int, q_order: int) -> tuple[Counter, Counter]:
    """Ferrers diagrams by width, height and area, expanded two ways.

    Column form: ``sum_n x^n y q^n / (yq;q)_n`` (bottom row of length n, rows
    of length <= n on top).  Durfee form:
    ``sum_n (xy)^n q^(n^2) / ((xq;q)_n (yq;q)_n)``.
    """
    caps = (min(x_order, q_order), min(y_order, q_order), q_order)
    by_columns: Poly = {}
    for n in range(1, caps[0] + 1):
        term = {(n, 1, n): 1}
        for k in range(1, n + 1):
            term = _mul(term, _geometric((0, 1, k), caps), caps)
        by_columns = _add(by_columns, term)
    by_durfee: Poly = {}
    for n in range(1, isqrt(q_order) + 1):
        term = {(n, n, n * n): 1}
        for k in range(1, n + 1):
            term = _mul(term, _geometric((1, 0, k), caps), caps)
            term = _mul(term, _geometric((0, 1, k), caps), caps)
        by_durfee = _add(by_durfee, term)
    return _table(by_columns, (2, 0, 1)), _table(by_durfee, (2, 0, 1))


def ferrers_gf_constrained(x_order: int, y_order: int, q_order: int) -> Counter:
    """Expand ``sum_n (xy)^n q^(n^2) / ((yq;q)_n (xq;q)_{n-1})``."""
    caps = (min(x_order, q_order), min(y_order, q_order), q_order)
    total: Poly = {}
    for n in range(1, isqrt(q_order) + 1):
        term = {(n, n, n * n): 1}
        for k in range(1, n + 1):
            term = _mul(term, _geometric((0, 1, k), caps), caps)
        for k in range(1, n):
            term = _mul(term, _geometric((1, 0, k), caps), caps)
        total = _add(total, term)
    return _table(total, (2, 0, 1))


def truncate_table(table: Mapping, x_order=None, y_order=None, a_order=None, q_order=None) -> Counter:
    """Restrict a keyed table to the given per-variable caps (``None`` = no cap)."""
    caps = (q_order, x_order, y_order, a_order)
    return Counter(
        {k: c for k, c in table.items() if all(cap is None or v <= cap for v, cap in zip(k, caps)) and c}
    )


def area_marginal(table: Mapping, max_area: int) -> list[int]:
    out = [0] * (max_area + 1)
    for key, c in table.items():
        if key[0] <= max_area:
            out[key[0]] += c
    return out


def table_to_csv(table: Mapping, header: tuple[str, ...]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header + ("count",))
    for key in sorted(table):
        if table[key]:
            writer.writerow(key + (table[key],))
    return buf.getvalue()
