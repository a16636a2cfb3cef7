"""Exact integer power series truncated at a fixed order.

A :class:`TruncatedSeries` of order ``N`` keeps the coefficients of
``q^0 .. q^N``.  Coefficients are Python ints, so nothing ever overflows or
rounds.  Binary operations insist on equal orders.

Most series in this package are products of ``(q^k;q^k)_inf`` factors, which
are very sparse.  Multiplication and the inversion recurrence therefore only
walk the non-zero entries of the sparser operand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class SeriesError(ValueError):
    pass


class OrderMismatchError(SeriesError):
    pass


class ExponentRangeError(SeriesError):
    pass


class NonUnitError(SeriesError):
    """Raised when a reciprocal is requested of a series whose constant term is not +-1."""


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise SeriesError(f"order must be non-negative, got {self.order}")
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.order + 1:
            raise SeriesError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_list(cls, coeffs: Sequence[int], order: int | None = None) -> TruncatedSeries:
        """Build a series from leading coefficients, zero-padding (or cutting) to ``order``."""
        if order is None:
            order = len(coeffs) - 1
        padded = list(coeffs[: order + 1]) + [0] * max(0, order + 1 - len(coeffs))
        return cls(order, tuple(int(c) for c in padded))

    def __getitem__(self, n: int) -> int:
        return coeff(self, n)

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def nonzero(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other, self.order))

    def __rsub__(self, other):
        return sub(_coerce(other, self.order), self)

    def __neg__(self):
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(other, self)

    def __truediv__(self, other):
        return divide(self, _coerce(other, self.order))

    def __pow__(self, e: int):
        return power(self, e)

    def __mod__(self, m: int):
        return reduce_mod(self, m)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:12])
        tail = ", ..." if self.order >= 12 else ""
        return f"TruncatedSeries(order={self.order}, [{shown}{tail}])"


def _coerce(x, order: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    if isinstance(x, int):
        return make_monomial(x, 0, order)
    raise TypeError(f"cannot combine TruncatedSeries with {type(x).__name__}")


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"order mismatch: {a.order} vs {b.order}")


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries(order, (0,) * (order + 1))


def one(order: int) -> TruncatedSeries:
    return make_monomial(1, 0, order)


def make_monomial(c: int, e: int, order: int) -> TruncatedSeries:
    if e < 0 or e > order:
        raise ExponentRangeError(f"exponent {e} outside 0..{order}")
    coeffs = [0] * (order + 1)
    coeffs[e] = c
    return TruncatedSeries(order, tuple(coeffs))


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_orders(a, b)
    return TruncatedSeries(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check_orders(a, b)
    return TruncatedSeries(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def scale(a: TruncatedSeries, c: int) -> TruncatedSeries:
    return TruncatedSeries(a.order, tuple(c * x for x in a.coeffs))


def sum_series(terms: Iterable[TruncatedSeries], order: int) -> TruncatedSeries:
    acc = [0] * (order + 1)
    for t in terms:
        if t.order != order:
            raise OrderMismatchError(f"order mismatch: {t.order} vs {order}")
        for i, c in enumerate(t.coeffs):
            acc[i] += c
    return TruncatedSeries(order, tuple(acc))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    n = a.order
    nza, nzb = a.nonzero(), b.nonzero()
    if len(nza) > len(nzb):
        nza, nzb = nzb, nza
    out = [0] * (n + 1)
    for i, ai in nza:
        lim = n - i
        for j, bj in nzb:
            if j > lim:
                break
            out[i + j] += ai * bj
    return TruncatedSeries(n, tuple(out))


def _unit(b: TruncatedSeries) -> int:
    b0 = b.coeffs[0]
    if b0 not in (1, -1):
        raise NonUnitError(f"constant term {b0} is not a unit in Z")
    return b0


def divide(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """``a * invert(b)``, computed in one pass of the inversion recurrence.

    Solves ``b * x = a`` term by term; the cost is ``O(N * nnz(b))``.
    """
    _check_orders(a, b)
    b0 = _unit(b)
    tail = [(j, bj) for j, bj in b.nonzero() if j > 0]
    x = list(a.coeffs)
    for k in range(a.order + 1):
        acc = x[k]
        for j, bj in tail:
            if j > k:
                break
            acc -= bj * x[k - j]
        # b0 is +-1, so multiplying is dividing
        x[k] = acc * b0
    return TruncatedSeries(a.order, tuple(x))


def invert(a: TruncatedSeries) -> TruncatedSeries:
    return divide(one(a.order), a)


def power(a: TruncatedSeries, e: int) -> TruncatedSeries:
    if e < 0:
        return power(invert(a), -e)
    result = one(a.order)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def substitute_power(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Replace ``q`` by ``q^k``, keeping the order fixed."""
    if k < 1:
        raise SeriesError(f"substitution power must be >= 1, got {k}")
    out = [0] * (a.order + 1)
    for i in range(a.order // k + 1):
        out[k * i] = a.coeffs[i]
    return TruncatedSeries(a.order, tuple(out))


def coeff(a: TruncatedSeries, n: int) -> int:
    if n < 0 or n > a.order:
        raise ExponentRangeError(f"exponent {n} outside 0..{a.order}")
    return a.coeffs[n]


def reduce_mod(a: TruncatedSeries, m: int) -> TruncatedSeries:
    if m < 2:
        raise SeriesError(f"modulus must be >= 2, got {m}")
    return TruncatedSeries(a.order, tuple(c % m for c in a.coeffs))


def truncate(a: TruncatedSeries, order: int) -> TruncatedSeries:
    """Drop coefficients beyond ``order`` (which must not exceed ``a.order``)."""
    if order > a.order:
        raise ExponentRangeError(f"cannot extend order {a.order} to {order}")
    return TruncatedSeries(order, a.coeffs[: order + 1])
