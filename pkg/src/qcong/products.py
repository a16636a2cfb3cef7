"""Named q-series: Pochhammer products, eta quotients, theta functions and the
biregular overpartition generating function."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable

from qcong.series import (
    SeriesError,
    TruncatedSeries,
    divide,
    mul,
    one,
    power,
)


class DomainError(SeriesError):
    pass


class CoprimalityError(DomainError):
    pass


@dataclass(frozen=True)
class PochhammerFactor:
    """``(sign*q^offset; q^step)_inf ** exponent``.

    ``sign`` is the sign of the base ``a``, so each factor is
    ``1 - sign*q^(offset + j*step)``.
    """

    sign: int
    offset: int
    step: int
    exponent: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign}")
        if self.offset < 1 or self.step < 1:
            raise DomainError(f"offset and step must be >= 1, got {self.offset}, {self.step}")


@dataclass(frozen=True)
class EtaQuotientSpec:
    """``prod (q^k;q^k)_inf ** e`` over ``factors``; duplicate steps are merged."""

    factors: tuple[tuple[int, int], ...]

    def __init__(self, factors: Iterable[tuple[int, int]]):
        merged: dict[int, int] = defaultdict(int)
        for k, e in factors:
            if k < 1:
                raise DomainError(f"eta step must be >= 1, got {k}")
            merged[k] += e
        object.__setattr__(
            self, "factors", tuple(sorted((k, e) for k, e in merged.items() if e))
        )


@lru_cache(maxsize=256)
def pochhammer_simple(k: int, order: int) -> TruncatedSeries:
    """``(q^k;q^k)_inf`` via the pentagonal number theorem."""
    if k < 1:
        raise DomainError(f"step must be >= 1, got {k}")
    out = [0] * (order + 1)
    out[0] = 1
    j = 1
    while True:
        lo = k * j * (3 * j - 1) // 2
        if lo > order:
            break
        hi = k * j * (3 * j + 1) // 2
        sign = -1 if j % 2 else 1
        out[lo] += sign
        if hi <= order:
            out[hi] += sign
        j += 1
    return TruncatedSeries(order, tuple(out))


def pochhammer_general(f: PochhammerFactor, order: int) -> TruncatedSeries:
    """Literal factor-by-factor expansion of ``(sign*q^r; q^s)_inf``, then ``** e``."""
    out = [0] * (order + 1)
    out[0] = 1
    m = f.offset
    while m <= order:
        # multiply in place by (1 - sign*q^m); walk downwards so each entry is read before it is updated
        for i in range(order, m - 1, -1):
            if out[i - m]:
                out[i] -= f.sign * out[i - m]
        m += f.step
    return power(TruncatedSeries(order, tuple(out)), f.exponent)


def eta_quotient(spec: EtaQuotientSpec | Iterable[tuple[int, int]], order: int) -> TruncatedSeries:
    if not isinstance(spec, EtaQuotientSpec):
        spec = EtaQuotientSpec(spec)
    result = one(order)
    # numerators first, then divide out the denominators; each step is sparse
    for k, e in spec.factors:
        if e > 0:
            p = pochhammer_simple(k, order)
            for _ in range(e):
                result = mul(result, p)
    for k, e in spec.factors:
        if e < 0:
            p = pochhammer_simple(k, order)
            for _ in range(-e):
                result = divide(result, p)
    return result


def theta_f(a_sign: int, a_exp: int, b_sign: int, b_exp: int, order: int) -> TruncatedSeries:
    """Ramanujan's ``f(a, b)`` for monomial arguments ``a = a_sign*q^a_exp``, ``b = b_sign*q^b_exp``."""
    if a_sign not in (1, -1) or b_sign not in (1, -1):
        raise DomainError("theta argument signs must be +1 or -1")
    if a_exp < 0 or b_exp < 0:
        raise DomainError("theta argument exponents must be non-negative")
    if a_exp + b_exp == 0:
        raise DomainError("f(a, b) diverges when the exponent of a*b is 0")
    out = [0] * (order + 1)
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        while True:
            ta, tb = n * (n + 1) // 2, n * (n - 1) // 2
            e = ta * a_exp + tb * b_exp
            if e > order:
                break
            out[e] += (a_sign**ta) * (b_sign**tb)
            n += direction
    return TruncatedSeries(order, tuple(out))


def jacobi_triple_product(a_sign: int, a_exp: int, b_sign: int, b_exp: int, order: int) -> TruncatedSeries:
    """Product side ``(-a;ab)_inf (-b;ab)_inf (ab;ab)_inf`` of ``f(a, b)``; needs both exponents >= 1."""
    step = a_exp + b_exp
    ab_sign = a_sign * b_sign
    parts = [
        PochhammerFactor(-a_sign, a_exp, step),
        PochhammerFactor(-b_sign, b_exp, step),
        PochhammerFactor(ab_sign, step, step),
    ]
    result = one(order)
    for p in parts:
        result = mul(result, pochhammer_general(p, order))
    return result


def phi(sign: int, scale: int, order: int) -> TruncatedSeries:
    """``phi(sign*q^scale) = 1 + 2 * sum_{n>=1} (sign*q^scale)^(n^2)``."""
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    if scale < 1:
        raise DomainError(f"scale must be >= 1, got {scale}")
    out = [0] * (order + 1)
    out[0] = 1
    n = 1
    while scale * n * n <= order:
        out[scale * n * n] = 2 * (sign ** (n * n))
        n += 1
    return TruncatedSeries(order, tuple(out))


def biregular_spec(l1: int, l2: int) -> EtaQuotientSpec:
    if l1 <= 1 or l2 <= 1:
        raise DomainError(f"l1 and l2 must exceed 1, got ({l1}, {l2})")
    if gcd(l1, l2) != 1:
        raise CoprimalityError(f"l1={l1} and l2={l2} are not coprime")
    return EtaQuotientSpec(
        [
            (2, 1), (l1, 2), (l2, 2), (2 * l1 * l2, 1),
            (1, -2), (2 * l1, -1), (2 * l2, -1), (l1 * l2, -2),
        ]
    )


@lru_cache(maxsize=64)
def biregular_gf(l1: int, l2: int, order: int) -> TruncatedSeries:
    """Generating function of the (l1, l2)-biregular overpartitions, up to ``q^order``."""
    return eta_quotient(biregular_spec(l1, l2), order)


def biregular_gf_product_form(l1: int, l2: int, order: int) -> TruncatedSeries:
    """The same series from the ``(1 + q^n)`` form of the product, one factor at a time.

    Used only to cross-check :func:`biregular_gf`.
    """
    biregular_spec(l1, l2)
    plus = lambda s: pochhammer_general(PochhammerFactor(-1, s, s), order)  # noqa: E731
    minus = lambda s: pochhammer_general(PochhammerFactor(1, s, s), order)  # noqa: E731
    num = one(order)
    for p in (plus(1), plus(l1 * l2), minus(l1), minus(l2)):
        num = mul(num, p)
    for p in (plus(l1), plus(l2), minus(1), minus(l1 * l2)):
        num = divide(num, p)
    return num


def overpartition_gf(order: int) -> TruncatedSeries:
    """``(q^2;q^2)_inf / (q;q)_inf^2``."""
    return eta_quotient([(1, -2), (2, 1)], order)


def inverse_phi_minus_factorization(order: int) -> TruncatedSeries:
    """``prod_{j>=0} phi(q^(2^j)) ** (2^j)``, truncated; equals ``1/phi(-q)``."""
    result = one(order)
    j = 0
    while (1 << j) <= order:
        result = mul(result, power(phi(1, 1 << j, order), 1 << j))
        j += 1
    return result

