"""Exact truncated power series in z with polynomial coefficients in x, y.

Coefficients are Fractions throughout; a polynomial is a sparse map from
(x-degree, y-degree) to a coefficient.  The generating function counting
noncrossing partitions by their numbers of nonnested and nonaligned blocks
is built along two independent routes: composing the component series, and
expanding the closed radical form directly.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import SetPartition, ValidationError, noncrossing_partitions, nonaligned_blocks, nonnested_blocks

Poly = dict[tuple[int, int], Fraction]

DEFAULT_ORDER = 12


def default_order() -> int:
    env = os.environ.get("COXCAT_TRUNC_ORDER")
    return int(env) if env else DEFAULT_ORDER


def _pclean(p: Poly) -> Poly:
    return {k: v for k, v in p.items() if v}


def _padd(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
    return _pclean(out)


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, Fraction(0)) + v1 * v2
    return _pclean(out)


def _pscale(a: Poly, c: Fraction) -> Poly:
    return _pclean({k: v * c for k, v in a.items()})


def _pconst(c) -> Poly:
    c = Fraction(c)
    return {(0, 0): c} if c else {}


@dataclass(frozen=True)
class Series:
    """A series in z truncated at a fixed order, one polynomial per degree."""

    order: int
    coeffs: tuple[Poly, ...]

    @classmethod
    def constant(cls, c, order: int) -> "Series":
        return cls(order, (_pconst(c),) + tuple({} for _ in range(order)))

    @classmethod
    def monomial(cls, c, xdeg: int, ydeg: int, zdeg: int, order: int) -> "Series":
        coeffs = [dict() for _ in range(order + 1)]
        if zdeg <= order and Fraction(c):
            coeffs[zdeg] = {(xdeg, ydeg): Fraction(c)}
        return cls(order, tuple(coeffs))

    def __add__(self, other: "Series") -> "Series":
        return Series(self.order, tuple(_padd(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Series") -> "Series":
        return self + other.scale(-1)

    def __mul__(self, other: "Series") -> "Series":
        out = [dict() for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = _padd(out[i + j], _pmul(a, b))
        return Series(self.order, tuple(out))

    def scale(self, c) -> "Series":
        c = Fraction(c)
        return Series(self.order, tuple(_pscale(p, c) for p in self.coeffs))

    def inverse(self) -> "Series":
        head = self.coeffs[0]
        if set(head) - {(0, 0)} or not head.get((0, 0)):
            raise ValidationError("inversion needs a nonzero scalar constant term")
        c0 = head[(0, 0)]
        inv = [dict() for _ in range(self.order + 1)]
        inv[0] = _pconst(1 / c0)
        for k in range(1, self.order + 1):
            acc: Poly = {}
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc = _padd(acc, _pmul(self.coeffs[i], inv[k - i]))
            inv[k] = _pscale(acc, -1 / c0)
        return Series(self.order, tuple(inv))

    def shift_down(self) -> "Series":
        """Divide by z; the constant term must vanish."""
        if self.coeffs[0]:
            raise ValidationError("cannot divide by z: nonzero constant term")
        return Series(self.order, self.coeffs[1:] + ({},))

    def scalar_coefficients(self) -> tuple[Fraction, ...]:
        out = []
        for p in self.coeffs:
            if set(p) - {(0, 0)}:
                raise ValidationError("series is not scalar")
            out.append(p.get((0, 0), Fraction(0)))
        return tuple(out)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValidationError("cannot extend a truncated series")
        return Series(order, self.coeffs[: order + 1])


def sqrt_one_minus_4z(order: int) -> Series:
    """The square root of 1 - 4z with constant term 1, by the quadratic recurrence."""
    c = [Fraction(1)]
    for k in range(1, order + 1):
        rhs = Fraction(-4 if k == 1 else 0)
        rhs -= sum(c[i] * c[k - i] for i in range(1, k))
        c.append(rhs / (2 * c[0]))
    return Series(order, tuple(_pconst(v) for v in c))


def series_c(order: int) -> Series:
    """Counts of noncrossing partitions: (1 - sqrt(1-4z)) / (2z)."""
    s = sqrt_one_minus_4z(order + 1)
    one = Series.constant(1, order + 1)
    return (one - s).shift_down().scale(Fraction(1, 2)).truncate(order)


def series_b(order: int) -> Series:
    """Counts of connected noncrossing partitions: 1 - 1/C."""
    c = series_c(order)
    return Series.constant(1, order) - c.inverse()


def series_a(order: int, var: str = "x") -> Series:
    """Partitions weighted by their nonnested block count: 1 / (1 - x B)."""
    xdeg, ydeg = (1, 0) if var == "x" else (0, 1)
    xb = Series.monomial(1, xdeg, ydeg, 0, order) * series_b(order)
    return (Series.constant(1, order) - xb).inverse()


def _assert_polynomial(f: Series) -> Series:
    for p in f.coeffs:
        for v in p.values():
            if v.denominator != 1:
                raise ValidationError("coefficients did not normalize to integer polynomials")
    return f


def series_f_factored(order: int) -> Series:
    """Joint distribution series from the component factorization."""
    one = Series.constant(1, order)
    xyz = Series.monomial(1, 1, 1, 1, order)
    g = xyz * series_a(order, "x") * series_a(order, "y") * series_b(order)
    return _assert_polynomial((one + g) * (one - xyz).inverse())


def series_f_closed(order: int) -> Series:
    """Joint distribution series from the closed radical form.

    With s = sqrt(1-4z), the inner term is 2xyz(1-s) divided by
    (2 - x(1-s)) (2 - y(1-s)); dividing by 1 - xyz completes the series.
    """
    one = Series.constant(1, order)
    s = sqrt_one_minus_4z(order)
    t = one - s
    dx = Series.constant(2, order) - Series.monomial(1, 1, 0, 0, order) * t
    dy = Series.constant(2, order) - Series.monomial(1, 0, 1, 0, order) * t
    g = Series.monomial(2, 1, 1, 1, order) * t * (dx * dy).inverse()
    xyz = Series.monomial(1, 1, 1, 1, order)
    return _assert_polynomial((one + g) * (one - xyz).inverse())


def series(which: str, order: int | None = None) -> Series:
    """One of the named series: C, B, A (in x) or F."""
    order = default_order() if order is None else order
    if order < 0:
        raise ValidationError("order must be nonnegative")
    key = which.upper()
    if key == "C":
        return series_c(order)
    if key == "B":
        return series_b(order)
    if key == "A":
        return series_a(order)
    if key == "F":
        return series_f_closed(order)
    raise ValidationError(f"unknown series {which!r}")


def nn_na_polynomial(n: int) -> Poly:
    """Sum of x^(nonnested count) y^(nonaligned count) over noncrossing partitions of [n]."""
    out: Poly = {}
    for p in noncrossing_partitions(n):
        k = (len(nonnested_blocks(p)), len(nonaligned_blocks(p)))
        out[k] = out.get(k, Fraction(0)) + 1
    return out


@dataclass(frozen=True)
class CrossCheckEntry:
    n: int
    ok: bool
    expected: Poly
    got: Poly


@dataclass(frozen=True)
class CrossCheckReport:
    entries: tuple[CrossCheckEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def mismatches(self) -> tuple[CrossCheckEntry, ...]:
        return tuple(e for e in self.entries if not e.ok)


def cross_check(n_max: int) -> CrossCheckReport:
    """Compare both series routes against direct enumeration, degree by degree."""
    if n_max < 1:
        raise ValidationError("n_max must be >= 1")
    closed = series_f_closed(n_max)
    factored = series_f_factored(n_max)
    entries = []
    for n in range(n_max + 1):
        expected = _pclean(nn_na_polynomial(n))
        got = _pclean(closed.coeffs[n])
        ok = expected == got and _pclean(factored.coeffs[n]) == got
        entries.append(CrossCheckEntry(n, ok, expected, got))
    return CrossCheckReport(tuple(entries))


def poly_str(p: Poly) -> str:
    if not p:
        return "0"
    terms = []
    for (i, j) in sorted(p, key=lambda k: (k[0] + k[1], k)):
        c = p[(i, j)]
        body = ("x" if i == 1 else f"x^{i}" if i else "") + ("y" if j == 1 else f"y^{j}" if j else "")
        if not body:
            terms.append(str(c))
        elif c == 1:
            terms.append(body)
        else:
            terms.append(f"{c}*{body}")
    return " + ".join(terms)
