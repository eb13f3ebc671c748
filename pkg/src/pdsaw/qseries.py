"""Exact q-polynomials, truncated power series, and the moment formulas.

The Touchard-Riordan and Williams polynomials are evaluated as printed and
cross-checked against continued fractions, transfer recurrences over
weighted paths and brute-force statistic distributions.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

from . import core, stats


class InexactDivision(ArithmeticError):
    pass


class QPoly:
    """Laurent polynomial in q with exact integer coefficients.

    Doubles as the plain polynomial type: ``is_polynomial`` says whether
    every stored exponent is non-negative.  Zero coefficients are never
    stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[int] | int = ()):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        elif not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        self._c = {int(e): int(c) for e, c in coeffs.items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QPoly":
        return cls({exp: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(sorted(self._c.items()))

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def __bool__(self):
        return bool(self._c)

    @property
    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._c)

    @property
    def degree(self) -> int:
        return max(self._c, default=-1)

    @property
    def low_degree(self) -> int:
        return min(self._c, default=0)

    def dense(self) -> list[int]:
        """Coefficients of q^0 .. q^degree; requires a polynomial."""
        if not self.is_polynomial:
            raise ValueError("negative exponents present")
        return [self[e] for e in range(self.degree + 1)]

    def at_one(self) -> int:
        return sum(self._c.values())

    def polynomial_part(self) -> "QPoly":
        return QPoly({e: c for e, c in self._c.items() if e >= 0})

    @staticmethod
    def _lift(other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = QPoly(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k."""
        return QPoly({e + k: c for e, c in self._c.items()})

    def divmod(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Long division in the Laurent ring, after normalising both to q^0."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        a_low, b_low = self.low_degree, other.low_degree
        rem = self.shift(-a_low)._c
        div = other.shift(-b_low)
        d_deg, lead = div.degree, div[div.degree]
        quot: dict[int, int] = {}
        while rem and max(rem) >= d_deg:
            top = max(rem)
            c = rem[top]
            if c % lead:
                break
            k = top - d_deg
            quot[k] = c // lead
            for e, dc in div._c.items():
                v = rem.get(e + k, 0) - quot[k] * dc
                if v:
                    rem[e + k] = v
                else:
                    rem.pop(e + k, None)
        return QPoly(quot).shift(a_low - b_low), QPoly(rem).shift(a_low)

    def div_exact(self, other: "QPoly") -> "QPoly":
        q, r = self.divmod(other)
        if r:
            raise InexactDivision(f"inexact division of {self} by {other}")
        return q

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items()):
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                term = var if mag == 1 else f"{mag}{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    def __repr__(self):
        return f"QPoly({self.coeffs})"

    def to_json(self) -> dict:
        return {"var": "q", "coeffs": {str(e): c for e, c in sorted(self._c.items())}}

    @classmethod
    def from_json(cls, data: dict) -> "QPoly":
        return cls({int(e): c for e, c in data["coeffs"].items()})


# Plain and Laurent polynomials share one class.
QPolynomial = QLaurent = QPoly

ONE_MINUS_Q = QPoly({0: 1, 1: -1})


def q_integer(k: int) -> QPoly:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return QPoly([1] * k)


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def touchard_riordan(n: int) -> QPoly:
    """Generating polynomial of matchings of [2n] by nestings (or crossings)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    numer = QPoly(
        {
            i * (i + 1) // 2: (-1) ** i * (_binom(2 * n, n - i) - _binom(2 * n, n - i - 1))
            for i in range(n + 1)
        }
    )
    return numer.div_exact(ONE_MINUS_Q**n)


def williams(n: int) -> QPoly:
    """Generating polynomial of permutations of [n] by nestings."""
    if n < 1:
        raise ValueError("n must be at least 1")
    total = QPoly()
    for k in range(1, n + 1):
        inner = QPoly()
        for i in range(k):
            term = q_integer(k - i) ** n * QPoly.monomial(k * i, (-1) ** i)
            inner += term * (QPoly.monomial(k - i, _binom(n, i)) + _binom(n, i - 1))
        total += inner.shift(-k * k)
    if not total.is_polynomial:
        raise ArithmeticError(f"negative exponents did not cancel: {total!r}")
    return total


# --- power series in x with QPoly coefficients -------------------------------


def _series_mul(a: list[QPoly], b: list[QPoly], order: int) -> list[QPoly]:
    out = [QPoly() for _ in range(order + 1)]
    for i, ai in enumerate(a[: order + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def _series_reciprocal(a: list[QPoly], order: int) -> list[QPoly]:
    """1 / a for a series with constant term 1."""
    if a[0] != 1:
        raise ValueError("constant term must be 1")
    out = [QPoly(1)]
    for m in range(1, order + 1):
        acc = QPoly()
        for k in range(1, min(m, len(a) - 1) + 1):
            acc = acc + a[k] * out[m - k]
        out.append(-acc)
    return out


def _hermite_cf(depth: int, order: int) -> list[QPoly]:
    # T_k = 1 / (1 - [k] x T_{k+1}), truncated with T_{depth+1} = 1
    t = [QPoly(1)] + [QPoly()] * order
    for k in range(depth, 0, -1):
        denom = [QPoly(1)] + [-(q_integer(k) * c) for c in t[:order]]
        t = _series_reciprocal(denom, order)
    return t


def _laguerre_cf(depth: int, order: int) -> list[QPoly]:
    # T_k = 1 / (1 - ([k]+[k+1]) x - [k+1]^2 x^2 T_{k+1}), answer T_0
    t = [QPoly(1)] + [QPoly()] * order
    for k in range(depth, -1, -1):
        b = q_integer(k) + q_integer(k + 1)
        lam = q_integer(k + 1) ** 2
        denom = [QPoly(1), -b] + [QPoly()] * (order - 1)
        for j, c in enumerate(t[: order - 1]):
            denom[j + 2] = denom[j + 2] - lam * c
        t = _series_reciprocal(denom[: order + 1], order)
    return t


_CF = {"hermite": _hermite_cf, "laguerre": _laguerre_cf}


def cf_moments(family: str, n: int) -> QPoly:
    """Coefficient of x^n in the continued fraction of the moment series.

    The fraction is cut at depth n + 1 and compared with depth n + 2; the
    coefficients up to x^n must not move.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    cf = _CF[family]
    series = cf(n + 1, n)
    deeper = cf(n + 2, n)
    if series != deeper:
        raise ArithmeticError(f"{family} continued fraction not stable at depth {n + 1}")
    return series[n]


def transfer_distribution(family: str, n: int) -> QPoly:
    """Sum of q^(total weight) over weighted paths, by a DP over heights."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if family == "hermite":
        length = 2 * n
    elif family == "laguerre":
        length = n
    else:
        raise ValueError(f"unknown family {family!r}")
    layer = {0: QPoly(1)}
    for _ in range(length):
        nxt: dict[int, QPoly] = {}

        def add(h, poly):
            nxt[h] = nxt.get(h, QPoly()) + poly

        for h, poly in layer.items():
            add(h + 1, poly if family == "hermite" else poly * q_integer(h + 1))
            if h > 0:
                add(h - 1, poly * q_integer(h))
            if family == "laguerre":
                add(h, poly * (q_integer(h + 1) + q_integer(h)))
        layer = nxt
    return layer.get(0, QPoly())


def statistic_distribution(kind: str, stat: str, n: int, cap: int = core.DEFAULT_CAP) -> QPoly:
    """Brute force: sum of q^stat over every object of the given kind and size."""
    counts: dict[int, int] = {}
    for obj in core.enumerate_objects(kind, n, cap=cap):
        v = stats.statistic(obj, stat)
        counts[v] = counts.get(v, 0) + 1
    return QPoly(counts)


def joint_distribution(kind: str, n: int, cap: int = core.DEFAULT_CAP) -> dict[tuple[int, int], int]:
    """Counts of (crossings, nestings) pairs over matchings or permutations."""
    out: dict[tuple[int, int], int] = {}
    for obj in core.enumerate_objects(kind, n, cap=cap):
        key = (stats.crossings(obj), stats.nestings(obj))
        out[key] = out.get(key, 0) + 1
    return out


# --- rational power series in t ----------------------------------------------


class RationalSeries:
    """Power series in t with Fraction coefficients, truncated at ``order``."""

    __slots__ = ("c", "order")

    def __init__(self, coeffs: Iterable, order: int):
        c = [Fraction(x) for x in coeffs][: order + 1]
        self.c = c + [Fraction(0)] * (order + 1 - len(c))
        self.order = order

    def __getitem__(self, k):
        return self.c[k]

    def __add__(self, other):
        return RationalSeries([a + b for a, b in zip(self.c, self._lift(other).c)], self.order)

    def __sub__(self, other):
        return RationalSeries([a - b for a, b in zip(self.c, self._lift(other).c)], self.order)

    def __neg__(self):
        return RationalSeries([-a for a in self.c], self.order)

    def __mul__(self, other):
        other = self._lift(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.c):
            if a:
                for j in range(self.order + 1 - i):
                    out[i + j] += a * other.c[j]
        return RationalSeries(out, self.order)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RationalSeries([1], self.order)
        for _ in range(k):
            out = out * self
        return out

    def _lift(self, other) -> "RationalSeries":
        if isinstance(other, RationalSeries):
            if other.order != self.order:
                raise ValueError("mismatched truncation orders")
            return other
        return RationalSeries([other], self.order)

    def shift(self, k: int) -> "RationalSeries":
        """Multiply by t^k."""
        return RationalSeries([0] * k + self.c, self.order)

    def divide_by_t(self) -> "RationalSeries":
        """Exact division by t; the constant term must vanish.

        The top coefficient is unknown after the shift, so the order drops by one.
        """
        if self.c[0]:
            raise InexactDivision("inexact division by t")
        return RationalSeries(self.c[1:], self.order - 1)

    def truncate(self, order: int) -> "RationalSeries":
        return RationalSeries(self.c, order)

    def reciprocal(self) -> "RationalSeries":
        if not self.c[0]:
            raise ZeroDivisionError("constant term is zero")
        out = [1 / self.c[0]]
        for m in range(1, self.order + 1):
            acc = sum(self.c[k] * out[m - k] for k in range(1, m + 1))
            out.append(-acc / self.c[0])
        return RationalSeries(out, self.order)

    def sqrt(self) -> "RationalSeries":
        """Square root with constant term 1, from f^2 = g term by term."""
        if self.c[0] != 1:
            raise ValueError("constant term must be 1")
        f = [Fraction(1)]
        for m in range(1, self.order + 1):
            acc = sum(f[k] * f[m - k] for k in range(1, m))
            f.append((self.c[m] - acc) / 2)
        return RationalSeries(f, self.order)

    def integer_coeffs(self) -> list[int]:
        out = []
        for k, x in enumerate(self.c):
            if x.denominator != 1:
                raise ArithmeticError(f"non-integral coefficient {x} at t^{k}")
            out.append(int(x))
        return out

    def to_json(self) -> dict:
        coeffs = [int(x) if x.denominator == 1 else str(x) for x in self.c]
        return {"var": "t", "coeffs": coeffs}

    def __eq__(self, other):
        return isinstance(other, RationalSeries) and self.c == other.c

    def __repr__(self):
        return f"RationalSeries({[str(x) for x in self.c]})"


def free_walk_series(order: int) -> RationalSeries:
    """Closed form for symmetric-wedge walks ending anywhere, by total steps.

    With P = sqrt((1-t^2)(1-5t^2)) and Q = (1-3t^2-P)/(2t) the series is
    ((1+t)t - (1-t^2-P) * sum_n (-1)^n t^(n^2) Q^n) / (t(1-2t-t^2)).
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    # numerator is needed through t^(order+1); P one order further for Q
    work = order + 1
    one = RationalSeries([1], work + 1)
    t2 = one.shift(2)
    p = ((one - t2) * (one - 5 * t2)).sqrt()
    q = (one - 3 * t2 - p).divide_by_t() * Fraction(1, 2)
    p = p.truncate(work)
    one = one.truncate(work)
    t, t2 = one.shift(1), one.shift(2)
    alt = RationalSeries([0], work)
    n = 0
    while n * n <= work:
        alt = alt + (q**n).shift(n * n) * (-1) ** n
        n += 1
    numer = ((one + t) * t - (one - t2 - p) * alt).divide_by_t()
    result = numer * RationalSeries([1, -2, -1], order).reciprocal()
    result.integer_coeffs()
    return result
