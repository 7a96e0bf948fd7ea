"""Truncated formal power series in x with BivarPoly coefficients.

A series of order N knows its coefficients for x^0 .. x^N and claims
nothing beyond.  Combining series of different orders truncates to the
smaller order; comparing series of different orders is an error.

Compositional inversion uses Newton iteration with doubling precision:
    g <- g - (f(g) - x) / f'(g)
Lagrange inversion (`lagrange_coefficient`) is kept as an independent
route to individual coefficients of powers of the inverse, so the two
can cross-validate each other.
"""

from __future__ import annotations

from fractions import Fraction

from .ring import ONE, ZERO, BivarPoly, as_poly


class NonUnitConstantTerm(ArithmeticError):
    """Divisor series has a non-invertible constant term."""


class NonzeroConstantTerm(ArithmeticError):
    """Inner series of a composition has a nonzero constant term."""


class NotInvertible(ArithmeticError):
    """Series does not satisfy the preconditions for compositional inversion."""


class TruncSeries:
    """Immutable truncated power series; coefficients indexed 0..order."""

    __slots__ = ("order", "_c")

    def __init__(self, coeffs, order=None):
        coeffs = [as_poly(c) for c in coeffs]
        if order is None:
            if not coeffs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) < order + 1:
            coeffs = coeffs + [ZERO] * (order + 1 - len(coeffs))
        self.order = order
        self._c = tuple(coeffs[: order + 1])

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([ONE], order)

    @classmethod
    def x(cls, order: int) -> "TruncSeries":
        if order < 1:
            raise ValueError("the series x needs order >= 1")
        return cls([ZERO, ONE], order)

    @classmethod
    def from_dict(cls, coeffs: dict, order: int) -> "TruncSeries":
        out = [ZERO] * (order + 1)
        for n, c in coeffs.items():
            if 0 <= n <= order:
                out[n] = as_poly(c)
        return cls(out, order)

    # -- access ----------------------------------------------------------

    def coefficient(self, n: int) -> BivarPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient x^{n} beyond known order {self.order}")
        return self._c[n]

    __getitem__ = coefficient

    def coefficients(self):
        return self._c

    def valuation(self):
        """Index of the first nonzero coefficient, or None for the zero series."""
        for i, c in enumerate(self._c):
            if c:
                return i
        return None

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._c)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError(
                f"series of different orders are not comparable ({self.order} vs {other.order})"
            )
        return self._c == other._c

    __hash__ = None

    def __repr__(self):
        inner = " + ".join(
            f"({c.to_text()})x^{i}" for i, c in enumerate(self._c) if c
        )
        return f"TruncSeries({inner or '0'} + O(x^{self.order + 1}))"

    # -- shape adjustments -------------------------------------------------

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot truncate to a higher order")
        if order == self.order:
            return self
        return TruncSeries(self._c[: order + 1], order)

    def _extend(self, order: int) -> "TruncSeries":
        # Pads with zeros *claiming* precision; only for Newton internals,
        # where the next correction step overwrites the padded range.
        if order <= self.order:
            return self.truncate(order)
        return TruncSeries(list(self._c), order)

    def shift_up(self, k: int = 1) -> "TruncSeries":
        """Multiply by x^k; the result is legitimately known to order+k."""
        return TruncSeries([ZERO] * k + list(self._c), self.order + k)

    def shift_down(self, k: int = 1) -> "TruncSeries":
        """Divide by x^k, requiring the low coefficients to vanish."""
        if any(self._c[i] for i in range(min(k, self.order + 1))):
            raise ValueError(f"series is not divisible by x^{k}")
        if self.order < k:
            raise ValueError("order too small to shift down")
        return TruncSeries(self._c[k:], self.order - k)

    # -- ring operations ---------------------------------------------------

    def __neg__(self):
        return TruncSeries([-c for c in self._c], self.order)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, BivarPoly)):
            out = list(self._c)
            out[0] = out[0] + other
            return TruncSeries(out, self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return TruncSeries([self._c[i] + other._c[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, BivarPoly)):
            return self + (-as_poly(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, BivarPoly)):
            other = as_poly(other)
            return TruncSeries([c * other for c in self._c], self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._c, other._c
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative series power")
        result = TruncSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            inv = Fraction(1, 1) / other
            return TruncSeries([c * inv for c in self._c], self.order)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        b0 = other._c[0]
        if not b0.constant_coefficient():
            raise NonUnitConstantTerm(
                "divisor has zero constant rational coefficient at x^0"
            )
        a, b = self._c, other._c
        scalar = b0.is_constant()
        inv0 = Fraction(1, 1) / b0.constant_coefficient() if scalar else None
        one_divisor = b0.is_one()
        out = []
        for i in range(n + 1):
            acc = a[i]
            for j in range(1, i + 1):
                bj = b[j]
                if bj and out[i - j]:
                    acc = acc - bj * out[i - j]
            if one_divisor:
                out.append(acc)
            elif scalar:
                out.append(acc * inv0)
            else:
                out.append(acc.divide_exact(b0))
        return TruncSeries(out, n)

    # -- composition and inversion ------------------------------------------

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """self(inner(x)), truncated to the smaller order."""
        if inner._c[0]:
            raise NonzeroConstantTerm("inner series must have zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = TruncSeries([self._c[n]], n)
        for i in range(n - 1, -1, -1):
            result = result * inner + self._c[i]
        return result

    def derivative(self) -> "TruncSeries":
        if self.order == 0:
            return TruncSeries.zero(0)
        return TruncSeries(
            [self._c[i] * i for i in range(1, self.order + 1)], self.order - 1
        )

    def reversion(self) -> "TruncSeries":
        """Compositional inverse g with self(g) = g(self) = x up to the order.

        Requires a zero constant term and an x^1 coefficient whose constant
        rational part is invertible (series with a non-unit x^1 coefficient
        are rejected rather than handled).
        """
        if self._c[0]:
            raise NotInvertible("series with nonzero constant term has no inverse")
        if self.order < 1:
            raise NotInvertible("order 0 series cannot be inverted")
        u = self._c[1].constant_coefficient()
        if not u:
            raise NotInvertible("x^1 coefficient has zero constant rational part")
        n = self.order
        g = TruncSeries([ZERO, as_poly(Fraction(1, 1) / u)], 1)
        p = 1
        fprime = self.derivative()
        while p < n:
            m = min(2 * p + 1, n)
            g = g._extend(m)
            err = self.truncate(m).compose(g) - TruncSeries.x(m)
            val = err.valuation()
            if val is None:
                p = m
                continue
            if val <= p:
                raise NotInvertible(
                    "x^1 coefficient is not invertible in the polynomial ring"
                )
            num = err.shift_down(val)
            den = fprime.truncate(m - val).compose(g.truncate(m - val))
            g = g - (num / den).shift_up(val)
            p = m
        return g

    # -- coefficient-wise helpers --------------------------------------------

    def map_coefficients(self, fn) -> "TruncSeries":
        return TruncSeries([fn(c) for c in self._c], self.order)

    def eval_q(self, v) -> "TruncSeries":
        return self.map_coefficients(lambda c: c.eval_q(v))

    def eval_y(self, v) -> "TruncSeries":
        return self.map_coefficients(lambda c: c.eval_y(v))


def lagrange_coefficient(c_series: TruncSeries, n: int, k: int) -> BivarPoly:
    """[x^n] of the k-th power of the compositional inverse of c_series.

    Computed as (k/n) [x^(n-k)] (x / c_series)^n, never constructing the
    inverse itself.
    """
    if not (n >= k >= 1):
        raise ValueError("need n >= k >= 1")
    if c_series._c[0]:
        raise NotInvertible("series with nonzero constant term has no inverse")
    if not c_series._c[1].constant_coefficient():
        raise NotInvertible("x^1 coefficient has zero constant rational part")
    if c_series.order < n - k + 1:
        raise ValueError("series order too small for the requested coefficient")
    base = c_series.shift_down(1).truncate(n - k) if n > k else TruncSeries(
        [c_series._c[1]], 0
    )
    recip = TruncSeries.one(base.order) / base
    coeff = (recip**n)[n - k]
    return coeff.scale(Fraction(k, n))
