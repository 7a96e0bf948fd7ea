"""Exact sparse polynomials in the two formal variables y and q.

y marks helicity and q marks dimension.  Coefficients are exact rationals:
plain Python ints wherever the value is integral, ``fractions.Fraction``
otherwise.  Whole-number Fractions are collapsed to ints on the way in, so
purely integral pipelines (the common case) never pay Fraction overhead.

A polynomial is stored as a dict from packed exponents to nonzero
coefficients.  The packing ``(dy << _SHIFT) | dq`` turns exponent addition
during multiplication into a single integer add.  Exponents up to
``2**_SHIFT - 1`` are supported, far beyond anything produced here.

Values are immutable after construction; all operations return new
polynomials and are safe to use concurrently.
"""

from __future__ import annotations

from fractions import Fraction

_SHIFT = 20
_MASK = (1 << _SHIFT) - 1


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a remainder."""


def _norm(c):
    if type(c) is int:
        return c
    if c.denominator == 1:
        return c.numerator
    return c


def _clean(raw: dict) -> dict:
    """Drop zeros and collapse whole-number Fractions (canonical form)."""
    out = {}
    for k, c in raw.items():
        if c:
            out[k] = c if type(c) is int else _norm(c)
    return out


class BivarPoly:
    """Immutable sparse polynomial in y and q with exact rational coefficients."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for (dy, dq), c in terms.items():
                if dy < 0 or dq < 0:
                    raise ValueError(f"negative exponent ({dy}, {dq})")
                if dq > _MASK or dy > _MASK:
                    raise ValueError(f"exponent too large ({dy}, {dq})")
                if c:
                    t[(dy << _SHIFT) | dq] = _norm(c + 0)
        self._t = t

    @classmethod
    def _raw(cls, t: dict) -> "BivarPoly":
        # Trusted constructor: t already packed and canonical.
        p = object.__new__(cls)
        p._t = t
        return p

    @classmethod
    def constant(cls, c) -> "BivarPoly":
        c = _norm(c + 0)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, c=1, dy=0, dq=0) -> "BivarPoly":
        return cls({(dy, dq): c})

    # -- queries ---------------------------------------------------------

    def __bool__(self):
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_one(self) -> bool:
        return self._t == {0: 1}

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_coefficient(self):
        """Coefficient of y^0 q^0."""
        return self._t.get(0, 0)

    def coefficient(self, dy: int, dq: int):
        return self._t.get((dy << _SHIFT) | dq, 0)

    def terms(self):
        """Iterate ((dy, dq), coeff) in canonical order: dq then dy, both descending."""
        for key in sorted(self._t, key=lambda k: (k & _MASK, k >> _SHIFT), reverse=True):
            yield (key >> _SHIFT, key & _MASK), self._t[key]

    def term_map(self) -> dict:
        return {(k >> _SHIFT, k & _MASK): c for k, c in self._t.items()}

    def y_degree(self) -> int:
        """-1 for the zero polynomial."""
        return max((k >> _SHIFT for k in self._t), default=-1)

    def q_degree(self) -> int:
        return max((k & _MASK for k in self._t), default=-1)

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self._t.values())

    def __len__(self):
        return len(self._t)

    # -- arithmetic ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: _norm(other + 0)} if other else {})
        return NotImplemented

    __hash__ = None

    def __neg__(self):
        return BivarPoly._raw({k: -c for k, c in self._t.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivarPoly.constant(other)
        elif not isinstance(other, BivarPoly):
            return NotImplemented
        if not self._t:
            return other
        if not other._t:
            return self
        out = dict(self._t)
        for k, c in other._t.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                del out[k]
        return BivarPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, BivarPoly) else BivarPoly.constant(-other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            ((ka, ca),) = a.items()
            if ka == 0 and ca == 1:
                return BivarPoly._raw(dict(b))
            return BivarPoly._raw(_clean({k + ka: c * ca for k, c in b.items()}))
        out = {}
        get = out.get
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                v = get(k)
                out[k] = ca * cb if v is None else v + ca * cb
        return BivarPoly._raw(_clean(out))

    __rmul__ = __mul__

    def scale(self, c):
        if not c:
            return _ZERO
        if c == 1:
            return self
        return BivarPoly._raw(_clean({k: v * c for k, v in self._t.items()}))

    def divide_scalar(self, c):
        """Exact division by a nonzero rational."""
        if not c:
            raise ZeroDivisionError("division of polynomial by zero")
        return self.scale(Fraction(1, 1) / c)

    def divide_exact(self, other: "BivarPoly") -> "BivarPoly":
        """Exact polynomial division; raises NonExactDivision on remainder.

        Single-divisor reduction in lex order on (dy, dq), which the key
        packing realises as plain integer comparison.
        """
        if not other._t:
            raise ZeroDivisionError("division of polynomial by zero polynomial")
        if other.is_one():
            return self
        if other.is_constant():
            return self.divide_scalar(other.constant_coefficient())
        rem = dict(self._t)
        quo = {}
        lead_b = max(other._t)
        cb = other._t[lead_b]
        while rem:
            lead_r = max(rem)
            shift = lead_r - lead_b
            if shift < 0 or (lead_r & _MASK) < (lead_b & _MASK):
                raise NonExactDivision(f"{self!r} is not divisible by {other!r}")
            c = _norm(Fraction(rem[lead_r]) / cb)
            quo[shift] = c
            for k, v in other._t.items():
                kk = k + shift
                w = rem.get(kk, 0) - v * c
                if w:
                    rem[kk] = w
                else:
                    rem.pop(kk, None)
        return BivarPoly._raw(_clean(quo))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- evaluation ------------------------------------------------------

    def eval_q(self, v) -> "BivarPoly":
        """Substitute q := v, leaving a polynomial in y alone."""
        out = {}
        for k, c in self._t.items():
            dy, dq = k >> _SHIFT, k & _MASK
            w = out.get(dy << _SHIFT, 0) + c * v**dq
            if w:
                out[dy << _SHIFT] = w
            else:
                out.pop(dy << _SHIFT, None)
        return BivarPoly._raw(_clean(out))

    def eval_y(self, v) -> "BivarPoly":
        """Substitute y := v, leaving a polynomial in q alone."""
        out = {}
        for k, c in self._t.items():
            dy, dq = k >> _SHIFT, k & _MASK
            w = out.get(dq, 0) + c * v**dy
            if w:
                out[dq] = w
            else:
                out.pop(dq, None)
        return BivarPoly._raw(_clean(out))

    def y_coefficient(self, dy: int) -> "BivarPoly":
        """The polynomial in q multiplying y^dy."""
        return BivarPoly._raw(
            {k & _MASK: c for k, c in self._t.items() if k >> _SHIFT == dy}
        )

    # -- rendering -------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: terms in decreasing q-degree, e.g. q^4+4q^3+6."""
        return self._render(sep="", power=lambda e: f"^{e}")

    def to_latex(self) -> str:
        return self._render(sep=" ", power=lambda e: f"^{{{e}}}" if e >= 10 else f"^{e}")

    def _render(self, sep, power) -> str:
        if not self._t:
            return "0"
        parts = []
        for (dy, dq), c in self.terms():
            mag = c if c > 0 else -c
            factors = []
            if dy:
                factors.append("y" + (power(dy) if dy > 1 else ""))
            if dq:
                factors.append("q" + (power(dq) if dq > 1 else ""))
            if not factors:
                term = str(mag)
            else:
                if mag != 1:
                    factors.insert(0, str(mag))
                term = sep.join(factors)
            parts.append(("-" if c < 0 else "+", term))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += sign + term
        return text

    def to_json_terms(self) -> list:
        """Terms as {dy, dq, num, den} dicts in canonical order."""
        return [
            {
                "dy": dy,
                "dq": dq,
                "num": c.numerator if isinstance(c, Fraction) else c,
                "den": c.denominator if isinstance(c, Fraction) else 1,
            }
            for (dy, dq), c in self.terms()
        ]

    def __repr__(self):
        return f"BivarPoly({self.to_text()})"


_ZERO = BivarPoly._raw({})
ZERO = _ZERO
ONE = BivarPoly._raw({0: 1})
Y = BivarPoly.monomial(dy=1)
Q = BivarPoly.monomial(dq=1)


def as_poly(value) -> BivarPoly:
    """Lift ints and Fractions to constant polynomials; pass polynomials through."""
    if isinstance(value, BivarPoly):
        return value
    return BivarPoly.constant(value)
