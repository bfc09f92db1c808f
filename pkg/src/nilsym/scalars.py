"""Exact scalars: Gaussian rationals and rational functions of one variable ``t``.

Gaussian rationals are stored as three Python ints ``(a, b, d)`` meaning
``(a + b*i) / d`` with ``d > 0`` and ``gcd(a, b, d) == 1``.  This keeps the
hot arithmetic paths on machine-level bigints instead of stacking four
``Fraction`` objects per number.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational


class PoleAtZero(ArithmeticError):
    """A rational function has no finite value at ``t = 0``."""


def _norm(a: int, b: int, d: int) -> "GaussianRational":
    if d != 1:
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
    obj = object.__new__(GaussianRational)
    obj._a, obj._b, obj._d = a, b, d
    return obj


class GaussianRational:
    """Element of Q(i).  Immutable and hashable; compares equal to ints/Fractions."""

    __slots__ = ("_a", "_b", "_d")

    def __new__(cls, re=0, im=0):
        if isinstance(re, GaussianRational) and im == 0:
            return re
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        return _norm(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "GaussianRational":
        return _norm(self._a, -self._b, self._d)

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Rational)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __neg__(self):
        return _norm(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return _norm(self._a + o._a, self._b + o._b, self._d)
        return _norm(self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self._d == o._d:
            return _norm(self._a - o._a, self._b - o._b, self._d)
        return _norm(self._a * o._d - o._a * self._d, self._b * o._d - o._b * self._d, self._d * o._d)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self._a, self._b, o._a, o._b
        if b == 0 and d == 0:
            return _norm(a * c, 0, self._d * o._d)
        return _norm(a * c - b * d, a * d + b * c, self._d * o._d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def _inverse(self):
        a, b, d = self._a, self._b, self._d
        if a == 0 and b == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        # d / (a + bi) = d (a - bi) / (a^2 + b^2)
        return _norm(d * a, -d * b, a * a + b * b)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self._inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        return format_scalar(self)


def _coerce(x):
    if type(x) is GaussianRational:
        return x
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int):
        return _norm(x, 0, 1)
    if isinstance(x, Fraction):
        return _norm(x.numerator, 0, x.denominator)
    return None


def as_scalar(x) -> GaussianRational:
    """Coerce ints, Fractions and complex-with-integer-parts to ``GaussianRational``."""
    g = _coerce(x)
    if g is not None:
        return g
    if isinstance(x, complex) and x.real.is_integer() and x.imag.is_integer():
        return _norm(int(x.real), int(x.imag), 1)
    if isinstance(x, str):
        from .expressions import parse_scalar
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an element of Q(i)")


def _fmt_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: GaussianRational) -> str:
    """Text form accepted back by the expression parser: ``a``, ``a/b``, ``i``, ``a+b*i``."""
    re, im = x.re, x.im
    if im == 0:
        return _fmt_frac(re)
    if im == 1:
        ims = "i"
    elif im == -1:
        ims = "-i"
    else:
        ims = f"{_fmt_frac(im)}*i"
    if re == 0:
        return ims
    sep = "" if ims.startswith("-") else "+"
    return f"{_fmt_frac(re)}{sep}{ims}"


ZERO = _norm(0, 0, 1)
ONE = _norm(1, 0, 1)
I = _norm(0, 1, 1)


# ---------------------------------------------------------------------------
# polynomials in t
# ---------------------------------------------------------------------------

class Poly:
    """Polynomial in ``t`` with Gaussian-rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, cs):
        cs = list(cs)
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def lead(self):
        return self.coeffs[-1]

    def at_zero(self) -> GaussianRational:
        return self.coeffs[0] if self.coeffs else ZERO

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly._raw([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return Poly._raw([c * other for c in self.coeffs]) if other else Poly._raw(())
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return Poly._raw(out)

    def divmod(self, other: "Poly"):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = ONE / other.lead()
        quot = [ZERO] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            c = rem[-1] * inv_lead
            shift = len(rem) - 1 - db
            quot[shift] = c
            for j, y in enumerate(other.coeffs):
                rem[shift + j] = rem[shift + j] - c * y
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return Poly._raw(quot), Poly._raw(rem)

    def monic(self) -> "Poly":
        return self * (ONE / self.lead())

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0)`` is the constant 1 by convention here."""
    while q:
        p, q = q, p.divmod(q)[1]
    if not p:
        return Poly._raw([ONE])
    return p.monic()


_P_ONE = Poly._raw([ONE])


# ---------------------------------------------------------------------------
# rational functions in t
# ---------------------------------------------------------------------------

class RationalFunction:
    """Reduced quotient ``num/den`` of polynomials in ``t`` with monic denominator.

    Normal form makes ``==`` a coefficient comparison.  Mixed arithmetic with
    ints, Fractions and ``GaussianRational`` is supported in both directions.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly([num])
        if den is None:
            den = _P_ONE
        elif not isinstance(den, Poly):
            den = Poly([den])
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = Poly._raw(()), _P_ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lc = den.lead()
        if lc != 1:
            inv = ONE / lc
            num, den = num * inv, den * inv
        self.num, self.den = num, den

    @classmethod
    def t(cls) -> "RationalFunction":
        return cls(Poly._raw([ZERO, ONE]))

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.at_zero()

    def __bool__(self):
        return bool(self.num)

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.at_zero())
        return hash((self.num, self.den))

    def __eq__(self, other):
        o = _rf(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __neg__(self):
        return _rf_raw(-self.num, self.den)

    def __add__(self, other):
        o = _rf(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = _rf(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _rf(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction)):
            s = as_scalar(other)
            if not s:
                return _rf_raw(Poly._raw(()), _P_ONE)
            return _rf_raw(self.num * s, self.den)
        o = _rf(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _rf(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = _rf(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (_rf(1) / self) ** (-k)
        result = _rf(1)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x) -> GaussianRational:
        """Evaluate at a scalar point."""
        x = as_scalar(x)
        d = self.den(x)
        if not d:
            raise ZeroDivisionError(f"{self} has a pole at t = {x}")
        return self.num(x) / d

    def limit_at_zero(self) -> GaussianRational:
        return limit_at_zero(self)

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        n = _poly_str(self.num)
        if self.den.degree == 0:
            return n
        return f"({n})/({_poly_str(self.den)})"


def _rf_raw(num, den):
    r = object.__new__(RationalFunction)
    r.num, r.den = num, den
    return r


def _rf(x):
    if isinstance(x, RationalFunction):
        return x
    s = _coerce(x)
    if s is None:
        return None
    return _rf_raw(Poly._raw([s]), _P_ONE)


def _poly_str(p: Poly) -> str:
    if not p:
        return "0"
    terms = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        cs = format_scalar(c)
        if not c.is_real() and c.re != 0:
            cs = f"({cs})"
        if k == 0:
            terms.append(cs)
            continue
        mono = "t" if k == 1 else f"t^{k}"
        if c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append(f"-{mono}")
        else:
            terms.append(f"{cs}*{mono}")
    out = terms[0]
    for term in terms[1:]:
        out += term if term.startswith("-") else "+" + term
    return out


def limit_at_zero(x) -> GaussianRational:
    """Value of ``x`` at ``t = 0``; plain scalars are returned unchanged.

    Raises ``PoleAtZero`` if the reduced denominator vanishes at zero.
    """
    if not isinstance(x, RationalFunction):
        return as_scalar(x)
    d0 = x.den.at_zero()
    if not d0:
        raise PoleAtZero(f"{x} has a pole at t = 0")
    return x.num.at_zero() / d0


T = RationalFunction.t()
