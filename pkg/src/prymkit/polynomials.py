"""Exact univariate polynomial and rational-function arithmetic over Q.

Everything here is dense, immutable and exact (fractions.Fraction
coefficients).  ``Poly`` is a polynomial in one base variable x, ``RatFunc``
its field of fractions, and ``TPoly`` a dense polynomial in an outer variable
t whose coefficients may be Poly, RatFunc or any type supporting ring
arithmetic.  TPoly division requires invertible (or monic) leading
coefficients; with Poly coefficients this means the divisor must be monic
in t, which is the only case the callers need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction, str]


def as_fraction(v: Scalar) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, str)):
        return Fraction(v)
    raise TypeError(f"cannot interpret {v!r} as a rational number")


class Poly:
    """Polynomial over Q, coefficients ascending, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "Poly":
        c = as_fraction(c)
        return Poly(tuple(a * c for a in self.coeffs))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        d = other.coeffs
        dd = len(d) - 1
        if len(r) - 1 < dd:
            return Poly.zero(), self
        q = [Fraction(0)] * (len(r) - dd)
        inv = 1 / d[-1]
        for i in range(len(r) - 1, dd - 1, -1):
            f = r[i] * inv
            if f:
                q[i - dd] = f
                for j, c in enumerate(d):
                    r[i - dd + j] -= f * c
        return Poly(q), Poly(r[:dd])

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def __truediv__(self, other):
        """Exact division; raises if the quotient is not polynomial."""
        other = Poly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.monic()

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ValueError("cannot normalize the zero polynomial")
        return self.scale(1 / self.lc)

    def derivative(self) -> "Poly":
        return Poly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x0: Scalar) -> Fraction:
        x0 = as_fraction(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def root_multiplicity(self, x0: Scalar) -> int:
        """Order of vanishing at x0 (0 if not a root)."""
        if self.is_zero():
            raise ValueError("zero polynomial vanishes everywhere")
        x0 = as_fraction(x0)
        lin = Poly((-x0, 1))
        p, mult = self, 0
        while True:
            q, r = p.divmod(lin)
            if not r.is_zero():
                return mult
            p, mult = q, mult + 1

    def is_squarefree(self) -> bool:
        if self.is_zero():
            return False
        return self.gcd(self.derivative()).degree <= 0

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "Poly(" + " + ".join(terms) + ")"


class RatFunc:
    """Rational function over Q: num/den with monic den and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None):
        if den is None:
            den = Poly.one()
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly.zero(), Poly.one()
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num / g, den / g
            c = den.lc
            num, den = num.scale(1 / c), den.scale(1 / c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(Poly.zero())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(Poly.one())

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly.constant(other))
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self!r} is not a polynomial")
        return self.num.scale(1 / self.den.coeffs[0])

    def __eq__(self, other) -> bool:
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __add__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def __repr__(self):
        if self.den.degree == 0 and self.den.coeffs and self.den.coeffs[0] == 1:
            return f"RatFunc({self.num!r})"
        return f"RatFunc({self.num!r} / {self.den!r})"


class TPoly:
    """Dense polynomial in the spectral variable t over an exact coefficient ring.

    Coefficients are any objects implementing +, -, *, is_zero() and (where
    division is needed) /.  Ascending order, no trailing zeros.
    """

    __slots__ = ("coeffs", "czero")

    def __init__(self, coeffs: Sequence, czero):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "czero", czero)

    def __setattr__(self, *a):
        raise AttributeError("TPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.czero

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("TPoly", self.coeffs))

    def __add__(self, other: "TPoly") -> "TPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return TPoly(out, self.czero)

    def __neg__(self) -> "TPoly":
        return TPoly(tuple(-c for c in self.coeffs), self.czero)

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def __mul__(self, other: "TPoly") -> "TPoly":
        if self.is_zero() or other.is_zero():
            return TPoly((), self.czero)
        out = [self.czero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return TPoly(out, self.czero)

    def scale(self, c) -> "TPoly":
        return TPoly(tuple(a * c for a in self.coeffs), self.czero)

    def __pow__(self, k: int) -> "TPoly":
        if k < 0:
            raise ValueError("negative power")
        result = TPoly((self._one_like(),), self.czero)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _one_like(self):
        z = self.czero
        if isinstance(z, Poly):
            return Poly.one()
        if isinstance(z, RatFunc):
            return RatFunc.one()
        if hasattr(z, "one_like"):
            return z.one_like()
        raise TypeError(f"no unit known for coefficient type {type(z)}")

    def divmod(self, other: "TPoly") -> tuple["TPoly", "TPoly"]:
        """Division; the leading coefficient of ``other`` must be invertible
        (monic in t suffices for Poly coefficients)."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        d = other.coeffs
        dd = len(d) - 1
        if len(r) - 1 < dd:
            return TPoly((), self.czero), self
        q = [self.czero] * (len(r) - dd)
        for i in range(len(r) - 1, dd - 1, -1):
            if r[i].is_zero():
                continue
            f = r[i] / d[-1]
            q[i - dd] = f
            for j, c in enumerate(d):
                r[i - dd + j] = r[i - dd + j] - f * c
        return TPoly(q, self.czero), TPoly(r[:dd], self.czero)

    def __mod__(self, other: "TPoly") -> "TPoly":
        return self.divmod(other)[1]

    def __truediv__(self, other: "TPoly") -> "TPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("inexact division of t-polynomials")
        return q

    def monic(self) -> "TPoly":
        inv = self._one_like() / self.lc
        return self.scale(inv)

    def gcd(self, other: "TPoly") -> "TPoly":
        """Monic gcd; requires field coefficients (RatFunc)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.monic()

    def derivative(self) -> "TPoly":
        out = []
        for i, c in enumerate(self.coeffs):
            if i:
                out.append(c.scale(i) if hasattr(c, "scale") else c * i)
        return TPoly(out, self.czero)

    def map_coeffs(self, fn, new_zero) -> "TPoly":
        return TPoly(tuple(fn(c) for c in self.coeffs), new_zero)

    def eval_coeff(self, value):
        """Substitute a coefficient-ring value for t (Horner)."""
        acc = self.czero
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self):
        return f"TPoly({list(self.coeffs)!r})"


def tpoly_over_ratfunc(p: TPoly) -> TPoly:
    """Lift a TPoly with Poly coefficients to RatFunc coefficients."""
    return p.map_coeffs(lambda c: RatFunc(c), RatFunc.zero())


def tpoly_to_poly_coeffs(p: TPoly) -> TPoly:
    """Lower RatFunc coefficients back to Poly; raises if any denominator
    is nontrivial."""
    return p.map_coeffs(lambda c: c.as_poly(), Poly.zero())


def resultant(a: TPoly, b: TPoly):
    """Resultant of two t-polynomials over a coefficient field, by the
    Euclidean pseudo-remainder sequence.  Coefficients must support field
    division (use tpoly_over_ratfunc for polynomial input)."""
    one = a._one_like() if not a.is_zero() else b._one_like()
    da, db = a.degree, b.degree
    if da < 0 or db < 0:
        return a.czero
    if da == 0:
        return a.lc ** db
    if db == 0:
        return b.lc ** da
    if da < db:
        res = resultant(b, a)
        if (da * db) % 2:
            res = -res
        return res
    r = a % b
    dr = r.degree
    if r.is_zero():
        return a.czero
    res = resultant(b, r)
    res = res * b.lc ** (da - dr)
    if (da * db) % 2:
        res = -res
    return res


def yun_squarefree(p: TPoly) -> list[tuple[TPoly, int]]:
    """Yun's squarefree decomposition of a monic t-polynomial over a field
    of characteristic zero.  Returns [(q_i, i)] with p = prod q_i^i, the q_i
    squarefree, monic and pairwise coprime; blocks with q_i = 1 are omitted.
    """
    if p.degree < 1:
        return []
    p = p.monic()
    dp = p.derivative()
    g = p.gcd(dp)
    if g.degree == 0:
        return [(p, 1)]
    c = p / g
    d = dp / g - c.derivative()
    blocks = []
    i = 1
    while c.degree > 0:
        q = c.gcd(d)
        if q.degree > 0:
            blocks.append((q, i))
        c = c / q
        d = d / q - c.derivative()
        i += 1
    return blocks
