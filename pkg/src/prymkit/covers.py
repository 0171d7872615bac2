"""Structure theory of spectral polynomials: multiplicity (squarefree)
decomposition, factor degree bounds, trace translation, the power and
product maps between characteristic spaces, and the degree-2 Galois
pushforward with its bounded inverse (the membership test for descent
along a double cover).

The double cover is modeled concretely as y^2 = f(x) with f squarefree;
functions on it are pairs u + y*v reduced modulo the defining relation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import sympy

from .norms import SpectralPoly, spectral_mul, spectral_pow
from .polynomials import (
    Poly,
    TPoly,
    resultant,
    tpoly_over_ratfunc,
    tpoly_to_poly_coeffs,
    yun_squarefree,
)


@dataclass(frozen=True)
class FactoredSpectral:
    """Multiplicity profile of a spectral polynomial: squarefree, pairwise
    coprime monic blocks q_i with multiplicities, multiplying back to the
    input exactly.  Blocks are squarefree over Q(x) but not necessarily
    irreducible (full factorization is deliberately out of scope)."""

    deg_m: int
    factors: tuple[tuple[SpectralPoly, int], ...]

    def reconstruct(self) -> SpectralPoly:
        acc = None
        for block, mult in self.factors:
            piece = spectral_pow(block, mult)
            acc = piece if acc is None else spectral_mul(acc, piece)
        if acc is None:
            raise ValueError("empty factorization")
        return acc


def squarefree_decompose(s: SpectralPoly) -> FactoredSpectral:
    """Yun decomposition of s in t over Q(x); exact reconstruction holds and
    every block inherits the graded degree bounds."""
    blocks = yun_squarefree(tpoly_over_ratfunc(s.as_tpoly()))
    out = []
    for q, mult in blocks:
        qp = tpoly_to_poly_coeffs(q)
        out.append((SpectralPoly.from_tpoly(qp, s.deg_m), mult))
    fac = FactoredSpectral(s.deg_m, tuple(out))
    if fac.reconstruct() != s:
        raise RuntimeError("squarefree decomposition failed to reconstruct")
    return fac


def verify_component_degree_bounds(s: SpectralPoly, factor) -> bool:
    """Check that a monic factor of s satisfies the graded degree bounds
    deg(b_j) <= j * deg_m.  Raises if the candidate does not divide s."""
    if isinstance(factor, SpectralPoly):
        ft = factor.as_tpoly()
    else:
        ft = factor
    num = tpoly_over_ratfunc(s.as_tpoly())
    den = tpoly_over_ratfunc(ft)
    _q, r = num.divmod(den)
    if not r.is_zero():
        raise ValueError("candidate does not divide the spectral polynomial")
    d = ft.degree
    for j in range(1, d + 1):
        if ft.coeff(d - j).degree > j * s.deg_m:
            return False
    return True


def trace_translate(s: SpectralPoly) -> SpectralPoly:
    """Change of variables t -> t - a_1/n, killing the t^(n-1) coefficient
    while preserving the graded degree bounds.  Idempotent."""
    shift = s.coeffs[0].scale(Fraction(-1, s.n))
    shift_poly = TPoly((shift, Poly.one()), Poly.zero())
    acc = TPoly((), Poly.zero())
    src = s.as_tpoly()
    for k in range(src.degree, -1, -1):
        acc = acc * shift_poly + TPoly((src.coeff(k),), Poly.zero())
    out = SpectralPoly.from_tpoly(acc, s.deg_m)
    if not out.coeffs[0].is_zero():
        raise RuntimeError("translation failed to kill the trace")  # unreachable
    return out


def phi_k(s_b: SpectralPoly, k: int) -> SpectralPoly:
    """The k-th power map between characteristic spaces: s -> s^k."""
    if k < 1:
        raise ValueError("power must be >= 1")
    return spectral_pow(s_b, k)


def phi_pair(s_b: SpectralPoly, s_c: SpectralPoly) -> SpectralPoly:
    """The product map (b, c) -> a with s_a = s_b * s_c; the result is
    trace-free iff b_1 + c_1 = 0."""
    return spectral_mul(s_b, s_c)


def is_trace_free(s: SpectralPoly) -> bool:
    return s.coeffs[0].is_zero()


@dataclass(frozen=True)
class DoubleCoverData:
    """The double cover y^2 = f(x) with f squarefree; the concrete model of
    the degree-2 cyclic Galois cover, with involution y -> -y."""

    f: Poly

    def __post_init__(self):
        if self.f.degree < 1:
            raise ValueError("cover polynomial must be nonconstant")
        if not self.f.is_squarefree():
            raise ValueError("cover polynomial must be squarefree")

    @property
    def half_degree(self) -> int:
        """Ceil(deg f / 2): the pole order of y at infinity."""
        return (self.f.degree + 1) // 2


@dataclass(frozen=True)
class YPair:
    """Function u + y*v on the double cover, reduced mod y^2 = f."""

    u: Poly
    v: Poly
    f: Poly

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    def one_like(self) -> "YPair":
        return YPair(Poly.one(), Poly.zero(), self.f)

    def _check(self, other: "YPair"):
        if self.f != other.f:
            raise ValueError("operands live on different double covers")

    def __add__(self, other: "YPair") -> "YPair":
        self._check(other)
        return YPair(self.u + other.u, self.v + other.v, self.f)

    def __neg__(self) -> "YPair":
        return YPair(-self.u, -self.v, self.f)

    def __sub__(self, other: "YPair") -> "YPair":
        return self + (-other)

    def __mul__(self, other: "YPair") -> "YPair":
        self._check(other)
        return YPair(self.u * other.u + self.f * (self.v * other.v),
                     self.u * other.v + other.u * self.v, self.f)

    def conjugate(self) -> "YPair":
        return YPair(self.u, -self.v, self.f)


@dataclass(frozen=True)
class TwistedSpectralPoly:
    """Monic degree-m polynomial in t whose coefficients b_j = u_j + y*v_j
    are functions on the double cover, with the graded bounds inherited from
    the pulled-back line bundle: deg(u_j) <= j*deg_m and
    deg(v_j) <= j*deg_m - ceil(deg f / 2)."""

    cover: DoubleCoverData
    m: int
    deg_m: int
    pairs: tuple[tuple[Poly, Poly], ...]  # (u_j, v_j) for j = 1..m

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("degree must be >= 1")
        if len(self.pairs) != self.m:
            raise ValueError(f"need exactly {self.m} coefficient pairs")
        h = self.cover.half_degree
        for j, (u, v) in enumerate(self.pairs, start=1):
            if u.degree > j * self.deg_m:
                raise ValueError(f"deg(u_{j}) exceeds the bound {j}*{self.deg_m}")
            if v.degree > j * self.deg_m - h:
                raise ValueError(
                    f"deg(v_{j}) exceeds the bound {j}*{self.deg_m} - {h}")

    def as_tpoly(self) -> TPoly:
        f = self.cover.f
        zero = YPair(Poly.zero(), Poly.zero(), f)
        cs = [zero] * (self.m + 1)
        cs[self.m] = YPair(Poly.one(), Poly.zero(), f)
        for j, (u, v) in enumerate(self.pairs, start=1):
            cs[self.m - j] = YPair(u, v, f)
        return TPoly(cs, zero)

    def conjugate(self) -> "TwistedSpectralPoly":
        return TwistedSpectralPoly(self.cover, self.m, self.deg_m,
                                   tuple((u, -v) for u, v in self.pairs))


def galois_pushforward(cover: DoubleCoverData,
                       s_b: TwistedSpectralPoly) -> SpectralPoly:
    """Product of s_b with its Galois conjugate, reduced mod y^2 = f; the
    y-components cancel and the result descends to a spectral polynomial of
    degree 2m over the base.  Its t^(2m-1) coefficient is twice the
    invariant part of b_1."""
    if s_b.cover != cover:
        raise ValueError("twisted polynomial lives on a different cover")
    prod = s_b.as_tpoly() * s_b.conjugate().as_tpoly()
    coeffs = []
    for c in prod.coeffs:
        if not c.v.is_zero():
            raise RuntimeError("pushforward retained y-dependence; "
                               "conjugate-product arithmetic is broken")
        coeffs.append(c.u)
    return SpectralPoly.from_tpoly(TPoly(coeffs, Poly.zero()), s_b.deg_m)


def pullback_splits(cover: DoubleCoverData,
                    s_a: SpectralPoly) -> Optional[TwistedSpectralPoly]:
    """Bounded inverse of the pushforward: find a twisted polynomial s_b
    with galois_pushforward(cover, s_b) = s_a, or None when no such
    polynomial with rational coefficients and the graded degree bounds
    exists.

    Writing s_b = P + y*Q, the condition is P^2 - f*Q^2 = s_a, i.e. s_a is
    the norm of a monic degree-m polynomial over the quadratic function
    field K = Q(x)(y).  The search runs blockwise over the multiplicity
    profile of s_a: each squarefree block is split over K by specializing x
    at a good rational point, factoring over the resulting quadratic number
    field, and Hensel-lifting each candidate half back to a polynomial
    witness; a block with no witness contributes half its even multiplicity
    y-free, and an odd multiplicity there means no witness exists at all.
    The assembled witness is certified by re-pushforward."""
    if s_a.n % 2 != 0:
        raise ValueError("pullback splitting needs even degree in t")
    m = s_a.n // 2
    f = cover.f
    zero = YPair(Poly.zero(), Poly.zero(), f)
    one = YPair(Poly.one(), Poly.zero(), f)
    acc = TPoly((one,), zero)
    for q, e in _sqf_blocks(s_a.as_tpoly()):
        w = _split_squarefree_block(cover, q, s_a.deg_m)
        if w is None:
            if e % 2 != 0:
                return None
            lifted = q.map_coeffs(lambda c: YPair(c, Poly.zero(), f), zero)
            acc = acc * lifted ** (e // 2)
        else:
            acc = acc * w ** e
    pairs = []
    for j in range(1, m + 1):
        c = acc.coeff(m - j)
        pairs.append((c.u, c.v))
    try:
        witness = TwistedSpectralPoly(cover, m, s_a.deg_m, tuple(pairs))
    except ValueError:
        return None       # degree bounds violated: not a bounded witness
    if galois_pushforward(cover, witness) != s_a:
        raise RuntimeError("splitter produced an uncertified witness")
    return witness


@dataclass(frozen=True)
class _QNum:
    """Element a + b*sqrt(d) of a real quadratic number field, d a
    non-square rational."""

    a: Fraction
    b: Fraction
    d: Fraction

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def one_like(self) -> "_QNum":
        return _QNum(Fraction(1), Fraction(0), self.d)

    def __add__(self, other: "_QNum") -> "_QNum":
        return _QNum(self.a + other.a, self.b + other.b, self.d)

    def __neg__(self) -> "_QNum":
        return _QNum(-self.a, -self.b, self.d)

    def __sub__(self, other: "_QNum") -> "_QNum":
        return self + (-other)

    def __mul__(self, other: "_QNum") -> "_QNum":
        return _QNum(self.a * other.a + self.d * self.b * other.b,
                     self.a * other.b + other.a * self.b, self.d)

    def inverse(self) -> "_QNum":
        # the norm a^2 - d*b^2 is nonzero because d is not a square
        n = self.a * self.a - self.d * self.b * self.b
        return _QNum(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other: "_QNum") -> "_QNum":
        return self * other.inverse()


def _sqf_blocks(p: TPoly) -> list[tuple[TPoly, int]]:
    """Squarefree decomposition in t over Q(x) of a monic t-polynomial with
    polynomial coefficients: pairwise coprime squarefree monic blocks with
    multiplicities, each again with polynomial coefficients."""
    x, t = sympy.symbols("x t")
    expr = sympy.Integer(0)
    for k in range(p.degree + 1):
        c = p.coeff(k)
        expr += sum(sympy.Rational(a.numerator, a.denominator) * x ** i
                    for i, a in enumerate(c.coeffs)) * t ** k
    sp = sympy.Poly(expr, t, domain=sympy.QQ.frac_field(x))
    out = []
    for fac, e in sp.sqf_list()[1]:
        coeffs = []
        for k in range(fac.degree() + 1):
            ce = sympy.cancel(fac.nth(k))
            if ce == 0:
                coeffs.append(Poly.zero())
                continue
            cx = sympy.Poly(ce, x)
            coeffs.append(Poly([Fraction(sympy.Rational(a).p,
                                         sympy.Rational(a).q)
                                for a in reversed(cx.all_coeffs())]))
        out.append((TPoly(coeffs, Poly.zero()), int(e)))
    return out


def _is_square(q: Fraction) -> bool:
    if q < 0:
        return False
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    return rn * rn == q.numerator and rd * rd == q.denominator


def _poly_shift(p: Poly, a: Fraction) -> Poly:
    """p(x + a), by Horner."""
    acc = Poly.zero()
    shift = Poly((a, 1))
    for c in reversed(p.coeffs):
        acc = acc * shift + Poly.constant(c)
    return acc


def _series_mul(a: list, b: list, n: int) -> list:
    out = [Fraction(0)] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for j, bj in enumerate(b[:n - i]):
                if bj:
                    out[i + j] += ai * bj
    return out


def _series_inv_sqrt(u: list, n: int) -> list:
    """(1 + w)^(-1/2) mod z^n for u = 1 + w, by Newton iteration."""
    if u[0] != 1:
        raise ValueError("series must have constant term 1")
    h = [Fraction(1)]
    k = 1
    while k < n:
        k = min(2 * k, n)
        hh = _series_mul(h, h, k)
        corr = [-c for c in _series_mul(u, hh, k)]
        corr[0] += 3
        h = [c / 2 for c in _series_mul(h, corr, k)]
    return h


def _tpoly_xgcd(a: TPoly, b: TPoly) -> tuple[TPoly, TPoly, TPoly]:
    """Extended Euclid over field coefficients: returns (g, s, t) with
    s*a + t*b = g and g monic."""
    czero = a.czero
    zero = TPoly((), czero)
    one = TPoly((a._one_like(),), czero)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        qt, rr = r0.divmod(r1)
        r0, r1 = r1, rr
        s0, s1 = s1, s0 - qt * s1
        t0, t1 = t1, t0 - qt * t1
    lc = r0.lc
    inv = TPoly((r0._one_like() / lc,), czero)
    return inv * r0, inv * s0, inv * t0


def _factor_over_quadratic_field(qq: Poly, d: Fraction) -> list[TPoly]:
    """Monic irreducible factors of a squarefree rational polynomial over
    Q(sqrt(d)), as t-polynomials with quadratic-number coefficients, in a
    deterministic order."""
    t = sympy.Symbol("t")
    root = sympy.sqrt(sympy.Rational(d.numerator, d.denominator))
    dom = sympy.QQ.algebraic_field(root)
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i
               for i, c in enumerate(qq.coeffs))
    _const, raw = sympy.Poly(expr, t, domain=dom).factor_list()
    czero = _QNum(Fraction(0), Fraction(0), d)
    out = []
    for fac, _e in raw:
        coeffs = []
        for k in range(fac.degree() + 1):
            rep = dom.from_sympy(sympy.sympify(fac.nth(k))).rep
            vals = [Fraction(int(v.numerator), int(v.denominator))
                    for v in rep]   # descending powers of the root
            if len(vals) > 2:
                raise RuntimeError("coefficient not linear in the field root")
            while len(vals) < 2:
                vals.insert(0, Fraction(0))
            coeffs.append(_QNum(vals[1], vals[0], d))
        p = TPoly(coeffs, czero)
        out.append(p.scale(p.lc.inverse()))
    out.sort(key=lambda p: (p.degree,
                            [(c.a, c.b) for c in p.coeffs]))
    return out


def _sympy_to_fraction(e) -> Fraction:
    r = sympy.Rational(e)
    return Fraction(r.p, r.q)


def _split_squarefree_block(cover: DoubleCoverData, q: TPoly,
                            deg_m: int) -> Optional[TPoly]:
    """Witness for a squarefree monic block: a monic t-polynomial W with
    coefficients on the double cover such that W * conj(W) = q, or None
    when q has a factor that stays irreducible over the cover's function
    field (which blocks any such factorization).

    Strategy: specialize x at a rational point where q stays squarefree and
    f is a nonzero non-square, factor the specialization over the quadratic
    number field Q(sqrt(f(x0))), and Hensel-lift every half-degree monic
    divisor back to a series in (x - x0); the true witness is a polynomial
    of bounded degree, so it is recovered exactly and certified."""
    d = q.degree
    if d % 2 != 0:
        return None
    half = d // 2
    f = cover.f
    yzero = YPair(Poly.zero(), Poly.zero(), f)
    q_lift = q.map_coeffs(lambda c: YPair(c, Poly.zero(), f), yzero)

    x0 = None
    for trial in range(0, 40 * (d + f.degree + 4)):
        cand = Fraction((-1) ** trial * ((trial + 1) // 2))
        d0 = f(cand)
        if d0 == 0 or _is_square(d0):
            continue
        qq = Poly([c(cand) for c in q.coeffs])
        if qq.is_squarefree():
            x0 = cand
            break
    if x0 is None:
        raise RuntimeError("no good specialization point found")

    d0 = f(x0)
    czero = _QNum(Fraction(0), Fraction(0), d0)
    cone = _QNum(Fraction(1), Fraction(0), d0)
    factors = _factor_over_quadratic_field(Poly([c(x0) for c in q.coeffs]), d0)

    prec = half * max(deg_m, 1) + 2
    # q and f re-expanded around x0: coefficients of powers of z = x - x0
    q_shift = [_poly_shift(c, x0) for c in q.coeffs]
    s_terms = []
    for k in range(prec):
        s_terms.append(TPoly(
            [_QNum(cz.coeffs[k] if k <= cz.degree else Fraction(0),
                   Fraction(0), d0) for cz in q_shift], czero))
    f_shift = _poly_shift(f, x0)
    u = [c / d0 for c in f_shift.coeffs] + [Fraction(0)] * prec
    g_inv = _series_inv_sqrt(u, prec)

    for picks in itertools.product([False, True], repeat=len(factors)):
        a0 = TPoly((cone,), czero)
        for chosen, p in zip(picks, factors):
            if chosen:
                a0 = a0 * p
        if a0.degree != half:
            continue
        b0 = TPoly((cone,), czero)
        for chosen, p in zip(picks, factors):
            if not chosen:
                b0 = b0 * p
        _g, sig, tau = _tpoly_xgcd(a0, b0)
        a_terms, b_terms = [a0], [b0]
        for k in range(1, prec):
            err = s_terms[k]
            for i in range(1, k):
                err = err - a_terms[i] * b_terms[k - i]
            ak = (tau * err) % a0
            bk = (err - ak * b0) / a0
            a_terms.append(ak)
            b_terms.append(bk)
        # reassemble: coefficient j of W is P_j + y*Q_j with
        # a-part = P_j(x0 + z) and b-part = g(z)*Q_j(x0 + z), y = sqrt(d0)*g
        coeffs = []
        for j in range(half + 1):
            a_ser = [term.coeff(j).a for term in a_terms]
            b_ser = [term.coeff(j).b for term in b_terms]
            p_j = _poly_shift(Poly(a_ser), -x0)
            q_j = _poly_shift(Poly(_series_mul(b_ser, g_inv, prec)), -x0)
            coeffs.append(YPair(p_j, q_j, f))
        w = TPoly(coeffs, yzero)
        if w * w.map_coeffs(lambda c: c.conjugate(), yzero) == q_lift:
            return w
    return None


def factors_coprime(s_b: SpectralPoly, s_c: SpectralPoly) -> bool:
    """Coprimality over Q(x), decided by the resultant."""
    r = resultant(tpoly_over_ratfunc(s_b.as_tpoly()),
                  tpoly_over_ratfunc(s_c.as_tpoly()))
    return not r.is_zero()
