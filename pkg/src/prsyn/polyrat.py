"""Exact polynomial and rational-function algebra over the rationals.

Everything here is exact: coefficients are ``fractions.Fraction``, equality
is true equality, and the positive-real / minimum-function predicates are
decided with Routh arrays and Sturm chains rather than numerical root
finding.  Floating point appears only in the optional high-precision
fallbacks (evaluation at irrational points, root approximation).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

Q = Fraction
NEG_INF = float("-inf")



class PolyratError(Exception):
    """Base error for this module."""


class ZeroDenominator(PolyratError):
    pass


class PoleAtPoint(PolyratError):
    pass


class NotPR(PolyratError):
    pass


class NotMinimum(PolyratError):
    pass


class NotBiquadratic(PolyratError):
    pass


class NotRationalParams(PolyratError):
    """The function is a biquadratic minimum function, but its canonical
    parameters are irrational and cannot be represented exactly."""


class DegreeTooSmall(PolyratError):
    pass


def _as_q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected exact rational, got {type(x).__name__}")


def sqrt_fraction(x: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = _as_q(x)
    if x < 0:
        return None
    if x == 0:
        return Q(0)
    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


class QComplex:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _as_q(re)
        self.im = _as_q(im)

    def __add__(self, other):
        other = qcomplex(other)
        return QComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = qcomplex(other)
        return QComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return qcomplex(other) - self

    def __mul__(self, other):
        other = qcomplex(other)
        return QComplex(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = qcomplex(other)
        d = other.re * other.re + other.im * other.im
        if d == 0:
            raise ZeroDivisionError("division by exact complex zero")
        return QComplex((self.re * other.re + self.im * other.im) / d,
                        (self.im * other.re - self.re * other.im) / d)

    def __rtruediv__(self, other):
        return qcomplex(other) / self

    def __neg__(self):
        return QComplex(-self.re, -self.im)

    def conjugate(self) -> "QComplex":
        return QComplex(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        try:
            other = qcomplex(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return float(self.re) + 1j * float(self.im)

    def __repr__(self):
        return f"QComplex({self.re!r}, {self.im!r})"


def qcomplex(x) -> QComplex:
    if isinstance(x, QComplex):
        return x
    if isinstance(x, (int, Fraction)):
        return QComplex(x, 0)
    raise TypeError(f"cannot coerce {type(x).__name__} to QComplex")


#: spec alias: exact or floating complex value
ComplexValue = Union[QComplex, complex]


class Polynomial:
    """Univariate polynomial with exact rational coefficients.

    Coefficients are stored ascending by degree with no trailing zeros; the
    zero polynomial stores an empty tuple and reports degree -inf.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):  # ascending degree
        cs = [_as_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- construction helpers -------------------------------------------------
    @staticmethod
    def constant(c) -> "Polynomial":
        return Polynomial([c])

    @staticmethod
    def x(power: int = 1, coeff=1) -> "Polynomial":
        return Polynomial([0] * power + [coeff])

    # -- structure -------------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Q(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_q(other)
            return Polynomial([c * q for c in self.coeffs])
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Q(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree
        if dn < dd:
            return Polynomial(), self
        quot = [Q(0)] * (dn - dd + 1)
        lead = other.leading()
        for k in range(dn - dd, -1, -1):
            c = rem[dd + k] / lead
            quot[k] = c
            if c != 0:
                for j, b in enumerate(other.coeffs):
                    rem[j + k] -= c * b
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, n: int):
        out = Polynomial([1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.leading()
        return Polynomial([c / lead for c in self.coeffs])

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, _as_poly(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def square_free_part(self) -> "Polynomial":
        if self.degree < 1:
            return self.monic() if not self.is_zero() else self
        return (self // self.gcd(self.derivative())).monic()

    def __call__(self, x):
        """Horner evaluation; works for Fraction, complex, and QComplex."""
        acc = x * 0  # typed zero so constants adopt the argument's type
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_jomega(self, omega2: Fraction) -> Tuple[Fraction, Fraction]:
        """Evaluate at s = j*w0 where w0**2 = omega2 (rational, > 0).

        Returns (a, b) with p(j*w0) = a + j*b*w0, both exact rationals.
        """
        omega2 = _as_q(omega2)
        a = b = Q(0)
        power = Q(1)  # (-omega2)**m
        for m in range(0, len(self.coeffs), 2):
            a += self.coeffs[m] * power
            if m + 1 < len(self.coeffs):
                b += self.coeffs[m + 1] * power
            power *= -omega2
        return a, b

    def substitute(self, inner: "Polynomial") -> "Polynomial":
        out = Polynomial()
        for c in reversed(self.coeffs):
            out = out * inner + Polynomial([c])
        return out

    def scale_argument(self, a) -> "Polynomial":
        """p(a*s) for rational a."""
        a = _as_q(a)
        power = Q(1)
        out = []
        for c in self.coeffs:
            out.append(c * power)
            power *= a
        return Polynomial(out)

    def flip_sign(self) -> "Polynomial":
        """p(-s)."""
        return Polynomial([c if k % 2 == 0 else -c
                           for k, c in enumerate(self.coeffs)])

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial([x])
    raise TypeError(f"cannot coerce {type(x).__name__} to Polynomial")


ZERO = Polynomial()
ONE = Polynomial([1])
S = Polynomial([0, 1])


class RationalFunction:
    """Coprime quotient of two Polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            object.__setattr__(self, "num", ZERO)
            object.__setattr__(self, "den", ONE)
            return
        g = num.gcd(den)
        if g.degree >= 1:
            num, den = num // g, den // g
        lead = den.leading()
        object.__setattr__(self, "num", num * (1 / lead))
        object.__setattr__(self, "den", den * (1 / lead))

    @property
    def mcmillan_degree(self) -> int:
        if self.num.is_zero():
            return 0
        return int(max(self.num.degree, self.den.degree))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return self.num.coeff(0) / self.den.coeff(0)

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other):
        other = as_ratfunc(other)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-as_ratfunc(other))

    def __rsub__(self, other):
        return as_ratfunc(other) - self

    def __mul__(self, other):
        other = as_ratfunc(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_ratfunc(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return as_ratfunc(other) / self

    def reciprocal(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        return RationalFunction(self.den, self.num)

    def __eq__(self, other):
        try:
            other = as_ratfunc(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation -------------------------------------------------------------
    def __call__(self, x):
        return self.num(x) / self.den(x)

    def eval_jomega(self, omega2: Fraction) -> QComplex:
        """Exact value at s = j*w0 with w0**2 = omega2, provided the result
        lies in Q + jQ*w0 with w0 rational, or omega2 makes it expressible.

        Returns the value as a QComplex when w0 is rational; otherwise
        raises NotRationalParams (callers needing irrational w0 use floats).
        """
        w0 = sqrt_fraction(omega2)
        if w0 is None:
            raise NotRationalParams("omega0 is irrational; use float path")
        na, nb = self.num.eval_jomega(omega2)
        da, db = self.den.eval_jomega(omega2)
        return QComplex(na, nb * w0) / QComplex(da, db * w0)

    def eval_jomega_pair(self, omega2: Fraction) -> Tuple[Fraction, Fraction]:
        """Value at s = j*w0 as an exact pair (a, b) meaning a + j*b*w0.

        Works even when w0 itself is irrational (only omega2 must be
        rational).  Raises ZeroDivisionError on a pole.
        """
        omega2 = _as_q(omega2)
        na, nb = self.num.eval_jomega(omega2)
        da, db = self.den.eval_jomega(omega2)
        d = da * da + omega2 * db * db
        if d == 0:
            raise ZeroDivisionError("pole at j*omega0")
        return ((na * da + omega2 * nb * db) / d, (nb * da - na * db) / d)

    def compose_winv(self, omega2: Fraction) -> "RationalFunction":
        """H(omega0**2 / s) for rational omega0**2."""
        omega2 = _as_q(omega2)
        dmax = max(int(self.num.degree), int(self.den.degree))

        def rev(p: Polynomial) -> Polynomial:
            out = [Q(0)] * (dmax + 1)
            power = Q(1)
            for k, c in enumerate(p.coeffs):
                out[dmax - k] = c * power
                power *= omega2
            return Polynomial(out)

        return RationalFunction(rev(self.num), rev(self.den))

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        return format_ratfunc(self)


def as_ratfunc(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, Polynomial)):
        return RationalFunction(_as_poly(x))
    raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")


def reduce(num, den) -> RationalFunction:
    """Canonical coprime, monic-denominator form of num/den."""
    return RationalFunction(num, den)


DEFAULT_POLE_TOL = 1e-12


def eval_ratfunc(f: RationalFunction, z: ComplexValue,
                 pole_tol: float = DEFAULT_POLE_TOL) -> ComplexValue:
    """Evaluate f at a complex point; exact for QComplex arguments.

    Raises PoleAtPoint when the denominator vanishes (exactly on the
    QComplex path, within ``pole_tol`` relative to the leading scale on the
    float path).
    """
    if isinstance(z, QComplex):
        d = f.den(z)
        if d.is_zero():
            raise PoleAtPoint("denominator vanishes at the given point")
        return f.num(z) / d
    z = complex(z)
    d = complex(f.den(z))
    scale = max(1.0, abs(z)) ** max(int(f.den.degree), 0)
    if abs(d) <= pole_tol * scale:
        raise PoleAtPoint("denominator vanishes at the given point")
    return complex(f.num(z)) / d


# ---------------------------------------------------------------------------
# Sturm chains and root machinery
# ---------------------------------------------------------------------------

def sturm_chain(p: Polynomial) -> List[Polynomial]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign_at(p: Polynomial, x) -> int:
    if x == "+inf":
        return 0 if p.is_zero() else (1 if p.leading() > 0 else -1)
    if x == "-inf":
        if p.is_zero():
            return 0
        lead = p.leading()
        s = 1 if lead > 0 else -1
        return s if int(p.degree) % 2 == 0 else -s
    v = p(_as_q(x))
    return 0 if v == 0 else (1 if v > 0 else -1)


def _variations(chain: Sequence[Polynomial], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: Polynomial, a="-inf", b="+inf") -> int:
    """Distinct real roots of p in the half-open interval (a, b]."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = p.square_free_part()
    if p.degree < 1:
        return 0
    chain = sturm_chain(p)
    return _variations(chain, a) - _variations(chain, b)


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    import random as _random
    rng = _random.Random(0xC0FFEE ^ n)
    while True:
        x = rng.randrange(2, n - 1)
        y, c, d = x, rng.randrange(1, n - 1), 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factorize(n: int) -> Dict[int, int]:
    factors: Dict[int, int] = {}
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return factors


def _divisors(n: int) -> List[int]:
    divs = [1]
    for prime, mult in _factorize(n).items():
        divs = [d * prime ** k for d in divs for k in range(mult + 1)]
    return divs


def rational_roots(p: Polynomial) -> List[Fraction]:
    """All rational roots (without multiplicity), by the rational root test;
    closed forms for degrees one and two, divisor enumeration via exact
    integer factorization otherwise."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    cs = list(p.coeffs)
    low = 0
    while cs[low] == 0:
        low += 1
    roots = [Q(0)] if low > 0 else []
    cs = cs[low:]
    if len(cs) == 1:
        return sorted(roots)
    if len(cs) == 2:
        roots.append(-cs[0] / cs[1])
        return sorted(set(roots))
    if len(cs) == 3:
        c0, c1, c2 = cs
        disc = c1 * c1 - 4 * c2 * c0
        root = sqrt_fraction(disc) if disc >= 0 else None
        if root is not None:
            roots.extend({(-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)})
        return sorted(set(roots))
    mult = math.lcm(*(c.denominator for c in cs))
    ics = [int(c * mult) for c in cs]
    a0, an = abs(ics[0]), abs(ics[-1])
    poly = Polynomial(ics)
    for pnum in _divisors(a0):
        for pden in _divisors(an):
            for cand in (Fraction(pnum, pden), Fraction(-pnum, pden)):
                if cand not in roots and poly(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def isolate_positive_roots(p: Polynomial, tol: float = 1e-12) -> List[Fraction]:
    """Midpoint approximations (bracket width <= tol) of the distinct real
    roots of p in (0, oo).  Intended for polynomials already stripped of
    rational roots; exact rational roots are still located correctly."""
    p = p.square_free_part()
    if p.degree < 1:
        return []
    chain = sturm_chain(p)

    def var(x):
        return _variations(chain, x)

    total = var(Q(0)) - var("+inf")
    if total == 0:
        return []
    lead = abs(p.leading())
    bound = Q(1) + max(abs(c) for c in p.coeffs) / lead
    while var(Q(0)) - var(bound) < total:
        bound *= 2

    def split_point(a, b):
        mid = (a + b) / 2
        step = (b - a) / 4
        while p(mid) == 0:  # never a root after rational-root stripping
            mid += step
            step /= 2
        return mid

    intervals = [(Q(0), bound)]
    brackets: List[Tuple[Fraction, Fraction]] = []
    while intervals:
        a, b = intervals.pop()
        n = var(a) - var(b)
        if n == 0:
            continue
        if n == 1:
            brackets.append((a, b))
            continue
        mid = split_point(a, b)
        intervals.append((a, mid))
        intervals.append((mid, b))
    out = []
    for a, b in sorted(brackets):
        while float(b - a) > tol:
            mid = split_point(a, b)
            if var(a) - var(mid) == 1:
                b = mid
            else:
                a = mid
        out.append((a + b) / 2)
    return out


def strict_hurwitz(p: Polynomial) -> bool:
    """True iff all roots of p lie in the open left half-plane."""
    if p.is_zero():
        return False
    if p.leading() < 0:
        p = -p
    deg = int(p.degree)
    if deg == 0:
        return True
    if any(c <= 0 for c in p.coeffs):
        return False
    # Routh array on descending coefficients; strict Hurwitz iff the whole
    # first column stays positive
    desc = list(reversed(p.coeffs))
    row0 = desc[0::2]
    row1 = desc[1::2]
    width = len(row0)
    row1 = row1 + [Q(0)] * (width - len(row1))
    for _ in range(deg - 1):
        if row1[0] == 0:
            return False
        new = []
        for k in range(width - 1):
            a = row0[k + 1] if k + 1 < width else Q(0)
            b = row1[k + 1] if k + 1 < width else Q(0)
            new.append((row1[0] * a - row0[0] * b) / row1[0])
        new.append(Q(0))
        row0, row1 = row1, new
        if row1[0] <= 0:
            return False
    return True


def even_part_numerator(g: RationalFunction) -> Polynomial:
    """r(s) = p(s)q(-s) + p(-s)q(s); 2*Re(g(jw)) = r(jw)/|q(jw)|^2."""
    p, q = g.num, g.den
    return p * q.flip_sign() + p.flip_sign() * q


def even_part_profile(g: RationalFunction) -> Polynomial:
    """E(v) with E(w**2) = r(jw), the even-part numerator on the j-axis."""
    r = even_part_numerator(g)
    out = []
    for k in range(0, len(r.coeffs), 2):
        if k + 1 < len(r.coeffs) and r.coeffs[k + 1] != 0:
            raise AssertionError("even-part numerator must be even")
        out.append(r.coeffs[k] * (-1) ** (k // 2))
    return Polynomial(out)


def _nonnegative_on_nonneg_axis(e: Polynomial) -> bool:
    if e.is_zero():
        return True
    if e(Q(0)) < 0 or e.leading() < 0:
        return False
    # no sign change on (0, oo): odd-multiplicity roots must be absent there
    odd = _odd_multiplicity_part(e)
    return count_real_roots(odd, Q(0), "+inf") == 0


def _odd_multiplicity_part(p: Polynomial) -> Polynomial:
    """Product of the irreducible factors of p of odd multiplicity.

    With g = gcd(p, p') and s = p/g: a factor has odd multiplicity in p
    exactly when it divides s but has even multiplicity in g (possibly 0).
    """
    p = p.monic()
    if p.degree < 1:
        return ONE
    g = p.gcd(p.derivative())
    if g.degree < 1:
        return p
    s = (p // g).monic()
    odd_g = _odd_multiplicity_part(g)
    return (s // s.gcd(odd_g)).monic()


def is_positive_real(g: RationalFunction) -> bool:
    """Positive-real test, exact.

    Uses the classical bilinear equivalence: g is PR iff g is identically
    zero, or num+den is strict Hurwitz and the even-part numerator is
    nonnegative along the imaginary axis.  Simplicity and positivity of the
    residues of imaginary-axis poles are implied.
    """
    if g.is_zero():
        return True
    return (strict_hurwitz(g.num + g.den)
            and _nonnegative_on_nonneg_axis(even_part_profile(g)))


def is_lossless(g: RationalFunction) -> bool:
    if g.is_zero():
        return False
    return is_positive_real(g) and even_part_numerator(g).is_zero()


@dataclass(frozen=True)
class Omega:
    """A frequency w > 0 with exact square; w itself exact when possible."""

    omega2: Optional[Fraction]     # exact w**2, None if irrational
    value: float                   # high-precision approximation of w

    @property
    def exact(self) -> Optional[Fraction]:
        """Exact w if rational, else None."""
        if self.omega2 is None:
            return None
        return sqrt_fraction(self.omega2)

    def __repr__(self):
        if self.omega2 is not None:
            return f"Omega(omega2={self.omega2})"
        return f"Omega(~{self.value!r})"


def minimum_frequencies(g: RationalFunction) -> List[Omega]:
    """All w > 0 with Re(g(jw)) = 0, ascending.

    Requires g PR and not lossless (a lossless function has zero real part
    everywhere, which NotPR also covers for the caller's purposes).
    """
    if not is_positive_real(g):
        raise NotPR("minimum frequencies are defined for PR functions")
    if is_lossless(g):
        raise NotPR("function is lossless; real part vanishes identically")
    work = even_part_profile(g).square_free_part()
    out: List[Omega] = []
    for r in rational_roots(work):
        if r > 0:
            out.append(Omega(r, math.sqrt(float(r))))
        work = work // Polynomial([-r, 1])
    for v in isolate_positive_roots(work):
        out.append(Omega(None, math.sqrt(float(v))))
    out.sort(key=lambda o: o.value)
    return out


def is_minimum_function(g: RationalFunction) -> bool:
    """PR, not identically zero, no poles/zeros on jR or at infinity, and
    the real part vanishes at some w0 > 0."""
    if g.is_zero() or not is_positive_real(g):
        return False
    if g.num.degree != g.den.degree:
        return False                      # pole or zero at infinity
    if _has_imaginary_axis_root(g.num) or _has_imaginary_axis_root(g.den):
        return False
    if is_lossless(g):
        return False
    return bool(minimum_frequencies(g))


def _has_imaginary_axis_root(p: Polynomial) -> bool:
    if p.is_zero():
        return True
    if p(Q(0)) == 0:
        return True
    even = Polynomial(p.coeffs[0::2])
    odd = Polynomial(p.coeffs[1::2])
    g = even.gcd(odd) if not odd.is_zero() else even
    if odd.is_zero():
        g = even
    elif even.is_zero():
        return True
    if g.degree < 1:
        return False
    # p(jw) = even(-w^2) + jw*odd(-w^2); common root u = -w^2 < 0 needed
    return count_real_roots(g, "-inf", Q(0)) > 0


# ---------------------------------------------------------------------------
# Biquadratic minimum functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BiquadParams:
    """Canonical parameters (K, omega0, W, F) of a biquadratic minimum
    function: K(s^2 + w0(1-W)F/W s + w0^2 W)/(s^2 + w0(1-W)/F s + w0^2/W),
    with either 0 < W < 1 and F > 0, or W > 1 and F < 0."""

    K: Fraction
    omega0: Fraction
    W: Fraction
    F: Fraction

    def __post_init__(self):
        for name in ("K", "omega0", "W", "F"):
            object.__setattr__(self, name, _as_q(getattr(self, name)))
        if self.K <= 0 or self.omega0 <= 0:
            raise ValueError("K and omega0 must be positive")
        if not ((0 < self.W < 1 and self.F > 0) or (self.W > 1 and self.F < 0)):
            raise ValueError("require 0<W<1 with F>0, or W>1 with F<0")


def biquad_template(p: BiquadParams) -> RationalFunction:
    """Expand the canonical biquadratic minimum function for p."""
    K, w0, W, F = p.K, p.omega0, p.W, p.F
    num = Polynomial([w0 * w0 * W, w0 * (1 - W) * F / W, 1]) * K
    den = Polynomial([w0 * w0 / W, w0 * (1 - W) / F, 1])
    return RationalFunction(num, den)


def biquad_params(h: RationalFunction) -> BiquadParams:
    """Recover (K, omega0, W, F) from a biquadratic minimum function.

    Raises NotMinimum / NotBiquadratic when h is not a biquadratic minimum
    function, and NotRationalParams when omega0 (hence F) is irrational.
    """
    if not is_minimum_function(h):
        raise NotMinimum("not a minimum function")
    if h.mcmillan_degree != 2:
        raise NotBiquadratic("McMillan degree is not two")
    freqs = minimum_frequencies(h)
    if len(freqs) != 1 or freqs[0].omega2 is None:
        raise NotBiquadratic("expected a single rational minimum frequency")
    v = freqs[0].omega2
    w0 = sqrt_fraction(v)
    K = h.num.leading()           # den is monic, so K = h(inf)
    W = h.num.coeff(0) / (K * v)
    if w0 is None:
        raise NotRationalParams("omega0**2 = %s is not a perfect square" % v)
    if W == 1:
        raise NotMinimum("degenerate parametrisation (W = 1)")
    F = h.num.coeff(1) * W / (K * w0 * (1 - W))
    params = BiquadParams(K, w0, W, F)
    if biquad_template(params) != h:
        raise NotBiquadratic("function does not match the biquadratic form")
    return params


# ---------------------------------------------------------------------------
# Sylvester determinants
# ---------------------------------------------------------------------------

def sylvester_matrix(p: Polynomial, q: Polynomial, k: int) -> List[List[Fraction]]:
    if p.is_zero() or q.is_zero():
        raise DegreeTooSmall("polynomials must be nonzero")
    m, n = int(p.degree), int(q.degree)
    if not 0 <= k < min(m, n):
        raise DegreeTooSmall(f"require 0 <= k < min(deg p, deg q) = {min(m, n)}")
    size = m + n - 2 * k
    pdesc = list(reversed(p.coeffs))
    qdesc = list(reversed(q.coeffs))
    rows = []
    for i in range(n - k):
        rows.append([pdesc[j - i] if 0 <= j - i <= m else Q(0)
                     for j in range(size)])
    for i in range(m - k):
        rows.append([qdesc[j - i] if 0 <= j - i <= n else Q(0)
                     for j in range(size)])
    return rows


def det_bareiss(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant via integer Bareiss after clearing row denominators."""
    n = len(matrix)
    if n == 0:
        return Q(1)
    scale = Q(1)
    m: List[List[int]] = []
    for row in matrix:
        row = [_as_q(x) for x in row]
        mult = math.lcm(*(x.denominator for x in row)) if row else 1
        scale *= mult
        m.append([int(x * mult) for x in row])
    sign = 1
    prev = 1
    for col in range(n - 1):
        if m[col][col] == 0:
            swap = next((r for r in range(col + 1, n) if m[r][col] != 0), None)
            if swap is None:
                return Q(0)
            m[col], m[swap] = m[swap], m[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return Fraction(sign * m[n - 1][n - 1]) / scale


def sylvester_determinant(p: Polynomial, q: Polynomial, k: int) -> Fraction:
    """Determinant R_k of the truncated Sylvester matrix of p and q.

    R_0 = ... = R_{r-1} = 0 exactly when p and q share at least r roots
    (counted with multiplicity)."""
    return det_bareiss(sylvester_matrix(p, q, k))


# ---------------------------------------------------------------------------
# Text format: "poly / poly", coefficients as integers or p/q fractions
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+(?:/\d+|\.\d+)?)\s*\*?\s*(?P<var1>s(?:\^(?P<pow1>\d+))?)?
          |
          (?P<var2>s(?:\^(?P<pow2>\d+))?)
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> Polynomial:
    s = text.strip()
    if s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]):
        s = s[1:-1].strip()
    if not s:
        raise PolyratError("empty polynomial text")
    pos = 0
    terms = {}
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise PolyratError(f"cannot parse polynomial near {s[pos:]!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise PolyratError(f"missing sign before {s[pos:]!r}")
        coef = Q(1)
        if m.group("coef"):
            coef = Fraction(m.group("coef"))
        if sign == "-":
            coef = -coef
        var = m.group("var1") or m.group("var2")
        power = 0
        if var:
            power = int(m.group("pow1") or m.group("pow2") or 1)
        terms[power] = terms.get(power, Q(0)) + coef
        pos = m.end()
        first = False
    deg = max(terms)
    return Polynomial([terms.get(k, Q(0)) for k in range(deg + 1)])


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return False
    return depth == 0


def parse_ratfunc(text: str) -> RationalFunction:
    """Parse "poly / poly" (parenthesised or bare) or a single polynomial.

    A coefficient like 1/2 never splits the function: only a top-level '/'
    adjacent to a parenthesis, or the unique '/' of the string, divides
    numerator from denominator.
    """
    s = text.strip()
    depth = 0
    candidates = []
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            candidates.append(i)
    for i in candidates:
        left, right = s[:i], s[i + 1:]
        if not (left.rstrip().endswith(")") or right.lstrip().startswith("(")
                or len(candidates) == 1):
            continue
        try:
            return RationalFunction(parse_poly(left), parse_poly(right))
        except PolyratError:
            continue
    return RationalFunction(parse_poly(s))


def _format_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(int(p.degree), -1, -1):
        c = p.coeff(k)
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _format_coef(mag)
        else:
            var = "s" if k == 1 else f"s^{k}"
            body = var if mag == 1 else f"{_format_coef(mag)} {var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def format_ratfunc(f: RationalFunction) -> str:
    if f.den == ONE:
        return format_poly(f.num)
    return f"({format_poly(f.num)}) / ({format_poly(f.den)})"
