"""Curve models, division polynomials, and Fueter polynomials.

Division polynomials are kept as (x-polynomial, parity flag) pairs: for odd n
the polynomial is the full psi_n(x); for even n it is psi_n / psi_2, with
psi_2^2 eliminated through the curve relation 4x^3 + b2 x^2 + 2 b4 x + b6.
The Fueter side mirrors this with F_2^2 = 4T^2 + (alpha/beta) T + 4.

Recurrence base cases and signs were cross-validated against the direct
coordinate-change route (see tests); in particular the 4-torsion factor is
F_4 / F_2 = 2T^6 + (a/b)T^5 + 10T^4 - 10T^2 - (a/b)T - 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import MathDomainError, SingularCurveError
from .poly import PolyRat

_MEMO_CAP = 25


def configure_memo_cap(n: int) -> None:
    """Raise or lower the per-curve memoization cap (default 25)."""
    global _MEMO_CAP
    _MEMO_CAP = n


@dataclass(frozen=True)
class WeierstrassCurve:
    """Exact-rational Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.delta == 0:
            raise SingularCurveError("curve parameters have vanishing discriminant")

    @cached_property
    def b2(self) -> Fraction:
        return self.a1**2 + 4 * self.a2

    @cached_property
    def b4(self) -> Fraction:
        return 2 * self.a4 + self.a1 * self.a3

    @cached_property
    def b6(self) -> Fraction:
        return self.a3**2 + 4 * self.a6

    @cached_property
    def b8(self) -> Fraction:
        return (
            self.a1**2 * self.a6
            + 4 * self.a2 * self.a6
            - self.a1 * self.a3 * self.a4
            + self.a2 * self.a3**2
            - self.a4**2
        )

    @cached_property
    def delta(self) -> Fraction:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -(b2**2) * b8 - 8 * b4**3 - 27 * b6**2 + 9 * b2 * b4 * b6

    @cached_property
    def j(self) -> Fraction:
        c4 = self.b2**2 - 24 * self.b4
        return c4**3 / self.delta

    @cached_property
    def two_torsion_poly(self) -> PolyRat:
        """4x^3 + b2 x^2 + 2 b4 x + b6 (the square of psi_2 on the curve)."""
        return PolyRat((self.b6, 2 * self.b4, self.b2, 4))


@dataclass(frozen=True)
class TateNormalCurve:
    """Tate normal form for a rational 4-torsion point at (0, 0):
    y^2 + a xy + beta a^2 y = x^3 + beta a x^2 with a = alpha + 8 beta."""

    alpha: int
    beta: int

    def __post_init__(self):
        if math.gcd(self.alpha, self.beta) != 1:
            raise MathDomainError("alpha and beta must be coprime")
        if self.beta == 0 or self.alpha == 8 * self.beta or self.alpha == -8 * self.beta:
            raise SingularCurveError("singular Tate parameters (Delta = 0)")

    @property
    def a(self) -> int:
        return self.alpha + 8 * self.beta

    @cached_property
    def weierstrass(self) -> WeierstrassCurve:
        a, b = self.a, self.beta
        return WeierstrassCurve(
            Fraction(a), Fraction(b * a), Fraction(b * a * a), Fraction(0), Fraction(0)
        )

    @property
    def delta(self) -> int:
        a, b = self.a, self.beta
        return b**4 * (self.alpha - 8 * b) * a**7

    @property
    def j(self) -> Fraction:
        a, b = self.a, self.beta
        return Fraction((self.alpha**2 - 48 * b * b) ** 3, self.delta)

    @cached_property
    def fueter_quadratic(self) -> PolyRat:
        """4T^2 + (alpha/beta) T + 4 (the square of F_2 on the Fueter curve)."""
        return PolyRat((4, Fraction(self.alpha, self.beta), 4))


def tate_curve(alpha: int, beta: int) -> TateNormalCurve:
    """Tate-normal-form curve for coprime (alpha, beta); errors when singular."""
    return TateNormalCurve(alpha, beta)


def x_to_T(x: Fraction | int, curve: TateNormalCurve) -> Fraction:
    """Fueter coordinate of a Weierstrass x: T = a*beta / (x + a*beta)."""
    ab = curve.a * curve.beta
    x = Fraction(x)
    if x == -ab:
        raise MathDomainError("x = -a*beta has no Fueter coordinate (pole)")
    return Fraction(ab) / (x + ab)


def T_to_x(T: Fraction | int, curve: TateNormalCurve) -> Fraction:
    """Weierstrass x of a Fueter coordinate: x = a*beta/T - a*beta (T != 0)."""
    T = Fraction(T)
    if T == 0:
        raise MathDomainError("T = 0 is the Fueter identity (pole of x)")
    ab = curve.a * curve.beta
    return Fraction(ab) / T - ab


@dataclass(frozen=True)
class DivisionPoly:
    """Division (or Fueter) polynomial in the parity-split representation.

    For odd n, ``poly`` is the full polynomial; for even n it is the cofactor
    of psi_2 (resp. F_2), with leading coefficient n/2.
    """

    n: int
    even_part: bool
    poly: PolyRat

    @property
    def f_part(self) -> PolyRat:
        """Monic part of an even division polynomial (poly divided by n/2)."""
        if not self.even_part:
            raise MathDomainError("f_part is defined for even n only")
        return self.poly * Fraction(2, self.n)


@lru_cache(maxsize=None)
def _psi_part_cached(curve: WeierstrassCurve, n: int) -> PolyRat:
    return _psi_part(curve, n)


def _psi_part(curve: WeierstrassCurve, n: int) -> PolyRat:
    def P(k: int) -> PolyRat:
        if k <= _MEMO_CAP:
            return _psi_part_cached(curve, k)
        return _psi_part(curve, k)

    b2, b4, b6, b8 = curve.b2, curve.b4, curve.b6, curve.b8
    if n in (1, 2):
        return PolyRat.one()
    if n == 3:
        return PolyRat((b8, 3 * b6, 3 * b4, b2, 3))
    if n == 4:
        return PolyRat(
            (
                b4 * b8 - b6 * b6,
                b2 * b8 - b4 * b6,
                10 * b8,
                10 * b6,
                5 * b4,
                b2,
                2,
            )
        )
    B = curve.two_torsion_poly
    if n % 2:
        m = (n - 1) // 2
        if m % 2 == 0:
            return B * B * P(m + 2) * P(m) ** 3 - P(m - 1) * P(m + 1) ** 3
        return P(m + 2) * P(m) ** 3 - B * B * P(m - 1) * P(m + 1) ** 3
    m = n // 2
    return P(m) * (P(m + 2) * P(m - 1) ** 2 - P(m - 2) * P(m + 1) ** 2)


def psi(curve: WeierstrassCurve, n: int) -> DivisionPoly:
    """n-th division polynomial; even n returns the psi_2 cofactor."""
    if n < 1:
        raise MathDomainError("n must be positive")
    return DivisionPoly(n=n, even_part=(n % 2 == 0), poly=_psi_part(curve, n))


@lru_cache(maxsize=None)
def _fueter_part_cached(curve: TateNormalCurve, n: int) -> PolyRat:
    return _fueter_part(curve, n)


def _fueter_part(curve: TateNormalCurve, n: int) -> PolyRat:
    def F(k: int) -> PolyRat:
        if k <= _MEMO_CAP:
            return _fueter_part_cached(curve, k)
        return _fueter_part(curve, k)

    q = Fraction(curve.alpha, curve.beta)
    if n in (1, 2):
        return PolyRat.one()
    if n == 3:
        return PolyRat((-3, -q, -6, 0, 1))
    if n == 4:
        return PolyRat((-2, -q, -10, 0, 10, q, 2))
    C = curve.fueter_quadratic
    if n % 2:
        m = (n - 1) // 2
        sign = -1 if (m + 1) % 2 else 1
        if m % 2 == 0:
            val = C * C * F(m + 2) * F(m) ** 3 - F(m - 1) * F(m + 1) ** 3
        else:
            val = F(m + 2) * F(m) ** 3 - C * C * F(m - 1) * F(m + 1) ** 3
        return val * sign
    # even n: the F_2^2 factors cancel, so the same composition works for
    # either parity of m (each factor is already its parity-split part)
    m = n // 2
    sign = -1 if m % 2 else 1
    return sign * F(m) * (F(m + 2) * F(m - 1) ** 2 - F(m - 2) * F(m + 1) ** 2)


def fueter(curve: TateNormalCurve, n: int) -> DivisionPoly:
    """n-th Fueter polynomial in T; even n returns the F_2 cofactor."""
    if n < 1:
        raise MathDomainError("n must be positive")
    return DivisionPoly(n=n, even_part=(n % 2 == 0), poly=_fueter_part(curve, n))


def psi_fueter_identity_check(
    curve: TateNormalCurve, n: int, T: Fraction | int
) -> bool:
    """Exact check of psi_n(x(T)) = (-1)^((n-1)/2) (a*beta/T)^((n^2-1)/2) F_n(T)."""
    if n % 2 == 0:
        raise MathDomainError("the identity is implemented for odd n")
    T = Fraction(T)
    x = T_to_x(T, curve)
    lhs = psi(curve.weierstrass, n).poly(x)
    d = (n * n - 1) // 2
    sign = -1 if ((n - 1) // 2) % 2 else 1
    rhs = sign * (Fraction(curve.a * curve.beta) / T) ** d * fueter(curve, n).poly(T)
    return lhs == rhs


def double_x(curve: WeierstrassCurve | TateNormalCurve, x: Fraction | int) -> Fraction:
    """x-coordinate duplication map; errors on 2-torsion input."""
    if isinstance(curve, TateNormalCurve):
        curve = curve.weierstrass
    x = Fraction(x)
    den = curve.two_torsion_poly(x)
    if den == 0:
        raise MathDomainError("x is a 2-torsion abscissa (duplication pole)")
    num = x**4 - curve.b4 * x**2 - 2 * curve.b6 * x - curve.b8
    return num / den


def verdure_disc(n: int, delta: Fraction | int) -> Fraction:
    """Closed-form discriminant of the n-th division polynomial carrier.

    Odd n: (-1)^((n-1)/2) n^((n^2-3)/2) Delta^((n^4-4n^2+3)/24).
    Even n (for the psi_2 cofactor of leading coefficient n/2):
    (-1)^((n-2)/2) 16 n^((n^2-12)/2) Delta^((n^4-10n^2+24)/24).
    """
    if n < 1:
        raise MathDomainError("n must be positive")
    delta = Fraction(delta)
    if n % 2:
        sign = -1 if ((n - 1) // 2) % 2 else 1
        return sign * Fraction(n) ** ((n * n - 3) // 2) * delta ** ((n**4 - 4 * n * n + 3) // 24)
    sign = -1 if ((n - 2) // 2) % 2 else 1
    return (
        sign
        * 16
        * Fraction(n) ** ((n * n - 12) // 2)
        * delta ** ((n**4 - 10 * n * n + 24) // 24)
    )


def fueter_disc(n: int, alpha: int, beta: int) -> Fraction:
    """Closed-form discriminant of the odd Fueter polynomial F_n."""
    if n % 2 == 0:
        raise MathDomainError("the Fueter discriminant formula is for odd n")
    sign = -1 if ((n - 1) // 2) % 2 else 1
    base = Fraction((alpha - 8 * beta) * (alpha + 8 * beta), beta * beta)
    return sign * Fraction(n) ** ((n * n - 3) // 2) * base ** ((n**4 - 4 * n * n + 3) // 24)
