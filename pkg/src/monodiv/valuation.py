"""Valuations of division and Fueter polynomials at singular points.

The closed forms (for odd n, odd p):

  p | alpha - 8 beta:  v_p(Psi_n(Q)) = v * (n^2-1)/8          (x(Q) = -2^5 beta^2)
  p | alpha + 8 beta:  v_p(Psi_n(0)) = v * 5(n^2-1)/8,  v_p(F_n(1)) =  v (n^2-1)/8
  p | beta:            v_p(Psi_n(0)) = v * 3(n^2-1)/8,  v_p(F_n(1)) = -v (n^2-1)/8

each paired with a direct exact-evaluation oracle.  The floor sequence
R_n(a, l) underlying the multiplicative-reduction analysis is also here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import vp, vp_fraction
from .elliptic import TateNormalCurve, fueter, psi
from .errors import MathDomainError

_CASE_TAGS = ("minus", "plus", "beta")


@dataclass(frozen=True)
class SingularCase:
    """Which quantity p divides: 'minus' for alpha - 8 beta, 'plus' for
    alpha + 8 beta, 'beta' for beta; v is the corresponding valuation."""

    tag: str
    p: int
    v: int


def singular_case(curve: TateNormalCurve, p: int) -> SingularCase:
    """Classify an odd bad prime of the curve (the cases are exclusive)."""
    if p == 2 or p < 3:
        raise MathDomainError("singular cases are analysed at odd primes")
    alpha, beta = curve.alpha, curve.beta
    if beta % p == 0:
        return SingularCase("beta", p, vp(beta, p))
    if (alpha - 8 * beta) % p == 0:
        return SingularCase("minus", p, vp(alpha - 8 * beta, p))
    if (alpha + 8 * beta) % p == 0:
        return SingularCase("plus", p, vp(alpha + 8 * beta, p))
    raise MathDomainError(f"good reduction at p = {p}")


def R(n: int, a: int, ell: int) -> int:
    """floor(n^2 a^(l - a^)/2l) - floor(na^(l - na^)/2l), hats reducing mod l."""
    if ell == 0:
        raise MathDomainError("ell must be nonzero")
    L = abs(ell)
    ahat = a % L
    nahat = (n * a) % L
    first = Fraction(n * n * ahat * (ell - ahat), 2 * ell)
    second = Fraction(nahat * (ell - nahat), 2 * ell)
    return math.floor(first) - math.floor(second)


def _odd_only(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise MathDomainError("the valuation formulas are stated for odd n")


def predicted_valuation(case: SingularCase, n: int) -> int:
    """Predicted v_p of Psi_n at the singular abscissa, odd n."""
    _odd_only(n)
    k = (n * n - 1) // 8
    if case.tag == "minus":
        return case.v * k
    if case.tag == "plus":
        return case.v * 5 * k
    if case.tag == "beta":
        return case.v * 3 * k
    raise MathDomainError(f"unknown case tag {case.tag!r}")


def predicted_fueter_valuation(case: SingularCase, n: int) -> int:
    """Predicted v_p of F_n at the corresponding Fueter point, odd n
    (negative for p | beta)."""
    _odd_only(n)
    k = (n * n - 1) // 8
    if case.tag == "minus":
        return case.v * k
    if case.tag == "plus":
        return case.v * k
    if case.tag == "beta":
        return -case.v * k
    raise MathDomainError(f"unknown case tag {case.tag!r}")


def singular_x(case: SingularCase, curve: TateNormalCurve) -> int:
    """Weierstrass abscissa of the singular point (exact integer)."""
    if case.tag == "minus":
        return -(2**5) * curve.beta**2
    return 0


def singular_fueter_T(case: SingularCase, curve: TateNormalCurve) -> Fraction:
    """Exact rational Fueter coordinate above the singular point."""
    if case.tag == "minus":
        # x_to_T at x = -2^5 beta^2, simplified
        return Fraction(curve.a, curve.a - 32 * curve.beta)
    return Fraction(1)


def observed_psi_valuation(curve: TateNormalCurve, case: SingularCase, n: int) -> int:
    """v_p of the exact value Psi_n(singular x); the brute-force oracle."""
    _odd_only(n)
    value = psi(curve.weierstrass, n).poly(Fraction(singular_x(case, curve)))
    return vp_fraction(value, case.p)


def observed_fueter_valuation(
    curve: TateNormalCurve, case: SingularCase, n: int
) -> int:
    """v_p of the exact rational F_n(singular T); the brute-force oracle."""
    _odd_only(n)
    value = fueter(curve, n).poly(singular_fueter_T(case, curve))
    return vp_fraction(value, case.p)


def singular_T(case: SingularCase, curve: TateNormalCurve, p: int) -> int:
    """Repeated-root location of F_n mod p, as an element of [0, p)."""
    if case.tag in ("plus", "beta"):
        return 1
    ab = curve.a * curve.beta
    den = (singular_x(case, curve) + ab) % p
    if den == 0:
        # -a*beta = -16 beta^2 != -32 beta^2 mod p for odd p coprime to beta
        raise MathDomainError("unreachable: singular x collides with the T-pole")
    return ab % p * pow(den, -1, p) % p
