"""Dense exact univariate polynomial arithmetic.

Carriers for everything downstream: PolyInt over Z, PolyRat over Q, PolyModP
over F_p, residue-field elements of F_p[x]/(phi), and phi-adic developments.
Coefficients are stored ascending; the zero polynomial is the empty tuple.
There is no floating point anywhere in this module.

Mod-p factorization is Cantor-Zassenhaus seeded with a fixed constant so that
repeated runs (and the certificates built on them) are byte-identical.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .arith import vp
from .errors import MathDomainError

_FACTOR_SEED = 0x5EED_1D1  # fixed: reproducible factorizations and certificates


def _normalize(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class PolyInt:
    """Polynomial over Z, ascending coefficients, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _normalize(int(c) for c in coeffs)

    @classmethod
    def zero(cls) -> "PolyInt":
        return cls(())

    @classmethod
    def one(cls) -> "PolyInt":
        return cls((1,))

    @classmethod
    def x(cls) -> "PolyInt":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "PolyInt":
        return cls((c,))

    @classmethod
    def from_text(cls, text: str) -> "PolyInt":
        return cls(int(part.strip()) for part in text.split(","))

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if self.is_zero:
            raise MathDomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyInt) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("PolyInt", self.coeffs))

    def __repr__(self) -> str:
        return f"PolyInt({list(self.coeffs)})"

    def __neg__(self) -> "PolyInt":
        return PolyInt(-c for c in self.coeffs)

    def __add__(self, other: "PolyInt") -> "PolyInt":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyInt(out)

    def __sub__(self, other: "PolyInt") -> "PolyInt":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyInt(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return PolyInt.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyInt(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PolyInt":
        out, base = PolyInt.one(), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def divrem(self, other: "PolyInt") -> tuple["PolyInt", "PolyInt"]:
        """Exact division with remainder; the divisor must be monic over Z."""
        if other.is_zero:
            raise MathDomainError("division by the zero polynomial")
        if not other.is_monic:
            raise MathDomainError("integer divrem needs a monic divisor")
        q = [0] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        d = other.degree
        for i in range(len(r) - 1 - d, -1, -1):
            c = r[i + d]
            if c:
                q[i] = c
                for j, bc in enumerate(other.coeffs):
                    r[i + j] -= c * bc
        return PolyInt(q), PolyInt(r[:d])

    def derivative(self) -> "PolyInt":
        return PolyInt(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def exact_scalar_div(self, c: int) -> "PolyInt":
        if any(a % c for a in self.coeffs):
            raise MathDomainError("scalar division is not exact")
        return PolyInt(a // c for a in self.coeffs)

    def reduce_mod(self, p: int) -> "PolyModP":
        return PolyModP(p, self.coeffs)

    def to_rat(self) -> "PolyRat":
        return PolyRat(Fraction(c) for c in self.coeffs)

    def min_valuation(self, p: int) -> int | None:
        """min_j v_p(coeff_j), or None (infinity) for the zero polynomial."""
        if self.is_zero:
            return None
        return min(vp(c, p) for c in self.coeffs if c)


class PolyRat:
    """Polynomial over Q, ascending Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _normalize(Fraction(c) for c in coeffs)

    @classmethod
    def zero(cls) -> "PolyRat":
        return cls(())

    @classmethod
    def one(cls) -> "PolyRat":
        return cls((1,))

    @classmethod
    def from_text(cls, text: str) -> "PolyRat":
        return cls(Fraction(part.strip()) for part in text.split(","))

    def to_text(self) -> str:
        if self.is_zero:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if self.is_zero:
            raise MathDomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRat) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("PolyRat", self.coeffs))

    def __repr__(self) -> str:
        return f"PolyRat({[str(c) for c in self.coeffs]})"

    def __neg__(self) -> "PolyRat":
        return PolyRat(-c for c in self.coeffs)

    def __add__(self, other: "PolyRat") -> "PolyRat":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyRat(out)

    def __sub__(self, other: "PolyRat") -> "PolyRat":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyRat(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return PolyRat.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyRat(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PolyRat":
        out, base = PolyRat.one(), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def divrem(self, other: "PolyRat") -> tuple["PolyRat", "PolyRat"]:
        if other.is_zero:
            raise MathDomainError("division by the zero polynomial")
        q = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        d, inv = other.degree, 1 / other.lc
        for i in range(len(r) - 1 - d, -1, -1):
            c = r[i + d] * inv
            if c:
                q[i] = c
                for j, bc in enumerate(other.coeffs):
                    r[i + j] -= c * bc
        return PolyRat(q), PolyRat(r[:d])

    def __mod__(self, other: "PolyRat") -> "PolyRat":
        return self.divrem(other)[1]

    def derivative(self) -> "PolyRat":
        return PolyRat(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "PolyRat":
        return self * (1 / self.lc)

    def clear_denominators(self) -> tuple[PolyInt, int]:
        """Return (F, d) with self = F / d and F integral of the same degree."""
        if self.is_zero:
            return PolyInt.zero(), 1
        d = math.lcm(*(c.denominator for c in self.coeffs))
        return PolyInt(int(c * d) for c in self.coeffs), d

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_int(self) -> PolyInt:
        if not self.is_integral():
            raise MathDomainError("polynomial has non-integral coefficients")
        return PolyInt(int(c) for c in self.coeffs)


def gcd_rat(f: PolyRat, g: PolyRat) -> PolyRat:
    """Monic gcd over Q (constant 1 for coprime inputs)."""
    if f.is_zero and g.is_zero:
        raise MathDomainError("gcd(0, 0) is undefined")
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


class PolyModP:
    """Polynomial over F_p, coefficients reduced to [0, p)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        self.p = p
        self.coeffs = _normalize(int(c) % p for c in coeffs)

    def _wrap(self, coeffs) -> "PolyModP":
        return PolyModP(self.p, coeffs)

    @classmethod
    def x(cls, p: int) -> "PolyModP":
        return cls(p, (0, 1))

    @classmethod
    def one(cls, p: int) -> "PolyModP":
        return cls(p, (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if self.is_zero:
            raise MathDomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyModP)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(("PolyModP", self.p, self.coeffs))

    def __repr__(self) -> str:
        return f"PolyModP({self.p}, {list(self.coeffs)})"

    def __neg__(self) -> "PolyModP":
        return self._wrap(-c for c in self.coeffs)

    def __add__(self, other: "PolyModP") -> "PolyModP":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return self._wrap(out)

    def __sub__(self, other: "PolyModP") -> "PolyModP":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._wrap(c * other for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return self._wrap(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return self._wrap(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = (out * x + c) % self.p
        return out

    def divrem(self, other: "PolyModP") -> tuple["PolyModP", "PolyModP"]:
        if other.is_zero:
            raise MathDomainError("division by the zero polynomial")
        p = self.p
        inv = pow(other.lc, -1, p)
        q = [0] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        d = other.degree
        for i in range(len(r) - 1 - d, -1, -1):
            c = r[i + d] * inv % p
            if c:
                q[i] = c
                for j, bc in enumerate(other.coeffs):
                    r[i + j] = (r[i + j] - c * bc) % p
        return self._wrap(q), self._wrap(r[:d])

    def __floordiv__(self, other: "PolyModP") -> "PolyModP":
        return self.divrem(other)[0]

    def __mod__(self, other: "PolyModP") -> "PolyModP":
        return self.divrem(other)[1]

    def monic(self) -> "PolyModP":
        if self.is_zero or self.is_monic:
            return self
        return self * pow(self.lc, -1, self.p)

    def gcd(self, other: "PolyModP") -> "PolyModP":
        a, b = self, other
        if a.is_zero and b.is_zero:
            raise MathDomainError("gcd(0, 0) is undefined")
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "PolyModP":
        return self._wrap(i * c for i, c in enumerate(self.coeffs) if i)

    def pow_mod(self, e: int, modulus: "PolyModP") -> "PolyModP":
        out = self._wrap((1,))
        base = self % modulus
        while e:
            if e & 1:
                out = out * base % modulus
            base = base * base % modulus
            e >>= 1
        return out

    def pth_root(self) -> "PolyModP":
        """Inverse Frobenius: g with g**p == self (self must be a p-th power)."""
        p = self.p
        if any(c and i % p for i, c in enumerate(self.coeffs)):
            raise MathDomainError("polynomial is not a p-th power")
        return self._wrap(self.coeffs[:: p] if self.coeffs else ())

    def lift(self) -> PolyInt:
        """Least non-negative coefficient lift to Z[x]."""
        return PolyInt(self.coeffs)

    def is_irreducible(self) -> bool:
        """Rabin irreducibility test."""
        d = self.degree
        if d < 1:
            return False
        if d == 1:
            return True
        f = self.monic()
        p = self.p
        xp = PolyModP.x(p)
        h = xp.pow_mod(p**d, f)
        if h != xp % f:
            return False
        for q in {q for q, _ in _factor_int(d)}:
            h = xp.pow_mod(p ** (d // q), f)
            if f.gcd(h - xp).degree != 0:
                return False
        return True


def _factor_int(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


# ---------------------------------------------------------------------------
# factorization over F_p (squarefree / distinct-degree / Cantor-Zassenhaus)


def _squarefree_parts(f: PolyModP) -> list[tuple[PolyModP, int]]:
    """Decompose monic f into pairwise-coprime squarefree parts with multiplicity."""
    p = f.p
    out: list[tuple[PolyModP, int]] = []
    e = 1
    while f.degree > 0:
        df = f.derivative()
        if df.is_zero:
            f = f.pth_root()
            e *= p
            continue
        c = f.gcd(df)
        w = f // c
        i = 1
        while w.degree > 0:
            y = w.gcd(c)
            z = w // y
            if z.degree > 0:
                out.append((z, i * e))
            w = y
            c = c // y
            i += 1
        if c.degree > 0:
            f = c.pth_root()
            e *= p
        else:
            break
    return out


def _distinct_degree(f: PolyModP) -> list[tuple[int, PolyModP]]:
    """Split monic squarefree f into (d, product of degree-d irreducibles)."""
    p = f.p
    out = []
    h = PolyModP.x(p)
    d = 0
    while f.degree > 0:
        d += 1
        if 2 * d > f.degree:
            out.append((f.degree, f))
            break
        h = h.pow_mod(p, f)
        g = f.gcd(h - PolyModP.x(p))
        if g.degree > 0:
            out.append((d, g))
            f = f // g
            h = h % f
    return out


def _equal_degree(f: PolyModP, d: int, rng: random.Random) -> list[PolyModP]:
    """Cantor-Zassenhaus split of a product of degree-d irreducibles."""
    if f.degree == d:
        return [f.monic()]
    p = f.p
    while True:
        a = PolyModP(p, [rng.randrange(p) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        if p == 2:
            t = a
            cur = a
            for _ in range(d - 1):
                cur = cur.pow_mod(2, f)
                t = t + cur
            g = f.gcd(t)
        else:
            g = f.gcd(a.pow_mod((p**d - 1) // 2, f) - PolyModP(p, (1,)))
        if 0 < g.degree < f.degree:
            return sorted(
                _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng),
                key=lambda h: (h.degree, h.coeffs),
            )


def factor_mod_p(f: PolyModP) -> list[tuple[PolyModP, int]]:
    """Monic irreducible factors of f with multiplicities.

    Output order is deterministic (degree, then coefficient tuple); the
    equal-degree splitting RNG runs from a fixed seed so repeated calls are
    identical.  For non-monic f the factors multiply to monic(f).
    """
    if f.is_zero:
        raise MathDomainError("cannot factor the zero polynomial")
    if f.degree < 1:
        return []
    rng = random.Random(_FACTOR_SEED)
    out: list[tuple[PolyModP, int]] = []
    for part, mult in _squarefree_parts(f.monic()):
        for d, prod in _distinct_degree(part):
            for irr in _equal_degree(prod, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def gcd_mod_p(f: PolyModP, g: PolyModP) -> PolyModP:
    """Monic gcd over F_p."""
    return f.gcd(g)


# ---------------------------------------------------------------------------
# residue field F_p[x]/(phi) and polynomials over it


class ResidueFieldElem:
    """Element of F_p[x]/(phi) for monic irreducible phi."""

    __slots__ = ("modulus", "value")

    def __init__(self, modulus: PolyModP, value: PolyModP):
        if not modulus.is_monic:
            raise MathDomainError("residue-field modulus must be monic")
        self.modulus = modulus
        self.value = value % modulus

    def _wrap(self, value: PolyModP) -> "ResidueFieldElem":
        return ResidueFieldElem(self.modulus, value)

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ResidueFieldElem)
            and self.modulus == other.modulus
            and self.value == other.value
        )

    def __hash__(self):
        return hash(("ResidueFieldElem", self.modulus, self.value))

    def __repr__(self) -> str:
        return f"ResidueFieldElem({self.value!r} mod {self.modulus!r})"

    def __add__(self, other: "ResidueFieldElem") -> "ResidueFieldElem":
        return self._wrap(self.value + other.value)

    def __sub__(self, other: "ResidueFieldElem") -> "ResidueFieldElem":
        return self._wrap(self.value - other.value)

    def __neg__(self) -> "ResidueFieldElem":
        return self._wrap(-self.value)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._wrap(self.value * other)
        return self._wrap(self.value * other.value)

    __rmul__ = __mul__

    def inverse(self) -> "ResidueFieldElem":
        if self.is_zero:
            raise MathDomainError("inverse of zero in residue field")
        # extended Euclid in F_p[x]
        a, b = self.modulus, self.value
        s0, s1 = PolyModP(a.p, ()), PolyModP(a.p, (1,))
        while not b.is_zero:
            q, r = a.divrem(b)
            a, b = b, r
            s0, s1 = s1, s0 - q * s1
        # a = gcd = unit; s0 satisfies s0*value = a (mod modulus)
        return self._wrap(s0 * pow(a.lc, -1, a.p))


def residue_elem(modulus: PolyModP, numerator: PolyInt) -> ResidueFieldElem:
    """Reduce an integer polynomial modulo (p, phi)."""
    return ResidueFieldElem(modulus, numerator.reduce_mod(modulus.p))


def fq_normalize(coeffs) -> tuple[ResidueFieldElem, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero:
        coeffs.pop()
    return tuple(coeffs)


def fq_divrem(a, b):
    """Division with remainder for polynomials over the residue field."""
    a, b = list(a), list(b)
    if not b:
        raise MathDomainError("division by the zero polynomial")
    inv = b[-1].inverse()
    q = [b[-1] - b[-1]] * max(0, len(a) - len(b) + 1)
    r = a[:]
    d = len(b) - 1
    for i in range(len(r) - 1 - d, -1, -1):
        c = r[i + d] * inv
        if c:
            q[i] = c
            for j, bc in enumerate(b):
                r[i + j] = r[i + j] - c * bc
    return fq_normalize(q), fq_normalize(r[:d])


def fq_gcd(a, b):
    """Monic gcd of polynomials over the residue field."""
    a, b = fq_normalize(a), fq_normalize(b)
    if not a and not b:
        raise MathDomainError("gcd(0, 0) is undefined")
    while b:
        _, r = fq_divrem(a, b)
        a, b = b, r
    inv = a[-1].inverse()
    return fq_normalize(c * inv for c in a)


def fq_derivative(a):
    return fq_normalize(c * i for i, c in enumerate(a) if i)


def fq_is_separable(a) -> bool:
    """True iff the residual polynomial has no repeated roots over F_q-bar."""
    a = fq_normalize(a)
    if len(a) - 1 < 1:
        raise MathDomainError("separability of a constant is undefined")
    da = fq_derivative(a)
    if not da:
        return False
    return len(fq_gcd(a, da)) == 1


# ---------------------------------------------------------------------------
# phi-adic developments


@dataclass(frozen=True)
class PhiDevelopment:
    """Unique expansion Phi = sum_j a_j * phi^j with deg a_j < deg phi."""

    phi: PolyInt
    terms: tuple[PolyInt, ...]

    def reconstruct(self) -> PolyInt:
        out = PolyInt.zero()
        power = PolyInt.one()
        for a in self.terms:
            out = out + a * power
            power = power * self.phi
        return out


def phi_development(Phi: PolyInt, phi: PolyInt) -> PhiDevelopment:
    """phi-adic development of Phi by repeated division (both monic)."""
    if not Phi.is_monic or not phi.is_monic:
        raise MathDomainError("phi-development requires monic polynomials")
    if phi.degree < 1:
        raise MathDomainError("phi must be nonconstant")
    terms = []
    f = Phi
    while not f.is_zero:
        f, r = f.divrem(phi)
        terms.append(r)
    return PhiDevelopment(phi=phi, terms=tuple(terms))


# ---------------------------------------------------------------------------
# resultants and discriminants (integer subresultant PRS)


def _prem(a: PolyInt, b: PolyInt) -> PolyInt:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a modulo b."""
    d = b.degree
    lb = b.lc
    r = a
    e = a.degree - d + 1
    while not r.is_zero and r.degree >= d:
        lr = r.lc
        shift = PolyInt([0] * (r.degree - d) + [lr])
        r = r * lb - b * shift
        e -= 1
    if e > 0:
        r = r * lb**e
    return r


def _exact_int_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("subresultant division was not exact")
    return q


def _resultant_int(a: PolyInt, b: PolyInt) -> int:
    """Res(a, b) over Z via the subresultant polynomial remainder sequence."""
    if a.is_zero or b.is_zero:
        return 0
    s = 1
    if a.degree < b.degree:
        if a.degree % 2 == 1 and b.degree % 2 == 1:
            s = -s
        a, b = b, a
    if b.degree == 0:
        return s * b.coeffs[0] ** a.degree
    ca, cb = abs(a.content()), abs(b.content())
    a, b = a.exact_scalar_div(ca), b.exact_scalar_div(cb)
    mult = ca**b.degree * cb**a.degree
    g = h = 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = _prem(a, b)
        if r.is_zero:
            return 0
        a = b
        b = r.exact_scalar_div(g * h**delta)
        g = a.lc
        if delta > 0:
            h = _exact_int_div(g**delta, h ** (delta - 1))
        if b.degree == 0:
            da = a.degree
            return s * mult * _exact_int_div(b.coeffs[0] ** da, h ** (da - 1))


def resultant(f, g) -> Fraction:
    """Resultant of two nonzero rational polynomials (exact)."""
    f = f.to_rat() if isinstance(f, PolyInt) else f
    g = g.to_rat() if isinstance(g, PolyInt) else g
    if f.is_zero or g.is_zero:
        raise MathDomainError("resultant of the zero polynomial")
    F, df = f.clear_denominators()
    G, dg = g.clear_denominators()
    return Fraction(_resultant_int(F, G), df**g.degree * dg**f.degree)


def discriminant(f) -> Fraction:
    """disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f) for nonconstant f."""
    f = f.to_rat() if isinstance(f, PolyInt) else f
    if f.is_zero or f.degree < 1:
        raise MathDomainError("discriminant requires a nonconstant polynomial")
    d = f.degree
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


# ---------------------------------------------------------------------------
# real-root counting (Sturm) and rational roots


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def count_real_roots(f) -> int:
    """Number of distinct real roots of a squarefree rational polynomial."""
    f = f.to_rat() if isinstance(f, PolyInt) else f
    if f.is_zero:
        raise MathDomainError("zero polynomial")
    if f.degree < 1:
        return 0
    if gcd_rat(f, f.derivative()).degree != 0:
        raise MathDomainError("Sturm count requires a squarefree polynomial")
    chain = [f, f.derivative()]
    while chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero:
        chain.pop()

    def variations(signs: list[int]) -> int:
        signs = [x for x in signs if x]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    at_plus = [_sign(g.lc) for g in chain]
    at_minus = [_sign(g.lc) * (-1 if g.degree % 2 else 1) for g in chain]
    return variations(at_minus) - variations(at_plus)


def rational_roots(f: PolyInt) -> list[Fraction]:
    """All rational roots, ascending, via divisor search on the ends."""
    if f.is_zero:
        raise MathDomainError("zero polynomial")
    roots = set()
    coeffs = list(f.coeffs)
    while coeffs and coeffs[0] == 0:
        roots.add(Fraction(0))
        coeffs.pop(0)
    g = PolyInt(coeffs)
    if g.degree >= 1:
        a0, lead = abs(g.coeffs[0]), abs(g.lc)
        for r in _divisors_small(a0):
            for ss in _divisors_small(lead):
                for cand in (Fraction(r, ss), Fraction(-r, ss)):
                    if g(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def _divisors_small(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)
