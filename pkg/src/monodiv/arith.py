"""Exact integer utilities: valuations, factorization, squarefree tests, symbols.

Everything is deterministic for a fixed input.  Primality is a strong
probable-prime test to a fixed base set; below DETERMINISTIC_BOUND that test
is known to be exact, above it a "prime" verdict is only probable and
factorizations record the caveat in ``Factorization.probable``.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count

from .errors import BudgetExceededError, InfiniteValuationError

# First twelve primes as SPRP bases.  The first seven already make the test
# deterministic up to ~3.4e14; the certified-trust threshold stays below that.
_SPRP_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
DETERMINISTIC_BOUND = 330_000_000_000_000

_TRIAL_BOUND = 1_000_000
_small_primes: list[int] | None = None


def vp(x: int, p: int) -> int:
    """Largest k with p**k | x.  Raises InfiniteValuationError for x = 0."""
    if x == 0:
        raise InfiniteValuationError("p-adic valuation of 0 is infinite")
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def vp_fraction(q: Fraction | int, p: int) -> int:
    """p-adic valuation of a nonzero rational (negative for denominators)."""
    q = Fraction(q)
    if q == 0:
        raise InfiniteValuationError("p-adic valuation of 0 is infinite")
    return vp(q.numerator, p) - vp(q.denominator, p)


def small_primes() -> list[int]:
    """Primes below one million, sieved once and cached."""
    global _small_primes
    if _small_primes is None:
        sieve = bytearray([1]) * _TRIAL_BOUND
        sieve[0] = sieve[1] = 0
        for i in range(2, math.isqrt(_TRIAL_BOUND) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        _small_primes = [i for i in range(_TRIAL_BOUND) if sieve[i]]
    return _small_primes


def is_probable_prime(n: int) -> bool:
    """Strong probable-prime test to the fixed bases (exact below 3.3e14)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SPRP_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_certified_prime(p: int) -> bool:
    """True when the probable-prime verdict for p is known deterministic."""
    return p < DETERMINISTIC_BOUND


def _check_deadline(deadline: float | None, what: int) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceededError(f"factorization budget exhausted on {what}")


def _integer_nth_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 1."""
    if n < 2:
        return n
    r = 1 << (n.bit_length() // k + 1)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            return r
        r = s


def _perfect_power(n: int) -> tuple[int, int] | None:
    """Return (b, k) with b**k == n and k > 1, or None."""
    for k in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        if 1 << k > n:
            break
        b = _integer_nth_root(n, k)
        if b**k == n:
            return b, k
    return None


def _brent_rho(n: int, deadline: float | None) -> int:
    """Deterministic Brent cycle-finding split of an odd composite n."""
    for c in count(1):
        _check_deadline(deadline, n)
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
            _check_deadline(deadline, n)
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # cycle collapsed; retry with the next polynomial x^2 + c


@dataclass(frozen=True)
class Factorization:
    """Signed prime factorization with strictly increasing primes.

    ``probable`` lists any prime factors above the deterministic primality
    bound; certificates surface these as trust caveats.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]
    probable: tuple[int, ...] = field(default=())

    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


def factor(x: int, budget_ms: int | None = None) -> Factorization:
    """Complete factorization of a nonzero integer.

    Trial division below one million, then deterministic Brent rho splitting
    with probable-prime certification of the cofactors.  Raises
    BudgetExceededError rather than returning a partial answer.
    """
    if x == 0:
        raise ValueError("cannot factor 0")
    deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000.0
    sign = -1 if x < 0 else 1
    n = abs(x)
    found: dict[int, int] = {}
    for p in small_primes():
        if p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    if 1 < n < _TRIAL_BOUND * _TRIAL_BOUND:
        # cofactor below the square of the trial bound is prime
        found[n] = found.get(n, 0) + 1
        n = 1
    stack = [n] if n > 1 else []
    probable: set[int] = set()
    while stack:
        m = stack.pop()
        _check_deadline(deadline, m)
        if is_probable_prime(m):
            found[m] = found.get(m, 0) + 1
            if not is_certified_prime(m):
                probable.add(m)
            continue
        power = _perfect_power(m)
        if power is not None:
            b, k = power
            stack.extend([b] * k)
            continue
        d = _brent_rho(m, deadline)
        stack.extend([d, m // d])
    return Factorization(
        sign=sign,
        factors=tuple(sorted(found.items())),
        probable=tuple(sorted(probable)),
    )


def is_squarefree(x: int, budget_ms: int | None = None) -> bool:
    """True iff no prime square divides x (x nonzero)."""
    if x == 0:
        raise ValueError("squarefreeness of 0 is undefined")
    return factor(x, budget_ms=budget_ms).is_squarefree()


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p."""
    if p == 2 or p < 2:
        raise ValueError("p must be an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def divisors(x: int, budget_ms: int | None = None) -> list[int]:
    """Positive divisors of a nonzero integer, ascending."""
    out = [1]
    for p, e in factor(x, budget_ms=budget_ms).factors:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)
