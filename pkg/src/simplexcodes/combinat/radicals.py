"""Exact arithmetic on square roots of rationals.

A ``SqrtRational`` is sign * sqrt(radicand). Internally every value is kept in
the normal form ``c * sqrt(k)`` with ``k`` a squarefree positive integer and
``c`` a rational. Because square roots of distinct squarefree integers are
linearly independent over Q, a ``RadicalSum`` (a map kernel -> coefficient)
is zero exactly when the map is empty.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

_SMALL_PRIMES_BOUND = 1000


def _small_primes(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


_PRIMES = _small_primes(_SMALL_PRIMES_BOUND)


@lru_cache(maxsize=1 << 16)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return (s, k) with n = s*s*k and k squarefree. Requires n >= 1."""
    if n < 1:
        raise ValueError("squarefree_decompose needs a positive integer")
    s, k = 1, 1
    for p in _PRIMES:
        if p * p > n:
            break
        if n % p:
            continue
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            k *= p
    if n == 1:
        return s, k
    # remaining cofactor has no prime factor below the sieve bound
    r = isqrt(n)
    if r * r == n:
        return s * r, k
    if n < _SMALL_PRIMES_BOUND**3:
        # at most two large primes, and not a square, so squarefree
        return s, k * n
    from sympy import factorint

    for p, e in factorint(n).items():
        s *= p ** (e // 2)
        if e % 2:
            k *= p
    return s, k


def _sign(x) -> int:
    return (x > 0) - (x < 0)


class SqrtRational:
    """sign * sqrt(radicand) with radicand a nonnegative rational."""

    __slots__ = ("coeff", "kernel")

    def __init__(self, sign: int, radicand: Fraction | int) -> None:
        radicand = Fraction(radicand)
        if radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if (sign == 0) != (radicand == 0):
            raise ValueError("sign is 0 exactly when the radicand is 0")
        if radicand == 0:
            self.coeff, self.kernel = Fraction(0), 1
            return
        sa, ka = squarefree_decompose(radicand.numerator)
        sb, kb = squarefree_decompose(radicand.denominator)
        # sqrt(a/b) = sa/(sb*kb) * sqrt(ka*kb); ka, kb coprime since a/b is reduced
        self.coeff = sign * Fraction(sa, sb * kb)
        self.kernel = ka * kb

    @classmethod
    def _from_normal(cls, coeff: Fraction, kernel: int) -> SqrtRational:
        obj = cls.__new__(cls)
        obj.coeff = coeff
        obj.kernel = kernel if coeff else 1
        return obj

    @classmethod
    def from_signed_square(cls, value: Fraction | int) -> SqrtRational:
        """sign(value) * sqrt(|value|)."""
        value = Fraction(value)
        return cls(_sign(value), abs(value))

    @classmethod
    def rational(cls, value: Fraction | int) -> SqrtRational:
        return cls._from_normal(Fraction(value), 1)

    @property
    def sign(self) -> int:
        return _sign(self.coeff)

    @property
    def radicand(self) -> Fraction:
        return self.coeff * self.coeff * self.kernel

    def __mul__(self, other):
        if isinstance(other, SqrtRational):
            g = gcd(self.kernel, other.kernel)
            return SqrtRational._from_normal(
                self.coeff * other.coeff * g, (self.kernel // g) * (other.kernel // g)
            )
        if isinstance(other, (int, Fraction)):
            return SqrtRational._from_normal(self.coeff * other, self.kernel)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> SqrtRational:
        return SqrtRational._from_normal(-self.coeff, self.kernel)

    def __add__(self, other):
        return RadicalSum.of(self) + other

    __radd__ = __add__

    def __sub__(self, other):
        return RadicalSum.of(self) - other

    def __eq__(self, other) -> bool:
        if isinstance(other, SqrtRational):
            return self.coeff == other.coeff and self.kernel == other.kernel
        if isinstance(other, (int, Fraction)):
            return self.kernel == 1 and self.coeff == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeff, self.kernel))

    def __bool__(self) -> bool:
        return self.coeff != 0

    def __float__(self) -> float:
        return float(self.coeff) * self.kernel**0.5

    def __repr__(self) -> str:
        return f"SqrtRational({self.sign}, {self.radicand})"

    def __str__(self) -> str:
        if self.kernel == 1:
            return str(self.coeff)
        return f"{self.coeff}*sqrt({self.kernel})"


class RadicalSum:
    """Exact finite sum of c_k * sqrt(k) over squarefree kernels k."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, Fraction] | None = None) -> None:
        self.terms: dict[int, Fraction] = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def of(cls, x: SqrtRational) -> RadicalSum:
        return cls({x.kernel: x.coeff})

    def add_term(self, x: SqrtRational) -> None:
        """In-place accumulation; used by the verifiers' inner loops."""
        if not x.coeff:
            return
        c = self.terms.get(x.kernel, 0) + x.coeff
        if c:
            self.terms[x.kernel] = c
        else:
            del self.terms[x.kernel]

    def copy(self) -> RadicalSum:
        return RadicalSum(dict(self.terms))

    def __add__(self, other):
        out = self.copy()
        if isinstance(other, RadicalSum):
            for k, c in other.terms.items():
                out.add_term(SqrtRational._from_normal(c, k))
        elif isinstance(other, SqrtRational):
            out.add_term(other)
        elif isinstance(other, (int, Fraction)):
            out.add_term(SqrtRational.rational(other))
        else:
            return NotImplemented
        return out

    __radd__ = __add__

    def __neg__(self) -> RadicalSum:
        return RadicalSum({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (RadicalSum, SqrtRational)):
            return self + (-other)
        if isinstance(other, (int, Fraction)):
            return self + (-Fraction(other))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SqrtRational.rational(other)
        if not isinstance(other, SqrtRational):
            return NotImplemented
        out = RadicalSum()
        for k, c in self.terms.items():
            out.add_term(SqrtRational._from_normal(c, k) * other)
        return out

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, RadicalSum):
            return self.terms == other.terms
        if isinstance(other, (SqrtRational, int, Fraction)):
            return (self - other).is_zero()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __float__(self) -> float:
        return float(sum(float(c) * k**0.5 for k, c in self.terms.items()))

    def __repr__(self) -> str:
        return f"RadicalSum({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            parts.append(str(c) if k == 1 else f"{c}*sqrt({k})")
        return " + ".join(parts)
