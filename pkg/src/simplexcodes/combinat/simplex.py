"""Combinatorics of the discrete simplex S_{q,N}.

Points of the simplex are plain tuples of nonnegative integers. Lexicographic
(ascending) order of ``enumerate_simplex`` is the canonical global index used
by every vector or matrix over S_{q,N} in this package.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

Point = tuple[int, ...]


def _compositions(q: int, N: int) -> Iterator[Point]:
    if q == 1:
        yield (N,)
        return
    for first in range(N + 1):
        for rest in _compositions(q - 1, N - first):
            yield (first,) + rest


@lru_cache(maxsize=256)
def _simplex_cached(q: int, N: int) -> tuple[Point, ...]:
    return tuple(_compositions(q, N))


def enumerate_simplex(q: int, N: int) -> list[Point]:
    """All q-tuples of nonnegative integers summing to N, in lexicographic order."""
    if q < 1 or N < 0:
        raise ValueError(f"need q >= 1 and N >= 0, got q={q}, N={N}")
    return list(_simplex_cached(q, N))


def simplex_size(q: int, N: int) -> int:
    return comb(N + q - 1, q - 1)


def simplex_index(q: int, N: int) -> dict[Point, int]:
    """Map each point of S_{q,N} to its canonical (lexicographic) index."""
    return {p: i for i, p in enumerate(_simplex_cached(q, N))}


def unit(q: int, j: int) -> Point:
    """The elementary vector u_j as a point of S_{q,1}."""
    return tuple(1 if i == j else 0 for i in range(q))


def multinomial(N: int, n: Sequence[int]) -> int:
    """N!/(n_0!...n_{q-1}!) if n lies in S_{q,N}, otherwise 0."""
    if any(x < 0 for x in n) or sum(n) != N:
        return 0
    return _multinomial(N, tuple(n))


@lru_cache(maxsize=65536)
def _multinomial(N: int, n: Point) -> int:
    out = factorial(N)
    for x in n:
        out //= factorial(x)
    return out


def composition(x: Iterable[int] | str, q: int) -> Point:
    """Letter counts of a q-ary string; symbols may be ints or digit characters."""
    symbols = [int(s) for s in x]
    bad = [s for s in symbols if not 0 <= s < q]
    if bad:
        raise ValueError(f"symbols {bad} out of range for alphabet size {q}")
    counts = Counter(symbols)
    return tuple(counts.get(i, 0) for i in range(q))


def d1(x: Sequence[int], y: Sequence[int]) -> int:
    """Half the l1 distance between two points of the same simplex."""
    if len(x) != len(y) or sum(x) != sum(y):
        raise ValueError(f"points {tuple(x)} and {tuple(y)} are not in the same simplex")
    return sum(abs(a - b) for a, b in zip(x, y)) // 2


def generalized_binomial(top: Fraction | int, k: int) -> Fraction:
    """Falling-factorial binomial top(top-1)...(top-k+1)/k! for rational top."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    top = Fraction(top)
    out = Fraction(1)
    for i in range(k):
        out *= top - i
    return out / factorial(k)


def sub(x: Sequence[int], y: Sequence[int]) -> Point:
    return tuple(a - b for a, b in zip(x, y))


def add(x: Sequence[int], y: Sequence[int]) -> Point:
    return tuple(a + b for a, b in zip(x, y))


def vandermonde_identity_check(N: int, t: int, n: Sequence[int]) -> bool:
    """Check sum_{e in S_{q,t}} C(t,e) C(N-t,n-e) == C(N,n) exactly."""
    q = len(n)
    total = sum(multinomial(t, e) * multinomial(N - t, sub(n, e)) for e in enumerate_simplex(q, t))
    return total == multinomial(N, n)


def multinomial_ratio_check(N: int, t: int, n: Sequence[int], e: Sequence[int]) -> bool:
    """Check prod_i C(n_i,e_i) / C(N,t) == C(t,e) C(N-t,n-e) / C(N,n) for one (e, n)."""
    lhs = Fraction(1, comb(N, t))
    for ni, ei in zip(n, e):
        lhs *= comb(ni, ei) if 0 <= ei <= ni else 0
    rhs = Fraction(multinomial(t, e) * multinomial(N - t, sub(n, e)), multinomial(N, n))
    return lhs == rhs
