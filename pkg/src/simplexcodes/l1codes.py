"""Classical l1 codes inside the discrete simplex.

Includes the scaled-simplex family, Bose-Chowla Sidon sets in Z_m and the
coset slicing of S_{q,N} by a Sidon-weighted checksum.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field, replace
from math import comb

import numpy as np

from .combinat import Point, enumerate_simplex, simplex_size

# full pairwise distance checks beyond this many points are refused
MAX_BRUTE_FORCE_POINTS = 20000
# enumeration guard for coset slicing
MAX_SIMPLEX_ENUMERATION = 500_000
# field size guard for discrete-log tables
MAX_FIELD_SIZE = 1 << 24


class ConstructionError(RuntimeError):
    """A construction's own post-check failed."""


@dataclass(frozen=True)
class L1Code:
    q: int
    N: int
    points: tuple[Point, ...]
    certified_distance: int | None = None

    def __post_init__(self) -> None:
        pts = tuple(sorted(tuple(int(x) for x in p) for p in self.points))
        if len(set(pts)) != len(pts):
            raise ValueError("code points must be distinct")
        for p in pts:
            if len(p) != self.q or sum(p) != self.N or min(p) < 0:
                raise ValueError(f"point {p} is not in S_{{{self.q},{self.N}}}")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "N": self.N,
            "distance": self.certified_distance,
            "points": [list(p) for p in self.points],
        }

    @classmethod
    def from_json(cls, data: dict) -> L1Code:
        return cls(
            q=int(data["q"]),
            N=int(data["N"]),
            points=tuple(tuple(p) for p in data["points"]),
            certified_distance=data.get("distance"),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def min_distance(code: L1Code) -> int:
    """Exact minimum pairwise d1 distance (vectorized brute force)."""
    n = len(code.points)
    if n < 2:
        raise ValueError("minimum distance needs at least two points")
    if n > MAX_BRUTE_FORCE_POINTS:
        raise ValueError(f"{n} points exceeds the brute-force limit {MAX_BRUTE_FORCE_POINTS}")
    pts = np.asarray(code.points, dtype=np.int64)
    best = None
    chunk = max(1, 2_000_000 // (n * code.q))
    for start in range(0, n - 1, chunk):
        block = pts[start : start + chunk]
        diff = np.abs(block[:, None, :] - pts[None, :, :]).sum(axis=2) // 2
        rows = np.arange(block.shape[0])
        # mask the diagonal and the lower triangle
        mask = np.arange(n)[None, :] <= (rows + start)[:, None]
        diff[mask] = np.iinfo(np.int64).max
        m = int(diff.min())
        best = m if best is None else min(best, m)
    return best


def certify(code: L1Code) -> L1Code:
    """Return a copy of ``code`` with its distance set by brute force."""
    return replace(code, certified_distance=min_distance(code))


def scaled_simplex_code(K: int, t: int) -> L1Code:
    """(t+1)*S_{q,(K-1)t} together with the all-ones point, N = q = (K-1)t(t+1)."""
    if K < 2 or t < 2:
        raise ValueError("scaled simplex code needs K >= 2 and t >= 2")
    q = N = (K - 1) * t * (t + 1)
    scaled = [tuple((t + 1) * x for x in p) for p in enumerate_simplex(q, (K - 1) * t)]
    code = L1Code(q, N, tuple(scaled) + ((1,) * q,))
    bound = (K - 1) * simplex_size(N, t) + 1
    if len(code) < bound:
        raise ConstructionError(f"size {len(code)} below the bound {bound}")
    if len(code) <= MAX_BRUTE_FORCE_POINTS:
        code = certify(code)
        if code.certified_distance < t + 1:
            raise ConstructionError(f"distance {code.certified_distance} < {t + 1}")
    return code


# ---------------------------------------------------------------------------
# Sidon sets


@dataclass(frozen=True)
class SidonSet:
    modulus: int
    elements: tuple[int, ...]
    order: int
    field_polynomial: tuple[int, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.elements)


def is_sidon(elements: Sequence[int], modulus: int, order: int) -> bool:
    """All nondecreasing ``order``-fold sums distinct mod ``modulus``."""
    seen = set()
    for combo in itertools.combinations_with_replacement(elements, order):
        s = sum(combo) % modulus
        if s in seen:
            return False
        seen.add(s)
    return True


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, int(n**0.5) + 1):
        if n % p == 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _polymulmod(a: list[int], b: list[int], mod_poly: list[int], p: int) -> list[int]:
    # polynomials as little-endian coefficient lists; mod_poly monic of degree d
    d = len(mod_poly) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, d - 1, -1):
        c = prod[k]
        if c:
            for j in range(d + 1):
                prod[k - d + j] = (prod[k - d + j] - c * mod_poly[j]) % p
    out = prod[:d] + [0] * max(0, d - len(prod))
    return out


def _polypow_x(e: int, mod_poly: list[int], p: int) -> list[int]:
    d = len(mod_poly) - 1
    result = [1] + [0] * (d - 1)
    base = [0, 1] + [0] * (d - 2)
    while e:
        if e & 1:
            result = _polymulmod(result, base, mod_poly, p)
        base = _polymulmod(base, base, mod_poly, p)
        e >>= 1
    return result


def _is_primitive(mod_poly: list[int], p: int) -> bool:
    d = len(mod_poly) - 1
    order = p**d - 1
    one = [1] + [0] * (d - 1)
    if _polypow_x(order, mod_poly, p) != one:
        return False
    return all(_polypow_x(order // r, mod_poly, p) != one for r in _prime_factors(order))


def _candidate_polynomials(p: int, d: int) -> Iterable[list[int]]:
    # monic degree-d polynomials, nonzero constant term, in lexicographic order
    for low in itertools.product(range(p), repeat=d):
        coeffs = list(reversed(low))
        if coeffs[0] == 0:
            continue
        yield coeffs + [1]


def bose_chowla(p: int, t: int) -> SidonSet:
    """p+1 integers mod m=(p^{t+1}-1)/(p-1) with distinct t-fold sums.

    Realizes GF(p^{t+1}) as Z_p[x] modulo a primitive polynomial with root
    theta, and takes discrete logs of 1 and theta + a (a in GF(p)) in the
    quotient group GF(p^{t+1})^*/GF(p)^*, which is cyclic of order m.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if t < 1:
        raise ValueError("Sidon order t must be positive")
    d = t + 1
    size = p**d
    if size > MAX_FIELD_SIZE:
        raise ValueError(f"field size {size} exceeds {MAX_FIELD_SIZE}")
    m = (size - 1) // (p - 1)
    for poly in _candidate_polynomials(p, d):
        if not _is_primitive(poly, p):
            continue
        logs: dict[tuple[int, ...], int] = {}
        cur = [1] + [0] * (d - 1)
        x = [0, 1] + [0] * (d - 2)
        for k in range(size - 1):
            logs[tuple(cur)] = k
            cur = _polymulmod(cur, x, poly, p)
        elements = [0]
        for a in range(p):
            elem = [a, 1] + [0] * (d - 2)
            elements.append(logs[tuple(elem)] % m)
        elements = sorted(set(elements))
        if len(elements) == p + 1 and is_sidon(elements, m, t):
            return SidonSet(m, tuple(elements), t, tuple(poly))
    raise ConstructionError(f"no primitive polynomial of degree {d} over GF({p}) gave a Sidon set")


def coset_codes(sidon: SidonSet, q: int, N: int) -> L1Code:
    """Largest checksum class {x in S_{q,N}: sum x_i g_i = g mod m}.

    The weights g_i are the first q Sidon elements. Ties on size go to the
    smallest residue g.
    """
    if len(sidon) < q:
        raise ValueError(f"Sidon set has {len(sidon)} elements, need {q}")
    if simplex_size(q, N) > MAX_SIMPLEX_ENUMERATION:
        raise ValueError("simplex too large to enumerate")
    classes = coset_partition(sidon, q, N)
    best = max(range(sidon.modulus), key=lambda g: (len(classes[g]), -g))
    code = L1Code(q, N, tuple(classes[best]))
    if len(code) >= 2:
        code = certify(code)
        if code.certified_distance < sidon.order + 1:
            raise ConstructionError(
                f"coset code distance {code.certified_distance} < {sidon.order + 1}"
            )
    return code


def coset_partition(sidon: SidonSet, q: int, N: int) -> list[list[Point]]:
    """All m checksum classes of S_{q,N} (some possibly empty)."""
    weights = sidon.elements[:q]
    m = sidon.modulus
    classes: list[list[Point]] = [[] for _ in range(m)]
    for x in enumerate_simplex(q, N):
        classes[sum(a * g for a, g in zip(x, weights)) % m].append(x)
    return classes


def smallest_prime_at_least(n: int) -> int:
    p = max(2, n)
    while not is_prime(p):
        p += 1
    return p


@dataclass(frozen=True)
class AsymptoticCheck:
    K: int
    t: int
    N: int
    inequality_holds: bool
    required_size: int
    modulus: int | None = None
    counting_bound: int | None = None
    constructed_size: int | None = None
    confirmed: bool | None = None


def asymptotic_bound_details(K: int, t: int, N: int) -> AsymptoticCheck:
    """Evaluate t(1+log2 N)+log2 K-1 <= N exactly and, if it holds, back it up.

    The inequality is equivalent to (2N)^t * K <= 2^(N+1), which is decided in
    integers. When it holds, a Bose-Chowla set for the smallest prime p with
    p+1 >= N feeds the coset slicing of S_{N,N}; the largest class is built
    explicitly when the simplex is small enough, otherwise only the counting
    bound ceil(|S_{N,N}|/m) is compared against (K-1)C(N+t-1,N-1)+1.
    """
    holds = (2 * N) ** t * K <= 2 ** (N + 1)
    required = (K - 1) * comb(N + t - 1, N - 1) + 1
    if not holds:
        return AsymptoticCheck(K, t, N, holds, required)
    p = smallest_prime_at_least(N - 1)
    m = (p ** (t + 1) - 1) // (p - 1)
    counting = -(-simplex_size(N, N) // m)
    constructed = None
    if simplex_size(N, N) <= MAX_SIMPLEX_ENUMERATION and p ** (t + 1) <= MAX_FIELD_SIZE:
        sidon = bose_chowla(p, t)
        classes = coset_partition(sidon, N, N)
        constructed = max(len(c) for c in classes)
    reached = (constructed if constructed is not None else counting) >= required
    return AsymptoticCheck(K, t, N, holds, required, m, counting, constructed, reached)


def asymptotic_bound_check(K: int, t: int, N: int) -> bool:
    """Literal truth value of the size-sufficiency inequality."""
    result = asymptotic_bound_details(K, t, N)
    if result.inequality_holds and result.confirmed is False:
        raise ConstructionError(f"inequality holds but the coset code misses the bound: {result}")
    return result.inequality_holds
