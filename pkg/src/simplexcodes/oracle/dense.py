"""Dense qudit states and the deletion channel, by brute force on q^N amplitudes."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import comb, sqrt

import numpy as np

from ..combinat import Point, enumerate_simplex, multinomial

MAX_DENSE_DIM = 10**6
NORM_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class DenseState:
    """A normalized complex vector over strings (q^N) or over simplex labels."""

    q: int
    N: int
    basis: str
    data: np.ndarray

    def __post_init__(self) -> None:
        if self.basis not in ("strings", "simplex"):
            raise ValueError("basis must be 'strings' or 'simplex'")
        expected = self.q**self.N if self.basis == "strings" else comb(self.N + self.q - 1, self.q - 1)
        if self.data.shape != (expected,):
            raise ValueError(f"expected a vector of length {expected}, got {self.data.shape}")
        norm = float(np.linalg.norm(self.data))
        if abs(norm - 1) > NORM_TOLERANCE:
            raise ValueError(f"state norm {norm} differs from 1")

    @property
    def dimension(self) -> int:
        return self.data.shape[0]

    def tensor(self) -> np.ndarray:
        if self.basis != "strings":
            raise ValueError("only string-basis states have a tensor form")
        return self.data.reshape((self.q,) * self.N)


def _guard(q: int, N: int) -> None:
    if q**N > MAX_DENSE_DIM:
        raise ValueError(f"q^N = {q}^{N} exceeds the dense limit {MAX_DENSE_DIM}")


@lru_cache(maxsize=64)
def _composition_keys(q: int, N: int) -> np.ndarray:
    """Integer key of comp(x) for every string x, row-major in the digits."""
    idx = np.arange(q**N, dtype=np.int64)
    key = np.zeros(q**N, dtype=np.int64)
    for pos in range(N):
        digit = (idx // q ** (N - 1 - pos)) % q
        key += (N + 1) ** digit
    key.setflags(write=False)
    return key


def _key(n: Sequence[int], N: int) -> int:
    return sum(c * (N + 1) ** s for s, c in enumerate(n))


def dicke_vector(n: Point) -> np.ndarray:
    q, N = len(n), sum(n)
    _guard(q, N)
    mask = _composition_keys(q, N) == _key(n, N)
    vec = np.zeros(q**N, dtype=complex)
    vec[mask] = 1.0 / sqrt(multinomial(N, n))
    return vec


def dicke_expand(n: Point) -> DenseState:
    """|D_n> as a uniform superposition over all strings of composition n."""
    return DenseState(len(n), sum(n), "strings", dicke_vector(n))


def dicke_matrix(q: int, N: int) -> np.ndarray:
    """Columns are |D_n> for n in lexicographic order."""
    return np.column_stack([dicke_vector(n) for n in enumerate_simplex(q, N)])


def expand_code_vector(q: int, N: int, amplitudes: dict[Point, complex]) -> np.ndarray:
    vec = np.zeros(q**N, dtype=complex)
    for n, a in amplitudes.items():
        vec += complex(a) * dicke_vector(n)
    return vec


def apply_deletions(
    psi: np.ndarray,
    q: int,
    N: int,
    deletions: Sequence[tuple[int, int]],
    order: Sequence[int] | None = None,
) -> np.ndarray:
    """Contract <symbol| onto qudit ``position`` for each (position, symbol).

    ``order`` permutes the sequence in which the contractions are done.
    Returns the flattened vector on the remaining N - t qudits.
    """
    tensor = psi.reshape((q,) * N)
    positions = [p for p, _ in deletions]
    if len(set(positions)) != len(positions):
        raise ValueError("each qudit can be deleted once")
    removed: list[int] = []
    for k in order if order is not None else range(len(deletions)):
        pos, sym = deletions[k]
        axis = pos - sum(1 for r in removed if r < pos)
        tensor = np.take(tensor, sym, axis=axis)
        removed.append(pos)
    return np.asarray(tensor).reshape(-1)


def deletion_closed_form(n: Point, e: Point) -> np.ndarray:
    """sqrt(C(N-t, n-e)/C(N, n)) |D_{n-e}>, or zero when n-e leaves the simplex."""
    q, N, t = len(n), sum(n), sum(e)
    rest = tuple(a - b for a, b in zip(n, e))
    if min(rest) < 0:
        return np.zeros(q ** (N - t), dtype=complex)
    return sqrt(multinomial(N - t, rest) / multinomial(N, n)) * dicke_vector(rest)


def deletion_oracle_check(
    n: Point,
    e: Point,
    positions: Sequence[int] | None = None,
    order: Sequence[int] | None = None,
) -> float:
    """Max deviation between brute-force deletions and the closed form.

    Symbols are deleted with composition e, symbol s going to the s-th
    listed position (default: the first t qudits).
    """
    q, N, t = len(n), sum(n), sum(e)
    if len(e) != q or t > N:
        raise ValueError("e must lie in S_{q,t} with t <= N")
    symbols = [s for s, c in enumerate(e) for _ in range(c)]
    positions = list(range(t)) if positions is None else list(positions)
    psi = dicke_vector(n)
    out = apply_deletions(psi, q, N, list(zip(positions, symbols)), order)
    return float(np.max(np.abs(out - deletion_closed_form(n, e)), initial=0.0))


@dataclass(frozen=True)
class GramVerdict:
    passed: bool
    worst_offdiagonal: float
    worst_diagonal_spread: float
    tolerance: float
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "worst_offdiagonal": self.worst_offdiagonal,
            "worst_diagonal_spread": self.worst_diagonal_spread,
            "tolerance": self.tolerance,
            "witness": self.witness,
        }


def judge_gram(blocks: dict[tuple[int, int], np.ndarray], K: int, tol: float, labels) -> GramVerdict:
    """KL verdict from Gram blocks G^{ij}_{ab}: i != j must vanish, i == j must agree."""
    worst_off = worst_diag = 0.0
    witness = None
    for i in range(K):
        for j in range(K):
            G = blocks[(i, j)]
            if i != j:
                dev = np.abs(G)
            elif i > 0:
                dev = np.abs(G - blocks[(0, 0)])
            else:
                continue
            m = float(dev.max(initial=0.0))
            if i != j:
                worst_off = max(worst_off, m)
            else:
                worst_diag = max(worst_diag, m)
            if m > tol and witness is None:
                a, b = np.unravel_index(int(dev.argmax()), dev.shape)
                witness = {"i": i, "j": j, "a": labels(a), "b": labels(b), "deviation": m}
    return GramVerdict(witness is None, worst_off, worst_diag, tol, witness)


def pi_deletion_gram_vectors(
    q: int, N: int, vectors: Sequence[dict[Point, complex]], t: int, tol: float = 1e-9
) -> GramVerdict:
    """KL test of a PI code against all t-qudit deletion Kraus operators.

    By permutation invariance deleting the first t qudits is representative;
    the operators are indexed by the deleted symbol string in [q]^t.
    """
    _guard(q, N)
    mats = [expand_code_vector(q, N, v).reshape(q**t, q ** (N - t)) for v in vectors]
    K = len(mats)
    blocks = {(i, j): mats[i].conj() @ mats[j].T for i in range(K) for j in range(K)}

    def label(a: int) -> list[int]:
        return [int(x) for x in np.unravel_index(a, (q,) * t)] if t else []

    return judge_gram(blocks, K, tol, label)
