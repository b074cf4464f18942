"""su(q) generators, their Jordan-Schwinger images, and the spin KL test."""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from math import sqrt

import numpy as np

from ..combinat import Point, enumerate_simplex, simplex_index
from .ad import code_matrix
from .dense import dicke_matrix

MAX_Q = 4
MAX_BLOCK = 5000


def gellmann(q: int) -> list[np.ndarray]:
    """Generalized Gell-Mann matrices: symmetric, antisymmetric, then diagonal; Tr(ab) = 2 delta."""
    if q < 2:
        raise ValueError("need q >= 2")
    out = []
    for j, k in itertools.combinations(range(q), 2):
        m = np.zeros((q, q), dtype=complex)
        m[j, k] = m[k, j] = 1
        out.append(m)
    for j, k in itertools.combinations(range(q), 2):
        m = np.zeros((q, q), dtype=complex)
        m[j, k], m[k, j] = -1j, 1j
        out.append(m)
    for l in range(1, q):
        d = np.zeros(q)
        d[:l] = 1
        d[l] = -l
        out.append(np.diag(d * sqrt(2 / (l * (l + 1)))).astype(complex))
    return out


def structure_constants(basis: Sequence[np.ndarray]) -> np.ndarray:
    """c[a,b,c] with [T_a, T_b] = sum_c c[a,b,c] T_c, using Tr(T_a T_b) = 2 delta."""
    n = len(basis)
    c = np.zeros((n, n, n), dtype=complex)
    for a, b in itertools.product(range(n), repeat=2):
        comm = basis[a] @ basis[b] - basis[b] @ basis[a]
        for k in range(n):
            c[a, b, k] = np.trace(comm @ basis[k]) / 2
    return c


def _guard(q: int, N: int) -> None:
    if q > MAX_Q:
        raise ValueError(f"q = {q} exceeds {MAX_Q}")
    if len(enumerate_simplex(q, N)) > MAX_BLOCK:
        raise ValueError(f"|S_{{{q},{N}}}| exceeds {MAX_BLOCK}")


def js_matrix(J: np.ndarray, N: int) -> np.ndarray:
    """sum_{j,k} a_j^dag J_jk a_k on the excitation-N block, canonical order."""
    q = J.shape[0]
    index = simplex_index(q, N)
    M = np.zeros((len(index), len(index)), dtype=complex)
    for n, col in index.items():
        for j in range(q):
            for k in range(q):
                if not J[j, k]:
                    continue
                if j == k:
                    M[col, col] += J[j, j] * n[j]
                elif n[k] > 0:
                    m = list(n)
                    m[k] -= 1
                    m[j] += 1
                    M[index[tuple(m)], col] += J[j, k] * sqrt(n[k] * (n[j] + 1))
    return M


def js_generators(q: int, N: int) -> list[np.ndarray]:
    _guard(q, N)
    return [js_matrix(J, N) for J in gellmann(q)]


def global_generator(J: np.ndarray, N: int) -> np.ndarray:
    """sum_i J^(i) on the full q^N space."""
    q = J.shape[0]
    total = np.zeros((q**N, q**N), dtype=complex)
    for i in range(N):
        op = np.array([[1.0 + 0j]])
        for k in range(N):
            op = np.kron(op, J if k == i else np.eye(q))
        total += op
    return total


def global_vs_js_deviation(J: np.ndarray, N: int) -> float:
    """max |D^dag (sum_i J^(i)) D - js(J)| with D the Dicke basis matrix."""
    q = J.shape[0]
    D = dicke_matrix(q, N)
    restricted = D.conj().T @ global_generator(J, N) @ D
    return float(np.max(np.abs(restricted - js_matrix(J, N))))


@dataclass(frozen=True)
class SpinVerdict:
    passed: bool
    worst: float
    tolerance: float
    products_checked: int
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "worst": self.worst,
            "tolerance": self.tolerance,
            "products_checked": self.products_checked,
            "witness": self.witness,
        }


def spin_kl_check_vectors(
    q: int, N: int, vectors: Sequence[dict[Point, complex]], t: int, tol: float = 1e-9
) -> SpinVerdict:
    """<c_i|J_{a1}...J_{as}|c_j> = lambda delta_ij for every product with 1 <= s <= t.

    Products act on the right: the word (a1, ..., as) means J_{a1}...J_{as},
    built by applying J_{as} first.
    """
    _guard(q, N)
    gens = js_generators(q, N)
    V = code_matrix(q, N, vectors)
    K = V.shape[1]
    orth = V.conj().T @ V
    worst = float(np.max(np.abs(orth - np.eye(K))))
    witness = None if worst <= tol else {"word": [], "deviation": worst}
    layer = {(): V}
    checked = 0
    for s in range(1, t + 1):
        nxt = {}
        for word, W in layer.items():
            for a, G in enumerate(gens):
                nxt[(a,) + word] = G @ W
        for word, W in nxt.items():
            M = V.conj().T @ W
            dev = max(
                float(np.max(np.abs(M - np.diag(np.diag(M))), initial=0.0)),
                float(np.max(np.abs(np.diag(M) - M[0, 0]))),
            )
            checked += 1
            worst = max(worst, dev)
            if dev > tol and witness is None:
                witness = {"word": list(word), "deviation": dev}
        layer = nxt
    return SpinVerdict(witness is None, worst, tol, checked, witness)
