"""Induced Sym^N action of a q x q matrix and logical-action extraction."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from math import factorial, prod, sqrt

import numpy as np

from ..combinat import Point, simplex_index
from .ad import code_matrix
from .spin import MAX_BLOCK


def _poly_mul_linear(poly: dict[Point, complex], column: np.ndarray) -> dict[Point, complex]:
    # multiply by sum_j column[j] z_j
    out: dict[Point, complex] = {}
    for mono, c in poly.items():
        for j, gj in enumerate(column):
            if gj == 0:
                continue
            m = list(mono)
            m[j] += 1
            m = tuple(m)
            out[m] = out.get(m, 0) + c * gj
    return out


def sym_action(g: np.ndarray, N: int) -> np.ndarray:
    """U(g) on S_{q,N}: |n> ~ z^n / sqrt(n!) and z_k -> sum_j g_jk z_j."""
    q = g.shape[0]
    index = simplex_index(q, N)
    if len(index) > MAX_BLOCK:
        raise ValueError(f"|S_{{{q},{N}}}| exceeds {MAX_BLOCK}")
    U = np.zeros((len(index), len(index)), dtype=complex)
    for n, col in index.items():
        poly: dict[Point, complex] = {(0,) * q: 1.0}
        for k in range(q):
            for _ in range(n[k]):
                poly = _poly_mul_linear(poly, g[:, k])
        norm_n = sqrt(prod(factorial(x) for x in n))
        for m, c in poly.items():
            U[index[m], col] = c * sqrt(prod(factorial(x) for x in m)) / norm_n
    return U


@dataclass(frozen=True)
class CovarianceResult:
    invariant: bool
    leakage: float
    logical: np.ndarray
    unitarity_defect: float
    tolerance: float

    def to_json(self) -> dict:
        return {
            "invariant": self.invariant,
            "leakage": self.leakage,
            "unitarity_defect": self.unitarity_defect,
            "tolerance": self.tolerance,
            "logical": [[[z.real, z.imag] for z in row] for row in self.logical.tolist()],
        }


def covariance_check_vectors(
    q: int, N: int, vectors: Sequence[dict[Point, complex]], g: np.ndarray, tol: float = 1e-9
) -> CovarianceResult:
    """Whether U(g) preserves the code space, and its K x K logical matrix."""
    g = np.asarray(g, dtype=complex)
    if g.shape != (q, q):
        raise ValueError(f"g must be {q}x{q}")
    V = code_matrix(q, N, vectors)
    UV = sym_action(g, N) @ V
    L = V.conj().T @ UV
    leakage = float(np.linalg.norm(UV - V @ L, ord=2))
    defect = float(np.max(np.abs(L.conj().T @ L - np.eye(L.shape[0]))))
    return CovarianceResult(leakage <= tol, leakage, L, defect, tol)


def _phase_key(M: np.ndarray, tol: float) -> tuple:
    flat = M.reshape(-1)
    pivot = flat[np.argmax(np.abs(flat) > tol)]
    canon = flat * (abs(pivot) / pivot)
    digits = max(1, int(-np.log10(tol)) - 2)
    return tuple(np.round(canon.real, digits) + 0.0) + tuple(np.round(canon.imag, digits) + 0.0)


def projective_group_order(
    generators: Sequence[np.ndarray], tol: float = 1e-9, limit: int = 10_000
) -> int:
    """Size of the group generated modulo global phase (breadth-first closure)."""
    K = generators[0].shape[0]
    ident = np.eye(K, dtype=complex)
    seen = {_phase_key(ident, tol): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for M in frontier:
            for G in generators:
                P = G @ M
                key = _phase_key(P, tol)
                if key not in seen:
                    seen[key] = P
                    nxt.append(P)
                    if len(seen) > limit:
                        raise ValueError(f"group exceeds {limit} elements")
        frontier = nxt
    return len(seen)


def random_unitary(q: int, rng: np.random.Generator) -> np.ndarray:
    z = rng.normal(size=(q, q)) + 1j * rng.normal(size=(q, q))
    Q, R = np.linalg.qr(z)
    return Q * (np.diag(R) / np.abs(np.diag(R)))

