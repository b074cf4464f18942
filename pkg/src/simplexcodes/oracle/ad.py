"""Amplitude damping on q bosonic modes: Kraus matrices, Gram tables, fidelity."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from math import comb, sqrt

import numpy as np

from ..combinat import Point, enumerate_simplex, simplex_index
from .dense import GramVerdict, judge_gram

DEFAULT_GAMMAS = (0.01, 0.1, 0.3)
FIT_GAMMAS = (1e-3, 2e-3, 4e-3)


def ad_kraus(n_max: int, x: int, gamma: float) -> np.ndarray:
    """Single-mode A_x on Fock levels 0..n_max: <j-x|A_x|j> = sqrt((1-g)^(j-x) g^x C(j,x))."""
    if not 0 <= x <= n_max:
        raise ValueError("need 0 <= x <= n_max")
    A = np.zeros((n_max + 1, n_max + 1))
    for j in range(x, n_max + 1):
        A[j - x, j] = sqrt((1 - gamma) ** (j - x) * gamma**x * comb(j, x))
    return A


def multimode_kraus(q: int, N: int, e: Point, gamma: float) -> np.ndarray:
    """A_{e_0} x ... x A_{e_{q-1}} restricted to excitation N -> N - |e|.

    Each entry is the product of single-mode matrix entries, which is exactly
    the tensor product evaluated on the constant-excitation blocks.
    """
    r = sum(e)
    singles = [ad_kraus(N, x, gamma) for x in e]
    rows = simplex_index(q, N - r)
    out = np.zeros((len(rows), len(enumerate_simplex(q, N))))
    for col, n in enumerate(enumerate_simplex(q, N)):
        m = tuple(a - b for a, b in zip(n, e))
        if min(m) < 0:
            continue
        out[rows[m], col] = np.prod([singles[k][m[k], n[k]] for k in range(q)])
    return out


def error_set(q: int, t: int) -> list[Point]:
    """All e with 0 <= |e| <= t, grouped by |e|."""
    return [e for r in range(t + 1) for e in enumerate_simplex(q, r)]


def code_matrix(q: int, N: int, vectors: Sequence[dict[Point, complex]]) -> np.ndarray:
    """Columns are the logical vectors over S_{q,N} in canonical order."""
    index = simplex_index(q, N)
    V = np.zeros((len(index), len(vectors)), dtype=complex)
    for i, vec in enumerate(vectors):
        for p, a in vec.items():
            V[index[p], i] = complex(a)
    return V


def ad_kl_gram_vectors(
    q: int,
    N: int,
    vectors: Sequence[dict[Point, complex]],
    t: int,
    gammas: Sequence[float] = DEFAULT_GAMMAS,
    tol: float = 1e-9,
) -> GramVerdict:
    """KL test of a Fock code against all A_e with |e| <= t, at each gamma.

    The verdict fails at the first gamma whose Gram table breaks the
    conditions; the witness records gamma and the two error labels.
    """
    V = code_matrix(q, N, vectors)
    K = V.shape[1]
    errors = [e for e in error_set(q, t) if sum(e) <= N]
    worst_off = worst_diag = 0.0
    first = None
    for gamma in gammas:
        images = {e: multimode_kraus(q, N, e, gamma) @ V for e in errors}
        n_err = len(errors)
        blocks = {}
        for i in range(K):
            for j in range(K):
                G = np.zeros((n_err, n_err), dtype=complex)
                for a, ea in enumerate(errors):
                    for b, eb in enumerate(errors):
                        if sum(ea) == sum(eb):
                            G[a, b] = np.vdot(images[ea][:, i], images[eb][:, j])
                blocks[(i, j)] = G
        verdict = judge_gram(blocks, K, tol, lambda a: list(errors[a]))
        worst_off = max(worst_off, verdict.worst_offdiagonal)
        worst_diag = max(worst_diag, verdict.worst_diagonal_spread)
        if verdict.witness is not None and first is None:
            first = dict(verdict.witness, gamma=gamma)
    return GramVerdict(first is None, worst_off, worst_diag, tol, first)


def fidelity(
    q: int, N: int, psi: np.ndarray, t: int, gamma: float
) -> float:
    """Sum over |e| <= t of <psi|A_e^dag A_e|psi> for psi over S_{q,N}."""
    total = 0.0
    for e in error_set(q, t):
        if sum(e) > N:
            continue
        v = multimode_kraus(q, N, e, gamma) @ psi
        total += float(np.vdot(v, v).real)
    return total


def _extrapolate_to_zero(xs: Sequence[float], ys: Sequence[float]) -> float:
    # value at 0 of the interpolating polynomial (Neville); for x, 2x, 4x this
    # is the two-step Richardson extrapolation
    p = list(ys)
    n = len(xs)
    for k in range(1, n):
        for i in range(n - k):
            p[i] = (xs[i + k] * p[i] - xs[i] * p[i + 1]) / (xs[i + k] - xs[i])
    return p[0]


@dataclass(frozen=True)
class FidelityFit:
    t: int
    gammas: tuple[float, ...]
    fidelities: tuple[float, ...]
    coefficient: float
    expected: int
    state_spread: float

    @property
    def relative_error(self) -> float:
        return abs(self.coefficient - self.expected) / self.expected

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "gammas": list(self.gammas),
            "fidelities": list(self.fidelities),
            "coefficient": self.coefficient,
            "expected": self.expected,
            "relative_error": self.relative_error,
            "state_spread": self.state_spread,
        }


def fidelity_series_vectors(
    q: int,
    N: int,
    vectors: Sequence[dict[Point, complex]],
    t: int,
    gammas: Sequence[float] = FIT_GAMMAS,
    seed: int = 0,
    n_random: int = 32,
) -> FidelityFit:
    """Fit 1 - F(gamma) ~ A gamma^(t+1), F minimized over sampled logical states.

    Samples are the K basis states plus ``n_random`` seeded Haar-like
    superpositions. ``state_spread`` is the largest fidelity difference seen
    between samples at one gamma.
    """
    V = code_matrix(q, N, vectors)
    K = V.shape[1]
    rng = np.random.default_rng(seed)
    coeffs = [np.eye(K)[:, i] for i in range(K)]
    for _ in range(n_random):
        z = rng.normal(size=K) + 1j * rng.normal(size=K)
        coeffs.append(z / np.linalg.norm(z))
    states = [V @ c for c in coeffs]
    fids, spread = [], 0.0
    for g in gammas:
        vals = [fidelity(q, N, s, t, g) for s in states]
        fids.append(min(vals))
        spread = max(spread, max(vals) - min(vals))
    scaled = [(1 - F) / g ** (t + 1) for F, g in zip(fids, gammas)]
    A = _extrapolate_to_zero(list(gammas), scaled) if len(gammas) > 1 else scaled[0]
    return FidelityFit(t, tuple(gammas), tuple(fids), A, comb(N, t + 1), spread)
