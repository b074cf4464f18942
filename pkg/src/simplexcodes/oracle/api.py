"""Oracle entry points taking a SimplexCode."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..codes import SimplexCode
from .ad import DEFAULT_GAMMAS, FIT_GAMMAS, FidelityFit, ad_kl_gram_vectors, fidelity_series_vectors
from .covariance import CovarianceResult, covariance_check_vectors
from .dense import GramVerdict, pi_deletion_gram_vectors
from .spin import SpinVerdict, spin_kl_check_vectors


def _vectors(code: SimplexCode) -> list[dict]:
    return [{p: complex(a) for p, a in v.items()} for v in code.amplitudes]


def _require(code: SimplexCode, space: str) -> None:
    if code.space != space:
        raise ValueError(f"this oracle needs a {space} code, got {code.space}")


def ad_kl_gram(
    code: SimplexCode, t: int, gammas: Sequence[float] = DEFAULT_GAMMAS, tol: float = 1e-9
) -> GramVerdict:
    _require(code, "fock")
    return ad_kl_gram_vectors(code.q, code.N, _vectors(code), t, gammas, tol)


def fidelity_series(
    code: SimplexCode,
    t: int,
    gammas: Sequence[float] = FIT_GAMMAS,
    seed: int = 0,
    n_random: int = 32,
) -> FidelityFit:
    _require(code, "fock")
    return fidelity_series_vectors(code.q, code.N, _vectors(code), t, gammas, seed, n_random)


def pi_deletion_gram(code: SimplexCode, t: int, tol: float = 1e-9) -> GramVerdict:
    _require(code, "pi")
    return pi_deletion_gram_vectors(code.q, code.N, _vectors(code), t, tol)


def spin_kl_check(code: SimplexCode, t: int, tol: float = 1e-9) -> SpinVerdict:
    _require(code, "spin")
    return spin_kl_check_vectors(code.q, code.N, _vectors(code), t, tol)


def covariance_check(code: SimplexCode, g: np.ndarray, tol: float = 1e-9) -> CovarianceResult:
    """Any space: the Sym^N action is the same on all three simplex-labeled bases."""
    return covariance_check_vectors(code.q, code.N, _vectors(code), g, tol)
