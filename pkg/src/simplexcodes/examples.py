"""Regression registry: rebuild each published example and compare exactly."""

from __future__ import annotations

import itertools
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .codes import (
    SimplexCode,
    amplitude_table,
    assemble_from_witness,
    check_kl,
    construction_gmde,
    fixture_info,
    l1_fixture,
    raw_fixture,
)
from .l1codes import L1Code
from .tverberg import find_witness, kl_point_cloud


@dataclass
class ExampleResult:
    name: str
    status: str  # "pass", "fail" or "skipped"
    detail: str
    seconds: float = 0.0
    amplitudes: list[tuple[int, tuple[int, ...], str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
            "amplitudes": [
                {"block": i, "point": list(p), "amplitude": a} for i, p, a in self.amplitudes
            ],
        }


def _logical_permutation(built: SimplexCode, ref: SimplexCode) -> tuple[int, ...] | None:
    """Permutation pi with built[pi[i]] == ref[i], preferring the identity."""
    if (built.q, built.N, built.K) != (ref.q, ref.N, ref.K):
        return None
    for perm in itertools.permutations(range(built.K)):
        if all(built.amplitudes[perm[i]] == ref.amplitudes[i] for i in range(ref.K)):
            return perm
    return None


def _sharpness(code: SimplexCode, t: int) -> str | None:
    if not check_kl(code, t).passed:
        return f"conditions fail at t={t}"
    if t + 1 <= code.N:
        over = check_kl(code, t + 1)
        if over.passed:
            return f"conditions unexpectedly pass at t={t + 1}"
    return None


def _tverberg(l1: L1Code, K: int, t: int, space: str, source: str) -> SimplexCode:
    cloud = kl_point_cloud(l1, t)
    witness = find_witness(cloud, K, "orbit")
    seed = {"stage": "l1", "source": source, "q": l1.q, "N": l1.N, "size": len(l1)}
    return assemble_from_witness(witness, cloud, space, upstream=[seed])


def _compare(name: str, built: SimplexCode, allow_permutation: bool = False) -> tuple[str, str]:
    ref = raw_fixture(name)
    t = fixture_info(name).t
    if built.space != ref.space:
        return "fail", f"space {built.space} != {ref.space}"
    perm = _logical_permutation(built, ref)
    if perm is None:
        return "fail", "amplitudes differ from the published basis"
    if perm != tuple(range(ref.K)) and not allow_permutation:
        return "fail", f"logical basis permuted {perm}"
    problem = _sharpness(built, t)
    if problem:
        return "fail", problem
    note = f"exact match, distance {t + 1} (sharp)"
    if perm != tuple(range(ref.K)):
        note += f", logical indices permuted {perm}"
    return "pass", note


def _family(name: str, g: int, m: int, delta: int, eps: int, permuted: bool = False):
    def run():
        return _compare(name, construction_gmde(g, m, delta, eps), permuted)

    return run


def _wb():
    code = _tverberg(l1_fixture("n3code"), 2, 1, "fock", "n3code")
    return _compare("wasilewski-banaczek", code)


def _s44():
    l1 = l1_fixture("s44")
    witness = find_witness(kl_point_cloud(l1, 1), 3, "orbit")
    want = {4: Fraction(1, 4), 2: Fraction(1, 6), 1: Fraction(1)}
    if any(w != want[max(h)] for h, w in witness.weights.items()):
        return "fail", "witness weights differ from 1/4, 1/6, 1"
    return _compare("s44", _tverberg(l1, 3, 1, "fock", "s44"))


def _pin6():
    l1 = l1_fixture("pi-n6")
    if len(l1) != 22:
        return "fail", f"scaled code has {len(l1)} points, expected 22"
    return _compare("pi-n6", _tverberg(l1, 2, 2, "pi", "scaled(K=2,t=2)"))


def _three_qutrits():
    code = _tverberg(l1_fixture("n3code"), 2, 1, "pi", "n3code")
    return _compare("three-qutrits", code)


def _fixture_only(name: str):
    def run():
        code = raw_fixture(name)
        problem = _sharpness(code, fixture_info(name).t)
        if problem:
            return "fail", problem
        return "pass", f"published fixture verified, distance {fixture_info(name).t + 1} (sharp)"

    return run


def _bd8():
    from .oracle import covariance_check, projective_group_order

    status, detail = _fixture_only("bd8-n11")()
    if status != "pass":
        return status, detail
    code = raw_fixture("bd8-n11")
    gates = [np.array([[0, 1], [1, 0]]), np.diag([1, np.exp(1j * np.pi / 4)])]
    results = [covariance_check(code, g) for g in gates]
    if not all(r.invariant and r.unitarity_defect <= 1e-9 for r in results):
        return "fail", "code space not invariant under X and T"
    order = projective_group_order([r.logical for r in results])
    if 16 % order:
        return "fail", f"logical group order {order} does not divide 16"
    return "pass", f"{detail}; X, T covariant, logical group order {order}"


REGISTRY: dict[str, Callable[[], tuple[str, str]]] = {
    "n7": _family("n7", 2, 1, 2, -1),
    "ruskai-9": _family("ruskai-9", 3, 1, 2, 1, permuted=True),
    "n21": _family("n21", 4, 2, 4, -1),
    "wasilewski-banaczek": _wb,
    "s44": _s44,
    "pi-n6": _pin6,
    "three-qutrits": _three_qutrits,
    "ouyang-qutrit-18": _fixture_only("ouyang-qutrit-18"),
    "bd8-n11": _bd8,
}
SKIPPED = {"sigma360": "structural fixture, amplitudes not published, skipped"}


def example_names() -> list[str]:
    return list(REGISTRY) + list(SKIPPED)


def run_example(name: str) -> ExampleResult:
    if name in SKIPPED:
        return ExampleResult(name, "skipped", SKIPPED[name])
    if name not in REGISTRY:
        raise KeyError(f"unknown example {name!r}")
    start = time.perf_counter()
    try:
        status, detail = REGISTRY[name]()
    except Exception as exc:  # a crash is reported as a failed row
        status, detail = "fail", f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    amps = amplitude_table(raw_fixture(name))
    return ExampleResult(name, status, detail, elapsed, amps)


def run_all() -> list[ExampleResult]:
    return [run_example(n) for n in example_names()]
