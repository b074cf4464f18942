"""Exact and floating-point evaluation of the error-correction conditions C1-C4."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt

from ..combinat import Point, RadicalSum, SqrtRational, enumerate_simplex, multinomial, sub
from .code import SimplexCode

CONDITIONS = ("C1", "C2", "C3", "C4")


@dataclass
class ConditionResult:
    name: str
    passed: bool = True
    failures: int = 0
    witness: dict | None = None
    residual: object = None
    worst: float = 0.0

    def record(self, value, witness: dict, tolerance: float | None) -> None:
        if hasattr(value, "is_zero"):
            bad = not value.is_zero()
            size = abs(float(value))
        else:
            size = abs(value)
            bad = size > tolerance
        self.worst = max(self.worst, size)
        if bad:
            self.failures += 1
            if self.passed:
                self.passed = False
                self.witness = witness
                self.residual = value

    def to_json(self) -> dict:
        res = self.residual
        if isinstance(res, complex):
            res = [res.real, res.imag]
        elif res is not None:
            res = str(res)
        return {
            "passed": self.passed,
            "failures": self.failures,
            "witness": self.witness,
            "residual": res,
            "worst": self.worst,
        }


@dataclass
class KLReport:
    t: int
    mode: str
    tolerance: float | None
    conditions: dict[str, ConditionResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions.values())

    @property
    def declared_distance(self) -> int | None:
        return self.t + 1 if self.passed else None

    def first_failure(self) -> tuple[str, dict] | None:
        for name in CONDITIONS:
            c = self.conditions[name]
            if not c.passed:
                return name, c.witness
        return None

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "mode": self.mode,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "declared_distance": self.declared_distance,
            "conditions": {k: v.to_json() for k, v in self.conditions.items()},
        }


def _witness(i: int, j: int, e: Point | None = None, f: Point | None = None) -> dict:
    out = {"i": i, "j": j}
    if e is not None:
        out["e"] = list(e)
        out["f"] = list(f)
    return out


def check_kl(
    code: SimplexCode, t: int, mode: str = "exact", tolerance: float = 1e-12
) -> KLReport:
    """Evaluate C1-C4 for every e, f in S_{q,t} and every pair of logical indices.

    In exact mode every sum is a ``RadicalSum`` and must vanish identically.
    In float mode amplitudes are complex and residuals are compared against
    ``tolerance``.
    """
    if not 0 <= t <= code.N:
        raise ValueError(f"need 0 <= t <= N, got t={t}, N={code.N}")
    if mode == "exact":
        if not code.is_exact:
            raise ValueError("exact mode needs real SqrtRational amplitudes; use mode='float'")
        tol = None
    elif mode == "float":
        tol = tolerance
    else:
        raise ValueError(f"unknown mode {mode!r}")
    exact = mode == "exact"
    K, N = code.K, code.N
    amps = code.amplitudes if exact else [{p: complex(a) for p, a in v.items()} for v in code.amplitudes]
    report = KLReport(t, mode, tol, {name: ConditionResult(name) for name in CONDITIONS})
    C = report.conditions

    def zero():
        return RadicalSum() if exact else 0j

    def conj(a):
        return a if exact else a.conjugate()

    # C1, C2
    norms = []
    for i in range(K):
        s = zero()
        for a in amps[i].values():
            s = s + conj(a) * a
        norms.append(s)
    for i in range(K):
        for j in range(i + 1, K):
            s = zero()
            for p, a in amps[i].items():
                b = amps[j].get(p)
                if b is not None:
                    s = s + conj(a) * b
            C["C1"].record(s, _witness(i, j), tol)
            C["C2"].record(norms[i] - norms[j], _witness(i, j), tol)

    weight_cache: dict[tuple[Point, Point], object] = {}

    def inv_sqrt(n: Point, m: Point):
        key = (n, m)
        w = weight_cache.get(key)
        if w is None:
            denom = multinomial(N, n) * multinomial(N, m)
            w = SqrtRational(1, Fraction(1, denom)) if exact else 1.0 / sqrt(denom)
            weight_cache[key] = w
        return w

    e_list = enumerate_simplex(code.q, t)
    for e in e_list:
        for f in e_list:
            T = [[zero() for _ in range(K)] for _ in range(K)]
            for i in range(K):
                for n, a in amps[i].items():
                    ne = sub(n, e)
                    c = multinomial(N - t, ne)
                    if not c:
                        continue
                    m = tuple(x + y for x, y in zip(ne, f))
                    w = inv_sqrt(n, m)
                    ca = conj(a)
                    for j in range(K):
                        b = amps[j].get(m)
                        if b is None:
                            continue
                        if exact:
                            T[i][j].add_term(ca * b * w * c)
                        else:
                            T[i][j] += ca * b * w * c
            for i in range(K):
                for j in range(K):
                    if i != j:
                        C["C3"].record(T[i][j], _witness(i, j, e, f), tol)
            for i in range(K):
                for j in range(i + 1, K):
                    C["C4"].record(T[i][i] - T[j][j], _witness(i, j, e, f), tol)
    return report


def c3_termwise(code: SimplexCode, t: int) -> bool:
    """Stronger form of C3: every cross term a^i_n a^j_{n-e+f} (i != j) vanishes."""
    for e in enumerate_simplex(code.q, t):
        for f in enumerate_simplex(code.q, t):
            for i in range(code.K):
                for n in code.amplitudes[i]:
                    ne = sub(n, e)
                    if min(ne) < 0:
                        continue
                    m = tuple(x + y for x, y in zip(ne, f))
                    if any(m in code.amplitudes[j] for j in range(code.K) if j != i):
                        return False
    return True
