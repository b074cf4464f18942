"""Code constructors: Tverberg assembly, the (g, m, delta, eps) family, relabeling."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from ..combinat import Point, SqrtRational, generalized_binomial
from ..l1codes import ConstructionError
from ..tverberg import PointCloud, TverbergWitness
from .code import SPACES, SimplexCode
from .kl import check_kl


def _confirm(code: SimplexCode, t: int, stage: str) -> SimplexCode:
    report = check_kl(code, t)
    if not report.passed:
        name, witness = report.first_failure()
        raise ConstructionError(f"{stage}: {name} fails at t={t}, witness {witness}")
    return code.with_stage({"stage": "kl", "mode": "exact", "t": t, "passed": True}, distance=t + 1)


def assemble_from_witness(
    witness: TverbergWitness,
    cloud: PointCloud,
    space: str = "fock",
    upstream: Sequence[dict] = (),
) -> SimplexCode:
    """|c_i> = sum over block i of sqrt(x_h)|h>, then an exact KL confirmation at the cloud's t."""
    problems = witness.violations(cloud)
    if problems:
        raise ValueError(f"invalid witness: {problems}")
    for j, block in enumerate(witness.blocks):
        if sum(witness.weights[h] for h in block) != 1:
            raise ValueError(f"block {j} weights do not sum to 1")
    vectors = tuple({h: SqrtRational(1, witness.weights[h]) for h in block} for block in witness.blocks)
    code = SimplexCode(cloud.q, cloud.N, space, vectors)
    for record in upstream:
        code = code.with_stage(record)
    code = code.with_stage(
        {
            "stage": "tverberg",
            "K": witness.K,
            "t": cloud.t,
            "labels": len(cloud),
            "witness_sha256": witness.sha256(),
        }
    )
    return _confirm(code, cloud.t, "tverberg assembly")


def gmde_certified_t(g: int, m: int, delta: int, eps: int) -> int:
    """Largest t meeting m >= ceil(t/2), delta >= t and the g/eps condition."""
    if eps not in (-1, 1):
        raise ValueError("eps must be -1 or +1")
    g_bound = g if eps == -1 else g - 1
    return max(0, min(2 * m, delta, g_bound))


def gmde_signed_squares(g: int, m: int, delta: int, eps: int) -> tuple[int, list[dict[Point, Fraction]]]:
    """Total excitation n and the two logical vectors as signed squared amplitudes."""
    if eps not in (-1, 1):
        raise ValueError("eps must be -1 or +1")
    if g < 1 or m < 0 or delta < 0:
        raise ValueError("need g >= 1 and m, delta >= 0")
    n = 2 * g * m + delta + 1
    gamma_sq = generalized_binomial(Fraction(n, 2 * g), m) * Fraction(n - 2 * g * m, g * (m + 1))
    if gamma_sq <= 0:
        raise ValueError(f"normalizer square {gamma_sq} is not positive")
    c0: dict[Point, Fraction] = {}
    c1: dict[Point, Fraction] = {}
    for l in range(m + 1):
        denom = generalized_binomial(Fraction(n, g) - l, m + 1)
        if denom <= 0:
            raise ValueError(f"b_{l} has a nonpositive denominator {denom}")
        a = gamma_sq * Fraction(generalized_binomial(m, l)) / denom
        low, high = (g * l, n - g * l), (n - g * l, g * l)
        if l % 2 == 0:
            c0[low] = a
            c1[high] = eps * a
        else:
            c0[high] = a
            c1[low] = a
    return n, [c0, c1]


def construction_gmde(g: int, m: int, delta: int, eps: int, space: str = "fock") -> SimplexCode:
    n, vecs = gmde_signed_squares(g, m, delta, eps)
    vectors = tuple({p: SqrtRational.from_signed_square(v) for p, v in vec.items()} for vec in vecs)
    code = SimplexCode(2, n, space, vectors).with_stage(
        {"stage": "family", "g": g, "m": m, "delta": delta, "eps": eps}
    )
    return _confirm(code, gmde_certified_t(g, m, delta, eps), "family construction")


def distance_survives(code: SimplexCode, target: str) -> bool:
    """Whether relabeling to ``target`` keeps the declared distance licensed."""
    if code.space == "spin" and target in ("pi", "fock"):
        return code.q == 2
    return True


def map_space(code: SimplexCode, target: str) -> SimplexCode:
    """Retag the same amplitude data in another space."""
    if target not in SPACES:
        raise ValueError(f"target must be one of {SPACES}")
    if target == code.space:
        return code
    keep = distance_survives(code, target)
    return code.with_stage(
        {"stage": "map", "from": code.space, "to": target, "distance_cleared": not keep},
        space=target,
        distance=code.distance if keep else None,
    )
