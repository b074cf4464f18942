"""Tverberg partitions of a point cloud with exact barycentric weights."""

from __future__ import annotations

import hashlib
import json
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from ..combinat import Point
from .cloud import PointCloud
from .lp import nullspace, phase_one

EXHAUSTIVE_LABEL_LIMIT = 12


class NoWitnessFound(RuntimeError):
    """No partition was found.

    ``exhausted`` is True when the whole search space was examined, so no
    witness exists in it. False means the strategy gave up early and a hint
    (or a different strategy) might still succeed.
    """

    def __init__(self, message: str, exhausted: bool) -> None:
        super().__init__(message)
        self.exhausted = exhausted


def point_key(p: Point) -> str:
    return ",".join(str(x) for x in p)


def parse_point_key(key: str) -> Point:
    return tuple(int(x) for x in key.split(","))


@dataclass(frozen=True)
class TverbergWitness:
    blocks: tuple[tuple[Point, ...], ...]
    weights: dict[Point, Fraction]

    @property
    def K(self) -> int:
        return len(self.blocks)

    def to_json(self) -> dict:
        return {
            "blocks": [[list(p) for p in b] for b in self.blocks],
            "weights": {point_key(p): _frac_str(w) for p, w in sorted(self.weights.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> TverbergWitness:
        blocks = tuple(tuple(tuple(p) for p in b) for b in data["blocks"])
        weights = {parse_point_key(k): Fraction(v) for k, v in data["weights"].items()}
        return cls(blocks, weights)

    def sha256(self) -> str:
        payload = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()

    def violations(self, cloud: PointCloud) -> list[str]:
        """Human-readable list of broken invariants (empty when valid)."""
        out = []
        index = {h: k for k, h in enumerate(cloud.labels)}
        seen: set[Point] = set()
        for j, block in enumerate(self.blocks):
            if not block:
                out.append(f"block {j} is empty")
            for h in block:
                if h not in index:
                    out.append(f"{h} is not a cloud label")
                if h in seen:
                    out.append(f"{h} appears twice")
                seen.add(h)
                if self.weights.get(h, 0) <= 0:
                    out.append(f"weight of {h} is not positive")
        if out:
            return out
        sums = [sum(self.weights[h] for h in b) for b in self.blocks]
        if len(set(sums)) > 1:
            out.append(f"block weight sums differ: {sums}")
        centers = [
            tuple(
                sum(self.weights[h] * cloud.coords[index[h]][s] for h in b)
                for s in range(cloud.dim)
            )
            for b in self.blocks
        ]
        for j in range(1, len(centers)):
            if centers[j] != centers[0]:
                out.append(f"block {j} center differs from block 0")
        return out

    def verify(self, cloud: PointCloud) -> bool:
        return not self.violations(cloud)


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _restricted_growth(n: int, K: int) -> Iterator[list[int]]:
    """Assignments of n items to exactly K unlabeled blocks, canonical order."""
    if K < 1 or n < K:
        return
    a = [0] * n

    def rec(i: int, used: int) -> Iterator[list[int]]:
        if n - i < K - used:
            return
        if i == n:
            if used == K:
                yield list(a)
            return
        for b in range(min(used + 1, K)):
            a[i] = b
            yield from rec(i + 1, max(used, b + 1))

    yield from rec(0, 0)


def lp_feasible(
    cloud: PointCloud, partition: Sequence[Sequence[int]]
) -> dict[int, Fraction] | None:
    """Weights x >= 0 with equal block centers and every block summing to 1.

    Blocks are given as label indices. Returns index -> weight (zeros
    included) or None when infeasible.
    """
    return _solve(cloud, [[[i] for i in block] for block in partition])


def _solve(cloud: PointCloud, groups: list[list[list[int]]]) -> dict[int, Fraction] | None:
    # groups[j] is a list of variable groups in block j; each variable weighs
    # every label in its group equally
    flat = [members for block in groups for members in block]
    if any(not block for block in groups):
        raise ValueError("partition blocks must be nonempty")
    labels = [i for members in flat for i in members]
    if len(set(labels)) != len(labels):
        raise ValueError("partition blocks must be disjoint")
    col_of_block = []
    for j, block in enumerate(groups):
        col_of_block += [j] * len(block)
    nvar = len(flat)
    coef = [
        [sum(cloud.coords[i][s] for i in members) for s in range(cloud.dim)] for members in flat
    ]
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for j in range(len(groups)):
        A.append([Fraction(len(flat[v])) if col_of_block[v] == j else Fraction(0) for v in range(nvar)])
        b.append(Fraction(1))
    for j in range(1, len(groups)):
        for s in range(cloud.dim):
            row = []
            for v in range(nvar):
                if col_of_block[v] == j:
                    row.append(coef[v][s])
                elif col_of_block[v] == 0:
                    row.append(-coef[v][s])
                else:
                    row.append(Fraction(0))
            A.append(row)
            b.append(Fraction(0))
    x = phase_one(A, b)
    if x is None:
        return None
    return {i: x[v] for v, members in enumerate(flat) for i in members}


def _witness(cloud: PointCloud, partition: list[list[int]], x: dict[int, Fraction]) -> TverbergWitness:
    blocks = []
    weights: dict[Point, Fraction] = {}
    for block in partition:
        kept = [i for i in block if x[i] > 0]
        total = sum(x[i] for i in kept)
        for i in kept:
            weights[cloud.labels[i]] = x[i] / total
        blocks.append(tuple(sorted(cloud.labels[i] for i in kept)))
    w = TverbergWitness(tuple(blocks), weights)
    problems = w.violations(cloud)
    if problems:
        raise AssertionError(f"solver produced an invalid witness: {problems}")
    return w


def orbits(cloud: PointCloud) -> list[list[int]]:
    """Label indices grouped by coordinate multiset, in order of first appearance."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for i, h in enumerate(cloud.labels):
        groups.setdefault(tuple(sorted(h, reverse=True)), []).append(i)
    return list(groups.values())


def find_witness(
    cloud: PointCloud,
    K: int,
    strategy: str = "orbit",
    hint: Sequence[Sequence[Point]] | None = None,
) -> TverbergWitness:
    """First feasible K-block partition in canonical order, as a witness."""
    if K < 1:
        raise ValueError("K must be positive")
    if strategy == "orbit":
        orb = orbits(cloud)
        if len(orb) < K:
            raise NoWitnessFound(f"only {len(orb)} orbits for {K} blocks; give a hint", False)
        for assign in _restricted_growth(len(orb), K):
            groups: list[list[list[int]]] = [[] for _ in range(K)]
            for o, j in enumerate(assign):
                groups[j].append(orb[o])
            partition = [[i for members in block for i in members] for block in groups]
            x = _solve(cloud, groups)
            if x is None:
                x = lp_feasible(cloud, partition)
            if x is not None:
                return _witness(cloud, partition, x)
        raise NoWitnessFound("no union-of-orbits partition is feasible; give a hint", False)
    if strategy == "exhaustive":
        n = len(cloud)
        if n > EXHAUSTIVE_LABEL_LIMIT:
            raise NoWitnessFound(
                f"{n} labels exceeds the exhaustive limit {EXHAUSTIVE_LABEL_LIMIT}; give a hint",
                False,
            )
        for assign in _restricted_growth(n, K):
            partition = [[i for i in range(n) if assign[i] == j] for j in range(K)]
            x = lp_feasible(cloud, partition)
            if x is not None:
                return _witness(cloud, partition, x)
        raise NoWitnessFound(f"no {K}-block partition of {n} labels is feasible", True)
    if strategy == "hinted":
        if hint is None:
            raise ValueError("hinted strategy needs a partition hint")
        index = {h: i for i, h in enumerate(cloud.labels)}
        try:
            partition = [[index[tuple(p)] for p in block] for block in hint]
        except KeyError as exc:
            raise ValueError(f"hint point {exc.args[0]} is not a cloud label") from None
        if len(partition) != K:
            raise ValueError(f"hint has {len(partition)} blocks, expected {K}")
        x = lp_feasible(cloud, partition)
        if x is None:
            raise NoWitnessFound("the hinted partition is infeasible", False)
        return _witness(cloud, partition, x)
    raise ValueError(f"unknown strategy {strategy!r}")


def radon_witness_k2(cloud: PointCloud) -> TverbergWitness:
    """Two-block witness from a kernel vector of [coords; ones]."""
    n = len(cloud)
    rows = [[cloud.coords[k][s] for k in range(n)] for s in range(cloud.dim)]
    rows.append([Fraction(1)] * n)
    basis = nullspace(rows, n)
    if not basis:
        raise NoWitnessFound("affine dependence kernel is trivial", True)
    y = basis[0]
    lead = next(v for v in y if v != 0)
    if lead < 0:
        y = [-v for v in y]
    partition = [[k for k in range(n) if y[k] > 0], [k for k in range(n) if y[k] < 0]]
    x = {k: abs(y[k]) for k in range(n)}
    return _witness(cloud, partition, x)
