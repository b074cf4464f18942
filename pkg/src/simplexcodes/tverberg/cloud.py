"""The point cloud a_h attached to an l1 code."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..combinat import Point, enumerate_simplex, multinomial, sub
from ..l1codes import L1Code


@dataclass(frozen=True)
class PointCloud:
    """Rational points a_h in R^{S_{q,t}}, one per codeword h.

    ``coords[k][s]`` is a_{e,h} for h = labels[k] and e = e_list[s].
    """

    q: int
    N: int
    t: int
    labels: tuple[Point, ...]
    coords: tuple[tuple[Fraction, ...], ...]
    e_list: tuple[Point, ...]

    @property
    def dim(self) -> int:
        return len(self.e_list)

    def __len__(self) -> int:
        return len(self.labels)

    def affine_residuals(self) -> list[Fraction]:
        """l . a_h - 1 for each label, with l_e = C(t, e)."""
        weights = [multinomial(self.t, e) for e in self.e_list]
        return [sum(w * a for w, a in zip(weights, row)) - 1 for row in self.coords]


def kl_point_cloud(code: L1Code, t: int) -> PointCloud:
    if t < 0 or t > code.N:
        raise ValueError(f"need 0 <= t <= N, got t={t}, N={code.N}")
    e_list = tuple(enumerate_simplex(code.q, t))
    coords = tuple(
        tuple(
            Fraction(multinomial(code.N - t, sub(h, e)), multinomial(code.N, h)) for e in e_list
        )
        for h in code.points
    )
    cloud = PointCloud(code.q, code.N, t, code.points, coords, e_list)
    bad = [h for h, r in zip(cloud.labels, cloud.affine_residuals()) if r != 0]
    if bad:
        raise AssertionError(f"affine constraint violated at {bad[:3]}")
    return cloud
