"""The SimplexCode value type and its JSON file form."""

from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from ..combinat import Point, SqrtRational

SPACES = ("pi", "fock", "spin")
NORM_TOLERANCE = 1e-12

Amplitude = Union[SqrtRational, complex]


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, eq=False)
class SimplexCode:
    """K logical vectors over simplex labels, each a sparse map point -> amplitude.

    Amplitudes are either all ``SqrtRational`` (exact) or all complex. The
    ``distance`` field is only ever set after a verifier has passed.
    """

    q: int
    N: int
    space: str
    amplitudes: tuple[Mapping[Point, Amplitude], ...]
    distance: int | None = None
    provenance: str = ""
    stages: tuple[dict, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.space not in SPACES:
            raise ValueError(f"space must be one of {SPACES}, got {self.space!r}")
        if not self.amplitudes:
            raise ValueError("a code needs at least one logical vector")
        vectors = []
        kinds = set()
        for i, vec in enumerate(self.amplitudes):
            clean: dict[Point, Amplitude] = {}
            for p, a in vec.items():
                p = tuple(int(x) for x in p)
                if len(p) != self.q or sum(p) != self.N or min(p) < 0:
                    raise ValueError(f"label {p} of vector {i} is not in S_{{{self.q},{self.N}}}")
                if not isinstance(a, SqrtRational):
                    a = complex(a)
                kinds.add(type(a))
                if a:
                    clean[p] = a
            vectors.append(dict(sorted(clean.items())))
        if len(kinds) > 1:
            raise ValueError("amplitudes must be all exact or all complex")
        object.__setattr__(self, "amplitudes", tuple(vectors))
        for i, vec in enumerate(vectors):
            norm = self._norm_sq(vec)
            if isinstance(norm, Fraction):
                if norm != 1:
                    raise ValueError(f"vector {i} has squared norm {norm}, not 1")
            elif abs(norm - 1) > NORM_TOLERANCE:
                raise ValueError(f"vector {i} has squared norm {norm}, not 1")

    @staticmethod
    def _norm_sq(vec: Mapping[Point, Amplitude]):
        if all(isinstance(a, SqrtRational) for a in vec.values()):
            return sum((a.radicand for a in vec.values()), Fraction(0))
        return sum(abs(a) ** 2 for a in vec.values())

    @property
    def K(self) -> int:
        return len(self.amplitudes)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(a, SqrtRational) for v in self.amplitudes for a in v.values())

    def support(self, i: int) -> tuple[Point, ...]:
        return tuple(self.amplitudes[i])

    def with_changes(self, **changes) -> SimplexCode:
        fields = {
            "q": self.q,
            "N": self.N,
            "space": self.space,
            "amplitudes": self.amplitudes,
            "distance": self.distance,
            "provenance": self.provenance,
            "stages": self.stages,
        }
        fields.update(changes)
        return SimplexCode(**fields)

    def with_stage(self, record: dict, **changes) -> SimplexCode:
        """Append a provenance record (must be JSON-serializable)."""
        name = record["stage"]
        chain = f"{self.provenance} -> {name}" if self.provenance else name
        return self.with_changes(provenance=chain, stages=self.stages + (record,), **changes)

    def same_amplitudes(self, other: SimplexCode) -> bool:
        return (self.q, self.N, self.K) == (other.q, other.N, other.K) and all(
            a == b for a, b in zip(self.amplitudes, other.amplitudes)
        )

    def to_json(self) -> dict:
        if not self.is_exact:
            raise ValueError("complex amplitudes have no exact file form")
        basis = []
        for i, vec in enumerate(self.amplitudes):
            for p, a in vec.items():
                basis.append(
                    {"point": list(p), "block": i, "sign": a.sign, "amp_sq": _frac_str(a.radicand)}
                )
        return {
            "q": self.q,
            "N": self.N,
            "K": self.K,
            "space": self.space,
            "distance": self.distance,
            "basis": basis,
            "provenance": self.provenance,
            "stages": list(self.stages),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> SimplexCode:
        K = int(data["K"])
        vectors: list[dict[Point, SqrtRational]] = [{} for _ in range(K)]
        for entry in data["basis"]:
            block = int(entry["block"])
            if not 0 <= block < K:
                raise ValueError(f"block {block} out of range for K={K}")
            p = tuple(int(x) for x in entry["point"])
            if p in vectors[block]:
                raise ValueError(f"duplicate basis entry {p} in block {block}")
            vectors[block][p] = SqrtRational(int(entry["sign"]), Fraction(entry["amp_sq"]))
        return cls(
            q=int(data["q"]),
            N=int(data["N"]),
            space=data["space"],
            amplitudes=tuple(vectors),
            distance=data.get("distance"),
            provenance=data.get("provenance", ""),
            stages=tuple(data.get("stages", ())),
        )

    @classmethod
    def loads(cls, text: str) -> SimplexCode:
        return cls.from_json(json.loads(text))


def exact_code(
    q: int,
    N: int,
    space: str,
    signed_squares: Sequence[Mapping[Point, Fraction | int]],
    provenance: str = "",
    stages: tuple[dict, ...] = (),
) -> SimplexCode:
    """Build a code from signed squares: value v stands for sign(v)*sqrt(|v|)."""
    vectors = [
        {p: SqrtRational.from_signed_square(Fraction(v)) for p, v in vec.items()}
        for vec in signed_squares
    ]
    return SimplexCode(q, N, space, tuple(vectors), None, provenance, stages)
