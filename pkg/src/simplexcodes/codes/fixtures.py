"""Published example codes and l1 seeds, entered as exact signed squares."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as F

from ..combinat import Point, composition, enumerate_simplex, multinomial
from ..l1codes import L1Code
from .code import SimplexCode, exact_code
from .kl import check_kl


@dataclass(frozen=True)
class FixtureInfo:
    name: str
    space: str
    t: int
    note: str


@dataclass(frozen=True)
class StructuralFixture:
    """A code known only by its parameters; nothing to verify."""

    name: str
    q: int
    N: int
    K: int
    claimed_distance: int
    note: str


class StructuralFixtureError(LookupError):
    def __init__(self, fixture: StructuralFixture) -> None:
        super().__init__(f"{fixture.name} is a structural fixture without amplitudes")
        self.fixture = fixture


def _perms(p: Point) -> list[Point]:
    return sorted(set(itertools.permutations(p)))


def _orbit_uniform(q: int, N: int, pattern: Point, sq: F) -> dict[Point, F]:
    return {p: sq for p in _perms(pattern)}


def _three_qutrit_strings() -> list[dict[str, F]]:
    # signed squared amplitude per qutrit string
    c0 = {s: F(1, 3) for s in ("000", "111", "222")}
    c1 = {"".join(s): F(1, 6) for s in itertools.permutations("012")}
    return [c0, c1]


def pi_code_from_strings(q: int, strings: list[dict[str, F]], provenance: str) -> SimplexCode:
    """Dicke coefficients of permutation-invariant qudit states.

    Each value is the signed square of a string amplitude; all strings of
    one composition must carry the same value. The Dicke coefficient square
    is then value * multinomial(N, n).
    """
    vectors = []
    N = None
    for vec in strings:
        by_comp: dict[Point, F] = {}
        for s, v in vec.items():
            n = composition(s, q)
            N = sum(n) if N is None else N
            if by_comp.setdefault(n, v) != v:
                raise ValueError(f"state is not permutation invariant on composition {n}")
        for n, v in by_comp.items():
            count = sum(1 for s in vec if composition(s, q) == n)
            if count != multinomial(sum(n), n):
                raise ValueError(f"composition {n} is missing strings")
        vectors.append({n: v * multinomial(sum(n), n) for n, v in by_comp.items()})
    return exact_code(q, N, "pi", vectors, provenance)


def _data() -> dict[str, tuple[FixtureInfo, object]]:
    s44 = [
        _orbit_uniform(4, 4, (4, 0, 0, 0), F(1, 4)),
        _orbit_uniform(4, 4, (2, 2, 0, 0), F(1, 6)),
        {(1, 1, 1, 1): F(1)},
    ]
    pin6_0 = _orbit_uniform(6, 6, (6, 0, 0, 0, 0, 0), F(1, 15))
    pin6_0[(1,) * 6] = F(3, 5)
    pin6 = [pin6_0, _orbit_uniform(6, 6, (3, 3, 0, 0, 0, 0), F(1, 15))]
    return {
        "n7": (
            FixtureInfo("n7", "fock", 2, "two-mode N=7 code, bosonic distance 3"),
            (2, 7, [{(0, 7): F(3, 10), (5, 2): F(7, 10)}, {(2, 5): F(7, 10), (7, 0): F(-3, 10)}]),
        ),
        "n21": (
            FixtureInfo("n21", "fock", 4, "two-mode N=21 code, bosonic distance 5"),
            (
                2,
                21,
                [
                    {(0, 21): F(5, 68), (8, 13): F(7, 12), (17, 4): F(35, 102)},
                    {(4, 17): F(35, 102), (13, 8): F(-7, 12), (21, 0): F(-5, 68)},
                ],
            ),
        ),
        "ruskai-9": (
            FixtureInfo("ruskai-9", "fock", 2, "two-mode N=9 version of the 9-qubit code"),
            (2, 9, [{(9, 0): F(1, 4), (3, 6): F(3, 4)}, {(6, 3): F(3, 4), (0, 9): F(1, 4)}]),
        ),
        "wasilewski-banaczek": (
            FixtureInfo("wasilewski-banaczek", "fock", 1, "three-mode N=3 code"),
            (
                3,
                3,
                [{(3, 0, 0): F(1, 3), (0, 3, 0): F(1, 3), (0, 0, 3): F(1, 3)}, {(1, 1, 1): F(1)}],
            ),
        ),
        "s44": (
            FixtureInfo("s44", "fock", 1, "(4,3,4,2) Fock code from an 11-point seed"),
            (4, 4, s44),
        ),
        "pi-n6": (
            FixtureInfo("pi-n6", "pi", 2, "N=6, q=6 PI code of distance 3"),
            (6, 6, pin6),
        ),
        "ouyang-qutrit-18": (
            FixtureInfo("ouyang-qutrit-18", "fock", 2, "3-dimensional two-mode N=18 code"),
            (
                2,
                18,
                [
                    {(18, 0): F(1, 9), (9, 9): F(7, 9), (0, 18): F(1, 9)},
                    {(15, 3): F(1, 3), (6, 12): F(2, 3)},
                    {(12, 6): F(2, 3), (3, 15): F(1, 3)},
                ],
            ),
        ),
        "bd8-n11": (
            FixtureInfo("bd8-n11", "fock", 2, "BD8-covariant two-mode N=11 code"),
            (2, 11, [{(0, 11): F(5, 16), (8, 3): F(11, 16)}, {(3, 8): F(11, 16), (11, 0): F(5, 16)}]),
        ),
        "three-qutrits": (
            FixtureInfo("three-qutrits", "pi", 1, "PI projection of the three-qutrit code"),
            "strings",
        ),
    }


_STRUCTURAL = {
    "sigma360": StructuralFixture(
        "sigma360", 3, 5, 3, 2, "five-qutrit code in a chi_4 irrep; amplitudes not published"
    )
}


def fixture_names(include_structural: bool = False) -> list[str]:
    names = list(_data())
    return names + list(_STRUCTURAL) if include_structural else names


def fixture_info(name: str) -> FixtureInfo:
    data = _data()
    if name not in data:
        raise KeyError(f"unknown fixture {name!r}")
    return data[name][0]


def structural_fixture(name: str) -> StructuralFixture:
    return _STRUCTURAL[name]


def raw_fixture(name: str) -> SimplexCode:
    """The fixture as entered, with no distance attached."""
    if name in _STRUCTURAL:
        raise StructuralFixtureError(_STRUCTURAL[name])
    data = _data()
    if name not in data:
        raise KeyError(f"unknown fixture {name!r}")
    info, payload = data[name]
    if payload == "strings":
        return pi_code_from_strings(3, _three_qutrit_strings(), f"fixture:{name}")
    q, N, vecs = payload
    return exact_code(q, N, info.space, vecs, f"fixture:{name}")


def load_fixture(name: str) -> SimplexCode:
    """A published code with its distance attached after an exact check."""
    code = raw_fixture(name)
    t = fixture_info(name).t
    report = check_kl(code, t)
    if not report.passed:
        raise AssertionError(f"fixture {name} fails its own conditions: {report.first_failure()}")
    return code.with_changes(distance=t + 1)


# ---------------------------------------------------------------------------
# l1 seeds


def n3_l1_code() -> L1Code:
    return L1Code(3, 3, ((3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)), certified_distance=2)


def s44_l1_code() -> L1Code:
    patterns = ([0, 0, 0, 4], [0, 0, 2, 2], [1, 1, 1, 1])
    pts = tuple(p for p in enumerate_simplex(4, 4) if sorted(p) in patterns)
    return L1Code(4, 4, pts, certified_distance=2)


def l1_fixture(name: str) -> L1Code:
    from ..l1codes import scaled_simplex_code

    table = {"n3code": n3_l1_code, "s44": s44_l1_code, "pi-n6": lambda: scaled_simplex_code(2, 2)}
    if name not in table:
        raise KeyError(f"unknown l1 fixture {name!r}")
    return table[name]()


def signed_root_str(a) -> str:
    """'sqrt(3/10)', '-sqrt(3/10)', or a plain rational when the radicand is a square."""
    if a.kernel == 1:
        return str(a.coeff)
    r = a.radicand
    return f"{'-' if a.sign < 0 else ''}sqrt({r})"


def amplitude_table(code: SimplexCode) -> list[tuple[int, Point, str]]:
    return [
        (i, p, signed_root_str(a)) for i, vec in enumerate(code.amplitudes) for p, a in vec.items()
    ]

