import json
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from simplexcodes.codes import l1_fixture
from simplexcodes.l1codes import L1Code, scaled_simplex_code
from simplexcodes.tverberg import (
    NoWitnessFound,
    TverbergWitness,
    find_witness,
    kl_point_cloud,
    lp_feasible,
    nullspace,
    phase_one,
    radon_witness_k2,
)


@pytest.fixture(scope="module")
def n3():
    return kl_point_cloud(l1_fixture("n3code"), 1)


@pytest.fixture(scope="module")
def s44():
    return kl_point_cloud(l1_fixture("s44"), 1)


@pytest.fixture(scope="module")
def pin6():
    return kl_point_cloud(scaled_simplex_code(2, 2), 2)


def test_n3_cloud_coordinates(n3):
    coords = dict(zip(n3.labels, n3.coords))
    third = F(1, 3)
    assert n3.e_list == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert coords[(3, 0, 0)] == (0, 0, 1)
    assert coords[(0, 3, 0)] == (0, 1, 0)
    assert coords[(0, 0, 3)] == (1, 0, 0)
    assert coords[(1, 1, 1)] == (third, third, third)


def test_t0_cloud_is_constant():
    cloud = kl_point_cloud(l1_fixture("s44"), 0)
    assert cloud.dim == 1 and all(row == (1,) for row in cloud.coords)


def test_pin6_cloud_affine(pin6):
    assert len(pin6) == 22 and pin6.dim == 21
    assert all(r == 0 for r in pin6.affine_residuals())


def test_cloud_rejects_large_t():
    with pytest.raises(ValueError):
        kl_point_cloud(l1_fixture("n3code"), 4)


def test_n3_orbit_witness(n3):
    w = find_witness(n3, 2, "orbit")
    assert set(w.blocks[0]) == {(3, 0, 0), (0, 3, 0), (0, 0, 3)}
    assert w.blocks[1] == ((1, 1, 1),)
    assert [w.weights[h] for h in w.blocks[0]] == [F(1, 3)] * 3
    assert w.weights[(1, 1, 1)] == 1
    assert w.verify(n3)


def test_n3_radon(n3):
    w = radon_witness_k2(n3)
    assert w.to_json() == find_witness(n3, 2).to_json()


def test_radon_on_coincident_points():
    cloud = kl_point_cloud(L1Code(2, 2, ((2, 0), (0, 2))), 0)
    w = radon_witness_k2(cloud)
    assert [len(b) for b in w.blocks] == [1, 1]
    assert set(w.weights.values()) == {1}


def test_n3_lp(n3):
    idx = {h: i for i, h in enumerate(n3.labels)}
    simplex = [idx[(3, 0, 0)], idx[(0, 3, 0)], idx[(0, 0, 3)]]
    x = lp_feasible(n3, [simplex, [idx[(1, 1, 1)]]])
    assert x is not None and all(x[i] == F(1, 3) for i in simplex)
    assert lp_feasible(n3, [[0], [1]]) is None


def test_s44_orbit_weights(s44):
    assert len(s44) == 11
    w = find_witness(s44, 3, "orbit")
    want = {4: F(1, 4), 2: F(1, 6), 1: F(1)}
    assert w.K == 3
    assert all(w.weights[h] == want[max(h)] for b in w.blocks for h in b)
    assert sorted(len(b) for b in w.blocks) == [1, 4, 6]


def test_s44_three_orbit_partition_feasible(s44):
    blocks = [[i for i, h in enumerate(s44.labels) if max(h) == m] for m in (4, 2, 1)]
    assert lp_feasible(s44, blocks) is not None


def test_s44_exhaustive(s44):
    w = find_witness(s44, 3, "exhaustive")
    assert w.verify(s44)


def test_pin6_witness_matches_radon(pin6):
    w = find_witness(pin6, 2, "orbit")
    block0 = {h for h in pin6.labels if max(h) in (6, 1)}
    assert set(w.blocks[0]) == block0
    for h in pin6.labels:
        assert w.weights[h] == (F(3, 5) if max(h) == 1 else F(1, 15))
    assert radon_witness_k2(pin6).to_json() == w.to_json()
    assert len(nullspace([list(c) for c in zip(*pin6.coords)] + [[F(1)] * 22], 22)) == 1


def test_hinted(n3):
    w = find_witness(n3, 2, "hinted", hint=[[(3, 0, 0), (0, 3, 0), (0, 0, 3)], [(1, 1, 1)]])
    assert w.verify(n3)
    with pytest.raises(NoWitnessFound) as info:
        find_witness(n3, 2, "hinted", hint=[[(3, 0, 0)], [(0, 3, 0)]])
    assert not info.value.exhausted
    with pytest.raises(ValueError):
        find_witness(n3, 2, "hinted", hint=[[(2, 1, 0)], [(0, 3, 0)]])


def test_failures_are_typed(n3, pin6):
    with pytest.raises(NoWitnessFound) as info:
        find_witness(n3, 3, "orbit")
    assert not info.value.exhausted
    with pytest.raises(NoWitnessFound) as info:
        find_witness(pin6, 2, "exhaustive")
    assert not info.value.exhausted
    with pytest.raises(NoWitnessFound) as info:
        find_witness(n3, 4, "exhaustive")
    assert info.value.exhausted


def test_witness_json_round_trip(s44):
    w = find_witness(s44, 3)
    again = TverbergWitness.from_json(json.loads(json.dumps(w.to_json())))
    assert again.to_json() == w.to_json() and again.sha256() == w.sha256()


def test_tampered_witness_rejected(n3):
    w = find_witness(n3, 2)
    weights = dict(w.weights)
    weights[(3, 0, 0)] = F(1, 2)
    assert not TverbergWitness(w.blocks, weights).verify(n3)


def _scipy_feasible(A, b):
    res = linprog(np.zeros(len(A[0])), A_eq=np.array(A, float), b_eq=np.array(b, float), bounds=(0, None), method="highs")
    return res.status == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(2, 5), st.data())
def test_phase_one_agrees_with_scipy(m, n, data):
    A = [[F(data.draw(st.integers(-3, 3))) for _ in range(n)] for _ in range(m)]
    b = [F(data.draw(st.integers(-3, 3))) for _ in range(m)]
    x = phase_one(A, b)
    assert (x is not None) == _scipy_feasible(A, b)
    if x is not None:
        assert all(v >= 0 for v in x)
        assert all(sum(a * v for a, v in zip(row, x)) == rhs for row, rhs in zip(A, b))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.integers(1, 6), st.data())
def test_nullspace(m, n, data):
    A = [[F(data.draw(st.integers(-2, 2))) for _ in range(n)] for _ in range(m)]
    basis = nullspace(A, n)
    rank = np.linalg.matrix_rank(np.array(A, float))
    assert len(basis) == n - rank
    for v in basis:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)
