import numpy as np
import pytest

import essentials as ess
import fp_linalg as fpl


def test_rref_rank_and_pivots():
    m = np.array([[1, 2, 0], [2, 4, 1], [0, 0, 1]])
    reduced, r, pivots = fpl.rref(m, 5)
    assert r == 2
    assert pivots == [0, 2]
    assert reduced[0].tolist() == [1, 2, 0]
    assert reduced[1].tolist() == [0, 0, 1]
    assert not reduced[2].any()


def test_nullspace_kills_matrix():
    m = np.array([[1, 1, 1, 0], [0, 1, 2, 1]])
    ns = fpl.nullspace(m, 3)
    assert ns.dim == 2
    assert not fpl.mul(m, ns.basis.T, 3).any()


def test_stacked_nullspace_matches_single_block():
    rng = np.random.default_rng(3)
    m = rng.integers(0, 7, size=(9, 12))
    whole = fpl.nullspace(m, 7)
    pieces = fpl.stacked_nullspace([m[:4], m[4:], np.zeros((0, 12))], 12, 7)
    assert whole == pieces


def test_stacked_nullspace_rejects_wrong_width():
    with pytest.raises(ess.DimensionMismatch):
        fpl.stacked_nullspace([np.ones((2, 3))], 4, 5)


def test_solve_consistent_and_inconsistent():
    a = np.array([[1, 1], [0, 1]])
    x, hom = fpl.solve(a, [3, 1], 5)
    assert fpl.mul(a, x, 5).tolist() == [3, 1]
    assert hom.dim == 0
    assert fpl.solve(np.array([[1, 1], [1, 1]]), [0, 1], 5) is None


def test_inverse_and_singular():
    a = np.array([[2, 1], [1, 1]])
    inv = fpl.inverse(a, 7)
    assert fpl.mul(a, inv, 7).tolist() == [[1, 0], [0, 1]]
    with pytest.raises(ess.NoSolution):
        fpl.inverse(np.array([[1, 2], [2, 4]]), 7)


def test_matrix_power_of_shift_is_nilpotent():
    shift = np.eye(4, k=1, dtype=np.int64)
    assert fpl.matrix_power(shift, 3, 3).any()
    assert not fpl.matrix_power(shift, 4, 3).any()
    assert fpl.matrix_power(shift, 0, 3).tolist() == np.eye(4, dtype=np.int64).tolist()


def test_subspace_canonical_form():
    a = fpl.span([[1, 1, 0], [0, 1, 1]], 3)
    b = fpl.span([[1, 2, 1], [2, 0, 1]], 3)
    assert a == b
    assert hash(a) == hash(b)
    assert a.contains([1, 2, 1])
    assert not a.contains([1, 0, 0])


def test_sum_and_intersection_dimensions():
    p = 5
    u = fpl.span([[1, 0, 0, 0], [0, 1, 0, 0]], p)
    v = fpl.span([[0, 1, 0, 0], [0, 0, 1, 0]], p)
    assert (u + v).dim == 3
    meet = u & v
    assert meet.dim == 1
    assert meet.contains([0, 3, 0, 0])
    assert meet <= u and meet <= v
    assert fpl.subspace_sum(u, v) == u + v
    assert fpl.subspace_intersect(u, fpl.Subspace.full(4, p)) == u
    assert fpl.subspace_sum(u, fpl.Subspace.zero(4, p)) == u


def test_quotient_coordinates_vanish_on_members():
    s = fpl.span([[1, 2, 0, 1]], 3)
    assert s.complement_columns() == [1, 2, 3]
    assert not s.quotient_coordinates(np.array([[2, 1, 0, 2]])).any()
    assert s.quotient_coordinates(np.array([0, 1, 0, 0])).tolist() == [1, 0, 0]


def test_extend_reports_new_rows():
    s = fpl.span([[1, 0, 0]], 2)
    bigger, fresh = s.extend([[1, 0, 0], [1, 1, 0]])
    assert bigger.dim == 2
    assert fresh.shape[0] == 1
    same, none = bigger.extend([[0, 1, 0]])
    assert same is bigger and none.shape[0] == 0


def test_spin_under_shift_fills_space():
    shift = np.eye(5, k=1, dtype=np.int64)
    assert fpl.spin([[0, 0, 0, 0, 1]], [shift], 7).dim == 5
    assert fpl.spin([[0, 0, 1, 0, 0]], [shift], 7).dim == 3


def test_spin_from_a_stable_start():
    shift = np.eye(5, k=1, dtype=np.int64)
    low = fpl.span([[1, 0, 0, 0, 0]], 7)
    grown = fpl.spin([[0, 0, 0, 1, 0]], [shift], 7, start=low)
    assert grown == fpl.span(np.eye(5, dtype=np.int64)[:4], 7)
    with pytest.raises(ess.NotInvariant):
        fpl.spin([[0, 0, 0, 1, 0]], [shift], 7, start=fpl.span([[0, 1, 0, 0, 0]], 7))


def test_invariance_and_image():
    shift = np.eye(3, k=1, dtype=np.int64)
    low = fpl.span([[1, 0, 0]], 3)
    assert low.is_invariant([shift])
    assert not fpl.span([[0, 1, 0]], 3).is_invariant([shift])
    assert fpl.span([[0, 0, 1]], 3).image(shift) == fpl.span([[0, 1, 0]], 3)


def test_mismatched_ambient_raises():
    with pytest.raises(ess.DimensionMismatch):
        fpl.span([[1, 0]], 3).contains([1, 0, 0])
