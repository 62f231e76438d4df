from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from yblattice.chains import (
    PathState,
    check_braid,
    check_commutation,
    csv_header,
    csv_row,
    flip,
    random_path,
    transfer_step,
)
from yblattice.errors import BadIndices, IndexOutOfRange, SingularInput
from yblattice.exactnum import RationalStream
from yblattice.quadgraph import FieldPoint


def scalar_path(us, vs, alphas, *, periodic=False) -> PathState:
    vertices = tuple(FieldPoint(Fraction(u), Fraction(v)) for u, v in zip(us, vs))
    return PathState(vertices, tuple(Fraction(a) for a in alphas), periodic=periodic)


def nonsingular_path(seed: int, count: int, *, periodic=False, components=1) -> PathState:
    return random_path(RationalStream(seed, 10), count, periodic=periodic, components=components)


def test_flip_worked_example():
    path = scalar_path([1, 3, 8], [9, 4, 2], [5, 1])
    flipped = flip(path, 1)
    assert flipped.vertices[1] == FieldPoint(Fraction(-1), Fraction(12))
    assert flipped.alphas == (Fraction(1), Fraction(5))
    assert flipped.vertices[0] == path.vertices[0]
    assert flipped.vertices[2] == path.vertices[2]


def test_flip_with_equal_parameters_is_identity():
    path = scalar_path([1, 3, 8], [9, 4, 2], [5, 5])
    assert flip(path, 1) == path


def test_flip_boundary_rejected():
    path = scalar_path([1, 3, 8], [9, 4, 2], [5, 1])
    for k in (0, 2, -1, 3):
        with pytest.raises(IndexOutOfRange):
            flip(path, k)


def test_flip_singular_names_vertex():
    path = scalar_path([1, 3, 1], [9, 4, 1], [5, 1])
    with pytest.raises(SingularInput, match="vertex 1"):
        flip(path, 1)


def test_flip_periodic_wraps():
    path = nonsingular_path(3, 4, periodic=True)
    wrapped = flip(path, 0)
    direct = flip(path, 4)
    assert wrapped == direct


@given(st.integers(0, 10**6), st.integers(1, 6))
def test_flip_is_an_involution(seed, k):
    path = nonsingular_path(seed, 8)
    try:
        once = flip(path, k)
        twice = flip(once, k)
    except SingularInput:
        return
    assert twice == path


@given(st.integers(0, 10**6))
def test_flip_involution_on_vector_paths(seed):
    path = nonsingular_path(seed, 6, components=3)
    try:
        assert flip(flip(path, 2), 2) == path
    except SingularInput:
        pass


def test_path_state_validates_lengths():
    vs = tuple(FieldPoint(Fraction(i), Fraction(i + 1)) for i in range(3))
    with pytest.raises(ValueError):
        PathState(vs, (Fraction(1),))
    with pytest.raises(ValueError):
        PathState(vs, (Fraction(1), Fraction(2)), periodic=True)
    with pytest.raises(ValueError):
        PathState(vs[:1], ())


def test_braid_relation_sampled():
    checked = 0
    seed = 0
    while checked < 100:
        seed += 1
        path = nonsingular_path(seed, 8)
        try:
            ok = check_braid(path, 3)
        except SingularInput:
            continue
        checked += 1
        assert ok


def test_braid_relation_vector_fields():
    checked = 0
    seed = 0
    while checked < 30:
        seed += 1
        path = nonsingular_path(seed, 8, components=3)
        try:
            ok = check_braid(path, 4)
        except SingularInput:
            continue
        checked += 1
        assert ok


def test_braid_trivial_when_parameters_agree():
    path = scalar_path([1, 3, 8, 2, 7], [9, 4, 2, 5, 1], [2, 2, 2, 2])
    assert check_braid(path, 2)


def test_braid_singular_is_an_error_not_a_verdict():
    # u_1 v_3 = 1 makes the first flip of one leg singular
    path = scalar_path([5, 2, 3, 4, 6], [1, 9, 8, Fraction(1, 2), 7], [1, 2, 3, 4])
    with pytest.raises(SingularInput):
        check_braid(path, 2)


def test_commutation_sampled():
    checked = 0
    seed = 0
    while checked < 100:
        seed += 1
        path = nonsingular_path(seed, 8)
        try:
            ok = check_commutation(path, 2, 5)
        except SingularInput:
            continue
        checked += 1
        assert ok


def test_commutation_rejects_adjacent_indices():
    path = nonsingular_path(1, 8)
    with pytest.raises(BadIndices):
        check_commutation(path, 3, 4)
    with pytest.raises(BadIndices):
        check_commutation(path, 3, 3)


def test_commutation_periodic_uses_cyclic_distance():
    path = nonsingular_path(2, 6, periodic=True)
    # positions 0 and 5 are neighbors around the cycle
    with pytest.raises(BadIndices):
        check_commutation(path, 0, 5)
    assert check_commutation(path, 0, 3)


def test_transfer_requires_periodic():
    with pytest.raises(ValueError):
        transfer_step(nonsingular_path(1, 5))


def test_transfer_identity_when_parameters_agree():
    path = scalar_path([1, 3, 8, 2], [9, 4, 2, 5], [3, 3, 3, 3], periodic=True)
    assert transfer_step(path) == path


def test_transfer_preserves_parameter_multiset():
    state = nonsingular_path(21, 5, periodic=True)
    reference = Counter(state.alphas)
    for _ in range(50):
        state = transfer_step(state)
        assert Counter(state.alphas) == reference


def test_transfer_period_two_stays_exact():
    state = nonsingular_path(11, 2, periodic=True)
    bits = []
    for _ in range(60):
        state = transfer_step(state)
        bits.append(
            max(
                max(abs(v.u.denominator), abs(v.v.denominator)).bit_length()
                for v in state.vertices
            )
        )
    assert all(isinstance(v.u, Fraction) for v in state.vertices)
    # growth is polynomial: quadrupling the sweep count must not square
    # the size the way exponential growth would
    assert bits[-1] < 40 * max(bits[14], 1)


def test_transfer_singular_names_position():
    state = scalar_path([2, 5], [Fraction(1, 2), 7], [1, 2], periodic=True)
    with pytest.raises(SingularInput, match="sweep position 1"):
        transfer_step(state)


def test_csv_round_trip_columns():
    path = scalar_path([1, 3, 8], [9, 4, 2], [5, 1])
    assert csv_header(path) == ["u0", "v0", "alpha0", "u1", "v1", "alpha1", "u2", "v2"]
    assert csv_row(path) == ["1", "9", "5", "3", "4", "1", "8", "2"]


def test_csv_rejects_vector_paths():
    path = nonsingular_path(1, 4, components=2)
    with pytest.raises(ValueError):
        csv_header(path)
    with pytest.raises(ValueError):
        csv_row(path)
