import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fabkit.errors import DimensionError, UnstableRangeError
from fabkit.homotopy import (
    TRIVIAL,
    Z,
    AbelianGroup,
    cokernel,
    exact_sequence_oracle,
    fab_inverse_map_order,
    frame_space_induced_order,
    induced_map,
    kernel_of_homomorphism,
    pi_frame_space,
    pi_grassmannian,
    stable_range,
)


def test_abelian_group_normalization_and_text():
    assert AbelianGroup.from_cyclic_orders([2, 3]) == AbelianGroup.cyclic(6)
    assert AbelianGroup.from_cyclic_orders([4, 6, 0, 1]) == AbelianGroup(1, (2, 12))
    assert str(AbelianGroup(1, (2, 12))) == "Z x Z/2 x Z/12"
    assert str(AbelianGroup(2)) == "Z^2"
    assert str(TRIVIAL) == "0" and str(Z) == "Z"
    assert AbelianGroup.cyclic(1) == TRIVIAL
    g = AbelianGroup(3, (2, 4))
    assert AbelianGroup.from_json(g.to_json()) == g
    assert AbelianGroup.cyclic(12).order == 12 and Z.order is None
    with pytest.raises(ValueError):
        AbelianGroup(0, (4, 6))


def test_pi_grassmannian_examples():
    assert pi_grassmannian(2, 2, 3) == TRIVIAL
    assert pi_grassmannian(4, 2, 3) == Z
    assert pi_grassmannian(3, 4, 6) == AbelianGroup.cyclic(2)


def test_pi_frame_space_examples():
    assert pi_frame_space(1, 2, 3) == AbelianGroup.cyclic(2)
    assert pi_frame_space(2, 5, 3) == TRIVIAL
    assert pi_frame_space(5, 3, 4) == AbelianGroup.cyclic(3)


def test_stable_range_examples():
    assert stable_range(2, 3) == 4
    assert stable_range(7, 7) == 14
    assert stable_range(2, 100) == 4


def test_unstable_and_invalid_inputs():
    with pytest.raises(UnstableRangeError):
        pi_grassmannian(5, 2, 3)
    with pytest.raises(UnstableRangeError):
        pi_grassmannian(0, 2, 3)
    with pytest.raises(UnstableRangeError):
        pi_frame_space(7, 2, 3)
    with pytest.raises(DimensionError):
        pi_grassmannian(2, 1, 3)
    with pytest.raises(DimensionError):
        induced_map(2, 2, 3, 5, 9)
    # boundary degree is inside the stable range
    assert pi_grassmannian(4, 2, 5) == Z


def test_induced_map_examples():
    rep = induced_map(4, 2, 3, 4, 9)
    assert rep.kind == "multiplication" and rep.factor == 1 and rep.is_isomorphism
    rep = induced_map(3, 2, 2, 4, 4)
    assert rep.image_generator == 0 and rep.image_order == 1
    assert rep.kind == "zero" and not rep.injective
    rep = induced_map(2, 2, 2, 4, 4)
    assert rep.injective and rep.source == AbelianGroup.cyclic(2) and rep.target == AbelianGroup.cyclic(4)
    assert rep.image_generator is None and not rep.is_isomorphism


def test_fab_inverse_map_order_examples():
    assert fab_inverse_map_order(2, 3, 4, 9, 3) == 1
    assert fab_inverse_map_order(2, 2, 4, 4, 3) == 1
    assert fab_inverse_map_order(2, 2, 8, 4, 3) == 1
    assert fab_inverse_map_order(2, 2, 4, 8, 3) == 1
    with pytest.raises(ValueError):
        fab_inverse_map_order(2, 2, 4, 8, 2)


def test_oracle_examples():
    assert exact_sequence_oracle(2, 3, 2) == (Z, TRIVIAL)
    assert exact_sequence_oracle(4, 6, 2) == (Z, AbelianGroup.cyclic(2))
    assert exact_sequence_oracle(5, 5, 3) == (Z, AbelianGroup.cyclic(5))


@pytest.mark.parametrize("k, l", [(k, l) for k in range(2, 9) for l in range(2, 9)])
def test_oracle_degree_one_finite_presentation(k, l):
    assert exact_sequence_oracle(k, l, 1) == (pi_grassmannian(2, k, l), pi_grassmannian(1, k, l))


def test_cokernel_and_kernel_helpers():
    assert cokernel([[2, 0], [0, 3]]) == AbelianGroup.cyclic(6)
    assert cokernel([[2], [0]]) == AbelianGroup(1, (2,))
    # Z/4 -> Z/4, x -> 2x has kernel Z/2
    assert kernel_of_homomorphism([[2]], [[4]], [[4]]) == AbelianGroup.cyclic(2)
    # Z -> Z/6, x -> x has kernel 6Z, isomorphic to Z
    assert kernel_of_homomorphism([[1]], [], [[6]]) == Z


pairs = st.tuples(st.integers(2, 30), st.integers(2, 30))


@settings(max_examples=60, deadline=None)
@given(pairs, st.integers(1, 4), st.integers(1, 4), st.data())
def test_induced_map_structure(kl, a, b, data):
    k, l = kl
    m, n = k * a, l * b
    r = data.draw(st.integers(1, stable_range(k, l)))
    rep = induced_map(r, k, l, m, n)
    assert rep.source == pi_grassmannian(r, k, l)
    assert rep.target == pi_grassmannian(r, m, n)
    if rep.kind == "multiplication":
        assert rep.factor == math.gcd(m, n) // math.gcd(k, l)
    elif r % 2 == 1:
        d = math.gcd(m, n)
        assert rep.image_generator == (m * n // (k * l)) % d
        assert rep.image_order * math.gcd(rep.image_generator, d) == d
    if math.gcd(k, l) == 1 and math.gcd(m, n) == 1:
        assert rep.is_isomorphism


@settings(max_examples=60, deadline=None)
@given(pairs, st.integers(1, 5), st.integers(1, 5))
def test_frame_space_order_closed_form(kl, a, b):
    k, l = kl
    # mn/kl = ab, and ab has order ka / gcd(ab, ka) = k / gcd(b, k) in Z/ka
    assert frame_space_induced_order(k, l, k * a, l * b) == k // math.gcd(b, k)
