import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hermitian_cascade.octonion_e6 import (E1Vector, ExpressionError, SplitOctonion,
                                           det_exponent_calculus, dual_kernel_intersection_dim,
                                           e6_exponent_pair, filtration_dims,
                                           image_intersection_dim, image_is_isotropic,
                                           kappa, kappa_polar, kernel_intersection_dim,
                                           lambda2, nilpotent_action, oct_bilinear, oct_norm,
                                           pencil_all_rank2, random_rank1, rank_class,
                                           run_octonion_suite, su_exponents, tensor_dimension)

coord = st.integers(-4, 4)
octs = st.lists(coord, min_size=8, max_size=8).map(SplitOctonion.from_coords)
e1s = st.lists(coord, min_size=16, max_size=16).map(E1Vector.from_coords)

ZERO8 = SplitOctonion.zero()
RANK1 = E1Vector(SplitOctonion.basis(0), ZERO8)
RANK2 = E1Vector(SplitOctonion.one(), ZERO8)
ZERO = E1Vector(ZERO8, ZERO8)


def test_unit_and_conjugation():
    one = SplitOctonion.one()
    x = SplitOctonion.from_coords([1, 2, -1, 0, 3, 1, -2, 5])
    assert one * x == x == x * one
    assert x * x.conj() == one.scale(oct_norm(x))
    assert oct_norm(one) == 1


def test_frozen_rank_classes():
    assert [rank_class(x) for x in (ZERO, RANK1, RANK2)] == [0, 1, 2]
    assert [lambda2(x).rank() for x in (ZERO, RANK1, RANK2)] == [0, 5, 9]


def test_frozen_filtration_dims():
    assert filtration_dims(RANK2) == (1, 8, 1)
    assert filtration_dims(RANK1) == (1, 1)
    assert filtration_dims(ZERO) == (1,)


def test_nilpotency_orders():
    assert not (nilpotent_action(RANK2) ** 2).is_zero()
    assert (nilpotent_action(RANK2) ** 3).is_zero()
    assert (nilpotent_action(RANK1) ** 2).is_zero()


def test_rank1_images_are_isotropic():
    rng = random.Random(5)
    for _ in range(20):
        x = random_rank1(rng)
        assert rank_class(x) == 1
        assert image_is_isotropic(x)
    assert not image_is_isotropic(RANK2)


def test_kernel_and_image_intersections():
    y = E1Vector(ZERO8, SplitOctonion.one())
    assert pencil_all_rank2(RANK2, y)
    assert kernel_intersection_dim(RANK2, y) == 0
    x2 = E1Vector(SplitOctonion.basis(7), ZERO8)
    x3 = E1Vector(SplitOctonion.basis(1), ZERO8)
    assert image_intersection_dim(RANK1, x2) == 1
    assert image_intersection_dim(RANK1, x3) == 3
    assert dual_kernel_intersection_dim(RANK1, RANK2) == 1
    assert not pencil_all_rank2(RANK1, RANK2)


def test_pencil_rejects_dependent():
    with pytest.raises(ValueError):
        pencil_all_rank2(RANK2, RANK2.scale(3))


def test_octonion_suite_small_seeded():
    rep = run_octonion_suite(seed=7, trials=80, pencils=10, pairs=10)
    assert rep["passed"], rep["violations"][:3]
    assert rep["rank_agreement"] == 80
    assert rep == run_octonion_suite(seed=7, trials=80, pencils=10, pairs=10)


def test_exponent_calculus_frozen():
    assert e6_exponent_pair() == (6, 21)
    assert su_exponents(2, 2, 1) == (3, 1)
    assert su_exponents(5, 3, 2) == (6, 1)
    dims = {"V": 3, "A": 2, "B": 2}
    assert tensor_dimension("∧²V⊗S²B ⊕ S²V⊗∧²B ⊕ V⊗A⊗B", dims) == 27
    assert det_exponent_calculus("L2(V)", "V", dims) == 2
    assert det_exponent_calculus("S2(A+B)", "A", dims) == 5


@pytest.mark.parametrize("bad", ["V⊗", "(V", "V V", "Q", ""])
def test_malformed_expressions(bad):
    with pytest.raises(ExpressionError):
        det_exponent_calculus(bad, "V", {"V": 3})


def test_unknown_actor():
    with pytest.raises(ExpressionError, match="actor"):
        det_exponent_calculus("V", "W", {"V": 3})


@settings(max_examples=150, deadline=None)
@given(octs, octs)
def test_norm_multiplicative(x, y):
    assert oct_norm(x * y) == oct_norm(x) * oct_norm(y)
    assert oct_bilinear(x, x) == oct_norm(x)


@settings(max_examples=100, deadline=None)
@given(octs, octs)
def test_alternativity(x, y):
    assert (x * x) * y == x * (x * y)
    assert (y * x) * x == y * (x * x)


@settings(max_examples=60, deadline=None)
@given(e1s, e1s)
def test_lambda2_is_polarization(x, y):
    assert lambda2(x).apply(y.coords) == kappa_polar(x, y).coords
    assert lambda2(x).apply(x.coords) == kappa(x).coords


@settings(max_examples=40, deadline=None)
@given(e1s)
def test_rank_class_matches_lambda2_rank(x):
    assert lambda2(x).rank() == {0: 0, 1: 5, 2: 9}[rank_class(x)]


@settings(max_examples=40, deadline=None)
@given(st.dictionaries(st.sampled_from("ABC"), st.integers(1, 5), min_size=3, max_size=3))
def test_exponent_additivity(dims):
    # det exponent of a direct sum is the sum; of A⊗B is dim B
    assert det_exponent_calculus("A ⊕ A⊗B", "A", dims) == 1 + dims["B"]
    assert det_exponent_calculus("∧²A ⊕ S²A", "A", dims) == 2 * dims["A"]
    assert Fraction(tensor_dimension("A⊗B⊗C", dims)) == dims["A"] * dims["B"] * dims["C"]
