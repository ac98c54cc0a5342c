from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hermitian_cascade.errors import ConsistencyError
from hermitian_cascade.hermitian_catalog import build_pair_from_key
from hermitian_cascade.rep_weights import (check_long_root_strings, check_weight2,
                                           cominuscule_module, dominant_conjugate, grade_by_z,
                                           weight_system, weyl_dimension, weyl_orbit)
from hermitian_cascade.root_core import Weight, build_root_system

GRADES = {"E6": (1, 16, 10), "E7": (1, 27, 27, 1), "SO(2,7)": (1, 7, 1), "SO(2,8)": (1, 8, 1),
          "SU(2,3)": (1, 6, 3), "SU(2,2)": (1, 4, 1), "Sp(8,R)": (1, 10, 20, 10, 1),
          "SO*(10)": (1, 10, 5), "SO*(12)": (1, 15, 15, 1), "SO(2,10)": (1, 10, 1)}


def test_grade_dims_frozen(pairs):
    for pair in pairs:
        key = pair.label.split("(-")[0] if pair.label.startswith("E") else pair.label
        graded = grade_by_z(cominuscule_module(pair), pair)
        assert graded.dims == GRADES[key], pair.label
        assert sum(graded.dims) == weyl_dimension(pair.root_system, pair.varpi)


def test_frozen_dimensions():
    assert weight_system(build_root_system("E6", 6), Weight((1, 0, 0, 0, 0, 0))).dimension == 27
    assert weight_system(build_root_system("E7", 7), Weight((0,) * 6 + (1,))).dimension == 56
    c4 = weight_system(build_root_system("C", 4), Weight((0, 1, 0, 0)))
    assert c4.dimension == 27
    c4b = weight_system(build_root_system("C", 4), Weight((0, 0, 1, 0)))
    assert c4b.dimension == 48
    adj = weight_system(build_root_system("A", 2), Weight((1, 1)))
    assert adj.dimension == 8 and adj.mult(Weight((0, 0))) == 2
    c42 = weight_system(build_root_system("C", 4), Weight((0, 0, 0, 1)))
    assert c42.dimension == 42 and c42.mult(Weight((0, 0, 0, 0))) == 2


@pytest.mark.parametrize("family,rank,lam", [
    ("B", 3, (1, 0, 1)), ("C", 3, (2, 0, 0)), ("D", 4, (1, 0, 1, 1)), ("A", 3, (2, 1, 0)),
    ("E6", 6, (0, 1, 0, 0, 0, 0)), ("B", 2, (1, 1)),
])
def test_freudenthal_matches_weyl(family, rank, lam):
    rs = build_root_system(family, rank)
    assert weight_system(rs, Weight(lam)).dimension == weyl_dimension(rs, Weight(lam))


def test_minuscule_weights_have_multiplicity_one(pairs):
    for pair in pairs:
        m = cominuscule_module(pair)
        assert set(m.entries.values()) == {1} or pair.key == "C"
        assert m.lowest_weight == -dominant_conjugate(pair.root_system, -m.lowest_weight)


def test_weight_checks_pass_on_cominuscule(pairs):
    for pair in pairs:
        m = cominuscule_module(pair)
        assert check_weight2(m, pair.root_system) == []
        assert check_long_root_strings(m, pair.root_system) == []


def test_weight_checks_catch_adjoint():
    rs = build_root_system("A", 2)
    adj = weight_system(rs, Weight((1, 1)))
    assert len(check_weight2(adj, rs)) == 12
    assert check_long_root_strings(adj, rs) != []


def test_non_dominant_highest_weight_rejected():
    with pytest.raises(ValueError, match="dominant"):
        weight_system(build_root_system("A", 2), Weight((1, -1)))


def test_grading_rejects_wrong_module(e6):
    adj = weight_system(e6.root_system, Weight((0, 1, 0, 0, 0, 0)))
    with pytest.raises(ConsistencyError):
        grade_by_z(adj, e6)


def test_grade_of_matches_grades(e7):
    g = grade_by_z(cominuscule_module(e7), e7)
    for i, grade in enumerate(g.grades):
        assert all(g.grade_of(chi) == i for chi in grade)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4),
       st.sampled_from([("A", 4), ("B", 4), ("C", 4), ("D", 4)]))
def test_dominant_conjugate_in_orbit(vals, system):
    rs = build_root_system(*system)
    chi = Weight(tuple(vals))
    dom = dominant_conjugate(rs, chi)
    assert dom.is_dominant()
    assert dominant_conjugate(rs, dom) == dom
    assert rs.weight_form(dom, dom) == rs.weight_form(chi, chi)
    if sum(abs(v) for v in vals) <= 4:
        assert dom in weyl_orbit(rs, chi)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=3, max_size=3),
       st.sampled_from([("A", 3), ("B", 3), ("C", 3)]))
def test_weyl_dimension_property(vals, system):
    rs = build_root_system(*system)
    lam = Weight(tuple(vals))
    mod = weight_system(rs, lam)
    assert mod.dimension == weyl_dimension(rs, lam)
    # the weight multiset is Weyl invariant
    for chi, m in mod.entries.items():
        assert mod.mult(dominant_conjugate(rs, chi)) == m
    assert Fraction(sum(mod.entries.values())) == mod.dimension
