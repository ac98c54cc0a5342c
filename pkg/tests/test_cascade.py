import pytest

from hermitian_cascade.cascade import (check_cascade_invariants, coroot_sum, dynkin_string,
                                       h_string, is_tube_type, max_cascade, orthogonal_sequence,
                                       run_cascade, theta_for, theta_string)
from hermitian_cascade.errors import ConsistencyError
from hermitian_cascade.hermitian_catalog import build_pair_from_key
from hermitian_cascade.root_core import Coweight, build_root_system, pair_coweight

# (key, params, r, h, theta) in display order
FROZEN = [
    ("E6", {}, 1, "000001", "123212"),
    ("E6", {}, 2, "100010", "111110"),
    ("E7", {}, 1, "1000000", "2343212"),
    ("E7", {}, 2, "0000100", "0122211"),
    ("E7", {}, 3, "0000020", "0000010"),
    ("C", {"n": 4}, 3, "0010", "0021"),
    ("C", {"n": 4}, 4, "0002", "0001"),
    ("Dn", {"n": 6}, 3, "0000(2/0)", "0000(1/0)"),
    ("Dn", {"n": 5}, 2, "000(1/1)", "001(1/1)"),
    ("D1", {"n": 6}, 1, "0100(0/0)", "1222(1/1)"),
    ("A", {"p": 2, "q": 3}, 2, "0110", "0110"),
    ("B", {"n": 4}, 2, "2000", "1000"),
]


@pytest.mark.parametrize("key,params,r,h,theta", FROZEN)
def test_frozen_cascades(key, params, r, h, theta):
    res = run_cascade(build_pair_from_key(key, params), r)
    assert h_string(res) == h
    assert theta_string(res) == theta


def test_e6_sequence_roots(e6):
    res = max_cascade(e6)
    assert [a.coords for a in res.alphas] == [(1, 2, 2, 3, 2, 1), (1, 0, 1, 1, 1, 1)]


def test_e7_sequence_is_strongly_orthogonal(e7):
    res = max_cascade(e7)
    assert len(res.alphas) == 3
    assert res.h == e7.z


def test_invariants_for_every_prefix(pairs):
    for pair in pairs:
        for r in range(pair.rank_p + 1):
            res = run_cascade(pair, r)
            assert check_cascade_invariants(res) == [], (pair.label, r)
            assert pair_coweight(pair.root_system, pair.varpi, res.h) == r


def test_h_dominant_and_bounded(pairs):
    for pair in pairs:
        res = max_cascade(pair)
        rs = pair.root_system
        assert res.h.is_dominant()
        assert max(pair_coweight(rs, a, res.h) for a in rs.roots) == 2


@pytest.mark.parametrize("label,tube", [
    ("SU(2,2)", True), ("SU(2,3)", False), ("SO(2,7)", True), ("Sp(8,R)", True),
    ("SO(2,8)", True), ("SO(2,10)", True), ("SO*(10)", False), ("SO*(12)", True),
    ("E6", False), ("E7", True),
])
def test_tube_type(label, tube):
    from hermitian_cascade.hermitian_catalog import parse_pair_label

    assert is_tube_type(parse_pair_label(label)) is tube


def test_r_zero_and_out_of_range(e6):
    res = run_cascade(e6, 0)
    assert res.alphas == () and res.theta is None
    assert all(x == 0 for x in res.h.coords)
    with pytest.raises(ValueError, match="out of range"):
        run_cascade(e6, 3)
    with pytest.raises(ValueError):
        run_cascade(e6, -1)


def test_theta_is_unique_minimum():
    rs = build_root_system("A", 3)
    assert theta_for(rs, Coweight.of([1, 0, 1])).coords == (1, 1, 1)
    assert theta_for(rs, Coweight.of([0, 0, 0])) is None
    # two simple roots tie at height one
    with pytest.raises(ConsistencyError, match="not unique"):
        theta_for(rs, Coweight.of([2, 0, 2]))


def test_sequence_length_equals_real_rank(pairs):
    for pair in pairs:
        seq = orthogonal_sequence(pair.root_system, pair.zeta)
        assert len(seq.alphas) == pair.rank_p
        assert coroot_sum(pair.root_system, seq.alphas) == max_cascade(pair).h


def test_dynkin_string_fork():
    d5 = build_root_system("D", 5)
    assert dynkin_string(d5, [1, 2, 3, 4, 5]) == "123(5/4)"
    e6 = build_root_system("E6", 6)
    assert dynkin_string(e6, [1, 2, 3, 4, 5, 6]) == "134562"
