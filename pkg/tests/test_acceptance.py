"""Acceptance criteria, one printed PASS/FAIL line per criterion."""
import hashlib
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from hermitian_cascade import hermitian_catalog, rep_weights
from hermitian_cascade.cascade import check_cascade_invariants, is_tube_type, run_cascade
from hermitian_cascade.hermitian_catalog import build_pair_from_key, manifest_pairs
from hermitian_cascade.milnorwood_consts import (VOL, deg_canonical, deg_L_dual, mw_bound,
                                                 rewording_bound, toledo_of_degE0, tube_bound)
from hermitian_cascade.octonion_e6 import (E1Vector, SplitOctonion, det_exponent_calculus,
                                           e6_exponent_pair, filtration_dims,
                                           run_octonion_suite, su_exponents)
from hermitian_cascade.rep_weights import (check_long_root_strings, check_weight2,
                                           cominuscule_module, grade_by_z, weight_system,
                                           weyl_dimension)
from hermitian_cascade.reports import table1_rows
from hermitian_cascade.root_core import Weight, build_root_system
from hermitian_cascade.submodule_v import (check_closure, check_slope_identity, submodule_for,
                                           tensor_power_check)

TABLE_ROWS = 16


@pytest.fixture
def verdict(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}  {title}"
                  + (f"  ({detail})" if detail else ""))
        assert ok, f"criterion {number} failed: {detail}"
    return emit


def _cold():
    hermitian_catalog._build_pair_cached.cache_clear()
    hermitian_catalog._default_catalog.cache_clear()
    rep_weights._weight_system_cached.cache_clear()


def test_01_table1(verdict):
    _cold()
    t = time.perf_counter()
    rows = table1_rows()
    dt = time.perf_counter() - t
    bad = [(r["pair"], r["r"]) for r in rows if not r["match"]]
    covered = {r["row"] for r in rows}
    ok = not bad and covered == set(range(1, TABLE_ROWS + 1)) and dt < 5
    verdict(1, "Table-1 reproduction", ok,
            f"{len(covered)} rows, {len(rows)} instances, {len(bad)} mismatches, {dt:.2f}s")


def test_02_grading(verdict):
    _cold()
    want = {("E6", ()): (1, 16, 10), ("E7", ()): (1, 27, 27, 1), ("B", (4,)): (1, 7, 1),
            ("D1", (5,)): (1, 8, 1), ("A", (2, 3)): (1, 6, 3)}
    names = {"B": ("n",), "D1": ("n",), "A": ("p", "q")}
    t = time.perf_counter()
    got = {}
    for (key, vals), dims in want.items():
        pair = build_pair_from_key(key, dict(zip(names.get(key, ()), vals)))
        got[(key, vals)] = grade_by_z(cominuscule_module(pair), pair).dims
    dt = time.perf_counter() - t
    # wedge^{2-i} C^2 (x) wedge^i C^3
    binom = tuple([1, 2, 1][2 - i] * [1, 3, 3, 1][i] for i in range(3))
    ok = got == want and binom == want[("A", (2, 3))] and dt < 5
    verdict(2, "grading dimensions", ok, f"{dt:.2f}s")


def test_03_oracle_equivalence(verdict):
    pairs = manifest_pairs()
    mods = {(p.root_system.family, p.root_system.rank, p.varpi) for p in pairs}
    bad = [m for m in mods
           if weight_system(build_root_system(m[0], m[1]), m[2]).dimension
           != weyl_dimension(build_root_system(m[0], m[1]), m[2])]
    verdict(3, "Freudenthal equals Weyl", not bad and len(mods) >= 8,
            f"{len(mods)} distinct modules")


def test_04_weight_law_suites(verdict):
    viol = 0
    for pair in manifest_pairs():
        m = cominuscule_module(pair)
        viol += len(check_weight2(m, pair.root_system))
        viol += len(check_long_root_strings(m, pair.root_system))
    a2 = build_root_system("A", 2)
    adj = weight_system(a2, Weight((1, 1)))
    neg = len(check_weight2(adj, a2)) + len(check_long_root_strings(adj, a2))
    verdict(4, "weight law suites", viol == 0 and neg > 0,
            f"{viol} violations, adjoint control {neg}")


def test_05_cascade_laws(verdict):
    viol, cases = 0, 0
    for pair in manifest_pairs():
        for r in range(1, pair.rank_p + 1):
            viol += len(check_cascade_invariants(run_cascade(pair, r)))
            cases += 1
    verdict(5, "cascade laws", viol == 0, f"{cases} (pair, r) cases, {viol} violations")


def test_06_submodule_suite(verdict):
    viol, cases = [], 0
    for pair in manifest_pairs():
        module = cominuscule_module(pair)
        for r in range(1, pair.rank_p + 1):
            sub, qlh = submodule_for(pair, r)
            cases += 1
            if sub.dims != sub.dims[::-1]:
                viol.append(f"{pair.label} r={r} asymmetric {sub.dims}")
            viol += check_closure(sub, qlh, module) + check_slope_identity(sub, qlh)
    small = [build_pair_from_key("A", {"p": 2, "q": 2}), build_pair_from_key("A", {"p": 2, "q": 3})]
    for pair in small:
        for r in range(1, pair.rank_p + 1):
            viol += tensor_power_check(pair, run_cascade(pair, r), 2)
    verdict(6, "submodule suite", not viol, f"{cases} cases, {len(viol)} violations")


def test_07_e6_double_oracle(verdict):
    e6 = build_pair_from_key("E6")
    weight_level = submodule_for(e6, 2)[0].dims
    matrix_level = filtration_dims(E1Vector(SplitOctonion.one(), SplitOctonion.zero()))
    ok = weight_level == matrix_level == (1, 8, 1)
    verdict(7, "E6 double oracle", ok, f"weights {weight_level}, matrices {matrix_level}")


def test_08_octonion_suite(verdict):
    t = time.perf_counter()
    rep = run_octonion_suite(seed=0xC0FFEE, trials=1000, pencils=200, pairs=200)
    dt = time.perf_counter() - t
    ok = (rep["rank_agreement"] == 1000 and rep["norm_multiplicative"] == 1000
          and rep["pencil_kernel_ok"] == 200 and rep["rank1_image_ok"] == 200
          and rep["passed"] and dt < 10)
    verdict(8, "octonion randomized suite", ok,
            f"ranks {rep['rank_agreement']}/1000, norm {rep['norm_multiplicative']}/1000, "
            f"pencils {rep['pencil_kernel_ok']}/200, images {rep['rank1_image_ok']}/200, "
            f"{dt:.2f}s")


def test_09_det_exponents(verdict):
    e6 = set(e6_exponent_pair())
    su = all(su_exponents(n, p, r) == (n + 1, 1)
             for n in range(1, 6) for p in range(1, 4) for r in range(1, 4))
    verdict(9, "determinant exponents", e6 == {21, 6} and su, f"E6 {sorted(e6)}")


def test_10_milnor_wood(verdict):
    composed = all(toledo_of_degE0(rewording_bound(p)) == p * VOL == mw_bound(p)
                   for p in range(1, 8))
    canon = all(deg_canonical(n) == Fraction(n + 1, 2) * deg_L_dual() for n in range(2, 11))
    tube = [p for p in manifest_pairs() if is_tube_type(p)]
    strict = all(tube_bound(p.rank_p, n) < mw_bound(p.rank_p)
                 for p in tube for n in range(2, 11))
    exact = tube_bound(3, 2) == Fraction(9, 4) * VOL
    verdict(10, "Milnor-Wood coefficients", composed and canon and strict and exact,
            f"{len(tube)} tube pairs x n=2..10")


def _digest(*argv):
    out = subprocess.run([sys.executable, "-m", "hermitian_cascade", *argv],
                         capture_output=True, check=True).stdout
    return hashlib.sha256(out).hexdigest()


def test_11_determinism(verdict):
    commands = [("table1",), ("table1", "--format", "tsv"), ("report", "--pair", "E6"),
                ("report", "--pair", "E7", "--n", "3")]
    same = [_digest(*c) == _digest(*c) for c in commands]
    verdict(11, "byte-identical reruns", all(same), f"{sum(same)}/{len(same)} commands")
