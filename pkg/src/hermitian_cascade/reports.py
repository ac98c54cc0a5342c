"""Report assembly: table reproduction, per-pair documents and verification suites.

Everything here returns plain dicts/lists ready for canonical JSON or TSV;
the command-line layer only parses flags and writes bytes.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Mapping

from .cascade import (check_cascade_invariants, h_string, is_tube_type, max_cascade,
                      run_cascade, theta_string)
from .errors import ConfigurationError
from .hermitian_catalog import HermitianPair, _default_catalog, build_pair_from_key
from .milnorwood_consts import (VOL, bound_report, deg_canonical, deg_L_dual, mw_bound,
                                rewording_bound, toledo_of_degE0, tube_bound)
from .octonion_e6 import (DEFAULT_SEED, E6_BRANCHING, E6_BRANCHING_DIMS, E1Vector,
                          SplitOctonion, e6_exponent_pair, filtration_dims, run_octonion_suite,
                          su_exponents, tensor_dimension)
from .rep_weights import (check_long_root_strings, check_weight2, cominuscule_module,
                          grade_by_z, weyl_dimension)
from .root_core import pair_coweight
from .submodule_v import (build_qlh, build_submodule, check_closure, check_equislope,
                          check_filtration, check_l_tube, check_q_stability,
                          check_slope_identity, negative_control, slope, tensor_power_check)

SCHEMA_VERSION = "1.0"
MODULES = ("weights", "cascade", "submodule", "octonion", "milnorwood", "catalog")


def validate_catalog(data: Mapping[str, Any]) -> list[HermitianPair]:
    """Instantiate every manifest and table entry; errors name the offending row."""
    for key in ("families", "manifest", "table1"):
        if key not in data:
            raise ConfigurationError(f"catalog lacks the {key!r} section")
    for key, spec in data["families"].items():
        for field_name in ("type", "params", "rank", "zeta", "row_label", "real_form"):
            if field_name not in spec:
                raise ConfigurationError(f"catalog family {key!r} lacks {field_name!r}")
    pairs = []
    for m in data["manifest"]:
        try:
            pairs.append(build_pair_from_key(m["key"], m["params"], data))
        except ConfigurationError as exc:
            row = data["families"].get(m["key"], {}).get("row_label", m["key"])
            raise ConfigurationError(f"catalog row {row} ({m['key']} {m['params']}): {exc}") from exc
    for row in data["table1"]:
        for inst in row["instances"]:
            try:
                pair = build_pair_from_key(inst["key"], inst["params"], data)
            except ConfigurationError as exc:
                raise ConfigurationError(f"table row {row['row']} {row['label']}: {exc}") from exc
            if not 1 <= inst["r"] <= pair.rank_p:
                raise ConfigurationError(
                    f"table row {row['row']} {row['label']}: r={inst['r']} exceeds "
                    f"p={pair.rank_p} for {pair.label}")
    return pairs


def table1_rows(data: Mapping[str, Any] | None = None) -> list[dict[str, Any]]:
    data = data or _default_catalog()
    validate_catalog(data)
    rows = []
    for row in data["table1"]:
        for inst in row["instances"]:
            pair = build_pair_from_key(inst["key"], inst["params"], data)
            res = run_cascade(pair, inst["r"])
            hs, ts = h_string(res), theta_string(res)
            rows.append({
                "row": row["row"],
                "label": row["label"],
                "condition": row["condition"],
                "pair": pair.label,
                "r": inst["r"],
                "p": pair.rank_p,
                "h": hs,
                "theta": ts,
                "expected_h": inst["h"],
                "expected_theta": inst["theta"],
                "match": hs == inst["h"] and ts == inst["theta"],
                "tube_at_r_eq_p": is_tube_type(pair) if inst["r"] == pair.rank_p else None,
            })
    return rows


TABLE1_COLUMNS = ("row", "label", "condition", "pair", "r", "p", "h", "theta",
                  "expected_h", "expected_theta", "match", "tube_at_r_eq_p")


def _fmt(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def to_tsv(rows: list[Mapping[str, Any]], columns: tuple[str, ...]) -> str:
    lines = ["\t".join(columns)]
    lines += ["\t".join(_fmt(r[c]) for c in columns) for r in rows]
    return "\n".join(lines) + "\n"


def _frac_list(vals) -> list[str]:
    return [str(v) for v in vals]


def submodule_section(pair: HermitianPair, r: int) -> dict[str, Any]:
    module = cominuscule_module(pair)
    graded = grade_by_z(module, pair)
    res = run_cascade(pair, r)
    sub = build_submodule(graded, res)
    qlh = build_qlh(pair, res)
    slopes = [_frac_list(slope(v, qlh, pair).value) for v in sub.vees]
    return {
        "r": r,
        "dims": list(sub.dims),
        "total_dim": sub.total_dim,
        "l_minus": len(qlh.l_minus),
        "levi_h_simple_nodes": sorted(j + 1 for j in qlh.levi_h_simple),
        "slopes": slopes,
        "closure_violations": len(check_closure(sub, qlh, module)),
        "slope_identity_violations": len(check_slope_identity(sub, qlh)),
    }


def octonion_section(seed: int) -> dict[str, Any]:
    rep = run_octonion_suite(seed)
    x2 = E1Vector(SplitOctonion.one(), SplitOctonion.zero())
    x1 = E1Vector(SplitOctonion.basis(1), SplitOctonion.zero())
    return {
        "seed": rep["seed"],
        "rank_agreement": rep["rank_agreement"],
        "norm_multiplicative": rep["norm_multiplicative"],
        "pencil_kernel_ok": rep["pencil_kernel_ok"],
        "rank1_image_ok": rep["rank1_image_ok"],
        "filtration_dims_rank2": list(filtration_dims(x2)),
        "filtration_dims_rank1": list(filtration_dims(x1)),
        "det_exponents": list(e6_exponent_pair()),
        "passed": rep["passed"],
    }


def report_document(pair: HermitianPair, n: int, r: int | None = None,
                    seed: int = DEFAULT_SEED) -> dict[str, Any]:
    if n < 2:
        raise ConfigurationError("n must be at least 2")
    if r is not None and not 0 <= r <= pair.rank_p:
        raise ConfigurationError(f"r={r} outside 0..{pair.rank_p} for {pair.label}")
    module = cominuscule_module(pair)
    graded = grade_by_z(module, pair)
    tube = is_tube_type(pair)
    rs_range = [r] if r is not None else list(range(1, pair.rank_p + 1))
    cascade = []
    for k in range(1, pair.rank_p + 1):
        res = run_cascade(pair, k)
        cascade.append({"r": k, "h": h_string(res), "theta": theta_string(res),
                        "alphas": [list(a.coords) for a in res.alphas]})
    subs = [submodule_section(pair, k) for k in rs_range]
    bounds = bound_report(pair, n)
    verdict = {
        "weyl_dimension": module.dimension == weyl_dimension(pair.root_system, pair.varpi),
        "weight2": not check_weight2(module, pair.root_system),
        "long_root_strings": not check_long_root_strings(module, pair.root_system),
        "cascade_invariants": all(not check_cascade_invariants(run_cascade(pair, k))
                                  for k in range(1, pair.rank_p + 1)),
        "submodule_closure": all(s["closure_violations"] == 0 for s in subs),
        "slope_identity": all(s["slope_identity_violations"] == 0 for s in subs),
        "tube_bound_strict": bounds.strict if tube else None,
    }
    doc = {
        "schema_version": SCHEMA_VERSION,
        "pair": pair.descriptor(),
        "invariants": {
            "rank_p": pair.rank_p,
            "dim_u_plus": pair.dim_u_plus,
            "fano_index": pair.fano_index,
            "z_max": str(pair.z_max),
            "tube_type": tube,
        },
        "grading": {"dimension": module.dimension, "dims": list(graded.dims)},
        "cascade": cascade,
        "submodule": subs,
        "milnor_wood": bounds.as_dict(),
        "verdict": verdict,
    }
    if pair.root_system.family == "E6":
        doc["octonion"] = octonion_section(seed)
        verdict["octonion_suite"] = doc["octonion"]["passed"]
    return doc


# verification suites

@dataclass
class SuiteResult:
    name: str
    scope: str
    violations: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict[str, Any]:
        return {"name": self.name, "scope": self.scope, "passed": self.passed,
                "violation_count": len(self.violations), "violations": self.violations[:20],
                "seconds": round(self.seconds, 3)}


def _run(name: str, scope: str, fn: Callable[[], list[str]]) -> SuiteResult:
    t = time.perf_counter()
    try:
        v = fn()
    except ConfigurationError:
        raise
    except Exception as exc:  # a crashing law is a violation, not a config problem
        v = [f"{type(exc).__name__}: {exc}"]
    return SuiteResult(name, scope, list(v), time.perf_counter() - t)


def weight_suite(pair: HermitianPair) -> list[str]:
    rs = pair.root_system
    module = cominuscule_module(pair)
    out = list(check_weight2(module, rs)) + list(check_long_root_strings(module, rs))
    if module.dimension != weyl_dimension(rs, pair.varpi):
        out.append("Freudenthal and Weyl dimensions differ")
    graded = grade_by_z(module, pair)
    zvals = sorted({pair_coweight(rs, chi, pair.z) for chi in module})
    want = sorted(pair.z_max - 2 * i for i in range(pair.rank_p + 1))
    if zvals != want:
        out.append(f"<chi,z> values {zvals} != {want}")
    full = max_cascade(pair)
    walk = pair.varpi
    for k, a in enumerate(full.alphas, start=1):
        walk = walk - rs.root_to_weight(a)
        if walk not in module or pair_coweight(rs, walk, pair.z) != pair.z_max - 2 * k:
            out.append(f"varpi - alpha_1 - ... - alpha_{k} misbehaves")
    if walk != module.lowest_weight:
        out.append("varpi minus the sequence is not the lowest weight")
    if (walk == -pair.varpi) != is_tube_type(pair):
        out.append("lowest weight = -varpi disagrees with the tube criterion")
    if graded.dims != graded.dims[::-1] and is_tube_type(pair):
        out.append("tube-type grading is not symmetric")
    return out


def cascade_suite(pair: HermitianPair, data: Mapping[str, Any]) -> list[str]:
    out = []
    for k in range(1, pair.rank_p + 1):
        out += check_cascade_invariants(run_cascade(pair, k))
    max_cascade(pair)
    is_tube_type(pair)
    for row in data["table1"]:
        for inst in row["instances"]:
            if inst["key"] == pair.key and dict(inst["params"]) == pair.param_dict:
                res = run_cascade(pair, inst["r"])
                if (h_string(res), theta_string(res)) != (inst["h"], inst["theta"]):
                    out.append(f"table row {row['row']} r={inst['r']}: got "
                               f"{h_string(res)}/{theta_string(res)}")
    return out


def submodule_suite(pair: HermitianPair) -> list[str]:
    module = cominuscule_module(pair)
    graded = grade_by_z(module, pair)
    out = []
    for k in range(0, pair.rank_p + 1):
        res = run_cascade(pair, k)
        sub = build_submodule(graded, res)
        qlh = build_qlh(pair, res)
        for fn in (check_closure, check_q_stability):
            out += fn(sub, qlh, module)
        out += check_filtration(sub, graded)
        out += check_equislope(sub, qlh)
        out += check_slope_identity(sub, qlh)
        out += check_l_tube(sub, qlh)
    return out


def octonion_suite(pair: HermitianPair, seed: int) -> list[str]:
    rep = run_octonion_suite(seed)
    out = list(rep["violations"])
    res = run_cascade(pair, 2)
    sub = build_submodule(grade_by_z(cominuscule_module(pair), pair), res)
    x = E1Vector(SplitOctonion.one(), SplitOctonion.zero())
    if tuple(sub.dims) != filtration_dims(x):
        out.append(f"weight-level dims {sub.dims} != matrix-level {filtration_dims(x)}")
    return out


def global_suites() -> list[tuple[str, Callable[[], list[str]]]]:
    def milnorwood() -> list[str]:
        out = []
        if toledo_of_degE0(rewording_bound(1)) != VOL:
            out.append("toledo(rewording(1)) != vol")
        for p in range(1, 8):
            if mw_bound(p) != p * VOL:
                out.append(f"composed bound for p={p} is not p*vol")
            for n in range(2, 11):
                if not tube_bound(p, n) < p * VOL:
                    out.append(f"tube bound not strict at p={p}, n={n}")
                if deg_canonical(n) != Fraction(n + 1, 2) * deg_L_dual():
                    out.append(f"canonical degree relation fails at n={n}")
        if tube_bound(3, 2) != Fraction(9, 4) * VOL:
            out.append("tube bound at (3,2) is not 9/4 vol")
        return out

    def exponents() -> list[str]:
        out = []
        if e6_exponent_pair() != (6, 21):
            out.append(f"E6 exponent pair {e6_exponent_pair()}")
        if tensor_dimension(E6_BRANCHING, E6_BRANCHING_DIMS) != 27:
            out.append("E6 branching does not have dimension 27")
        for n in range(1, 6):
            if su_exponents(n, 2, 3) != (n + 1, 1):
                out.append(f"SU exponents wrong at n={n}")
        return out

    def tensor_powers() -> list[str]:
        a = build_pair_from_key("A", {"p": 1, "q": 2})
        b = build_pair_from_key("B", {"n": 2})
        return tensor_power_check(a, run_cascade(a, 1), 2) + \
            tensor_power_check(b, run_cascade(b, 2), 2)

    def negative() -> list[str]:
        e6 = build_pair_from_key("E6", {})
        if not any(n for _, n in negative_control(e6, 2)):
            return ["no impostor coweight produced a closure violation"]
        return []

    return [("milnorwood", milnorwood), ("det_exponents", exponents),
            ("tensor_power", tensor_powers), ("negative_control", negative)]


def run_verify(pairs: list[HermitianPair], data: Mapping[str, Any], modules: set[str],
               seed: int, include_global: bool) -> list[SuiteResult]:
    results = []
    if "catalog" in modules and include_global:
        results.append(_run("table1", "all", lambda: [
            f"row {r['row']} {r['pair']} r={r['r']}: {r['h']}/{r['theta']}"
            for r in table1_rows(data) if not r["match"]]))
    for pair in pairs:
        if "weights" in modules:
            results.append(_run("weights", pair.label, lambda p=pair: weight_suite(p)))
        if "cascade" in modules:
            results.append(_run("cascade", pair.label, lambda p=pair: cascade_suite(p, data)))
        if "submodule" in modules:
            results.append(_run("submodule", pair.label, lambda p=pair: submodule_suite(p)))
        if "octonion" in modules and pair.root_system.family == "E6":
            results.append(_run("octonion", pair.label, lambda p=pair: octonion_suite(p, seed)))
    if include_global:
        for name, fn in global_suites():
            if name == "milnorwood" and "milnorwood" not in modules:
                continue
            if name != "milnorwood" and not modules & {"submodule", "octonion"}:
                continue
            results.append(_run(name, "all", fn))
    return results


def verify_document(results: list[SuiteResult]) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "passed": all(r.passed for r in results),
            "suites": [r.as_dict() for r in results]}
