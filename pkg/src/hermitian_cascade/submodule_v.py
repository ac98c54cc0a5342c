"""The graded submodule V of E attached to a cascade, at weight level.

``V_i`` collects the weights of ``E_i`` on which ``h`` takes its smallest
possible value ``r - 2i``.  Root partitions q, l, l+-, and the Levi h are
read off from the pairings with ``h`` and ``z``.  Every check returns a
list of violation messages; an empty list means the law holds.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .cascade import CascadeResult, coroot_sum, sequence_in_subsystem
from .errors import CapacityError, ConsistencyError
from .hermitian_catalog import HermitianPair
from .rep_weights import GradedModule, WeightedModule, cominuscule_module, grade_by_z
from .root_core import Coweight, Root, Weight, pair_coweight

TENSOR_DIM_GUARD = 30


@dataclass(frozen=True, eq=False)
class SubmodulePartition:
    pair: HermitianPair = field(repr=False)
    r: int
    h: Coweight
    vees: tuple[dict[Weight, int], ...] = field(repr=False)
    cascade: CascadeResult | None = field(default=None, repr=False)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(sum(v.values()) for v in self.vees)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def grade_of(self, chi: Weight) -> int | None:
        return next((i for i, v in enumerate(self.vees) if chi in v), None)

    def all_weights(self) -> dict[Weight, int]:
        out: dict[Weight, int] = {}
        for v in self.vees:
            out.update(v)
        return out


@dataclass(frozen=True)
class QLHPartition:
    q_roots: frozenset[int]
    l_roots: frozenset[int]
    l_plus: frozenset[int]
    l_minus: frozenset[int]
    levi_h_roots: frozenset[int]
    levi_h_simple: frozenset[int]

    @property
    def nilradical(self) -> frozenset[int]:
        return self.q_roots - self.l_roots


def _split(graded: GradedModule, h: Coweight, r: int) -> tuple[list[dict[Weight, int]], list[str]]:
    rs = graded.pair.root_system
    vees: list[dict[Weight, int]] = [{} for _ in range(r + 1)]
    bad = []
    for i, grade in enumerate(graded.grades):
        for chi, m in grade.items():
            v = pair_coweight(rs, chi, h)
            if v < r - 2 * i:
                bad.append(f"weight {chi.coords} in E_{i} has <chi,h> = {v} < {r - 2 * i}")
            elif v == r - 2 * i:
                if i > r:
                    bad.append(f"weight {chi.coords} in E_{i} lands in V beyond grade {r}")
                else:
                    vees[i][chi] = m
    return vees, bad


def build_submodule(graded: GradedModule, cascade: CascadeResult) -> SubmodulePartition:
    """Weight-level ``V = sum V_i`` with all partition invariants verified."""
    if cascade.pair is not graded.pair:
        raise ValueError("cascade and graded module belong to different pairs")
    r = cascade.r
    vees, bad = _split(graded, cascade.h, r)
    if bad:
        raise ConsistencyError("; ".join(bad[:5]))
    sub = SubmodulePartition(graded.pair, r, cascade.h, tuple(vees), cascade)
    dims = sub.dims
    if any(d == 0 for d in dims):
        raise ConsistencyError(f"empty V_i in dims {dims}")
    if dims != dims[::-1]:
        raise ConsistencyError(f"dims {dims} are not symmetric")
    return sub


def build_submodule_unchecked(graded: GradedModule, h: Coweight, r: int) -> SubmodulePartition:
    """Same filter for an arbitrary coweight; used for negative controls."""
    vees, _ = _split(graded, h, r)
    return SubmodulePartition(graded.pair, r, h, tuple(vees), None)


def submodule_for(pair: HermitianPair, r: int) -> tuple[SubmodulePartition, QLHPartition]:
    from .cascade import run_cascade

    res = run_cascade(pair, r)
    graded = grade_by_z(cominuscule_module(pair), pair)
    return build_submodule(graded, res), build_qlh(pair, res)


def build_qlh(pair: HermitianPair, cascade: CascadeResult | Coweight) -> QLHPartition:
    h = cascade.h if isinstance(cascade, CascadeResult) else cascade
    rs = pair.root_system
    q, l, lp, lm, lh = set(), set(), set(), set(), set()
    for k, a in enumerate(rs.roots):
        vh, vz = pair_coweight(rs, a, h), pair_coweight(rs, a, pair.z)
        if vh <= vz:
            q.add(k)
        if vh == vz:
            l.add(k)
            {2: lp, -2: lm, 0: lh}[int(vz)].add(k)
    simple = frozenset(j for j in range(rs.rank) if h.coords[j] == 0 and pair.z.coords[j] == 0)
    return QLHPartition(frozenset(q), frozenset(l), frozenset(lp), frozenset(lm),
                        frozenset(lh), simple)


def _shift(pair: HermitianPair, chi: Weight, a: Root, sign: int = 1) -> Weight:
    aw = pair.root_system.root_to_weight(a)
    return Weight(tuple(x + sign * y for x, y in zip(chi.coords, aw.coords)))


def check_closure(sub: SubmodulePartition, qlh: QLHPartition,
                  module: WeightedModule) -> list[str]:
    """Weight-level closure of V under l-, l+ and the cascade roots."""
    pair, rs = sub.pair, sub.pair.root_system
    out: list[str] = []
    r = sub.r
    for i, vi in enumerate(sub.vees):
        for chi in vi:
            for k in qlh.l_minus:
                nu = _shift(pair, chi, rs.roots[k])
                if nu in module and (i + 1 > r or nu not in sub.vees[i + 1]):
                    out.append(f"(a) {chi.coords} + {rs.roots[k].coords} leaves V_{i + 1}")
            for k in qlh.l_plus:
                nu = _shift(pair, chi, rs.roots[k])
                if nu in module and (i == 0 or nu not in sub.vees[i - 1]):
                    out.append(f"(b) {chi.coords} + {rs.roots[k].coords} leaves V_{i - 1}")
            if sub.cascade is not None:
                for a in sub.cascade.alphas:
                    nu = _shift(pair, chi, a, -1)
                    if nu in module and (i + 1 > r or nu not in sub.vees[i + 1]):
                        out.append(f"(d) {chi.coords} - {a.coords} leaves V_{i + 1}")
    for i in range(r):
        reach = {_shift(pair, chi, rs.roots[k]) for chi in sub.vees[i] for k in qlh.l_minus}
        for nu in sub.vees[i + 1]:
            if nu not in reach:
                out.append(f"(c) {nu.coords} in V_{i + 1} is not l_minus . V_{i}")
    return out


def check_q_stability(sub: SubmodulePartition, qlh: QLHPartition,
                      module: WeightedModule) -> list[str]:
    """Roots of q map V into V; roots of the nilradical kill it."""
    pair, rs = sub.pair, sub.pair.root_system
    out = []
    for i, vi in enumerate(sub.vees):
        for chi in vi:
            for k in qlh.q_roots:
                a = rs.roots[k]
                nu = _shift(pair, chi, a)
                if nu not in module:
                    continue
                if k in qlh.nilradical:
                    out.append(f"nilradical root {a.coords} moves {chi.coords} to a weight")
                    continue
                j = i - int(pair_coweight(rs, a, pair.z)) // 2
                if not 0 <= j <= sub.r or nu not in sub.vees[j]:
                    out.append(f"q root {a.coords} moves {chi.coords} out of V")
    return out


def check_filtration(sub: SubmodulePartition, graded: GradedModule) -> list[str]:
    """``V_i`` equals ``E_i`` intersected with ``{chi : <chi,h> <= r - 2i}``."""
    rs = sub.pair.root_system
    out = []
    for i, grade in enumerate(graded.grades):
        low = {chi: m for chi, m in grade.items()
               if pair_coweight(rs, chi, sub.h) <= sub.r - 2 * i}
        mine = sub.vees[i] if i <= sub.r else {}
        if low != mine:
            out.append(f"V_{i} differs from E_{i} cut by the filtration")
    return out


@dataclass(frozen=True)
class SlopeFunctional:
    numerator: Weight
    dimension: int
    restriction: tuple[Fraction, ...]

    @property
    def value(self) -> tuple[Fraction, ...]:
        return tuple(x / self.dimension for x in self.restriction)

    def dual(self) -> "SlopeFunctional":
        return SlopeFunctional(-self.numerator, self.dimension,
                               tuple(-x for x in self.restriction))

    def __add__(self, other: "SlopeFunctional") -> tuple[Fraction, ...]:
        """Slope of a tensor product of equislope modules."""
        return tuple(a + b for a, b in zip(self.value, other.value))


def central_nodes(pair: HermitianPair, qlh: QLHPartition) -> tuple[int, ...]:
    return tuple(j for j in range(pair.root_system.rank) if j not in qlh.levi_h_simple)


def slope(weights: Mapping[Weight, int], qlh: QLHPartition, pair: HermitianPair) -> SlopeFunctional:
    """det/dim, restricted to the center of the Levi h."""
    if not weights:
        raise ValueError("slope of an empty module")
    rs = pair.root_system
    n = rs.rank
    total = [0] * n
    for chi, m in weights.items():
        total = [t + m * c for t, c in zip(total, chi.coords)]
    num = Weight(tuple(total))
    coords = rs.weight_to_root_coords(num)
    res = tuple(coords[j] for j in central_nodes(pair, qlh))
    return SlopeFunctional(num, sum(weights.values()), res)


def check_equislope(sub: SubmodulePartition, qlh: QLHPartition) -> list[str]:
    """All weights of each V_i restrict to the same central character."""
    out = []
    for i, vi in enumerate(sub.vees):
        vals = {slope({chi: 1}, qlh, sub.pair).value for chi in vi}
        if len(vals) > 1:
            out.append(f"V_{i} carries {len(vals)} distinct central characters")
    return out


def check_slope_identity(sub: SubmodulePartition, qlh: QLHPartition) -> list[str]:
    """``mu(V_i) = mu(V_0) + i * (mu(V_1) - mu(V_0))`` on the central directions."""
    if sub.r == 0:
        return []
    m0 = slope(sub.vees[0], qlh, sub.pair).value
    step = slope(sub.vees[1], qlh, sub.pair) + slope(sub.vees[0], qlh, sub.pair).dual()
    out = []
    for i, vi in enumerate(sub.vees):
        got = slope(vi, qlh, sub.pair).value
        want = tuple(a + i * s for a, s in zip(m0, step))
        if got != want:
            out.append(f"mu(V_{i}) = {got} but the identity predicts {want}")
    return out


def l_simple_roots(pair: HermitianPair, qlh: QLHPartition) -> list[Root]:
    """Indecomposable positive roots of l."""
    rs = pair.root_system
    pos = [rs.roots[k] for k in sorted(qlh.l_roots) if rs.roots[k].height > 0]
    keys = {a.coords for a in pos}
    simple = []
    for a in pos:
        decomposable = any(
            tuple(x - y for x, y in zip(a.coords, b.coords)) in keys for b in pos if b != a)
        if not decomposable:
            simple.append(a)
    return simple


def check_l_tube(sub: SubmodulePartition, qlh: QLHPartition) -> list[str]:
    """The sequence computed inside l has length r and coroot sum h."""
    pair, rs = sub.pair, sub.pair.root_system
    if sub.r == 0:
        return []
    simple = l_simple_roots(pair, qlh)
    nonc = [i for i, a in enumerate(simple) if pair_coweight(rs, a, pair.z) == 2]
    if len(nonc) != 1:
        return [f"l has {len(nonc)} noncompact simple roots"]
    seq = sequence_in_subsystem(rs, simple, nonc[0])
    out = []
    if len(seq.alphas) != sub.r:
        out.append(f"sequence in l has length {len(seq.alphas)} != {sub.r}")
    if coroot_sum(rs, seq.alphas) != sub.h:
        out.append("coroot sum of the sequence in l differs from h")
    return out


def tensor_power_check(pair: HermitianPair, cascade: CascadeResult, k: int) -> list[str]:
    """Compare the bigraded pieces of ``E^{(x)k}`` with ``V^{(x)k}``."""
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2 or 3")
    module = cominuscule_module(pair)
    if module.dimension > TENSOR_DIM_GUARD:
        raise CapacityError(
            f"dim E = {module.dimension} exceeds the enumeration guard {TENSOR_DIM_GUARD}")
    if k == 1:
        return []
    rs = pair.root_system
    graded = grade_by_z(module, pair)
    sub = build_submodule(graded, cascade)
    r = cascade.r
    big: dict[int, Counter] = {}
    for combo in itertools.product(module.entries.items(), repeat=k):
        lam = [sum(c) for c in zip(*(chi.coords for chi, _ in combo))]
        mult = 1
        for _, m in combo:
            mult *= m
        lw = Weight(tuple(lam))
        vz, vh = pair_coweight(rs, lw, pair.z), pair_coweight(rs, lw, cascade.h)
        i = (k * pair.z_max - vz) / 2
        if vh == k * r - 2 * i:
            big.setdefault(int(i), Counter())[lw] += mult
    small: dict[int, Counter] = {}
    flat = [(i, chi, m) for i, v in enumerate(sub.vees) for chi, m in v.items()]
    for combo in itertools.product(flat, repeat=k):
        i = sum(c[0] for c in combo)
        lw = Weight(tuple(sum(c) for c in zip(*(c[1].coords for c in combo))))
        mult = 1
        for c in combo:
            mult *= c[2]
        small.setdefault(i, Counter())[lw] += mult
    out = []
    for i in sorted(set(big) | set(small)):
        if big.get(i, Counter()) != small.get(i, Counter()):
            out.append(f"grade {i}: E^{k} and V^{k} weight multisets differ")
    return out


def dominant_coweights_with_value(pair: HermitianPair, r: int, bound: int = 2) -> list[Coweight]:
    """Dominant coweights with entries in ``0..bound`` and ``<varpi, h'> = r``."""
    rs = pair.root_system
    m = rs.weight_to_root_coords(pair.varpi)
    out = []
    for vals in itertools.product(range(bound + 1), repeat=rs.rank):
        if sum(a * b for a, b in zip(vals, m)) == r:
            out.append(Coweight.of(vals))
    return out


def negative_control(pair: HermitianPair, r: int, bound: int = 2) -> list[tuple[Coweight, int]]:
    """Closure violation counts for every impostor coweight h' != h with ``<varpi,h'> = r``."""
    from .cascade import run_cascade

    true_h = run_cascade(pair, r).h
    module = cominuscule_module(pair)
    graded = grade_by_z(module, pair)
    found = []
    for hp in dominant_coweights_with_value(pair, r, bound):
        if hp == true_h:
            continue
        sub = build_submodule_unchecked(graded, hp, r)
        n = len(check_closure(sub, build_qlh(pair, hp), module))
        found.append((hp, n))
    return found
