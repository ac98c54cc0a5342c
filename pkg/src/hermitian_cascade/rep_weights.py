"""Weight systems of highest-weight modules and the z-grading.

Multiplicities come from Freudenthal's recursion over dominant weights;
the Weyl product formula is kept alongside as an independent oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Iterator

from .errors import ConsistencyError
from .root_core import RootSystem, Weight, pair_coweight, pair_weight_coroot

if TYPE_CHECKING:
    from .hermitian_catalog import HermitianPair


def _weight_gram(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    # (chi, psi) = l_chi^T (A^{-1})^T G A^{-1} l_psi
    n, inv, g = rs.rank, rs.inverse_cartan, rs.gram
    tmp = [[sum(g[i][k] * inv[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return tuple(tuple(sum(inv[k][i] * tmp[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _form(gram, a, b) -> Fraction:
    return sum((a[i] * gram[i][j] * b[j] for i in range(len(a)) if a[i]
                for j in range(len(b)) if b[j]), Fraction(0))


def _depth(rs: RootSystem, top: Weight, chi: Weight) -> int:
    """Height of ``top - chi`` in the simple-root basis."""
    d = sum(rs.weight_to_root_coords(top - chi), Fraction(0))
    if d.denominator != 1:
        raise ConsistencyError(f"{chi.coords} is not in the root lattice coset of {top.coords}")
    return int(d)


def dominant_conjugate(rs: RootSystem, chi: Weight) -> Weight:
    c = list(chi.coords)
    while True:
        i = next((k for k, v in enumerate(c) if v < 0), None)
        if i is None:
            return Weight(tuple(c))
        k = c[i]
        c = [v - k * rs.cartan[j][i] for j, v in enumerate(c)]


def weyl_orbit(rs: RootSystem, chi: Weight) -> set[Weight]:
    seen = {chi}
    frontier = [chi]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rs.rank):
                k = w.coords[i]
                if k:
                    u = Weight(tuple(v - k * rs.cartan[j][i] for j, v in enumerate(w.coords)))
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
        frontier = nxt
    return seen


@dataclass(frozen=True, eq=False)
class WeightedModule:
    root_system: RootSystem = field(repr=False)
    highest_weight: Weight
    entries: dict[Weight, int] = field(repr=False)

    @property
    def dimension(self) -> int:
        return sum(self.entries.values())

    @property
    def weights(self) -> list[Weight]:
        return list(self.entries)

    def __contains__(self, chi: Weight) -> bool:
        return chi in self.entries

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.entries)

    def mult(self, chi: Weight) -> int:
        return self.entries.get(chi, 0)

    @property
    def lowest_weight(self) -> Weight:
        return next(reversed(self.entries))


def _dominant_weights_below(rs: RootSystem, lam: Weight) -> list[Weight]:
    pos = [rs.root_to_weight(a) for a in rs.positive_roots]
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for a in pos:
                u = w - a
                if u.is_dominant() and u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen, key=lambda w: (_depth(rs, lam, w), w.coords))


@lru_cache(maxsize=64)
def _weight_system_cached(rs: RootSystem, lam: Weight) -> WeightedModule:
    gram = _weight_gram(rs)
    pos = [(a, rs.root_to_weight(a)) for a in rs.positive_roots]
    rho = rs.rho()
    lr = lam + rho
    top = _form(gram, lr.coords, lr.coords)
    dom = _dominant_weights_below(rs, lam)
    domset = set(dom)
    mult: dict[Weight, int] = {}

    def m(chi: Weight) -> int:
        d = dominant_conjugate(rs, chi)
        return mult.get(d, 0) if d in domset else 0

    for mu in dom:
        if mu == lam:
            mult[mu] = 1
            continue
        acc = Fraction(0)
        for _, aw in pos:
            a_form = None
            k = 1
            while True:
                nu = Weight(tuple(x + k * y for x, y in zip(mu.coords, aw.coords)))
                if dominant_conjugate(rs, nu) not in domset:
                    break
                mn = m(nu)
                if mn:
                    if a_form is None:
                        a_form = aw.coords
                    acc += mn * _form(gram, nu.coords, a_form)
                k += 1
        mr = mu + rho
        val = 2 * acc / (top - _form(gram, mr.coords, mr.coords))
        if val.denominator != 1 or val < 0:
            raise ConsistencyError(f"non-integral multiplicity {val} at {mu.coords}")
        mult[mu] = int(val)

    entries: dict[Weight, int] = {}
    for mu in dom:
        if mult[mu]:
            for w in weyl_orbit(rs, mu):
                entries[w] = mult[mu]
    ordered = sorted(entries, key=lambda w: (_depth(rs, lam, w), w.coords))
    return WeightedModule(rs, lam, {w: entries[w] for w in ordered})


def weight_system(rs: RootSystem, lam: Weight) -> WeightedModule:
    """All weights of the irreducible module of highest weight ``lam``."""
    if len(lam.coords) != rs.rank or not lam.is_dominant():
        raise ValueError(f"highest weight {lam.coords} is not dominant for {rs.label}")
    return _weight_system_cached(rs, lam)


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    if not lam.is_dominant():
        raise ValueError(f"highest weight {lam.coords} is not dominant")
    lr = lam + rs.rho()
    num, den = Fraction(1), Fraction(1)
    for a in rs.positive_roots:
        num *= pair_weight_coroot(rs, lr, a)
        den *= pair_weight_coroot(rs, rs.rho(), a)
    val = num / den
    assert val.denominator == 1
    return int(val)


@dataclass(frozen=True, eq=False)
class GradedModule:
    base: WeightedModule = field(repr=False)
    pair: "HermitianPair" = field(repr=False)
    grades: tuple[dict[Weight, int], ...] = field(repr=False)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(sum(g.values()) for g in self.grades)

    def grade_of(self, chi: Weight) -> int:
        return int((self.pair.z_max - pair_coweight(self.pair.root_system, chi, self.pair.z)) / 2)


def cominuscule_module(pair: "HermitianPair") -> WeightedModule:
    return weight_system(pair.root_system, pair.varpi)


def grade_by_z(module: WeightedModule, pair: "HermitianPair") -> GradedModule:
    """Split the weights by ``<chi, z> = z_max - 2i``, ``i = 0..p``."""
    rs = pair.root_system
    p = pair.rank_p
    grades: list[dict[Weight, int]] = [{} for _ in range(p + 1)]
    for chi, m in module.entries.items():
        i = (pair.z_max - pair_coweight(rs, chi, pair.z)) / 2
        if i.denominator != 1 or not 0 <= i <= p:
            raise ConsistencyError(
                f"weight {chi.coords} has <chi,z> outside z_max - 2i, 0 <= i <= {p}")
        grades[int(i)][chi] = m
    g = GradedModule(module, pair, tuple(grades))
    if any(d == 0 for d in g.dims):
        raise ConsistencyError(f"empty grade in {g.dims}")
    if g.dims[0] != 1 or g.dims[1] != len(pair.u_minus):
        raise ConsistencyError(f"grade dims {g.dims} contradict d0 = 1, d1 = dim u_minus")
    return g


def check_weight2(module: WeightedModule, rs: RootSystem) -> list[str]:
    """Pairings with coroots stay in [-2, 2], and +-2 only against short roots."""
    out = []
    for chi in module:
        for a in rs.roots:
            v = pair_weight_coroot(rs, chi, a)
            if abs(v) > 2 or (abs(v) == 2 and a.is_long):
                out.append(f"<{chi.coords}, {a.coords}^vee> = {v}"
                           f"{' at a long root' if a.is_long else ''}")
    return out


def check_long_root_strings(module: WeightedModule, rs: RootSystem) -> list[str]:
    """Long-root strings through weights have length at most one, with equal multiplicities."""
    out = []
    for a in rs.roots:
        if not a.is_long:
            continue
        aw = rs.root_to_weight(a)
        for chi, m in module.entries.items():
            v = pair_weight_coroot(rs, chi, a)
            nu = chi - aw
            if v == 1:
                if module.mult(nu) != m:
                    out.append(f"dim E_{nu.coords} = {module.mult(nu)} != dim E_{chi.coords} = {m}")
            elif v <= 0 and nu in module:
                out.append(f"{chi.coords} - {a.coords} is a weight though <chi, alpha^vee> = {v}")
            elif v > 1:
                out.append(f"<{chi.coords}, {a.coords}^vee> = {v} > 1 at a long root")
    return out
