"""Dominant orthogonal sequences, the coweight h and the root theta.

The sequence is built by repeatedly taking the highest root of the
subsystem spanned by the current simple set, discarding the simple roots
it does not fix, and recursing into the component that still contains the
noncompact node.  The generic driver works over any set of linearly
independent roots playing the role of simple roots, so it also runs inside
Levi subsystems.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from .errors import ConsistencyError
from .root_core import (Coweight, IntVec, Root, RootSystem, pair_coweight,
                        pair_weight_coroot)

if TYPE_CHECKING:
    from .hermitian_catalog import HermitianPair


@dataclass(frozen=True)
class SequenceData:
    """Raw output of the sequence algorithm, indices refer to ``simple``."""

    simple: tuple[Root, ...]
    alphas: tuple[Root, ...]
    pis: tuple[frozenset[int], ...]
    sigmas: tuple[frozenset[int], ...]


def _solve_in_basis(rs: RootSystem, basis: Sequence[Root]) -> dict[IntVec, tuple[int, ...]]:
    """Coefficients in ``basis`` of every root lying in its nonnegative integer span."""
    # breadth-first from the basis: adding a basis root keeps us in the positive span
    coeffs: dict[IntVec, tuple[int, ...]] = {}
    k = len(basis)
    frontier = []
    for i, b in enumerate(basis):
        c = tuple(int(j == i) for j in range(k))
        coeffs[b.coords] = c
        frontier.append(b.coords)
    while frontier:
        nxt = []
        for v in frontier:
            for i, b in enumerate(basis):
                w = tuple(x + y for x, y in zip(v, b.coords))
                if w not in coeffs and rs.is_root(w):
                    c = list(coeffs[v])
                    c[i] += 1
                    coeffs[w] = tuple(c)
                    nxt.append(w)
        frontier = nxt
    return coeffs


def _coroot_pair(rs: RootSystem, beta: Root, alpha: Root) -> int:
    """``<alpha^vee, beta>``."""
    return pair_weight_coroot(rs, rs.root_to_weight(beta), alpha)


def _component(rs: RootSystem, simple: Sequence[Root], nodes: frozenset[int],
               start: int) -> frozenset[int]:
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for w in nodes:
            if w not in seen and _coroot_pair(rs, simple[w], simple[v]) != 0:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def sequence_in_subsystem(rs: RootSystem, simple: Sequence[Root], zeta: int) -> SequenceData:
    """Run the sequence algorithm with ``simple`` as simple roots and ``simple[zeta]`` noncompact."""
    simple = tuple(simple)
    coeffs = _solve_in_basis(rs, simple)
    pi = _component(rs, simple, frozenset(range(len(simple))), zeta)
    alphas, pis, sigmas = [], [], []
    while True:
        support = [(sum(c), v) for v, c in coeffs.items()
                   if all(c[j] == 0 for j in range(len(simple)) if j not in pi)]
        top = max(h for h, _ in support)
        best = [v for h, v in support if h == top]
        if len(best) != 1:
            raise ConsistencyError(f"no unique highest root on simple set {sorted(pi)}")
        alpha = rs.roots[rs.root_index[best[0]]]
        sigma = frozenset(j for j in pi if _coroot_pair(rs, simple[j], alpha) != 0)
        alphas.append(alpha)
        pis.append(pi)
        sigmas.append(sigma)
        if zeta in sigma:
            break
        pi = _component(rs, simple, pi - sigma, zeta)
    return SequenceData(simple, tuple(alphas), tuple(pis), tuple(sigmas))


def orthogonal_sequence(rs: RootSystem, zeta: int) -> SequenceData:
    """Maximal dominant orthogonal sequence for the node ``zeta`` (0-based)."""
    simple = tuple(rs.simple_root(i) for i in range(rs.rank))
    return sequence_in_subsystem(rs, simple, zeta)


def coroot_sum(rs: RootSystem, alphas: Sequence[Root]) -> Coweight:
    """``alpha_1^vee + ... + alpha_r^vee`` as values on the simple roots."""
    vals = [Fraction(0)] * rs.rank
    for a in alphas:
        c = rs.coroot_as_coweight(a).coords
        vals = [x + y for x, y in zip(vals, c)]
    return Coweight(tuple(vals))


@dataclass(frozen=True, eq=False)
class CascadeResult:
    pair: "HermitianPair"
    r: int
    alphas: tuple[Root, ...]
    pis: tuple[frozenset[int], ...]
    sigmas: tuple[frozenset[int], ...]
    h: Coweight
    theta: Root | None

    @property
    def root_system(self) -> RootSystem:
        return self.pair.root_system

    def pair_h(self, x) -> Fraction:
        return pair_coweight(self.pair.root_system, x, self.h)


def run_cascade(pair: "HermitianPair", r: int) -> CascadeResult:
    """First ``r`` terms of the dominant orthogonal sequence of ``pair``."""
    rs = pair.root_system
    seq = orthogonal_sequence(rs, pair.zeta)
    q = len(seq.alphas)
    if not 0 <= r <= q:
        raise ValueError(f"r={r} out of range: the sequence for {pair.label} has length {q}")
    alphas = seq.alphas[:r]
    h = coroot_sum(rs, alphas)
    return CascadeResult(pair, r, alphas, seq.pis[:r], seq.sigmas[:r], h, theta_for(rs, h))


def theta_for(rs: RootSystem, h: Coweight) -> Root | None:
    """Minimal-height root pairing to 2 with ``h``; ``None`` if there is none."""
    cands = [a for a in rs.positive_roots if pair_coweight(rs, a, h) == 2]
    if not cands:
        return None
    low = min(a.height for a in cands)
    best = [a for a in cands if a.height == low]
    if len(best) != 1:
        raise ConsistencyError(f"theta is not unique: {[a.coords for a in best]}")
    return best[0]


def theta_root(result: CascadeResult) -> Root | None:
    return result.theta


def max_cascade(pair: "HermitianPair") -> CascadeResult:
    """Full sequence, with an exhaustive maximality check inside u_plus."""
    res = run_cascade(pair, pair.rank_p)
    rs = pair.root_system
    for i in pair.u_plus:
        beta = rs.roots[i]
        if all(_coroot_pair(rs, beta, a) == 0 for a in res.alphas):
            raise ConsistencyError(
                f"root {beta.coords} of u_plus is orthogonal to the whole sequence")
    return res


def is_tube_type(pair: "HermitianPair") -> bool:
    tube = max_cascade(pair).h == pair.z
    if tube != (pair.z_max == pair.rank_p):
        raise ConsistencyError(f"tube criteria disagree for {pair.label}")
    return tube


def check_cascade_invariants(res: CascadeResult) -> list[str]:
    """Exhaustive root scans of the sequence laws; returns violation messages."""
    pair, rs = res.pair, res.pair.root_system
    out: list[str] = []
    for a, pi in zip(res.alphas, res.pis):
        sub = [b for b in rs.positive_roots
               if all(c == 0 for j, c in enumerate(b.coords) if j not in pi)]
        if a != max(sub, key=lambda b: b.height):
            out.append(f"{a.coords} is not the highest root on {sorted(pi)}")
        if not a.is_long:
            out.append(f"{a.coords} is short")
        if a.coords[pair.zeta] != 1:
            out.append(f"{a.coords} does not contain the noncompact root")
    for i, a in enumerate(res.alphas):
        for b in res.alphas[i + 1:]:
            if _coroot_pair(rs, b, a) != 0:
                out.append(f"{a.coords} and {b.coords} are not orthogonal")
            for s in (1, -1):
                w = tuple(x + s * y for x, y in zip(a.coords, b.coords))
                if rs.is_root(w):
                    out.append(f"{a.coords} {'+' if s > 0 else '-'} {b.coords} is a root")
    if not res.h.is_dominant():
        out.append(f"h = {res.h.coords} is not dominant")
    for k, a in enumerate(rs.roots):
        v = pair_coweight(rs, a, res.h)
        if v > 2:
            out.append(f"<{a.coords}, h> = {v} > 2")
        if v == 2 and k not in pair.u_plus:
            out.append(f"<{a.coords}, h> = 2 but the root is not in u_plus")
    if pair_coweight(rs, pair.varpi, res.h) != res.r:
        out.append(f"<varpi, h> != {res.r}")
    return out


def display_order(rs: RootSystem) -> list[int]:
    """0-based node order used in the printed Dynkin strings."""
    if rs.family == "E6":
        return [0, 2, 3, 4, 5, 1]
    if rs.family == "E7":
        return [0, 2, 3, 4, 5, 6, 1]
    return list(range(rs.rank))


def dynkin_string(rs: RootSystem, values: Sequence) -> str:
    """Render per-node integers; type D puts the fork as ``(d_n/d_{n-1})``."""
    vals = [str(int(v)) if Fraction(v).denominator == 1 else str(v) for v in values]
    if rs.family == "D":
        n = rs.rank
        return "".join(vals[: n - 2]) + f"({vals[n - 1]}/{vals[n - 2]})"
    return "".join(vals[i] for i in display_order(rs))


def h_string(res: CascadeResult) -> str:
    return dynkin_string(res.root_system, res.h.coords)


def theta_string(res: CascadeResult) -> str:
    return "" if res.theta is None else dynkin_string(res.root_system, res.theta.coords)
