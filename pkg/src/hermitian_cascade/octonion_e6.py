"""Split octonions and the explicit graded model of the 27-dimensional E6 module.

``E_1`` is identified with pairs of octonions and ``E_2`` with triples
``(t, z, t')``.  The quadratic map ``kappa(u, v) = (N(u), uv, N(v))`` and its
polarization give the nilpotent action from ``E_1`` to ``E_2``; ranks of the
induced maps stratify ``E_1`` into three orbits.

Octonions are Zorn vector matrices ``(a, v; w, b)`` with rational entries
and norm ``N = ab - v.w``.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import (RationalMatrix, Vec, intersection_basis, intersection_dim, span_basis,
                     span_rank)

DEFAULT_SEED = 0xC0FFEE
_ZERO = Fraction(0)


def _dot(v, w) -> Fraction:
    return v[0] * w[0] + v[1] * w[1] + v[2] * w[2]


def _cross(v, w) -> tuple[Fraction, Fraction, Fraction]:
    return (v[1] * w[2] - v[2] * w[1], v[2] * w[0] - v[0] * w[2], v[0] * w[1] - v[1] * w[0])


@dataclass(frozen=True)
class SplitOctonion:
    a: Fraction
    v: tuple[Fraction, Fraction, Fraction]
    w: tuple[Fraction, Fraction, Fraction]
    b: Fraction

    @classmethod
    def from_coords(cls, c: Sequence) -> "SplitOctonion":
        c = [Fraction(x) for x in c]
        if len(c) != 8:
            raise ValueError("an octonion has 8 coordinates")
        return cls(c[0], tuple(c[1:4]), tuple(c[4:7]), c[7])

    @classmethod
    def zero(cls) -> "SplitOctonion":
        return cls.from_coords([0] * 8)

    @classmethod
    def one(cls) -> "SplitOctonion":
        return cls.from_coords([1, 0, 0, 0, 0, 0, 0, 1])

    @classmethod
    def basis(cls, k: int) -> "SplitOctonion":
        return cls.from_coords([int(i == k) for i in range(8)])

    @property
    def coords(self) -> Vec:
        return (self.a, *self.v, *self.w, self.b)

    def __mul__(self, o: "SplitOctonion") -> "SplitOctonion":
        return oct_mul(self, o)

    def __add__(self, o: "SplitOctonion") -> "SplitOctonion":
        return SplitOctonion.from_coords([x + y for x, y in zip(self.coords, o.coords)])

    def scale(self, s) -> "SplitOctonion":
        return SplitOctonion.from_coords([Fraction(s) * x for x in self.coords])

    def conj(self) -> "SplitOctonion":
        return SplitOctonion(self.b, tuple(-x for x in self.v), tuple(-x for x in self.w), self.a)

    def is_zero(self) -> bool:
        return not any(self.coords)


def oct_mul(x: SplitOctonion, y: SplitOctonion) -> SplitOctonion:
    a = x.a * y.a + _dot(x.v, y.w)
    b = x.b * y.b + _dot(x.w, y.v)
    cw = _cross(x.w, y.w)
    cv = _cross(x.v, y.v)
    v = tuple(x.a * p + y.b * q - r for p, q, r in zip(y.v, x.v, cw))
    w = tuple(y.a * p + x.b * q + r for p, q, r in zip(x.w, y.w, cv))
    return SplitOctonion(a, v, w, b)


def oct_norm(x: SplitOctonion) -> Fraction:
    return x.a * x.b - _dot(x.v, x.w)


def oct_bilinear(x: SplitOctonion, y: SplitOctonion) -> Fraction:
    """Polarization of the norm: ``B(x, x) = N(x)``."""
    return (x.a * y.b + y.a * x.b - _dot(x.v, y.w) - _dot(y.v, x.w)) / 2


@dataclass(frozen=True)
class E1Vector:
    u: SplitOctonion
    v: SplitOctonion

    @classmethod
    def from_coords(cls, c: Sequence) -> "E1Vector":
        return cls(SplitOctonion.from_coords(c[:8]), SplitOctonion.from_coords(c[8:]))

    @classmethod
    def basis(cls, k: int) -> "E1Vector":
        return cls.from_coords([int(i == k) for i in range(16)])

    @property
    def coords(self) -> Vec:
        return self.u.coords + self.v.coords

    def __add__(self, o: "E1Vector") -> "E1Vector":
        return E1Vector(self.u + o.u, self.v + o.v)

    def scale(self, s) -> "E1Vector":
        return E1Vector(self.u.scale(s), self.v.scale(s))

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()


@dataclass(frozen=True)
class E2Vector:
    t: Fraction
    z: SplitOctonion
    t2: Fraction

    @property
    def coords(self) -> Vec:
        return (self.t, *self.z.coords, self.t2)

    def is_zero(self) -> bool:
        return not any(self.coords)


def kappa(x: E1Vector) -> E2Vector:
    return E2Vector(oct_norm(x.u), x.u * x.v, oct_norm(x.v))


def kappa_polar(x: E1Vector, y: E1Vector) -> E2Vector:
    """Symmetric bilinear form with ``kappa_polar(x, x) = kappa(x)``."""
    mid = (x.u * y.v + y.u * x.v).scale(Fraction(1, 2))
    return E2Vector(oct_bilinear(x.u, y.u), mid, oct_bilinear(x.v, y.v))


def _structure_constants() -> list[tuple[int, int, int, Fraction]]:
    """Nonzero ``(i, j, k, c)`` with ``e_i e_j = sum_k c e_k``."""
    out = []
    for i in range(8):
        for j in range(8):
            prod = SplitOctonion.basis(i) * SplitOctonion.basis(j)
            out.extend((i, j, k, c) for k, c in enumerate(prod.coords) if c)
    return out


_MUL = _structure_constants()
_BILINEAR = [[oct_bilinear(SplitOctonion.basis(i), SplitOctonion.basis(j)) for j in range(8)]
             for i in range(8)]


def _left_mult(x: Sequence[Fraction]) -> list[list[Fraction]]:
    m = [[_ZERO] * 8 for _ in range(8)]
    for i, j, k, c in _MUL:
        if x[i]:
            m[k][j] += c * x[i]
    return m


def _right_mult(y: Sequence[Fraction]) -> list[list[Fraction]]:
    m = [[_ZERO] * 8 for _ in range(8)]
    for i, j, k, c in _MUL:
        if y[j]:
            m[k][i] += c * y[j]
    return m


def lambda2(x: E1Vector) -> RationalMatrix:
    """10x16 matrix of ``y -> kappa_polar(x, y)``."""
    u, v = x.u.coords, x.v.coords
    half = Fraction(1, 2)
    top = [sum((u[i] * _BILINEAR[i][j] for i in range(8) if u[i]), _ZERO) for j in range(8)]
    bot = [sum((v[i] * _BILINEAR[i][j] for i in range(8) if v[i]), _ZERO) for j in range(8)]
    rv, lu = _right_mult(v), _left_mult(u)
    rows = [top + [_ZERO] * 8]
    rows += [[half * c for c in rv[k]] + [half * c for c in lu[k]] for k in range(8)]
    rows.append([_ZERO] * 8 + bot)
    return RationalMatrix(tuple(tuple(r) for r in rows), 16)


def lambda1(x: E1Vector) -> RationalMatrix:
    """16x1 matrix of ``1 -> x``."""
    return RationalMatrix.from_columns([x.coords], 16)


def rank_class(x: E1Vector) -> int:
    if x.is_zero():
        return 0
    return 1 if kappa(x).is_zero() else 2


def e2_form(p: E2Vector, q: E2Vector) -> Fraction:
    """Polarization of ``tt' - N(z)`` on E_2."""
    return (p.t * q.t2 + q.t * p.t2) / 2 - oct_bilinear(p.z, q.z)


def _e2(c: Sequence) -> E2Vector:
    return E2Vector(Fraction(c[0]), SplitOctonion.from_coords(c[1:9]), Fraction(c[9]))


def image_is_isotropic(x: E1Vector) -> bool:
    basis = [_e2(c) for c in lambda2(x).column_space()]
    return all(e2_form(p, q) == 0 for p in basis for q in basis)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_gcd(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    """Euclid over Q; coefficient lists in increasing degree."""
    p, q = _poly_trim(p), _poly_trim(q)
    while q:
        r = list(p)
        while len(r) >= len(q) and r:
            f = r[-1] / q[-1]
            shift = len(r) - len(q)
            for i, c in enumerate(q):
                r[shift + i] -= f * c
            r = _poly_trim(r)
        p, q = q, r
    return p


def _independent(x: E1Vector, y: E1Vector) -> bool:
    return span_rank([x.coords, y.coords], 16) == 2


def pencil_all_rank2(x: E1Vector, y: E1Vector) -> bool:
    """True iff every nonzero ``s x + t y`` (over the algebraic closure) has rank 2."""
    if not _independent(x, y):
        raise ValueError("pencil endpoints must be linearly independent")
    kx, kxy, ky = kappa(x).coords, kappa_polar(x, y).coords, kappa(y).coords
    if all(a == 0 for a in kx):
        return False
    # kappa(s x + t y) = s^2 kx + 2 s t kxy + t^2 ky; no root at t = 0 since kx != 0
    polys = [_poly_trim([c, 2 * b, a]) for a, b, c in zip(kx, kxy, ky)]
    g: list[Fraction] = []
    for p in polys:
        if p:
            g = _poly_gcd(g, p) if g else p
    return len(g) <= 1


def kernel_intersection_dim(x: E1Vector, y: E1Vector) -> int:
    """``dim(Ker A ∩ Ker B) = 16 - rank [A; B]``."""
    a, b = lambda2(x), lambda2(y)
    return 16 - RationalMatrix(a.rows + b.rows, 16).rank()


def image_intersection_dim(x: E1Vector, y: E1Vector) -> int:
    """``dim(Im A ∩ Im B) = rank A + rank B - rank [A | B]``."""
    a, b = lambda2(x), lambda2(y)
    joined = RationalMatrix(tuple(r + s for r, s in zip(a.rows, b.rows)), 32)
    return a.rank() + b.rank() - joined.rank()


def dual_model_mu2(w: E1Vector) -> RationalMatrix:
    """16x10 map ``E_2-coords -> E_1-coords``: transpose of the mirrored quadratic map."""
    return lambda2(w).transpose()


def dual_kernel_intersection_dim(w: E1Vector, z: E1Vector) -> int:
    return intersection_dim(dual_model_mu2(w).nullspace(), dual_model_mu2(z).nullspace(), 10)


def nilpotent_action(x: E1Vector) -> RationalMatrix:
    """27x27 matrix of ``y = lambda1(x) + lambda2(x)`` on ``E_0 + E_1 + E_2``."""
    rows = [[Fraction(0)] * 27 for _ in range(27)]
    for i, c in enumerate(x.coords):
        rows[1 + i][0] = c
    l2 = lambda2(x)
    for i in range(10):
        for j in range(16):
            rows[17 + i][1 + j] = l2.rows[i][j]
    return RationalMatrix.of(rows, 27)


_GRADE_SLICES = ((0, 1), (1, 17), (17, 27))


def _coordinate_block(i: int) -> list[Vec]:
    lo, hi = _GRADE_SLICES[i]
    return [tuple(Fraction(int(k == j)) for k in range(27)) for j in range(lo, hi)]


def filtration(y: RationalMatrix, k: int, depth: int = 3) -> list[Vec]:
    """Basis of ``F_k = sum over l of Ker y^(k+l+1) ∩ Im y^l``."""
    pieces: list[Vec] = []
    for l in range(depth + 1):
        e = k + l + 1
        if e < 0:
            continue
        ker = (y ** e).nullspace() if e > 0 else []
        img = (y ** l).column_space()
        pieces.extend(intersection_basis(ker, img, y.nrows))
    return span_basis(pieces, y.nrows)


def filtration_dims(x: E1Vector) -> tuple[int, ...]:
    """Dimensions of ``V_i = E_i ∩ F_(r-2i)`` for ``i = 0..r``, ``r = rank_class(x)``."""
    r = rank_class(x)
    y = nilpotent_action(x)
    if not (y ** (r + 1)).is_zero():
        raise AssertionError(f"y^{r + 1} != 0 for an element of rank {r}")
    dims = []
    for i in range(r + 1):
        f = filtration(y, r - 2 * i)
        dims.append(intersection_dim(_coordinate_block(i), f, 27) if f else 0)
    return tuple(dims)


# determinant exponents of a formal tensor expression

class ExpressionError(ValueError):
    """Malformed tensor expression."""


_TOKEN = re.compile(r"\s*(∧²|S²|L2|S2|⊕|⊗|\+|\*|\(|\)|[A-Za-z][A-Za-z0-9_]*)")


def _tokenize(expr: str) -> list[str]:
    pos, out = 0, []
    expr = expr.rstrip()
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m:
            raise ExpressionError(f"unexpected input at {expr[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens: list[str], dims: Mapping[str, int], actor: str):
        self.toks, self.i, self.dims, self.actor = tokens, 0, dims, actor

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, want: str | None = None) -> str:
        t = self.peek()
        if t is None or (want is not None and t != want):
            raise ExpressionError(f"expected {want or 'a term'}, got {t!r}")
        self.i += 1
        return t

    def parse(self) -> tuple[int, int]:
        val = self.sum()
        if self.peek() is not None:
            raise ExpressionError(f"trailing token {self.peek()!r}")
        return val

    def sum(self) -> tuple[int, int]:
        d, e = self.prod()
        while self.peek() in ("⊕", "+"):
            self.take()
            d2, e2 = self.prod()
            d, e = d + d2, e + e2
        return d, e

    def prod(self) -> tuple[int, int]:
        d, e = self.unary()
        while self.peek() in ("⊗", "*"):
            self.take()
            d2, e2 = self.unary()
            d, e = d * d2, e * d2 + e2 * d
        return d, e

    def unary(self) -> tuple[int, int]:
        t = self.peek()
        if t in ("∧²", "S²", "L2", "S2"):
            self.take()
            if t in ("L2", "S2"):
                self.take("(")
                d, e = self.sum()
                self.take(")")
            else:
                d, e = self.unary()
            if t in ("∧²", "L2"):
                return d * (d - 1) // 2, e * (d - 1)
            return d * (d + 1) // 2, e * (d + 1)
        if t == "(":
            self.take()
            val = self.sum()
            self.take(")")
            return val
        name = self.take()
        if name not in self.dims:
            raise ExpressionError(f"unknown factor {name!r}")
        return self.dims[name], int(name == self.actor)


def tensor_dimension(expr: str, dims: Mapping[str, int]) -> int:
    return _Parser(_tokenize(expr), dims, "").parse()[0]


def det_exponent_calculus(expr: str, actor: str, dims: Mapping[str, int]) -> int:
    """Exponent of ``det`` of the actor factor on the whole space."""
    if actor not in dims:
        raise ExpressionError(f"actor {actor!r} is not a factor")
    return _Parser(_tokenize(expr), dims, actor).parse()[1]


E6_BRANCHING = "∧²V⊗S²B ⊕ S²V⊗∧²B ⊕ V⊗A⊗B"
E6_BRANCHING_DIMS = {"V": 3, "A": 2, "B": 2}


def e6_exponent_pair() -> tuple[int, int]:
    """Unordered exponent pair of the two unitary factors, sorted."""
    return tuple(sorted(det_exponent_calculus(E6_BRANCHING, f, E6_BRANCHING_DIMS)
                        for f in ("A", "B")))


def su_exponents(n: int, p: int, r: int) -> tuple[int, int]:
    dims = {"N": n + 1, "P": p, "R": r}
    expr = "N⊗P ⊕ R"
    return det_exponent_calculus(expr, "P", dims), det_exponent_calculus(expr, "R", dims)


# randomized suites

def random_octonion(rng: random.Random, lo: int = -3, hi: int = 3) -> SplitOctonion:
    return SplitOctonion.from_coords([rng.randint(lo, hi) for _ in range(8)])


def random_isotropic(rng: random.Random) -> SplitOctonion:
    while True:
        c = [Fraction(rng.randint(-3, 3)) for _ in range(8)]
        if c[0] == 0:
            continue
        c[7] = _dot(c[1:4], c[4:7]) / c[0]
        return SplitOctonion.from_coords(c)


def random_e1(rng: random.Random) -> E1Vector:
    return E1Vector(random_octonion(rng), random_octonion(rng))


def random_rank1(rng: random.Random) -> E1Vector:
    """``(u, conj(u) w)`` or ``(w conj(u), u)`` with ``N(u) = 0``; kappa vanishes by alternativity."""
    while True:
        u, w = random_isotropic(rng), random_octonion(rng)
        if rng.random() < 0.5:
            x = E1Vector(u, u.conj() * w)
        else:
            x = E1Vector(w * u.conj(), u)
        if not x.is_zero():
            return x


def random_rank2_pencil(rng: random.Random) -> tuple[E1Vector, E1Vector]:
    while True:
        x, y = random_e1(rng), random_e1(rng)
        if _independent(x, y) and pencil_all_rank2(x, y):
            return x, y


def _pick_trial(rng: random.Random, t: int) -> E1Vector:
    kind = t % 4
    if kind == 0 and t % 40 == 0:
        return E1Vector(SplitOctonion.zero(), SplitOctonion.zero())
    if kind in (1, 2):
        return random_rank1(rng)
    return random_e1(rng)


def run_octonion_suite(seed: int = DEFAULT_SEED, trials: int = 1000, pencils: int = 200,
                       pairs: int = 200) -> dict:
    """Seeded property sweep; returns counts and the first violations by trial index."""
    rng = random.Random(seed)
    expected = {0: 0, 1: 5, 2: 9}
    report: dict = {"seed": seed, "violations": []}

    agree, classes = 0, {0: 0, 1: 0, 2: 0}
    for t in range(trials):
        x = _pick_trial(rng, t)
        c, rk = rank_class(x), lambda2(x).rank()
        classes[c] += 1
        if rk == expected[c]:
            agree += 1
        else:
            report["violations"].append(f"trial {t}: class {c} but rank {rk}")
    report["rank_agreement"] = agree
    report["rank_classes"] = classes

    norm_ok = 0
    for t in range(trials):
        a, b = random_octonion(rng), random_octonion(rng)
        if oct_norm(a * b) == oct_norm(a) * oct_norm(b):
            norm_ok += 1
        else:
            report["violations"].append(f"norm trial {t} not multiplicative")
    report["norm_multiplicative"] = norm_ok

    kern_ok = 0
    for t in range(pencils):
        x, y = random_rank2_pencil(rng)
        d = kernel_intersection_dim(x, y)
        if d <= 3:
            kern_ok += 1
        else:
            report["violations"].append(f"pencil {t}: kernel intersection {d}")
    report["pencil_kernel_ok"] = kern_ok

    img_ok = 0
    for t in range(pairs):
        while True:
            x, y = random_rank1(rng), random_rank1(rng)
            if _independent(x, y):
                break
        d = image_intersection_dim(x, y)
        if d % 2 == 1 and d <= 3:
            img_ok += 1
        else:
            report["violations"].append(f"rank-1 pair {t}: image intersection {d}")
    report["rank1_image_ok"] = img_ok
    report["passed"] = not report["violations"]
    return report
