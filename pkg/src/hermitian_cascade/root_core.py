"""Exact root-system arithmetic for the types carrying Hermitian pairs.

Roots are integer vectors in the simple-root basis, weights are integer
vectors in the fundamental-weight basis (Dynkin labels), coweights are
rational vectors in the fundamental-coweight basis.  Every pairing goes
through the Cartan matrix and its exact inverse; nothing here touches
floating point.

Nodes are numbered 0..rank-1 internally, following Bourbaki order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ConfigurationError

FAMILIES = ("A", "B", "C", "D", "E6", "E7")

IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


@dataclass(frozen=True)
class Root:
    coords: IntVec
    is_long: bool

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords), self.is_long)


@dataclass(frozen=True)
class Weight:
    """Dynkin labels: entry ``i`` is the pairing with the i-th simple coroot."""

    coords: IntVec

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)


@dataclass(frozen=True)
class Coweight:
    """Entry ``i`` is the value on the i-th simple root."""

    coords: RatVec

    @classmethod
    def of(cls, values: Iterable) -> "Coweight":
        return cls(tuple(Fraction(v) for v in values))

    def __add__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def as_string(self) -> str:
        return "".join(str(c) for c in self.coords)


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Cartan matrix ``a[i][j] = <alpha_i^vee, alpha_j>`` in Bourbaki numbering."""
    _check_family_rank(family, rank)
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int) -> None:
        a[i][j] = a[j][i] = -1

    if family in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if family == "B":
            # alpha_n short: <alpha_n^vee, alpha_{n-1}> = -2
            a[n - 1][n - 2] = -2
        elif family == "C":
            # alpha_n long
            a[n - 2][n - 1] = -2
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    else:
        # E_n: 1-3-4-5-6(-7), node 2 hangs off node 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    return a


def _check_family_rank(family: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E6": rank == 6,
        "E7": rank == 7,
    }.get(family, False)
    if not ok:
        raise ConfigurationError(f"unsupported root system ({family!r}, {rank!r})")


def _invert(mat: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _simple_sq_lengths(family: str, rank: int) -> tuple[int, ...]:
    # long roots have squared length 2, short ones 1
    if family == "B":
        return (2,) * (rank - 1) + (1,)
    if family == "C":
        return (1,) * (rank - 1) + (2,)
    return (2,) * rank


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    simple_sq: tuple[int, ...]
    roots: tuple[Root, ...] = field(repr=False)

    @property
    def label(self) -> str:
        return self.family if self.family.startswith("E") else f"{self.family}{self.rank}"

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(row) for row in _invert(self.cartan))

    @cached_property
    def root_index(self) -> dict[IntVec, int]:
        return {r.coords: i for i, r in enumerate(self.roots)}

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.height > 0)

    @property
    def root_lengths(self) -> tuple[str, ...]:
        return tuple("long" if r.is_long else "short" for r in self.roots)

    @cached_property
    def gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Invariant form on simple roots, long roots of squared length 2."""
        n = self.rank
        return tuple(
            tuple(Fraction(self.cartan[i][j] * self.simple_sq[i], 2) for j in range(n))
            for i in range(n)
        )

    def simple_root(self, i: int) -> Root:
        return self.roots[self.root_index[tuple(int(j == i) for j in range(self.rank))]]

    def is_root(self, coords: IntVec) -> bool:
        return coords in self.root_index

    def root_sq(self, coords: Sequence[int]) -> int:
        return _sq_len(self.cartan, self.simple_sq, coords)

    def root_to_weight(self, alpha: Root | Sequence[int]) -> Weight:
        c = alpha.coords if isinstance(alpha, Root) else alpha
        return Weight(tuple(sum(row[j] * c[j] for j in range(self.rank)) for row in self.cartan))

    def weight_to_root_coords(self, chi: Weight) -> RatVec:
        """Coordinates of a weight in the simple-root basis (exact rationals)."""
        inv = self.inverse_cartan
        return tuple(sum(inv[i][j] * chi.coords[j] for j in range(self.rank))
                     for i in range(self.rank))

    def root_coords_to_weight(self, coords: Sequence[Fraction]) -> Weight:
        vals = [sum(row[j] * coords[j] for j in range(self.rank)) for row in self.cartan]
        if any(Fraction(v).denominator != 1 for v in vals):
            raise ValueError("vector is not in the weight lattice")
        return Weight(tuple(int(v) for v in vals))

    def fundamental_weight(self, i: int) -> Weight:
        return Weight(tuple(int(j == i) for j in range(self.rank)))

    def rho(self) -> Weight:
        return Weight((1,) * self.rank)

    def coroot_coeffs(self, alpha: Root) -> RatVec:
        """``alpha^vee`` in the simple-coroot basis."""
        sq = self.root_sq(alpha.coords)
        return tuple(Fraction(c * s, sq) for c, s in zip(alpha.coords, self.simple_sq))

    def coroot_as_coweight(self, alpha: Root) -> Coweight:
        """``alpha^vee`` as a coweight: its values on the simple roots."""
        return Coweight(tuple(Fraction(pair_weight_coroot(self, self.root_to_weight(
            self.simple_root(j)), alpha)) for j in range(self.rank)))

    def form(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        """Invariant form on vectors given in the simple-root basis."""
        g = self.gram
        return sum((x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)
                    if x[i] and y[j]), Fraction(0))

    def weight_form(self, chi: Weight, psi: Weight) -> Fraction:
        return self.form(self.weight_to_root_coords(chi), self.weight_to_root_coords(psi))

    @cached_property
    def dynkin_adjacency(self) -> tuple[frozenset[int], ...]:
        return tuple(
            frozenset(j for j in range(self.rank) if j != i and self.cartan[i][j] != 0)
            for i in range(self.rank)
        )

    def component(self, nodes: Iterable[int], start: int) -> frozenset[int]:
        """Connected component of ``start`` inside the Dynkin subdiagram on ``nodes``."""
        nodes = set(nodes)
        if start not in nodes:
            return frozenset()
        seen, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for w in self.dynkin_adjacency[v]:
                if w in nodes and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    def is_connected(self, nodes: Iterable[int]) -> bool:
        nodes = set(nodes)
        return bool(nodes) and self.component(nodes, next(iter(nodes))) == nodes


def _sq_len(cartan, simple_sq, coords) -> int:
    n = len(coords)
    total = Fraction(0)
    for i in range(n):
        if coords[i]:
            for j in range(n):
                if coords[j]:
                    total += coords[i] * coords[j] * Fraction(cartan[i][j] * simple_sq[i], 2)
    assert total.denominator == 1
    return int(total)


def reflection_closure(cartan: Sequence[Sequence[int]], generators: Iterable[IntVec],
                       reflect_by: Sequence[int] | None = None) -> set[IntVec]:
    """Closure of ``generators`` under simple reflections (root coordinates)."""
    n = len(cartan)
    idx = list(range(n)) if reflect_by is None else list(reflect_by)
    seen = set(generators)
    frontier = list(seen)
    while frontier:
        nxt = []
        for c in frontier:
            for i in idx:
                k = sum(cartan[i][j] * c[j] for j in range(n))
                if k:
                    d = list(c)
                    d[i] -= k
                    d = tuple(d)
                    if d not in seen:
                        seen.add(d)
                        nxt.append(d)
        frontier = nxt
    return seen


def expected_root_count(family: str, rank: int) -> int:
    n = rank
    return {
        "A": n * (n + 1),
        "B": 2 * n * n,
        "C": 2 * n * n,
        "D": 2 * n * (n - 1),
        "E6": 72,
        "E7": 126,
    }[family]


def build_root_system(family: str, rank: int) -> RootSystem:
    """Root system of the given type; roots sorted by (height, coords)."""
    family = family.upper()
    cartan = cartan_matrix(family, rank)
    sq = _simple_sq_lengths(family, rank)
    simples = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    coords = reflection_closure(cartan, simples)
    roots = sorted(coords, key=lambda c: (sum(c), c))
    long_sq = max(sq)
    return RootSystem(
        family=family,
        rank=rank,
        cartan=tuple(tuple(r) for r in cartan),
        simple_sq=sq,
        roots=tuple(Root(c, _sq_len(cartan, sq, c) == long_sq) for c in roots),
    )


def pair_weight_coroot(rs: RootSystem, chi: Weight, alpha: Root) -> int:
    """``<chi, alpha^vee>``; integral for every weight and root."""
    sq = rs.root_sq(alpha.coords)
    num = sum(c * s * l for c, s, l in zip(alpha.coords, rs.simple_sq, chi.coords))
    q, rem = divmod(num, sq)
    assert rem == 0, "non-integral coroot pairing"
    return q


def pair_coweight(rs: RootSystem, x: Weight | Root, c: Coweight) -> Fraction:
    if isinstance(x, Root):
        coords: Sequence = x.coords
    else:
        coords = rs.weight_to_root_coords(x)
    return sum((a * b for a, b in zip(coords, c.coords)), Fraction(0))


def reflect(rs: RootSystem, chi: Weight, alpha: Root) -> Weight:
    k = pair_weight_coroot(rs, chi, alpha)
    if k == 0:
        return chi
    aw = rs.root_to_weight(alpha)
    return Weight(tuple(x - k * y for x, y in zip(chi.coords, aw.coords)))


def roots_supported_on(rs: RootSystem, subset: Iterable[int]) -> list[Root]:
    s = set(subset)
    return [r for r in rs.roots if all(c == 0 for i, c in enumerate(r.coords) if i not in s)]


def highest_root(rs: RootSystem, subset: Iterable[int]) -> Root:
    """Highest root of the subsystem spanned by the simple roots in ``subset``."""
    s = frozenset(subset)
    if not s:
        raise ValueError("highest_root needs a nonempty set of simple roots")
    if not rs.is_connected(s):
        raise ValueError(f"simple roots {sorted(s)} do not form a connected subdiagram")
    sub = roots_supported_on(rs, s)
    top = max(r.height for r in sub)
    best = [r for r in sub if r.height == top]
    assert len(best) == 1
    return best[0]
