"""Exact bookkeeping of Toledo and degree constants.

Quantities are rational multiples of ``vol^a * pi^b`` with ``vol`` and
``pi`` opaque; nothing is ever evaluated numerically.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .hermitian_catalog import HermitianPair


class UnitError(ValueError):
    """Operation mixes incompatible formal units."""


@dataclass(frozen=True)
class FormalQuantity:
    coefficient: Fraction
    vol_power: int = 0
    pi_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        if self.vol_power not in (0, 1):
            raise UnitError(f"vol power {self.vol_power} outside {{0, 1}}")

    @property
    def units(self) -> tuple[int, int]:
        return self.vol_power, self.pi_power

    def _like(self, other: "FormalQuantity") -> None:
        if self.coefficient and other.coefficient and self.units != other.units:
            raise UnitError(f"cannot combine vol^{self.vol_power} pi^{self.pi_power} "
                            f"with vol^{other.vol_power} pi^{other.pi_power}")

    def __add__(self, other: "FormalQuantity") -> "FormalQuantity":
        self._like(other)
        units = self.units if self.coefficient else other.units
        return FormalQuantity(self.coefficient + other.coefficient, *units)

    def __neg__(self) -> "FormalQuantity":
        return FormalQuantity(-self.coefficient, self.vol_power, self.pi_power)

    def __sub__(self, other: "FormalQuantity") -> "FormalQuantity":
        return self + (-other)

    def __mul__(self, other) -> "FormalQuantity":
        if isinstance(other, FormalQuantity):
            return FormalQuantity(self.coefficient * other.coefficient,
                                  self.vol_power + other.vol_power,
                                  self.pi_power + other.pi_power)
        return FormalQuantity(self.coefficient * Fraction(other), self.vol_power, self.pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FormalQuantity":
        if isinstance(other, FormalQuantity):
            return FormalQuantity(self.coefficient / other.coefficient,
                                  self.vol_power - other.vol_power,
                                  self.pi_power - other.pi_power)
        return FormalQuantity(self.coefficient / Fraction(other), self.vol_power, self.pi_power)

    def __lt__(self, other: "FormalQuantity") -> bool:
        self._like(other)
        return self.coefficient < other.coefficient

    def __le__(self, other: "FormalQuantity") -> bool:
        return self == other or self < other

    def __str__(self) -> str:
        parts = [str(self.coefficient)]
        if self.vol_power:
            parts.append("vol")
        if self.pi_power:
            parts.append("pi" if self.pi_power == 1 else f"pi^{self.pi_power}")
        return "*".join(parts)


VOL = FormalQuantity(1, 1, 0)
PI = FormalQuantity(1, 0, 1)
ZERO_DEGREE = FormalQuantity(0, 1, -1)


def toledo_of_degE0(d: FormalQuantity) -> FormalQuantity:
    """``tau = 4 pi deg(E_0)``; a degree carries ``vol / pi``."""
    if d.coefficient and d.units != (1, -1):
        raise UnitError(f"a degree must carry vol/pi, got vol^{d.vol_power} pi^{d.pi_power}")
    return FormalQuantity(4, 0, 1) * FormalQuantity(d.coefficient, 1, -1)


def deg_L_dual() -> FormalQuantity:
    """Foliated degree of the dual tautological line: ``vol / (2 pi)``."""
    return FormalQuantity(Fraction(1, 2), 1, -1)


def deg_canonical(n: int) -> FormalQuantity:
    """Degree of the canonical bundle of an ``n``-dimensional ball quotient."""
    return FormalQuantity(Fraction(n + 1, 4), 1, -1)


def rewording_bound(p: int) -> FormalQuantity:
    """``(p/2) deg(L^vee)``, the degree-side form of the Milnor-Wood bound."""
    if p < 1:
        raise ValueError("p must be positive")
    return Fraction(p, 2) * deg_L_dual()


def mw_bound(p: int) -> FormalQuantity:
    return toledo_of_degE0(rewording_bound(p))


def tube_bound(p: int, n: int, tube: bool = True) -> FormalQuantity:
    """``max(p - 1, (p/2)(n+1)/n) vol`` for tube-type targets."""
    if not tube:
        raise ValueError("the improved bound needs a tube-type target")
    if n < 2 or p < 1:
        raise ValueError("need n >= 2 and p >= 1")
    return max(Fraction(p - 1), Fraction(p * (n + 1), 2 * n)) * VOL


@dataclass(frozen=True)
class BoundReport:
    pair_label: str
    n: int
    p: int
    mw_bound: FormalQuantity
    tube_bound: FormalQuantity | None

    @property
    def strict(self) -> bool:
        return self.tube_bound is not None and self.tube_bound < self.mw_bound

    def as_dict(self) -> dict:
        return {
            "pair": self.pair_label,
            "n": self.n,
            "p": self.p,
            "mw_bound": str(self.mw_bound),
            "tube_bound": None if self.tube_bound is None else str(self.tube_bound),
            "strict": self.strict,
        }


def bound_report(pair: "HermitianPair", n: int) -> BoundReport:
    from .cascade import is_tube_type

    tube = is_tube_type(pair)
    p = pair.rank_p
    return BoundReport(pair.label, n, p, mw_bound(p), tube_bound(p, n) if tube else None)
