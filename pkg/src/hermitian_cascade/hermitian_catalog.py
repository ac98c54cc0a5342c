"""Irreducible Hermitian pairs (root system, cominuscule node).

The static catalog file ``data/catalog.json`` maps each family key to its
Dynkin type, the cominuscule node in Bourbaki numbering, the display order
used for Dynkin-diagram strings, the representative parameters used for
reports, and the transcription of the table of dominant orthogonal
sequences.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

from .errors import ConfigurationError, ConsistencyError
from .root_core import Coweight, Root, RootSystem, Weight, build_root_system, pair_coweight

CATALOG_RESOURCE = "catalog.json"


def _eval_expr(expr: str, env: Mapping[str, int]) -> int:
    """Evaluate a tiny integer expression: sums/differences of products."""
    expr = expr.replace(" ", "")
    if not re.fullmatch(r"[0-9a-z*+\-]+", expr):
        raise ConfigurationError(f"malformed catalog expression {expr!r}")
    total = 0
    for sign, term in re.findall(r"([+-]?)([^+-]+)", expr):
        val = 1
        for factor in term.split("*"):
            if factor.isdigit():
                val *= int(factor)
            elif factor in env:
                val *= int(env[factor])
            else:
                raise ConfigurationError(f"unknown parameter {factor!r} in {expr!r}")
        total += -val if sign == "-" else val
    return total


def load_catalog(path: str | Path | None = None) -> dict[str, Any]:
    if path is None:
        text = resources.files("hermitian_cascade.data").joinpath(CATALOG_RESOURCE).read_text(
            encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"catalog file is not valid JSON: {exc}") from exc


@lru_cache(maxsize=None)
def _default_catalog() -> dict[str, Any]:
    return load_catalog()


@dataclass(frozen=True, eq=False)
class HermitianPair:
    key: str
    params: tuple[tuple[str, int], ...]
    root_system: RootSystem = field(repr=False)
    zeta: int
    varpi: Weight
    z: Coweight
    u_plus: tuple[int, ...] = field(repr=False)
    u_minus: tuple[int, ...] = field(repr=False)
    k_roots: tuple[int, ...] = field(repr=False)
    dim_u_plus: int
    rank_p: int
    z_max: Fraction
    fano_index: int
    real_form_label: str
    row_label: str

    @property
    def label(self) -> str:
        return self.real_form_label

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(self.params)

    @property
    def zeta_root(self) -> Root:
        return self.root_system.simple_root(self.zeta)

    def roots(self, idx: tuple[int, ...]) -> list[Root]:
        return [self.root_system.roots[i] for i in idx]

    def descriptor(self) -> dict[str, Any]:
        rs = self.root_system
        return {
            "key": self.key,
            "params": self.param_dict,
            "type": rs.label,
            "zeta_node": self.zeta + 1,
            "real_form": self.real_form_label,
        }


def is_cominuscule(rs: RootSystem, node: int) -> bool:
    return all(abs(r.coords[node]) <= 1 for r in rs.roots)


def _offending_root(rs: RootSystem, node: int) -> Root | None:
    return next((r for r in rs.roots if abs(r.coords[node]) >= 2), None)


def family_spec(key: str, catalog: Mapping[str, Any] | None = None) -> dict[str, Any]:
    catalog = catalog or _default_catalog()
    try:
        return catalog["families"][key]
    except KeyError:
        known = ", ".join(sorted(catalog["families"]))
        raise ConfigurationError(f"unknown pair family {key!r}; catalog has: {known}") from None


def build_pair_from_key(key: str, params: Mapping[str, int] | None = None,
                        catalog: Mapping[str, Any] | None = None) -> HermitianPair:
    """Instantiate a catalog family with concrete parameters."""
    spec = family_spec(key, catalog)
    params = dict(params or {})
    missing = [p for p in spec["params"] if p not in params]
    if missing:
        raise ConfigurationError(f"family {key!r} needs parameters {spec['params']}")
    params = {p: int(params[p]) for p in spec["params"]}
    if key == "A" and not (params["p"] >= 1 and params["q"] >= 1):
        raise ConfigurationError("SU(p,q) needs p, q >= 1")
    rank = _eval_expr(spec["rank"], params)
    zeta = _eval_expr(spec["zeta"], params | {"n": rank})
    label = re.sub(r"\{([^}]*)\}", lambda m: str(_eval_expr(m.group(1), params)),
                   spec["real_form"])
    return build_pair(spec["type"], rank, zeta, key=key, params=params,
                      real_form_label=label, row_label=spec["row_label"])


@lru_cache(maxsize=None)
def _build_pair_cached(family: str, rank: int, zeta: int, key: str,
                       params: tuple[tuple[str, int], ...], real_form_label: str,
                       row_label: str) -> HermitianPair:
    from .cascade import orthogonal_sequence

    rs = build_root_system(family, rank)
    if not 1 <= zeta <= rank:
        raise ConfigurationError(f"node {zeta} out of range for {rs.label}")
    z0 = zeta - 1
    bad = _offending_root(rs, z0)
    if bad is not None:
        raise ConfigurationError(
            f"node {zeta} of {rs.label} is not cominuscule: root {bad.coords} has "
            f"coefficient {bad.coords[z0]} there")
    if not rs.simple_root(z0).is_long:
        raise ConsistencyError(f"noncompact simple root {zeta} of {rs.label} is short")

    varpi = rs.fundamental_weight(z0)
    z = Coweight(tuple(Fraction(2 * int(i == z0)) for i in range(rank)))
    up, um, kr = [], [], []
    for i, r in enumerate(rs.roots):
        v = pair_coweight(rs, r, z)
        {2: up, -2: um, 0: kr}[int(v)].append(i)
    total = [sum(rs.roots[i].coords[j] for i in up) for j in range(rank)]
    tw = rs.root_to_weight(total).coords
    if any(c for j, c in enumerate(tw) if j != z0) or tw[z0] <= 0:
        raise ConsistencyError("sum of u_plus roots is not a multiple of varpi")
    fano = tw[z0]
    z_max = pair_coweight(rs, varpi, z)
    if z_max * fano != 2 * len(up):
        raise ConsistencyError("z_max * fano_index != 2 dim u_plus")
    seq = orthogonal_sequence(rs, z0)
    return HermitianPair(
        key=key, params=params, root_system=rs, zeta=z0, varpi=varpi, z=z,
        u_plus=tuple(up), u_minus=tuple(um), k_roots=tuple(kr), dim_u_plus=len(up),
        rank_p=len(seq.alphas), z_max=z_max, fano_index=fano,
        real_form_label=real_form_label, row_label=row_label,
    )


def build_pair(family: str, rank: int, zeta: int, *, key: str | None = None,
               params: Mapping[str, int] | None = None, real_form_label: str | None = None,
               row_label: str = "") -> HermitianPair:
    """Build the pair ``(family_rank, node zeta)``; ``zeta`` is 1-based (Bourbaki)."""
    family = family.upper()
    key = key or family
    label = real_form_label or f"({family}{rank if not family.startswith('E') else ''},w{zeta})"
    return _build_pair_cached(family, rank, zeta, key, tuple(sorted((params or {}).items())),
                              label, row_label)


def catalog(catalog_data: Mapping[str, Any] | None = None) -> list[dict[str, Any]]:
    """Family templates: key, type, parameter names and node rule."""
    data = catalog_data or _default_catalog()
    return [{"key": k, **v} for k, v in data["families"].items()]


def manifest_pairs(catalog_data: Mapping[str, Any] | None = None) -> list[HermitianPair]:
    data = catalog_data or _default_catalog()
    return [build_pair_from_key(m["key"], m["params"], data) for m in data["manifest"]]


_LABEL_PATTERNS = [
    (r"SU\((\d+),(\d+)\)", lambda m: ("A", {"p": int(m[1]), "q": int(m[2])})),
    (r"SO\(2,(\d+)\)", lambda m: ("B", {"n": (int(m[1]) + 1) // 2}) if int(m[1]) % 2
        else ("D1", {"n": (int(m[1]) + 2) // 2})),
    (r"Sp\((\d+),R\)", lambda m: ("C", {"n": int(m[1]) // 2})),
    (r"SO\*\((\d+)\)", lambda m: ("Dn", {"n": int(m[1]) // 2})),
    (r"E6(\(-14\))?", lambda m: ("E6", {})),
    (r"E7(\(-25\))?", lambda m: ("E7", {})),
    (r"(A|B|C|D1|Dn):([\d,]+)", None),
]


def parse_pair_label(label: str, rank_params: str | None = None,
                     catalog_data: Mapping[str, Any] | None = None) -> HermitianPair:
    """Resolve a user-facing pair label such as ``SU(2,3)``, ``E6`` or ``Dn:6``."""
    label = label.replace(" ", "")
    data = catalog_data or _default_catalog()
    if label in data["families"]:
        spec = data["families"][label]
        vals = [int(v) for v in rank_params.split(",")] if rank_params else []
        if len(vals) != len(spec["params"]):
            raise ConfigurationError(
                f"family {label!r} needs --rank-params {','.join(spec['params']) or '(none)'}")
        return build_pair_from_key(label, dict(zip(spec["params"], vals)), data)
    for pattern, fn in _LABEL_PATTERNS:
        m = re.fullmatch(pattern, label)
        if m is None:
            continue
        if fn is None:
            return parse_pair_label(m[1], m[2], data)
        key, params = fn(m)
        return build_pair_from_key(key, params, data)
    known = ", ".join(sorted(data["families"]))
    raise ConfigurationError(
        f"unknown pair label {label!r}; use a family key ({known}) with --rank-params, "
        "or a label like SU(2,3), SO(2,7), Sp(8,R), SO*(10), E6, E7")
