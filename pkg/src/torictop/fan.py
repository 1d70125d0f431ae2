"""Fans of smooth complete projective toric manifolds.

A fan is stored combinatorially: primitive ray vectors plus the index sets of
the maximal cones.  Ray order is the input order and every downstream basis
and report is deterministic in it.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from . import linalg
from .errors import FanFormatError, NotCompleteError
from .simplex import feasible_point

COVERAGE_SAMPLES = 1024


@dataclass(frozen=True)
class Fan:
    """Rays (primitive integer vectors) and maximal cones (index tuples)."""

    dim: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise FanFormatError("fan dimension must be a positive integer")
        seen_rays = set()
        for ray in self.rays:
            if len(ray) != self.dim:
                raise FanFormatError(f"ray {ray} does not have {self.dim} coordinates")
            if all(x == 0 for x in ray):
                raise FanFormatError("zero vector is not a valid ray")
            if linalg.gcd_vec(list(ray)) != 1:
                raise FanFormatError(f"ray {ray} is not primitive")
            if ray in seen_rays:
                raise FanFormatError(f"duplicate ray {ray}")
            seen_rays.add(ray)
        seen_cones = set()
        for cone in self.max_cones:
            if len(cone) != self.dim or len(set(cone)) != self.dim:
                raise FanFormatError(
                    f"max cone {cone} must consist of {self.dim} distinct ray indices"
                )
            if any(i < 0 or i >= len(self.rays) for i in cone):
                raise FanFormatError(f"max cone {cone} has an out-of-range ray index")
            key = frozenset(cone)
            if key in seen_cones:
                raise FanFormatError(f"duplicate max cone {sorted(cone)}")
            seen_cones.add(key)

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    def cone_matrix(self, cone: tuple[int, ...]) -> list[list[int]]:
        """Rows are the ray vectors of the given cone."""
        return [list(self.rays[i]) for i in cone]


@dataclass(frozen=True)
class DivisorClass:
    """Integer coefficients a_rho, one per ray, for the class sum(a_rho [D_rho])."""

    coeffs: tuple[int, ...]

    def scaled(self, d: int) -> "DivisorClass":
        return DivisorClass(tuple(d * a for a in self.coeffs))


@dataclass(frozen=True)
class WallCurve:
    """A wall (codimension-1 cone) with its two adjacent max cones.

    relation_coeffs are the integers c_i, aligned with `wall`, in the exact
    relation v + v' + sum_i c_i u_i = 0 where v, v' complete the wall inside
    the two adjacent cones.
    """

    wall: tuple[int, ...]
    adjacent: tuple[tuple[int, ...], tuple[int, ...]]
    relation_coeffs: tuple[int, ...]

    @property
    def opposite_rays(self) -> tuple[int, int]:
        wall_set = set(self.wall)
        v = next(i for i in self.adjacent[0] if i not in wall_set)
        w = next(i for i in self.adjacent[1] if i not in wall_set)
        return v, w


@dataclass(frozen=True)
class SmoothnessReport:
    smooth: bool
    offending_cones: tuple[int, ...]  # indices into fan.max_cones


@dataclass(frozen=True)
class CompletenessReport:
    complete: bool
    wall_check: bool
    coverage_check: bool
    bad_walls: tuple[tuple[int, ...], ...]
    uncovered: tuple[tuple[int, ...], ...]  # sample directions that missed every cone


@dataclass(frozen=True)
class AmplenessReport:
    ample: bool
    wall_values: tuple[int, ...]  # aligned with wall_curves(fan)


@dataclass(frozen=True)
class ProjectivityReport:
    projective: bool
    witness: DivisorClass | None


def parse_fan(text: str) -> Fan:
    """Parse the JSON fan format; unknown fields are rejected."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FanFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FanFormatError("fan file must contain a JSON object")
    allowed = {"dim", "rays", "max_cones", "name"}
    unknown = set(data) - allowed
    if unknown:
        raise FanFormatError(f"unknown fields in fan file: {sorted(unknown)}")
    for field in ("dim", "rays", "max_cones"):
        if field not in data:
            raise FanFormatError(f"fan file is missing required field '{field}'")
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise FanFormatError("'dim' must be an integer")
    def _int_rows(value, label):
        try:
            rows = tuple(tuple(row) for row in value)
        except TypeError as exc:
            raise FanFormatError(f"'{label}' must be an array of arrays") from exc
        for row in rows:
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise FanFormatError(f"'{label}' entries must be integers, got {x!r}")
        return rows

    rays = _int_rows(data["rays"], "rays")
    cones = _int_rows(data["max_cones"], "max_cones")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise FanFormatError("'name' must be a string")
    return Fan(dim=dim, rays=rays, max_cones=cones, name=name)


def load_fan(path: str) -> Fan:
    with open(path, encoding="utf-8") as fh:
        return parse_fan(fh.read())


def projective_space_fan(m: int) -> Fan:
    """Fan of complex projective m-space: e_1..e_m and -(e_1+...+e_m)."""
    if m < 1:
        raise ValueError("projective space dimension must be >= 1")
    rays = [tuple(1 if j == i else 0 for j in range(m)) for i in range(m)]
    rays.append(tuple(-1 for _ in range(m)))
    cones = tuple(tuple(c) for c in combinations(range(m + 1), m))
    return Fan(dim=m, rays=tuple(rays), max_cones=cones, name=f"cp{m}")


def product_fan(f1: Fan, f2: Fan) -> Fan:
    """Fan of the product: block-embedded rays, cones of the form c1 x c2."""
    dim = f1.dim + f2.dim
    rays = [ray + (0,) * f2.dim for ray in f1.rays]
    rays += [(0,) * f1.dim + ray for ray in f2.rays]
    offset = f1.n_rays
    cones = tuple(
        c1 + tuple(i + offset for i in c2) for c1 in f1.max_cones for c2 in f2.max_cones
    )
    name = None
    if f1.name and f2.name:
        name = f"{f1.name} x {f2.name}"
    return Fan(dim=dim, rays=tuple(rays), max_cones=cones, name=name)


def validate_smooth(fan: Fan) -> SmoothnessReport:
    offenders = tuple(
        k
        for k, cone in enumerate(fan.max_cones)
        if abs(linalg.det(fan.cone_matrix(cone))) != 1
    )
    return SmoothnessReport(smooth=not offenders, offending_cones=offenders)


def _walls(fan: Fan) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    walls: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for cone in fan.max_cones:
        for wall in combinations(sorted(cone), fan.dim - 1):
            walls.setdefault(wall, []).append(cone)
    return walls


def validate_complete(fan: Fan, seed: int = 0, samples: int = COVERAGE_SAMPLES) -> CompletenessReport:
    """Wall pairing plus a seeded random coverage check (see module docs).

    Wall pairing (every wall in exactly two max cones) is necessary for
    completeness; the coverage check fires `samples` integer directions and
    verifies each lies in the closure of some max cone.  Requires smoothness
    (cone membership is solved with the exact unimodular inverse).
    """
    walls = _walls(fan)
    bad_walls = tuple(sorted(w for w, cones in walls.items() if len(cones) != 2))

    inverses = [linalg.inverse_unimodular(fan.cone_matrix(c)) for c in fan.max_cones]
    rng = random.Random(seed)
    uncovered = []
    for _ in range(samples):
        v = [0] * fan.dim
        while all(x == 0 for x in v):
            v = [rng.randint(-99, 99) for _ in range(fan.dim)]
        covered = False
        for inv in inverses:
            lam = linalg.vec_mat(v, inv)
            if all(x >= 0 for x in lam):
                covered = True
                break
        if not covered:
            uncovered.append(tuple(v))
            if len(uncovered) >= 8:  # enough evidence to report
                break
    wall_ok = not bad_walls
    coverage_ok = not uncovered
    return CompletenessReport(
        complete=wall_ok and coverage_ok,
        wall_check=wall_ok,
        coverage_check=coverage_ok,
        bad_walls=bad_walls,
        uncovered=tuple(uncovered),
    )


def wall_curves(fan: Fan) -> list[WallCurve]:
    """One invariant curve per wall, with its exact integer wall relation."""
    walls = _walls(fan)
    curves = []
    for wall in sorted(walls):
        cones = walls[wall]
        if len(cones) != 2:
            raise NotCompleteError(
                f"wall {wall} lies in {len(cones)} max cones (expected 2)"
            )
        wall_set = set(wall)
        v = next(i for i in cones[0] if i not in wall_set)
        w = next(i for i in cones[1] if i not in wall_set)
        target = [-(a + b) for a, b in zip(fan.rays[v], fan.rays[w])]
        # Solve sum_i c_i u_i = -(v + v'); columns are the wall rays.
        cols = [[fan.rays[i][k] for i in wall] for k in range(fan.dim)]
        coeffs = linalg.solve_exact(cols, target) if wall else []
        if coeffs is None:
            raise NotCompleteError(f"wall {wall} admits no integer relation")
        if any(c.denominator != 1 for c in coeffs):
            raise NotCompleteError(f"wall {wall} relation is not integral")
        curves.append(
            WallCurve(
                wall=wall,
                adjacent=(cones[0], cones[1]),
                relation_coeffs=tuple(int(c) for c in coeffs),
            )
        )
    return curves


def is_ample(fan: Fan, alpha: DivisorClass, curves: list[WallCurve] | None = None) -> AmplenessReport:
    """Toric Kleiman test: alpha . C > 0 for every wall curve C."""
    if len(alpha.coeffs) != fan.n_rays:
        raise FanFormatError(
            f"divisor class has {len(alpha.coeffs)} coefficients, fan has {fan.n_rays} rays"
        )
    if curves is None:
        curves = wall_curves(fan)
    values = []
    for curve in curves:
        v, w = curve.opposite_rays
        val = alpha.coeffs[v] + alpha.coeffs[w]
        val += sum(c * alpha.coeffs[i] for c, i in zip(curve.relation_coeffs, curve.wall))
        values.append(val)
    return AmplenessReport(ample=all(v > 0 for v in values), wall_values=tuple(values))


def is_projective(fan: Fan) -> ProjectivityReport:
    """Existence of an ample class, via exact LP feasibility on wall positivity."""
    curves = wall_curves(fan)
    rows = []
    for curve in curves:
        v, w = curve.opposite_rays
        row = [0] * fan.n_rays
        row[v] += 1
        row[w] += 1
        for c, i in zip(curve.relation_coeffs, curve.wall):
            row[i] += c
        rows.append(row)
    point = feasible_point(rows, [1] * len(rows))
    if point is None:
        return ProjectivityReport(projective=False, witness=None)
    lcm = 1
    for x in point:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    witness = DivisorClass(tuple(int(x * lcm) for x in point))
    assert is_ample(fan, witness, curves).ample
    return ProjectivityReport(projective=True, witness=witness)


def preset_fan(name: str) -> Fan | None:
    """Built-in fans: 'cp<m>' and 'product:cp<a>,cp<b>'; None if not a preset."""
    if name.startswith("product:"):
        parts = name[len("product:"):].split(",")
        if len(parts) != 2:
            raise FanFormatError("product preset needs exactly two factors")
        factors = [preset_fan(p.strip()) for p in parts]
        if any(f is None for f in factors):
            raise FanFormatError(f"unknown product preset '{name}'")
        return product_fan(factors[0], factors[1])
    if name.startswith("cp") and name[2:].isdigit():
        m = int(name[2:])
        if m < 1:
            raise FanFormatError("cp preset needs a positive dimension")
        return projective_space_fan(m)
    return None


def resolve_fan(source: str) -> Fan:
    """Interpret `source` as a preset name first, then as a file path."""
    fan = preset_fan(source) if not source.endswith(".json") else None
    if fan is not None:
        return fan
    return load_fan(source)
