"""Integer cohomology of a smooth complete toric manifold.

The ring is presented as ZZ[x_rho]/(Stanley-Reisner ideal + linear relations),
one degree-2 generator per ray.  Normal forms are computed over QQ with a
Groebner basis in graded-reverse-lex order (input ray order); integrality of
everything with integral meaning is asserted rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

import sympy
from sympy.polys.orderings import grevlex

from . import linalg
from .errors import InternalConsistencyError
from .fan import Fan

Exps = tuple[int, ...]


def _fraction(x) -> Fraction:
    r = sympy.Rational(x)
    return Fraction(int(r.p), int(r.q))


def _exponent_tuples(n_vars: int, total: int):
    if n_vars == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _exponent_tuples(n_vars - 1, total - head):
            yield (head,) + tail


@dataclass(frozen=True)
class CohomologyRing:
    """Graded ring data; immutable after build_ring, safe to share."""

    fan: Fan
    gens: tuple
    groebner: object
    sr_exponents: tuple[Exps, ...]  # minimal non-face monomials
    graded_basis: tuple[tuple[Exps, ...], ...]  # index = complex degree
    basis_pos: dict[Exps, tuple[int, int]]
    point_coeff: Fraction  # NF(cone monomial) = point_coeff * top basis monomial
    _nf_cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def dim(self) -> int:
        return self.fan.dim

    def rank(self, k: int) -> int:
        return len(self.graded_basis[k])

    def reduce_monomial(self, exps: Exps) -> dict[tuple[int, int], Fraction]:
        """Normal form of a single monomial, as coefficients on the graded basis."""
        deg = sum(exps)
        if deg > self.dim:
            return {}
        if exps in self._nf_cache:
            return self._nf_cache[exps]
        expr = sympy.prod(g**e for g, e in zip(self.gens, exps))
        _, rem = self.groebner.reduce(expr)
        out: dict[tuple[int, int], Fraction] = {}
        if rem != 0:
            poly = sympy.Poly(rem, *self.gens)
            for mono, coeff in zip(poly.monoms(), poly.coeffs()):
                if mono not in self.basis_pos:
                    raise InternalConsistencyError(
                        f"normal form produced non-basis monomial {mono}"
                    )
                out[self.basis_pos[mono]] = _fraction(coeff)
        self._nf_cache[exps] = out
        return out

    def zero(self) -> "CohomologyClass":
        return CohomologyClass(self, {})

    def one(self) -> "CohomologyClass":
        return CohomologyClass(self, {(0, 0): Fraction(1)})

    def generator(self, rho: int) -> "CohomologyClass":
        exps = tuple(1 if i == rho else 0 for i in range(len(self.gens)))
        return CohomologyClass(self, dict(self.reduce_monomial(exps)))


@dataclass(frozen=True)
class CohomologyClass:
    """Coefficients on the ring's graded basis, keyed by (degree, position).

    Mixed degrees are allowed; Chern and L classes live here as one object.
    """

    ring: CohomologyRing
    coeffs: dict[tuple[int, int], Fraction]

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if other.ring is not self.ring:
            raise ValueError("classes from different rings")
        out = dict(self.coeffs)
        for key, val in other.coeffs.items():
            new = out.get(key, Fraction(0)) + val
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return CohomologyClass(self.ring, out)

    def scale(self, c) -> "CohomologyClass":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return CohomologyClass(self.ring, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, CohomologyClass):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = __mul__

    def degree_part(self, k: int) -> "CohomologyClass":
        return CohomologyClass(
            self.ring, {key: v for key, v in self.coeffs.items() if key[0] == k}
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def integer_coeffs(self) -> dict[tuple[int, int], int]:
        out = {}
        for key, val in self.coeffs.items():
            if val.denominator != 1:
                raise InternalConsistencyError(f"non-integer coefficient {val} at {key}")
            out[key] = int(val)
        return out


def _minimal_nonfaces(fan: Fan) -> list[tuple[int, ...]]:
    faces = set()
    for cone in fan.max_cones:
        for s in range(fan.dim + 1):
            faces.update(frozenset(c) for c in combinations(cone, s))
    nonfaces = []
    for size in range(1, fan.dim + 2):
        for subset in combinations(range(fan.n_rays), size):
            s = frozenset(subset)
            if s in faces:
                continue
            if all(s - {i} in faces for i in subset):
                nonfaces.append(subset)
    return nonfaces


def build_ring(fan: Fan) -> CohomologyRing:
    """Quotient presentation with a deterministic graded monomial basis.

    Raises InternalConsistencyError when the computed basis ranks disagree
    with betti(), when structure constants fail to be integers, or when the
    Poincare pairing between complementary degrees is not unimodular.
    """
    r = fan.n_rays
    gens = sympy.symbols(f"x0:{r}")
    if r == 1:
        gens = (gens[0],)
    nonfaces = _minimal_nonfaces(fan)
    sr_polys = [sympy.prod(gens[i] for i in nf) for nf in nonfaces]
    linear = [
        sum(fan.rays[rho][j] * gens[rho] for rho in range(r)) for j in range(fan.dim)
    ]
    basis_polys = sr_polys + linear
    gb = sympy.groebner(basis_polys, *gens, order="grevlex", field=True)

    leading = [max(p.monoms(), key=grevlex) for p in gb.polys]

    def is_standard(exps: Exps) -> bool:
        return not any(all(e >= l for e, l in zip(exps, lm)) for lm in leading)

    graded: list[tuple[Exps, ...]] = []
    basis_pos: dict[Exps, tuple[int, int]] = {}
    for k in range(fan.dim + 1):
        level = [e for e in _exponent_tuples(r, k) if is_standard(e)]
        level.sort(key=grevlex, reverse=True)
        graded.append(tuple(level))
        for i, exps in enumerate(level):
            basis_pos[exps] = (k, i)

    expected = betti(fan)
    for k in range(fan.dim + 1):
        if len(graded[k]) != expected[2 * k]:
            raise InternalConsistencyError(
                f"degree-{k} basis rank {len(graded[k])} != b_{2 * k} = {expected[2 * k]}"
            )
    if sum(len(level) for level in graded) != len(fan.max_cones):
        raise InternalConsistencyError("total basis rank != number of max cones")
    if len(graded[fan.dim]) != 1:
        raise InternalConsistencyError("top degree component is not rank 1")

    sr_exponents = tuple(
        tuple(1 if i in nf else 0 for i in range(r)) for nf in nonfaces
    )
    ring = CohomologyRing(
        fan=fan,
        gens=gens,
        groebner=gb,
        sr_exponents=sr_exponents,
        graded_basis=tuple(graded),
        basis_pos=basis_pos,
        point_coeff=Fraction(1),
    )

    # Point-class normalization: the first max cone pins [pt]; every other
    # cone must reduce to the same multiple of the top basis monomial.
    point = None
    for cone in fan.max_cones:
        exps = tuple(1 if i in cone else 0 for i in range(r))
        nf = ring.reduce_monomial(exps)
        if set(nf) != {(fan.dim, 0)}:
            raise InternalConsistencyError(f"cone monomial {cone} is not top rank 1")
        c = nf[(fan.dim, 0)]
        if point is None:
            point = c
        elif point != c:
            raise InternalConsistencyError(
                "max cones disagree on the point class; fan is not smooth-consistent"
            )
    object.__setattr__(ring, "point_coeff", point)

    _assert_integral_structure(ring)
    return ring


def _assert_integral_structure(ring: CohomologyRing) -> None:
    """Structure constants integral; Poincare pairings unimodular over ZZ."""
    n = ring.dim
    for k in range(n + 1):
        for l in range(n + 1 - k):
            for a in ring.graded_basis[k]:
                for b in ring.graded_basis[l]:
                    prod_exps = tuple(x + y for x, y in zip(a, b))
                    for val in ring.reduce_monomial(prod_exps).values():
                        if val.denominator != 1:
                            raise InternalConsistencyError(
                                f"non-integer structure constant for {a} * {b}"
                            )
    for k in range(n + 1):
        rows = ring.graded_basis[k]
        cols = ring.graded_basis[n - k]
        if len(rows) != len(cols):
            raise InternalConsistencyError("complementary ranks differ")
        m = []
        for a in rows:
            row = []
            for b in cols:
                prod_exps = tuple(x + y for x, y in zip(a, b))
                nf = ring.reduce_monomial(prod_exps)
                val = nf.get((n, 0), Fraction(0)) / ring.point_coeff
                if val.denominator != 1:
                    raise InternalConsistencyError("non-integer pairing entry")
                row.append(int(val))
            m.append(row)
        if m and abs(linalg.det(m)) != 1:
            raise InternalConsistencyError(
                f"Poincare pairing in degree {k} is not unimodular"
            )


def betti(fan: Fan) -> list[int]:
    """b_0..b_{2 dim} from the h-vector of the fan's simplicial complex."""
    n = fan.dim
    faces = set()
    for cone in fan.max_cones:
        for s in range(n + 1):
            faces.update(frozenset(c) for c in combinations(cone, s))
    f = [0] * (n + 1)
    for face in faces:
        f[len(face)] += 1
    coeffs = [0] * (n + 1)  # sum_i f_i (x-1)^(n-i), coefficient of x^j
    for i, fi in enumerate(f):
        m = n - i
        for j in range(m + 1):
            coeffs[j] += fi * comb(m, j) * (-1) ** (m - j)
    out = [0] * (2 * n + 1)
    for k in range(n + 1):
        out[2 * k] = coeffs[n - k]
    return out


def divisor_class(ring: CohomologyRing, coeffs) -> CohomologyClass:
    """Degree-1 class sum_rho a_rho x_rho in normal form."""
    values = tuple(coeffs.coeffs) if hasattr(coeffs, "coeffs") else tuple(coeffs)
    if len(values) != ring.fan.n_rays:
        raise ValueError(
            f"divisor has {len(values)} coefficients, fan has {ring.fan.n_rays} rays"
        )
    out = ring.zero()
    for rho, a in enumerate(values):
        if a:
            out = out + ring.generator(rho).scale(a)
    return out


def multiply(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    if a.ring is not b.ring:
        raise ValueError("classes from different rings")
    ring = a.ring
    acc: dict[tuple[int, int], Fraction] = {}
    for (ka, ia), ca in a.coeffs.items():
        mono_a = ring.graded_basis[ka][ia]
        for (kb, ib), cb in b.coeffs.items():
            if ka + kb > ring.dim:
                continue
            mono_b = ring.graded_basis[kb][ib]
            prod_exps = tuple(x + y for x, y in zip(mono_a, mono_b))
            for key, val in ring.reduce_monomial(prod_exps).items():
                new = acc.get(key, Fraction(0)) + ca * cb * val
                if new:
                    acc[key] = new
                else:
                    acc.pop(key, None)
    return CohomologyClass(ring, acc)


def evaluate(a: CohomologyClass) -> int:
    """Pairing with the fundamental class: top-degree coefficient, point = 1.

    Lower-degree parts of a mixed class are ignored.
    """
    ring = a.ring
    top = a.coeffs.get((ring.dim, 0), Fraction(0))
    val = top / ring.point_coeff
    if val.denominator != 1:
        raise InternalConsistencyError(f"evaluation is not an integer: {val}")
    return int(val)


def evaluate_fraction(a: CohomologyClass) -> Fraction:
    """Same pairing without the integrality requirement (series coefficients)."""
    ring = a.ring
    return a.coeffs.get((ring.dim, 0), Fraction(0)) / ring.point_coeff
