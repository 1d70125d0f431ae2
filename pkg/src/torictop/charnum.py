"""Characteristic-number calculus for hypersurfaces in toric manifolds.

Everything is exact: Bernoulli numbers and series coefficients are Fractions,
intersection numbers are integers, and the d-dependence of chi and of the
signature is carried as explicit polynomial coefficients so sweeps over d
cost one ring computation total.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .cohomology import (
    CohomologyClass,
    CohomologyRing,
    betti,
    divisor_class,
    evaluate,
    evaluate_fraction,
    multiply,
)
from .errors import HypothesisError, InternalConsistencyError
from .lattice import IntSymForm

_SIGNED = [Fraction(1), Fraction(-1, 2)]  # signed Bernoulli, B_1 = -1/2


def _signed_bernoulli(n: int) -> Fraction:
    while len(_SIGNED) <= n:
        m = len(_SIGNED)
        # sum_{k=0}^{m} C(m+1,k) B_k = 0
        s = sum(comb(m + 1, k) * _SIGNED[k] for k in range(m))
        _SIGNED.append(-s / (m + 1))
    return _SIGNED[n]


def bernoulli(j: int) -> Fraction:
    """Unsigned B_j: 1/6, 1/30, 1/42, 1/30, ... (j-th nonzero, |B_2j| signed)."""
    if j < 1:
        raise ValueError("bernoulli(j) requires j >= 1 (unsigned convention)")
    return abs(_signed_bernoulli(2 * j))


def tanh_coefficient(j: int) -> Fraction:
    """Coefficient of x^(2j-1) in tanh x: (-1)^(j-1) 2^2j (2^2j - 1) B_j / (2j)!."""
    if j < 1:
        raise ValueError("tanh has no constant term; j >= 1")
    p = 2 ** (2 * j)
    return Fraction((-1) ** (j - 1) * p * (p - 1), factorial(2 * j)) * bernoulli(j)


def x_over_tanh_coefficient(j: int) -> Fraction:
    """Coefficient of x^2j in x/tanh x, j >= 1: (-1)^(j-1) 2^2j B_j / (2j)!."""
    if j < 1:
        raise ValueError("j >= 1; the constant term is 1")
    p = 2 ** (2 * j)
    return Fraction((-1) ** (j - 1) * p, factorial(2 * j)) * bernoulli(j)


@dataclass(frozen=True)
class HypersurfaceInvariants:
    """Invariants of a smooth degree-d hypersurface Y_d of complex dimension n."""

    d: int
    n: int
    deg: int
    chi: int
    b_n: int
    sign_Y: int | None  # None when n is odd

    def __post_init__(self):
        if self.b_n < 0:
            raise InternalConsistencyError("negative middle Betti number")
        if self.n % 2 == 0 and (self.chi - self.b_n) % 2 != 0:
            raise InternalConsistencyError("chi and b_n parity mismatch")


def total_chern(ring: CohomologyRing) -> CohomologyClass:
    """c(TX) = prod_rho (1 + x_rho), truncated at the top degree."""
    acc = ring.one()
    for rho in range(ring.fan.n_rays):
        acc = acc + multiply(acc, ring.generator(rho))
    return acc


def l_class(ring: CohomologyRing) -> CohomologyClass:
    """prod_rho x_rho/tanh(x_rho), exact rational coefficients."""
    acc = ring.one()
    n_rays = ring.fan.n_rays
    for rho in range(n_rays):
        factor = ring.one()
        for j in range(1, ring.dim // 2 + 1):
            exps = tuple(2 * j if i == rho else 0 for i in range(n_rays))
            term = CohomologyClass(ring, dict(ring.reduce_monomial(exps)))
            factor = factor + term.scale(x_over_tanh_coefficient(j))
        acc = multiply(acc, factor)
    return acc


def _power(a: CohomologyClass, k: int) -> CohomologyClass:
    acc = a.ring.one()
    for _ in range(k):
        acc = multiply(acc, a)
    return acc


def degree(ring: CohomologyRing, alpha) -> int:
    """<alpha^dim, [X]>, the degree of the embedding class."""
    return evaluate(_power(divisor_class(ring, alpha), ring.dim))


def chi_polynomial(ring: CohomologyRing, alpha) -> list[int]:
    """chi(Y_d) as integer coefficients in d (index = power of d).

    chi(Y_d) = <c(TX) d alpha / (1 + d alpha), [X]>; expanding the geometric
    series gives the coefficient of d^p as (-1)^(p-1) <c_{dim-p}(TX) alpha^p>.
    """
    dim = ring.dim
    a = divisor_class(ring, alpha)
    c = total_chern(ring)
    coeffs = [0] * (dim + 1)
    a_pow = ring.one()
    for p in range(1, dim + 1):
        a_pow = multiply(a_pow, a)
        pairing = evaluate(multiply(c.degree_part(dim - p), a_pow))
        coeffs[p] = (-1) ** (p - 1) * pairing
    return coeffs


def euler_char_hypersurface(ring: CohomologyRing, alpha, d: int) -> int:
    if d < 1:
        raise ValueError("d must be a positive integer")
    return sum(c * d**p for p, c in enumerate(chi_polynomial(ring, alpha)))


def bn_hypersurface(ring: CohomologyRing, alpha, d: int) -> int:
    """Middle Betti number b_n(Y_d), n = dim - 1, via Lefschetz and duality.

    b_j(Y) = b_j(X) for j < n, so
    b_n(Y) = (-1)^n ( chi(Y) - 2 sum_{j=0}^{n-1} (-1)^j b_j(X) ).
    """
    if ring.dim < 2:
        raise HypothesisError("hypersurface middle Betti needs dim >= 2")
    n = ring.dim - 1
    bx = betti(ring.fan)
    low = sum((-1) ** j * bx[j] for j in range(n))
    chi = euler_char_hypersurface(ring, alpha, d)
    b_n = (-1) ** n * (chi - 2 * low)
    if b_n < 0:
        raise InternalConsistencyError(f"negative b_n = {b_n} for d = {d}")
    return b_n


def signature_polynomial(ring: CohomologyRing, alpha) -> list[Fraction]:
    """sign(Y_d) as rational coefficients in d (odd powers only).

    sign(Y_d) = <tanh(d alpha) L(X), [X]>; the d^(2j-1) coefficient is
    tanh_coefficient(j) * <alpha^(2j-1) L_i(X)> with 2i = dim - (2j - 1).
    """
    dim = ring.dim
    if (dim - 1) % 2 != 0:
        raise HypothesisError("signature needs even hypersurface dimension n")
    a = divisor_class(ring, alpha)
    lx = l_class(ring)
    coeffs = [Fraction(0)] * (dim + 1)
    for j in range(1, dim // 2 + 2):
        k = 2 * j - 1
        if k > dim:
            break
        pairing = evaluate_fraction(multiply(_power(a, k), lx.degree_part(dim - k)))
        coeffs[k] = tanh_coefficient(j) * pairing
    return coeffs


def signature_hypersurface(ring: CohomologyRing, alpha, d: int) -> int:
    if d < 1:
        raise ValueError("d must be a positive integer")
    val = sum(c * d**p for p, c in enumerate(signature_polynomial(ring, alpha)))
    if val.denominator != 1:
        raise InternalConsistencyError(f"non-integer signature {val} at d = {d}")
    return int(val)


def hypersurface_invariants(ring: CohomologyRing, alpha, d: int) -> HypersurfaceInvariants:
    n = ring.dim - 1
    deg_1 = degree(ring, alpha)
    sign_y = signature_hypersurface(ring, alpha, d) if n % 2 == 0 else None
    return HypersurfaceInvariants(
        d=d,
        n=n,
        deg=d**ring.dim * deg_1,
        chi=euler_char_hypersurface(ring, alpha, d),
        b_n=bn_hypersurface(ring, alpha, d),
        sign_Y=sign_y,
    )


def middle_form_gram(ring: CohomologyRing, alpha, d: int) -> IntSymForm:
    """Gram matrix of (x, y) -> <x y (d alpha), [X]> on the middle basis of X.

    The basis is the degree-(n/2) monomial basis of the ring; G(d) = d G(1).
    """
    n = ring.dim - 1
    if n % 2 != 0:
        raise HypothesisError("middle form needs even hypersurface dimension n")
    a = divisor_class(ring, alpha)
    basis = ring.graded_basis[n // 2]
    classes = [
        CohomologyClass(ring, {(n // 2, i): Fraction(1)}) for i in range(len(basis))
    ]
    gram = []
    for i, mi in enumerate(classes):
        row = []
        for mj in classes:
            row.append(d * evaluate(multiply(multiply(mi, mj), a)))
        gram.append(row)
    labels = tuple(
        "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(m) if e)
        or "1"
        for m in basis
    )
    return IntSymForm(gram=tuple(tuple(row) for row in gram), labels=labels)
