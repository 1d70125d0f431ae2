"""Handle counts for hypersurfaces: s_d spheres split off Y_d.

Even middle dimension uses 2 s_d = b_n(Y_d) - b_n(X) - |sign(Y_d) - sign(H^n X)|.
Odd middle dimension yields two candidates unless the Kervaire invariant of
the geometric quadratic refinement is supplied (it is not computable from fan
data).  Sweeps evaluate exact polynomials in d, so large d stays cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from . import charnum, cohomology, fan as fanmod, lattice
from .errors import HypothesisError, InternalConsistencyError, NotAmpleError


@dataclass(frozen=True)
class HandleReport:
    n: int
    d: int
    deg: int
    chi: int
    b_n_Y: int
    b_n_X: int
    sign_Y: int | None  # even n only
    sign_HnX: int | None  # even n only
    s_d: int | None  # determined count; None when odd n is undetermined
    s_candidates: tuple[int, ...]  # (s,) when determined, else both options
    kervaire: int | None
    undetermined: bool
    hypothesis_ok: bool
    ratio_2s_over_deg: Fraction | None
    ratio_sign_over_bn: Fraction | None
    ratio_bn_over_deg: Fraction
    corollary_residual: int | None  # even n only
    corollary_sign: int | None  # sign choice on |sign_HnX| giving the residual


@dataclass(frozen=True)
class SweepSummary:
    """Limit constants with the empirical ratios from the last sweep row.

    The derived constants follow from the tanh series; the variant constants
    are the printed forms with (n+1)! in the denominator, reported with their
    gaps but not asserted (see README on the discrepancy).
    """

    n: int
    d_last: int
    limit_bn_over_deg: Fraction
    limit_sign_over_bn: Fraction | None
    limit_2s_over_deg: Fraction | None
    variant_sign_over_bn: Fraction | None
    variant_2s_over_deg: Fraction | None
    empirical_bn_over_deg: Fraction
    empirical_sign_over_bn: Fraction | None
    empirical_2s_over_deg: Fraction | None


@dataclass(frozen=True)
class SweepResult:
    reports: tuple[HandleReport, ...]
    summary: SweepSummary


class _Pipeline:
    """Ring, ampleness check, and d-polynomials computed once per fan/alpha."""

    def __init__(self, fan: fanmod.Fan, alpha: fanmod.DivisorClass):
        self.fan = fan
        self.alpha = alpha
        self.n = fan.dim - 1
        if self.n <= 2:
            raise HypothesisError(
                f"hypersurface dimension n = {self.n} is too small; need n > 2"
            )
        curves = fanmod.wall_curves(fan)
        ample = fanmod.is_ample(fan, alpha, curves)
        if not ample.ample:
            raise NotAmpleError(
                "alpha is not ample: nonpositive wall value "
                f"{min(ample.wall_values)}"
            )
        self.ring = cohomology.build_ring(fan)
        self.betti_x = cohomology.betti(fan)
        self.deg_1 = charnum.degree(self.ring, alpha)
        self.chi_poly = charnum.chi_polynomial(self.ring, alpha)
        if self.n % 2 == 0:
            self.sign_poly = charnum.signature_polynomial(self.ring, alpha)
            gram = charnum.middle_form_gram(self.ring, alpha, 1)
            p, q, z = lattice.signature(gram)
            if z != 0:
                raise InternalConsistencyError("degenerate middle form on X")
            self.sign_hnx = p - q
        else:
            self.sign_poly = None
            self.sign_hnx = None
        self.low_betti_alt = sum((-1) ** j * self.betti_x[j] for j in range(self.n))

    def chi(self, d: int) -> int:
        return sum(c * d**p for p, c in enumerate(self.chi_poly))

    def b_n(self, d: int) -> int:
        b = (-1) ** self.n * (self.chi(d) - 2 * self.low_betti_alt)
        if b < 0:
            raise InternalConsistencyError(f"negative b_n at d = {d}")
        return b

    def sign(self, d: int) -> int:
        val = sum(c * d**p for p, c in enumerate(self.sign_poly))
        if val.denominator != 1:
            raise InternalConsistencyError(f"non-integer signature at d = {d}")
        return int(val)


def _hypothesis_ok(b_n_y: int, b_n_x: int) -> bool:
    return b_n_y >= max(4 * b_n_x, 2 * b_n_x + 5)


def _even_from_pipeline(pipe: _Pipeline, d: int) -> HandleReport:
    if d < 1:
        raise ValueError("d must be a positive integer")
    n = pipe.n
    deg = d**pipe.fan.dim * pipe.deg_1
    chi = pipe.chi(d)
    b_n_y = pipe.b_n(d)
    b_n_x = pipe.betti_x[n]
    sign_y = pipe.sign(d)
    sign_hnx = pipe.sign_hnx
    hyp = _hypothesis_ok(b_n_y, b_n_x)
    two_s = b_n_y - b_n_x - abs(sign_y - sign_hnx)
    if two_s % 2 != 0:
        raise InternalConsistencyError(f"odd 2 s_d = {two_s} at d = {d}")
    if two_s < 0 and hyp:
        raise InternalConsistencyError(f"negative s_d with rank hypothesis at d = {d}")
    s_d = two_s // 2
    # b_n(Y') - |sign(Y')| vs b_n(X) -/+ |sign(H^n X)|; one choice lands on 0
    # when the rank hypothesis holds, and the better of the two is reported.
    base = (b_n_y - two_s) - abs(sign_y) - b_n_x
    res_plus = base + abs(sign_hnx)  # against b_n_X - |sign_HnX|
    res_minus = base - abs(sign_hnx)  # against b_n_X + |sign_HnX|
    if abs(res_plus) <= abs(res_minus):
        residual, choice = res_plus, +1
    else:
        residual, choice = res_minus, -1
    return HandleReport(
        n=n,
        d=d,
        deg=deg,
        chi=chi,
        b_n_Y=b_n_y,
        b_n_X=b_n_x,
        sign_Y=sign_y,
        sign_HnX=sign_hnx,
        s_d=s_d,
        s_candidates=(s_d,),
        kervaire=None,
        undetermined=False,
        hypothesis_ok=hyp,
        ratio_2s_over_deg=Fraction(two_s, deg),
        ratio_sign_over_bn=Fraction(abs(sign_y), b_n_y) if b_n_y else None,
        ratio_bn_over_deg=Fraction(b_n_y, deg),
        corollary_residual=residual,
        corollary_sign=choice,
    )


def _odd_from_pipeline(pipe: _Pipeline, d: int, kervaire: int | None) -> HandleReport:
    if d < 1:
        raise ValueError("d must be a positive integer")
    if kervaire not in (None, 0, 1):
        raise ValueError("kervaire must be 0 or 1")
    n = pipe.n
    deg = d**pipe.fan.dim * pipe.deg_1
    chi = pipe.chi(d)
    b_n_y = pipe.b_n(d)
    b_n_x = pipe.betti_x[n]
    if b_n_y % 2 != 0:
        raise InternalConsistencyError(f"odd middle Betti {b_n_y} with odd n")
    hyp = _hypothesis_ok(b_n_y, b_n_x)
    if b_n_y == 0:
        s_d, candidates, undet, kerv = 0, (0,), False, kervaire
    elif kervaire is None:
        s_d, candidates, undet, kerv = None, (b_n_y // 2 - 1, b_n_y // 2), True, None
    elif kervaire == 0:
        s_d, candidates, undet, kerv = b_n_y // 2, (b_n_y // 2,), False, 0
    else:
        s_d, candidates, undet, kerv = b_n_y // 2 - 1, (b_n_y // 2 - 1,), False, 1
    return HandleReport(
        n=n,
        d=d,
        deg=deg,
        chi=chi,
        b_n_Y=b_n_y,
        b_n_X=b_n_x,
        sign_Y=None,
        sign_HnX=None,
        s_d=s_d,
        s_candidates=candidates,
        kervaire=kerv,
        undetermined=undet,
        hypothesis_ok=hyp,
        ratio_2s_over_deg=Fraction(2 * s_d, deg) if s_d is not None else None,
        ratio_sign_over_bn=None,
        ratio_bn_over_deg=Fraction(b_n_y, deg),
        corollary_residual=None,
        corollary_sign=None,
    )


def even_report(fan: fanmod.Fan, alpha: fanmod.DivisorClass, d: int) -> HandleReport:
    pipe = _Pipeline(fan, alpha)
    if pipe.n % 2 != 0:
        raise HypothesisError(f"n = {pipe.n} is odd; use odd_report")
    return _even_from_pipeline(pipe, d)


def odd_report(
    fan: fanmod.Fan, alpha: fanmod.DivisorClass, d: int, kervaire: int | None = None
) -> HandleReport:
    pipe = _Pipeline(fan, alpha)
    if pipe.n % 2 == 0:
        raise HypothesisError(f"n = {pipe.n} is even; use even_report")
    return _odd_from_pipeline(pipe, d, kervaire)


def report(
    fan: fanmod.Fan, alpha: fanmod.DivisorClass, d: int, kervaire: int | None = None
) -> HandleReport:
    """Dispatch on the parity of n = dim - 1."""
    pipe = _Pipeline(fan, alpha)
    if pipe.n % 2 == 0:
        return _even_from_pipeline(pipe, d)
    return _odd_from_pipeline(pipe, d, kervaire)


def limit_constants(n: int) -> dict[str, Fraction | None]:
    """Asymptotic ratios as d grows, exact.

    Derived from the series: |sign|/b_n tends to the top tanh coefficient
    2^(n+2) (2^(n+2) - 1) B_((n+2)/2) / (n+2)!, and 2s/deg to one minus that.
    The variant entries use (n+1)! (and 2^(n+1) (2^(n+1) - 1) for 2s), which
    is how the constants appear in print; they do not match the derivation
    and are reported for comparison only.
    """
    out: dict[str, Fraction | None] = {
        "bn_over_deg": Fraction(1),
        "sign_over_bn": None,
        "two_s_over_deg": None,
        "variant_sign_over_bn": None,
        "variant_two_s_over_deg": None,
    }
    if n % 2 == 0:
        j = (n + 2) // 2
        p = 2 ** (n + 2)
        derived = Fraction(p * (p - 1), factorial(n + 2)) * charnum.bernoulli(j)
        out["sign_over_bn"] = derived
        out["two_s_over_deg"] = 1 - derived
        out["variant_sign_over_bn"] = Fraction(p * (p - 1), factorial(n + 1)) * charnum.bernoulli(j)
        ph = 2 ** (n + 1)
        out["variant_two_s_over_deg"] = 1 - Fraction(ph * (ph - 1), factorial(n + 1)) * charnum.bernoulli(j)
    return out


def sweep(
    fan: fanmod.Fan,
    alpha: fanmod.DivisorClass,
    d_min: int,
    d_max: int,
    kervaire: int | None = None,
) -> SweepResult:
    if d_min < 1 or d_max < d_min:
        raise ValueError("need 1 <= d_min <= d_max")
    pipe = _Pipeline(fan, alpha)
    even = pipe.n % 2 == 0
    reports = tuple(
        _even_from_pipeline(pipe, d) if even else _odd_from_pipeline(pipe, d, kervaire)
        for d in range(d_min, d_max + 1)
    )
    last = reports[-1]
    limits = limit_constants(pipe.n)
    summary = SweepSummary(
        n=pipe.n,
        d_last=last.d,
        limit_bn_over_deg=limits["bn_over_deg"],
        limit_sign_over_bn=limits["sign_over_bn"],
        limit_2s_over_deg=limits["two_s_over_deg"],
        variant_sign_over_bn=limits["variant_sign_over_bn"],
        variant_2s_over_deg=limits["variant_two_s_over_deg"],
        empirical_bn_over_deg=last.ratio_bn_over_deg,
        empirical_sign_over_bn=last.ratio_sign_over_bn,
        empirical_2s_over_deg=last.ratio_2s_over_deg,
    )
    return SweepResult(reports=reports, summary=summary)
