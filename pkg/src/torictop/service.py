"""HTTP front end wrapping the core package.

Run with: uvicorn torictop.service:app

Domain errors map to HTTP 422 with a `code` field carrying the same numbers
the CLI uses as exit codes (2 not smooth, 3 not complete, 4 not ample,
5 hypothesis, 6 internal consistency, 7 search exhausted); malformed inputs
map to 400 with code 1.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import charnum, cohomology, fan as fanmod, handles, lattice, schemas
from .cli import fmt_rational
from .errors import (
    FanFormatError,
    HypothesisError,
    InternalConsistencyError,
    NotAmpleError,
    NotCompleteError,
    NotSmoothError,
    SearchExhaustedError,
    TorictopError,
)

app = FastAPI(
    title="torictop",
    description="Topology of hypersurfaces in smooth projective toric manifolds.",
)

_ERROR_CODES = {
    NotSmoothError: 2,
    NotCompleteError: 3,
    NotAmpleError: 4,
    HypothesisError: 5,
    InternalConsistencyError: 6,
    SearchExhaustedError: 7,
}


@app.exception_handler(TorictopError)
async def _domain_error(request: Request, exc: TorictopError):
    code = _ERROR_CODES.get(type(exc), 1)
    status = 400 if code == 1 else 422
    return JSONResponse(
        status_code=status, content={"detail": {"code": code, "message": str(exc)}}
    )


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError):
    return JSONResponse(
        status_code=400, content={"detail": {"code": 1, "message": str(exc)}}
    )


def _fan_from(fan_in: schemas.FanIn) -> fanmod.Fan:
    if fan_in.preset is not None:
        fan = fanmod.preset_fan(fan_in.preset)
        if fan is None:
            raise FanFormatError(f"unknown preset {fan_in.preset!r}")
        return fan
    return fanmod.Fan(
        dim=fan_in.dim,
        rays=tuple(tuple(r) for r in fan_in.rays),
        max_cones=tuple(tuple(c) for c in fan_in.max_cones),
        name=fan_in.name,
    )


def _validated(fan_in: schemas.FanIn, seed: int) -> fanmod.Fan:
    fan = _fan_from(fan_in)
    smooth = fanmod.validate_smooth(fan)
    if not smooth.smooth:
        raise NotSmoothError(f"cones {list(smooth.offending_cones)} are not unimodular")
    complete = fanmod.validate_complete(fan, seed=seed)
    if not complete.complete:
        raise NotCompleteError("fan is not complete")
    return fan


def _alpha(fan: fanmod.Fan, coeffs) -> fanmod.DivisorClass:
    if len(coeffs) != fan.n_rays:
        raise FanFormatError(
            f"alpha has {len(coeffs)} coefficients, fan has {fan.n_rays} rays"
        )
    return fanmod.DivisorClass(tuple(coeffs))


def _ample_alpha(fan: fanmod.Fan, coeffs) -> fanmod.DivisorClass:
    alpha = _alpha(fan, coeffs)
    rep = fanmod.is_ample(fan, alpha)
    if not rep.ample:
        raise NotAmpleError(
            f"alpha is not ample (minimal wall value {min(rep.wall_values)})"
        )
    return alpha


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/check", response_model=schemas.CheckResponse)
def check(req: schemas.CheckRequest):
    fan = _fan_from(req.fan)
    out = {"dim": fan.dim, "n_rays": fan.n_rays}
    smooth = fanmod.validate_smooth(fan)
    out["smooth"] = smooth.smooth
    if not smooth.smooth:
        return out
    complete = fanmod.validate_complete(fan, seed=req.seed)
    out["complete"] = complete.complete
    if not complete.complete:
        return out
    proj = fanmod.is_projective(fan)
    out["projective"] = proj.projective
    if proj.witness is not None:
        out["ample_witness"] = list(proj.witness.coeffs)
    return out


@app.post("/betti", response_model=schemas.BettiResponse)
def betti(req: schemas.BettiRequest):
    fan = _validated(req.fan, req.seed)
    return {"betti": cohomology.betti(fan)}


@app.post("/degree", response_model=schemas.DegreeResponse)
def degree(req: schemas.DegreeRequest):
    fan = _validated(req.fan, req.seed)
    alpha = _ample_alpha(fan, req.alpha)
    ring = cohomology.build_ring(fan)
    return {"degree": charnum.degree(ring, alpha)}


@app.post("/chi", response_model=schemas.ChiResponse)
def chi(req: schemas.ChiRequest):
    fan = _validated(req.fan, req.seed)
    alpha = _ample_alpha(fan, req.alpha)
    ring = cohomology.build_ring(fan)
    return {"chi": charnum.euler_char_hypersurface(ring, alpha, req.d)}


@app.post("/sign", response_model=schemas.SignResponse)
def sign(req: schemas.SignRequest):
    fan = _validated(req.fan, req.seed)
    alpha = _ample_alpha(fan, req.alpha)
    ring = cohomology.build_ring(fan)
    return {"sign": charnum.signature_hypersurface(ring, alpha, req.d)}


@app.post("/gram", response_model=schemas.GramResponse)
def gram(req: schemas.GramRequest):
    fan = _validated(req.fan, req.seed)
    alpha = _ample_alpha(fan, req.alpha)
    ring = cohomology.build_ring(fan)
    form = charnum.middle_form_gram(ring, alpha, req.d)
    p, q, z = lattice.signature(form)
    return {
        "gram": [list(row) for row in form.gram],
        "labels": list(form.labels or ()),
        "signature": [p, q, z],
        "sign": p - q,
    }


def _row(rep: handles.HandleReport) -> dict:
    return {
        "n": rep.n,
        "d": rep.d,
        "degree": rep.deg,
        "chi": rep.chi,
        "b_n_Y": rep.b_n_Y,
        "b_n_X": rep.b_n_X,
        "sign_Y": rep.sign_Y,
        "sign_HnX": rep.sign_HnX,
        "s_d": rep.s_d,
        "s_candidates": list(rep.s_candidates),
        "b_n_Y_prime_candidates": [rep.b_n_Y - 2 * s for s in rep.s_candidates],
        "kervaire": rep.kervaire,
        "undetermined": rep.undetermined,
        "hypothesis_ok": rep.hypothesis_ok,
        "ratio_2s_deg": fmt_rational(rep.ratio_2s_over_deg) or None,
        "ratio_sign_bn": fmt_rational(rep.ratio_sign_over_bn) or None,
        "ratio_bn_deg": fmt_rational(rep.ratio_bn_over_deg),
        "corollary_residual": rep.corollary_residual,
        "corollary_sign": rep.corollary_sign,
    }


@app.post("/handles", response_model=schemas.HandleRow)
def handles_endpoint(req: schemas.HandlesRequest):
    fan = _validated(req.fan, req.seed)
    alpha = _ample_alpha(fan, req.alpha)
    rep = handles.report(fan, alpha, req.d, kervaire=req.kervaire)
    return _row(rep)


@app.post("/sweep", response_model=schemas.SweepResponse)
def sweep(req: schemas.SweepRequest):
    fan = _validated(req.fan, req.seed)
    alpha = _ample_alpha(fan, req.alpha)
    result = handles.sweep(fan, alpha, req.d_min, req.d_max, kervaire=req.kervaire)
    s = result.summary
    summary = {
        "n": s.n,
        "d_last": s.d_last,
        "limit_bn_deg": fmt_rational(s.limit_bn_over_deg),
        "limit_sign_bn": fmt_rational(s.limit_sign_over_bn) or None,
        "limit_2s_deg": fmt_rational(s.limit_2s_over_deg) or None,
        "variant_sign_bn": fmt_rational(s.variant_sign_over_bn) or None,
        "variant_2s_deg": fmt_rational(s.variant_2s_over_deg) or None,
        "empirical_bn_deg": fmt_rational(s.empirical_bn_over_deg),
        "empirical_sign_bn": fmt_rational(s.empirical_sign_over_bn) or None,
        "empirical_2s_deg": fmt_rational(s.empirical_2s_over_deg) or None,
    }
    return {"rows": [_row(rep) for rep in result.reports], "summary": summary}


@app.post("/lattice-split", response_model=schemas.LatticeSplitResponse)
def lattice_split(req: schemas.LatticeSplitRequest):
    form = lattice.IntSymForm(gram=tuple(tuple(r) for r in req.gram))
    sub = None
    if req.f is not None:
        sub = lattice.Sublattice(parent=form, generators=tuple(tuple(r) for r in req.f))
    result = lattice.split_decomposition(form, sub, r_max=req.r_max)
    return {
        "planes": [{"x": list(x), "y": list(y), "c": c} for x, y, c in result.planes],
        "residual_gram": [list(r) for r in result.residual_a.gram],
        "residual_basis": [list(r) for r in result.residual_basis],
        "transform": [list(r) for r in result.transform],
        "terminal_case": result.terminal_case,
        "hypothesis_ok": result.hypothesis_ok,
        "rank_bound_stop_planes": result.rank_bound_stop_planes,
    }


@app.post("/arf", response_model=schemas.ArfResponse)
def arf_endpoint(req: schemas.ArfRequest):
    space = lattice.QuadraticSpaceZ2(
        gram2=tuple(tuple(v) for v in req.gram2), psi_basis=tuple(req.psi)
    )
    pairs, residual = lattice.normalize_quadratic_basis(space)
    return {
        "arf": lattice.arf(space),
        "residual": residual,
        "pairs": [{"a": list(a), "b": list(b)} for a, b in pairs],
    }
