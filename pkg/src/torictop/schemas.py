"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, model_validator


class FanIn(BaseModel):
    """A fan, either by preset name or inline.

    Presets: "cp<m>" and "product:cp<a>,cp<b>".
    """

    model_config = ConfigDict(extra="forbid")

    preset: Optional[str] = None
    dim: Optional[int] = None
    rays: Optional[List[List[int]]] = None
    max_cones: Optional[List[List[int]]] = None
    name: Optional[str] = None

    @model_validator(mode="after")
    def _one_source(self):
        inline = self.dim is not None or self.rays is not None or self.max_cones is not None
        if self.preset is not None and inline:
            raise ValueError("give either a preset or inline fan data, not both")
        if self.preset is None:
            if self.dim is None or self.rays is None or self.max_cones is None:
                raise ValueError("inline fan needs dim, rays and max_cones")
        return self


class CheckRequest(BaseModel):
    fan: FanIn
    seed: int = 0


class CheckResponse(BaseModel):
    smooth: bool
    complete: Optional[bool] = None
    projective: Optional[bool] = None
    ample_witness: Optional[List[int]] = None
    dim: int
    n_rays: int


class BettiRequest(BaseModel):
    fan: FanIn
    seed: int = 0


class BettiResponse(BaseModel):
    betti: List[int]


class DegreeRequest(BaseModel):
    fan: FanIn
    alpha: List[int]
    seed: int = 0


class DegreeResponse(BaseModel):
    degree: int


class ChiRequest(BaseModel):
    fan: FanIn
    alpha: List[int]
    d: int
    seed: int = 0


class ChiResponse(BaseModel):
    chi: int


class SignRequest(BaseModel):
    fan: FanIn
    alpha: List[int]
    d: int
    seed: int = 0


class SignResponse(BaseModel):
    sign: int


class GramRequest(BaseModel):
    fan: FanIn
    alpha: List[int]
    d: int = 1
    seed: int = 0


class GramResponse(BaseModel):
    gram: List[List[int]]
    labels: List[str]
    signature: List[int]  # [p, q, z]
    sign: int


class HandlesRequest(BaseModel):
    fan: FanIn
    alpha: List[int]
    d: int
    kervaire: Optional[int] = None
    seed: int = 0


class HandleRow(BaseModel):
    n: int
    d: int
    degree: int
    chi: int
    b_n_Y: int
    b_n_X: int
    sign_Y: Optional[int] = None
    sign_HnX: Optional[int] = None
    s_d: Optional[int] = None
    s_candidates: List[int]
    b_n_Y_prime_candidates: List[int]
    kervaire: Optional[int] = None
    undetermined: bool
    hypothesis_ok: bool
    ratio_2s_deg: Optional[str] = None  # exact "p/q"
    ratio_sign_bn: Optional[str] = None
    ratio_bn_deg: str
    corollary_residual: Optional[int] = None
    corollary_sign: Optional[int] = None


class SweepRequest(BaseModel):
    fan: FanIn
    alpha: List[int]
    d_min: int
    d_max: int
    kervaire: Optional[int] = None
    seed: int = 0


class SweepSummaryOut(BaseModel):
    n: int
    d_last: int
    limit_bn_deg: str
    limit_sign_bn: Optional[str] = None
    limit_2s_deg: Optional[str] = None
    variant_sign_bn: Optional[str] = None
    variant_2s_deg: Optional[str] = None
    empirical_bn_deg: str
    empirical_sign_bn: Optional[str] = None
    empirical_2s_deg: Optional[str] = None


class SweepResponse(BaseModel):
    rows: List[HandleRow]
    summary: SweepSummaryOut


class LatticeSplitRequest(BaseModel):
    gram: List[List[int]]
    f: Optional[List[List[int]]] = None
    r_max: int = 12


class PlaneOut(BaseModel):
    x: List[int]
    y: List[int]
    c: int


class LatticeSplitResponse(BaseModel):
    planes: List[PlaneOut]
    residual_gram: List[List[int]]
    residual_basis: List[List[int]]
    transform: List[List[int]]
    terminal_case: str
    hypothesis_ok: bool
    rank_bound_stop_planes: int


class ArfRequest(BaseModel):
    gram2: List[List[int]]
    psi: List[int]


class PairOut(BaseModel):
    a: List[int]
    b: List[int]


class ArfResponse(BaseModel):
    arf: int
    residual: int
    pairs: List[PairOut]
