"""Command-line interface.

Thin client over the core modules; stdout only, deterministic output.
Exit codes: 0 ok, 1 usage, 2 not smooth, 3 not complete, 4 alpha not ample,
5 hypothesis violation, 6 internal consistency failure, 7 search exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from . import charnum, cohomology, fan as fanmod, handles, lattice
from .errors import (
    FanFormatError,
    HypothesisError,
    InternalConsistencyError,
    NotAmpleError,
    NotCompleteError,
    NotSmoothError,
    SearchExhaustedError,
)

SWEEP_HEADER_EVEN = "d,degree,chi,b_n,sign_Y,sign_HnX,s_d,ratio_2s_deg,ratio_sign_bn"
SWEEP_HEADER_ODD = "d,degree,chi,b_n,s_min,s_max,ratio_bn_deg"

_EXIT_CODES = (
    (NotSmoothError, 2),
    (NotCompleteError, 3),
    (NotAmpleError, 4),
    (HypothesisError, 5),
    (InternalConsistencyError, 6),
    (SearchExhaustedError, 7),
)


def decimal12(value: Fraction) -> str:
    """12 significant digits, round half to even."""
    with localcontext() as ctx:
        ctx.prec = 12
        ctx.rounding = ROUND_HALF_EVEN
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def fmt_rational(value: Fraction | None) -> str:
    if value is None:
        return ""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fmt_marked(value: Fraction | None) -> str:
    """Exact rational with a clearly marked decimal rendering."""
    if value is None:
        return ""
    return f"{fmt_rational(value)} (~{decimal12(value)})"


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return fmt_rational(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _emit(payload: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(_jsonable(payload), indent=2))
    else:
        for line in text_lines:
            print(line)


def _parse_alpha(fan: fanmod.Fan, text: str) -> fanmod.DivisorClass:
    if text == "h":
        coeffs = tuple(1 if i == 0 else 0 for i in range(fan.n_rays))
        return fanmod.DivisorClass(coeffs)
    try:
        coeffs = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise FanFormatError(f"alpha must be comma-separated integers or 'h': {text!r}") from exc
    if len(coeffs) != fan.n_rays:
        raise FanFormatError(
            f"alpha has {len(coeffs)} coefficients, fan has {fan.n_rays} rays"
        )
    return fanmod.DivisorClass(coeffs)


def _validated_fan(source: str, seed: int) -> fanmod.Fan:
    fan = fanmod.resolve_fan(source)
    smooth = fanmod.validate_smooth(fan)
    if not smooth.smooth:
        raise NotSmoothError(
            f"cones {list(smooth.offending_cones)} are not unimodular"
        )
    complete = fanmod.validate_complete(fan, seed=seed)
    if not complete.complete:
        detail = "wall pairing" if not complete.wall_check else "coverage sampling"
        raise NotCompleteError(f"fan is not complete ({detail} failed)")
    return fan


def _ample_or_raise(fan: fanmod.Fan, alpha: fanmod.DivisorClass) -> None:
    rep = fanmod.is_ample(fan, alpha)
    if not rep.ample:
        raise NotAmpleError(
            f"alpha is not ample (minimal wall value {min(rep.wall_values)})"
        )


def cmd_check(args) -> int:
    fan = fanmod.resolve_fan(args.fan)
    smooth = fanmod.validate_smooth(fan)
    payload = {
        "name": fan.name,
        "dim": fan.dim,
        "n_rays": fan.n_rays,
        "smooth": smooth.smooth,
        "complete": None,
        "projective": None,
        "ample_witness": None,
    }
    lines = [f"smooth: {'yes' if smooth.smooth else 'no'}"]
    if not smooth.smooth:
        lines.append(f"offending cones: {list(smooth.offending_cones)}")
        _emit(payload, lines, args.format)
        return 2
    complete = fanmod.validate_complete(fan, seed=args.seed)
    payload["complete"] = complete.complete
    lines.append(f"complete: {'yes' if complete.complete else 'no'}")
    if not complete.complete:
        if complete.bad_walls:
            lines.append(f"unpaired walls: {[list(w) for w in complete.bad_walls]}")
        if complete.uncovered:
            lines.append(f"uncovered directions: {[list(v) for v in complete.uncovered]}")
        _emit(payload, lines, args.format)
        return 3
    proj = fanmod.is_projective(fan)
    payload["projective"] = proj.projective
    payload["ample_witness"] = list(proj.witness.coeffs) if proj.witness else None
    lines.append(f"projective: {'yes' if proj.projective else 'no'}")
    if proj.witness is not None:
        lines.append("ample witness: " + ",".join(str(a) for a in proj.witness.coeffs))
    _emit(payload, lines, args.format)
    return 0 if proj.projective else 4


def cmd_betti(args) -> int:
    fan = _validated_fan(args.fan, args.seed)
    b = cohomology.betti(fan)
    _emit({"betti": b}, [",".join(str(x) for x in b)], args.format)
    return 0


def _ring_alpha(args) -> tuple[fanmod.Fan, cohomology.CohomologyRing, fanmod.DivisorClass]:
    fan = _validated_fan(args.fan, args.seed)
    alpha = _parse_alpha(fan, args.alpha)
    _ample_or_raise(fan, alpha)
    return fan, cohomology.build_ring(fan), alpha


def cmd_degree(args) -> int:
    _, ring, alpha = _ring_alpha(args)
    val = charnum.degree(ring, alpha)
    _emit({"degree": val}, [str(val)], args.format)
    return 0


def cmd_chi(args) -> int:
    _, ring, alpha = _ring_alpha(args)
    val = charnum.euler_char_hypersurface(ring, alpha, args.d)
    _emit({"chi": val}, [str(val)], args.format)
    return 0


def cmd_sign(args) -> int:
    _, ring, alpha = _ring_alpha(args)
    val = charnum.signature_hypersurface(ring, alpha, args.d)
    _emit({"sign": val}, [str(val)], args.format)
    return 0


def cmd_gram(args) -> int:
    _, ring, alpha = _ring_alpha(args)
    form = charnum.middle_form_gram(ring, alpha, args.d)
    p, q, z = lattice.signature(form)
    payload = {
        "gram": [list(row) for row in form.gram],
        "labels": list(form.labels or ()),
        "signature": [p, q, z],
        "sign": p - q,
    }
    lines = [" ".join(str(x) for x in row) for row in form.gram]
    if form.labels:
        lines.append("labels: " + ",".join(form.labels))
    lines.append(f"signature: p={p} q={q} z={z}")
    lines.append(f"sign: {p - q}")
    _emit(payload, lines, args.format)
    return 0


def _report_payload(rep: handles.HandleReport) -> dict:
    payload = {
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
        "ratio_2s_deg": rep.ratio_2s_over_deg,
        "ratio_sign_bn": rep.ratio_sign_over_bn,
        "ratio_bn_deg": rep.ratio_bn_over_deg,
        "corollary_residual": rep.corollary_residual,
        "corollary_sign": rep.corollary_sign,
    }
    return payload


def _report_lines(rep: handles.HandleReport) -> list[str]:
    lines = [
        f"n: {rep.n}",
        f"d: {rep.d}",
        f"degree: {rep.deg}",
        f"chi: {rep.chi}",
        f"b_n_Y: {rep.b_n_Y}",
        f"b_n_X: {rep.b_n_X}",
    ]
    if rep.n % 2 == 0:
        lines += [
            f"sign_Y: {rep.sign_Y}",
            f"sign_HnX: {rep.sign_HnX}",
            f"s_d: {rep.s_d}",
            f"b_n_Y_prime: {rep.b_n_Y - 2 * rep.s_d}",
        ]
        choice = "-" if rep.corollary_sign == 1 else "+"
        lines.append(
            f"corollary_residual: {rep.corollary_residual} "
            f"(against b_n_X {choice} |sign_HnX|)"
        )
    elif rep.s_d is not None:
        lines += [
            f"s_d: {rep.s_d}",
            f"b_n_Y_prime: {rep.b_n_Y - 2 * rep.s_d}",
        ]
        if rep.kervaire is not None:
            lines.append(f"kervaire: {rep.kervaire}")
    else:
        cands = ", ".join(
            f"{s} (b_n_Y_prime {rep.b_n_Y - 2 * s})" for s in rep.s_candidates
        )
        lines.append("s_d: undetermined (kervaire invariant not supplied)")
        lines.append(f"s_candidates: {cands}")
    lines.append(f"hypothesis_ok: {'yes' if rep.hypothesis_ok else 'no'}")
    if rep.ratio_2s_over_deg is not None:
        lines.append(f"ratio_2s_deg: {fmt_marked(rep.ratio_2s_over_deg)}")
    if rep.ratio_sign_over_bn is not None:
        lines.append(f"ratio_sign_bn: {fmt_marked(rep.ratio_sign_over_bn)}")
    lines.append(f"ratio_bn_deg: {fmt_marked(rep.ratio_bn_over_deg)}")
    return lines


def cmd_handles(args) -> int:
    fan = _validated_fan(args.fan, args.seed)
    alpha = _parse_alpha(fan, args.alpha)
    rep = handles.report(fan, alpha, args.d, kervaire=args.kervaire)
    _emit(_report_payload(rep), _report_lines(rep), args.format)
    return 0


def _sweep_rows(result: handles.SweepResult) -> tuple[str, list[str]]:
    even = result.summary.n % 2 == 0
    header = SWEEP_HEADER_EVEN if even else SWEEP_HEADER_ODD
    rows = []
    for rep in result.reports:
        if even:
            rows.append(
                f"{rep.d},{rep.deg},{rep.chi},{rep.b_n_Y},{rep.sign_Y},"
                f"{rep.sign_HnX},{rep.s_d},{fmt_rational(rep.ratio_2s_over_deg)},"
                f"{fmt_rational(rep.ratio_sign_over_bn)}"
            )
        else:
            rows.append(
                f"{rep.d},{rep.deg},{rep.chi},{rep.b_n_Y},{rep.s_candidates[0]},"
                f"{rep.s_candidates[-1]},{fmt_rational(rep.ratio_bn_over_deg)}"
            )
    return header, rows


def _summary_lines(summary: handles.SweepSummary) -> list[str]:
    lines = [
        f"# limit ratio_bn_deg = {fmt_marked(summary.limit_bn_over_deg)}; "
        f"empirical(d={summary.d_last}) = {fmt_marked(summary.empirical_bn_over_deg)}; "
        f"gap = {fmt_marked(abs(summary.empirical_bn_over_deg - summary.limit_bn_over_deg))}"
    ]
    if summary.limit_sign_over_bn is not None:
        emp = summary.empirical_sign_over_bn
        gap = abs(emp - summary.limit_sign_over_bn) if emp is not None else None
        lines.append(
            f"# limit ratio_sign_bn = {fmt_marked(summary.limit_sign_over_bn)}; "
            f"empirical(d={summary.d_last}) = {fmt_marked(emp)}; gap = {fmt_marked(gap)}"
        )
        vgap = abs(emp - summary.variant_sign_over_bn) if emp is not None else None
        lines.append(
            f"# variant printed ratio_sign_bn = {fmt_marked(summary.variant_sign_over_bn)}; "
            f"gap = {fmt_marked(vgap)} (reported, not asserted)"
        )
    if summary.limit_2s_over_deg is not None:
        emp = summary.empirical_2s_over_deg
        gap = abs(emp - summary.limit_2s_over_deg) if emp is not None else None
        lines.append(
            f"# limit ratio_2s_deg = {fmt_marked(summary.limit_2s_over_deg)}; "
            f"empirical(d={summary.d_last}) = {fmt_marked(emp)}; gap = {fmt_marked(gap)}"
        )
        vgap = abs(emp - summary.variant_2s_over_deg) if emp is not None else None
        lines.append(
            f"# variant printed ratio_2s_deg = {fmt_marked(summary.variant_2s_over_deg)}; "
            f"gap = {fmt_marked(vgap)} (reported, not asserted)"
        )
    return lines


def cmd_sweep(args) -> int:
    fan = _validated_fan(args.fan, args.seed)
    alpha = _parse_alpha(fan, args.alpha)
    _ample_or_raise(fan, alpha)
    result = handles.sweep(fan, alpha, args.d_min, args.d_max, kervaire=args.kervaire)
    header, rows = _sweep_rows(result)
    if args.format == "json":
        payload = {
            "rows": [_report_payload(rep) for rep in result.reports],
            "summary": {
                "n": result.summary.n,
                "d_last": result.summary.d_last,
                "limit_bn_deg": result.summary.limit_bn_over_deg,
                "limit_sign_bn": result.summary.limit_sign_over_bn,
                "limit_2s_deg": result.summary.limit_2s_over_deg,
                "variant_sign_bn": result.summary.variant_sign_over_bn,
                "variant_2s_deg": result.summary.variant_2s_over_deg,
                "empirical_bn_deg": result.summary.empirical_bn_over_deg,
                "empirical_sign_bn": result.summary.empirical_sign_over_bn,
                "empirical_2s_deg": result.summary.empirical_2s_over_deg,
            },
        }
        print(json.dumps(_jsonable(payload), indent=2))
    else:
        print(header)
        for row in rows:
            print(row)
        for line in _summary_lines(result.summary):
            print(line)
    return 0


def cmd_lattice_split(args) -> int:
    try:
        form = lattice.load_gram(args.gram)
        sub = None
        if args.f:
            rows = lattice.parse_matrix(open(args.f, encoding="utf-8").read())
            sub = lattice.Sublattice(parent=form, generators=tuple(tuple(r) for r in rows))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    result = lattice.split_decomposition(form, sub, r_max=args.r_max)
    payload = {
        "planes": [
            {"x": list(x), "y": list(y), "c": c} for x, y, c in result.planes
        ],
        "residual_gram": [list(r) for r in result.residual_a.gram],
        "residual_basis": [list(r) for r in result.residual_basis],
        "transform": [list(r) for r in result.transform],
        "terminal_case": result.terminal_case,
        "hypothesis_ok": result.hypothesis_ok,
        "rank_bound_stop_planes": result.rank_bound_stop_planes,
    }
    lines = [f"planes: {len(result.planes)}"]
    for i, (x, y, c) in enumerate(result.planes):
        lines.append(
            f"plane {i}: x = {','.join(map(str, x))}; y = {','.join(map(str, y))}; c = {c}"
        )
    lines.append(f"residual rank: {result.residual_a.dim}")
    for row in result.residual_a.gram:
        lines.append("residual: " + " ".join(str(v) for v in row))
    lines.append(f"terminal: {result.terminal_case}")
    lines.append(f"stop planes under rank bound: {result.rank_bound_stop_planes}")
    lines.append(f"hypothesis_ok: {'yes' if result.hypothesis_ok else 'no'}")
    for row in result.transform:
        lines.append("transform: " + " ".join(str(v) for v in row))
    _emit(payload, lines, args.format)
    return 0


def cmd_arf(args) -> int:
    try:
        rows = lattice.parse_matrix(open(args.gram, encoding="utf-8").read())
        psi = tuple(int(tok) for tok in args.psi.split(","))
        space = lattice.QuadraticSpaceZ2(
            gram2=tuple(tuple(v) for v in rows), psi_basis=psi
        )
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    pairs, residual = lattice.normalize_quadratic_basis(space)
    value = lattice.arf(space)
    payload = {
        "arf": value,
        "residual": residual,
        "pairs": [{"a": list(a), "b": list(b)} for a, b in pairs],
    }
    lines = [f"arf: {value}"]
    for i, (a, b) in enumerate(pairs):
        lines.append(
            f"pair {i}: a = {''.join(map(str, a))}; b = {''.join(map(str, b))}"
            + ("  (psi = 1,1)" if residual and i == 0 else "")
        )
    _emit(payload, lines, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torictop",
        description="Topology of hypersurfaces in smooth projective toric manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, alpha=False, d=False):
        p.add_argument("fan", help="fan JSON path or preset (cp<m>, product:cp<a>,cp<b>)")
        p.add_argument("--seed", type=int, default=0, help="coverage sampling seed")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        if alpha:
            p.add_argument("--alpha", required=True, help="comma-separated integers or 'h'")
        if d:
            p.add_argument("--d", type=int, required=True, help="hypersurface degree multiplier")

    p = sub.add_parser("check", help="validate smooth / complete / projective")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("betti", help="Betti numbers b_0..b_2dim")
    add_common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("degree", help="degree <alpha^dim, [X]>")
    add_common(p, alpha=True)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("chi", help="Euler characteristic of Y_d")
    add_common(p, alpha=True, d=True)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("sign", help="signature of Y_d (even n)")
    add_common(p, alpha=True, d=True)
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("gram", help="middle triple-product Gram matrix and signature")
    add_common(p, alpha=True)
    p.add_argument("--d", type=int, default=1)
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("handles", help="handle count report for one d")
    add_common(p, alpha=True, d=True)
    p.add_argument("--kervaire", type=int, choices=(0, 1), default=None)
    p.set_defaults(func=cmd_handles)

    p = sub.add_parser("sweep", help="handle counts over a d range (CSV)")
    add_common(p, alpha=True)
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--kervaire", type=int, choices=(0, 1), default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("lattice-split", help="split hyperbolic planes off a unimodular Gram")
    p.add_argument("gram", help="Gram file: rank line, then integer rows")
    p.add_argument("--f", default=None, help="sublattice file (rows = generators)")
    p.add_argument("--r-max", type=int, default=lattice.DEFAULT_RADIUS)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_lattice_split)

    p = sub.add_parser("arf", help="Arf invariant and normalized basis over ZZ_2")
    p.add_argument("gram", help="mod-2 Gram file (entries 0/1)")
    p.add_argument("--psi", required=True, help="comma-separated 0/1 values per basis vector")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_arf)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except tuple(cls for cls, _ in _EXIT_CODES) as exc:
        for cls, code in _EXIT_CODES:
            if isinstance(exc, cls):
                print(f"error: {exc}", file=sys.stderr)
                return code
        raise
    except (FanFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
