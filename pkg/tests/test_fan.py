"""Fan parsing, smoothness/completeness validation, wall curves, ampleness."""

import json

import pytest

from conftest import F1_FAN, NONPROJ_FAN, SINGULAR_FAN, make_fan
from torictop import fan as fanmod
from torictop.errors import FanFormatError, NotCompleteError


def test_projective_space_fan_shape():
    f = fanmod.projective_space_fan(3)
    assert f.dim == 3
    assert f.n_rays == 4
    assert len(f.max_cones) == 4
    assert f.rays[-1] == (-1, -1, -1)


def test_product_fan_shape():
    f = fanmod.product_fan(fanmod.projective_space_fan(2), fanmod.projective_space_fan(3))
    assert f.dim == 5
    assert f.n_rays == 7
    assert len(f.max_cones) == 3 * 4
    # block structure: first factor's rays are zero-padded on the right
    assert f.rays[0] == (1, 0, 0, 0, 0)
    assert f.rays[3] == (0, 0, 1, 0, 0)


def test_fan_rejects_non_primitive_ray():
    with pytest.raises(FanFormatError):
        fanmod.Fan(dim=2, rays=((2, 0), (0, 1), (-1, -1)), max_cones=((0, 1), (1, 2), (0, 2)))


def test_fan_rejects_zero_ray():
    with pytest.raises(FanFormatError):
        fanmod.Fan(dim=1, rays=((0,), (1,)), max_cones=((0,), (1,)))


def test_fan_rejects_duplicate_rays():
    with pytest.raises(FanFormatError):
        fanmod.Fan(dim=2, rays=((1, 0), (1, 0), (0, 1)), max_cones=((0, 2), (1, 2)))


def test_fan_rejects_bad_cones():
    rays = ((1, 0), (0, 1), (-1, -1))
    with pytest.raises(FanFormatError):
        fanmod.Fan(dim=2, rays=rays, max_cones=((0, 1, 2),))  # wrong size
    with pytest.raises(FanFormatError):
        fanmod.Fan(dim=2, rays=rays, max_cones=((0, 3), (1, 2)))  # out of range
    with pytest.raises(FanFormatError):
        fanmod.Fan(dim=2, rays=rays, max_cones=((0, 0), (1, 2)))  # repeated index
    with pytest.raises(FanFormatError):
        fanmod.Fan(dim=2, rays=rays, max_cones=((0, 1), (1, 0), (1, 2)))  # duplicate cone


def test_parse_fan_strictness():
    good = {"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "max_cones": [[0, 1], [1, 2], [0, 2]]}
    f = fanmod.parse_fan(json.dumps(good))
    assert f.n_rays == 3

    bad = dict(good, extra_field=1)
    with pytest.raises(FanFormatError):
        fanmod.parse_fan(json.dumps(bad))

    missing = {"dim": 2, "rays": good["rays"]}
    with pytest.raises(FanFormatError):
        fanmod.parse_fan(json.dumps(missing))

    with pytest.raises(FanFormatError):
        fanmod.parse_fan("[1, 2]")
    with pytest.raises(FanFormatError):
        fanmod.parse_fan("not json")
    with pytest.raises(FanFormatError):
        fanmod.parse_fan(json.dumps(dict(good, dim="2")))

    floaty = dict(good, rays=[[1, 0], [0, 1], [-1.0, -1]])
    with pytest.raises(FanFormatError):
        fanmod.parse_fan(json.dumps(floaty))


def test_validate_smooth():
    assert fanmod.validate_smooth(fanmod.projective_space_fan(4)).smooth
    rep = fanmod.validate_smooth(make_fan(SINGULAR_FAN))
    assert not rep.smooth
    assert len(rep.offending_cones) == 1
    # the offending cone is the one on rays 0 and 2 (determinant -2)
    bad = make_fan(SINGULAR_FAN).max_cones[rep.offending_cones[0]]
    assert sorted(bad) == [0, 2]


def test_validate_complete_presets():
    for preset in ("cp1", "cp2", "cp5", "product:cp2,cp3"):
        rep = fanmod.validate_complete(fanmod.preset_fan(preset))
        assert rep.complete and rep.wall_check and rep.coverage_check


def test_validate_complete_missing_cone():
    f = fanmod.projective_space_fan(3)
    partial = fanmod.Fan(dim=3, rays=f.rays, max_cones=f.max_cones[:-1])
    rep = fanmod.validate_complete(partial)
    assert not rep.complete
    assert not rep.wall_check
    assert rep.bad_walls
    assert not rep.coverage_check
    assert rep.uncovered


def test_validate_complete_deterministic():
    f = fanmod.projective_space_fan(2)
    partial = fanmod.Fan(dim=2, rays=f.rays, max_cones=f.max_cones[:-1])
    a = fanmod.validate_complete(partial, seed=42)
    b = fanmod.validate_complete(partial, seed=42)
    assert a == b


def test_wall_relation_projective_plane():
    # rays e1, e2, -e1-e2: every wall relation is v + v' + 1*u = 0
    curves = fanmod.wall_curves(fanmod.projective_space_fan(2))
    assert len(curves) == 3
    for c in curves:
        assert c.relation_coeffs == (1,)


def test_wall_relation_p1xp1():
    f = fanmod.product_fan(fanmod.projective_space_fan(1), fanmod.projective_space_fan(1))
    curves = fanmod.wall_curves(f)
    assert len(curves) == 4
    for c in curves:
        assert c.relation_coeffs == (0,)


def test_wall_relation_p4():
    curves = fanmod.wall_curves(fanmod.projective_space_fan(4))
    assert len(curves) == 10
    for c in curves:
        assert c.relation_coeffs == (1, 1, 1)


def test_wall_relation_hirzebruch(f1_fan):
    # on a surface the relation coefficient is the curve's self-intersection:
    # ray 1 carries the -1-section, ray 3 the +1-section, rays 0 and 2 fibers
    curves = fanmod.wall_curves(f1_fan)
    by_wall = {c.wall: c.relation_coeffs[0] for c in curves}
    assert by_wall == {(0,): 0, (1,): -1, (2,): 0, (3,): 1}


def test_wall_relation_exactness():
    # v + v' + sum c_i u_i = 0 holds on the nose, for every preset fan
    for preset in ("cp2", "cp3", "cp4", "product:cp1,cp2"):
        f = fanmod.preset_fan(preset)
        for c in fanmod.wall_curves(f):
            v, w = c.opposite_rays
            total = [a + b for a, b in zip(f.rays[v], f.rays[w])]
            for coeff, i in zip(c.relation_coeffs, c.wall):
                total = [t + coeff * r for t, r in zip(total, f.rays[i])]
            assert all(t == 0 for t in total)


def test_wall_curves_incomplete_fan_raises():
    f = fanmod.projective_space_fan(2)
    partial = fanmod.Fan(dim=2, rays=f.rays, max_cones=f.max_cones[:-1])
    with pytest.raises(NotCompleteError):
        fanmod.wall_curves(partial)


def test_is_ample_projective_plane():
    f = fanmod.projective_space_fan(2)
    rep = fanmod.is_ample(f, fanmod.DivisorClass((1, 0, 0)))
    assert rep.ample
    assert rep.wall_values == (1, 1, 1)
    assert not fanmod.is_ample(f, fanmod.DivisorClass((-1, 0, 0))).ample
    assert not fanmod.is_ample(f, fanmod.DivisorClass((0, 0, 0))).ample


def test_is_ample_hirzebruch(f1_fan):
    # anticanonical class is ample on F_1; a single boundary divisor is not
    assert fanmod.is_ample(f1_fan, fanmod.DivisorClass((1, 1, 1, 1))).ample
    assert not fanmod.is_ample(f1_fan, fanmod.DivisorClass((0, 1, 0, 0))).ample


def test_is_ample_wrong_length():
    with pytest.raises(FanFormatError):
        fanmod.is_ample(fanmod.projective_space_fan(2), fanmod.DivisorClass((1, 0)))


def test_is_projective_presets():
    for preset in ("cp1", "cp3", "product:cp1,cp1", "product:cp2,cp3"):
        rep = fanmod.is_projective(fanmod.preset_fan(preset))
        assert rep.projective
        assert rep.witness is not None
        assert fanmod.is_ample(fanmod.preset_fan(preset), rep.witness).ample


def test_is_projective_hirzebruch(f1_fan):
    assert fanmod.is_projective(f1_fan).projective


def test_nonprojective_fixture(nonproj_fan):
    assert fanmod.validate_smooth(nonproj_fan).smooth
    assert fanmod.validate_complete(nonproj_fan).complete
    rep = fanmod.is_projective(nonproj_fan)
    assert not rep.projective
    assert rep.witness is None
    # every single wall value can still be made positive in isolation;
    # infeasibility is a global obstruction, so double-check no class from a
    # small grid is ample
    for coeffs in ((1,) * 8, (1, 2, 3, 4, 5, 6, 7, 8), (8, 7, 6, 5, 4, 3, 2, 1)):
        assert not fanmod.is_ample(nonproj_fan, fanmod.DivisorClass(coeffs)).ample


def test_preset_fan():
    assert fanmod.preset_fan("cp3").dim == 3
    assert fanmod.preset_fan("product:cp1,cp2").dim == 3
    assert fanmod.preset_fan("nope") is None
    assert fanmod.preset_fan("cp") is None
    with pytest.raises(FanFormatError):
        fanmod.preset_fan("cp0")
    with pytest.raises(FanFormatError):
        fanmod.preset_fan("product:cp1")
    with pytest.raises(FanFormatError):
        fanmod.preset_fan("product:cp1,nope")


def test_resolve_fan_path(tmp_path):
    path = tmp_path / "cp1.json"
    path.write_text(json.dumps({"dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]}))
    f = fanmod.resolve_fan(str(path))
    assert f.dim == 1
    assert fanmod.resolve_fan("cp2").dim == 2
    with pytest.raises(OSError):
        fanmod.resolve_fan(str(tmp_path / "missing.json"))


def test_divisor_class_scaled():
    d = fanmod.DivisorClass((1, -2, 0))
    assert d.scaled(3).coeffs == (3, -6, 0)


def test_fan_name_roundtrip():
    f = make_fan(dict(F1_FAN, name="hirzebruch-1"))
    assert f.name == "hirzebruch-1"
    with pytest.raises(FanFormatError):
        make_fan(dict(F1_FAN, name=7))
