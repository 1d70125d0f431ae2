"""Bernoulli/tanh coefficients and hypersurface invariants vs independent oracles."""

from fractions import Fraction
from math import comb, factorial

import pytest

from torictop import charnum, cohomology, fan as fanmod
from torictop.errors import HypothesisError, InternalConsistencyError

from conftest import F1_FAN, make_fan

RINGS = {}


def ring_for(preset):
    if preset not in RINGS:
        RINGS[preset] = cohomology.build_ring(fanmod.preset_fan(preset))
    return RINGS[preset]


def akiyama_tanigawa(n):
    """Signed Bernoulli number B_n; independent of the recurrence in charnum."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def series_div(num, den, order):
    """Power-series quotient num/den to x^order, exact Fractions."""
    out = [Fraction(0)] * (order + 1)
    for k in range(order + 1):
        acc = num[k] if k < len(num) else Fraction(0)
        for i in range(1, k + 1):
            di = den[i] if i < len(den) else Fraction(0)
            acc -= di * out[k - i]
        out[k] = acc / den[0]
    return out


def tanh_series(order):
    sinh = [Fraction(0)] * (order + 1)
    cosh = [Fraction(0)] * (order + 1)
    for k in range(0, order + 1, 2):
        cosh[k] = Fraction(1, factorial(k))
        if k + 1 <= order:
            sinh[k + 1] = Fraction(1, factorial(k + 1))
    return series_div(sinh, cosh, order), sinh, cosh


def test_bernoulli_values():
    assert [charnum.bernoulli(j) for j in range(1, 5)] == [
        Fraction(1, 6),
        Fraction(1, 30),
        Fraction(1, 42),
        Fraction(1, 30),
    ]
    with pytest.raises(ValueError):
        charnum.bernoulli(0)


def test_bernoulli_against_akiyama_tanigawa():
    for j in range(1, 9):
        assert charnum.bernoulli(j) == abs(akiyama_tanigawa(2 * j))


def test_tanh_coefficients_match_series_quotient():
    order = 15
    tanh, sinh, cosh = tanh_series(order)
    assert tanh[1:4] == [Fraction(1), Fraction(0), Fraction(-1, 3)]
    assert tanh[5] == Fraction(2, 15)
    assert tanh[7] == Fraction(-17, 315)
    for j in range(1, 8):
        assert charnum.tanh_coefficient(j) == tanh[2 * j - 1]
    # x/tanh = x cosh / sinh; shift out the leading x of sinh
    xcoth = series_div(cosh, sinh[1:], order - 1)
    assert xcoth[0] == 1
    for j in range(1, 7):
        assert charnum.x_over_tanh_coefficient(j) == xcoth[2 * j]


def test_total_chern_projective_plane():
    ring = ring_for("cp2")
    c = charnum.total_chern(ring)
    h = ring.generator(0)
    assert c.degree_part(0).coeffs == ring.one().coeffs
    assert c.degree_part(1).coeffs == h.scale(3).coeffs
    assert cohomology.evaluate(c.degree_part(2)) == 3


def test_top_chern_is_euler_count():
    # Gauss-Bonnet: <c_top(TX)> equals the number of max cones
    for preset in ("cp1", "cp3", "cp5", "product:cp1,cp1", "product:cp2,cp2"):
        ring = ring_for(preset)
        fan = ring.fan
        c = charnum.total_chern(ring)
        assert cohomology.evaluate(c.degree_part(ring.dim)) == len(fan.max_cones)


def test_l_class_top_is_signature_of_x():
    # <L(X), [X]> = sign(X) = alternating sum of even Betti numbers
    cases = [
        ("cp2", 1),
        ("cp4", 1),
        ("product:cp1,cp1", 0),
        ("product:cp2,cp2", 1),  # betti 1,2,3,2,1 -> 1-2+3-2+1
    ]
    for preset, expected in cases:
        ring = ring_for(preset)
        top = charnum.l_class(ring).degree_part(ring.dim)
        assert cohomology.evaluate(top) == expected
    f1 = cohomology.build_ring(make_fan(F1_FAN))
    assert cohomology.evaluate(charnum.l_class(f1).degree_part(2)) == 0


def test_degree():
    assert charnum.degree(ring_for("cp5"), (1, 0, 0, 0, 0, 0)) == 1
    assert charnum.degree(ring_for("cp5"), (2, 0, 0, 0, 0, 0)) == 32
    # Segre: deg (h1+h2) on P^2 x P^3 is C(5, 2)
    assert charnum.degree(ring_for("product:cp2,cp3"), (1, 0, 0, 1, 0, 0, 0)) == comb(5, 2)


def test_chi_polynomial_binomial_oracle():
    # on P^m the d^p coefficient is (-1)^(p-1) C(m+1, m-p)
    for m in (3, 4, 5):
        ring = ring_for(f"cp{m}")
        alpha = (1,) + (0,) * m
        expected = [0] + [(-1) ** (p - 1) * comb(m + 1, m - p) for p in range(1, m + 1)]
        assert charnum.chi_polynomial(ring, alpha) == expected


def test_chi_quintic_threefold():
    ring = ring_for("cp4")
    alpha = (1, 0, 0, 0, 0)
    assert charnum.chi_polynomial(ring, alpha) == [0, 10, -10, 5, -1]
    assert charnum.euler_char_hypersurface(ring, alpha, 5) == -200
    assert charnum.bn_hypersurface(ring, alpha, 5) == 204


def test_chi_degree_one_is_lower_projective_space():
    for m in (2, 3, 4, 5):
        ring = ring_for(f"cp{m}")
        alpha = (1,) + (0,) * m
        assert charnum.euler_char_hypersurface(ring, alpha, 1) == m


def test_surfaces_in_p3():
    ring = ring_for("cp3")
    alpha = (1, 0, 0, 0)
    for d in range(1, 7):
        assert charnum.euler_char_hypersurface(ring, alpha, d) == d**3 - 4 * d**2 + 6 * d
        assert charnum.signature_hypersurface(ring, alpha, d) == (4 - d * d) * d // 3
    # K3 at d = 4
    assert charnum.euler_char_hypersurface(ring, alpha, 4) == 24
    assert charnum.bn_hypersurface(ring, alpha, 4) == 22
    assert charnum.signature_hypersurface(ring, alpha, 4) == -16


def test_curves_on_quadric_surface():
    # a degree-(d,d) curve on P^1 x P^1 has genus (d-1)^2
    ring = ring_for("product:cp1,cp1")
    alpha = (1, 0, 1, 0)
    for d in (1, 2, 3, 4):
        genus = (d - 1) ** 2
        assert charnum.euler_char_hypersurface(ring, alpha, d) == 2 - 2 * genus


def test_signature_polynomial_p5():
    # L(P^5) = 1 + 2 h^2 + 23/15 h^4 gives exact coefficients
    ring = ring_for("cp5")
    alpha = (1, 0, 0, 0, 0, 0)
    expected = [
        Fraction(0),
        Fraction(23, 15),
        Fraction(0),
        Fraction(-2, 3),
        Fraction(0),
        Fraction(2, 15),
    ]
    assert charnum.signature_polynomial(ring, alpha) == expected


def test_cubic_fourfold():
    ring = ring_for("cp5")
    alpha = (1, 0, 0, 0, 0, 0)
    inv = charnum.hypersurface_invariants(ring, alpha, 3)
    assert (inv.d, inv.n, inv.deg) == (3, 4, 243)
    assert inv.chi == 27
    assert inv.b_n == 23
    assert inv.sign_Y == 19
    # degree-1 and degree-2 checks: P^4 itself and the quadric fourfold
    assert charnum.signature_hypersurface(ring, alpha, 1) == 1
    assert charnum.signature_hypersurface(ring, alpha, 2) == 2
    assert charnum.bn_hypersurface(ring, alpha, 1) == 1
    assert charnum.bn_hypersurface(ring, alpha, 2) == 2


def test_leading_coefficients():
    # chi: top coefficient is (-1)^(dim-1) deg; sign: tanh coeff times deg
    for preset, alpha in (("cp4", (1, 0, 0, 0, 0)), ("cp5", (2, 0, 0, 0, 0, 0))):
        ring = ring_for(preset)
        dim = ring.dim
        deg = charnum.degree(ring, alpha)
        chi = charnum.chi_polynomial(ring, alpha)
        assert chi[dim] == (-1) ** (dim - 1) * deg
        if (dim - 1) % 2 == 0:
            sign = charnum.signature_polynomial(ring, alpha)
            assert sign[dim] == charnum.tanh_coefficient((dim + 1) // 2) * deg


def test_middle_form_gram_p5():
    ring = ring_for("cp5")
    alpha = (1, 0, 0, 0, 0, 0)
    for d in (1, 2, 3):
        form = charnum.middle_form_gram(ring, alpha, d)
        assert form.gram == ((d,),)
        assert len(form.labels) == 1


def test_middle_form_gram_p2xp3():
    ring = ring_for("product:cp2,cp3")
    alpha = (1, 0, 0, 1, 0, 0, 0)
    form = charnum.middle_form_gram(ring, alpha, 1)
    assert form.gram == ((0, 0, 1), (0, 1, 1), (1, 1, 0))
    scaled = charnum.middle_form_gram(ring, alpha, 3)
    assert scaled.gram == tuple(tuple(3 * x for x in row) for row in form.gram)


def test_odd_middle_dimension_rejected():
    ring = ring_for("cp4")
    alpha = (1, 0, 0, 0, 0)
    with pytest.raises(HypothesisError):
        charnum.signature_polynomial(ring, alpha)
    with pytest.raises(HypothesisError):
        charnum.middle_form_gram(ring, alpha, 2)


def test_input_validation():
    ring = ring_for("cp3")
    alpha = (1, 0, 0, 0)
    with pytest.raises(ValueError):
        charnum.euler_char_hypersurface(ring, alpha, 0)
    with pytest.raises(ValueError):
        charnum.signature_hypersurface(ring, alpha, -1)


def test_invariants_validation():
    with pytest.raises(InternalConsistencyError):
        charnum.HypersurfaceInvariants(d=1, n=4, deg=1, chi=3, b_n=-1, sign_Y=0)
    with pytest.raises(InternalConsistencyError):
        charnum.HypersurfaceInvariants(d=1, n=4, deg=1, chi=4, b_n=1, sign_Y=0)
