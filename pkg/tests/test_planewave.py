"""Plane wave sector: closed forms, action accounting, harmonics."""

from fractions import Fraction

import numpy as np
import pytest

from nckit.poly import Poly, t
from nckit.rationals import CRat
from nckit.star import StarContext, ThetaProfile
from nckit.gauge import action_density, field_strength
from nckit.planewave import (
    ActionReport,
    PlaneWaveSpec,
    PwPoly,
    TrigSeries,
    build_ansatz,
    coupling_scalar,
    cubic_profile_series,
    effective_action,
    harmonic_spectrum,
    is_theta_polarised,
    planewave_field_strength,
    pw_partial,
    pw_substitute,
    reference_cubic_coefficients,
    reference_quad_coefficient,
)

I = CRat(0, 1)

W = PwPoly.variable("w")
K = {i: PwPoly.variable(f"k{i}") for i in (1, 2, 3)}
P = {mu: PwPoly.variable(f"p{mu}") for mu in range(4)}
D = {(1, 2): PwPoly.variable("d12"), (1, 3): PwPoly.variable("d13"),
     (2, 3): PwPoly.variable("d23")}
S_MARK = PwPoly.variable("s")
F0, F1, F2 = (PwPoly.variable(n) for n in ("f0", "f1", "f2"))


def s_coupling() -> PwPoly:
    return sum((D[(j, k)] * (K[j] * P[k] - K[k] * P[j])
                for j, k in ((1, 2), (1, 3), (2, 3))), PwPoly.zero())


def spec_and_ctx():
    spec = PlaneWaveSpec(omega=3, k=(1, 2, 2), p=(1, 2, 0, 1),
                         profile=(0, 0, 1))
    ctx = StarContext(ThetaProfile({(1, 2): t * t, (2, 3): t}))
    return spec, ctx


# -- spec container -----------------------------------------------------------

def test_spec_validation():
    spec = PlaneWaveSpec(omega=3, k=(1, 2, 2), p=(0, 1, 0, 0))
    assert spec.is_null()
    assert spec.profile == "cos"
    assert not PlaneWaveSpec(omega=2, k=(1, 1, 1), p=(0,) * 4).is_null()
    with pytest.raises(ValueError):
        PlaneWaveSpec(omega=1, k=(1, 2), p=(0,) * 4)
    with pytest.raises(ValueError):
        PlaneWaveSpec(omega=1, k=(1, 2, 2), p=(0,) * 3)
    with pytest.raises(ValueError):
        PlaneWaveSpec(omega=1, k=(1, 0, 0), p=(0,) * 4, profile="sin")
    with pytest.raises(ValueError):
        spec.profile_coefficients()
    poly_spec = PlaneWaveSpec(omega=1, k=(1, 0, 0), p=(0,) * 4,
                              profile=(0, Fraction(1, 2)))
    assert poly_spec.profile_coefficients() == (0, Fraction(1, 2))


# -- derivative model ---------------------------------------------------------

def test_pw_partial_chain_rule():
    assert pw_partial(F0, 0) == W * F1
    assert pw_partial(F0, 2) == K[2] * F1
    assert pw_partial(F0 * F1, 1) == K[1] * (F1 * F1 + F0 * F2)
    assert pw_partial(P[1] * W, 3).is_zero()
    with pytest.raises(ValueError):
        pw_partial(F2, 0)
    with pytest.raises(ValueError):
        pw_partial(F0, 4)


def test_pw_substitute_is_morphism():
    from nckit.poly import x1, x2
    mapping = {"f0": x1 * x2, "k1": Poly.const(2), "w": t}
    a = F0 * K[1] + W
    b = F0 * F0
    got_ab = pw_substitute(a * b, mapping)
    assert got_ab == pw_substitute(a, mapping) * pw_substitute(b, mapping)
    with pytest.raises(KeyError):
        pw_substitute(P[0], mapping)


# -- closed form field strengths ----------------------------------------------

def test_symbolic_field_strength_closed_forms():
    spatial, time, tilde = planewave_field_strength()
    s_c = s_coupling()
    quarter = Fraction(1, 4)
    for (i, j), fij in spatial.items():
        c_ij = K[i] * P[j] - P[i] * K[j]
        assert fij == I * c_ij * F1
    for i in (1, 2, 3):
        a_i = W * P[i] - K[i] * P[0]
        want_time = (I * a_i * F1
                     + CRat(0, Fraction(1, 2)) * S_MARK * s_c * P[i] * F0 * F1
                     + quarter * S_MARK * s_c * K[i] * F2)
        assert time[i] == want_time
        want_tilde = (I * a_i * F1
                      + I * S_MARK * s_c * P[i] * F0 * F1
                      + quarter * S_MARK * s_c * K[i] * F2)
        assert tilde[i] == want_tilde


# -- action accounting ---------------------------------------------------------

def test_quadratic_coefficient_matches_reference_identically():
    spec, ctx = spec_and_ctx()
    report = effective_action(spec, ctx)
    assert report.quad_matches_reference
    assert report.quad_coeff == reference_quad_coefficient()
    # and the reference in expanded form, written out by hand
    p_sq = P[1] * P[1] + P[2] * P[2] + P[3] * P[3]
    k_sq = K[1] * K[1] + K[2] * K[2] + K[3] * K[3]
    kp = K[1] * P[1] + K[2] * P[2] + K[3] * P[3]
    want = (W * W * p_sq - 2 * W * P[0] * kp + P[0] * P[0] * k_sq
            - k_sq * p_sq + kp * kp)
    assert report.quad_coeff == want


def test_cubic_coefficient_sign_convention():
    spec, ctx = spec_and_ctx()
    report = effective_action(spec, ctx)
    assert report.cubic_relative_sign == -1
    ref = reference_cubic_coefficients()
    for pair, coeff in report.cubic_coeff.items():
        assert coeff == -ref[pair]
    # derived value, written out: +2 (w |p|^2 - p0 (k.p)) (k_j p_k - k_k p_j)
    p_sq = P[1] * P[1] + P[2] * P[2] + P[3] * P[3]
    kp = K[1] * P[1] + K[2] * P[2] + K[3] * P[3]
    scal = W * p_sq - P[0] * kp
    for (j, k), coeff in report.cubic_coeff.items():
        assert coeff == 2 * scal * (K[j] * P[k] - K[k] * P[j])


def test_report_structure_and_diagnostics():
    spec, ctx = spec_and_ctx()
    report = effective_action(spec, ctx)
    assert isinstance(report, ActionReport)
    assert report.orientation == -1
    assert report.residual_order == 2
    assert not report.residual.is_zero()  # genuine second order remainder
    names = [d["name"] for d in report.diagnostics]
    assert "action-quadratic-orientation" in names
    assert "mixed-strength-correction-sign" in names
    assert "quadratic-reference-mismatch" not in names
    assert "cubic-reference-mismatch" not in names


def test_contracted_numbers_pinned():
    spec, ctx = spec_and_ctx()
    report = effective_action(spec, ctx)
    # |p|^2 = 5, k.p = 4, |k|^2 = 9, p0 = 1, w = 3:
    # 9*5 - 2*3*1*4 + 1*9 - 9*5 + 16 = 1
    assert report.quad_value == Fraction(1)
    # S(t) = 2t (k1 p2 - k2 p1) + (k2 p3 - k3 p2) = -8t + 2 and the scalar
    # factor is 2 (w |p|^2 - p0 (k.p)) = 22
    assert coupling_scalar(spec, ctx) == -8 * t + 2
    assert report.cubic_contracted == -176 * t + 44
    assert not report.polarised


def test_route_a_equals_route_b_exactly():
    # Full spacetime pipeline (polynomial profile) against the symbolic
    # ring integrand with everything substituted.  Exact equality.
    spec, ctx = spec_and_ctx()
    pot = build_ansatz(spec, ctx)
    dens_b = action_density(field_strength(pot, ctx), ctx)

    u = spec.phase()
    f = u * u
    dot = ctx.theta.theta_dot()
    mapping = {
        "w": Poly.const(Fraction(3)),
        "k1": Poly.const(Fraction(1)), "k2": Poly.const(Fraction(2)),
        "k3": Poly.const(Fraction(2)),
        "p0": Poly.const(Fraction(1)), "p1": Poly.const(Fraction(2)),
        "p2": Poly.const(Fraction(0)), "p3": Poly.const(Fraction(1)),
        "d12": dot.entry(1, 2), "d13": dot.entry(1, 3),
        "d23": dot.entry(2, 3),
        "s": Poly.one(),
        "f0": f, "f1": 2 * u, "f2": Poly.const(2),
    }
    report = effective_action(spec, ctx)
    dens_a = pw_substitute(report.integrand, mapping)
    assert dens_a == dens_b


def test_longitudinal_wave_is_pure_gauge():
    # p proportional to (w, k): every strength component vanishes exactly.
    ctx = StarContext(ThetaProfile({(1, 2): t}))
    spec = PlaneWaveSpec(omega=3, k=(1, 2, 2), p=(3, 1, 2, 2),
                         profile=(0, 1, 2))
    fs = field_strength(build_ansatz(spec, ctx), ctx)
    assert all(p.is_zero() for p in fs.spatial.values())
    assert all(p.is_zero() for p in fs.time.values())
    assert all(p.is_zero() for p in fs.tilde.values())
    report = effective_action(spec, ctx)
    assert report.quad_value == 0
    assert report.cubic_contracted.is_zero()


# -- polarisation --------------------------------------------------------------

def test_polarisation_condition():
    ctx = StarContext(ThetaProfile({(1, 2): t}))
    # k1 p2 = k2 p1 makes the wave blind to a (1,2)-only deformation
    pol = PlaneWaveSpec(omega=3, k=(1, 2, 2), p=(0, 1, 2, 5))
    gen = PlaneWaveSpec(omega=3, k=(1, 2, 2), p=(0, 1, 3, 5))
    assert is_theta_polarised(pol, ctx)
    assert not is_theta_polarised(gen, ctx)
    assert coupling_scalar(pol, ctx).is_zero()
    assert effective_action(pol, ctx).cubic_contracted.is_zero()
    assert not effective_action(gen, ctx).cubic_contracted.is_zero()


# -- trig series ----------------------------------------------------------------

def test_trig_series_products():
    sin = TrigSeries.sine()
    cos = TrigSeries.cosine()
    assert sin * sin == TrigSeries(cos={0: Fraction(1, 2),
                                        2: Fraction(-1, 2)})
    assert cos * cos == TrigSeries(cos={0: Fraction(1, 2),
                                        2: Fraction(1, 2)})
    assert sin * cos == TrigSeries(sin={2: Fraction(1, 2)})
    c3 = TrigSeries.cosine(3)
    assert cos * c3 == TrigSeries(cos={2: Fraction(1, 2), 4: Fraction(1, 2)})
    assert cos.derivative() == -sin
    assert sin.derivative() == cos
    assert (sin - sin).is_zero()


def test_cubic_profile_series_pinned():
    series = cubic_profile_series()
    assert series == TrigSeries(cos={1: Fraction(1, 4), 3: Fraction(-1, 4)})


def test_cubic_profile_series_against_quadrature():
    # numerical Fourier coefficients of cos(u) sin(u)^2 on a uniform grid
    n = 4096
    u = np.arange(n) * (2 * np.pi / n)
    g = np.cos(u) * np.sin(u) ** 2
    coeffs = np.fft.rfft(g) / n
    assert abs(2 * coeffs[1].real - 0.25) < 1e-12
    assert abs(2 * coeffs[3].real + 0.25) < 1e-12
    for m in (0, 2, 4, 5, 6, 7):
        ref = coeffs[m].real * (1 if m == 0 else 2)
        assert abs(ref) < 1e-12
    assert np.max(np.abs(coeffs.imag)) < 1e-12
    # the exact series evaluates to the same samples
    series = cubic_profile_series()
    vals = np.array([series.value(x) for x in u[:64]])
    assert np.max(np.abs(vals - g[:64])) < 1e-12


def test_harmonic_spectrum():
    ctx = StarContext(ThetaProfile({(1, 2): t}))
    gen = PlaneWaveSpec(omega=3, k=(1, 2, 2), p=(0, 1, 3, 5))
    pol = PlaneWaveSpec(omega=3, k=(1, 2, 2), p=(0, 1, 2, 5))
    assert harmonic_spectrum(gen, ctx) == {1: Fraction(1, 4),
                                           3: Fraction(-1, 4)}
    assert harmonic_spectrum(pol, ctx) == {}
    # constant profile: no derivative, no correction term
    const = PlaneWaveSpec(omega=3, k=(1, 2, 2), p=(0, 1, 3, 5), profile=(2,))
    assert harmonic_spectrum(const, ctx) == {}
    # nontrivial polynomial profile has no periodic spectrum
    quad = PlaneWaveSpec(omega=3, k=(1, 2, 2), p=(0, 1, 3, 5),
                         profile=(0, 0, 1))
    with pytest.raises(ValueError):
        harmonic_spectrum(quad, ctx)
