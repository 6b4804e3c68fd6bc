"""Gauge sector: completion constraint, field strengths, covariance."""

import random
from fractions import Fraction

import pytest

from nckit.poly import Poly, t, x1, x2, x3
from nckit.rationals import CRat
from nckit.star import StarContext, ThetaProfile, star, star_exp
from nckit.gauge import (
    FieldStrength,
    GaugePotential,
    action_density,
    complete_time_component,
    covariance_defect,
    field_strength,
    gauge_transform_potential,
    invariance_witness,
    reality_defect,
    time_component_defect,
)
from util import rand_fraction, rand_imag_poly, rand_theta

I = CRat(0, 1)
HALF_I = CRat(0, Fraction(1, 2))


def lin_ctx(cutoff=None) -> StarContext:
    return StarContext(ThetaProfile({(1, 2): t}), eps_cutoff=cutoff)


def rand_anti_hermitian_potential(rng, max_terms=2, max_t=1, max_spatial=3):
    comps = [rand_imag_poly(rng, max_terms, max_t, max_spatial)
             for _ in range(3)]
    return GaugePotential(*comps)


# -- completion of the time component ---------------------------------------

def test_complete_time_component_pinned():
    ctx = lin_ctx()
    pot = GaugePotential(I * x2, Poly.zero(), Poly.zero())
    done = complete_time_component(pot, ctx)
    # thetadot^{21} d_2 A_1 = -i, so A_0 = (1/4) i (-i) = 1/4
    assert done.a0 == Poly.const(Fraction(1, 4))
    assert time_component_defect(done, ctx).is_zero()
    seeded = complete_time_component(pot, ctx, seed=I * x3)
    assert seeded.a0 == I * x3 + Fraction(1, 4)
    assert time_component_defect(seeded, ctx).is_zero()


def test_complete_time_component_validation():
    ctx = lin_ctx()
    pot = GaugePotential(I * x2, Poly.zero(), Poly.zero())
    with pytest.raises(ValueError):
        complete_time_component(pot, ctx, seed=x3)  # real seed
    bad = GaugePotential(x2, Poly.zero(), Poly.zero())  # hermitian component
    with pytest.raises(ValueError):
        complete_time_component(bad, ctx)
    assert reality_defect(bad, ctx)[0] == 2 * x2
    assert not any(reality_defect(pot, ctx))


def test_completion_randomized():
    rng = random.Random(1501)
    for _ in range(25):
        ctx = StarContext(rand_theta(rng))
        pot = rand_anti_hermitian_potential(rng)
        done = complete_time_component(pot, ctx, seed=rand_imag_poly(rng))
        assert time_component_defect(done, ctx).is_zero()
        assert not any(reality_defect(done, ctx))


def test_component_access():
    pot = GaugePotential(I * x1, I * x2, I * x3)
    with pytest.raises(ValueError):
        pot.component(0)
    with pytest.raises(ValueError):
        pot.component(4)
    assert pot.component(2) == I * x2


# -- field strength ----------------------------------------------------------

def test_field_strength_pinned():
    ctx = lin_ctx()
    pot = complete_time_component(
        GaugePotential(I * x2, Poly.zero(), Poly.zero()), ctx)
    fs = field_strength(pot, ctx)
    assert fs.spatial[(1, 2)] == Poly.const(-I)
    assert fs.spatial[(1, 3)].is_zero()
    assert fs.spatial[(2, 3)].is_zero()
    assert fs.spatial_entry(2, 1) == Poly.const(I)
    # F_01 = -(1/2) i thetadot^{21} A_1 * (d_2 A_1) = -(1/2) i x2
    assert fs.time[1] == -HALF_I * x2
    assert fs.time[2].is_zero() and fs.time[3].is_zero()
    # Ftilde_01 = F_01 - (1/2) i thetadot^{12} F_12 * A_1 = -i x2
    assert fs.tilde[1] == -I * x2
    assert fs.tilde[2].is_zero() and fs.tilde[3].is_zero()


def test_field_strength_static_theta_has_no_dot_terms():
    ctx = StarContext(ThetaProfile.constant(t12=2))
    pot = complete_time_component(
        GaugePotential(I * x2 * x2, I * x3, I * x1), ctx, seed=I * x1 * x2)
    fs = field_strength(pot, ctx)
    for i in (1, 2, 3):
        assert fs.tilde[i] == fs.time[i]
    a0, a = pot.component(0), pot.spatial()
    for i in (1, 2, 3):
        want = (a[i - 1].partial(0) - a0.partial(i)
                + star(a0, a[i - 1], ctx) - star(a[i - 1], a0, ctx))
        assert fs.time[i] == want


def test_maxwell_limit_theta_zero():
    # With theta = 0 everything is classical electromagnetism for A = i a.
    ctx = StarContext(ThetaProfile.zero())
    a = (None, x2 * x2, x3 + t, x1 * x3)
    a0 = x1 * x2
    pot = complete_time_component(
        GaugePotential(I * a[1], I * a[2], I * a[3]), ctx, seed=I * a0)
    assert pot.a0 == I * a0
    fs = field_strength(pot, ctx)
    for (i, j), fij in fs.spatial.items():
        assert fij == I * (a[j].partial(i) - a[i].partial(j))
    for i in (1, 2, 3):
        assert fs.time[i] == I * (a[i].partial(0) - a0.partial(i))
        assert fs.tilde[i] == fs.time[i]
    # direct Maxwell density oracle
    dens = action_density(fs, ctx)
    oracle = Poly.zero()
    for i, j in ((1, 2), (1, 3), (2, 3)):
        c = a[j].partial(i) - a[i].partial(j)
        oracle = oracle + c * c
    for i in (1, 2, 3):
        e = a[i].partial(0) - a0.partial(i)
        oracle = oracle - e * e
    assert dens == oracle


def test_action_density_real():
    rng = random.Random(1502)
    for _ in range(10):
        ctx = StarContext(rand_theta(rng))
        pot = complete_time_component(
            rand_anti_hermitian_potential(rng), ctx, seed=rand_imag_poly(rng))
        dens = action_density(field_strength(pot, ctx), ctx)
        assert dens.conj() == dens


# -- gauge transformations ----------------------------------------------------

def test_transform_leaves_time_unset():
    ctx = lin_ctx(cutoff=2)
    pot = GaugePotential(I * x2, Poly.zero(), Poly.zero())
    u = star_exp(I * x1, 2, ctx)
    moved = gauge_transform_potential(pot, u, ctx)
    assert moved.a0 is None
    with pytest.raises(ValueError):
        moved.component(0)


def test_transformed_potential_nearly_anti_hermitian():
    # A'_k + conj(A'_k) vanishes mod eps^{N+1} but not exactly: the check
    # must run under the cutoff context.
    rng = random.Random(1503)
    for _ in range(10):
        ctx = StarContext(rand_theta(rng), eps_cutoff=2)
        pot = rand_anti_hermitian_potential(rng)
        u = star_exp(rand_imag_poly(rng, max_terms=2, max_spatial=2), 2, ctx)
        moved = gauge_transform_potential(pot, u, ctx)
        assert not any(reality_defect(moved, ctx))


def test_covariance_defect_vanishes():
    rng = random.Random(1504)
    for _ in range(8):
        ctx = StarContext(rand_theta(rng), eps_cutoff=2)
        pot = complete_time_component(
            rand_anti_hermitian_potential(rng, max_terms=2, max_spatial=2),
            ctx, seed=rand_imag_poly(rng, max_terms=1, max_spatial=2))
        lam = rand_imag_poly(rng, max_terms=2, max_spatial=2)
        u = star_exp(lam, 2, ctx)
        dspat, dtilde = covariance_defect(pot, u, ctx)
        assert all(p.is_zero() for p in dspat.values())
        assert all(p.is_zero() for p in dtilde.values())


def test_covariance_defect_first_order_pinned():
    # One concrete case at cutoff 1 for readability.
    ctx = lin_ctx(cutoff=1)
    pot = complete_time_component(
        GaugePotential(I * x2, I * x1 * x3, Poly.zero()), ctx)
    u = star_exp(I * x1 * x2, 1, ctx)
    dspat, dtilde = covariance_defect(pot, u, ctx)
    assert all(p.is_zero() for p in dspat.values())
    assert all(p.is_zero() for p in dtilde.values())


def test_pure_gauge_is_flat():
    # A_k = conj(U) * d_k U has vanishing spatial curvature mod the cutoff.
    rng = random.Random(1505)
    for _ in range(6):
        ctx = StarContext(rand_theta(rng), eps_cutoff=2)
        lam = rand_imag_poly(rng, max_terms=2, max_spatial=2)
        u = star_exp(lam, 2, ctx)
        udag = u.conj()
        comps = [star(udag, u.partial(k), ctx) for k in (1, 2, 3)]
        pure = complete_time_component(GaugePotential(*comps), ctx)
        fs = field_strength(pure, ctx)
        assert all(p.is_zero() for p in fs.spatial.values())


def test_invariance_witness_remainder_vanishes():
    rng = random.Random(1506)
    for _ in range(6):
        ctx = StarContext(rand_theta(rng), eps_cutoff=2)
        pot = complete_time_component(
            rand_anti_hermitian_potential(rng, max_terms=2, max_spatial=2),
            ctx, seed=rand_imag_poly(rng, max_terms=1, max_spatial=2))
        lam = rand_imag_poly(rng, max_terms=2, max_spatial=2)
        u = star_exp(lam, 2, ctx)
        witness, remainder = invariance_witness(pot, u, ctx)
        assert remainder.is_zero()
        # and the witness really is the stated commutator
        dens = action_density(field_strength(pot, ctx), ctx)
        du = star(dens, u, ctx)
        want = star(u.conj(), du, ctx) - star(du, u.conj(), ctx)
        assert witness == ctx.reduce(want)


def test_gauge_identity_transformation():
    ctx = lin_ctx(cutoff=2)
    pot = complete_time_component(
        GaugePotential(I * x2, I * x3, I * x1), ctx)
    u = star_exp(Poly.zero(), 2, ctx)
    assert u == Poly.one()
    moved = gauge_transform_potential(pot, u, ctx)
    assert moved.spatial() == pot.spatial()
