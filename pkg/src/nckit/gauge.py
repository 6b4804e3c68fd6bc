"""U(1) gauge sector over the deformed algebra.

Components of the gauge potential are anti-hermitian polynomials, A = i a
with a real.  Because the time derivative fails the Leibniz rule, the time
component of the potential is not free: the reality constraint

    A_0 + conj(A_0) = (1/2) i thetadot^{ij} (d_i A_j)

fixes its hermitian part once the spatial components are chosen
(``complete_time_component``).  The same failure puts extra thetadot terms
into the time-space field strength and its gauge transformation rule; the
"improved" combination Ftilde_0i below is the one that transforms
covariantly and enters the action density.

Gauge transformations use unitaries U = star_exp(lam) truncated at a fixed
order in the formal expansion parameter eps, so every covariance statement
here holds modulo eps^{N+1}; with a StarContext whose eps_cutoff is N the
defects come out as the exact zero polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .rationals import CRat
from .poly import Poly
from .star import StarContext, star, star_commutator

_HALF_I = CRat(0, Fraction(1, 2))
_QUARTER_I = CRat(0, Fraction(1, 4))

_SPATIAL = (1, 2, 3)
_PAIRS = ((1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class GaugePotential:
    """Holder for potential components; a0 is None until completed.

    No reality condition is enforced at construction: gauge-transformed
    potentials satisfy it only modulo the eps cutoff, so validation is a
    separate step (``reality_defect``, ``time_component_defect``).
    """

    a1: Poly
    a2: Poly
    a3: Poly
    a0: Poly | None = None

    def spatial(self) -> tuple[Poly, Poly, Poly]:
        return (self.a1, self.a2, self.a3)

    def component(self, mu: int) -> Poly:
        if mu == 0:
            if self.a0 is None:
                raise ValueError("time component not set; complete it first")
            return self.a0
        if mu in _SPATIAL:
            return self.spatial()[mu - 1]
        raise ValueError("component index must be 0..3")

    def with_time_component(self, a0: Poly) -> "GaugePotential":
        return GaugePotential(self.a1, self.a2, self.a3, a0)


def reality_defect(pot: GaugePotential, ctx: StarContext) -> list[Poly]:
    """A_k + conj(A_k) for k = 1..3, reduced by the eps cutoff."""
    return [ctx.reduce(a + a.conj()) for a in pot.spatial()]


def _theta_dot_div(pot: GaugePotential, ctx: StarContext) -> Poly:
    """thetadot^{ij} d_i A_j summed over both spatial indices."""
    dot = ctx.theta.theta_dot()
    acc = Poly.zero()
    for i in _SPATIAL:
        for j in _SPATIAL:
            ent = dot.entry(i, j)
            if ent.is_zero():
                continue
            acc = acc + ent * pot.component(j).partial(i)
    return acc


def time_component_defect(pot: GaugePotential, ctx: StarContext) -> Poly:
    """A_0 + conj(A_0) - (1/2) i thetadot^{ij} d_i A_j; zero when consistent."""
    a0 = pot.component(0)
    return ctx.reduce(a0 + a0.conj() - _HALF_I * _theta_dot_div(pot, ctx))


def complete_time_component(pot: GaugePotential, ctx: StarContext,
                            seed: Poly | None = None) -> GaugePotential:
    """Fill in A_0 = seed + (1/4) i thetadot^{ij} d_i A_j.

    seed is the free anti-hermitian part (conj(seed) = -seed, default 0).
    The added correction is hermitian whenever the spatial components are
    anti-hermitian, which makes the reality constraint hold on the nose;
    this is checked and a ValueError raised otherwise.
    """
    if seed is None:
        seed = Poly.zero()
    if ctx.reduce(seed + seed.conj()):
        raise ValueError("time component seed must be anti-hermitian")
    a0 = seed + _QUARTER_I * _theta_dot_div(pot, ctx)
    out = pot.with_time_component(ctx.reduce(a0))
    if time_component_defect(out, ctx):
        raise ValueError(
            "spatial components violate the reality constraint "
            "(are they anti-hermitian?)")
    return out


@dataclass(frozen=True)
class FieldStrength:
    """Spatial components F_ij (i<j), time components F_0i, and the
    improved time components Ftilde_0i that transform covariantly."""

    spatial: Mapping[tuple[int, int], Poly]
    time: Mapping[int, Poly]
    tilde: Mapping[int, Poly]

    def spatial_entry(self, i: int, j: int) -> Poly:
        """Signed F_ij for any i, j in 1..3."""
        if i == j:
            return Poly.zero()
        if i < j:
            return self.spatial[(i, j)]
        return -self.spatial[(j, i)]


def _spatial_strength(a: tuple[Poly, Poly, Poly],
                      ctx: StarContext) -> dict[tuple[int, int], Poly]:
    out = {}
    for i, j in _PAIRS:
        ai, aj = a[i - 1], a[j - 1]
        out[(i, j)] = ctx.reduce(aj.partial(i) - ai.partial(j)
                                 + star_commutator(ai, aj, ctx))
    return out


def field_strength(pot: GaugePotential, ctx: StarContext) -> FieldStrength:
    """All field strength components of a completed potential.

    F_ij = d_i A_j - d_j A_i + [A_i, A_j]
    F_0i = d_0 A_i - d_i A_0 + [A_0, A_i]
           - (1/2) i thetadot^{mn} A_n * (d_m A_i)
    Ftilde_0i = F_0i - (1/2) i thetadot^{kj} F_ij * A_k
    """
    a0 = pot.component(0)
    a = pot.spatial()
    dot = ctx.theta.theta_dot()
    spatial = _spatial_strength(a, ctx)
    fs = FieldStrength(spatial, {}, {})

    time: dict[int, Poly] = {}
    tilde: dict[int, Poly] = {}
    for i in _SPATIAL:
        ai = a[i - 1]
        f0i = ai.partial(0) - a0.partial(i) + star_commutator(a0, ai, ctx)
        for m in _SPATIAL:
            for n in _SPATIAL:
                ent = dot.entry(m, n)
                if ent.is_zero():
                    continue
                f0i = f0i - _HALF_I * ent * star(a[n - 1], ai.partial(m), ctx)
        f0i = ctx.reduce(f0i)
        time[i] = f0i

        corr = Poly.zero()
        for k in _SPATIAL:
            for j in _SPATIAL:
                ent = dot.entry(k, j)
                if ent.is_zero():
                    continue
                fij = fs.spatial_entry(i, j)
                if fij.is_zero():
                    continue
                corr = corr + ent * star(fij, a[k - 1], ctx)
        tilde[i] = ctx.reduce(f0i - _HALF_I * corr)
    return FieldStrength(spatial, time, tilde)


def gauge_transform_potential(pot: GaugePotential, u: Poly,
                              ctx: StarContext) -> GaugePotential:
    """A'_k = U~ * A_k * U + U~ * d_k U with U~ = conj(U).

    Only the spatial components transform this simply; the returned
    potential has no time component.  The transformed time sector is
    reached through the field strength rule in ``covariance_defect``.
    """
    udag = u.conj()
    out = []
    for k in _SPATIAL:
        ak = pot.component(k)
        p = star(udag, star(ak, u, ctx), ctx) + star(udag, u.partial(k), ctx)
        out.append(ctx.reduce(p))
    return GaugePotential(*out)


def _sandwich(u: Poly, f: Poly, ctx: StarContext) -> Poly:
    return star(u.conj(), star(f, u, ctx), ctx)


def _transformed_strength(pot: GaugePotential, u: Poly,
                          ctx: StarContext) -> tuple[FieldStrength,
                                                     FieldStrength,
                                                     GaugePotential]:
    """(F, F', A') where F' is built from A' spatially and from the
    transformation rule in the time sector:

        F'_0i = U~ F_0i U + (1/2) i thetadot^{kj} U~ * F_ij * (d_k U)
        Ftilde'_0i = F'_0i - (1/2) i thetadot^{kj} F'_ij * A'_k
    """
    f = field_strength(pot, ctx)
    ap = gauge_transform_potential(pot, u, ctx)
    dot = ctx.theta.theta_dot()
    udag = u.conj()

    spatial_p = _spatial_strength(ap.spatial(), ctx)
    fp = FieldStrength(spatial_p, {}, {})

    time_p: dict[int, Poly] = {}
    tilde_p: dict[int, Poly] = {}
    for i in _SPATIAL:
        rule = _sandwich(u, f.time[i], ctx)
        for k in _SPATIAL:
            for j in _SPATIAL:
                ent = dot.entry(k, j)
                if ent.is_zero():
                    continue
                fij = f.spatial_entry(i, j)
                if fij.is_zero():
                    continue
                rule = rule + _HALF_I * ent * star(
                    udag, star(fij, u.partial(k), ctx), ctx)
        rule = ctx.reduce(rule)
        time_p[i] = rule

        corr = Poly.zero()
        for k in _SPATIAL:
            for j in _SPATIAL:
                ent = dot.entry(k, j)
                if ent.is_zero():
                    continue
                fij = fp.spatial_entry(i, j)
                if fij.is_zero():
                    continue
                corr = corr + ent * star(fij, ap.component(k), ctx)
        tilde_p[i] = ctx.reduce(rule - _HALF_I * corr)
    return f, FieldStrength(spatial_p, time_p, tilde_p), ap


def covariance_defect(pot: GaugePotential, u: Poly,
                      ctx: StarContext) -> tuple[dict[tuple[int, int], Poly],
                                                 dict[int, Poly]]:
    """How far the transformed strengths are from conjugated originals.

    Returns ({(i,j): F'_ij - U~ F_ij U}, {i: Ftilde'_0i - U~ Ftilde_0i U}).
    Both vanish modulo eps^{N+1}; with eps_cutoff = N they are exactly zero.
    """
    f, fp, _ = _transformed_strength(pot, u, ctx)
    spatial = {pair: ctx.reduce(fp.spatial[pair] - _sandwich(u, f.spatial[pair], ctx))
               for pair in _PAIRS}
    tilde = {i: ctx.reduce(fp.tilde[i] - _sandwich(u, f.tilde[i], ctx))
             for i in _SPATIAL}
    return spatial, tilde


def action_density(fs: FieldStrength, ctx: StarContext) -> Poly:
    """sum_{i<j} F_ij * conj(F_ij) - sum_i Ftilde_0i * conj(Ftilde_0i).

    Real valued.  Under a gauge transformation it shifts by a star
    commutator only (see ``invariance_witness``), so its integral is
    invariant by the trace property.
    """
    acc = Poly.zero()
    for pair in _PAIRS:
        fij = fs.spatial[pair]
        acc = acc + star(fij, fij.conj(), ctx)
    for i in _SPATIAL:
        fti = fs.tilde[i]
        acc = acc - star(fti, fti.conj(), ctx)
    return ctx.reduce(acc)


def invariance_witness(pot: GaugePotential, u: Poly,
                       ctx: StarContext) -> tuple[Poly, Poly]:
    """Split density(A') - density(A) into commutator + remainder.

    Returns (w, r) with w = [conj(U), density(A) * U] and r the rest;
    r vanishes modulo eps^{N+1}.  Since the witness is a star commutator,
    the density change integrates to zero by the trace property.
    """
    f, fp, _ = _transformed_strength(pot, u, ctx)
    dens = action_density(f, ctx)
    dens_p = action_density(fp, ctx)
    du = star(dens, u, ctx)
    witness = ctx.reduce(star(u.conj(), du, ctx) - star(du, u.conj(), ctx))
    remainder = ctx.reduce(dens_p - dens - witness)
    return witness, remainder
