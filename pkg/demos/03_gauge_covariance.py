"""Deformed U(1) transformations and what they leave invariant.

A spatial gauge potential alone cannot transform covariantly once the
deformation depends on time; a compensating time component fixed by a
reality condition restores the structure.  Below we complete a potential,
act with a star-unitary transformation truncated at second order, and
watch every covariance defect vanish identically.

Run:  python3 demos/03_gauge_covariance.py
"""

from nckit import (CRat, GaugePotential, Poly, StarContext, ThetaProfile,
                   action_density, complete_time_component,
                   covariance_defect, field_strength, invariance_witness,
                   reality_defect, star_exp, time_component_defect,
                   value_to_expr)
from nckit.poly import t, x1, x2, x3

i = Poly.const(CRat(0, 1))

theta = ThetaProfile({(1, 2): t})
ctx = StarContext(theta, eps_cutoff=2)

# Anti-hermitian spatial components (imaginary coefficients): the package
# convention folds the coupling constant into the potential.
spatial = GaugePotential(i * x2, i * (x1 * x1), i * (x1 * x3))
pot = complete_time_component(spatial, ctx)

print("completed time component:")
print(f"  A0 = {value_to_expr(pot.component(0))}")
print(f"  spatial reality defects: "
      f"{[value_to_expr(v) for v in reality_defect(pot, ctx)]}")
print(f"  time-component defect: "
      f"{value_to_expr(time_component_defect(pot, ctx))}")

fs = field_strength(pot, ctx)
print()
print("field strength (spatial part):")
for (a, b), val in sorted(fs.spatial.items()):
    print(f"  F{a}{b} = {value_to_expr(val)}")

# Transform by u = star-exp of an imaginary generator, expanded to the
# same order as the context cutoff.
lam = i * (x1 * x2 + t * x3)
u = star_exp(lam, 2, ctx)
spatial_defects, time_defects = covariance_defect(pot, u, ctx)
print()
print("covariance defects under u = exp_*(i*(x1.x2 + t.x3)):")
print(f"  max spatial defect terms: "
      f"{max(len(v.terms_dict()) for v in spatial_defects.values())}")
print(f"  max time defect terms: "
      f"{max(len(v.terms_dict()) for v in time_defects.values())}")

# The action density shifts by a total derivative.  The witness is that
# derivative; the remainder after subtracting it is identically zero.
witness, remainder = invariance_witness(pot, u, ctx)
print()
print("action invariance:")
print(f"  density before: {len(action_density(fs, ctx).terms_dict())} terms")
print(f"  witness terms: {len(witness.terms_dict())}")
print(f"  remainder: {value_to_expr(remainder)}")
