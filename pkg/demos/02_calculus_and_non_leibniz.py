"""The time derivative fails the Leibniz rule in a computable way.

With a time-dependent deformation, d/dt applied to a product leaves a
remainder built from the time derivative of the deformation matrix.  The
package exposes both the defect and its closed form; they agree exactly.
The exterior derivative on forms absorbs that remainder and stays a graded
derivation with square zero.

Run:  python3 demos/02_calculus_and_non_leibniz.py
"""

from nckit import (DifferentialForm, StarContext, ThetaProfile, d,
                   d_leibniz_defect, dt_leibniz_correction,
                   dt_leibniz_defect, form_mul, value_to_expr)
from nckit.poly import t, x1, x2, x3

theta = ThetaProfile({(1, 2): t})
ctx = StarContext(theta)

# The minimal example: d/dt(x1 * x2) is not (dx1/dt)*x2 + x1*(dx2/dt).
defect = dt_leibniz_defect(x1, x2, ctx)
closed = dt_leibniz_correction(x1, x2, ctx)
print("time-derivative defect on (x1, x2):")
print(f"  measured: {value_to_expr(defect)}")
print(f"  closed form: {value_to_expr(closed)}")
print(f"  equal: {defect == closed}")

# A denser pair.  The defect is a first-order bidifferential expression,
# so it survives for any product with spatial dependence on both sides.
f = x1 * x1 * x2 + t * x3
g = x2 * x3
print()
print("defect on a denser pair:")
print(f"  {value_to_expr(dt_leibniz_defect(f, g, ctx))}")
print(f"  matches closed form: "
      f"{dt_leibniz_defect(f, g, ctx) == dt_leibniz_correction(f, g, ctx)}")

# On forms the story is repaired: the exterior derivative obeys the graded
# Leibniz rule exactly because the basis one-forms do not commute with
# functions, and d*d annihilates everything.
w = DifferentialForm.from_function(f)
a = d(w, ctx)
print()
print("exterior derivative of f:")
print(f"  d(f) = {value_to_expr(a)}")
print(f"  d(d(f)) = {value_to_expr(d(a, ctx))}")

b = DifferentialForm.from_function(g)
print(f"  graded Leibniz defect on (f, dg): "
      f"{value_to_expr(d_leibniz_defect(w, d(b, ctx), ctx))}")

# The bimodule relation: moving a function past dx^2 costs a dt term.
dx2 = DifferentialForm.basis(2)
left = form_mul(dx2, DifferentialForm.from_function(x1), ctx)
right = form_mul(DifferentialForm.from_function(x1), dx2, ctx)
print()
print("commuting x1 past dx2:")
print(f"  dx2 * x1 - x1 * dx2 = {value_to_expr(left - right)}")
