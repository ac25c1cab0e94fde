"""The sl2 action on tautological classes of the universal Jacobian.

The alphabet: components p_{i,j} of the curve class (codimension (i+j)/2,
weight j) and the pulled-back divisor psi.  The raising operator e
multiplies by p_{2,0}; the lowering operator is Polishchuk's second-order
differential operator D; the grading operator h acts by a scalar on each
bigraded piece.  A single global sign flip on the printed h realizes the
standard sl2 relations -- both versions are exposed.
"""
from tautrings import (JacContext, JacPolynomial, apply_D, apply_e, apply_h,
                       apply_h_raw, normalize)

P = JacPolynomial.p
ctx = JacContext(3)

print("Normalization rules:")
print("  p(1,3) at g=2 ->", normalize(P(1, 3), JacContext(2)), " (weight out of range)")
print("  p(0,0) at g=5 ->", normalize(P(0, 0), JacContext(5)))

print("\nFirst-order actions of D:")
print("  D p(4,0) =", apply_D(P(4, 0), ctx))
print("  D p(2,0) =", apply_D(P(2, 0), ctx), " (the genus, via p(0,0))")

print("\nThe worked second-order example:")
x = P(3, 1) * P(3, 1)
print("  D p(3,1)^2 =", apply_D(x, ctx))

print("\nGrading eigenvalues, printed vs normalized:")
for name, y in [("1", JacPolynomial.constant(1)), ("psi", JacPolynomial.psi()),
                ("p(3,1)", P(3, 1))]:
    print(f"  h_raw({name}) = {apply_h_raw(y, ctx)!r}   "
          f"h({name}) = {apply_h(y, ctx)!r}")

print("\nsl2 relations on a sample monomial (normalized h):")
m = P(4, 0)
he = apply_h(apply_e(m), ctx) - apply_e(apply_h(m, ctx))
hf = apply_h(apply_D(m, ctx), ctx) - apply_D(apply_h(m, ctx), ctx)
ef = apply_e(apply_D(m, ctx)) - apply_D(apply_e(m), ctx)
print("  [h,e] m - 2 e m   =", he - 2 * apply_e(m))
print("  [h,f] m + 2 f m   =", hf + 2 * apply_D(m, ctx))
print("  [e,f] m - h m     =", ef - apply_h(m, ctx))

print("\nIterating D on a relation seed (the genus-2 story):")
ctx2 = JacContext(2)
seed = P(3, 1) * P(3, 1)
power = seed
for step in range(1, 4):
    power = apply_D(power, ctx2)
    print(f"  D^{step}(p(3,1)^2) =", power)
