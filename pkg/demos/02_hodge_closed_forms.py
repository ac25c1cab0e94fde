"""Closed-form Hodge integrals and related exact constants.

The one- and two-lambda integral families, the socle constant, the
hyperelliptic coefficient and orbifold Euler characteristics -- every
value a ratio of Bernoulli-sized integers, never a float.
"""
from tautrings import (euler_orbifold, hyperelliptic_coeff, lambda_g_base,
                       lambda_g_eval, lambda_gm1_lambda_g_eval, socle_constant)

print("One-point top-lambda integrals (2^(2g-1)-1)/2^(2g-1) |B_2g|/(2g)!:")
for g in range(1, 6):
    print(f"  g={g}:", lambda_g_base(g))

print("\nMultinomial spreading over several markings:")
print("  psi^(2,1) lambda_2 over the 2-pointed genus-2 space:",
      lambda_g_eval(2, [2, 1]))

print("\nThe two-lambda family (all exponents >= 1):")
print("  g=2, alpha=(1):   ", lambda_gm1_lambda_g_eval(2, [1]))
print("  g=2, alpha=(1,1): ", lambda_gm1_lambda_g_eval(2, [1, 1]))
print("  g=3, alpha=(2,1): ", lambda_gm1_lambda_g_eval(3, [2, 1]))

print("\nSocle constants |B_2g|(g-1)!/(2^g (2g)!), never zero:")
for g in range(2, 7):
    print(f"  g={g}:", socle_constant(g))

print("\nHyperelliptic-locus coefficients (2^2g - 1) 2^(g-2)/((2g+1)(g+1)!):")
for g in range(2, 7):
    print(f"  g={g}:", hyperelliptic_coeff(g))

print("\nOrbifold Euler characteristics of the open moduli spaces:")
for (g, n) in [(0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0)]:
    print(f"  chi(g={g}, n={n}) =", euler_orbifold(g, n))
