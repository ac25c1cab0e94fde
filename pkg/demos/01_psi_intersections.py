"""Top intersections of cotangent-line classes.

Everything below is exact rational arithmetic: the values come from the
KdV recursion seeded only by <tau_0^3>_0 = 1 and the string equation
(docs/correlator_recursion.md walks through the derivation).
"""
from tautrings import genus0_closed_form, psi_intersection

print("The base case and one string-equation step:")
print("  <tau_0^3>_0       =", psi_intersection(0, [0, 0, 0]))
print("  <tau_1 tau_0^3>_0 =", psi_intersection(0, [1, 0, 0, 0]))

print("\nThe famous genus-1 and genus-2 one-point values:")
print("  <tau_1>_1 =", psi_intersection(1, [1]))
print("  <tau_4>_2 =", psi_intersection(2, [4]))

print("\nGenus 0 has the closed form (n-3)!/prod(k_i!):")
for exps in [(1, 1, 0, 0, 0), (2, 0, 0, 0, 0), (2, 1, 0, 0, 0, 0)]:
    lhs = psi_intersection(0, exps)
    rhs = genus0_closed_form(exps)
    print(f"  <{exps}>_0 = {lhs}  (closed form {rhs})")

print("\nOff-degree monomials integrate to zero:")
print("  <tau_2 tau_0^2>_0 =", psi_intersection(0, [2, 0, 0]))

print("\nA genus-3 sample, all denominators exact:")
for exps in [(7,), (6, 1), (5, 2), (4, 3)]:
    print(f"  <tau profile {exps}>_3 =", psi_intersection(3, exps))
