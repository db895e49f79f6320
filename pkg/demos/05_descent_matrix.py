"""The matrix attached to a structure, and why invertibility matters.

For a free finite module algebra B over A with a structure f, the
rl x rl matrix with blocks sum_k a_jkm lambda_n(f_k(b_i)) controls
everything: descent exists exactly when it is invertible, and in the
stratified coefficient basis it is block lower triangular with the
associated endomorphism matrices on the diagonal.
"""

from descent_kit import (
    QQ, DStructure, OperatorTower, PresentedRing, StructureAlgebra,
    associated_matrix, classify_descent_matrix, change_of_basis_check,
    difference_algebra, dual_numbers, endo_matrix, invertibility_equivalences,
)

A = PresentedRing.base_field(QQ)
z, o = A.zero, A.one
B = StructureAlgebra(A, ("1", "eps"), [[[o, z], [z, o]], [[z, o], [z, z]]])

print("== the projection structure is obstructed ==")
dk = difference_algebra(QQ)
tau_tower = OperatorTower(DStructure.identity(A, dk), B, dk,
                          [[B.basis_el(0)], [B.zero_el()]])
dm = classify_descent_matrix(associated_matrix(tau_tower))
print("matrix:", dm.render())
print("invertible:", dm.invertible, "| witness:", dm.witness)
print("equivalences report:",
      invertibility_equivalences(tau_tower, tau_tower.endo_images(0)))

print()
print("== a non-unit determinant over K[x] ==")
kx = PresentedRing.make(QQ, ("x",), [])
bx = StructureAlgebra(kx, ("1", "eps"),
                      [[[kx.one, kx.zero], [kx.zero, kx.one]],
                       [[kx.zero, kx.one], [kx.zero, kx.zero]]])
m = endo_matrix(bx, [bx.basis_el(0), bx.basis_el(1).scale(kx.var("x"))])
print("matrix of p+q*eps -> p+x*q*eps:", m.render())
print("determinant:", kx.render(m.det()), " -> not a unit, so not invertible")

print()
print("== the differential 4x4 block structure ==")
By = StructureAlgebra(A, ("1", "y"), [[[o, z], [z, o]], [[z, o], [z, z]]])
dd = dual_numbers(QQ)
tower = OperatorTower(DStructure.identity(A, dd), By, dd,
                      [[By.basis_el(0), By.zero_el()],
                       [By.basis_el(1), By.basis_el(1)]])
dmd = classify_descent_matrix(associated_matrix(tower))
for row in dmd.render():
    print("  ", row)
print("inverse:")
for row in dmd.inverse.render():
    print("  ", row)

print()
print("== invariance under a change of coefficient basis ==")
x_change = [[QQ.one, QQ.one], [QQ.zero, QQ.one]]  # eta = {1, 1+eps}
print("M^eta == inflated conjugation:",
      change_of_basis_check(tower, x_change))
