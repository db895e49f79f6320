"""Quotient rings with decidable equality, and unit certificates.

A presented ring is k[x1..xn]/(relations) with the relations held as a
reduced Groebner basis, so "are these two elements equal?" is always a
normal-form computation.  Inverting an element produces an explicit
cofactor certificate via a cofactor-tracked Groebner run.
"""

from descent_kit import QQ, GF, PresentedRing, buchberger, normal_form
from descent_kit.errors import NotAUnit

print("== normal forms in Q[x]/(x^2 - 2) ==")
ring = PresentedRing.make(QQ, ("x",), [PresentedRing.make(QQ, ("x",), []).el("x^2-2")])
print("ring:", ring)
print("nf(x^2)      =", ring.render(ring.el("x^2")))
print("nf(x^3 + x)  =", ring.render(ring.el("x^3+x")))
print("x * (x/2) = 1?", ring.equal(ring.el("x") * ring.el("1/2*x"), ring.one))

print()
print("== unit certificates ==")
inv = ring.unit_inverse(ring.var("x"))
print("inverse of x:", ring.render(inv))
plain = PresentedRing.make(QQ, ("x",), [])
try:
    plain.unit_inverse(plain.var("x"))
except NotAUnit as err:
    print("in Q[x] with no relations:", err)

print()
print("== a Groebner basis with a new element ==")
order_ring = PresentedRing.make(QQ, ("x", "y"), [])
gens = [order_ring.el("x^2-y"), order_ring.el("x*y-x")]
gb = buchberger(gens, order_ring.order)
print("generators:", [order_ring.render(g) for g in gens])
print("reduced basis:", [str(g) for g in gb.generators])
print("y^2 - y is in the ideal:", normal_form(order_ring.el("y^2-y"), gb).is_zero())

print()
print("== finite-dimensional quotients ==")
f2 = GF(2)
small = PresentedRing.make(f2, ("u", "v"),
                           [PresentedRing.make(f2, ("u", "v"), []).el(t)
                            for t in ("u^2", "v^2")])
print("monomial basis of GF(2)[u,v]/(u^2,v^2):",
      [str(m) for m in small.staircase()])
