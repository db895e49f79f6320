"""Classical Weil restriction of a finitely presented algebra over B.

Given C = B[T]/(relations) with B free of rank r over A, the descended
algebra lives on r copies x(1)..x(r) of each generator x.  Substituting
x -> sum_i x(i) b_i into each relation and reading off basis coordinates
yields the descent ideal; the descended presentation is the quotient by
it.  The unit map x -> sum_i x(i) (x) b_i realizes one direction of the
Hom-set bijection, coordinate extraction the other.
"""

from __future__ import annotations

from .errors import NotAHomomorphism
from .polynomials import Polynomial, render
from .presented import PresentedRing
from .structure import AlgebraElement, StructureAlgebra
from .tower import PresentedBAlgebra


class WeilDescentResult:
    """The descended presentation, the descent ideal, and the unit map."""

    __slots__ = ("source", "descended", "ideal_generators", "copy_names", "pre_ring")

    def __init__(self, source, descended, ideal_generators, copy_names, pre_ring):
        self.source = source
        self.descended = descended
        self.ideal_generators = ideal_generators
        self.copy_names = copy_names
        self.pre_ring = pre_ring

    @property
    def ideal(self):
        """Groebner basis of the descent ideal (with the base relations adjoined)."""
        return self.descended.relations

    def unit_image(self, gen: str, ring: PresentedRing = None) -> AlgebraElement:
        """The unit map's value at a generator, as coordinates over W(C)."""
        target = ring if ring is not None else self.descended
        ext = self.source.tower.algebra.base_change(target)
        return ext.element(
            [Polynomial.variable(target.field, name) for name in self.copy_names[gen]]
        )

    def tensor_algebra(self, ring: PresentedRing = None) -> StructureAlgebra:
        """W(C) (x)_A B (or R (x)_A B for a supplied R)."""
        target = ring if ring is not None else self.descended
        return self.source.tower.algebra.base_change(target)

    def evaluate_under_unit(self, flat: Polynomial, ring: PresentedRing = None) -> AlgebraElement:
        """Push a flat element of B[T] through the unit map into W(C) (x) B."""
        algebra = self.tensor_algebra(ring)
        extra = {g: self.unit_image(g, algebra.base) for g in self.source.generators}
        return algebra.coordinatize(flat, extra)


def weil_descend(c: PresentedBAlgebra) -> WeilDescentResult:
    """Compute W(C): presentation, descent ideal, unit map."""
    tower = c.tower
    a_ring = tower.base_ring
    r = tower.rank
    copy_names = {g: tuple(f"{g}({i})" for i in range(1, r + 1)) for g in c.generators}
    all_names = [name for g in c.generators for name in copy_names[g]]
    pre_ring = a_ring.extend(tuple(all_names), (), base_vars=a_ring.variables)

    algebra_pre = tower.algebra.base_change(pre_ring)
    unit_env = {
        g: algebra_pre.element(
            [Polynomial.variable(pre_ring.field, n) for n in copy_names[g]]
        )
        for g in c.generators
    }
    ideal_generators = []
    for rel in c.relations_flat:
        image = algebra_pre.coordinatize(rel, unit_env)
        ideal_generators.extend(pre_ring.nf(coord) for coord in image.coords)

    descended = a_ring.extend(tuple(all_names), ideal_generators, base_vars=a_ring.variables)
    result = WeilDescentResult(c, descended, tuple(ideal_generators), copy_names, pre_ring)

    # the unit map must kill every relation of C in W(C) (x) B
    for rel in c.relations_flat:
        image = result.evaluate_under_unit(rel)
        if not image.is_zero():
            raise AssertionError("unit map does not kill a defining relation")
    return result


def tau_forward(phi_images: dict, target: PresentedRing, result: WeilDescentResult) -> dict:
    """Turn phi: W(C) -> R into the B-algebra map C -> R (x) B.

    ``phi_images`` maps each copy variable x(i) to an element of the target;
    base variables are pinned to themselves.  Raises NotAHomomorphism when
    phi does not kill the descent ideal.
    """
    env = dict(phi_images)
    for v in result.source.tower.base_ring.variables:
        env.setdefault(v, Polynomial.variable(target.field, v))
    for gen in result.descended.variables:
        if gen not in env:
            raise ValueError(f"no image supplied for {gen!r}")
    for rel in result.descended.relations.generators:
        if not target.is_zero(rel.substitute(env)):
            raise NotAHomomorphism(
                f"image of descent-ideal element {render(rel, result.descended.order)} is nonzero"
            )
    ext = result.tensor_algebra(target)
    psi = {}
    for g in result.source.generators:
        psi[g] = ext.element([target.nf(env[name]) for name in result.copy_names[g]])
    # re-check: psi kills the relations of C inside R (x) B
    for rel in result.source.relations_flat:
        if not ext.coordinatize(rel, psi).is_zero():
            raise NotAHomomorphism("induced map does not kill a relation of C")
    return psi


def tau_inverse(psi_images: dict, target: PresentedRing, result: WeilDescentResult) -> dict:
    """Extract phi: W(C) -> R from the B-algebra map psi: C -> R (x) B.

    ``psi_images`` maps each generator of C to an AlgebraElement over the
    target.  The returned dict maps each copy variable x(i) to lambda_i of
    psi(x).
    """
    ext = result.tensor_algebra(target)
    for rel in result.source.relations_flat:
        if not ext.coordinatize(rel, psi_images).is_zero():
            raise NotAHomomorphism("psi does not kill a relation of C")
    phi = {}
    for g in result.source.generators:
        el = psi_images[g]
        for i, name in enumerate(result.copy_names[g]):
            phi[name] = target.nf(el.coords[i])
    env = dict(phi)
    for v in result.source.tower.base_ring.variables:
        env.setdefault(v, Polynomial.variable(target.field, v))
    for rel in result.descended.relations.generators:
        if not target.is_zero(rel.substitute(env)):
            raise NotAHomomorphism("coordinate map does not kill the descent ideal")
    return phi


def descend_morphism(h_images: dict, source: WeilDescentResult, target: WeilDescentResult) -> dict:
    """W(h) for a B-algebra map h: C -> C' given flat on generators.

    Sends x(i) to lambda_i of the unit image of h(x) computed in W(C') (x) B.
    """
    out = {}
    for g in source.source.generators:
        image = target.evaluate_under_unit(h_images[g])
        for i, name in enumerate(source.copy_names[g]):
            out[name] = target.descended.nf(image.coords[i])
    env = dict(out)
    for v in source.source.tower.base_ring.variables:
        env.setdefault(v, Polynomial.variable(target.descended.field, v))
    for rel in source.descended.relations.generators:
        if not target.descended.is_zero(rel.substitute(env)):
            raise NotAHomomorphism("descended morphism does not kill the descent ideal")
    return out
