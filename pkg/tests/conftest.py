"""Shared builders for the test suite.

``random_tower`` draws valid module structures from parametrized families
(monogenic algebras with structure images guaranteed to satisfy the
defining relation), so randomized suites never need rejection sampling.
"""

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from descent_kit import (  # noqa: E402
    DStructure,
    OperatorTower,
    PresentedRing,
    StructureAlgebra,
    difference_algebra,
    dual_numbers,
    dual_numbers_times_field,
    product_of_fields,
    truncated_jets,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def dual_basis_algebra(ring, label="eps"):
    """rank-2 algebra ring[label]/(label^2) with basis (1, label)."""
    z, o = ring.zero, ring.one
    return StructureAlgebra(
        ring, ("1", label), [[[o, z], [z, o]], [[z, o], [z, z]]]
    )


def monogenic_algebra(ring, kind):
    """Small module algebras used by the randomized suites.

    kind: "nil2" -> ring[w]/(w^2), "split" -> ring[w]/(w^2-1),
    "nil3" -> ring[w]/(w^3).
    """
    z, o = ring.zero, ring.one
    if kind == "nil2":
        return StructureAlgebra(ring, ("1", "w"), [[[o, z], [z, o]], [[z, o], [z, z]]])
    if kind == "split":
        return StructureAlgebra(ring, ("1", "w"), [[[o, z], [z, o]], [[z, o], [o, z]]])
    if kind == "nil3":
        rows = [
            [[o, z, z], [z, o, z], [z, z, o]],
            [[z, o, z], [z, z, o], [z, z, z]],
            [[z, z, o], [z, z, z], [z, z, z]],
        ]
        return StructureAlgebra(ring, ("1", "w", "w2"), rows)
    raise ValueError(kind)


def db_elements(coeff, algebra):
    """Helpers for arithmetic in D(B): unit, multiply, scale-by-D-vector."""
    l = coeff.dim
    base = algebra.base

    def unit():
        return [algebra.one_el().scale(base.constant(coeff.unit[k])) for k in range(l)]

    def mul(x, y):
        out = [algebra.zero_el() for _ in range(l)]
        for j in range(l):
            if x[j].is_zero():
                continue
            for k in range(l):
                if y[k].is_zero():
                    continue
                prod = x[j] * y[k]
                for m in range(l):
                    a = coeff.a(j, k, m)
                    if not coeff.field.is_zero(a):
                        out[m] = out[m] + prod.scale(base.constant(a))
        return out

    return unit, mul


def random_scalar(field, rng):
    if field.characteristic:
        return field.normalize(rng.randrange(field.characteristic))
    pool = [0, 0, 1, -1, 2, -2]
    from fractions import Fraction
    c = rng.choice(pool)
    if rng.random() < 0.2:
        return field.normalize(Fraction(c, 2))
    return field.normalize(c)


def random_db_element(coeff, algebra, rng):
    l, r = coeff.dim, algebra.rank
    base = algebra.base
    return [
        algebra.element([base.constant(random_scalar(coeff.field, rng)) for _ in range(r)])
        for _ in range(l)
    ]


def random_tower(field, coeff, kind, rng):
    """A valid (A, e) <= (B, f) with A = k drawn from a parametrized family."""
    a_ring = PresentedRing.base_field(field)
    algebra = monogenic_algebra(a_ring, kind)
    e = DStructure.identity(a_ring, coeff)
    unit, mul = db_elements(coeff, algebra)
    l = coeff.dim

    def embed(el):
        vec = [algebra.zero_el() for _ in range(l)]
        for k in range(l):
            if not field.is_zero(coeff.unit[k]):
                vec[k] = el.scale(a_ring.constant(coeff.unit[k]))
        return vec

    w_hat = embed(algebra.basis_el(1))
    if kind in ("nil2", "nil3"):
        z = mul(w_hat, random_db_element(coeff, algebra, rng))
        if kind == "nil3":
            w2_hat = embed(algebra.basis_el(2))
            extra = mul(w2_hat, random_db_element(coeff, algebra, rng))
            z = [a + b for a, b in zip(z, extra)]
    else:  # split: per local factor pick an image from {w, -w, 1, -1}
        z = [algebra.zero_el() for _ in range(l)]
        for idem, _ in coeff.factors:
            choice = rng.choice(["w", "-w", "1", "-1"])
            base_el = {
                "w": algebra.basis_el(1),
                "-w": -algebra.basis_el(1),
                "1": algebra.one_el(),
                "-1": -algebra.one_el(),
            }[choice]
            for k in range(l):
                if not field.is_zero(idem[k]):
                    z[k] = z[k] + base_el.scale(a_ring.constant(idem[k]))
    f_images = [unit(), z]
    if kind == "nil3":
        f_images.append(mul(z, z))
    tower = OperatorTower(e, algebra, coeff, f_images)
    tower.validate()
    return tower


COEFF_BUILDERS = {
    "difference": difference_algebra,
    "dual": dual_numbers,
    "pair_of_fields": lambda f: product_of_fields(f, 2),
    "jets3": lambda f: truncated_jets(f, 3),
    "dual_times_field": dual_numbers_times_field,
}


@pytest.fixture(scope="session")
def rng():
    return random.Random(94721)
