"""Parsing problem descriptions and rendering reports.

A problem file is one JSON document describing the coefficient algebra D,
the base pair (A, e), the module algebra (B, f), the target algebra
(C, g), and optionally a test algebra (R, u), an element z for obstruction
evidence, and a second structure set for composition checks.  Polynomials
are strings in the term grammar; scalars render canonically so identical
inputs produce byte-identical reports.
"""

from __future__ import annotations

import json

from .dalgebra import DCoefficientAlgebra, build_d_algebra
from .dstructures import DStructure
from .errors import ParseError
from .polynomials import parse_polynomial
from .presented import PresentedRing
from .scalars import GF, QQ, ScalarField
from .structure import StructureAlgebra
from .tower import OperatorTower, PresentedBAlgebra


class ProblemDescription:
    """A fully parsed and validated descent problem."""

    __slots__ = (
        "field",
        "coeff",
        "a_ring",
        "e",
        "tower",
        "c",
        "g_images",
        "r_ring",
        "u",
        "z_coords",
        "second",
        "certificates",
    )

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw.get(name))


def _parse_field(data) -> ScalarField:
    if data == "rationals":
        return QQ
    if isinstance(data, dict) and "prime" in data:
        return GF(int(data["prime"]))
    raise ParseError(f"field must be \"rationals\" or {{\"prime\": p}}, got {data!r}")


def _parse_coefficient_algebra(data, field) -> DCoefficientAlgebra:
    basis = [str(x) for x in data["basis"]]
    l = len(basis)
    kk = PresentedRing.base_field(field)
    products = data["products"]
    if len(products) != l or any(len(row) != l for row in products):
        raise ParseError("D.products must be an l x l table of coordinate vectors")
    constants = [
        [[kk.constant(field.parse(str(c))) for c in products[j][k]] for k in range(l)]
        for j in range(l)
    ]
    if "unit" in data:
        unit = [kk.constant(field.parse(str(c))) for c in data["unit"]]
    elif basis[0] == "1":
        unit = None
    else:
        raise ParseError("D needs an explicit unit unless its first basis element is 1")
    algebra = StructureAlgebra(kk, basis, constants, unit)
    factors = []
    for fac in data["factors"]:
        idem = tuple(field.parse(str(c)) for c in fac["idempotent"])
        span = tuple(
            tuple(field.parse(str(c)) for c in vec)
            for vec in fac.get("maximal_ideal", [])
        )
        factors.append((idem, span))
    return build_d_algebra(algebra, factors)


def _parse_ring(data, field, base: PresentedRing = None) -> PresentedRing:
    variables = tuple(str(v) for v in data.get("variables", []))
    allowed = set(variables) | (set(base.variables) if base else set())
    rels = []
    for text in data.get("relations", []):
        p = parse_polynomial(str(text), field)
        extra = p.variables() - allowed
        if extra:
            raise ParseError(f"unknown variables {sorted(extra)} in relation {text!r}")
        rels.append(p)
    if base is None:
        return PresentedRing.make(field, variables, rels)
    return base.extend(variables, rels, base_vars=base.variables)


def _parse_images(data, ring: PresentedRing, coeff, variables) -> dict:
    out = {}
    images = data.get("images", {})
    for v in variables:
        if v not in images:
            raise ParseError(f"missing operator image for generator {v!r}")
        vec = images[v]
        if len(vec) != coeff.dim:
            raise ParseError(f"image of {v!r} needs {coeff.dim} coordinates")
        out[v] = tuple(ring.el(str(text)) for text in vec)
    return out


def _parse_module_algebra(data, a_ring, coeff, e) -> OperatorTower:
    labels = tuple(str(x) for x in data["basis"])
    if labels[0] != "1":
        raise ParseError("the first basis element of B must be 1")
    r = len(labels)
    products = data["products"]
    if len(products) != r or any(len(row) != r for row in products):
        raise ParseError("B.products must be an r x r table of coordinate vectors")
    constants = [
        [
            [a_ring.el(str(c)) for c in products[i][j]]
            for j in range(r)
        ]
        for i in range(r)
    ]
    algebra = StructureAlgebra(a_ring, labels, constants)
    flat_b = algebra.flat_ring()
    f_images = [None] * r
    unit_row = []
    for k in range(coeff.dim):
        unit_row.append(algebra.one_el().scale(a_ring.constant(coeff.unit[k])))
    f_images[0] = tuple(unit_row)
    images = data.get("images", {})
    for i in range(1, r):
        label = labels[i]
        if label not in images:
            raise ParseError(f"missing operator image for basis element {label!r}")
        vec = images[label]
        if len(vec) != coeff.dim:
            raise ParseError(f"image of {label!r} needs {coeff.dim} coordinates")
        f_images[i] = tuple(
            algebra.coordinatize(
                _flat_poly(str(text), flat_b)
            )
            for text in vec
        )
    return OperatorTower(e, algebra, coeff, f_images)


def _flat_poly(text, ring: PresentedRing):
    p = parse_polynomial(text, ring.field)
    extra = p.variables() - set(ring.variables)
    if extra:
        raise ParseError(f"unknown variables {sorted(extra)} in {text!r}")
    return p


def load_problem(data: dict) -> ProblemDescription:
    """Build and validate every object named by a problem document."""
    field = _parse_field(data["field"])
    coeff = _parse_coefficient_algebra(data["D"], field)
    a_data = data.get("A", {})
    a_ring = _parse_ring(a_data, field)
    e_images = _parse_images(a_data, a_ring, coeff, a_ring.variables)
    e = DStructure(a_ring, coeff, e_images)
    e.validate()
    tower = _parse_module_algebra(data["B"], a_ring, coeff, e)
    certificates = tower.validate()

    c_data = data.get("C", {})
    generators = tuple(str(g) for g in c_data.get("generators", []))
    flat_free = tower.flat_b.extend(generators, (), base_vars=tower.flat_b.variables)
    relations = [
        _flat_poly(str(text), flat_free) for text in c_data.get("relations", [])
    ]
    c = PresentedBAlgebra(tower, generators, relations)
    g_images = {}
    images = c_data.get("images", {})
    for g in generators:
        if g not in images:
            raise ParseError(f"missing operator image for generator {g!r}")
        vec = images[g]
        if len(vec) != coeff.dim:
            raise ParseError(f"image of {g!r} needs {coeff.dim} coordinates")
        g_images[g] = tuple(c.flat_ring.nf(_flat_poly(str(t), c.flat_ring)) for t in vec)
    g_structure = c.structure(g_images)
    certificates += [
        {"check": f"target_{d['check']}", "ok": True} for d in g_structure.validate()
    ]

    r_ring = None
    u = None
    if "R" in data:
        r_ring = _parse_ring(data["R"], field, base=a_ring)
        u_own = _parse_images(
            data["R"], r_ring, coeff,
            tuple(v for v in r_ring.variables if v not in a_ring.variables),
        )
        u_images = {v: e.images[v] for v in a_ring.variables}
        u_images.update(u_own)
        u = DStructure(r_ring, coeff, u_images, base=e)
        certificates += [
            {"check": f"test_algebra_{d['check']}", "ok": True} for d in u.validate()
        ]

    z_coords = None
    if "z" in data:
        vec = data["z"]
        if len(vec) != coeff.dim:
            raise ParseError(f"z needs {coeff.dim} coordinates")
        z_coords = [
            tower.algebra.coordinatize(_flat_poly(str(t), tower.flat_b)) for t in vec
        ]

    second = None
    if "second" in data:
        s = data["second"]
        coeff2 = _parse_coefficient_algebra(s["D"], field)
        e2_images = {
            v: tuple(a_ring.el(str(t)) for t in s.get("A_images", {})[v])
            for v in a_ring.variables
        } if a_ring.variables else {}
        e2 = DStructure(a_ring, coeff2, e2_images)
        e2.validate()
        flat_b = tower.flat_b
        f2_images = [None] * tower.rank
        f2_images[0] = tuple(
            tower.algebra.one_el().scale(a_ring.constant(coeff2.unit[k]))
            for k in range(coeff2.dim)
        )
        for i in range(1, tower.rank):
            label = tower.algebra.labels[i]
            vec = s.get("B_images", {}).get(label)
            if vec is None:
                raise ParseError(f"second structure is missing the image of {label!r}")
            f2_images[i] = tuple(
                tower.algebra.coordinatize(_flat_poly(str(t), flat_b)) for t in vec
            )
        tower2 = OperatorTower(e2, tower.algebra, coeff2, f2_images)
        tower2.validate()
        g2_images = {}
        for g in generators:
            vec = s.get("C_images", {}).get(g)
            if vec is None:
                raise ParseError(f"second structure is missing the image of {g!r}")
            g2_images[g] = tuple(
                c.flat_ring.nf(_flat_poly(str(t), c.flat_ring)) for t in vec
            )
        second = {"coeff": coeff2, "tower": tower2, "g_images": g2_images}

    return ProblemDescription(
        field=field,
        coeff=coeff,
        a_ring=a_ring,
        e=e,
        tower=tower,
        c=c,
        g_images=g_images,
        r_ring=r_ring,
        u=u,
        z_coords=z_coords,
        second=second,
        certificates=certificates,
    )


def problem_from_file(path) -> ProblemDescription:
    with open(path, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    return load_problem(data)


# -- report rendering ---------------------------------------------------------------


def render_presentation(ring: PresentedRing, structure: DStructure = None) -> dict:
    from .polynomials import render
    block = {
        "variables": list(ring.variables),
        "relations": [render(g, ring.order) for g in ring.relations.generators],
    }
    if structure is not None:
        block["images"] = {
            v: [ring.render(c) for c in structure.images[v]]
            for v in ring.variables
            if structure.images[v] is not None
        }
    return block


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
