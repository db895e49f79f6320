"""Finitely presented commutative algebras over an exact field.

A ``PresentedRing`` is k[variables]/(relations) with the relations kept as
a reduced Groebner basis, so equality of elements is decidable via normal
forms.  Towers (an algebra over an algebra over k) are always flattened to
a single presentation over k; ``base_vars`` remembers which variables came
from the base ring.
"""

from __future__ import annotations

from .errors import NotAUnit, VariableClash
from .groebner import GroebnerBasis, buchberger, buchberger_extended, normal_form, staircase
from .polynomials import DegRevLex, Polynomial, parse_polynomial, render
from .scalars import ScalarField


class PresentedRing:
    """k[variables]/(relations), with decidable element equality."""

    __slots__ = ("field", "variables", "relations", "base_vars", "order")

    def __init__(self, field: ScalarField, variables, relations: GroebnerBasis, base_vars=()):
        self.field = field
        self.variables = tuple(variables)
        self.order = DegRevLex(self.variables)
        if relations.order != self.order:
            raise ValueError("relations computed under a different variable order")
        self.relations = relations
        self.base_vars = tuple(base_vars)
        missing = set(self.base_vars) - set(self.variables)
        if missing:
            raise ValueError(f"base variables {missing} not among variables")

    @staticmethod
    def make(field, variables, relation_polys=(), base_vars=()) -> "PresentedRing":
        order = DegRevLex(tuple(variables))
        gb = buchberger(list(relation_polys), order)
        return PresentedRing(field, tuple(variables), gb, base_vars)

    @staticmethod
    def base_field(field: ScalarField) -> "PresentedRing":
        """The field k itself, presented with no variables."""
        return PresentedRing.make(field, ())

    def __eq__(self, other):
        return (
            isinstance(other, PresentedRing)
            and self.field == other.field
            and self.variables == other.variables
            and self.relations == other.relations
            and self.base_vars == other.base_vars
        )

    def __hash__(self):
        return hash((self.field, self.variables, self.relations, self.base_vars))

    def __repr__(self):
        rel = ", ".join(render(g, self.order) for g in self.relations.generators)
        return f"{self.field}[{', '.join(self.variables)}]/({rel})"

    # -- elements -------------------------------------------------------------

    def nf(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.relations)

    def is_zero(self, p: Polynomial) -> bool:
        return self.nf(p).is_zero()

    def equal(self, p: Polynomial, q: Polynomial) -> bool:
        return self.nf(p - q).is_zero()

    @property
    def zero(self) -> Polynomial:
        return Polynomial.zero(self.field)

    @property
    def one(self) -> Polynomial:
        return Polynomial.constant(self.field, 1)

    def constant(self, c) -> Polynomial:
        return Polynomial.constant(self.field, c)

    def var(self, name: str) -> Polynomial:
        if name not in self.variables:
            raise ValueError(f"{name!r} is not a variable of {self!r}")
        return Polynomial.variable(self.field, name)

    def el(self, text: str) -> Polynomial:
        """Parse an element from the term grammar and normalize it."""
        p = parse_polynomial(text, self.field)
        extra = p.variables() - set(self.variables)
        if extra:
            raise ValueError(f"unknown variables {sorted(extra)} in {text!r}")
        return self.nf(p)

    def render(self, p: Polynomial) -> str:
        return render(self.nf(p), self.order)

    # -- units ----------------------------------------------------------------

    def unit_inverse(self, a: Polynomial) -> Polynomial:
        """The inverse of ``a`` modulo the relations, if 1 lies in (a)+relations.

        Computed by a cofactor-tracked Groebner run on the relation
        generators plus ``a``; the tracked cofactor of ``a`` is the inverse.
        Raises NotAUnit when 1 is not in the ideal.
        """
        a = self.nf(a)
        inputs = list(self.relations.generators) + [a]
        gb, cofs = buchberger_extended(inputs, self.order)
        for g, vec in zip(gb.generators, cofs):
            if g.is_constant() and not g.is_zero():
                c = g.constant_value()
                z = self.nf(vec[-1].scale(self.field.inv(c)))
                if not self.equal(a * z, self.one):
                    raise AssertionError("unit certificate failed to verify")
                return z
        raise NotAUnit(self.render(a))

    def is_unit(self, a: Polynomial) -> bool:
        try:
            self.unit_inverse(a)
            return True
        except NotAUnit:
            return False

    # -- vector-space structure -------------------------------------------------

    def staircase(self):
        """Monomial basis of the quotient as a k-vector space (if finite)."""
        return staircase(self.relations)

    def coordinates(self, p: Polynomial, basis) -> list:
        """Coordinates of nf(p) in a staircase monomial basis."""
        p = self.nf(p)
        index = {m: i for i, m in enumerate(basis)}
        out = [self.field.zero] * len(basis)
        for m, c in p.terms.items():
            out[index[m]] = c
        return out

    # -- construction of larger rings -------------------------------------------

    def extend(self, new_vars, new_relation_polys=(), base_vars=None) -> "PresentedRing":
        """Adjoin variables and relations, flattening the tower over k."""
        new_vars = tuple(new_vars)
        for v in new_vars:
            if v in self.variables:
                raise VariableClash(f"variable {v!r} already present")
        variables = self.variables + new_vars
        rels = list(self.relations.generators) + list(new_relation_polys)
        if base_vars is None:
            base_vars = self.variables
        return PresentedRing.make(self.field, variables, rels, base_vars)


def _suffix_rename(names, taken, suffix):
    mapping = {}
    for v in names:
        w = f"{v}({suffix})"
        while w in taken:
            w = f"{w}'"
        mapping[v] = w
        taken.add(w)
    return mapping


def tensor_presented(S: PresentedRing, T: PresentedRing, rename: bool = True):
    """S tensor T over their common base ring.

    Both factors must present the same base (same ``base_vars`` naming the
    same subring).  Returns ``(ring, map_S, map_T)`` where the maps send each
    factor's variables to their images in the tensor presentation.  Clashing
    non-base variables are renamed with positional suffixes ``(1)``/``(2)``
    unless ``rename`` is disabled.
    """
    if S.field != T.field or S.base_vars != T.base_vars:
        raise ValueError("tensor factors must share the base presentation")
    base = S.base_vars
    s_own = tuple(v for v in S.variables if v not in base)
    t_own = tuple(v for v in T.variables if v not in base)
    clash = set(s_own) & set(t_own)
    map_s = {v: v for v in S.variables}
    map_t = {v: v for v in T.variables}
    if clash:
        if not rename:
            raise VariableClash(f"clashing tensor variables: {sorted(clash)}")
        taken = set(base) | set(s_own) | set(t_own)
        ren_s = _suffix_rename([v for v in s_own if v in clash], taken, 1)
        ren_t = _suffix_rename([v for v in t_own if v in clash], taken, 2)
        map_s.update(ren_s)
        map_t.update(ren_t)
    variables = (
        tuple(base)
        + tuple(map_s[v] for v in s_own)
        + tuple(map_t[v] for v in t_own)
    )
    subs_s = {v: Polynomial.variable(S.field, w) for v, w in map_s.items()}
    subs_t = {v: Polynomial.variable(T.field, w) for v, w in map_t.items()}
    rels = [g.substitute(subs_s) for g in S.relations.generators]
    rels += [g.substitute(subs_t) for g in T.relations.generators]
    ring = PresentedRing.make(S.field, variables, rels, base)
    return ring, map_s, map_t


def tensor_power(S: PresentedRing, r: int):
    """r-fold tensor power of S over its base; variables become ``x(i)``.

    Returns ``(ring, maps)`` with ``maps[i]`` sending each non-base variable
    x of S to its i-th copy x(i+1).
    """
    base = S.base_vars
    own = tuple(v for v in S.variables if v not in base)
    variables = tuple(base)
    maps = []
    for i in range(1, r + 1):
        m = {v: v for v in base}
        for v in own:
            m[v] = f"{v}({i})"
        maps.append(m)
        variables += tuple(m[v] for v in own)
    rels = []
    for i in range(r):
        subs = {v: Polynomial.variable(S.field, w) for v, w in maps[i].items()}
        rels += [g.substitute(subs) for g in S.relations.generators]
    ring = PresentedRing.make(S.field, variables, rels, base)
    return ring, maps
