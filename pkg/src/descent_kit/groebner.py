"""Buchberger Groebner bases with optional cofactor tracking.

Everything here is deterministic: S-pairs are processed in normal strategy
(increasing lcm degree, ties broken by the first-indexed pair), the reducer
is always the first matching basis element, and the reduced basis is sorted
by decreasing leading monomial.  Cofactor tracking keeps, for every basis
element, an explicit representation over the *input* generators; that is
what turns "1 lies in the ideal" into a checkable inverse certificate.
"""

from __future__ import annotations

import heapq

from .errors import ResourceLimit, NotFiniteDimensional
from .polynomials import DegRevLex, Monomial, Polynomial

DEFAULT_PAIR_BUDGET = 20000


class GroebnerBasis:
    """A reduced Groebner basis together with the order that produced it."""

    __slots__ = ("generators", "order", "reduced")

    def __init__(self, generators, order: DegRevLex, reduced: bool = True):
        self.generators = tuple(generators)
        self.order = order
        self.reduced = reduced

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.order == other.order
            and set(self.generators) == set(other.generators)
        )

    def __hash__(self):
        return hash((self.order, frozenset(self.generators)))

    def __repr__(self):
        return f"GroebnerBasis({list(map(str, self.generators))})"

    def contains_one(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)


def _reduce_full(p, cof, basis, basis_cofs, order):
    """Fully reduce p modulo basis; returns (remainder, cofactors).

    cof/basis_cofs are None when cofactors are not tracked.
    """
    field = p.field
    remainder = Polynomial.zero(field)
    track = cof is not None
    while not p.is_zero():
        lm, lc = order.leading(p)
        hit = None
        for gi, g in enumerate(basis):
            glm, glc = order.leading(g)
            if glm.divides(lm):
                hit = (gi, g, glm, glc)
                break
        if hit is None:
            t = Polynomial(field, {lm: lc})
            remainder = remainder + t
            p = p - t
            continue
        gi, g, glm, glc = hit
        q = lm.divide(glm)
        factor = field.div(lc, glc)
        p = p - g.term_mul(q, factor)
        if track:
            cof = [
                c - gc.term_mul(q, factor)
                for c, gc in zip(cof, basis_cofs[gi])
            ]
    return remainder, cof


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """The unique fully reduced remainder of p modulo the basis."""
    r, _ = _reduce_full(p, None, gb.generators, None, gb.order)
    return r


def _spair(i, j, basis, basis_cofs, order, track):
    f, g = basis[i], basis[j]
    flm, flc = order.leading(f)
    glm, glc = order.leading(g)
    lcm = flm.lcm(glm)
    field = f.field
    tf, tg = lcm.divide(flm), lcm.divide(glm)
    s = f.term_mul(tf, field.inv(flc)) - g.term_mul(tg, field.inv(glc))
    if not track:
        return s, None
    cf = [
        a.term_mul(tf, field.inv(flc)) - b.term_mul(tg, field.inv(glc))
        for a, b in zip(basis_cofs[i], basis_cofs[j])
    ]
    return s, cf


def _buchberger_core(gens, order, budget, track):
    field = None
    basis, cofs = [], []
    inputs = [g for g in gens]
    for idx, g in enumerate(inputs):
        if g.is_zero():
            continue
        if field is None:
            field = g.field
        basis.append(g)
        if track:
            vec = [Polynomial.zero(g.field) for _ in inputs]
            vec[idx] = Polynomial.constant(g.field, 1)
            cofs.append(vec)
    if not basis:
        return [], [], inputs

    pairs = []
    for j in range(len(basis)):
        for i in range(j):
            lcm = order.leading(basis[i])[0].lcm(order.leading(basis[j])[0])
            heapq.heappush(pairs, (lcm.degree, i, j))

    processed = 0
    while pairs:
        deg, i, j = heapq.heappop(pairs)
        processed += 1
        if processed > budget:
            raise ResourceLimit(f"Groebner pair budget {budget} exceeded")
        flm = order.leading(basis[i])[0]
        glm = order.leading(basis[j])[0]
        if flm.lcm(glm) == flm.mul(glm):
            continue  # coprime leading terms: S-polynomial reduces to zero
        s, cf = _spair(i, j, basis, cofs, order, track)
        r, cf = _reduce_full(s, cf, basis, cofs, order)
        if r.is_zero():
            continue
        basis.append(r)
        if track:
            cofs.append(cf)
        new = len(basis) - 1
        rlm = order.leading(r)[0]
        for k in range(new):
            lcm = order.leading(basis[k])[0].lcm(rlm)
            heapq.heappush(pairs, (lcm.degree, k, new))
    return basis, cofs, inputs


def _interreduce(basis, cofs, order, track):
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            others = basis[:i] + basis[i + 1 :]
            other_cofs = (cofs[:i] + cofs[i + 1 :]) if track else None
            r, cf = _reduce_full(
                basis[i], cofs[i] if track else None, others, other_cofs, order
            )
            if r != basis[i]:
                changed = True
            if r.is_zero():
                del basis[i]
                if track:
                    del cofs[i]
                break
            basis[i] = r
            if track:
                cofs[i] = cf
        else:
            continue
    # make monic and sort by decreasing leading monomial
    out = []
    for i, g in enumerate(basis):
        lm, lc = order.leading(g)
        field = g.field
        inv = field.inv(lc)
        g = g.scale(inv)
        c = [x.scale(inv) for x in cofs[i]] if track else None
        out.append((order.key(lm), g, c))
    out.sort(key=lambda t: t[0], reverse=True)
    basis = [g for _, g, _ in out]
    cofs = [c for _, _, c in out] if track else None
    return basis, cofs


def buchberger(gens, order: DegRevLex, budget: int = DEFAULT_PAIR_BUDGET) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    basis, _, _ = _buchberger_core(list(gens), order, budget, track=False)
    basis, _ = _interreduce(basis, None, order, track=False)
    return GroebnerBasis(basis, order, reduced=True)


def buchberger_extended(gens, order: DegRevLex, budget: int = DEFAULT_PAIR_BUDGET):
    """Reduced basis plus, per element, its cofactors over the inputs.

    Returns (gb, cofactors) with ``gb.generators[i] == sum_j cofactors[i][j] * gens[j]``.
    """
    gens = list(gens)
    basis, cofs, _ = _buchberger_core(gens, order, budget, track=True)
    basis, cofs = _interreduce(basis, cofs, order, track=True)
    return GroebnerBasis(basis, order, reduced=True), [tuple(c) for c in cofs]


def reduce_extended(p: Polynomial, gb: GroebnerBasis):
    """Reduce p, also returning quotients over the basis elements.

    Returns (remainder, quotients) with ``p == sum_i quotients[i]*gb[i] + remainder``.
    """
    field = p.field
    quotients = [Polynomial.zero(field) for _ in gb.generators]
    remainder = Polynomial.zero(field)
    order = gb.order
    while not p.is_zero():
        lm, lc = order.leading(p)
        for gi, g in enumerate(gb.generators):
            glm, glc = order.leading(g)
            if glm.divides(lm):
                q = lm.divide(glm)
                factor = field.div(lc, glc)
                p = p - g.term_mul(q, factor)
                quotients[gi] = quotients[gi] + Polynomial(field, {q: factor})
                break
        else:
            t = Polynomial(field, {lm: lc})
            remainder = remainder + t
            p = p - t
    return remainder, quotients


def ideal_equal(g1: GroebnerBasis, g2: GroebnerBasis) -> bool:
    """Two reduced bases generate the same ideal iff they coincide as sets."""
    if g1.order != g2.order:
        raise ValueError("ideal_equal requires a common order")
    return set(g1.generators) == set(g2.generators)


def staircase(gb: GroebnerBasis):
    """All monomials outside the leading-term ideal, if finitely many.

    Raises NotFiniteDimensional when some variable has no pure power among
    the leading monomials (the quotient is then infinite-dimensional).
    """
    variables = gb.order.variables
    leads = [gb.order.leading(g)[0] for g in gb.generators]
    if any(lm.is_one() for lm in leads):
        return []
    bounds = {}
    for v in variables:
        bound = None
        for lm in leads:
            if set(lm.exps) == {v}:
                e = lm.exps[v]
                bound = e if bound is None else min(bound, e)
        if bound is None:
            raise NotFiniteDimensional(f"no pure power of {v} among leading terms")
        bounds[v] = bound

    out = []

    def rec(i, exps):
        if i == len(variables):
            m = Monomial(exps)
            if not any(lm.divides(m) for lm in leads):
                out.append(m)
            return
        v = variables[i]
        for e in range(bounds[v]):
            if e:
                exps[v] = e
            elif v in exps:
                del exps[v]
            rec(i + 1, dict(exps))

    rec(0, {})
    out.sort(key=gb.order.key)
    return out
