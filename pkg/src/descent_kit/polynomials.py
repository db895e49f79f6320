"""Sparse multivariate polynomials over an exact field.

Monomials map variable names to positive exponents.  A polynomial does not
own a monomial order; orders are supplied where they matter (Groebner bases,
canonical rendering) as a ``DegRevLex`` built over an explicit variable
sequence, which fixes the global variable numbering.
"""

from __future__ import annotations

from .errors import ParseError
from .scalars import ScalarField


class Monomial:
    """A power product, stored as a name->exponent map with no zero entries."""

    __slots__ = ("exps", "_key", "_hash")

    def __init__(self, exps=()):
        if isinstance(exps, dict):
            items = exps.items()
        else:
            items = exps
        key = tuple(sorted((v, e) for v, e in items if e != 0))
        for v, e in key:
            if e < 0:
                raise ValueError(f"negative exponent for {v}")
        self.exps = dict(key)
        self._key = key
        self._hash = hash(key)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self._key:
            return "1"
        return "*".join(v if e == 1 else f"{v}^{e}" for v, e in self._key)

    @property
    def degree(self) -> int:
        return sum(self.exps.values())

    def is_one(self) -> bool:
        return not self.exps

    def variables(self):
        return set(self.exps)

    def mul(self, other: "Monomial") -> "Monomial":
        exps = dict(self.exps)
        for v, e in other.exps.items():
            exps[v] = exps.get(v, 0) + e
        return Monomial(exps)

    def divides(self, other: "Monomial") -> bool:
        return all(other.exps.get(v, 0) >= e for v, e in self.exps.items())

    def divide(self, other: "Monomial") -> "Monomial":
        """self / other; caller must ensure divisibility."""
        exps = dict(self.exps)
        for v, e in other.exps.items():
            exps[v] = exps.get(v, 0) - e
        return Monomial(exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        exps = dict(self.exps)
        for v, e in other.exps.items():
            exps[v] = max(exps.get(v, 0), e)
        return Monomial(exps)


ONE = Monomial()


class DegRevLex:
    """Degree-reverse-lexicographic order over a fixed variable sequence.

    m1 > m2 iff deg m1 > deg m2, or degrees tie and the last position (in
    the variable sequence) where the exponents differ has the *smaller*
    exponent in m1.
    """

    __slots__ = ("variables", "_index")

    def __init__(self, variables):
        self.variables = tuple(variables)
        self._index = {v: i for i, v in enumerate(self.variables)}
        if len(self._index) != len(self.variables):
            raise ValueError("duplicate variable in order")

    def key(self, m: Monomial):
        idx = self._index
        vec = [0] * len(self.variables)
        for v, e in m.exps.items():
            try:
                vec[idx[v]] = e
            except KeyError:
                raise ValueError(f"monomial variable {v!r} outside order {self.variables}")
        return (m.degree, tuple(-e for e in reversed(vec)))

    def sorted_terms(self, poly: "Polynomial"):
        """Terms of ``poly`` as (monomial, coeff), leading term first."""
        return sorted(poly.terms.items(), key=lambda t: self.key(t[0]), reverse=True)

    def leading(self, poly: "Polynomial"):
        """(monomial, coeff) of the leading term; poly must be nonzero."""
        return max(poly.terms.items(), key=lambda t: self.key(t[0]))

    def extend(self, extra_variables) -> "DegRevLex":
        return DegRevLex(self.variables + tuple(v for v in extra_variables if v not in self._index))

    def __eq__(self, other):
        return isinstance(other, DegRevLex) and self.variables == other.variables

    def __hash__(self):
        return hash(("DegRevLex", self.variables))

    def __repr__(self):
        return f"degrevlex{self.variables}"


class Polynomial:
    """A finite sum of scalar-weighted monomials over a ScalarField."""

    __slots__ = ("field", "terms")

    def __init__(self, field: ScalarField, terms=None):
        self.field = field
        clean = {}
        if terms:
            for m, c in (terms.items() if isinstance(terms, dict) else terms):
                c = field.normalize(c)
                if not field.is_zero(c):
                    if m in clean:
                        c = field.add(clean[m], c)
                        if field.is_zero(c):
                            del clean[m]
                            continue
                    clean[m] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(field: ScalarField) -> "Polynomial":
        return Polynomial(field)

    @staticmethod
    def constant(field: ScalarField, c) -> "Polynomial":
        return Polynomial(field, {ONE: c})

    @staticmethod
    def variable(field: ScalarField, name: str) -> "Polynomial":
        return Polynomial(field, {Monomial({name: 1}): field.one})

    # -- predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m.is_one() for m in self.terms)

    def constant_value(self):
        return self.terms.get(ONE, self.field.zero)

    def variables(self):
        out = set()
        for m in self.terms:
            out |= m.variables()
        return out

    @property
    def total_degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __repr__(self):
        return render(self, DegRevLex(sorted(self.variables())))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        fld = self.field
        for m, c in other.terms.items():
            s = fld.add(out.get(m, fld.zero), c)
            if fld.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
        p = Polynomial.__new__(Polynomial)
        p.field = fld
        p.terms = out
        return p

    def __neg__(self):
        fld = self.field
        p = Polynomial.__new__(Polynomial)
        p.field = fld
        p.terms = {m: fld.neg(c) for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        fld = self.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                s = fld.add(out.get(m, fld.zero), fld.mul(c1, c2))
                if fld.is_zero(s):
                    out.pop(m, None)
                else:
                    out[m] = s
        p = Polynomial.__new__(Polynomial)
        p.field = fld
        p.terms = out
        return p

    def scale(self, c) -> "Polynomial":
        fld = self.field
        c = fld.normalize(c)
        if fld.is_zero(c):
            return Polynomial.zero(fld)
        p = Polynomial.__new__(Polynomial)
        p.field = fld
        p.terms = {m: fld.mul(cc, c) for m, cc in self.terms.items()}
        return p

    def term_mul(self, m: Monomial, c) -> "Polynomial":
        fld = self.field
        p = Polynomial.__new__(Polynomial)
        p.field = fld
        p.terms = {mm.mul(m): fld.mul(cc, c) for mm, cc in self.terms.items()}
        return p

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute(self, env: dict) -> "Polynomial":
        """Ring-homomorphic substitution; variables absent from env are kept."""
        fld = self.field
        out = Polynomial.zero(fld)
        for m, c in self.terms.items():
            piece = Polynomial.constant(fld, c)
            for v, e in m.exps.items():
                if v in env:
                    piece = piece * (env[v] ** e)
                else:
                    piece = piece.term_mul(Monomial({v: e}), fld.one)
            out = out + piece
        return out


# -- text form -----------------------------------------------------------------

_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT_CONT = _IDENT_START | set("0123456789()[]")


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^":
            tokens.append((ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and (text[j].isdigit() or text[j] == "/"):
                j += 1
            tokens.append(("num:" + text[i:j], i))
            i = j
        elif ch in _IDENT_START:
            j = i
            while j < n and text[j] in _IDENT_CONT:
                j += 1
            tokens.append(("var:" + text[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def parse_polynomial(text: str, field: ScalarField) -> Polynomial:
    """Parse the term grammar ``coef*var^k*... +/- ...`` used everywhere.

    A factor is an integer, a fraction ``a/b``, a variable, or ``var^k``;
    factors in a term are joined by ``*``.  ``0`` parses to the zero
    polynomial.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial string")
    poly = Polynomial.zero(field)
    pos = 0

    def term(sign):
        nonlocal pos
        coeff = field.one if sign > 0 else field.neg(field.one)
        exps = {}
        expect_factor = True
        while pos < len(tokens):
            tok, at = tokens[pos]
            if tok in ("+", "-") and not expect_factor:
                break
            if tok == "*":
                if expect_factor:
                    raise ParseError("unexpected '*'", at)
                pos += 1
                expect_factor = True
                continue
            if not expect_factor:
                raise ParseError("missing '*' between factors", at)
            if tok.startswith("num:"):
                coeff = field.mul(coeff, field.parse(tok[4:]))
                pos += 1
            elif tok.startswith("var:"):
                name = tok[4:]
                pos += 1
                power = 1
                if pos < len(tokens) and tokens[pos][0] == "^":
                    pos += 1
                    if pos >= len(tokens) or not tokens[pos][0].startswith("num:"):
                        raise ParseError("exponent must be an integer", at)
                    try:
                        power = int(tokens[pos][0][4:])
                    except ValueError:
                        raise ParseError("exponent must be an integer", at) from None
                    pos += 1
                exps[name] = exps.get(name, 0) + power
            else:
                raise ParseError(f"unexpected token {tok!r}", at)
            expect_factor = False
        if expect_factor:
            raise ParseError("dangling operator", tokens[pos - 1][1] if pos else 0)
        return Polynomial(field, {Monomial(exps): coeff})

    sign = 1
    if tokens[0][0] == "-":
        sign = -1
        pos = 1
    elif tokens[0][0] == "+":
        raise ParseError("leading '+'", tokens[0][1])
    poly = poly + term(sign)
    while pos < len(tokens):
        tok, at = tokens[pos]
        if tok == "+":
            sign = 1
        elif tok == "-":
            sign = -1
        else:
            raise ParseError("terms must be joined by '+' or '-'", at)
        pos += 1
        poly = poly + term(sign)
    return poly


def render(poly: Polynomial, order: DegRevLex) -> str:
    """Canonical string form: terms in decreasing order, re-parseable."""
    if poly.is_zero():
        return "0"
    fld = poly.field
    pieces = []
    for m, c in order.sorted_terms(poly):
        neg = fld.characteristic == 0 and c < 0
        mag = fld.neg(c) if neg else c
        factors = []
        if not (mag == fld.one and not m.is_one()):
            factors.append(fld.render(mag))
        for v in order.variables:
            e = m.exps.get(v, 0)
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append(f"{v}^{e}")
        text = "*".join(factors)
        if not pieces:
            pieces.append(("-" if neg else "") + text)
        else:
            pieces.append((" - " if neg else " + ") + text)
    return "".join(pieces)
