"""Multivariate polynomials over a small finite field.

Monomials are exponent tuples; a polynomial stores its nonzero terms
sorted in decreasing monomial order.  Two orders are provided:

* ``"grlex"`` — graded lexicographic with ``t1 > t2 > ... > tn``;
* ``"h"`` — the order used for polynomials homogenized by an extra last
  variable ``u``: monomials are compared by the graded-lex order of
  their ``t``-part, with the ``u`` exponent breaking ties.  Under this
  order ``u`` is smaller than every ``t_i``.

Polynomial text form (also accepted by the parser): terms in decreasing
order joined by `` + `` / `` - ``, e.g. ``t1^3*t2 - t3^2 + 1``.  A bare
``-`` stands for coefficient ``q-1``; any other non-unit coefficient is
written ``c*...``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    DegreeTooSmall,
    DimensionMismatch,
    ParseError,
    SupportsNotDisjoint,
    ZeroDivisor,
    ZeroPolynomial,
)
from .gf import Field

Monomial = tuple[int, ...]


# -- monomial helpers -----------------------------------------------------

def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Quotient a / b; caller must ensure b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def grlex_key(m: Monomial):
    """Sort key: ascending under graded lex with t1 highest."""
    return (sum(m), m)


def order_h_key(m: Monomial):
    """Sort key for the homogenization order (last variable is u)."""
    t = m[:-1]
    return (sum(t), t, m[-1])


_KEYS = {"grlex": grlex_key, "h": order_h_key}


def monomial_key(order: str):
    try:
        return _KEYS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}") from None


def grlex_cmp(a: Monomial, b: Monomial) -> int:
    if len(a) != len(b):
        raise DimensionMismatch(
            f"cannot compare monomials on {len(a)} and {len(b)} variables")
    ka, kb = grlex_key(a), grlex_key(b)
    return (ka > kb) - (ka < kb)


def order_h_cmp(a: Monomial, b: Monomial) -> int:
    if len(a) != len(b):
        raise DimensionMismatch(
            f"cannot compare monomials on {len(a)} and {len(b)} variables")
    ka, kb = order_h_key(a), order_h_key(b)
    return (ka > kb) - (ka < kb)


# -- polynomials ----------------------------------------------------------

class Polynomial:
    """Immutable polynomial; terms kept sorted in decreasing order."""

    __slots__ = ("field", "nvars", "order", "terms")

    def __init__(self, field: Field, nvars: int,
                 terms: "iter[tuple[Monomial, int]]", order: str = "grlex"):
        key = monomial_key(order)
        merged: dict[Monomial, int] = {}
        for mono, coeff in terms:
            if len(mono) != nvars:
                raise DimensionMismatch(
                    f"monomial {mono} has {len(mono)} exponents, expected {nvars}")
            if field.e == 1:
                coeff %= field.q
            elif not 0 <= coeff < field.q:
                raise ValueError(
                    f"coefficient {coeff} is not an element of F_{field.q}")
            c = field.add(merged.get(mono, 0), coeff)
            if c:
                merged[mono] = c
            else:
                merged.pop(mono, None)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "order", order)
        object.__setattr__(
            self, "terms",
            tuple(sorted(merged.items(), key=lambda t: key(t[0]), reverse=True)))

    def __setattr__(self, *_):
        raise AttributeError("Polynomial is immutable")

    # constructors
    @classmethod
    def zero(cls, field: Field, nvars: int, order: str = "grlex") -> "Polynomial":
        return cls(field, nvars, [], order)

    @classmethod
    def constant(cls, field: Field, nvars: int, c: int,
                 order: str = "grlex") -> "Polynomial":
        return cls(field, nvars, [((0,) * nvars, c)], order)

    @classmethod
    def monomial(cls, field: Field, mono: Monomial, coeff: int = 1,
                 order: str = "grlex") -> "Polynomial":
        return cls(field, len(mono), [(mono, coeff)], order)

    @classmethod
    def binomial(cls, field: Field, plus: Monomial, minus: Monomial,
                 order: str = "grlex") -> "Polynomial":
        """The difference of two monomials, t^plus - t^minus."""
        return cls(field, len(plus), [(plus, 1), (minus, field.neg(1))], order)

    # inspection
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m, _ in self.terms)

    def leading_term(self) -> tuple[Monomial, int]:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def leading_coeff(self) -> int:
        return self.leading_term()[1]

    def _check_compatible(self, other: "Polynomial") -> None:
        if (self.field != other.field or self.nvars != other.nvars
                or self.order != other.order):
            raise DimensionMismatch(
                "polynomials disagree on field, variable count or order")

    # arithmetic
    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        return Polynomial(self.field, self.nvars,
                          list(self.terms) + list(other.terms), self.order)

    def __neg__(self) -> "Polynomial":
        f = self.field
        return Polynomial(f, self.nvars,
                          [(m, f.neg(c)) for m, c in self.terms], self.order)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_compatible(other)
        f = self.field
        out: dict[Monomial, int] = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = mono_mul(ma, mb)
                out[m] = f.add(out.get(m, 0), f.mul(ca, cb))
        return Polynomial(f, self.nvars, out.items(), self.order)

    def scale(self, c: int) -> "Polynomial":
        f = self.field
        return Polynomial(f, self.nvars,
                          [(m, f.mul(coeff, c)) for m, coeff in self.terms],
                          self.order)

    def term_mul(self, mono: Monomial, coeff: int) -> "Polynomial":
        f = self.field
        return Polynomial(f, self.nvars,
                          [(mono_mul(m, mono), f.mul(c, coeff))
                           for m, c in self.terms], self.order)

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        return self.scale(self.field.inv(self.leading_coeff()))

    # evaluation
    def evaluate(self, point) -> int:
        if len(point) != self.nvars:
            raise DimensionMismatch(
                f"point has {len(point)} coordinates, expected {self.nvars}")
        f = self.field
        total = 0
        for mono, coeff in self.terms:
            v = coeff
            for x, exp in zip(point, mono):
                if exp:
                    v = f.mul(v, f.pow(x, exp))
            total = f.add(total, v)
        return total

    # homogenization
    def homogenize(self, target_degree: int) -> "Polynomial":
        """Multiply each term by u^(target - deg); u becomes the last
        variable and the result carries the "h" order."""
        if self.is_zero:
            return Polynomial.zero(self.field, self.nvars + 1, "h")
        d = self.degree()
        if target_degree < d:
            raise DegreeTooSmall(
                f"target degree {target_degree} below polynomial degree {d}")
        terms = [(m + (target_degree - mono_degree(m),), c)
                 for m, c in self.terms]
        return Polynomial(self.field, self.nvars + 1, terms, "h")

    # text form
    def _mono_text(self, mono: Monomial) -> str:
        names = []
        n = self.nvars
        for i, e in enumerate(mono):
            if e == 0:
                continue
            name = "u" if (self.order == "h" and i == n - 1) else f"t{i + 1}"
            names.append(name if e == 1 else f"{name}^{e}")
        return "*".join(names) if names else "1"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        q = self.field.q
        parts = []
        for idx, (mono, coeff) in enumerate(self.terms):
            is_const = not any(mono)
            negative = q > 2 and coeff == q - 1
            if negative and is_const:
                body = "1"
            elif negative or coeff == 1:
                body = self._mono_text(mono)
            elif is_const:
                body = str(coeff)
            else:
                body = f"{coeff}*{self._mono_text(mono)}"
            if idx == 0:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial(F{self.field.q}, {self.to_text()!r})"

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Polynomial)
                and self.field == other.field
                and self.nvars == other.nvars
                and self.order == other.order
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.field.q, self.nvars, self.order, self.terms))


# -- binomials ------------------------------------------------------------

@dataclass(frozen=True)
class Binomial:
    """A difference of two monomials, t^plus - t^minus."""

    plus: Monomial
    minus: Monomial

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise DimensionMismatch(
                "the two monomials have different variable counts")

    def supports_disjoint(self) -> bool:
        return mono_coprime(self.plus, self.minus)

    def normalized(self) -> "Binomial":
        """Factor out the monomial gcd so supports become disjoint."""
        g = tuple(min(a, b) for a, b in zip(self.plus, self.minus))
        return Binomial(mono_div(self.plus, g), mono_div(self.minus, g))

    def require_disjoint(self) -> None:
        if not self.supports_disjoint():
            raise SupportsNotDisjoint(
                f"monomials {self.plus} and {self.minus} share variables")

    def to_polynomial(self, field: Field, order: str = "grlex") -> Polynomial:
        return Polynomial.binomial(field, self.plus, self.minus, order)

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "Binomial":
        """Extract t^a - t^b from a two-term polynomial with unit
        coefficients 1 and -1 (any term order)."""
        if len(p.terms) != 2:
            raise ValueError("polynomial does not have exactly two terms")
        (ma, ca), (mb, cb) = p.terms
        one, minus_one = 1, p.field.neg(1)
        if (ca, cb) == (one, minus_one):
            return cls(ma, mb)
        if (ca, cb) == (minus_one, one):
            return cls(mb, ma)
        raise ValueError("polynomial is not a difference of two monomials")


# -- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<var>t(?P<idx>\d+)|u)|(?P<int>\d+)"
                    r"|(?P<op>[-+*^]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            break
        if m.group("var"):
            if m.group("var") == "u":
                out.append(("u", None, m.start("var")))
            else:
                out.append(("t", int(m.group("idx")), m.start("var")))
        elif m.group("int"):
            out.append(("int", int(m.group("int")), m.start("int")))
        else:
            out.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    if text[pos:].strip():
        raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}",
                         position=pos)
    return out


def parse_polynomial(text: str, field: Field, nvars: int,
                     order: str = "grlex") -> Polynomial:
    """Parse the textual polynomial form produced by ``to_text``.

    Accepts integer coefficients (reduced into the field), ``*`` between
    factors, ``^`` for exponents, and leading/infix ``+``/``-``.  The
    variable ``u`` is only legal under the "h" order, where it names the
    last variable.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text")
    terms: list[tuple[Monomial, int]] = []
    i = 0
    sign_neg = False
    first = True
    n = len(tokens)
    while i < n:
        kind, val, pos = tokens[i]
        if kind == "op" and val in "+-":
            sign_neg = val == "-"
            i += 1
            if i >= n:
                raise ParseError("dangling sign at end of input", position=pos)
        elif not first:
            raise ParseError("expected '+' or '-' before term", position=pos)
        # parse one term: factors joined by '*'
        coeff = field.neg(1) if sign_neg else 1
        exps = [0] * nvars
        expect_factor = True
        saw_factor = False
        while i < n:
            kind, val, pos = tokens[i]
            if kind == "op" and val == "*":
                if expect_factor:
                    raise ParseError("'*' without preceding factor",
                                     position=pos)
                expect_factor = True
                i += 1
                continue
            if not expect_factor:
                break  # next term begins
            if kind == "int":
                c = val % field.q
                coeff = field.mul(coeff, c)
                i += 1
            elif kind in ("t", "u"):
                if kind == "u":
                    if order != "h":
                        raise ParseError(
                            "variable 'u' is only valid under the h order",
                            position=pos)
                    var = nvars - 1
                else:
                    var = val - 1
                    limit = nvars - 1 if order == "h" else nvars
                    if not 0 <= var < limit:
                        raise ParseError(f"variable t{val} out of range",
                                         position=pos)
                i += 1
                exp = 1
                if i < n and tokens[i][0] == "op" and tokens[i][1] == "^":
                    i += 1
                    if i >= n or tokens[i][0] != "int":
                        raise ParseError("'^' must be followed by an integer",
                                         position=pos)
                    exp = tokens[i][1]
                    i += 1
                exps[var] += exp
            else:
                raise ParseError(f"unexpected token {val!r}", position=pos)
            expect_factor = False
            saw_factor = True
        if not saw_factor:
            raise ParseError("empty term")
        if expect_factor:
            raise ParseError("dangling '*' at end of input")
        terms.append((tuple(exps), coeff))
        sign_neg = False
        first = False
    return Polynomial(field, nvars, terms, order)


# -- division and Groebner machinery --------------------------------------

def multivariate_divide(f: Polynomial, divisors) -> tuple[list[Polynomial],
                                                          Polynomial]:
    """Divide f by an ordered list of polynomials.

    Returns (quotients, remainder) with
    ``f = sum(q_i * g_i) + r`` and no term of r divisible by any
    leading monomial of the divisors.
    """
    divisors = list(divisors)
    if not divisors:
        raise ZeroDivisor("need at least one divisor")
    for g in divisors:
        f._check_compatible(g)
        if g.is_zero:
            raise ZeroDivisor("zero polynomial among the divisors")
    field = f.field
    key = monomial_key(f.order)
    lead = [(g.leading_monomial(), g.leading_coeff()) for g in divisors]
    quot_terms: list[list[tuple[Monomial, int]]] = [[] for _ in divisors]
    rem_terms: list[tuple[Monomial, int]] = []
    work = dict(f.terms)

    while work:
        mono = max(work, key=key)
        coeff = work[mono]
        for i, (lm, lc) in enumerate(lead):
            if mono_divides(lm, mono):
                qm = mono_div(mono, lm)
                qc = field.div(coeff, lc)
                quot_terms[i].append((qm, qc))
                # subtract qc * t^qm * g_i; the pivot entry cancels exactly
                for gm, gc in divisors[i].terms:
                    m2 = mono_mul(gm, qm)
                    c2 = field.sub(work.get(m2, 0), field.mul(gc, qc))
                    if c2:
                        work[m2] = c2
                    else:
                        work.pop(m2, None)
                break
        else:
            del work[mono]
            rem_terms.append((mono, coeff))
    quotients = [Polynomial(field, f.nvars, ts, f.order) for ts in quot_terms]
    remainder = Polynomial(field, f.nvars, rem_terms, f.order)
    return quotients, remainder


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two nonzero polynomials."""
    f._check_compatible(g)
    lmf, lcf = f.leading_term()
    lmg, lcg = g.leading_term()
    l = mono_lcm(lmf, lmg)
    field = f.field
    a = f.term_mul(mono_div(l, lmf), field.inv(lcf))
    b = g.term_mul(mono_div(l, lmg), field.inv(lcg))
    return a - b


def buchberger_is_groebner(gens) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero.

    Pairs with coprime leading monomials are skipped (their
    S-polynomials always reduce to zero).
    """
    gens = [g for g in gens]
    for g in gens:
        if g.is_zero:
            raise ZeroPolynomial("zero polynomial among the generators")
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if mono_coprime(gens[i].leading_monomial(),
                            gens[j].leading_monomial()):
                continue
            s = s_polynomial(gens[i], gens[j])
            if s.is_zero:
                continue
            _, r = multivariate_divide(s, gens)
            if not r.is_zero:
                return False
    return True
