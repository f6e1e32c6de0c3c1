"""Generators of the vanishing ideal of X* and related checks.

For a disjoint union of odd cycles over F_q the vanishing ideal of the
parameterized set X* is generated by binomials:

* the torus part t_i^(q-1) - 1, one per variable (these cut out unit
  tuples), and
* when q-1 is even, a cycle part per cycle copy: for every choice of
  gamma variables {a_1..a_gamma} out of the copy's k = 2*gamma+1
  variables, with complement {w_1..w_{gamma+1}}, the binomial

      t_{w_1}^((q-1)/2) ... t_{w_{gamma+1}}^((q-1)/2)
        - t_{a_1}^((q-1)/2) ... t_{a_gamma}^((q-1)/2).

When q-1 is odd (q a power of two) X* is the full torus and the torus
part alone generates.

The longer monomial of each cycle binomial is its leading term under
graded lex, so the stored term order is stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cyclegraph import CycleFamilySpec, ToricSet, gamma_of
from .errors import BudgetExceeded
from .gf import Field
from .poly import Binomial, Polynomial

DEFAULT_SQUARE_BUDGET = 1 << 22


@dataclass(frozen=True)
class GeneratorSet:
    """Torus binomials plus one list of cycle binomials per cycle copy."""

    spec: CycleFamilySpec
    field: Field
    torus_part: tuple[Polynomial, ...]
    cycle_parts: tuple[tuple[Polynomial, ...], ...]

    def all_generators(self) -> list[Polynomial]:
        out = list(self.torus_part)
        for part in self.cycle_parts:
            out.extend(part)
        return out

    def __iter__(self):
        return iter(self.all_generators())

    def __len__(self) -> int:
        return len(self.torus_part) + sum(len(p) for p in self.cycle_parts)


def _unit_vector(n: int, i: int, value: int) -> tuple[int, ...]:
    e = [0] * n
    e[i] = value
    return tuple(e)


def build_generators(spec: CycleFamilySpec, field: Field) -> GeneratorSet:
    """The generator set described in the module docstring."""
    n = spec.nvars
    q = field.q
    torus = tuple(
        Polynomial.binomial(field, _unit_vector(n, i, q - 1), (0,) * n)
        for i in range(n))
    cycle_parts = []
    if (q - 1) % 2 == 0:
        half = (q - 1) // 2
        for k, off in spec.blocks():
            block_vars = list(range(off, off + k))
            gens = []
            for alpha in itertools.combinations(block_vars, gamma_of(k)):
                w = [v for v in block_vars if v not in alpha]
                plus = [0] * n
                minus = [0] * n
                for v in w:
                    plus[v] = half
                for v in alpha:
                    minus[v] = half
                gens.append(
                    Polynomial.binomial(field, tuple(plus), tuple(minus)))
            cycle_parts.append(tuple(gens))
    return GeneratorSet(spec, field, torus, tuple(cycle_parts))


def vanishing_membership(f: Polynomial, X: ToricSet) -> bool:
    """True iff f evaluates to zero at every point of X."""
    return all(f.evaluate(p) == 0 for p in X)


def verify_vanishing(gens: GeneratorSet, X: ToricSet) -> bool:
    """True iff every generator vanishes on all of X."""
    return all(vanishing_membership(g, X) for g in gens)


def reduce_mod_torus(b: Binomial, field: Field) -> tuple[bool, Binomial]:
    """Reduce a support-disjoint binomial modulo the torus relations.

    Every exponent is replaced by its remainder mod q-1 (so q-1 itself
    drops to 0).  The result agrees with the input as a function on
    unit tuples, since x^(q-1) = 1 there.  The flag reports whether any
    exponent actually changed.
    """
    b.require_disjoint()
    q = field.q
    plus = tuple(e % (q - 1) for e in b.plus)
    minus = tuple(e % (q - 1) for e in b.minus)
    changed = plus != b.plus or minus != b.minus
    return changed, Binomial(plus, minus)


def square_point_property(f: Polynomial, spec: CycleFamilySpec, field: Field,
                          budget: int = DEFAULT_SQUARE_BUDGET) -> bool:
    """Does f vanish at every all-squares tuple (a_1^2, ..., a_s^2)?

    Every polynomial vanishing on X* has this property, which makes it
    a cheap necessary check.  Prefers the direct walk over (K*)^s; when
    that exceeds the budget it walks the (smaller) set of square tuples
    instead, which covers exactly the same points.
    """
    s = spec.nvars
    q = field.q
    if (q - 1) ** s <= budget:
        domains = [field.units()] * s
        square = True
    elif len(field.squares()) ** s <= budget:
        domains = [field.squares()] * s
        square = False
    else:
        raise BudgetExceeded(
            f"{len(field.squares()) ** s} square tuples exceed budget {budget}")
    mul = field.mul
    for a in itertools.product(*domains):
        point = tuple(mul(v, v) for v in a) if square else a
        if f.evaluate(point) != 0:
            return False
    return True


def iter_disjoint_binomials(nvars: int, q: int):
    """All binomials t^a - t^b with disjoint supports and exponents at
    most q-2, each unordered {a, b} pair yielded once, a != b.

    Per variable the exponent pair is (0,0), (e,0) or (0,e) with
    1 <= e <= q-2; the all-zero pair a = b = 0 is skipped.  Used by the
    exhaustive ideal-completeness checks at small scale.
    """
    choices = [(0, 0)]
    choices += [(e, 0) for e in range(1, q - 1)]
    choices += [(0, e) for e in range(1, q - 1)]
    for combo in itertools.product(choices, repeat=nvars):
        a = tuple(c[0] for c in combo)
        b = tuple(c[1] for c in combo)
        if a <= b:
            # keep one orientation of each {a, b} pair; skips a == b,
            # which only happens for the all-zero pair
            continue
        yield Binomial(a, b)
