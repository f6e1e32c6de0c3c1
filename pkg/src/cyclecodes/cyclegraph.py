"""Odd-cycle graphs and the point sets they parameterize.

A graph here is a disjoint union of odd cycles, given as an ordered
list of (k, m) families: m copies of the k-cycle.  Vertices are laid
out in consecutive blocks, one block of k per copy, families in the
given order.  Within one block at offset b the edges are

    (b, b+1), (b+1, b+2), ..., (b+k-2, b+k-1), (b+k-1, b)

so the i-th edge coordinate aligns with the i-th vertex of the block
and the total edge count equals the total vertex count.

The parameterized set X* is the image of the map sending a tuple of
nonzero field elements (one per vertex) to the tuple of edge products
x_j * x_k.  It is enumerated per cycle copy and combined by Cartesian
product, which is valid because the map acts independently on each
copy's block.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    OddityError,
    ParseError,
    ZeroCoordinate,
)
from .gf import Field

DEFAULT_ENUM_BUDGET = 1 << 26


def gamma_of(k: int) -> int:
    """The gamma parameter of an odd cycle: k = 2*gamma + 1."""
    return (k - 1) // 2


@dataclass(frozen=True)
class CycleFamilySpec:
    """An ordered list of (cycle length k, multiplicity m) families."""

    components: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("need at least one cycle family")
        for k, m in self.components:
            if k % 2 == 0:
                raise OddityError(f"cycle length {k} is even; only odd "
                                  "cycles are supported")
            if k < 3:
                raise ValueError(f"cycle length must be >= 3, got {k}")
            if m < 1:
                raise ValueError(f"multiplicity must be >= 1, got {m}")
        object.__setattr__(self, "components", tuple(
            (int(k), int(m)) for k, m in self.components))

    @classmethod
    def single(cls, k: int, m: int = 1) -> "CycleFamilySpec":
        return cls(((k, m),))

    @property
    def nvars(self) -> int:
        """Total edge count = total vertex count."""
        return sum(k * m for k, m in self.components)

    def blocks(self) -> list[tuple[int, int]]:
        """(k, offset) for every cycle copy, in layout order."""
        out = []
        off = 0
        for k, m in self.components:
            for _ in range(m):
                out.append((k, off))
                off += k
        return out

    def edges(self) -> list[tuple[int, int]]:
        """Global edge list in the pinned order."""
        out = []
        for k, off in self.blocks():
            for j in range(k - 1):
                out.append((off + j, off + j + 1))
            out.append((off + k - 1, off))
        return out

    def to_string(self) -> str:
        return ",".join(f"{k}x{m}" if m > 1 else str(k)
                        for k, m in self.components)

    def __str__(self) -> str:
        return self.to_string()


_SPEC_ITEM = re.compile(r"\s*(\d+)\s*(?:x\s*(\d+)\s*)?$")


def parse_spec_string(text: str) -> CycleFamilySpec:
    """Parse the CLI grammar: comma-separated ``k`` or ``kxm`` items.

    Examples: ``"5"`` is one 5-cycle; ``"3x2,5"`` is two 3-cycles plus
    one 5-cycle.
    """
    if not text or not text.strip():
        raise ParseError("empty cycle spec")
    components = []
    pos = 0
    for item in text.split(","):
        m = _SPEC_ITEM.match(item)
        if not m:
            raise ParseError(f"bad spec item {item.strip()!r}; "
                             "expected 'k' or 'kxm'", position=pos)
        k = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) else 1
        try:
            CycleFamilySpec.single(k, mult)
        except OddityError:
            raise OddityError(f"cycle length {k} is even; only odd cycles "
                              "are supported", position=pos) from None
        except ValueError as exc:
            raise ParseError(str(exc), position=pos) from None
        components.append((k, mult))
        pos += len(item) + 1
    return CycleFamilySpec(tuple(components))


# -- the parameterization map and its image --------------------------------

def theta_map(spec: CycleFamilySpec, field: Field, x) -> tuple[int, ...]:
    """Edge-product map: one coordinate x_j * x_k per edge."""
    n = spec.nvars
    if len(x) != n:
        raise DimensionMismatch(f"expected {n} coordinates, got {len(x)}")
    for v in x:
        if v == 0:
            raise ZeroCoordinate("vertex values must be nonzero")
    return tuple(field.mul(x[a], x[b]) for a, b in spec.edges())


def _single_cycle_points(k: int, field: Field,
                         budget: int) -> list[tuple[int, ...]]:
    """Sorted distinct image points of one k-cycle copy."""
    work = (field.q - 1) ** k
    if work > budget:
        raise BudgetExceeded(
            f"enumerating one {k}-cycle copy over F_{field.q} needs "
            f"{work} assignments, budget is {budget}")
    units = field.units()
    mul = field.mul
    seen = set()
    for x in itertools.product(units, repeat=k):
        pt = tuple(mul(x[j], x[(j + 1) % k]) for j in range(k))
        seen.add(pt)
    return sorted(seen)


class ToricSet:
    """The enumerated point set X*, sorted and deduplicated."""

    def __init__(self, spec: CycleFamilySpec, field: Field, points):
        self.spec = spec
        self.field = field
        self.points = tuple(sorted(set(points)))
        self._point_set = frozenset(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in self._point_set

    @property
    def nvars(self) -> int:
        return self.spec.nvars

    def serialize(self) -> str:
        """One point per line, coordinates space-separated."""
        return "\n".join(" ".join(str(c) for c in p) for p in self.points)

    def __repr__(self) -> str:
        return (f"ToricSet(spec={self.spec.to_string()!r}, "
                f"q={self.field.q}, points={len(self.points)})")


def enumerate_toric_set(spec: CycleFamilySpec, field: Field,
                        budget: int = DEFAULT_ENUM_BUDGET) -> ToricSet:
    """Materialize X* by per-copy enumeration and Cartesian product."""
    per_k: dict[int, list[tuple[int, ...]]] = {}
    for k, _m in spec.components:
        if k not in per_k:
            per_k[k] = _single_cycle_points(k, field, budget)
    total = 1
    for k, m in spec.components:
        total *= len(per_k[k]) ** m
    if total > budget:
        raise BudgetExceeded(
            f"X* has {total} points, materialization budget is {budget}")
    copy_sets = [per_k[k] for k, _off in spec.blocks()]
    points = [sum(parts, ()) for parts in itertools.product(*copy_sets)]
    return ToricSet(spec, field, points)


def enumerated_cardinality(spec: CycleFamilySpec, field: Field,
                           budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """|X*| by per-copy enumeration, without materializing the product.

    Each distinct cycle length is enumerated once; the total is the
    product of per-copy counts, so specs whose full point set would
    exceed the budget can still be counted exactly.
    """
    per_k: dict[int, int] = {}
    total = 1
    for k, m in spec.components:
        if k not in per_k:
            per_k[k] = len(_single_cycle_points(k, field, budget))
        total *= per_k[k] ** m
    return total


def cardinality_formula(spec: CycleFamilySpec, q: int) -> int:
    """Closed-form |X*|: per family (q-1)^(km), halved per copy when
    q-1 is even (opposite vertex assignments collide pairwise)."""
    total = 1
    for k, m in spec.components:
        if (q - 1) % 2 == 0:
            total *= (q - 1) ** (k * m) // 2 ** m
        else:
            total *= (q - 1) ** (k * m)
    return total


def is_affine_torus(spec: CycleFamilySpec, q: int) -> bool:
    """True when X* is the full torus of unit tuples (q-1 odd)."""
    return (q - 1) % 2 == 1
