"""Hilbert functions, regularity and the beta decomposition.

The central object is the affine Hilbert function H(d): the number of
standard monomials of total degree <= d, i.e. monomials divisible by no
leading term of the ideal's generator set.  Three independent routes
compute it:

* footprint counting (this module): the leading terms confine each
  cycle block's exponents to a product structure that is counted by
  polynomial convolution — per block, exponents split into a "low"
  range 0..(q-3)/2 and a "high" range (q-1)/2..q-2, and a standard
  monomial has at most gamma high exponents in each block;
* the union formula (this module): H(d) for a single cycle equals the
  size of a union of C(k, gamma) explicit boxes, computed by
  inclusion-exclusion;
* evaluation-matrix rank (codes module): H(d) equals the dimension of
  the degree-d evaluation code.

All counting is exact integer arithmetic; the beta linear system is
solved by fraction-free Bareiss elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .cyclegraph import CycleFamilySpec, cardinality_formula, gamma_of
from .errors import (
    BudgetExceeded,
    CheckFailure,
    NonIntegerBeta,
    SingularSystem,
    UnsupportedSpec,
)
from .gf import Field
from .ideal import build_generators
from .poly import mono_divides

DEFAULT_UNION_BUDGET = 1 << 20


# -- box counting ----------------------------------------------------------

def _conv(a: list[int], b: list[int], cap: int | None = None) -> list[int]:
    """Coefficient convolution, optionally truncated at degree cap."""
    n = len(a) + len(b) - 1
    if cap is not None:
        n = min(n, cap + 1)
    out = [0] * n
    for i, ai in enumerate(a):
        if ai == 0 or i >= n:
            continue
        for j, bj in enumerate(b):
            if i + j >= n:
                break
            out[i + j] += ai * bj
    return out


def count_box_by_degree(bounds, cap: int | None = None) -> list[int]:
    """Exact-degree counts of {a : 0 <= a_i <= b_i}: the coefficients
    of the product of (1 + x + ... + x^{b_i})."""
    vec = [1]
    for b in bounds:
        vec = _conv(vec, [1] * (b + 1), cap)
    return vec


def count_box_degree(bounds, d: int) -> int:
    """#{a : 0 <= a_i <= b_i, sum(a) <= d}."""
    if d < 0:
        return 0
    return sum(count_box_by_degree(bounds, d))


# -- footprint route -------------------------------------------------------

def block_degree_vector(k: int, field: Field) -> list[int]:
    """Exact-degree counts of one cycle block's standard monomials.

    When q-1 is even the block's leading terms are t_i^(q-1) and all
    (gamma+1)-fold products of (q-1)/2-th powers, so a block exponent
    vector is standard iff every exponent is <= q-2 and at most gamma
    of them are >= (q-1)/2.  Splitting each exponent into a low range
    (0..(q-1)/2-1) and an equally long high range gives the generating
    polynomial  low_box^k * sum_{v<=gamma} C(k,v) x^{v(q-1)/2}.

    When q-1 is odd there is no cycle part and the block is the plain
    box with every bound q-2.
    """
    q = field.q
    if (q - 1) % 2 != 0:
        return count_box_by_degree([q - 2] * k)
    half = (q - 1) // 2
    gamma = gamma_of(k)
    low = count_box_by_degree([half - 1] * k)
    mask = [0] * (gamma * half + 1)
    for v in range(gamma + 1):
        mask[v * half] = comb(k, v)
    return _conv(low, mask)


def footprint_by_degree(spec: CycleFamilySpec, field: Field) -> list[int]:
    """Exact-degree standard-monomial counts for the whole graph:
    the convolution of every block's vector."""
    vec = [1]
    for k, m in spec.components:
        block = block_degree_vector(k, field)
        for _ in range(m):
            vec = _conv(vec, block)
    return vec


def hilbert_footprint(spec: CycleFamilySpec, field: Field, d: int) -> int:
    """H(d) = number of standard monomials of degree <= d."""
    if d < 0:
        return 0
    return sum(footprint_by_degree(spec, field)[:d + 1])


def hilbert_footprint_slow(spec: CycleFamilySpec, field: Field,
                           d: int) -> int:
    """Lattice-walk oracle: enumerate every monomial of degree <= d and
    test divisibility against each leading term.  Tiny instances only."""
    n = spec.nvars
    leads = [g.leading_monomial() for g in build_generators(spec, field)]
    count = 0
    for mono in itertools.product(range(d + 1), repeat=n):
        if sum(mono) > d:
            continue
        if not any(mono_divides(lt, mono) for lt in leads):
            count += 1
    return count


# -- union-of-boxes route ---------------------------------------------------

def hilbert_union_formula(k: int, field: Field, d: int,
                          budget: int = DEFAULT_UNION_BUDGET) -> int:
    """H(d) for a single k-cycle as the size of a union of boxes.

    One box per gamma-subset H of the k variables: exponents bounded by
    q-2 inside H and by (q-1)/2 - 1 outside.  Inclusion-exclusion over
    the C(k, gamma) boxes; an intersection's bound is q-2 only at
    variables common to every participating H, so each term reduces to
    a box count depending only on the common-intersection size.
    """
    q = field.q
    if (q - 1) % 2 != 0:
        raise UnsupportedSpec(
            "the union formula needs q-1 even; for q even X* is the full "
            "torus and the footprint box applies")
    gamma = gamma_of(k)
    half = (q - 1) // 2
    subsets = list(itertools.combinations(range(k), gamma))
    r = len(subsets)
    if 2 ** r - 1 > budget:
        raise BudgetExceeded(
            f"inclusion-exclusion over {r} boxes needs {2 ** r - 1} terms, "
            f"budget is {budget}")
    masks = [sum(1 << v for v in H) for H in subsets]
    by_common_size: dict[int, int] = {}
    total = 0
    for t in range(1, 1 << r):
        common = (1 << k) - 1
        tt = t
        while tt:
            common &= masks[(tt & -tt).bit_length() - 1]
            tt &= tt - 1
        j = common.bit_count()
        if j not in by_common_size:
            bounds = [q - 2] * j + [half - 1] * (k - j)
            by_common_size[j] = count_box_degree(bounds, d)
        term = by_common_size[j]
        total += term if t.bit_count() % 2 else -term
    return total


def degenerate_torus_hilbert(i: int, k: int, field: Field, d: int) -> int:
    """Hilbert function of the i-th degenerate torus: i unit factors
    and k-i squares factors, i.e. the box with i bounds q-2 and k-i
    bounds (q-1)/2 - 1."""
    q = field.q
    if (q - 1) % 2 != 0:
        raise UnsupportedSpec("degenerate tori need q-1 even")
    gamma = gamma_of(k)
    if not 0 <= i <= gamma:
        raise ValueError(f"index {i} outside 0..{gamma}")
    half = (q - 1) // 2
    return count_box_degree([q - 2] * i + [half - 1] * (k - i), d)


# -- regularity -------------------------------------------------------------

def regularity_formula(spec: CycleFamilySpec, field: Field) -> int:
    """Closed-form stabilization degree of the Hilbert function.

    For q-1 even: sum over families of m(k+gamma)(q-1)/2 - km.  For
    q-1 odd X* is the full torus and the footprint is the plain box
    with all bounds q-2, which saturates at degree s(q-2).
    """
    q = field.q
    if (q - 1) % 2 == 0:
        half = (q - 1) // 2
        return sum(m * (k + gamma_of(k)) * half - k * m
                   for k, m in spec.components)
    return spec.nvars * (q - 2)


def regularity_bruteforce(spec: CycleFamilySpec, field: Field) -> int:
    """Least d with H(d) = |X*|, by scanning the footprint counts."""
    target = cardinality_formula(spec, field.q)
    acc = 0
    for d, c in enumerate(footprint_by_degree(spec, field)):
        acc += c
        if acc == target:
            return d
    raise CheckFailure(
        f"footprint total {acc} never reached |X*| = {target}; "
        "the two routes disagree")


# -- tables -----------------------------------------------------------------

@dataclass(frozen=True)
class HilbertTable:
    """H(0)..H(dmax) plus the route that produced the values."""

    values: tuple[int, ...]
    source: str  # "footprint" | "union_formula" | "rank_oracle"

    def __getitem__(self, d: int) -> int:
        return self.values[d]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def dmax(self) -> int:
        return len(self.values) - 1


def footprint_table(spec: CycleFamilySpec, field: Field,
                    dmax: int) -> HilbertTable:
    vec = footprint_by_degree(spec, field)
    acc, values = 0, []
    for d in range(dmax + 1):
        acc += vec[d] if d < len(vec) else 0
        values.append(acc)
    return HilbertTable(tuple(values), "footprint")


def union_table(k: int, field: Field, dmax: int) -> HilbertTable:
    values = tuple(hilbert_union_formula(k, field, d)
                   for d in range(dmax + 1))
    return HilbertTable(values, "union_formula")


# -- beta decomposition ------------------------------------------------------

@dataclass(frozen=True)
class BetaDecomposition:
    """Integer coefficients with H(d) = sum of beta_i * H_i(d), where
    H_i is the i-th degenerate-torus Hilbert function."""

    betas: tuple[int, ...]
    sample_degrees: tuple[int, ...]
    verified_through: int


def _bareiss_forward(mat: list[list[int]]) -> tuple[int, int, list[list[int]]]:
    """Fraction-free forward elimination on an integer matrix.

    Returns (rank, row-swap sign, echelon form).  All divisions are
    exact by the Bareiss identity, so everything stays integral.
    """
    m = [[int(v) for v in row] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    prev = 1
    r = 0
    sign = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
    return r, sign, m


def bareiss_rank(mat) -> int:
    if not mat:
        return 0
    rank, _, _ = _bareiss_forward(mat)
    return rank


def bareiss_det(mat) -> int:
    """Exact determinant of a square integer matrix."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    rank, sign, m = _bareiss_forward(mat)
    if rank < n:
        return 0
    return sign * m[n - 1][n - 1]


def solve_betas(k: int, field: Field,
                sample_degrees=None) -> BetaDecomposition:
    """Solve for the beta coefficients of a single k-cycle.

    Builds one equation per sample degree (default degrees 1..gamma+1)
    and solves the square system exactly.  If the chosen degrees give a
    singular system, further degrees are appended one at a time, up to
    the regularity index, and a maximal independent subset is used.
    The solved identity is then re-verified at every degree through
    regularity + 1.
    """
    q = field.q
    if (q - 1) % 2 != 0:
        raise UnsupportedSpec("beta decomposition needs q-1 even")
    gamma = gamma_of(k)
    size = gamma + 1
    spec = CycleFamilySpec.single(k)
    reg = regularity_formula(spec, field)
    vec = footprint_by_degree(spec, field)
    prefix = list(itertools.accumulate(vec))

    def h_target(d: int) -> int:
        return prefix[min(d, len(prefix) - 1)] if d >= 0 else 0

    def h_torus(i: int, d: int) -> int:
        return degenerate_torus_hilbert(i, k, field, d)

    pool = list(sample_degrees) if sample_degrees is not None \
        else list(range(1, size + 1))
    while True:
        chosen_rows: list[list[int]] = []
        chosen_degrees: list[int] = []
        for d in pool:
            row = [h_torus(i, d) for i in range(size)]
            if bareiss_rank([r[:size] for r in chosen_rows] + [row]) \
                    > len(chosen_rows):
                chosen_rows.append(row + [h_target(d)])
                chosen_degrees.append(d)
                if len(chosen_rows) == size:
                    break
        if len(chosen_rows) == size:
            break
        next_d = max(pool) + 1
        if next_d > reg:
            raise SingularSystem(
                f"no {size} independent sample degrees up to regularity "
                f"{reg} for k={k}, q={q}")
        pool.append(next_d)

    a = [row[:size] for row in chosen_rows]
    b = [row[size] for row in chosen_rows]
    det = bareiss_det(a)
    betas = []
    for i in range(size):
        ai = [row[:i] + [b[r]] + row[i + 1:size]
              for r, row in enumerate(a)]
        di = bareiss_det(ai)
        if di % det != 0:
            raise NonIntegerBeta(
                f"beta_{i} = {di}/{det} is not an integer for k={k}, q={q}")
        betas.append(di // det)

    for d in range(1, reg + 2):
        lhs = sum(betas[i] * h_torus(i, d) for i in range(size))
        if lhs != h_target(d):
            raise CheckFailure(
                f"beta identity fails at degree {d}: {lhs} != {h_target(d)}")
    return BetaDecomposition(tuple(betas), tuple(chosen_degrees), reg + 1)
