"""Evaluation codes on X* and the rank oracle for Hilbert functions.

The degree-d code is the image of all polynomials of total degree <= d
under evaluation at every point of X*.  Its generator matrix has one
row per basis monomial (exponents capped at q-2, since x^(q-1) = 1 on
units makes higher powers pointwise redundant) and one column per
point.  The rank of that matrix is the code dimension and equals the
Hilbert function H(d), which makes it the independent numeric oracle
for the counting routes in the hilbert module.

Odd prime fields use vectorized numpy arithmetic on int64 residues
(safe: q <= 2^16 keeps products well inside 64 bits); binary fields
fall back to a generic pure-Python path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cyclegraph import ToricSet
from .errors import BudgetExceeded
from .gf import Field
from .hilbert import HilbertTable
from .poly import Monomial, grlex_key

DEFAULT_MATRIX_BUDGET = 1 << 26
DEFAULT_DIST_BUDGET = 1 << 22
_CHUNK = 4096


def monomial_basis(nvars: int, q: int, d: int,
                   max_exponent: int | None = None) -> list[Monomial]:
    """Monomials with exponents <= q-2 and total degree <= d, sorted
    in decreasing graded-lex order."""
    cap = q - 2 if max_exponent is None else max_exponent
    cap = min(cap, d)
    monos = [m for m in itertools.product(range(cap + 1), repeat=nvars)
             if sum(m) <= d]
    monos.sort(key=grlex_key, reverse=True)
    return monos


@dataclass
class EvaluationMatrix:
    """Rows = basis monomials (decreasing graded-lex), columns = points
    of X* in canonical order, entries = monomial values."""

    field: Field
    monomials: tuple[Monomial, ...]
    points: tuple[tuple[int, ...], ...]
    entries: "np.ndarray | list[list[int]]"

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.monomials), len(self.points)


def _use_numpy(field: Field) -> bool:
    return field.p != 2


def build_evaluation_matrix(X: ToricSet, d: int,
                            max_entries: int = DEFAULT_MATRIX_BUDGET,
                            max_exponent: int | None = None
                            ) -> EvaluationMatrix:
    field = X.field
    q = field.q
    monos = monomial_basis(X.nvars, q, d, max_exponent)
    npoints = len(X)
    if len(monos) * npoints > max_entries:
        raise BudgetExceeded(
            f"evaluation matrix needs {len(monos) * npoints} entries, "
            f"budget is {max_entries}")
    if _use_numpy(field):
        pts = np.asarray(X.points, dtype=np.int64)
        maxe = max((max(m) for m in monos), default=0)
        pows = []
        for v in range(X.nvars):
            tab = np.empty((maxe + 1, npoints), dtype=np.int64)
            tab[0] = 1
            for e in range(1, maxe + 1):
                tab[e] = tab[e - 1] * pts[:, v] % q
            pows.append(tab)
        rows = np.empty((len(monos), npoints), dtype=np.int64)
        for r, mono in enumerate(monos):
            acc = np.ones(npoints, dtype=np.int64)
            for v, e in enumerate(mono):
                if e:
                    acc = acc * pows[v][e] % q
            rows[r] = acc
        entries: "np.ndarray | list[list[int]]" = rows
    else:
        entries = []
        for mono in monos:
            row = []
            for pt in X.points:
                val = 1
                for x, e in zip(pt, mono):
                    if e:
                        val = field.mul(val, field.pow(x, e))
                row.append(val)
            entries.append(row)
    return EvaluationMatrix(field, tuple(monos), X.points, entries)


# -- row reduction -----------------------------------------------------------

def _rref_numpy(rows: np.ndarray, p: int) -> tuple[list[int], np.ndarray]:
    """Row-reduce mod p.  Returns (pivot columns, nonzero reduced rows)."""
    a = rows % p
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), p - 2, p) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return pivots, a[:r]


def _rref_generic(rows, field: Field) -> tuple[list[int], list[list[int]]]:
    a = [list(row) for row in rows]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(v, inv) for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [field.sub(v, field.mul(f, w))
                        for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return pivots, a[:r]


def _generator_matrix(M: EvaluationMatrix):
    """(dimension, row-reduced basis) of the matrix's row space."""
    if _use_numpy(M.field):
        pivots, basis = _rref_numpy(np.asarray(M.entries), M.field.q)
    else:
        pivots, basis = _rref_generic(M.entries, M.field)
    return len(pivots), basis


def matrix_rank(M: EvaluationMatrix) -> int:
    return _generator_matrix(M)[0]


def code_dimension(X: ToricSet, d: int,
                   max_entries: int = DEFAULT_MATRIX_BUDGET) -> int:
    """dim of the degree-d evaluation code = H(d), the rank oracle."""
    return matrix_rank(build_evaluation_matrix(X, d, max_entries))


def rank_table(X: ToricSet, dmax: int,
               max_entries: int = DEFAULT_MATRIX_BUDGET) -> HilbertTable:
    """H(0)..H(dmax) by incremental rank: rows are added in increasing
    degree order and reduced against the running basis, so one pass
    yields every prefix rank."""
    field = X.field
    M = build_evaluation_matrix(X, dmax, max_entries)
    order = sorted(range(len(M.monomials)),
                   key=lambda i: sum(M.monomials[i]))
    values = []
    if _use_numpy(field):
        p = field.q
        rows = np.asarray(M.entries)
        basis: list[np.ndarray] = []
        pivots: list[int] = []
        at = 0
        for d in range(dmax + 1):
            while at < len(order) and sum(M.monomials[order[at]]) <= d:
                row = rows[order[at]].copy()
                at += 1
                for c, b in zip(pivots, basis):
                    if row[c]:
                        row = (row - row[c] * b) % p
                nz = np.nonzero(row)[0]
                if nz.size:
                    c0 = int(nz[0])
                    row = row * pow(int(row[c0]), p - 2, p) % p
                    pivots.append(c0)
                    basis.append(row)
            values.append(len(basis))
    else:
        basis2: list[list[int]] = []
        pivots2: list[int] = []
        at = 0
        for d in range(dmax + 1):
            while at < len(order) and sum(M.monomials[order[at]]) <= d:
                row = list(M.entries[order[at]])
                at += 1
                for c, b in zip(pivots2, basis2):
                    if row[c] != 0:
                        f = row[c]
                        row = [field.sub(v, field.mul(f, w))
                               for v, w in zip(row, b)]
                c0 = next((j for j, v in enumerate(row) if v != 0), None)
                if c0 is not None:
                    inv = field.inv(row[c0])
                    row = [field.mul(v, inv) for v in row]
                    pivots2.append(c0)
                    basis2.append(row)
            values.append(len(basis2))
    return HilbertTable(tuple(values), "rank_oracle")


# -- code parameters ----------------------------------------------------------

@dataclass(frozen=True)
class CodeParams:
    """Parameters of one degree-d evaluation code.  Exactly one of
    min_distance / min_distance_bracket is set; singleton_slack
    (n - dimension + 1 - distance) accompanies an exact distance."""

    q: int
    d: int
    n: int
    dimension: int
    min_distance: int | None
    min_distance_bracket: tuple[int, int] | None
    singleton_slack: int | None


def _exact_distance_numpy(basis: np.ndarray, q: int) -> int:
    dim, n = basis.shape
    best = n
    messages = itertools.product(range(q), repeat=dim)
    next(messages)  # drop the zero message
    while True:
        chunk = list(itertools.islice(messages, _CHUNK))
        if not chunk:
            break
        words = np.asarray(chunk, dtype=np.int64) @ basis % q
        w = int(np.count_nonzero(words, axis=1).min())
        if w < best:
            best = w
            if best == 1:
                break
    return best


def _exact_distance_generic(basis, field: Field) -> int:
    dim = len(basis)
    n = len(basis[0])
    best = n
    for msg in itertools.product(range(field.q), repeat=dim):
        if not any(msg):
            continue
        weight = 0
        for j in range(n):
            acc = 0
            for i in range(dim):
                if msg[i]:
                    acc = field.add(acc, field.mul(msg[i], basis[i][j]))
            if acc:
                weight += 1
                if weight >= best:
                    break
        if weight < best:
            best = weight
            if best == 1:
                break
    return best


def min_distance(X: ToricSet, d: int,
                 budget: int = DEFAULT_DIST_BUDGET,
                 max_entries: int = DEFAULT_MATRIX_BUDGET) -> int | None:
    """Exact minimum Hamming weight over all nonzero codewords, or
    None when q^dimension exceeds the enumeration budget."""
    M = build_evaluation_matrix(X, d, max_entries)
    dim, basis = _generator_matrix(M)
    return _exact_distance(basis, dim, X.field, budget)


def _exact_distance(basis, dim: int, field: Field,
                    budget: int) -> int | None:
    if dim == 0:
        raise ValueError("zero-dimensional code has no minimum distance")
    if field.q ** dim > budget:
        return None
    if _use_numpy(field):
        return _exact_distance_numpy(np.asarray(basis), field.q)
    return _exact_distance_generic(basis, field)


def code_params(X: ToricSet, d: int,
                dist_budget: int = DEFAULT_DIST_BUDGET,
                max_entries: int = DEFAULT_MATRIX_BUDGET) -> CodeParams:
    """Length, dimension and (budget permitting) exact min distance."""
    M = build_evaluation_matrix(X, d, max_entries)
    dim, basis = _generator_matrix(M)
    n = len(X)
    dist = _exact_distance(basis, dim, X.field, dist_budget)
    if dist is None:
        return CodeParams(X.field.q, d, n, dim, None, (1, n - dim + 1), None)
    return CodeParams(X.field.q, d, n, dim, dist, None, n - dim + 1 - dist)


def singleton_check(params: CodeParams) -> bool:
    """distance <= n - dimension + 1; requires an exact distance."""
    if params.min_distance is None:
        raise ValueError("singleton check needs an exact minimum distance")
    return params.min_distance <= params.n - params.dimension + 1
