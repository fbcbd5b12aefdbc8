"""Exact integer and rational linear algebra.

All arithmetic uses Python's arbitrary-precision ints and
``fractions.Fraction``; no floating point anywhere. Matrices are tuples of
row tuples, vectors are flat tuples, so everything is hashable and results
can be memoized per matrix. Vectors are row vectors throughout: products
are taken as ``v @ m``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import SingularMatrixError

IntVector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]
RationalVector = tuple[Fraction, ...]
RationalMatrix = tuple[tuple[Fraction, ...], ...]


# ---------------------------------------------------------------------------
# vector helpers (containment order, weight, row-vector products)

def vec(entries: Iterable[int]) -> IntVector:
    return tuple(int(x) for x in entries)


def zeros(n: int) -> IntVector:
    return (0,) * n


def ones(n: int) -> IntVector:
    return (1,) * n


def vec_add(a: Sequence[int], b: Sequence[int]) -> IntVector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Sequence[int], b: Sequence[int]) -> IntVector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(k: int, a: Sequence[int]) -> IntVector:
    return tuple(k * x for x in a)


def weight(a: Sequence[int]) -> int:
    """Sum of all entries."""
    return sum(a)


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Containment order: every entry of ``a`` is >= the entry of ``b``."""
    return all(x >= y for x, y in zip(a, b, strict=True))


def strictly_dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Containment order with at least one strict coordinate."""
    return dominates(a, b) and tuple(a) != tuple(b)


def support(a: Sequence[int]) -> frozenset[int]:
    """1-based indices of the non-zero entries."""
    return frozenset(i + 1 for i, x in enumerate(a) if x != 0)


def row_times_matrix(v: Sequence, m: Sequence[Sequence]) -> tuple:
    """Row vector times matrix, exact. Entries may be int or Fraction."""
    n = len(v)
    if n != len(m):
        raise ValueError(f"dimension mismatch: vector {n}, matrix {len(m)} rows")
    cols = len(m[0]) if m else 0
    return tuple(sum(v[i] * m[i][j] for i in range(n)) for j in range(cols))


def freeze_matrix(rows: Iterable[Sequence[int]]) -> IntMatrix:
    """Normalize any nested sequence of ints into the canonical tuple form."""
    out = tuple(tuple(int(x) for x in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("ragged matrix")
    return out


# ---------------------------------------------------------------------------
# determinant, inverse, solves

def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Pivoting is deterministic: the first non-zero pivot by row order.
    """
    a = [list(row) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(m: Sequence[Sequence[int]]) -> RationalMatrix:
    """Exact inverse as a matrix of Fractions.

    Raises SingularMatrixError when no inverse exists. Results are cached
    per matrix, so repeated solves against the same Laplacian are cheap.
    """
    return _inverse_cached(freeze_matrix(m))


@lru_cache(maxsize=None)
def _inverse_cached(m: IntMatrix) -> RationalMatrix:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse needs a square matrix")
    a = [[Fraction(x) for x in row] for row in m]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        pivot = a[col][col]
        a[col] = [x / pivot for x in a[col]]
        inv[col] = [x / pivot for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv)


def solve_left(v: Sequence, m: Sequence[Sequence[int]]) -> RationalVector:
    """Solve ``x @ m = v`` exactly for the row vector x."""
    x = row_times_matrix(tuple(Fraction(e) for e in v), inverse(m))
    return tuple(Fraction(e) for e in x)


def is_integral(v: Sequence) -> bool:
    """True iff every entry is an integer (denominator 1)."""
    return all(Fraction(x).denominator == 1 for x in v)


def rank_and_kernel(m: Sequence[Sequence[int]]) -> tuple[int, list[IntVector]]:
    """Exact rank and a basis of the right kernel.

    Kernel basis vectors are scaled to primitive integer vectors whose first
    non-zero entry is positive, so the output is deterministic.
    """
    rows = [list(map(Fraction, row)) for row in m]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivot_cols: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pivot = rows[r][c]
        rows[r] = [x / pivot for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == n_rows:
            break
    rank = len(pivot_cols)
    free_cols = [c for c in range(n_cols) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        v = [Fraction(0)] * n_cols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivot_cols):
            v[pc] = -rows[i][free]
        basis.append(_primitive(v))
    return rank, basis


def _primitive(v: list[Fraction]) -> IntVector:
    from math import gcd, lcm

    denom = lcm(*(x.denominator for x in v)) if v else 1
    ints = [int(x * denom) for x in v]
    g = gcd(*ints) if any(ints) else 1
    ints = [x // g for x in ints]
    first = next((x for x in ints if x != 0), 1)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def rational_to_str(x) -> str:
    """Serialize an exact rational as "p/q", or "p" when q == 1."""
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
