"""Exact Gaussian elimination over the rationals.

Rows are held sparsely as ``{column: Fraction}`` dicts. The pivot for each
column is the candidate row with a nonzero entry there and the fewest stored
entries (first such row on ties), which keeps 0/1 basis matrices free of
fill-in. No floating point is used anywhere.
"""

from fractions import Fraction

from .errors import DimensionError


class SingularMatrixError(ArithmeticError):
    pass


def _sparse_rows(matrix):
    rows = []
    width = None
    for row in matrix:
        row = list(row)
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise DimensionError("ragged matrix")
        rows.append({j: Fraction(v) for j, v in enumerate(row) if v != 0})
    return rows, (width or 0)


def _square(matrix):
    rows, width = _sparse_rows(matrix)
    if len(rows) != width:
        raise DimensionError(f"expected a square matrix, got {len(rows)}x{width}")
    return rows


def _pick_pivot(rows, col, start):
    best = None
    for i in range(start, len(rows)):
        if col in rows[i] and (best is None or len(rows[i]) < len(rows[best])):
            best = i
    return best


def _axpy(target, factor, source):
    # target -= factor * source, dropping entries that cancel
    for j, v in source.items():
        new = target.get(j, 0) - factor * v
        if new:
            target[j] = new
        else:
            target.pop(j, None)


def _eliminate(rows, n, *, jordan, on_swap=None):
    """Row-reduce the first ``n`` columns in place. Returns the pivot values."""
    pivots = []
    for col in range(n):
        p = _pick_pivot(rows, col, col)
        if p is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        if p != col:
            rows[col], rows[p] = rows[p], rows[col]
            if on_swap is not None:
                on_swap()
        prow = rows[col]
        pv = prow[col]
        pivots.append(pv)
        if jordan:
            if pv != 1:
                for j in prow:
                    prow[j] /= pv
            targets = range(len(rows))
        else:
            targets = range(col + 1, len(rows))
        for i in targets:
            if i == col:
                continue
            f = rows[i].get(col)
            if f is None:
                continue
            if not jordan:
                f = f / pv
            _axpy(rows[i], f, prow)
    return pivots


def determinant(matrix):
    rows = _square(matrix)
    sign = [1]

    def flip():
        sign[0] = -sign[0]

    try:
        pivots = _eliminate(rows, len(rows), jordan=False, on_swap=flip)
    except SingularMatrixError:
        return Fraction(0)
    det = Fraction(sign[0])
    for p in pivots:
        det *= p
    return det


def solve(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly by elimination on the augmented system."""
    rows = _square(matrix)
    n = len(rows)
    rhs = list(rhs)
    if len(rhs) != n:
        raise DimensionError(f"right-hand side has {len(rhs)} entries, expected {n}")
    for row, b in zip(rows, rhs):
        b = Fraction(b)
        if b:
            row[n] = b
    _eliminate(rows, n, jordan=True)
    return [row.get(n, Fraction(0)) for row in rows]


def inverse(matrix):
    """Gauss-Jordan inverse as a dense list of Fraction rows."""
    rows = _square(matrix)
    n = len(rows)
    for i, row in enumerate(rows):
        row[n + i] = Fraction(1)
    _eliminate(rows, n, jordan=True)
    return [[row.get(n + j, Fraction(0)) for j in range(n)] for row in rows]


def matvec(matrix, vector):
    return [sum((Fraction(a) * b for a, b in zip(row, vector) if a), Fraction(0)) for row in matrix]
