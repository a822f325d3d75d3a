"""
Exact Gaussian elimination over the rationals.

Pivot rule: the first row (at or below the current pivot row) with a nonzero
entry in the column. No magnitude pivoting, so results are deterministic.
Pivot columns are reported 1-based, like vertex labels.
"""

from fractions import Fraction

from .rational import QMatrix, QVector


def _reduce(rows: list[list[Fraction]], cols: int) -> list[int]:
    """In-place RREF of the first `cols` columns. Returns 0-based pivot columns."""
    pivots = []
    pivot_row = 0
    height = len(rows)
    for col in range(cols):
        if pivot_row >= height:
            break

        # Step 1: first row with a nonzero entry
        source = next((r for r in range(pivot_row, height) if rows[r][col] != 0), None)
        if source is None:
            continue
        rows[pivot_row], rows[source] = rows[source], rows[pivot_row]

        # Step 2: normalize the pivot
        lead = rows[pivot_row][col]
        if lead != 1:
            rows[pivot_row] = [value / lead for value in rows[pivot_row]]

        # Step 3: clear the column everywhere else
        pivot = rows[pivot_row]
        for r in range(height):
            if r == pivot_row:
                continue
            factor = rows[r][col]
            if factor != 0:
                rows[r] = [a - factor * b for a, b in zip(rows[r], pivot)]

        pivots.append(col)
        pivot_row += 1
    return pivots


def _require_nonempty(matrix: QMatrix) -> None:
    if matrix.rows == 0 or matrix.cols == 0:
        raise ValueError(f"Matrix must be nonempty, got shape {matrix.shape}")


def rref(matrix: QMatrix) -> tuple[QMatrix, tuple[int, ...]]:
    """Reduced row echelon form and its (1-based, increasing) pivot columns."""
    _require_nonempty(matrix)
    rows = matrix.to_rows()
    pivots = _reduce(rows, matrix.cols)
    return QMatrix.from_rows(rows), tuple(p + 1 for p in pivots)


def nullspace_basis(matrix: QMatrix) -> list[QVector]:
    """
    Canonical free-variable basis of N(M).

    One vector per free column, free columns in increasing order; the free
    variable is set to 1, the other free variables to 0.
    """
    _require_nonempty(matrix)
    rows = matrix.to_rows()
    pivots = _reduce(rows, matrix.cols)
    pivot_set = set(pivots)

    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * matrix.cols
        vector[free] = Fraction(1)
        for r, p in enumerate(pivots):
            vector[p] = -rows[r][free]
        basis.append(QVector(tuple(vector)))
    return basis


def rank_nullity(matrix: QMatrix) -> tuple[int, int]:
    _require_nonempty(matrix)
    rows = matrix.to_rows()
    rank = len(_reduce(rows, matrix.cols))
    return rank, matrix.cols - rank


def rank(matrix: QMatrix) -> int:
    return rank_nullity(matrix)[0]


def solve(matrix: QMatrix, rhs: QVector) -> QVector | None:
    """
    Particular solution of M y = b with every free variable at 0.

    Returns None when the system is inconsistent.
    """
    _require_nonempty(matrix)
    if len(rhs) != matrix.rows:
        raise ValueError(f"Right-hand side has length {len(rhs)}, expected {matrix.rows}")

    augmented = [row + [rhs[i]] for i, row in enumerate(matrix.to_rows())]
    pivots = _reduce(augmented, matrix.cols + 1)
    if pivots and pivots[-1] == matrix.cols:
        return None

    solution = [Fraction(0)] * matrix.cols
    for r, p in enumerate(pivots):
        solution[p] = augmented[r][matrix.cols]
    return QVector(tuple(solution))


def inverse(matrix: QMatrix) -> QMatrix | None:
    """Exact inverse, or None when M is singular."""
    _require_nonempty(matrix)
    if not matrix.is_square():
        raise ValueError(f"Inverse needs a square matrix, got shape {matrix.shape}")

    n = matrix.rows
    identity = QMatrix.identity(n).to_rows()
    augmented = [row + identity[i] for i, row in enumerate(matrix.to_rows())]
    pivots = _reduce(augmented, n)
    if len(pivots) < n:
        return None
    return QMatrix.from_rows([row[n:] for row in augmented])


def determinant(matrix: QMatrix) -> Fraction:
    """Fraction-based elimination with sign tracking."""
    _require_nonempty(matrix)
    if not matrix.is_square():
        raise ValueError(f"Determinant needs a square matrix, got shape {matrix.shape}")

    rows = matrix.to_rows()
    n = matrix.rows
    det = Fraction(1)
    for col in range(n):
        source = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if source is None:
            return Fraction(0)
        if source != col:
            rows[col], rows[source] = rows[source], rows[col]
            det = -det
        lead = rows[col][col]
        det *= lead
        for r in range(col + 1, n):
            factor = rows[r][col] / lead
            if factor != 0:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return det


def _minor(matrix: QMatrix, skip_row: int, skip_col: int) -> QMatrix:
    return QMatrix.from_rows([
        [matrix.entry(i, j) for j in range(matrix.cols) if j != skip_col]
        for i in range(matrix.rows)
        if i != skip_row
    ])


def adjugate(matrix: QMatrix) -> QMatrix:
    """Classical adjugate via cofactors; defined for singular matrices too."""
    _require_nonempty(matrix)
    if not matrix.is_square():
        raise ValueError(f"Adjugate needs a square matrix, got shape {matrix.shape}")

    n = matrix.rows
    if n == 1:
        return QMatrix.identity(1)
    # adj(M)[i][j] = (-1)^(i+j) det(M with row j and column i removed)
    return QMatrix.from_rows([
        [(-1) ** (i + j) * determinant(_minor(matrix, j, i)) for j in range(n)]
        for i in range(n)
    ])
