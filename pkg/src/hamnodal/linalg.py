"""Exact Gaussian elimination over the rationals for small dense systems."""
from fractions import Fraction


def _echelon(rows):
    """Reduced row echelon form in place; returns pivot columns."""
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                m = rows[i][c]
                rows[i] = [a - m * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(vectors):
    """Rank of a list of equal-length rational vectors."""
    rows = [[Fraction(v) for v in vec] for vec in vectors]
    return len(_echelon(rows)) if rows else 0


def solve_combination(vectors, target):
    """Coefficients c with sum_j c_j * vectors[j] == target, or None if target is not in the span.

    Free variables are set to zero, so the answer is unique when the vectors
    are independent.
    """
    m = len(vectors)
    # Columns are the vectors; augmented with the target.
    rows = [[Fraction(vec[i]) for vec in vectors] + [Fraction(target[i])] for i in range(len(target))]
    pivots = _echelon(rows)
    if m in pivots:
        return None
    coeffs = [Fraction(0)] * m
    for r, c in enumerate(pivots):
        coeffs[c] = rows[r][m]
    return coeffs
