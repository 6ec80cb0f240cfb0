"""Exact feasibility of ``A x = b, x >= 0`` by phase-one simplex.

Everything runs over :class:`fractions.Fraction`.  Bland's smallest-index
rule makes the method deterministic and guarantees termination; a
presolve pass removes duplicate and zero rows (detecting trivially
inconsistent systems along the way), which keeps the tableau small for
the highly redundant systems produced by correlation decompositions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


def _presolve(
    columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]
) -> Optional[list[tuple[tuple[Fraction, ...], Fraction]]]:
    """Deduplicate rows; None means the system is already inconsistent."""
    seen: dict[tuple[Fraction, ...], Fraction] = {}
    order: list[tuple[Fraction, ...]] = []
    for i, b in enumerate(target):
        coeffs = tuple(column[i] for column in columns)
        if all(v == 0 for v in coeffs):
            if b != 0:
                return None
            continue
        if coeffs in seen:
            if seen[coeffs] != b:
                return None
            continue
        seen[coeffs] = b
        order.append(coeffs)
    return [(coeffs, seen[coeffs]) for coeffs in order]


def find_nonnegative_combination(
    columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]
) -> Optional[list[Fraction]]:
    """Return ``x >= 0`` with ``sum x[j] * columns[j] == target``, or None.

    ``columns`` are equal-length exact vectors.  The returned solution is
    deterministic (Bland's rule) and verified against the full system
    before being handed back.
    """
    if not columns:
        return None if any(v != 0 for v in target) else []
    n = len(columns)
    rows = _presolve(columns, target)
    if rows is None:
        return None
    if not rows:
        return [ZERO] * n

    # Tableau rows: coefficients of the original variables plus the right
    # hand side.  The starting basis is one artificial variable per row;
    # artificial columns are never explicit because they never re-enter.
    tableau = []
    basis: list[int] = []  # original j, or n + i for the artificial of row i
    for i, (coeffs, b) in enumerate(rows):
        if b < 0:
            coeffs = tuple(-v for v in coeffs)
            b = -b
        tableau.append(list(coeffs) + [b])
        basis.append(n + i)
    m = len(tableau)
    width = n + 1

    # Phase-one objective: minimize the sum of artificials.  The reduced
    # cost row starts as minus the column sums.
    objective = [ZERO] * width
    for row in tableau:
        for j in range(width):
            objective[j] -= row[j]

    while True:
        entering = -1
        for j in range(n):
            if objective[j] < 0:
                entering = j
                break
        if entering < 0:
            break
        leaving = -1
        best_ratio = None
        for i in range(m):
            pivot = tableau[i][entering]
            if pivot > 0:
                ratio = tableau[i][-1] / pivot
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving < 0:
            raise AssertionError("phase-one objective cannot be unbounded")
        pivot_row = tableau[leaving]
        pivot = pivot_row[entering]
        if pivot != 1:
            for j in range(width):
                pivot_row[j] /= pivot
        for row in tableau:
            if row is pivot_row:
                continue
            factor = row[entering]
            if factor != 0:
                for j in range(width):
                    row[j] -= factor * pivot_row[j]
        factor = objective[entering]
        if factor != 0:
            for j in range(width):
                objective[j] -= factor * pivot_row[j]
        basis[leaving] = entering

    residual = sum((tableau[i][-1] for i in range(m) if basis[i] >= n), ZERO)
    if residual != 0:
        return None
    solution = [ZERO] * n
    for i in range(m):
        if basis[i] < n:
            solution[basis[i]] = tableau[i][-1]
    for i, value in enumerate(target):
        acc = ZERO
        for j in range(n):
            if solution[j] != 0:
                acc += solution[j] * columns[j][i]
        if acc != value:
            raise AssertionError("simplex returned a vector that fails verification")
    return solution
