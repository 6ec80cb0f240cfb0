"""Composition and membership predicates for correlation classes.

Correlations compose like conditional probabilities,

    (q . p)(z_a, z_b | x_a, x_b)
        = sum over (y_a, y_b) of q(z_a, z_b | y_a, y_b) p(y_a, y_b | x_a, x_b),

which is exactly the matrix product of the two column-stochastic
matrices.  The predicates here decide the standard classes:
synchronicity, nonsignaling, symmetry, determinism, and classicality,
the last by an exact linear program over all shared deterministic
strategies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .constructors import ClassicalModel, classical_model, enumerate_functions
from .corrcore import ONE, ZERO, Correlation, DeterministicPair
from .errors import NotSynchronousError, SetMismatchError
from .simplex import find_nonnegative_combination


def compose(q: Correlation, p: Correlation) -> Correlation:
    """The correlation ``q . p``; requires ``q`` to consume ``p``'s outputs."""
    if q.input_set != p.output_set:
        raise SetMismatchError(
            f"cannot compose: outer input set {q.input_set.labels!r} differs from "
            f"inner output set {p.output_set.labels!r}"
        )
    rows = q.row_count
    inner = q.column_count
    cols = p.column_count
    matrix = []
    for r in range(rows):
        q_row = q.matrix[r]
        out_row = []
        for c in range(cols):
            acc = ZERO
            for k in range(inner):
                qv = q_row[k]
                if qv != 0:
                    pv = p.matrix[k][c]
                    if pv != 0:
                        acc += qv * pv
            out_row.append(acc)
        matrix.append(tuple(out_row))
    return Correlation(p.input_set, q.output_set, tuple(matrix))


def is_synchronous(p: Correlation) -> bool:
    """Equal inputs force equal outputs."""
    ny = p.output_set.size
    for x in range(p.input_set.size):
        c = p.input_set.pair_index(x, x)
        for ya in range(ny):
            for yb in range(ny):
                if ya != yb and p.matrix[p.output_set.pair_index(ya, yb)][c] != 0:
                    return False
    return True


def is_nonsignaling(p: Correlation) -> bool:
    """Each player's marginal is independent of the other player's input."""
    nx = p.input_set.size
    ny = p.output_set.size

    def a_marginal(ya: int, xa: int, xb: int) -> Fraction:
        c = p.input_set.pair_index(xa, xb)
        return sum((p.matrix[p.output_set.pair_index(ya, yb)][c] for yb in range(ny)), ZERO)

    def b_marginal(yb: int, xa: int, xb: int) -> Fraction:
        c = p.input_set.pair_index(xa, xb)
        return sum((p.matrix[p.output_set.pair_index(ya, yb)][c] for ya in range(ny)), ZERO)

    for ya in range(ny):
        for xa in range(nx):
            reference = a_marginal(ya, xa, 0)
            for xb in range(1, nx):
                if a_marginal(ya, xa, xb) != reference:
                    return False
    for yb in range(ny):
        for xb in range(nx):
            reference = b_marginal(yb, 0, xb)
            for xa in range(1, nx):
                if b_marginal(yb, xa, xb) != reference:
                    return False
    return True


def is_symmetric(p: Correlation) -> bool:
    """Swapping both players' inputs and outputs leaves ``p`` unchanged."""
    for xa, xb in p.input_set.pairs():
        c = p.input_set.pair_index(xa, xb)
        c_swapped = p.input_set.pair_index(xb, xa)
        for ya, yb in p.output_set.pairs():
            r = p.output_set.pair_index(ya, yb)
            r_swapped = p.output_set.pair_index(yb, ya)
            if p.matrix[r][c] != p.matrix[r_swapped][c_swapped]:
                return False
    return True


def is_deterministic(p: Correlation) -> Optional[DeterministicPair]:
    """The answer tables when every column is a point mass, else None."""
    nx = p.input_set.size
    f_a = [[0] * nx for _ in range(nx)]
    f_b = [[0] * nx for _ in range(nx)]
    for i, j in p.input_set.pairs():
        c = p.input_set.pair_index(i, j)
        hit = None
        for r in range(p.row_count):
            value = p.matrix[r][c]
            if value != 0:
                if value != ONE or hit is not None:
                    return None
                hit = r
        ya, yb = p.output_set.pair_of(hit)
        f_a[i][j] = ya
        f_b[i][j] = yb
    return DeterministicPair(
        p.input_set,
        p.output_set,
        tuple(tuple(row) for row in f_a),
        tuple(tuple(row) for row in f_b),
    )


def deterministic_function(p: Correlation) -> Optional[tuple[int, ...]]:
    """Output indices of a shared one-variable strategy, if ``p`` is one.

    Returns ``f`` with ``p`` equal to both players applying ``f`` to their
    own input, or None.
    """
    pair = is_deterministic(p)
    if pair is None:
        return None
    nx = p.input_set.size
    f = [pair.f_a[i][0] for i in range(nx)]
    for i in range(nx):
        for j in range(nx):
            if pair.f_a[i][j] != f[i] or pair.f_b[i][j] != f[j]:
                return None
    return tuple(f)


def classical_decomposition(p: Correlation) -> Optional[ClassicalModel]:
    """An exact measure on shared strategies reproducing ``p``, or None.

    Solves the feasibility problem over all ``|Y| ** |X|`` deterministic
    strategy columns with an exact phase-one simplex.  ``p`` must be
    synchronous; asymmetric or otherwise non-classical inputs simply yield
    None.  The caller can re-expand the returned model to confirm it.
    """
    if not is_synchronous(p):
        raise NotSynchronousError("classical decompositions exist only for synchronous inputs")
    nx = p.input_set.size
    ny = p.output_set.size
    functions = list(enumerate_functions(nx, ny))
    length = p.row_count * p.column_count
    columns = []
    for f in functions:
        column = [ZERO] * length
        for i, j in p.input_set.pairs():
            r = p.output_set.pair_index(f[i], f[j])
            c = p.input_set.pair_index(i, j)
            column[r * p.column_count + c] = ONE
        columns.append(column)
    target = [
        p.matrix[r][c] for r in range(p.row_count) for c in range(p.column_count)
    ]
    solution = find_nonnegative_combination(columns, target)
    if solution is None:
        return None
    mu = {f: value for f, value in zip(functions, solution) if value != 0}
    return classical_model(p.input_set, p.output_set, mu)


@dataclass(frozen=True)
class ClassLabel:
    """Bundle of membership flags for one correlation.

    ``deterministic`` carries the answer tables when defined, and
    ``classical`` carries a reproducing measure when one was found.
    ``classical_decided`` records whether the linear program ran at all
    (it is skipped for asynchronous inputs and on request).
    """

    synchronous: bool
    nonsignaling: bool
    symmetric: bool
    deterministic: Optional[DeterministicPair]
    classical: Optional[ClassicalModel]
    classical_decided: bool


def classify(p: Correlation, decide_classical: bool = True) -> ClassLabel:
    """Evaluate every membership predicate on ``p``."""
    synchronous = is_synchronous(p)
    nonsignaling = is_nonsignaling(p)
    symmetric = is_symmetric(p)
    deterministic = is_deterministic(p)
    classical = None
    decided = False
    if decide_classical and synchronous:
        classical = classical_decomposition(p)
        decided = True
    return ClassLabel(synchronous, nonsignaling, symmetric, deterministic, classical, decided)
