"""Exact data model for two-player correlations between finite sets.

A correlation from an input set ``X`` to an output set ``Y`` describes a
cooperative two-player game: each player receives a symbol of ``X`` and
answers with a symbol of ``Y``, and ``p(y_a, y_b | x_a, x_b)`` is the joint
conditional distribution of the answers.  It is stored as a
``|Y|^2 x |X|^2`` column-stochastic matrix of exact rationals with the two
players' symbols paired A-major:

    row    = index(y_a) * |Y| + index(y_b)
    column = index(x_a) * |X| + index(x_b)

Every value in this module is immutable, every entry is a
:class:`fractions.Fraction`, equality is bit-exact, and the JSON
serialization round-trips losslessly including label order.  Floating
point never appears.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .errors import (
    ColumnSumNotOneError,
    NegativeEntryError,
    ParseError,
    ShapeMismatchError,
    UnknownLabelError,
    WeightsNotNormalizedError,
)

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"n"``/``"n/d"`` string to a Fraction.

    Floats are rejected on purpose: they would silently break exactness.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"cannot interpret {value!r} as an exact rational")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    """Canonical text form in lowest terms: ``"n"`` or ``"n/d"``."""
    return str(value)


@dataclass(frozen=True)
class FiniteSet:
    """An ordered finite set of distinct string labels.

    The position of a label is its index.  Two sets are equal only when
    their label sequences are identical, order included.
    """

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.labels, tuple):
            object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) == 0:
            raise ValueError("a finite set needs at least one label")
        for label in self.labels:
            if not isinstance(label, str):
                raise ValueError(f"labels must be strings, got {label!r}")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"labels must be pairwise distinct: {self.labels!r}")

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def pair_count(self) -> int:
        return len(self.labels) ** 2

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabelError(label, self.labels) from None

    def pair_index(self, i: int, j: int) -> int:
        """Flat index of the ordered index pair ``(i, j)``."""
        return i * len(self.labels) + j

    def pair_of(self, k: int) -> tuple[int, int]:
        """Inverse of :meth:`pair_index`."""
        n = len(self.labels)
        return divmod(k, n)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All ordered index pairs, in flat-index order."""
        n = len(self.labels)
        for i in range(n):
            for j in range(n):
                yield i, j


def finite_set(labels: Sequence[str]) -> FiniteSet:
    return FiniteSet(tuple(labels))


@dataclass(frozen=True)
class Correlation:
    """A column-stochastic matrix of exact rationals over squared index sets.

    Construction validates the shape, nonnegativity of every entry and that
    each column sums to exactly one, so any held instance is a genuine
    correlation.  Prefer :func:`make_correlation` when starting from raw
    nested sequences.
    """

    input_set: FiniteSet
    output_set: FiniteSet
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = self.output_set.pair_count
        cols = self.input_set.pair_count
        if len(self.matrix) != rows:
            raise ShapeMismatchError(
                f"expected {rows} rows for output set of size {self.output_set.size}, "
                f"got {len(self.matrix)}"
            )
        for r, row in enumerate(self.matrix):
            if len(row) != cols:
                raise ShapeMismatchError(
                    f"expected {cols} columns for input set of size {self.input_set.size}, "
                    f"row {r} has {len(row)}"
                )
        for c in range(cols):
            total = ZERO
            for r in range(rows):
                value = self.matrix[r][c]
                if not isinstance(value, Fraction):
                    raise TypeError(f"entry at ({r}, {c}) is {value!r}, not a Fraction")
                if value < 0:
                    raise NegativeEntryError(r, c, value)
                total += value
            if total != ONE:
                raise ColumnSumNotOneError(c, total)

    def entry(self, y_a: str, y_b: str, x_a: str, x_b: str) -> Fraction:
        """``p(y_a, y_b | x_a, x_b)`` looked up by labels."""
        r = self.output_set.pair_index(self.output_set.index(y_a), self.output_set.index(y_b))
        c = self.input_set.pair_index(self.input_set.index(x_a), self.input_set.index(x_b))
        return self.matrix[r][c]

    def entry_by_index(self, ya: int, yb: int, xa: int, xb: int) -> Fraction:
        return self.matrix[self.output_set.pair_index(ya, yb)][self.input_set.pair_index(xa, xb)]

    def column(self, c: int) -> tuple[Fraction, ...]:
        return tuple(row[c] for row in self.matrix)

    @property
    def row_count(self) -> int:
        return self.output_set.pair_count

    @property
    def column_count(self) -> int:
        return self.input_set.pair_count


def make_correlation(input_set: FiniteSet, output_set: FiniteSet, entries) -> Correlation:
    """Build a :class:`Correlation` from nested entry values.

    ``entries`` is a sequence of ``|Y|^2`` rows of ``|X|^2`` values, each an
    int, Fraction or rational string.  Raises :class:`ShapeMismatchError`,
    :class:`NegativeEntryError` or :class:`ColumnSumNotOneError` when the
    data is not a correlation.
    """
    rows = output_set.pair_count
    cols = input_set.pair_count
    entries = list(entries)
    if len(entries) != rows or any(len(list(row)) != cols for row in entries):
        raise ShapeMismatchError(
            f"need a {rows} x {cols} matrix for sets of sizes "
            f"{output_set.size} and {input_set.size}"
        )
    matrix = tuple(tuple(as_rational(v) for v in row) for row in entries)
    return Correlation(input_set, output_set, matrix)


def identity(base_set: FiniteSet) -> Correlation:
    """The identity correlation on ``base_set``: answers echo the questions."""
    n2 = base_set.pair_count
    matrix = tuple(
        tuple(ONE if r == c else ZERO for c in range(n2)) for r in range(n2)
    )
    return Correlation(base_set, base_set, matrix)


# ---------------------------------------------------------------------------
# Auxiliary exact value types shared by the construction and analysis layers.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairDistribution:
    """A joint probability distribution on ordered pairs of one finite set."""

    base_set: FiniteSet
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = self.base_set.size
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ShapeMismatchError(f"pair distribution must be {n} x {n}")
        total = ZERO
        for i, row in enumerate(self.matrix):
            for j, value in enumerate(row):
                if value < 0:
                    raise NegativeEntryError(i, j, value)
                total += value
        if total != ONE:
            raise WeightsNotNormalizedError(f"pair distribution sums to {total}, expected 1")

    def row_sum(self, i: int) -> Fraction:
        return sum(self.matrix[i], ZERO)

    def column_sum(self, j: int) -> Fraction:
        return sum((row[j] for row in self.matrix), ZERO)

    def transpose(self) -> "PairDistribution":
        n = self.base_set.size
        return PairDistribution(
            self.base_set,
            tuple(tuple(self.matrix[j][i] for j in range(n)) for i in range(n)),
        )


def pair_distribution(base_set: FiniteSet, entries) -> PairDistribution:
    matrix = tuple(tuple(as_rational(v) for v in row) for row in entries)
    return PairDistribution(base_set, matrix)


@dataclass(frozen=True)
class PairWeights:
    """A nonnegative weight for every ordered pair of one finite set.

    Unlike :class:`PairDistribution` the total is unconstrained; consumers
    impose their own inequalities.
    """

    base_set: FiniteSet
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = self.base_set.size
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ShapeMismatchError(f"pair weights must be {n} x {n}")
        for i, row in enumerate(self.matrix):
            for j, value in enumerate(row):
                if value < 0:
                    raise NegativeEntryError(i, j, value)

    def is_symmetric(self) -> bool:
        n = self.base_set.size
        return all(
            self.matrix[i][j] == self.matrix[j][i] for i in range(n) for j in range(i + 1, n)
        )


def pair_weights(base_set: FiniteSet, entries) -> PairWeights:
    matrix = tuple(tuple(as_rational(v) for v in row) for row in entries)
    return PairWeights(base_set, matrix)


@dataclass(frozen=True)
class KernelVector:
    """A vector in the left or right nullspace of a correlation matrix.

    ``entries`` has length ``|base_set|^2`` and is indexed over ordered
    pairs of ``base_set`` (the input set for side ``"right"``, the output
    set for side ``"left"``) in the usual A-major order.
    """

    side: str
    base_set: FiniteSet
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {self.side!r}")
        if len(self.entries) != self.base_set.pair_count:
            raise ShapeMismatchError(
                f"kernel vector needs {self.base_set.pair_count} entries, "
                f"got {len(self.entries)}"
            )

    def as_matrix(self) -> tuple[tuple[Fraction, ...], ...]:
        """View the vector as an ``n x n`` matrix over ordered pairs."""
        n = self.base_set.size
        return tuple(
            tuple(self.entries[i * n + j] for j in range(n)) for i in range(n)
        )


@dataclass(frozen=True)
class DeterministicPair:
    """A pair of answer functions ``X^2 -> Y``, one per player.

    ``f_a[i][j]`` is the index of Alice's answer when the inputs are
    ``(x_i, x_j)``; ``f_b`` is Bob's.  No synchronicity is implied.
    """

    input_set: FiniteSet
    output_set: FiniteSet
    f_a: tuple[tuple[int, ...], ...]
    f_b: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.input_set.size
        m = self.output_set.size
        for name, table in (("f_a", self.f_a), ("f_b", self.f_b)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ShapeMismatchError(f"{name} must be an {n} x {n} table")
            for row in table:
                for v in row:
                    if not isinstance(v, int) or not 0 <= v < m:
                        raise ShapeMismatchError(
                            f"{name} entries must be output indices below {m}, got {v!r}"
                        )

    def image_pair(self, i: int, j: int) -> tuple[int, int]:
        """Both players' answer indices on the input pair ``(x_i, x_j)``."""
        return self.f_a[i][j], self.f_b[i][j]

    def is_synchronous(self) -> bool:
        return all(self.f_a[i][i] == self.f_b[i][i] for i in range(self.input_set.size))


# ---------------------------------------------------------------------------
# JSON serialization.
# ---------------------------------------------------------------------------


def to_json_dict(p: Correlation) -> dict:
    return {
        "input_set": list(p.input_set.labels),
        "output_set": list(p.output_set.labels),
        "entries": [[format_rational(v) for v in row] for row in p.matrix],
    }


def serialize(p: Correlation) -> str:
    """Canonical JSON text for ``p``; exact round trip via :func:`deserialize`."""
    return json.dumps(to_json_dict(p), indent=1)


def _expect_label_list(data: Mapping, key: str) -> FiniteSet:
    value = data.get(key)
    if not isinstance(value, list) or not all(isinstance(s, str) for s in value):
        raise ParseError(key, "expected a list of strings")
    try:
        return FiniteSet(tuple(value))
    except ValueError as exc:
        raise ParseError(key, str(exc)) from None


def from_json_dict(data: Mapping) -> Correlation:
    if not isinstance(data, Mapping):
        raise ParseError("<root>", "expected a JSON object")
    input_set = _expect_label_list(data, "input_set")
    output_set = _expect_label_list(data, "output_set")
    entries = data.get("entries")
    if not isinstance(entries, list) or not all(isinstance(row, list) for row in entries):
        raise ParseError("entries", "expected a list of lists of rational strings")
    parsed_rows = []
    for r, row in enumerate(entries):
        parsed = []
        for c, cell in enumerate(row):
            try:
                parsed.append(as_rational(cell))
            except (ValueError, ZeroDivisionError, TypeError) as exc:
                raise ParseError(f"entries[{r}][{c}]", str(exc)) from None
        parsed_rows.append(parsed)
    return make_correlation(input_set, output_set, parsed_rows)


def deserialize(text: str) -> Correlation:
    """Parse JSON text into a validated :class:`Correlation`.

    Structural problems raise :class:`ParseError` with the offending
    location; violations of the correlation axioms re-raise the underlying
    :func:`make_correlation` error unchanged.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"<json>:{exc.lineno}:{exc.colno}", exc.msg) from None
    return from_json_dict(data)
