"""Constructions that produce correlations of known classes.

The builders here come in four groups:

* deterministic data: a single function, or one answer table per player;
* mixtures: a probability measure on functions (a classical model) and
  finite-dimensional projective strategies evaluated in the normalized
  trace (a quantum model), both in exact arithmetic;
* blockwise recipes that realize every synchronous nonsignaling or
  classical correlation with a two-point input or output set from small
  amounts of data (a pair of joint distributions, or pairwise weights);
* seeded random generators used by the test batteries, deterministic in
  their seed.

Each construction returns a validated :class:`~syncgames.corrcore.Correlation`
and documents the class its output provably belongs to.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .boole import intersections_to_atoms, pairwise_intersection_vector
from .corrcore import (
    ONE,
    ZERO,
    Correlation,
    DeterministicPair,
    FiniteSet,
    PairDistribution,
    PairWeights,
    as_rational,
    format_rational,
    make_correlation,
)
from .errors import (
    ConditionViolatedError,
    DomainTooSmallError,
    MarginalMismatchError,
    NotCompleteError,
    NotHermitianError,
    NotIdempotentError,
    NotSymmetricError,
    ParseError,
    SetMismatchError,
    ShapeMismatchError,
    UnknownLabelError,
    UnsupportedShapeError,
    WeightsNotNormalizedError,
)

BINARY = FiniteSet(("0", "1"))
TERNARY = FiniteSet(("0", "1", "2"))


def enumerate_functions(domain_size: int, codomain_size: int) -> Iterator[tuple[int, ...]]:
    """All functions as output-index tuples, in lexicographic order."""
    return itertools.product(range(codomain_size), repeat=domain_size)


# ---------------------------------------------------------------------------
# Deterministic constructions.
# ---------------------------------------------------------------------------


def from_function_indices(
    input_set: FiniteSet, output_set: FiniteSet, f: Sequence[int]
) -> Correlation:
    """Correlation of both players answering ``f`` applied to their own input."""
    n = input_set.size
    m = output_set.size
    if len(f) != n or any(not 0 <= v < m for v in f):
        raise ShapeMismatchError(f"need {n} output indices below {m}, got {f!r}")
    rows = output_set.pair_count
    cols = input_set.pair_count
    matrix = [[ZERO] * cols for _ in range(rows)]
    for i in range(n):
        for j in range(n):
            matrix[output_set.pair_index(f[i], f[j])][input_set.pair_index(i, j)] = ONE
    return make_correlation(input_set, output_set, matrix)


def from_function(
    input_set: FiniteSet, output_set: FiniteSet, mapping: Mapping[str, str]
) -> Correlation:
    """Correlation of a shared deterministic strategy ``mapping: X -> Y``.

    The output is synchronous, nonsignaling, symmetric and classical.
    """
    for key in mapping:
        if key not in input_set.labels:
            raise UnknownLabelError(key, input_set.labels)
    f = []
    for label in input_set.labels:
        if label not in mapping:
            raise UnknownLabelError(label, tuple(mapping))
        f.append(output_set.index(mapping[label]))
    return from_function_indices(input_set, output_set, tuple(f))


def from_deterministic_pair(pair: DeterministicPair) -> Correlation:
    """Correlation of two individual answer tables; may signal."""
    input_set = pair.input_set
    output_set = pair.output_set
    rows = output_set.pair_count
    cols = input_set.pair_count
    matrix = [[ZERO] * cols for _ in range(rows)]
    for i, j in input_set.pairs():
        ya, yb = pair.image_pair(i, j)
        matrix[output_set.pair_index(ya, yb)][input_set.pair_index(i, j)] = ONE
    return make_correlation(input_set, output_set, matrix)


# ---------------------------------------------------------------------------
# Classical models: probability measures on shared deterministic strategies.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassicalModel:
    """A probability measure on functions ``X -> Y``.

    ``weights`` holds ``(function, weight)`` pairs with each function
    encoded as a tuple of output indices of length ``|X|``.  Construction
    canonicalizes: weights become Fractions, zero weights are dropped and
    entries are sorted by function.
    """

    input_set: FiniteSet
    output_set: FiniteSet
    weights: tuple[tuple[tuple[int, ...], Fraction], ...]

    def __post_init__(self) -> None:
        n = self.input_set.size
        m = self.output_set.size
        seen: dict[tuple[int, ...], Fraction] = {}
        total = ZERO
        for key, raw in self.weights:
            key = tuple(key)
            if len(key) != n or any(not isinstance(v, int) or not 0 <= v < m for v in key):
                raise ShapeMismatchError(
                    f"function key {key!r} is not a length-{n} tuple of indices below {m}"
                )
            if key in seen:
                raise WeightsNotNormalizedError(f"duplicate function key {key!r}")
            weight = as_rational(raw)
            if weight < 0:
                raise WeightsNotNormalizedError(f"weight of {key!r} is negative: {weight}")
            seen[key] = weight
            total += weight
        if total != ONE:
            raise WeightsNotNormalizedError(f"weights sum to {total}, expected 1")
        canonical = tuple(sorted((k, w) for k, w in seen.items() if w != 0))
        object.__setattr__(self, "weights", canonical)

    @property
    def mu(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self.weights)

    def support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(key for key, _ in self.weights)


def classical_model(
    input_set: FiniteSet, output_set: FiniteSet, mu: Mapping[tuple[int, ...], object]
) -> ClassicalModel:
    return ClassicalModel(
        input_set, output_set, tuple((tuple(k), as_rational(v)) for k, v in mu.items())
    )


def from_classical_model(model: ClassicalModel) -> Correlation:
    """Mix the function correlations of ``model`` by its weights.

    The output is synchronous, nonsignaling, symmetric, and classical by
    construction.
    """
    input_set = model.input_set
    output_set = model.output_set
    rows = output_set.pair_count
    cols = input_set.pair_count
    matrix = [[ZERO] * cols for _ in range(rows)]
    for f, weight in model.weights:
        for i, j in input_set.pairs():
            matrix[output_set.pair_index(f[i], f[j])][input_set.pair_index(i, j)] += weight
    return make_correlation(input_set, output_set, matrix)


def _function_key_text(key: tuple[int, ...]) -> str:
    return "(" + ",".join(str(v) for v in key) + ")"


def _parse_function_key(text: str) -> tuple[int, ...]:
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ValueError(f"function key {text!r} must look like '(0,1)'")
    inner = stripped[1:-1].strip()
    if not inner:
        raise ValueError(f"function key {text!r} is empty")
    return tuple(int(part.strip()) for part in inner.split(","))


def classical_model_to_json_dict(model: ClassicalModel) -> dict:
    return {
        "input_set": list(model.input_set.labels),
        "output_set": list(model.output_set.labels),
        "mu": {_function_key_text(k): format_rational(w) for k, w in model.weights},
    }


def classical_model_from_json_dict(data: Mapping) -> ClassicalModel:
    from .corrcore import _expect_label_list  # same parsing conventions

    if not isinstance(data, Mapping):
        raise ParseError("<root>", "expected a JSON object")
    input_set = _expect_label_list(data, "input_set")
    output_set = _expect_label_list(data, "output_set")
    raw = data.get("mu")
    if not isinstance(raw, Mapping):
        raise ParseError("mu", "expected an object mapping function keys to rationals")
    mu = {}
    for key_text, value in raw.items():
        try:
            key = _parse_function_key(key_text)
            mu[key] = as_rational(value)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ParseError(f"mu[{key_text!r}]", str(exc)) from None
    return classical_model(input_set, output_set, mu)


# ---------------------------------------------------------------------------
# Exact complex rationals and quantum models.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GaussianRational:
    """A complex number with exact rational real and imaginary parts."""

    real: Fraction
    imag: Fraction = ZERO

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.real + other.real, self.imag + other.imag)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.real - other.real, self.imag - other.imag)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.real * other.real - self.imag * other.imag,
            self.real * other.imag + self.imag * other.real,
        )

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.real, -self.imag)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.real, -self.imag)

    def is_zero(self) -> bool:
        return self.real == 0 and self.imag == 0


GR_ZERO = GaussianRational(ZERO, ZERO)
GR_ONE = GaussianRational(ONE, ZERO)
GR_I = GaussianRational(ZERO, ONE)

GaussianMatrix = tuple  # tuple of row tuples of GaussianRational


def gaussian(re, im=0) -> GaussianRational:
    return GaussianRational(as_rational(re), as_rational(im))


def gr_matrix(rows: Sequence[Sequence[GaussianRational]]) -> GaussianMatrix:
    return tuple(tuple(row) for row in rows)


def gr_identity(d: int) -> GaussianMatrix:
    return tuple(
        tuple(GR_ONE if i == j else GR_ZERO for j in range(d)) for i in range(d)
    )


def gr_add(a: GaussianMatrix, b: GaussianMatrix) -> GaussianMatrix:
    return tuple(
        tuple(x + y for x, y in zip(row_a, row_b)) for row_a, row_b in zip(a, b)
    )


def gr_mul(a: GaussianMatrix, b: GaussianMatrix) -> GaussianMatrix:
    size_inner = len(b)
    cols = len(b[0])
    return tuple(
        tuple(
            sum((row_a[k] * b[k][c] for k in range(size_inner)), GR_ZERO)
            for c in range(cols)
        )
        for row_a in a
    )


def gr_conj_transpose(a: GaussianMatrix) -> GaussianMatrix:
    rows = len(a)
    cols = len(a[0])
    return tuple(tuple(a[r][c].conjugate() for r in range(rows)) for c in range(cols))


def gr_kron(a: GaussianMatrix, b: GaussianMatrix) -> GaussianMatrix:
    da = len(a)
    db = len(b)
    return tuple(
        tuple(a[i // db][j // db] * b[i % db][j % db] for j in range(da * db))
        for i in range(da * db)
    )


def gr_trace_product(a: GaussianMatrix, b: GaussianMatrix) -> GaussianRational:
    """``trace(a @ b)`` without forming the product matrix."""
    d = len(a)
    total = GR_ZERO
    for i in range(d):
        for j in range(d):
            total = total + a[i][j] * b[j][i]
    return total


@dataclass(frozen=True)
class QuantumModel:
    """One projection family per input over a ``dimension``-dimensional space.

    ``pvm[i][y]`` is the projection for input index ``i`` and output index
    ``y``, a ``dimension x dimension`` matrix of :class:`GaussianRational`.
    Shapes are checked on construction; the projection axioms are what
    :func:`validate_quantum_model` decides (and :func:`from_quantum_model`
    enforces).
    """

    input_set: FiniteSet
    output_set: FiniteSet
    dimension: int
    pvm: tuple[tuple[GaussianMatrix, ...], ...]

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ShapeMismatchError("dimension must be at least 1")
        if len(self.pvm) != self.input_set.size:
            raise ShapeMismatchError(
                f"need one projection family per input, got {len(self.pvm)}"
            )
        for family in self.pvm:
            if len(family) != self.output_set.size:
                raise ShapeMismatchError(
                    f"each family needs one projection per output, got {len(family)}"
                )
            for matrix in family:
                if len(matrix) != self.dimension or any(
                    len(row) != self.dimension for row in matrix
                ):
                    raise ShapeMismatchError(
                        f"projections must be {self.dimension} x {self.dimension}"
                    )


def validate_quantum_model(model: QuantumModel) -> None:
    """Check Hermiticity, idempotency and completeness, exactly."""
    d = model.dimension
    for i, x_label in enumerate(model.input_set.labels):
        total = tuple(tuple(GR_ZERO for _ in range(d)) for _ in range(d))
        for y, y_label in enumerate(model.output_set.labels):
            matrix = model.pvm[i][y]
            if matrix != gr_conj_transpose(matrix):
                raise NotHermitianError(x_label, y_label)
            if gr_mul(matrix, matrix) != matrix:
                raise NotIdempotentError(x_label, y_label)
            total = gr_add(total, matrix)
        if total != gr_identity(d):
            raise NotCompleteError(x_label)


def from_quantum_model(model: QuantumModel) -> Correlation:
    """Evaluate a projective strategy in the normalized trace.

    ``p(y_a, y_b | x_a, x_b) = trace(P[x_a][y_a] P[x_b][y_b]) / dimension``.
    The model is validated exactly first.  The output is synchronous,
    symmetric and nonsignaling.
    """
    validate_quantum_model(model)
    input_set = model.input_set
    output_set = model.output_set
    d = Fraction(model.dimension)
    rows = output_set.pair_count
    cols = input_set.pair_count
    matrix = [[ZERO] * cols for _ in range(rows)]
    for xa, xb in input_set.pairs():
        c = input_set.pair_index(xa, xb)
        for ya, yb in output_set.pairs():
            value = gr_trace_product(model.pvm[xa][ya], model.pvm[xb][yb])
            if value.imag != 0:
                raise ShapeMismatchError(
                    "trace of a product of Hermitian operators must be real"
                )
            matrix[output_set.pair_index(ya, yb)][c] = value.real / d
    return make_correlation(input_set, output_set, matrix)


def compose_quantum_models(outer: QuantumModel, inner: QuantumModel) -> Correlation:
    """Correlation of the chained strategy on the tensor product space.

    For ``inner`` on inputs ``X`` with outputs ``Y`` and ``outer`` on
    inputs ``Y`` with outputs ``Z``, the product operators

        E[x][z] = sum over y of  kron(inner.pvm[x][y], outer.pvm[y][z])

    sum to the identity for each ``x`` and are Hermitian and positive, but
    need not be projections, so they are evaluated directly in the
    normalized trace without any projection validation.
    """
    if outer.input_set != inner.output_set:
        raise SetMismatchError(
            "outer model must consume the inner model's output set"
        )
    validate_quantum_model(inner)
    validate_quantum_model(outer)
    input_set = inner.input_set
    output_set = outer.output_set
    dim = Fraction(inner.dimension * outer.dimension)
    effects: list[list[GaussianMatrix]] = []
    for x in range(input_set.size):
        row = []
        for z in range(output_set.size):
            total = None
            for y in range(inner.output_set.size):
                term = gr_kron(inner.pvm[x][y], outer.pvm[y][z])
                total = term if total is None else gr_add(total, term)
            row.append(total)
        effects.append(row)
    rows = output_set.pair_count
    cols = input_set.pair_count
    matrix = [[ZERO] * cols for _ in range(rows)]
    for xa, xb in input_set.pairs():
        c = input_set.pair_index(xa, xb)
        for za, zb in output_set.pairs():
            value = gr_trace_product(effects[xa][za], effects[xb][zb])
            if value.imag != 0:
                raise ShapeMismatchError(
                    "trace of a product of Hermitian operators must be real"
                )
            matrix[output_set.pair_index(za, zb)][c] = value.real / dim
    return make_correlation(input_set, output_set, matrix)


def quantum_model_to_json_dict(model: QuantumModel) -> dict:
    def entry(v: GaussianRational) -> list[str]:
        return [format_rational(v.real), format_rational(v.imag)]

    return {
        "input_set": list(model.input_set.labels),
        "output_set": list(model.output_set.labels),
        "d": model.dimension,
        "pvm": {
            label: [
                [[entry(v) for v in row] for row in model.pvm[i][y]]
                for y in range(model.output_set.size)
            ]
            for i, label in enumerate(model.input_set.labels)
        },
    }


def quantum_model_from_json_dict(data: Mapping) -> QuantumModel:
    from .corrcore import _expect_label_list

    if not isinstance(data, Mapping):
        raise ParseError("<root>", "expected a JSON object")
    input_set = _expect_label_list(data, "input_set")
    output_set = _expect_label_list(data, "output_set")
    d = data.get("d")
    if not isinstance(d, int) or d < 1:
        raise ParseError("d", "expected a positive integer dimension")
    raw = data.get("pvm")
    if not isinstance(raw, Mapping):
        raise ParseError("pvm", "expected an object mapping input labels to families")
    families = []
    for label in input_set.labels:
        if label not in raw:
            raise ParseError(f"pvm[{label!r}]", "missing input label")
        family_raw = raw[label]
        if not isinstance(family_raw, list) or len(family_raw) != output_set.size:
            raise ParseError(
                f"pvm[{label!r}]", f"expected a list of {output_set.size} matrices"
            )
        family = []
        for y, matrix_raw in enumerate(family_raw):
            location = f"pvm[{label!r}][{y}]"
            if not isinstance(matrix_raw, list):
                raise ParseError(location, "expected a list of rows")
            rows = []
            for r, row_raw in enumerate(matrix_raw):
                if not isinstance(row_raw, list):
                    raise ParseError(f"{location}[{r}]", "expected a list of entries")
                row = []
                for c, cell in enumerate(row_raw):
                    if not isinstance(cell, list) or len(cell) != 2:
                        raise ParseError(
                            f"{location}[{r}][{c}]", "expected a [real, imag] pair"
                        )
                    try:
                        row.append(GaussianRational(as_rational(cell[0]), as_rational(cell[1])))
                    except (ValueError, ZeroDivisionError, TypeError) as exc:
                        raise ParseError(f"{location}[{r}][{c}]", str(exc)) from None
                rows.append(tuple(row))
            family.append(tuple(rows))
        families.append(tuple(family))
    return QuantumModel(input_set, output_set, d, tuple(families))


# ---------------------------------------------------------------------------
# Blockwise recipes for two-point input or output sets.
# ---------------------------------------------------------------------------


def _diagonal_block(base: FiniteSet, values: Sequence[Fraction]) -> list[list[Fraction]]:
    n = base.size
    block = [[ZERO] * n for _ in range(n)]
    for y in range(n):
        block[y][y] = values[y]
    return block


def _blocks_to_correlation(
    input_set: FiniteSet, output_set: FiniteSet, blocks: Mapping[tuple[int, int], Sequence]
) -> Correlation:
    """Assemble a correlation whose column ``(i, j)`` is ``blocks[i, j]``.

    Each block is an ``|Y| x |Y|`` matrix over output pairs.
    """
    rows = output_set.pair_count
    cols = input_set.pair_count
    matrix = [[ZERO] * cols for _ in range(rows)]
    for (i, j), block in blocks.items():
        c = input_set.pair_index(i, j)
        for ya, yb in output_set.pairs():
            matrix[output_set.pair_index(ya, yb)][c] = block[ya][yb]
    return make_correlation(input_set, output_set, matrix)


def two_input_nonsignaling(u: PairDistribution, v: PairDistribution) -> Correlation:
    """Synchronous nonsignaling correlation on the two-point input set.

    The off-diagonal input pairs receive the joint distributions ``u`` and
    ``v``; the diagonal pairs receive the diagonal distributions forced by
    nonsignaling.  ``u`` and ``v`` must satisfy, for every output ``y``,

        1. row sum of u at y   == column sum of v at y
        2. column sum of u at y == row sum of v at y

    which is exactly when the result is nonsignaling.  Every synchronous
    nonsignaling correlation with a two-point input set arises this way.
    """
    if u.base_set != v.base_set:
        raise SetMismatchError("u and v must share one output set")
    base = u.base_set
    theta = []
    phi = []
    for y in range(base.size):
        label = base.labels[y]
        if u.row_sum(y) != v.column_sum(y):
            raise MarginalMismatchError(label, 1)
        if u.column_sum(y) != v.row_sum(y):
            raise MarginalMismatchError(label, 2)
        theta.append(u.row_sum(y))
        phi.append(u.column_sum(y))
    blocks = {
        (0, 0): _diagonal_block(base, theta),
        (0, 1): u.matrix,
        (1, 0): v.matrix,
        (1, 1): _diagonal_block(base, phi),
    }
    return _blocks_to_correlation(BINARY, base, blocks)


def two_input_classical(u: PairDistribution) -> Correlation:
    """Classical correlation on the two-point input set from one joint distribution.

    Specializes :func:`two_input_nonsignaling` to ``v`` equal to the
    transpose of ``u``; the marginal conditions then hold automatically and
    the result admits an explicit measure on functions.
    """
    return two_input_nonsignaling(u, u.transpose())


def two_output_nonsignaling(w: PairWeights) -> Correlation:
    """Synchronous nonsignaling correlation with outputs ``{0, 1}``.

    ``w(a, b)`` prescribes the probability that both players answer ``1``
    on inputs ``(a, b)``; the diagonal values prescribe the per-input
    marginals.  Requires at least two inputs, and for every ordered pair
    ``(a, b)``:

        1. w(a, b) <= w(a, a)
        2. w(a, b) <= w(b, b)
        3. w(a, a) + w(b, b) <= 1 + w(a, b)

    Every synchronous nonsignaling correlation with output set of size two
    arises this way.
    """
    base = w.base_set
    if base.size < 2:
        raise DomainTooSmallError("need at least two inputs")
    m = w.matrix
    blocks = {}
    for a in range(base.size):
        for b in range(base.size):
            pair = f"({base.labels[a]}, {base.labels[b]})"
            if m[a][b] > m[a][a]:
                raise ConditionViolatedError(1, f"w{pair} > w({base.labels[a]}, {base.labels[a]})")
            if m[a][b] > m[b][b]:
                raise ConditionViolatedError(2, f"w{pair} > w({base.labels[b]}, {base.labels[b]})")
            if m[a][a] + m[b][b] > ONE + m[a][b]:
                raise ConditionViolatedError(
                    3, f"w(a,a) + w(b,b) = {m[a][a] + m[b][b]} > 1 + w{pair}"
                )
            blocks[(a, b)] = (
                (ONE + m[a][b] - m[a][a] - m[b][b], m[b][b] - m[a][b]),
                (m[a][a] - m[a][b], m[a][b]),
            )
    return _blocks_to_correlation(base, BINARY, blocks)


def two_output_classical(w: PairWeights) -> tuple[ClassicalModel, Correlation]:
    """Classical correlation with outputs ``{0, 1}``, plus its measure.

    ``w`` must be symmetric with, writing ``n = |X|``,

        2. w(j, j) >= sum of w(j, k) over k != j, for every j
        3. sum of w(j, j) over j <= 1 + sum of w(j, k) over j < k

    The measure lives on functions ``X -> {0, 1}`` and reproduces every
    singleton and pairwise weight of ``w`` exactly; it is supported on
    functions sending at most two points to ``1``.
    """
    base = w.base_set
    if not w.is_symmetric():
        raise NotSymmetricError("pairwise weights must be symmetric")
    n = base.size
    m = w.matrix
    for j in range(n):
        off = sum((m[j][k] for k in range(n) if k != j), ZERO)
        if m[j][j] < off:
            raise ConditionViolatedError(
                2, f"w({base.labels[j]}, {base.labels[j]}) = {m[j][j]} < row sum {off}"
            )
    diag_total = sum((m[j][j] for j in range(n)), ZERO)
    upper_total = sum((m[j][k] for j in range(n) for k in range(j + 1, n)), ZERO)
    if diag_total > ONE + upper_total:
        raise ConditionViolatedError(3, f"{diag_total} > 1 + {upper_total}")
    reconstruction = intersections_to_atoms(pairwise_intersection_vector(w))
    if not reconstruction.feasible:
        raise AssertionError("reconstruction must be feasible under the hypotheses")
    mu: dict[tuple[int, ...], Fraction] = {}
    for j, mass in enumerate(reconstruction.entries):
        if mass != 0:
            mu[tuple((j >> k) & 1 for k in range(n))] = mass
    model = classical_model(base, BINARY, mu)
    return model, from_classical_model(model)


# ---------------------------------------------------------------------------
# Seeded random generators.
# ---------------------------------------------------------------------------

RANDOM_KINDS = ("synchronous", "classical", "two_input_ns", "two_output_ns", "deterministic_pair")

_PYTHAGOREAN_TRIPLES = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29))


def _random_weights(count: int, rng: random.Random, granularity: int = 8) -> list[Fraction]:
    raw = [rng.randrange(granularity + 1) for _ in range(count)]
    if not any(raw):
        raw[rng.randrange(count)] = 1
    total = sum(raw)
    return [Fraction(value, total) for value in raw]


def random_classical_model(
    input_set: FiniteSet, output_set: FiniteSet, seed: int
) -> ClassicalModel:
    """A seeded random measure on all of Hom(X, Y); deterministic in ``seed``."""
    rng = random.Random(seed)
    functions = list(enumerate_functions(input_set.size, output_set.size))
    weights = _random_weights(len(functions), rng)
    return classical_model(input_set, output_set, dict(zip(functions, weights)))


def _random_synchronous(
    input_set: FiniteSet, output_set: FiniteSet, rng: random.Random
) -> Correlation:
    ny = output_set.size
    rows = output_set.pair_count
    cols = input_set.pair_count
    matrix = [[ZERO] * cols for _ in range(rows)]
    for i, j in input_set.pairs():
        c = input_set.pair_index(i, j)
        if i == j:
            for y, value in enumerate(_random_weights(ny, rng)):
                matrix[output_set.pair_index(y, y)][c] = value
        else:
            for r, value in enumerate(_random_weights(rows, rng)):
                matrix[r][c] = value
    return make_correlation(input_set, output_set, matrix)


def _random_transport(
    row_margins: Sequence[Fraction], col_margins: Sequence[Fraction], rng: random.Random
) -> list[list[Fraction]]:
    """A random nonnegative matrix with the given row and column sums."""
    n = len(row_margins)
    result = [[ZERO] * n for _ in range(n)]
    rows = list(range(n))
    cols = list(range(n))
    rng.shuffle(rows)
    rng.shuffle(cols)
    remaining_rows = list(row_margins)
    remaining_cols = list(col_margins)
    for i in rows:
        for j in cols:
            move = min(remaining_rows[i], remaining_cols[j])
            if move > 0:
                result[i][j] += move
                remaining_rows[i] -= move
                remaining_cols[j] -= move
    return result


def _random_pair_distribution(base: FiniteSet, rng: random.Random) -> PairDistribution:
    n = base.size
    flat = _random_weights(n * n, rng)
    return PairDistribution(
        base, tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
    )


def _relabel(p: Correlation, input_set: FiniteSet, output_set: FiniteSet) -> Correlation:
    if input_set.size != p.input_set.size or output_set.size != p.output_set.size:
        raise ShapeMismatchError("relabeling must preserve set sizes")
    return Correlation(input_set, output_set, p.matrix)


def _random_two_input_ns(
    input_set: FiniteSet, output_set: FiniteSet, rng: random.Random
) -> Correlation:
    if input_set.size != 2:
        raise UnsupportedShapeError("this recipe needs an input set of exactly two labels")
    u = _random_pair_distribution(output_set, rng)
    n = output_set.size
    row_margins = [u.column_sum(j) for j in range(n)]
    col_margins = [u.row_sum(i) for i in range(n)]
    first = _random_transport(row_margins, col_margins, rng)
    second = _random_transport(row_margins, col_margins, rng)
    half = Fraction(1, 2)
    v = PairDistribution(
        output_set,
        tuple(
            tuple(half * (first[i][j] + second[i][j]) for j in range(n)) for i in range(n)
        ),
    )
    return _relabel(two_input_nonsignaling(u, v), input_set, output_set)


def _random_two_output_ns(
    input_set: FiniteSet, output_set: FiniteSet, rng: random.Random
) -> Correlation:
    if output_set.size != 2:
        raise UnsupportedShapeError("this recipe needs an output set of exactly two labels")
    if input_set.size < 2:
        raise DomainTooSmallError("need at least two inputs")
    n = input_set.size
    diag = [Fraction(rng.randrange(13), 12) for _ in range(n)]
    matrix = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        matrix[a][a] = diag[a]
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            low = diag[a] + diag[b] - ONE
            if low < ZERO:
                low = ZERO
            high = min(diag[a], diag[b])
            matrix[a][b] = low + (high - low) * Fraction(rng.randrange(7), 6)
    w = PairWeights(input_set, tuple(tuple(row) for row in matrix))
    return _relabel(two_output_nonsignaling(w), input_set, output_set)


def _random_deterministic_pair(
    input_set: FiniteSet, output_set: FiniteSet, rng: random.Random
) -> Correlation:
    n = input_set.size
    ny = output_set.size
    f_a = [[rng.randrange(ny) for _ in range(n)] for _ in range(n)]
    f_b = [[rng.randrange(ny) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        f_b[i][i] = f_a[i][i]
    pair = DeterministicPair(
        input_set,
        output_set,
        tuple(tuple(row) for row in f_a),
        tuple(tuple(row) for row in f_b),
    )
    return from_deterministic_pair(pair)


def random_correlation(
    kind: str, input_set: FiniteSet, output_set: FiniteSet, seed: int
) -> Correlation:
    """A seeded random correlation of a guaranteed class.

    ``kind`` selects the recipe: ``synchronous`` (arbitrary synchronous),
    ``classical`` (mixture of functions), ``two_input_ns`` (synchronous
    nonsignaling, two-point input set), ``two_output_ns`` (synchronous
    nonsignaling, two-point output set, possibly asymmetric) or
    ``deterministic_pair`` (synchronous pair of answer tables).  The result
    is deterministic in ``seed``.
    """
    rng = random.Random(seed)
    if kind == "synchronous":
        return _random_synchronous(input_set, output_set, rng)
    if kind == "classical":
        return from_classical_model(random_classical_model(input_set, output_set, seed))
    if kind == "two_input_ns":
        return _random_two_input_ns(input_set, output_set, rng)
    if kind == "two_output_ns":
        return _random_two_output_ns(input_set, output_set, rng)
    if kind == "deterministic_pair":
        return _random_deterministic_pair(input_set, output_set, rng)
    raise ValueError(f"unknown kind {kind!r}; expected one of {RANDOM_KINDS}")


def _random_unitary(dimension: int, rng: random.Random) -> GaussianMatrix:
    """An exact unitary built from rational rotations and fourth-root phases."""
    u = gr_identity(dimension)
    powers = (GR_ONE, GR_I, -GR_ONE, -GR_I)
    for _ in range(dimension * dimension):
        phase_row = tuple(
            tuple(
                powers[rng.randrange(4)] if r == c else GR_ZERO for c in range(dimension)
            )
            for r in range(dimension)
        )
        u = gr_mul(phase_row, u)
        if dimension < 2:
            continue
        i = rng.randrange(dimension)
        j = rng.randrange(dimension - 1)
        if j >= i:
            j += 1
        i, j = min(i, j), max(i, j)
        a, b, c = rng.choice(_PYTHAGOREAN_TRIPLES)
        if rng.randrange(2):
            a, b = b, a
        cos = GaussianRational(Fraction(a, c))
        sin = GaussianRational(Fraction(b, c))
        rotation = [
            [GR_ONE if r == s else GR_ZERO for s in range(dimension)]
            for r in range(dimension)
        ]
        rotation[i][i] = cos
        rotation[i][j] = -sin
        rotation[j][i] = sin
        rotation[j][j] = cos
        u = gr_mul(gr_matrix(rotation), u)
    return u


def random_quantum_model(
    input_set: FiniteSet, output_set: FiniteSet, dimension: int, seed: int
) -> QuantumModel:
    """A seeded random projective strategy with exact Gaussian rational entries.

    Each input gets a random exact unitary conjugating a random diagonal
    0/1 partition of the basis into output groups.  When ``dimension`` is
    at least ``|Y|`` every output receives a nonzero projection.
    """
    rng = random.Random(seed)
    ny = output_set.size
    families = []
    for _ in range(input_set.size):
        assignment = [l % ny for l in range(dimension)]
        rng.shuffle(assignment)
        u = _random_unitary(dimension, rng)
        u_dag = gr_conj_transpose(u)
        family = []
        for y in range(ny):
            diag = tuple(
                tuple(
                    (GR_ONE if (r == c and assignment[r] == y) else GR_ZERO)
                    for c in range(dimension)
                )
                for r in range(dimension)
            )
            family.append(gr_mul(gr_mul(u, diag), u_dag))
        families.append(tuple(family))
    return QuantumModel(input_set, output_set, dimension, tuple(families))
