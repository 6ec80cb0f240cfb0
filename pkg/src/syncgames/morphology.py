"""Categorical structure of synchronous correlations.

Correlations of a fixed class compose associatively and contain the
identities, so each class (synchronous ``S``, nonsignaling ``NS``,
quantum-style ``Q``, classical ``HV``) is the hom-set family of a
category whose objects are finite sets.  This module decides, for a
correlation and a category tag:

* section / retraction, with explicit deterministic inverses;
* monomorphism / epimorphism, which in all four categories reduce to the
  right / left nullspace of the matrix being zero; when the nullspace is
  nonzero, an explicit witness pair of distinct correlations with equal
  compositions is produced inside the same category;
* bimorphism (mono and epi) and isomorphism.

Membership in a tag is checked exactly: ``S`` is synchronicity, ``NS``
adds nonsignaling, ``Q`` adds symmetry, and ``HV`` asks for an exact
classical decomposition.  ``Q`` deliberately accepts every symmetric
synchronous nonsignaling correlation: quantum-constructed inputs satisfy
these and the tag does not attempt to decide quantum realizability.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .category import (
    classical_decomposition,
    compose,
    deterministic_function,
    is_deterministic,
    is_nonsignaling,
    is_symmetric,
    is_synchronous,
)
from .constructors import (
    BINARY,
    TERNARY,
    ClassicalModel,
    _blocks_to_correlation,
    classical_model,
    classical_model_from_json_dict,
    classical_model_to_json_dict,
    from_classical_model,
    from_deterministic_pair,
    two_input_classical,
    two_input_nonsignaling,
    two_output_classical,
    two_output_nonsignaling,
)
from .corrcore import (
    ONE,
    ZERO,
    Correlation,
    DeterministicPair,
    FiniteSet,
    KernelVector,
    PairDistribution,
    PairWeights,
    as_rational,
    format_rational,
    from_json_dict as correlation_from_json_dict,
    to_json_dict as correlation_to_json_dict,
)
from .errors import (
    NotARetractionError,
    NotASectionError,
    NotInCategoryError,
    ParseError,
    SymmetryRequiredError,
)


class CategoryTag(str, enum.Enum):
    """The four correlation categories, ordered HV <= Q <= NS <= S."""

    S = "S"
    NS = "NS"
    Q = "Q"
    HV = "HV"


def _coerce_tag(cat) -> CategoryTag:
    if isinstance(cat, CategoryTag):
        return cat
    try:
        return CategoryTag(str(cat))
    except ValueError:
        raise ValueError(f"unknown category {cat!r}; expected S, NS, Q or HV") from None


def is_member(p: Correlation, cat) -> bool:
    """Exact membership of ``p`` in the hom-set of the tagged category."""
    tag = _coerce_tag(cat)
    if not is_synchronous(p):
        return False
    if tag is CategoryTag.S:
        return True
    if not is_nonsignaling(p):
        return False
    if tag is CategoryTag.NS:
        return True
    if not is_symmetric(p):
        return False
    if tag is CategoryTag.Q:
        return True
    return classical_decomposition(p) is not None


def require_member(p: Correlation, cat) -> CategoryTag:
    tag = _coerce_tag(cat)
    if not is_member(p, tag):
        raise NotInCategoryError(tag.value)
    return tag


# ---------------------------------------------------------------------------
# Exact nullspaces.
# ---------------------------------------------------------------------------


def _rref(rows: list[list[Fraction]], width: int) -> tuple[list[list[Fraction]], list[int]]:
    matrix = [row[:] for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        pivot_row = None
        for i in range(rank, len(matrix)):
            if matrix[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        if pivot != 1:
            matrix[rank] = [v / pivot for v in matrix[rank]]
        for i in range(len(matrix)):
            if i != rank and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(matrix):
            break
    return matrix[:rank], pivots


def _nullspace(rows: list[list[Fraction]], width: int) -> list[tuple[Fraction, ...]]:
    """Canonical reduced-echelon nullspace basis, free columns ascending."""
    rref, pivots = _rref(rows, width)
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        vector = [ZERO] * width
        vector[free] = ONE
        for i, pivot_col in enumerate(pivots):
            vector[pivot_col] = -rref[i][free]
        basis.append(tuple(vector))
    return basis


def right_nullspace_basis(p: Correlation) -> list[KernelVector]:
    """Vectors ``u`` with ``P u = 0``, indexed over input pairs."""
    rows = [list(row) for row in p.matrix]
    return [
        KernelVector("right", p.input_set, v)
        for v in _nullspace(rows, p.column_count)
    ]


def left_nullspace_basis(p: Correlation) -> list[KernelVector]:
    """Vectors ``w`` with ``w P = 0``, indexed over output pairs."""
    rows = [
        [p.matrix[r][c] for r in range(p.row_count)] for c in range(p.column_count)
    ]
    return [
        KernelVector("left", p.output_set, v) for v in _nullspace(rows, p.row_count)
    ]


def _matrix_rank(p: Correlation) -> int:
    rows = [list(row) for row in p.matrix]
    _, pivots = _rref(rows, p.column_count)
    return len(pivots)


# ---------------------------------------------------------------------------
# Monomorphisms and epimorphisms.
# ---------------------------------------------------------------------------


def is_monomorphism(p: Correlation, cat) -> bool:
    """Left cancellable in the tagged category: zero right nullspace.

    The criterion does not depend on the tag; the tag only scopes the
    membership precondition.
    """
    require_member(p, cat)
    return not right_nullspace_basis(p)


def is_epimorphism(p: Correlation, cat) -> bool:
    """Right cancellable in the tagged category: zero left nullspace."""
    require_member(p, cat)
    return not left_nullspace_basis(p)


@dataclass(frozen=True)
class WitnessPair:
    """Two distinct correlations with equal compositions through ``p``.

    For side ``"mono"`` the pair satisfies ``p . q_plus == p . q_minus``;
    for side ``"epi"``, ``q_plus . p == q_minus . p``.  Both members lie in
    the tagged category, and ``kernel`` is the rescaled nullspace vector
    whose positive and negative parts drive the two members.  Classical
    models certifying membership are attached when the construction
    produces them.
    """

    side: str
    category: str
    q_plus: Correlation
    q_minus: Correlation
    kernel: KernelVector
    model_plus: Optional[ClassicalModel] = None
    model_minus: Optional[ClassicalModel] = None


def _split_signs(
    entries: Sequence[Fraction], n: int
) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    plus = [[ZERO] * n for _ in range(n)]
    minus = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            value = entries[i * n + j]
            if value > 0:
                plus[i][j] = value
            elif value < 0:
                minus[i][j] = -value
    return plus, minus


def _point_block(n: int, i: int, j: int) -> list[list[Fraction]]:
    block = [[ZERO] * n for _ in range(n)]
    block[i][j] = ONE
    return block


def _verify_witness(p: Correlation, witness: WitnessPair) -> None:
    tag = CategoryTag(witness.category)
    if witness.q_plus == witness.q_minus:
        raise AssertionError("witness members must differ")
    if witness.side == "mono":
        left = compose(p, witness.q_plus)
        right = compose(p, witness.q_minus)
    else:
        left = compose(witness.q_plus, p)
        right = compose(witness.q_minus, p)
    if left != right:
        raise AssertionError("witness compositions must agree exactly")
    for q, model in (
        (witness.q_plus, witness.model_plus),
        (witness.q_minus, witness.model_minus),
    ):
        if model is not None:
            if from_classical_model(model) != q:
                raise AssertionError("attached model must re-expand to its witness")
        elif tag in (CategoryTag.HV, CategoryTag.Q):
            if classical_decomposition(q) is None:
                raise AssertionError("witness must admit a classical decomposition")
        if not is_synchronous(q):
            raise AssertionError("witness must be synchronous")
        if tag is not CategoryTag.S and not is_nonsignaling(q):
            raise AssertionError("witness must be nonsignaling")
        if tag in (CategoryTag.Q, CategoryTag.HV) and not is_symmetric(q):
            raise AssertionError("witness must be symmetric")


def mono_witness(p: Correlation, cat) -> Optional[WitnessPair]:
    """A category-internal mono failure certificate, or None if mono.

    Takes the first canonical right nullspace vector ``u``, normalizes its
    positive part to total mass one (the negative part then also has mass
    one, because the entries of ``u`` sum to zero against the stochastic
    columns), and turns the two sign parts into two correlations from the
    two-point set into ``X`` whose compositions with ``p`` agree.
    """
    tag = require_member(p, cat)
    basis = right_nullspace_basis(p)
    if not basis:
        return None
    raw = basis[0].entries
    positive = sum((v for v in raw if v > 0), ZERO)
    u = tuple(v / positive for v in raw)
    n = p.input_set.size
    x_set = p.input_set
    u_plus, u_minus = _split_signs(u, n)
    model_plus = model_minus = None

    if tag is CategoryTag.S:
        anchor = _point_block(n, 0, 0)
        q_plus = _blocks_to_correlation(
            BINARY, x_set, {(0, 0): anchor, (0, 1): u_plus, (1, 0): anchor, (1, 1): anchor}
        )
        q_minus = _blocks_to_correlation(
            BINARY, x_set, {(0, 0): anchor, (0, 1): u_minus, (1, 0): anchor, (1, 1): anchor}
        )
    elif tag is CategoryTag.NS:
        # Pad both sign parts with the absolute-value matrix so every block
        # stays nonnegative; the padding cancels in the difference, leaving
        # only nullspace directions.
        absolute = [[u_plus[i][j] + u_minus[i][j] for j in range(n)] for i in range(n)]
        row_plus = [sum(u_plus[i], ZERO) for i in range(n)]
        col_plus = [sum((u_plus[i][j] for i in range(n)), ZERO) for j in range(n)]
        row_minus = [sum(u_minus[i], ZERO) for i in range(n)]
        col_minus = [sum((u_minus[i][j] for i in range(n)), ZERO) for j in range(n)]
        third = Fraction(1, 3)

        def build(first, second, rows_of, cols_of):
            a = [
                [third * (first[i][j] + absolute[j][i]) for j in range(n)]
                for i in range(n)
            ]
            b = [
                [
                    third
                    * (
                        (rows_of[i] + cols_of[i] if i == j else ZERO)
                        + second[i][j]
                    )
                    for j in range(n)
                ]
                for i in range(n)
            ]
            return two_input_nonsignaling(
                PairDistribution(x_set, tuple(tuple(r) for r in a)),
                PairDistribution(x_set, tuple(tuple(r) for r in b)),
            )

        q_plus = build(u_plus, u_minus, row_plus, col_plus)
        q_minus = build(u_minus, u_plus, row_minus, col_minus)
    else:
        if not is_symmetric(p):
            raise SymmetryRequiredError(
                "classical and quantum-style witnesses need a symmetric correlation"
            )
        dist_plus = PairDistribution(x_set, tuple(tuple(r) for r in u_plus))
        dist_minus = PairDistribution(x_set, tuple(tuple(r) for r in u_minus))
        q_plus = two_input_classical(dist_plus)
        q_minus = two_input_classical(dist_minus)
        model_plus = classical_model(
            BINARY, x_set, {(i, j): u_plus[i][j] for i in range(n) for j in range(n)}
        )
        model_minus = classical_model(
            BINARY, x_set, {(i, j): u_minus[i][j] for i in range(n) for j in range(n)}
        )

    witness = WitnessPair(
        "mono",
        tag.value,
        q_plus,
        q_minus,
        KernelVector("right", x_set, u),
        model_plus,
        model_minus,
    )
    _verify_witness(p, witness)
    return witness


def _skew_measures(
    y_set: FiniteSet, skew: Sequence[Sequence[Fraction]]
) -> tuple[ClassicalModel, ClassicalModel]:
    """Measures on functions ``Y -> {0, 1, 2}`` from a skew kernel matrix.

    ``skew`` must have one-norm exactly 2/3.  For each sign part ``v`` of
    the matrix, mass ``v(a, b)`` goes to the function sending ``a`` to 0,
    ``b`` to 1 and everything else to 2; each row sum goes to the function
    marking only its row point with 1; each column sum to the function
    marking only its column point with 0.  Both totals come to one exactly.
    """
    n = y_set.size
    models = []
    for sign in (1, -1):
        mu: dict[tuple[int, ...], Fraction] = {}

        def add(key: tuple[int, ...], weight: Fraction) -> None:
            if weight != 0:
                mu[key] = mu.get(key, ZERO) + weight

        for a in range(n):
            for b in range(n):
                value = sign * skew[a][b]
                if value > 0:
                    key = tuple(0 if t == a else 1 if t == b else 2 for t in range(n))
                    add(key, value)
        for a in range(n):
            row_total = sum((max(sign * skew[a][b], ZERO) for b in range(n)), ZERO)
            add(tuple(1 if t == a else 2 for t in range(n)), row_total)
        for b in range(n):
            col_total = sum((max(sign * skew[a][b], ZERO) for a in range(n)), ZERO)
            add(tuple(0 if t == b else 2 for t in range(n)), col_total)
        total = sum(mu.values(), ZERO)
        if total > ONE:
            raise AssertionError("skew measure exceeds total mass one")
        if total < ONE:
            add(tuple(2 for _ in range(n)), ONE - total)
        models.append(classical_model(y_set, TERNARY, mu))
    return models[0], models[1]


def epi_witness(p: Correlation, cat) -> Optional[WitnessPair]:
    """A category-internal epi failure certificate, or None if epi.

    Takes the first canonical left nullspace vector ``w`` and rescales it
    per category.  For ``S`` the two sign parts directly define two
    correlations into the two-point set.  For ``NS`` a constant diagonal
    padding turns them into valid pairwise weights.  For ``HV`` and ``Q``
    the symmetric part of ``w`` (tried first) feeds the classical pairwise
    construction; a purely skew vector instead yields two explicit
    measures on functions into a three-point set.  All padding and
    normalization cancels in the difference of the two members, so their
    compositions with ``p`` agree exactly.
    """
    tag = require_member(p, cat)
    basis = left_nullspace_basis(p)
    if not basis:
        return None
    raw = basis[0].entries
    m = p.output_set.size
    y_set = p.output_set
    model_plus = model_minus = None

    if tag is CategoryTag.S:
        scale = max(abs(v) for v in raw)
        w = tuple(v / scale for v in raw)
        w_plus, w_minus = _split_signs(w, m)
        blocks_plus = {}
        blocks_minus = {}
        for a in range(m):
            for b in range(m):
                blocks_plus[(a, b)] = (
                    (ONE - w_plus[a][b], ZERO),
                    (ZERO, w_plus[a][b]),
                )
                blocks_minus[(a, b)] = (
                    (ONE - w_minus[a][b], ZERO),
                    (ZERO, w_minus[a][b]),
                )
        q_plus = _blocks_to_correlation(y_set, BINARY, blocks_plus)
        q_minus = _blocks_to_correlation(y_set, BINARY, blocks_minus)
        kernel_entries = w
    elif tag is CategoryTag.NS:
        scale = 4 * max(abs(v) for v in raw)
        w = tuple(v / scale for v in raw)
        w_plus, w_minus = _split_signs(w, m)
        quarter = Fraction(1, 4)

        def weights(part):
            return PairWeights(
                y_set,
                tuple(
                    tuple(
                        (quarter if a == b else ZERO) + part[a][b] for b in range(m)
                    )
                    for a in range(m)
                ),
            )

        q_plus = two_output_nonsignaling(weights(w_plus))
        q_minus = two_output_nonsignaling(weights(w_minus))
        kernel_entries = w
    else:
        if not is_symmetric(p):
            raise SymmetryRequiredError(
                "classical and quantum-style witnesses need a symmetric correlation"
            )
        sym = [
            [(raw[a * m + b] + raw[b * m + a]) / 2 for b in range(m)] for a in range(m)
        ]
        if any(v != 0 for row in sym for v in row):
            # Symmetric part: diagonal padding 1/n with n = |Y| + 1 and peak
            # 1/(n^2 + 1) keeps every hypothesis of the classical pairwise
            # construction satisfied for an arbitrary symmetric direction.
            n = m + 1
            peak = max(abs(v) for row in sym for v in row)
            factor = Fraction(1, n * n + 1) / peak
            scaled = [[v * factor for v in row] for row in sym]
            w_plus, w_minus = _split_signs(
                tuple(scaled[a][b] for a in range(m) for b in range(m)), m
            )
            pad = Fraction(1, n)

            def weights(part):
                return PairWeights(
                    y_set,
                    tuple(
                        tuple(
                            (pad if a == b else ZERO) + part[a][b] for b in range(m)
                        )
                        for a in range(m)
                    ),
                )

            model_plus, q_plus = two_output_classical(weights(w_plus))
            model_minus, q_minus = two_output_classical(weights(w_minus))
            kernel_entries = tuple(
                scaled[a][b] for a in range(m) for b in range(m)
            )
        else:
            skew = [
                [(raw[a * m + b] - raw[b * m + a]) / 2 for b in range(m)]
                for a in range(m)
            ]
            norm = sum((abs(v) for row in skew for v in row), ZERO)
            factor = Fraction(2, 3) / norm
            scaled = [[v * factor for v in row] for row in skew]
            model_plus, model_minus = _skew_measures(y_set, scaled)
            q_plus = from_classical_model(model_plus)
            q_minus = from_classical_model(model_minus)
            kernel_entries = tuple(
                scaled[a][b] for a in range(m) for b in range(m)
            )

    witness = WitnessPair(
        "epi",
        tag.value,
        q_plus,
        q_minus,
        KernelVector("left", y_set, kernel_entries),
        model_plus,
        model_minus,
    )
    _verify_witness(p, witness)
    return witness


# ---------------------------------------------------------------------------
# Sections and retractions.
# ---------------------------------------------------------------------------


def is_section(p: Correlation, cat) -> bool:
    """Does ``p`` have a left inverse in the tagged category?

    In ``S`` these are exactly the deterministic pairs that are one-to-one
    on input pairs and send a pair to the output diagonal only when it is
    itself diagonal.  In the other three categories they are exactly the
    one-to-one shared single-variable strategies.
    """
    tag = require_member(p, cat)
    if tag is CategoryTag.S:
        pair = is_deterministic(p)
        if pair is None:
            return False
        nx = p.input_set.size
        images = set()
        for i in range(nx):
            for j in range(nx):
                image = pair.image_pair(i, j)
                if image in images:
                    return False
                images.add(image)
                if i != j and image[0] == image[1]:
                    return False
        return True
    f = deterministic_function(p)
    return f is not None and len(set(f)) == p.input_set.size


def section_left_inverse(p: Correlation) -> Correlation:
    """A deterministic synchronous ``q`` with ``q . p`` the identity.

    Off the image of ``p`` the inverse answers with the first input label.
    Raises :class:`NotASectionError` when ``p`` is not a section of the
    synchronous category.
    """
    try:
        if not is_section(p, CategoryTag.S):
            raise NotASectionError("correlation is not a section")
    except NotInCategoryError:
        raise NotASectionError("correlation is not a section") from None
    pair = is_deterministic(p)
    nx = p.input_set.size
    ny = p.output_set.size
    g_a = [[0] * ny for _ in range(ny)]
    g_b = [[0] * ny for _ in range(ny)]
    for i in range(nx):
        for j in range(nx):
            ya, yb = pair.image_pair(i, j)
            g_a[ya][yb] = i
            g_b[ya][yb] = j
    inverse = DeterministicPair(
        p.output_set,
        p.input_set,
        tuple(tuple(row) for row in g_a),
        tuple(tuple(row) for row in g_b),
    )
    return from_deterministic_pair(inverse)


def is_retraction(p: Correlation, cat) -> bool:
    """Does ``p`` have a right inverse in the tagged category?

    In ``S`` these are exactly the deterministic pairs that cover every
    output pair and cover the output diagonal using diagonal input pairs.
    In the other three categories they are exactly the onto shared
    single-variable strategies.
    """
    tag = require_member(p, cat)
    if tag is CategoryTag.S:
        pair = is_deterministic(p)
        if pair is None:
            return False
        nx = p.input_set.size
        ny = p.output_set.size
        images = {pair.image_pair(i, j) for i in range(nx) for j in range(nx)}
        if len(images) != ny * ny:
            return False
        diagonal = {pair.f_a[i][i] for i in range(nx)}
        return len(diagonal) == ny
    f = deterministic_function(p)
    return f is not None and len(set(f)) == p.output_set.size


def retraction_right_inverse(p: Correlation) -> Correlation:
    """A deterministic synchronous ``q`` with ``p . q`` the identity.

    Each output pair picks its first preimage in index order, with
    diagonal output pairs picking a diagonal preimage.  Raises
    :class:`NotARetractionError` when ``p`` is not a retraction of the
    synchronous category.
    """
    try:
        if not is_retraction(p, CategoryTag.S):
            raise NotARetractionError("correlation is not a retraction")
    except NotInCategoryError:
        raise NotARetractionError("correlation is not a retraction") from None
    pair = is_deterministic(p)
    nx = p.input_set.size
    ny = p.output_set.size
    g_a = [[-1] * ny for _ in range(ny)]
    g_b = [[-1] * ny for _ in range(ny)]
    for y in range(ny):
        for i in range(nx):
            if pair.f_a[i][i] == y and pair.f_b[i][i] == y:
                g_a[y][y] = i
                g_b[y][y] = i
                break
    for i in range(nx):
        for j in range(nx):
            ya, yb = pair.image_pair(i, j)
            if g_a[ya][yb] < 0:
                g_a[ya][yb] = i
                g_b[ya][yb] = j
    inverse = DeterministicPair(
        p.output_set,
        p.input_set,
        tuple(tuple(row) for row in g_a),
        tuple(tuple(row) for row in g_b),
    )
    return from_deterministic_pair(inverse)


# ---------------------------------------------------------------------------
# Bimorphisms and isomorphisms.
# ---------------------------------------------------------------------------


def is_bimorphism(p: Correlation, cat) -> bool:
    """Mono and epi at once: a square nonsingular matrix."""
    require_member(p, cat)
    if p.input_set.size != p.output_set.size:
        return False
    return _matrix_rank(p) == p.column_count


def is_isomorphism(p: Correlation, cat) -> bool:
    """Invertible in the category: a shared deterministic bijection."""
    require_member(p, cat)
    if p.input_set.size != p.output_set.size:
        return False
    f = deterministic_function(p)
    return f is not None and len(set(f)) == p.input_set.size


# ---------------------------------------------------------------------------
# Witness serialization.
# ---------------------------------------------------------------------------


def witness_to_json_dict(witness: WitnessPair) -> dict:
    data = {
        "side": witness.side,
        "category": witness.category,
        "q_plus": correlation_to_json_dict(witness.q_plus),
        "q_minus": correlation_to_json_dict(witness.q_minus),
        "kernel_side": witness.kernel.side,
        "kernel_base_set": list(witness.kernel.base_set.labels),
        "kernel_vector": [format_rational(v) for v in witness.kernel.entries],
    }
    if witness.model_plus is not None:
        data["model_plus"] = classical_model_to_json_dict(witness.model_plus)
    if witness.model_minus is not None:
        data["model_minus"] = classical_model_to_json_dict(witness.model_minus)
    return data


def witness_from_json_dict(data: Mapping) -> WitnessPair:
    if not isinstance(data, Mapping):
        raise ParseError("<root>", "expected a JSON object")
    side = data.get("side")
    if side not in ("mono", "epi"):
        raise ParseError("side", "expected 'mono' or 'epi'")
    category = data.get("category")
    try:
        tag = CategoryTag(category)
    except ValueError:
        raise ParseError("category", f"unknown category {category!r}") from None
    q_plus = correlation_from_json_dict(data.get("q_plus"))
    q_minus = correlation_from_json_dict(data.get("q_minus"))
    kernel_side = data.get("kernel_side")
    if kernel_side not in ("left", "right"):
        raise ParseError("kernel_side", "expected 'left' or 'right'")
    base = FiniteSet(tuple(data.get("kernel_base_set", ())))
    raw = data.get("kernel_vector")
    if not isinstance(raw, list):
        raise ParseError("kernel_vector", "expected a list of rational strings")
    entries = []
    for k, cell in enumerate(raw):
        try:
            entries.append(as_rational(cell))
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ParseError(f"kernel_vector[{k}]", str(exc)) from None
    model_plus = model_minus = None
    if "model_plus" in data:
        model_plus = classical_model_from_json_dict(data["model_plus"])
    if "model_minus" in data:
        model_minus = classical_model_from_json_dict(data["model_minus"])
    return WitnessPair(
        side,
        tag.value,
        q_plus,
        q_minus,
        KernelVector(kernel_side, base, tuple(entries)),
        model_plus,
        model_minus,
    )
