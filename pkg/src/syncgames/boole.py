"""Inclusion-exclusion machinery for intersection probabilities of n events.

Subsets of ``{S_0, ..., S_{n-1}}`` are encoded little-endian: index ``j``
stands for the intersection of the events whose bits are set in ``j``, so
``j = 0`` is the empty intersection, ``j = 2**l`` is ``S_l`` alone and
``j = 2**l + 2**m`` is the pairwise intersection of ``S_l`` and ``S_m``.

Two coordinate systems are used for a vector of length ``2**n``:

* ``atoms``: the probability of each atom of the Boolean algebra, that is
  of each full intersection pattern (which events occur, which do not);
* ``intersections``: the probability ``w_j`` of each intersection.

The change of basis in either direction factors into ``n`` single-bit
passes, so it costs ``O(n * 2**n)`` and no ``2**n x 2**n`` matrix is ever
materialized.  Everything is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .corrcore import ONE, ZERO, PairWeights, as_rational, format_rational
from .errors import (
    NotNormalizedAtEmptySetError,
    NotSymmetricError,
    OutOfRangeError,
    ShapeMismatchError,
    UnsupportedShapeError,
    WeightsNotNormalizedError,
)

ATOMS = "atoms"
INTERSECTIONS = "intersections"


@dataclass(frozen=True)
class BooleVector:
    """A length ``2**n`` vector of exact rationals in one of two bases.

    ``atoms`` vectors are validated as probability distributions.
    ``intersections`` vectors are validated to be nonnegative with
    ``w_0 = 1``; internal consistency (equivalently, nonnegativity of the
    reconstructed atoms) is what :func:`intersections_to_atoms` decides.
    """

    n: int
    interpretation: str
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ShapeMismatchError("n must be nonnegative")
        if len(self.entries) != 1 << self.n:
            raise ShapeMismatchError(
                f"need {1 << self.n} entries for n = {self.n}, got {len(self.entries)}"
            )
        if self.interpretation == ATOMS:
            total = ZERO
            for j, value in enumerate(self.entries):
                if value < 0:
                    raise WeightsNotNormalizedError(f"atom {j} has negative mass {value}")
                total += value
            if total != ONE:
                raise WeightsNotNormalizedError(f"atoms sum to {total}, expected 1")
        elif self.interpretation == INTERSECTIONS:
            if self.entries[0] != ONE:
                raise NotNormalizedAtEmptySetError(
                    f"empty intersection has probability {self.entries[0]}, expected 1"
                )
            for j, value in enumerate(self.entries):
                if value < 0:
                    raise OutOfRangeError(f"intersection {j} has negative probability {value}")
        else:
            raise ValueError(f"unknown interpretation {self.interpretation!r}")


def boole_vector(n: int, interpretation: str, entries: Sequence) -> BooleVector:
    return BooleVector(n, interpretation, tuple(as_rational(v) for v in entries))


def measure_to_atoms(mu: Mapping[tuple[int, ...], object], n: int) -> BooleVector:
    """Turn a measure on binary functions into an atom vector.

    Keys are length ``n`` tuples over ``{0, 1}``; the function mapping
    position ``k`` to bit ``k`` of ``j`` lands in atom ``j``.  Raises
    :class:`WeightsNotNormalizedError` when the weights are negative
    anywhere or do not sum to one.
    """
    entries = [ZERO] * (1 << n)
    total = ZERO
    for key, raw in mu.items():
        if len(key) != n or any(bit not in (0, 1) for bit in key):
            raise ShapeMismatchError(f"key {key!r} is not a length-{n} binary tuple")
        weight = as_rational(raw)
        if weight < 0:
            raise WeightsNotNormalizedError(f"weight of {key!r} is negative: {weight}")
        j = 0
        for k, bit in enumerate(key):
            j |= bit << k
        entries[j] += weight
        total += weight
    if total != ONE:
        raise WeightsNotNormalizedError(f"measure sums to {total}, expected 1")
    return BooleVector(n, ATOMS, tuple(entries))


def atoms_to_intersections(p: BooleVector) -> BooleVector:
    """Map atom probabilities to intersection probabilities.

    One pass per event: the probability of an intersection not involving
    event ``l`` is the sum over both settings of event ``l``.
    """
    if p.interpretation != ATOMS:
        raise ValueError("expected an atoms vector")
    values = list(p.entries)
    for l in range(p.n):
        bit = 1 << l
        for j in range(1 << p.n):
            if not j & bit:
                values[j] = values[j] + values[j | bit]
    return BooleVector(p.n, INTERSECTIONS, tuple(values))


@dataclass(frozen=True)
class AtomReconstruction:
    """Outcome of inverting an intersection vector.

    ``entries`` always holds the unique signed solution.  When every entry
    is nonnegative the vector is a genuine distribution, ``feasible`` is
    true and :meth:`atoms` wraps it; otherwise ``negative_indices`` is the
    certificate of infeasibility.
    """

    n: int
    entries: tuple[Fraction, ...]
    feasible: bool
    negative_indices: tuple[int, ...]

    def atoms(self) -> BooleVector:
        if not self.feasible:
            raise WeightsNotNormalizedError(
                f"reconstruction is infeasible at atoms {list(self.negative_indices)}"
            )
        return BooleVector(self.n, ATOMS, self.entries)


def intersections_to_atoms(w: BooleVector) -> AtomReconstruction:
    """Invert :func:`atoms_to_intersections`, reporting feasibility.

    The inverse also factors into one alternating-difference pass per
    event.  The result certifies infeasibility by listing every atom whose
    reconstructed mass is negative.
    """
    if w.interpretation != INTERSECTIONS:
        raise ValueError("expected an intersections vector")
    values = list(w.entries)
    for l in range(w.n):
        bit = 1 << l
        for j in range(1 << w.n):
            if not j & bit:
                values[j] = values[j] - values[j | bit]
    negative = tuple(j for j, v in enumerate(values) if v < 0)
    return AtomReconstruction(w.n, tuple(values), not negative, negative)


def pair_bounds(a, b) -> tuple[Fraction, Fraction]:
    """Sharp bounds on ``Pr(S_1 and S_2)`` given ``Pr(S_1)`` and ``Pr(S_2)``.

    Returns ``(max(0, a + b - 1), min(a, b))``.
    """
    a = as_rational(a)
    b = as_rational(b)
    for name, value in (("a", a), ("b", b)):
        if not ZERO <= value <= ONE:
            raise OutOfRangeError(f"{name} = {value} is outside [0, 1]")
    lower = a + b - ONE
    if lower < ZERO:
        lower = ZERO
    upper = a if a <= b else b
    return lower, upper


def pairwise_intersection_vector(w: PairWeights) -> BooleVector:
    """Embed symmetric pairwise weights as an intersection vector.

    With ``n = |X|`` events, singleton ``w_{2**l}`` gets ``w(l, l)``, the
    pair ``w_{2**l + 2**m}`` gets ``w(l, m)``, every deeper intersection
    gets zero and the empty intersection gets one.
    """
    if not w.is_symmetric():
        raise NotSymmetricError("pairwise weights must be symmetric")
    n = w.base_set.size
    entries = [ZERO] * (1 << n)
    entries[0] = ONE
    for l in range(n):
        entries[1 << l] = w.matrix[l][l]
        for m in range(l + 1, n):
            entries[(1 << l) | (1 << m)] = w.matrix[l][m]
    return BooleVector(n, INTERSECTIONS, tuple(entries))


# ---------------------------------------------------------------------------
# Three-event bounds on the triple intersection, and the induced linear
# inequalities in the pairwise data alone.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TripleBounds:
    """Evaluated bounds on the triple intersection of three events."""

    lowers: tuple[Fraction, Fraction, Fraction, Fraction]
    uppers: tuple[Fraction, Fraction, Fraction, Fraction]

    @property
    def feasible(self) -> bool:
        return max(self.lowers) <= min(self.uppers)

    def interval(self) -> tuple[Fraction, Fraction]:
        return max(self.lowers), min(self.uppers)


def triple_bounds(w: PairWeights) -> TripleBounds:
    """Bounds on ``w_7`` from singleton and pairwise probabilities of 3 events.

    ``w`` holds ``w(i, i) = Pr(S_i)`` and ``w(i, j) = Pr(S_i and S_j)``.
    The four lower and four upper bounds are exactly the nonnegativity
    conditions of the eight reconstructed atoms, solved for ``w_7``.
    """
    if w.base_set.size != 3:
        raise UnsupportedShapeError("triple bounds need exactly three events")
    if not w.is_symmetric():
        raise NotSymmetricError("pairwise weights must be symmetric")
    m = w.matrix
    for i in range(3):
        for j in range(3):
            if m[i][j] > ONE:
                raise OutOfRangeError(f"w({i}, {j}) = {m[i][j]} is outside [0, 1]")
    w00, w11, w22 = m[0][0], m[1][1], m[2][2]
    w01, w02, w12 = m[0][1], m[0][2], m[1][2]
    lowers = (
        ZERO,
        w01 + w02 - w00,
        w01 + w12 - w11,
        w02 + w12 - w22,
    )
    uppers = (
        ONE - w00 - w11 - w22 + w01 + w02 + w12,
        w01,
        w02,
        w12,
    )
    return TripleBounds(lowers, uppers)


SYMBOLS = ("1", "w(x0,x0)", "w(x0,x1)", "w(x0,x2)", "w(x1,x1)", "w(x1,x2)", "w(x2,x2)")

_LOWER_COEFFS = (
    {},
    {"w(x0,x0)": -1, "w(x0,x1)": 1, "w(x0,x2)": 1},
    {"w(x1,x1)": -1, "w(x0,x1)": 1, "w(x1,x2)": 1},
    {"w(x2,x2)": -1, "w(x0,x2)": 1, "w(x1,x2)": 1},
)

_UPPER_COEFFS = (
    {
        "1": 1,
        "w(x0,x0)": -1,
        "w(x1,x1)": -1,
        "w(x2,x2)": -1,
        "w(x0,x1)": 1,
        "w(x0,x2)": 1,
        "w(x1,x2)": 1,
    },
    {"w(x0,x1)": 1},
    {"w(x0,x2)": 1},
    {"w(x1,x2)": 1},
)


def _freeze(coeffs: Mapping[str, object]) -> tuple[tuple[str, Fraction], ...]:
    return tuple(
        (symbol, as_rational(coeffs[symbol])) for symbol in SYMBOLS if symbol in coeffs
    )


def _render(coeffs: tuple[tuple[str, Fraction], ...]) -> str:
    if not coeffs:
        return "0"
    parts = []
    for symbol, value in coeffs:
        sign = "+" if value > 0 else "-"
        magnitude = format_rational(abs(value))
        if symbol == "1":
            parts.append(f"{sign}{magnitude}")
        else:
            parts.append(f"{sign}{magnitude}*{symbol}")
    return " ".join(parts)


@dataclass(frozen=True)
class AffineInequality:
    """One inequality ``lower <= upper`` between affine forms in the symbols."""

    lower: tuple[tuple[str, Fraction], ...]
    upper: tuple[tuple[str, Fraction], ...]

    def normal_form(self) -> dict[str, Fraction]:
        """The same inequality as ``sum(coeff * symbol) >= 0``."""
        result: dict[str, Fraction] = {}
        for symbol, value in self.upper:
            result[symbol] = result.get(symbol, ZERO) + value
        for symbol, value in self.lower:
            result[symbol] = result.get(symbol, ZERO) - value
        return {symbol: value for symbol, value in result.items() if value != 0}

    def text(self) -> str:
        return f"{_render(self.lower)} <= {_render(self.upper)}"


@dataclass(frozen=True)
class InequalitySystem:
    """A finite family of affine inequalities over a fixed symbol list."""

    symbols: tuple[str, ...]
    inequalities: tuple[AffineInequality, ...]

    def __len__(self) -> int:
        return len(self.inequalities)

    def text_lines(self) -> list[str]:
        return [ineq.text() for ineq in self.inequalities]

    def to_json_list(self) -> list[dict]:
        return [
            {
                "lower": {s: format_rational(v) for s, v in ineq.lower},
                "upper": {s: format_rational(v) for s, v in ineq.upper},
                "normal_form": {
                    s: format_rational(v) for s, v in sorted(
                        ineq.normal_form().items(), key=lambda kv: SYMBOLS.index(kv[0])
                    )
                },
                "sense": ">= 0",
                "text": ineq.text(),
            }
            for ineq in self.inequalities
        ]


def triple_inequalities() -> InequalitySystem:
    """All sixteen ``lower_i <= upper_j`` pairings of the triple bounds.

    Deduplication never triggers: the sixteen normal forms are pairwise
    distinct, which the test suite pins down.
    """
    inequalities = []
    seen = set()
    for lower in _LOWER_COEFFS:
        for upper in _UPPER_COEFFS:
            ineq = AffineInequality(_freeze(lower), _freeze(upper))
            key = tuple(sorted(ineq.normal_form().items()))
            if key not in seen:
                seen.add(key)
                inequalities.append(ineq)
    return InequalitySystem(SYMBOLS, tuple(inequalities))
