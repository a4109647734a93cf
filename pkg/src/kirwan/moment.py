"""Fixed-point moment data for diagonal circle actions on products.

The only geometric input the whole computation consumes is, for each factor
of the product, the strictly decreasing list of moment-map values at its
fixed points, together with the regular threshold at which the quotient is
taken.  A fixed point of the product is an index tuple J (1-based, one entry
per factor); its moment value is the sum of the chosen factor values.  A
fixed point is *long* when that value exceeds the threshold and *short* when
it falls below; regularity (no value equal to the threshold) is enforced
eagerly at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .poly import RationalLike

IndexTuple = tuple[int, ...]


class NonDecreasingValuesError(ValueError):
    """A factor's value list is not strictly decreasing."""

    def __init__(self, factor_index: int, name: str = ""):
        label = f" ({name})" if name else ""
        super().__init__(
            f"factor {factor_index}{label}: values must be strictly decreasing"
        )
        self.factor_index = factor_index


class SingularValueError(ValueError):
    """Some fixed point's moment value equals the threshold."""

    def __init__(self, index_tuple, value: Fraction):
        super().__init__(
            f"threshold is singular: fixed point {index_tuple} has moment value {value}"
        )
        self.index_tuple = index_tuple
        self.value = value


@dataclass(frozen=True)
class Factor:
    """One product factor: a name and its fixed-point moment values.

    Values must be strictly decreasing (equal values within a factor are
    rejected; deduplicate explicitly if that is what you mean).
    """

    name: str
    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(Fraction(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError(f"factor {self.name!r} has no values")
        if any(a <= b for a, b in zip(values, values[1:])):
            raise NonDecreasingValuesError(0, self.name)

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Classification:
    """Partition of all fixed-point index tuples by side of the threshold."""

    long: frozenset[IndexTuple]
    short: frozenset[IndexTuple]


@dataclass(frozen=True)
class MomentSystem:
    """A validated product system: factors plus a regular threshold."""

    factors: tuple[Factor, ...]
    threshold: Fraction

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        object.__setattr__(self, "threshold", Fraction(self.threshold))
        if not self.factors:
            raise ValueError("a system needs at least one factor")
        for J in self.indices():
            value = self.mu(J)
            if value == self.threshold:
                raise SingularValueError(J, value)

    @property
    def m(self) -> int:
        return len(self.factors)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(f.n for f in self.factors)

    def indices(self) -> Iterator[IndexTuple]:
        """All fixed-point index tuples, lexicographic order."""
        return product(*(range(1, f.n + 1) for f in self.factors))

    def value(self, i: int, j: int) -> Fraction:
        """Moment value of factor i at its j-th fixed point (both 1-based)."""
        return self.factors[i - 1].values[j - 1]

    def restriction(self, J: Sequence[int]) -> tuple[Fraction, ...]:
        """The coordinates (value_1, ..., value_m) cut out by the fixed point J."""
        self._check_index(J)
        return tuple(f.values[j - 1] for f, j in zip(self.factors, J))

    def mu(self, J: Sequence[int]) -> Fraction:
        self._check_index(J)
        return sum((f.values[j - 1] for f, j in zip(self.factors, J)), Fraction(0))

    def _check_index(self, J: Sequence[int]) -> None:
        if len(J) != self.m or any(
            not 1 <= j <= f.n for f, j in zip(self.factors, J)
        ):
            raise IndexError(f"index tuple {tuple(J)} out of range for shape {self.shape}")


def build_system(factors: Iterable[Factor], threshold: RationalLike = 0) -> MomentSystem:
    """Validate and assemble a system; raises SingularValueError if the
    threshold hits a fixed-point moment value."""
    return MomentSystem(tuple(factors), Fraction(threshold))


def mu_value(sys: MomentSystem, J: Sequence[int]) -> Fraction:
    """Moment value of the fixed point J: the sum of the chosen factor values."""
    return sys.mu(J)


def classify(sys: MomentSystem) -> Classification:
    """Split every fixed point into long (above threshold) or short (below)."""
    long_side = []
    short_side = []
    for J in sys.indices():
        if sys.mu(J) > sys.threshold:
            long_side.append(J)
        else:
            short_side.append(J)
    return Classification(frozenset(long_side), frozenset(short_side))


def preset_sphere(radius: RationalLike, name: str | None = None) -> Factor:
    """A two-sphere of the given radius: rotation fixed points carry values (r, -r)."""
    r = Fraction(radius)
    if r <= 0:
        raise ValueError(f"sphere radius must be positive, got {r}")
    return Factor(name or f"sphere({r})", (r, -r))


def preset_projective(weights: Sequence[RationalLike], name: str | None = None) -> Factor:
    """Complex projective space acted on with the given (distinct) weights.

    Fixed-point moment values are the weights themselves, stored in
    decreasing order.
    """
    ws = [Fraction(w) for w in weights]
    if len(set(ws)) != len(ws):
        raise ValueError(f"projective weights must be pairwise distinct: {ws}")
    return Factor(name or f"CP{len(ws) - 1}", tuple(sorted(ws, reverse=True)))
