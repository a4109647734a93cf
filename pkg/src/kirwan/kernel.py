"""Kernel of the Kirwan map for product systems, via minimal coverings.

A covering assigns to each factor i a set A_i of its value indices so that
every target fixed point J has some coordinate J_i in A_i.  Encoded as a
hypergraph — one vertex per pair (i, j), one edge per target J holding the
m vertices {(i, J_i)} — the coverings of the target set are exactly the
transversals (hitting sets) of the edge family, and the minimal coverings
are the minimal transversals.

Each minimal covering contributes one generator: the expanded product of
the pairwise-distinct linear forms x_i - value(i, j)*t over its vertices.
Taken over all minimal coverings of the long (short) side these products
generate the ideal of classes vanishing at every long (short) fixed point;
the two families jointly present the quotient's cohomology ring as
QQ[t, x1, ..., xm] / (kernel ideal).

Minimal transversals are enumerated by sequential edge multiplication: an
antichain of minimal partial transversals is maintained, each new edge
distributes over it, and absorbed (superset) candidates are pruned.  Worst
case is exponential, which is inherent; the sizes here are desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .groebner import Ideal
from .moment import IndexTuple, MomentSystem, classify
from .poly import LinearForm, Poly, product_of_linear_forms

Vertex = tuple[int, int]  # (factor index, value index), both 1-based


class FactorCountNotTwoError(ValueError):
    """The staircase construction applies to two-factor systems only."""

    def __init__(self, m: int):
        super().__init__(f"staircase generators need exactly 2 factors, got {m}")
        self.m = m


@dataclass(frozen=True)
class Covering:
    """Per-factor index sets {A_i}; vertices are the pairs (i, j) with j in A_i."""

    parts: tuple[frozenset[int], ...]

    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(
            (i, j) for i, part in enumerate(self.parts, start=1) for j in sorted(part)
        )

    def size(self) -> int:
        return sum(len(part) for part in self.parts)

    def covers(self, targets: Iterable[IndexTuple]) -> bool:
        return all(
            any(J[i - 1] in part for i, part in enumerate(self.parts, start=1))
            for J in targets
        )

    def is_minimal_covering(self, targets: Iterable[IndexTuple]) -> bool:
        targets = list(targets)
        if not self.covers(targets):
            return False
        for i, part in enumerate(self.parts):
            for j in part:
                smaller = self.parts[:i] + (part - {j},) + self.parts[i + 1 :]
                if Covering(smaller).covers(targets):
                    return False
        return True


@dataclass(frozen=True)
class Hypergraph:
    """Vertices (i, j) and one m-element edge per target index tuple."""

    vertices: tuple[Vertex, ...]
    edges: tuple[frozenset[Vertex], ...]

    @classmethod
    def from_targets(cls, targets: Iterable[IndexTuple], sys: MomentSystem) -> "Hypergraph":
        vertices = tuple(
            (i, j) for i, f in enumerate(sys.factors, start=1) for j in range(1, f.n + 1)
        )
        seen: dict[frozenset[Vertex], None] = {}
        for J in sorted(targets):
            seen.setdefault(frozenset(enumerate(J, start=1)), None)
        return cls(vertices, tuple(seen))


def _minimal_transversals(edges: Sequence[frozenset[Vertex]]) -> list[frozenset[Vertex]]:
    antichain: list[frozenset[Vertex]] = [frozenset()]
    for edge in edges:
        hits = [T for T in antichain if T & edge]
        misses = [T for T in antichain if not T & edge]
        candidates = [T | {v} for T in misses for v in sorted(edge)]
        kept: list[frozenset[Vertex]] = []
        for S in sorted(candidates, key=lambda s: (len(s), sorted(s))):
            if any(H <= S for H in hits):
                continue
            if any(K <= S for K in kept):
                continue
            kept.append(S)
        antichain = hits + kept
    return antichain


def _to_covering(vertex_set: frozenset[Vertex], m: int) -> Covering:
    parts = [set() for _ in range(m)]
    for i, j in vertex_set:
        parts[i - 1].add(j)
    return Covering(tuple(frozenset(part) for part in parts))


def minimal_coverings(targets: Iterable[IndexTuple], sys: MomentSystem) -> list[Covering]:
    """All minimal coverings of the target set, duplicate-free.

    An empty target set yields the single empty covering, whose generator is
    the empty product 1 (the kernel side degenerates to the unit ideal).
    Output is sorted lexicographically by sorted vertex list.
    """
    graph = Hypergraph.from_targets(targets, sys)
    if not graph.edges:
        return [_to_covering(frozenset(), sys.m)]
    transversals = _minimal_transversals(graph.edges)
    coverings = [_to_covering(T, sys.m) for T in transversals]
    coverings.sort(key=lambda cov: cov.vertices())
    return coverings


def covering_generator(cov: Covering, sys: MomentSystem) -> Poly:
    """Expanded product of the covering's linear forms x_i - value(i,j)*t."""
    forms = [LinearForm(i, sys.value(i, j)) for i, j in cov.vertices()]
    assert len(forms) == cov.size()  # vertices never repeat within a covering
    return product_of_linear_forms(forms, sys.m)


def _side_ideal(sys: MomentSystem, targets: frozenset[IndexTuple]) -> Ideal:
    coverings = minimal_coverings(targets, sys)
    return Ideal(sys.m, tuple(covering_generator(cov, sys) for cov in coverings))


def kernel_plus(sys: MomentSystem) -> Ideal:
    """Ideal of classes vanishing at every fixed point above the threshold."""
    return _side_ideal(sys, classify(sys).long)


def kernel_minus(sys: MomentSystem) -> Ideal:
    """Ideal of classes vanishing at every fixed point below the threshold."""
    return _side_ideal(sys, classify(sys).short)


def kernel_full(sys: MomentSystem) -> Ideal:
    """The full kernel ideal: both generator families concatenated."""
    plus = kernel_plus(sys)
    minus = kernel_minus(sys)
    return Ideal(sys.m, plus.generators + minus.generators)


@dataclass(frozen=True)
class QuotientPresentation:
    """The quotient ring QQ[t, x1..xm]/(kernel ideal) with its Betti numbers.

    ``betti[k]`` is the dimension of the degree-k graded piece, i.e. the
    Betti number b_{2k} of the reduced space.  ``total_dimension`` is the
    sum when the quotient provably vanishes within the truncation, else
    None.  ``zero_ring`` flags the degenerate case where the kernel ideal is
    the unit ideal (every fixed point sits on one side of the threshold).
    """

    max_degree: int
    generators: tuple[Poly, ...]
    basis: tuple[Poly, ...]
    betti: tuple[int, ...]
    total_dimension: int | None
    zero_ring: bool
    truncated: bool
    warning: str | None


def default_max_degree(sys: MomentSystem) -> int:
    """Safe truncation bound: sum of (n_i - 1) over the factors."""
    return sum(f.n - 1 for f in sys.factors)


def reduced_cohomology(sys: MomentSystem, max_degree: int | None = None) -> QuotientPresentation:
    """Present the quotient cohomology ring and compute its Betti numbers."""
    if max_degree is None:
        max_degree = default_max_degree(sys)
    full = kernel_full(sys)
    basis = full.groebner_basis()
    betti = tuple(full.hilbert_function(max_degree))
    zero_ring = full.is_unit()
    truncated = bool(betti) and betti[-1] != 0
    warning = None
    if zero_ring:
        warning = (
            "the kernel ideal is the unit ideal: every fixed point lies on one "
            "side of the threshold and the quotient ring is zero"
        )
    return QuotientPresentation(
        max_degree=max_degree,
        generators=full.generators,
        basis=basis,
        betti=betti,
        total_dimension=None if truncated else sum(betti),
        zero_ring=zero_ring,
        truncated=truncated,
        warning=warning,
    )


def _staircase_cuts(
    values1: Sequence[Fraction], values2: Sequence[Fraction], c: Fraction
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Column cuts of the two-variable staircase above threshold c.

    Values are strictly decreasing, so the target region is a staircase:
    column i (a value of the first factor) reaches down to row m_i, the
    number of second-factor values j with values1[i] + values2[j] > c, and
    m_1 >= m_2 >= ... .  Cut k contributes the first k column forms times
    the first m_{k+1} row forms; the final cut is the pure column product.
    """
    n1, n2 = len(values1), len(values2)
    l = sum(1 for i in range(n1) if values1[i] + values2[0] > c)
    depth = [sum(1 for j in range(n2) if values1[i] + values2[j] > c) for i in range(l)]
    cuts = []
    for k in range(l + 1):
        cols = tuple(range(1, k + 1))
        rows = () if k == l else tuple(range(1, depth[k] + 1))
        cuts.append((cols, rows))
    return cuts


def staircase_generators(sys: MomentSystem, side: str = "plus") -> list[Poly]:
    """Two-factor staircase generating family for the chosen kernel side.

    The plus side reads the value table directly; the minus side is the
    mirror image (tables reversed, inequalities flipped).  When no target
    pair exists the family is [1].
    """
    if sys.m != 2:
        raise FactorCountNotTwoError(sys.m)
    v1 = sys.factors[0].values
    v2 = sys.factors[1].values
    c = sys.threshold
    if side == "plus":
        cuts = _staircase_cuts(v1, v2, c)
    elif side == "minus":
        w1 = tuple(-v for v in reversed(v1))
        w2 = tuple(-v for v in reversed(v2))
        mirrored = _staircase_cuts(w1, w2, -c)
        n1, n2 = len(v1), len(v2)
        cuts = [
            (
                tuple(sorted(n1 + 1 - j for j in cols)),
                tuple(sorted(n2 + 1 - j for j in rows)),
            )
            for cols, rows in mirrored
        ]
    else:
        raise ValueError(f"side must be 'plus' or 'minus', got {side!r}")
    family = []
    for cols, rows in cuts:
        forms = [LinearForm(1, v1[j - 1]) for j in cols]
        forms += [LinearForm(2, v2[j - 1]) for j in rows]
        family.append(product_of_linear_forms(forms, 2))
    return family
